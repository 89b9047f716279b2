// Command-line front end. One subcommand per library operation, structured
// JSON on stdout (human-readable element text for ring-eval and apply),
// and a fixed exit-code contract: 0 success or affirmative verdict,
// 1 negative verdict, 2 malformed input, 3 refused search space.

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rigidity/classifier.hpp"
#include "rigidity/errors.hpp"
#include "rigidity/expression.hpp"
#include "rigidity/factorization.hpp"
#include "rigidity/ring.hpp"
#include "rigidity/sampling.hpp"
#include "rigidity/serialization.hpp"
#include "rigidity/substitution.hpp"

namespace {

using rigidity::Int;
using rigidity::LinearSubstitution;
using rigidity::RingElement;
using rigidity::RingSpec;
using rigidity::SignedPermutation;

bool is_integer_token(const std::string& token) {
  const std::size_t digits_from = !token.empty() && token[0] == '-' ? 1 : 0;
  if (token.size() == digits_from) return false;
  for (std::size_t i = digits_from; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9') return false;
  }
  return true;
}

std::vector<std::string> split(const std::string& text, char delimiter) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream stream(text);
  while (std::getline(stream, part, delimiter)) parts.push_back(part);
  return parts;
}

RingSpec parse_spec(const std::string& csv) {
  std::vector<int> exponents;
  for (const std::string& token : split(csv, ',')) {
    if (!is_integer_token(token) || token[0] == '-') {
      throw rigidity::ParseError("spec entry '" + token +
                                 "' is not a positive integer");
    }
    exponents.push_back(std::stoi(token));
  }
  return RingSpec(std::move(exponents));
}

std::vector<Int> parse_coeffs(const std::string& csv, int expected) {
  std::vector<Int> coeffs;
  for (const std::string& token : split(csv, ',')) {
    if (!is_integer_token(token)) {
      throw rigidity::ParseError("coefficient '" + token +
                                 "' is not a decimal integer");
    }
    coeffs.emplace_back(token);
  }
  if (static_cast<int>(coeffs.size()) != expected) {
    throw rigidity::DimensionMismatchError(
        "expected " + std::to_string(expected) + " coefficients, got " +
        std::to_string(coeffs.size()));
  }
  return coeffs;
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw rigidity::InputError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

// One row per line, whitespace-separated decimal integers.
LinearSubstitution parse_matrix(const std::string& path, const RingSpec& spec) {
  std::vector<std::vector<Int>> rows;
  std::istringstream lines(read_source(path));
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    std::vector<Int> row;
    std::string token;
    while (tokens >> token) {
      if (!is_integer_token(token)) {
        throw rigidity::ParseError("matrix entry '" + token +
                                   "' is not a decimal integer");
      }
      row.emplace_back(token);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return LinearSubstitution(std::move(rows), spec);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw rigidity::InputError("cannot open file: " + out_path);
  file << text;
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json flat_entries(const LinearSubstitution& psi) {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < psi.dim(); ++i) {
    for (int j = 0; j < psi.dim(); ++j) {
      entries.push_back(psi.entry(i, j).str());
    }
  }
  return entries;
}

// ---- selfcheck ----

SignedPermutation random_signed_permutation(rigidity::Sampler& sampler,
                                            const RingSpec& spec) {
  std::vector<int> sigma(static_cast<std::size_t>(spec.dim()));
  std::iota(sigma.begin(), sigma.end(), 0);
  for (const auto& block : rigidity::degree_profile(spec).blocks) {
    std::vector<int> images = block;
    for (int i = static_cast<int>(images.size()) - 1; i > 0; --i) {
      std::swap(images[static_cast<std::size_t>(i)],
                images[static_cast<std::size_t>(sampler.uniform_int(0, i))]);
    }
    for (std::size_t k = 0; k < block.size(); ++k) {
      sigma[static_cast<std::size_t>(block[k])] = images[k];
    }
  }
  std::vector<int> signs(static_cast<std::size_t>(spec.dim()));
  for (int& s : signs) s = sampler.uniform_int(0, 1) == 0 ? 1 : -1;
  return SignedPermutation(std::move(sigma), std::move(signs), spec);
}

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
};

SuiteResult run_ring_axioms(rigidity::Sampler& sampler, int trials) {
  SuiteResult result{"ring-axioms", 0, 0};
  for (int t = 0; t < trials; ++t) {
    const RingSpec spec = sampler.random_spec(4, 5);
    const RingElement a = sampler.random_element(spec, 4, 9);
    const RingElement b = sampler.random_element(spec, 4, 9);
    const RingElement c = sampler.random_element(spec, 4, 9);
    const RingElement zero = RingElement::zero(spec);
    const RingElement one = RingElement::one(spec);
    const bool ok = (a + b) + c == a + (b + c) && a + b == b + a &&
                    (a * b) * c == a * (b * c) && a * b == b * a &&
                    a * (b + c) == a * b + a * c && one * a == a &&
                    zero * a == zero && a + (-a) == zero;
    ok ? ++result.passed : ++result.failed;
  }
  return result;
}

SuiteResult run_nonvanishing(rigidity::Sampler& sampler, int trials) {
  SuiteResult result{"nonvanishing-powers", 0, 0};
  for (int t = 0; t < trials; ++t) {
    const RingSpec spec = sampler.random_spec(4, 6);
    const auto coeffs = sampler.random_coeffs(spec.dim(), -9, 9);
    const auto report = rigidity::verify_nonvanishing_powers(coeffs, spec);
    report.all_nonzero() ? ++result.passed : ++result.failed;
  }
  return result;
}

SuiteResult run_nilpotency(rigidity::Sampler& sampler, int trials) {
  SuiteResult result{"nilpotency-closed-form", 0, 0};
  for (int t = 0; t < trials; ++t) {
    const RingSpec spec = sampler.random_spec(3, 4);
    const auto coeffs = sampler.random_full_support_coeffs(spec.dim(), 9);
    const int expected = 1 + spec.top_degree();
    const RingElement y = rigidity::degree_one_element(coeffs, spec);
    rigidity::nilpotency_order(y) == expected ? ++result.passed
                                              : ++result.failed;
  }
  return result;
}

SuiteResult run_factorization(rigidity::Sampler& sampler, int trials) {
  SuiteResult result{"factorization-round-trip", 0, 0};
  for (int t = 0; t < trials; ++t) {
    const RingSpec spec = sampler.random_spec(4, 3);
    const SignedPermutation p_phi = random_signed_permutation(sampler, spec);
    const SignedPermutation p_h = random_signed_permutation(sampler, spec);
    const LinearSubstitution phi = to_substitution(p_phi);
    const LinearSubstitution h_star = to_substitution(p_h);
    bool ok = false;
    try {
      const auto factorization = rigidity::factor_isomorphism(phi, h_star);
      ok = factorization.certified && factorization.f_star == phi &&
           rigidity::realize(p_phi).induced == phi;
    } catch (const rigidity::Error&) {
      ok = false;
    }
    ok ? ++result.passed : ++result.failed;
  }
  return result;
}

int run_selfcheck(std::uint64_t seed, int trials, const std::string& out_path) {
  rigidity::Sampler sampler(seed);
  const std::vector<SuiteResult> suites = {
      run_ring_axioms(sampler, trials),
      run_nonvanishing(sampler, trials),
      run_nilpotency(sampler, trials),
      run_factorization(sampler, trials),
  };
  bool all_passed = true;
  nlohmann::json suites_json = nlohmann::json::array();
  for (const auto& suite : suites) {
    if (suite.failed > 0) all_passed = false;
    suites_json.push_back({{"name", suite.name},
                           {"passed", suite.passed},
                           {"failed", suite.failed}});
  }
  emit(json_text({{"seed", seed},
                  {"trials", trials},
                  {"suites", std::move(suites_json)},
                  {"all_passed", all_passed}}),
       out_path);
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic and automorphism tools for truncated "
               "polynomial rings Z[x1..xm]/(x_i^{n_i+1})"};
  app.require_subcommand(1);

  std::string spec_csv;
  std::string coeffs_csv;
  std::string expr;
  std::string matrix_path;
  std::string h_matrix_path;
  std::string out_path;
  std::string pruning = "off";
  int bound = 1;
  bool as_json = false;
  std::uint64_t seed = 12345;
  int trials = 200;

  const auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("--spec", spec_csv,
                    "Truncation exponents n1,n2,... (comma-separated)")
        ->required();
  };
  const auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "Write output to this file");
  };

  CLI::App* ring_eval = app.add_subcommand(
      "ring-eval", "Evaluate an expression in the ring");
  add_spec(ring_eval);
  ring_eval->add_option("--expr", expr, "Expression over x1..xm")->required();
  ring_eval->add_flag("--json", as_json, "Structured output");
  add_out(ring_eval);

  CLI::App* apply_cmd = app.add_subcommand(
      "apply", "Apply a linear substitution to an expression");
  add_spec(apply_cmd);
  apply_cmd->add_option("--matrix", matrix_path, "Matrix file or -")
      ->required();
  apply_cmd->add_option("--expr", expr, "Expression over x1..xm")->required();
  apply_cmd->add_flag("--json", as_json, "Structured output");
  add_out(apply_cmd);

  CLI::App* check_endo = app.add_subcommand(
      "check-endo", "Decide whether a matrix defines a ring endomorphism");
  add_spec(check_endo);
  check_endo->add_option("--matrix", matrix_path, "Matrix file or -")
      ->required();
  add_out(check_endo);

  CLI::App* witness = app.add_subcommand(
      "witness", "Block-triangular form of a well-defined endomorphism");
  add_spec(witness);
  witness->add_option("--matrix", matrix_path, "Matrix file or -")->required();
  add_out(witness);

  CLI::App* nonvanishing = app.add_subcommand(
      "nonvanishing", "Check y^{n_i} != 0 for y with support at i");
  add_spec(nonvanishing);
  nonvanishing
      ->add_option("--coeffs", coeffs_csv,
                   "Coefficients a1,a2,... of y = sum a_i x_i")
      ->required();
  add_out(nonvanishing);

  CLI::App* nilpotency = app.add_subcommand(
      "nilpotency", "Least k with y^k = 0 for a degree-one element");
  add_spec(nilpotency);
  nilpotency
      ->add_option("--coeffs", coeffs_csv,
                   "Coefficients a1,a2,... of y = sum a_i x_i")
      ->required();
  add_out(nilpotency);

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "List all graded automorphisms with entries in [-B,B]");
  add_spec(enumerate);
  enumerate->add_option("--bound", bound, "Entry bound B (default 1)");
  enumerate
      ->add_option("--pruning", pruning,
                   "Structural pruning during the search")
      ->check(CLI::IsMember({"on", "off"}));
  add_out(enumerate);

  CLI::App* classify = app.add_subcommand(
      "classify",
      "Exhaustively verify: graded automorphism iff signed permutation");
  add_spec(classify);
  classify->add_option("--bound", bound, "Entry bound B (default 1)");
  classify
      ->add_option("--pruning", pruning,
                   "Enumeration mode cross-checked against the scan")
      ->check(CLI::IsMember({"on", "off"}));
  add_out(classify);

  CLI::App* factor = app.add_subcommand(
      "factor", "Factor phi . h_star through the inverse of h_star");
  add_spec(factor);
  factor->add_option("--matrix", matrix_path, "Matrix of phi (file or -)")
      ->required();
  factor->add_option("--h-matrix", h_matrix_path,
                     "Matrix of h_star (file or -; default identity)");
  add_out(factor);

  CLI::App* selfcheck = app.add_subcommand(
      "selfcheck", "Randomized property suites with a reproducible seed");
  selfcheck->add_option("--seed", seed, "Random seed (default 12345)");
  selfcheck->add_option("--trials", trials, "Trials per suite (default 200)");
  add_out(selfcheck);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (ring_eval->parsed() || apply_cmd->parsed()) {
      const RingSpec spec = parse_spec(spec_csv);
      RingElement value = rigidity::parse_expression(expr, spec);
      if (apply_cmd->parsed()) {
        value = rigidity::apply(parse_matrix(matrix_path, spec), value);
      }
      emit(as_json ? json_text(rigidity::element_to_json(value))
                   : rigidity::to_string(value) + "\n",
           out_path);
      return 0;
    }

    if (check_endo->parsed()) {
      const RingSpec spec = parse_spec(spec_csv);
      const auto check = rigidity::is_well_defined_endomorphism(
          parse_matrix(matrix_path, spec));
      emit(json_text(rigidity::endomorphism_check_to_json(check)), out_path);
      return check.well_defined ? 0 : 1;
    }

    if (witness->parsed()) {
      const RingSpec spec = parse_spec(spec_csv);
      const auto result = rigidity::block_triangular_witness(
          parse_matrix(matrix_path, spec));
      emit(json_text(rigidity::witness_to_json(result)), out_path);
      return result.verdict ? 0 : 1;
    }

    if (nonvanishing->parsed()) {
      const RingSpec spec = parse_spec(spec_csv);
      const auto report = rigidity::verify_nonvanishing_powers(
          parse_coeffs(coeffs_csv, spec.dim()), spec);
      emit(json_text(rigidity::nonvanishing_to_json(report)), out_path);
      return report.all_nonzero() ? 0 : 1;
    }

    if (nilpotency->parsed()) {
      const RingSpec spec = parse_spec(spec_csv);
      const RingElement y = rigidity::degree_one_element(
          parse_coeffs(coeffs_csv, spec.dim()), spec);
      emit(json_text({{"element", rigidity::to_string(y)},
                      {"order", rigidity::nilpotency_order(y)}}),
           out_path);
      return 0;
    }

    if (enumerate->parsed()) {
      const RingSpec spec = parse_spec(spec_csv);
      const auto mode = pruning == "on" ? rigidity::Pruning::On
                                        : rigidity::Pruning::Off;
      const auto automorphisms =
          rigidity::enumerate_automorphisms(spec, bound, mode);
      nlohmann::json matrices = nlohmann::json::array();
      for (const auto& psi : automorphisms) {
        matrices.push_back(flat_entries(psi));
      }
      emit(json_text({{"spec", rigidity::spec_to_json(spec)},
                      {"bound", bound},
                      {"pruning", pruning},
                      {"count", std::to_string(automorphisms.size())},
                      {"matrices", std::move(matrices)}}),
           out_path);
      return 0;
    }

    if (classify->parsed()) {
      const RingSpec spec = parse_spec(spec_csv);
      const auto mode = pruning == "on" ? rigidity::Pruning::On
                                        : rigidity::Pruning::Off;
      const auto report =
          rigidity::verify_structure_theorem(spec, bound, mode);
      emit(json_text(rigidity::report_to_json(report)), out_path);
      return report.biconditional_holds ? 0 : 1;
    }

    if (factor->parsed()) {
      const RingSpec spec = parse_spec(spec_csv);
      const LinearSubstitution phi = parse_matrix(matrix_path, spec);
      const LinearSubstitution h_star =
          h_matrix_path.empty() ? LinearSubstitution::identity(spec)
                                : parse_matrix(h_matrix_path, spec);
      const auto factorization = rigidity::factor_isomorphism(phi, h_star);
      emit(json_text(rigidity::factorization_to_json(factorization)),
           out_path);
      return 0;
    }

    if (selfcheck->parsed()) {
      return run_selfcheck(seed, trials, out_path);
    }
  } catch (const rigidity::SearchSpaceError& e) {
    std::cout << json_text({{"error", e.what()}});
    return 3;
  } catch (const rigidity::NotAutomorphismError& e) {
    std::cout << json_text({{"error", e.what()}});
    return 1;
  } catch (const rigidity::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const rigidity::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
