// Acceptance gate. Runs eight independent checks spanning the library and
// the command-line tool, printing exactly one pass/fail line per check and
// exiting 0 only when all of them pass.
//
// Usage: acceptance --cli PATH-TO-RIGIDITY-BINARY --golden GOLDEN-DIR

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "rigidity/classifier.hpp"
#include "rigidity/factorization.hpp"
#include "rigidity/ring.hpp"
#include "rigidity/sampling.hpp"
#include "rigidity/substitution.hpp"

using nlohmann::json;
using rigidity::Int;
using rigidity::LinearSubstitution;
using rigidity::Pruning;
using rigidity::RingElement;
using rigidity::RingSpec;
using rigidity::Sampler;

namespace {

// The six exhaustively scanned boxes: spec, bound, expected group order.
struct ScanCase {
  std::vector<int> exponents;
  int bound;
  Int expected_count;
};

const std::vector<ScanCase> kScanCases = {
    {{1, 1}, 3, 8},    {{1, 2}, 2, 4},     {{2, 2}, 2, 8},
    {{1, 1, 1}, 1, 48}, {{1, 1, 2}, 1, 16}, {{1, 2, 3}, 1, 8},
};

Int box_size(int dim, int bound) {
  Int size = 1;
  for (int cell = 0; cell < dim * dim; ++cell) size *= 2 * bound + 1;
  return size;
}

bool fail(std::string& why, const std::string& message) {
  why = message;
  return false;
}

// ---------------------------------------------------------------------------
// Criterion 1: every box scan confirms the biconditional and the closed-form
// count, and the whole batch finishes within a minute.

bool criterion_structure_theorem(std::string& why) {
  const auto started = std::chrono::steady_clock::now();
  for (const auto& scan : kScanCases) {
    const RingSpec spec(scan.exponents);
    const auto report = rigidity::verify_structure_theorem(spec, scan.bound);
    if (!report.biconditional_holds || !report.counterexamples.empty()) {
      return fail(why, "biconditional failed on a scan");
    }
    if (report.candidates_scanned != box_size(spec.dim(), scan.bound)) {
      return fail(why, "scan did not cover the whole candidate box");
    }
    if (report.automorphisms_found != scan.expected_count) {
      return fail(why, "automorphism count " + report.automorphisms_found.str() +
                           " != expected " + scan.expected_count.str());
    }
    if (report.predicted_order != rigidity::automorphism_group_order(spec) ||
        report.automorphisms_found != report.predicted_order) {
      return fail(why, "count disagrees with the closed-form group order");
    }
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
      std::chrono::steady_clock::now() - started);
  if (elapsed.count() >= 60) return fail(why, "scans exceeded one minute");
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 2: 1000 random (spec, coefficient vector) pairs, dimensions up to
// 4, exponents up to 6, entries in [-9, 9]: no tracked power vanishes early.

bool criterion_nonvanishing(std::string& why) {
  Sampler sampler(0xACC2);
  for (int trial = 0; trial < 1000; ++trial) {
    const RingSpec spec = sampler.random_spec(4, 6);
    const auto coeffs = sampler.random_coeffs(spec.dim(), -9, 9);
    if (!rigidity::verify_nonvanishing_powers(coeffs, spec).all_nonzero()) {
      return fail(why, "a power vanished at trial " + std::to_string(trial));
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 3: pruned and unpruned enumeration return identical sequences on
// every two-generator scan case plus the (1,1,1) box.

bool criterion_pruning_equivalence(std::string& why) {
  const std::vector<ScanCase> cases = {
      {{1, 1}, 3, 8}, {{1, 2}, 2, 4}, {{2, 2}, 2, 8}, {{1, 1, 1}, 1, 48}};
  for (const auto& scan : cases) {
    const RingSpec spec(scan.exponents);
    const auto plain =
        rigidity::enumerate_automorphisms(spec, scan.bound, Pruning::Off);
    const auto pruned =
        rigidity::enumerate_automorphisms(spec, scan.bound, Pruning::On);
    if (plain != pruned) return fail(why, "enumeration modes disagree");
    if (Int(static_cast<long>(plain.size())) != scan.expected_count) {
      return fail(why, "unexpected automorphism count");
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 4: across all well-defined endomorphisms found in the criterion-1
// boxes, entries vanish wherever the row exponent is smaller than the column
// exponent; the determinant-unit ones also vanish on every column whose
// exponent is strictly smaller than the row's.

bool criterion_block_pattern(std::string& why) {
  for (const auto& scan : kScanCases) {
    const RingSpec spec(scan.exponents);
    const auto endos =
        rigidity::enumerate_well_defined_endomorphisms(spec, scan.bound);
    if (endos.empty()) return fail(why, "no well-defined endomorphism found");
    const auto profile = rigidity::degree_profile(spec);
    for (const auto& psi : endos) {
      for (int i = 0; i < spec.dim(); ++i) {
        for (int j = 0; j < spec.dim(); ++j) {
          if (spec.exponent(i) < spec.exponent(j) && psi.entry(i, j) != 0) {
            return fail(why, "entry above its block failed to vanish");
          }
        }
      }
      if (abs(rigidity::determinant(psi)) == 1) {
        for (int i = 0; i < spec.dim(); ++i) {
          const auto& lower =
              profile.lower_unions[static_cast<std::size_t>(
                  profile.block_index[static_cast<std::size_t>(i)])];
          for (int j : lower) {
            if (psi.entry(i, j) != 0) {
              return fail(why, "unit-determinant map leaks below its block");
            }
          }
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 5: per scan-case spec, 1000 random triples satisfy the ring
// axioms and 1000 random pairs multiply exactly as the naive convolution
// oracle says.

bool criterion_ring_axioms(std::string& why) {
  Sampler sampler(0xACC5);
  for (const auto& scan : kScanCases) {
    const RingSpec spec(scan.exponents);
    const RingElement zero = RingElement::zero(spec);
    const RingElement one = RingElement::one(spec);
    for (int trial = 0; trial < 1000; ++trial) {
      const RingElement a = sampler.random_element(spec, 6, 9);
      const RingElement b = sampler.random_element(spec, 6, 9);
      const RingElement c = sampler.random_element(spec, 6, 9);
      const bool ok = (a + b) + c == a + (b + c) && a + b == b + a &&
                      (a * b) * c == a * (b * c) && a * b == b * a &&
                      a * (b + c) == a * b + a * c && one * a == a &&
                      zero + a == a && (a - a).is_zero() &&
                      Int(-1) * a == -a;
      if (!ok) return fail(why, "a ring axiom failed");
    }
    for (int trial = 0; trial < 1000; ++trial) {
      const RingElement a = sampler.random_element(spec, 6, 9);
      const RingElement b = sampler.random_element(spec, 6, 9);
      if (a * b != oracles::naive_convolve(a, b)) {
        return fail(why, "product disagrees with the convolution oracle");
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 6: for every spec with at most 3 generators and exponents at most
// 4, 100 random full-support degree-one elements reach nilpotency order
// exactly 1 + sum of exponents.

bool criterion_nilpotency(std::string& why) {
  Sampler sampler(0xACC6);
  std::vector<RingSpec> specs;
  for (int n1 = 1; n1 <= 4; ++n1) {
    specs.push_back(RingSpec({n1}));
    for (int n2 = 1; n2 <= 4; ++n2) {
      specs.push_back(RingSpec({n1, n2}));
      for (int n3 = 1; n3 <= 4; ++n3) {
        specs.push_back(RingSpec({n1, n2, n3}));
      }
    }
  }
  for (const auto& spec : specs) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto coeffs = sampler.random_full_support_coeffs(spec.dim(), 9);
      const RingElement y = rigidity::degree_one_element(coeffs, spec);
      if (rigidity::nilpotency_order(y) != 1 + spec.top_degree()) {
        return fail(why, "nilpotency order missed the closed form");
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 7: 500 random (phi, h_star) pairs drawn from the enumerated
// automorphism groups factor with a verified certificate, and the realized
// normal form of g induces g back exactly.

bool criterion_factorization(std::string& why) {
  Sampler sampler(0xACC7);
  std::vector<std::vector<LinearSubstitution>> groups;
  for (const auto& scan : kScanCases) {
    const RingSpec spec(scan.exponents);
    auto group = rigidity::enumerate_automorphisms(spec, 1, Pruning::On);
    if (Int(static_cast<long>(group.size())) !=
        rigidity::automorphism_group_order(spec)) {
      return fail(why, "a bound-1 box missed part of the group");
    }
    groups.push_back(std::move(group));
  }
  for (int trial = 0; trial < 500; ++trial) {
    const auto& group =
        groups[static_cast<std::size_t>(trial) % groups.size()];
    const int last = static_cast<int>(group.size()) - 1;
    const LinearSubstitution& phi =
        group[static_cast<std::size_t>(sampler.uniform_int(0, last))];
    const LinearSubstitution& h_star =
        group[static_cast<std::size_t>(sampler.uniform_int(0, last))];
    const auto result = rigidity::factor_isomorphism(phi, h_star);
    if (!result.certified) return fail(why, "certificate not verified");
    if (result.f_star != phi) return fail(why, "f_star differs from phi");
    if (result.g != rigidity::compose(phi, h_star)) {
      return fail(why, "g is not the composite");
    }
    const auto normal = rigidity::as_signed_permutation(result.g);
    if (!normal.present()) return fail(why, "g has no normal form");
    const auto realization = rigidity::realize(*normal.value);
    if (realization.induced != result.g) {
      return fail(why, "realized recipe does not induce g");
    }
    if (realization.recipe != result.recipe) {
      return fail(why, "factorization recipe differs from realize");
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 8: replay the recorded CLI transcripts byte for byte, including
// the exit codes.

std::string shell_quote(const std::string& text) {
  std::string quoted = "'";
  for (char c : text) {
    if (c == '\'') {
      quoted += "'\\''";
    } else {
      quoted += c;
    }
  }
  quoted += "'";
  return quoted;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string substitute(std::string text, const std::string& token,
                       const std::string& value) {
  for (std::size_t at = text.find(token); at != std::string::npos;
       at = text.find(token, at + value.size())) {
    text.replace(at, token.size(), value);
  }
  return text;
}

bool run_cli_case(const std::string& cli, const std::string& golden_dir,
                  const json& spec, std::string& why) {
  const std::string name = spec.at("name").get<std::string>();
  const std::string out_path = "acceptance_" + name + ".tmp";
  std::string command = shell_quote(cli);
  for (const auto& arg : spec.at("args")) {
    std::string value = arg.get<std::string>();
    value = substitute(value, "{golden}", golden_dir);
    value = substitute(value, "{out}", out_path);
    command += " " + shell_quote(value);
  }
  if (spec.contains("stdin")) {
    command += " < " + shell_quote(golden_dir + "/" +
                                   spec.at("stdin").get<std::string>());
  }
  command += " 2>/dev/null";

  std::remove(out_path.c_str());
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return fail(why, name + ": cannot launch");
  std::string captured;
  char chunk[4096];
  std::size_t got = 0;
  while ((got = fread(chunk, 1, sizeof chunk, pipe)) > 0) {
    captured.append(chunk, got);
  }
  const int status = pclose(pipe);
  if (!WIFEXITED(status)) return fail(why, name + ": abnormal exit");
  const int code = WEXITSTATUS(status);

  const int expected_code = spec.at("exit").get<int>();
  if (code != expected_code) {
    return fail(why, name + ": exit " + std::to_string(code) + " != " +
                         std::to_string(expected_code));
  }
  std::string expected_stdout;
  if (spec.contains("stdout")) {
    const auto golden = read_file(golden_dir + "/" +
                                  spec.at("stdout").get<std::string>());
    if (!golden) return fail(why, name + ": missing stdout golden");
    expected_stdout = *golden;
  }
  if (captured != expected_stdout) {
    return fail(why, name + ": stdout differs from the golden transcript");
  }
  if (spec.contains("out")) {
    const auto written = read_file(out_path);
    if (!written) return fail(why, name + ": --out file was not written");
    const auto golden =
        read_file(golden_dir + "/" + spec.at("out").get<std::string>());
    if (!golden) return fail(why, name + ": missing out golden");
    std::remove(out_path.c_str());
    if (*written != *golden) {
      return fail(why, name + ": --out file differs from the golden copy");
    }
  }
  return true;
}

bool criterion_golden_transcripts(const std::string& cli,
                                  const std::string& golden_dir,
                                  std::string& why) {
  if (cli.empty() || golden_dir.empty()) {
    return fail(why, "--cli and --golden are required");
  }
  const auto manifest_text = read_file(golden_dir + "/cases.json");
  if (!manifest_text) return fail(why, "cannot read cases.json");
  const json manifest = json::parse(*manifest_text, nullptr, false);
  if (manifest.is_discarded() || !manifest.is_array() || manifest.empty()) {
    return fail(why, "cases.json is not a nonempty array");
  }
  for (const auto& entry : manifest) {
    if (!run_cli_case(cli, golden_dir, entry, why)) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  std::string golden_dir;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--cli") {
      cli = argv[i + 1];
    } else if (flag == "--golden") {
      golden_dir = argv[i + 1];
    } else {
      std::cerr << "unknown flag: " << flag << "\n";
      return 2;
    }
  }

  struct Criterion {
    std::string label;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"structure theorem holds exhaustively on six bounded boxes",
       criterion_structure_theorem},
      {"random degree-one powers never vanish early", criterion_nonvanishing},
      {"pruned and unpruned enumerations agree", criterion_pruning_equivalence},
      {"well-defined endomorphisms respect the block pattern",
       criterion_block_pattern},
      {"ring axioms and the convolution oracle agree", criterion_ring_axioms},
      {"nilpotency order matches the closed form", criterion_nilpotency},
      {"factorizations certify and round-trip", criterion_factorization},
      {"CLI golden transcripts replay byte for byte",
       [&](std::string& why) {
         return criterion_golden_transcripts(cli, golden_dir, why);
       }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string why;
    bool passed = false;
    try {
      passed = criteria[i].run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << (i + 1) << ": " << criteria[i].label
              << " ... " << (passed ? "PASS" : "FAIL (" + why + ")") << "\n";
    if (!passed) ++failures;
  }
  std::cout << "acceptance: " << (criteria.size() - failures) << "/"
            << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
