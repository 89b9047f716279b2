#include "rigidity/serialization.hpp"

#include <cstddef>
#include <string>
#include <vector>

#include "rigidity/errors.hpp"

namespace rigidity {

namespace {

void require(bool condition, const std::string& what) {
  if (!condition) throw ParseError(what);
}

Int int_from_string(const nlohmann::json& j, const std::string& where) {
  require(j.is_string(), where + " must be a decimal string");
  const std::string text = j.get<std::string>();
  require(!text.empty(), where + " must be nonempty");
  const std::size_t digits_from = text[0] == '-' ? 1 : 0;
  require(text.size() > digits_from, where + " must contain digits");
  for (std::size_t i = digits_from; i < text.size(); ++i) {
    require(text[i] >= '0' && text[i] <= '9',
            where + " must be a decimal string");
  }
  return Int(text);
}

std::vector<int> int_vector(const nlohmann::json& j, const std::string& where) {
  require(j.is_array(), where + " must be an array");
  std::vector<int> values;
  values.reserve(j.size());
  for (const auto& entry : j) {
    require(entry.is_number_integer(), where + " entries must be integers");
    values.push_back(entry.get<int>());
  }
  return values;
}

nlohmann::json rows_to_json(const std::vector<std::vector<Int>>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json encoded_row = nlohmann::json::array();
    for (const auto& entry : row) encoded_row.push_back(entry.str());
    out.push_back(std::move(encoded_row));
  }
  return out;
}

}  // namespace

nlohmann::json spec_to_json(const RingSpec& spec) {
  return {{"exponents", spec.exponents()}};
}

RingSpec spec_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("exponents"),
          "spec must be an object with an \"exponents\" array");
  try {
    return RingSpec(int_vector(j.at("exponents"), "spec exponents"));
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json element_to_json(const RingElement& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mono, coeff] : a.terms()) {
    terms.push_back(
        {{"exponents", mono.exponents()}, {"coeff", coeff.str()}});
  }
  return terms;
}

RingElement element_from_json(const nlohmann::json& j, const RingSpec& spec) {
  require(j.is_array(), "element must be an array of terms");
  TermMap raw;
  for (const auto& term : j) {
    require(term.is_object() && term.contains("exponents") &&
                term.contains("coeff"),
            "element term must carry \"exponents\" and \"coeff\"");
    std::vector<int> exponents =
        int_vector(term.at("exponents"), "term exponents");
    for (int e : exponents) {
      require(e >= 0, "term exponents must be nonnegative");
    }
    raw[Monomial(std::move(exponents))] +=
        int_from_string(term.at("coeff"), "term coeff");
  }
  try {
    return RingElement::reduce(raw, spec);
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json substitution_to_json(const LinearSubstitution& psi) {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < psi.dim(); ++i) {
    for (int j = 0; j < psi.dim(); ++j) {
      entries.push_back(psi.entry(i, j).str());
    }
  }
  return {{"spec", spec_to_json(psi.spec())}, {"entries", std::move(entries)}};
}

LinearSubstitution substitution_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("spec") && j.contains("entries"),
          "substitution must carry \"spec\" and \"entries\"");
  const RingSpec spec = spec_from_json(j.at("spec"));
  const auto& entries = j.at("entries");
  require(entries.is_array(), "entries must be an array");
  const int m = spec.dim();
  require(static_cast<int>(entries.size()) == m * m,
          "entries must hold exactly dim*dim values");
  std::vector<std::vector<Int>> rows(
      static_cast<std::size_t>(m),
      std::vector<Int>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          int_from_string(entries.at(static_cast<std::size_t>(i * m + k)),
                          "matrix entry");
    }
  }
  return LinearSubstitution(std::move(rows), spec);
}

nlohmann::json signed_permutation_to_json(const SignedPermutation& p) {
  nlohmann::json permutation = nlohmann::json::array();
  for (int image : p.sigma()) permutation.push_back(image + 1);
  return {{"spec", spec_to_json(p.spec())},
          {"permutation", std::move(permutation)},
          {"signs", p.signs()}};
}

SignedPermutation signed_permutation_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("spec") && j.contains("permutation") &&
              j.contains("signs"),
          "signed permutation must carry \"spec\", \"permutation\", \"signs\"");
  const RingSpec spec = spec_from_json(j.at("spec"));
  std::vector<int> sigma = int_vector(j.at("permutation"), "permutation");
  for (int& image : sigma) --image;
  try {
    return SignedPermutation(std::move(sigma),
                             int_vector(j.at("signs"), "signs"), spec);
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json recipe_to_json(const DiffeoRecipe& recipe) {
  nlohmann::json permutation = nlohmann::json::array();
  for (int image : recipe.factor_permutation) permutation.push_back(image + 1);
  nlohmann::json conjugate = nlohmann::json::array();
  for (bool flag : recipe.conjugation_flags) conjugate.push_back(flag);
  return {{"permutation", std::move(permutation)},
          {"conjugate", std::move(conjugate)}};
}

DiffeoRecipe recipe_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("permutation") && j.contains("conjugate"),
          "recipe must carry \"permutation\" and \"conjugate\"");
  DiffeoRecipe recipe;
  recipe.factor_permutation = int_vector(j.at("permutation"), "permutation");
  for (int& image : recipe.factor_permutation) {
    require(image >= 1, "permutation images are 1-based");
    --image;
  }
  const auto& conjugate = j.at("conjugate");
  require(conjugate.is_array(), "conjugate must be an array");
  for (const auto& flag : conjugate) {
    require(flag.is_boolean(), "conjugate entries must be booleans");
    recipe.conjugation_flags.push_back(flag.get<bool>());
  }
  return recipe;
}

nlohmann::json nonvanishing_to_json(const NonvanishingReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& entry : report.entries) {
    entries.push_back({{"index", entry.index + 1},
                       {"exponent", entry.exponent},
                       {"nonzero", entry.nonzero}});
  }
  return {{"entries", std::move(entries)},
          {"all_nonzero", report.all_nonzero()}};
}

nlohmann::json endomorphism_check_to_json(const EndomorphismCheck& check) {
  nlohmann::json out = {{"well_defined", check.well_defined}};
  if (!check.well_defined) {
    out["generator"] = *check.generator + 1;
    out["power"] = *check.power;
    out["residue"] = element_to_json(*check.residue);
    out["witness"] = "psi(x" + std::to_string(*check.generator + 1) + ")^" +
                     std::to_string(*check.power) + " = " +
                     to_string(*check.residue);
  }
  return out;
}

nlohmann::json witness_to_json(const BlockTriangularWitness& witness) {
  nlohmann::json permutation = nlohmann::json::array();
  for (int index : witness.permutation) permutation.push_back(index + 1);
  return {{"permutation", std::move(permutation)},
          {"conjugated", rows_to_json(witness.conjugated)},
          {"verdict", witness.verdict}};
}

nlohmann::json report_to_json(const StructureTheoremReport& report) {
  nlohmann::json counterexamples = nlohmann::json::array();
  for (const auto& psi : report.counterexamples) {
    counterexamples.push_back(substitution_to_json(psi));
  }
  return {{"spec", spec_to_json(report.spec)},
          {"bound", report.bound},
          {"candidates_scanned", report.candidates_scanned.str()},
          {"automorphisms_found", report.automorphisms_found.str()},
          {"predicted_order", report.predicted_order.str()},
          {"biconditional_holds", report.biconditional_holds},
          {"counterexamples", std::move(counterexamples)}};
}

nlohmann::json factorization_to_json(const Factorization& factorization) {
  return {{"g", substitution_to_json(factorization.g)},
          {"g_normal", signed_permutation_to_json(factorization.g_normal)},
          {"recipe", recipe_to_json(factorization.recipe)},
          {"f_star", substitution_to_json(factorization.f_star)},
          {"certified", factorization.certified}};
}

}  // namespace rigidity
