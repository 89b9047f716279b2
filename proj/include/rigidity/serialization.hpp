// JSON encoding of every public value type. Arbitrary-precision integers
// travel as decimal strings, permutations in 1-based one-line notation.
// Encoders are total; decoders throw ParseError on malformed documents.

#pragma once

#include <json.hpp>

#include "rigidity/classifier.hpp"
#include "rigidity/factorization.hpp"
#include "rigidity/ring.hpp"
#include "rigidity/substitution.hpp"

namespace rigidity {

nlohmann::json spec_to_json(const RingSpec& spec);
RingSpec spec_from_json(const nlohmann::json& j);

// An element is an array of {"exponents": [...], "coeff": "<decimal>"}
// terms in the canonical order. Decoding reduces against the spec.
nlohmann::json element_to_json(const RingElement& a);
RingElement element_from_json(const nlohmann::json& j, const RingSpec& spec);

// {"spec": ..., "entries": [row-major decimal strings]}
nlohmann::json substitution_to_json(const LinearSubstitution& psi);
LinearSubstitution substitution_from_json(const nlohmann::json& j);

// {"spec": ..., "permutation": [1-based images], "signs": [+/-1]}
nlohmann::json signed_permutation_to_json(const SignedPermutation& p);
SignedPermutation signed_permutation_from_json(const nlohmann::json& j);

// {"permutation": [1-based images], "conjugate": [booleans]}
nlohmann::json recipe_to_json(const DiffeoRecipe& recipe);
DiffeoRecipe recipe_from_json(const nlohmann::json& j);

nlohmann::json nonvanishing_to_json(const NonvanishingReport& report);
nlohmann::json endomorphism_check_to_json(const EndomorphismCheck& check);
nlohmann::json witness_to_json(const BlockTriangularWitness& witness);
nlohmann::json report_to_json(const StructureTheoremReport& report);
nlohmann::json factorization_to_json(const Factorization& factorization);

}  // namespace rigidity
