#pragma once

// Classification of the graded automorphisms of a truncated polynomial ring.
// Every generator substitution that both respects the defining relations and
// has determinant +-1 is a signed permutation of generators matching equal
// truncation exponents. This module computes degree profiles, extracts
// signed-permutation normal forms, enumerates automorphisms over bounded
// integer boxes with and without pruning, produces block-triangular
// conjugation witnesses, and cross-checks the classification exhaustively
// rather than assuming it.

#include <optional>
#include <string>
#include <vector>

#include "rigidity/ring.hpp"
#include "rigidity/substitution.hpp"

namespace rigidity {

// The multiset structure of the truncation exponents: distinct values
// N_1 > ... > N_k with the index block of each value, plus for each value the
// union of all blocks of strictly smaller values.
struct DegreeProfile {
  std::vector<int> distinct_exponents;         // strictly decreasing
  std::vector<std::vector<int>> blocks;        // 0-based indices, ascending
  std::vector<std::vector<int>> lower_unions;  // indices with smaller exponent
  std::vector<int> block_index;                // block_index[i]: block of i

  int block_count() const { return static_cast<int>(blocks.size()); }
};

DegreeProfile degree_profile(const RingSpec& spec);

// A permutation of generators together with a sign for each: the map
// x_i -> sign_i * x_{sigma(i)}. Only permutations matching equal truncation
// exponents are representable.
class SignedPermutation {
 public:
  SignedPermutation(std::vector<int> sigma, std::vector<int> signs,
                    RingSpec spec);

  static SignedPermutation identity(const RingSpec& spec);

  const std::vector<int>& sigma() const { return sigma_; }  // 0-based images
  const std::vector<int>& signs() const { return signs_; }  // each +1 or -1
  const RingSpec& spec() const { return spec_; }
  int dim() const { return spec_.dim(); }

  friend bool operator==(const SignedPermutation&,
                         const SignedPermutation&) = default;

 private:
  std::vector<int> sigma_;
  std::vector<int> signs_;
  RingSpec spec_;
};

SignedPermutation inverse(const SignedPermutation& p);

// The matrix form: sign_i at position (i, sigma(i)).
LinearSubstitution to_substitution(const SignedPermutation& p);

enum class NormalFormFailure {
  NotMonomialMatrix,  // some row or column lacks exactly one nonzero entry
  EntryNotUnit,       // a lone nonzero entry other than +-1
  ProfileViolation,   // the permutation maps across unequal exponents
};

std::string to_string(NormalFormFailure failure);

// Signed-permutation normal form of a substitution, when it has one.
struct NormalForm {
  std::optional<SignedPermutation> value;
  std::optional<NormalFormFailure> failure;  // set exactly when value is not

  bool present() const { return value.has_value(); }
};

NormalForm as_signed_permutation(const LinearSubstitution& psi);

enum class Pruning { Off, On };

inline const Int kDefaultSearchCeiling = 100000000;  // candidate matrices

// All matrices with entries in [-bound, bound] that define graded
// automorphisms, sorted row-major lexicographically. The result is identical
// for both pruning modes; pruning only fixes forced-zero positions in
// advance and rejects rows whose image power fails to vanish before any
// determinant work.
std::vector<LinearSubstitution> enumerate_automorphisms(
    const RingSpec& spec, int bound, Pruning pruning,
    const Int& ceiling = kDefaultSearchCeiling);

// All matrices in the same box that define well-defined endomorphisms
// (no determinant condition), by unpruned scan, sorted as above.
std::vector<LinearSubstitution> enumerate_well_defined_endomorphisms(
    const RingSpec& spec, int bound, const Int& ceiling = kDefaultSearchCeiling);

// Closed form 2^m * prod |J_l|! for the number of graded automorphisms.
Int automorphism_group_order(const RingSpec& spec);

// Conjugation witness: the stable permutation pi sorting exponents into
// non-increasing order, the conjugated matrix with entries B[pi[r]][pi[s]],
// and the verdict that it is block upper triangular with one diagonal block
// per distinct exponent. Requires a well-defined endomorphism.
struct BlockTriangularWitness {
  std::vector<int> permutation;  // pi[r] = original index at sorted slot r
  std::vector<std::vector<Int>> conjugated;
  bool verdict;
};

BlockTriangularWitness block_triangular_witness(const LinearSubstitution& psi);

// Exhaustive check over the whole candidate box that "graded automorphism"
// and "signed-permutation normal form present" agree matrix by matrix, with
// the automorphism count cross-checked against a fresh enumeration (in the
// requested pruning mode) and against the closed-form group order.
struct StructureTheoremReport {
  RingSpec spec;
  int bound;
  Int candidates_scanned;
  Int automorphisms_found;
  Int predicted_order;
  bool biconditional_holds;
  std::vector<LinearSubstitution> counterexamples;
};

StructureTheoremReport verify_structure_theorem(
    const RingSpec& spec, int bound, Pruning enumeration_mode = Pruning::Off,
    const Int& ceiling = kDefaultSearchCeiling);

}  // namespace rigidity
