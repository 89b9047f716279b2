#pragma once

// Degree-preserving linear substitutions on the generators of a truncated
// polynomial ring. Row i of the matrix lists the coefficients of the image
// of x_i, so on degree-one coefficient row vectors a substitution acts by
// right multiplication. The composition order is fixed by the identity
//
//     apply(compose(outer, inner), a) == apply(outer, apply(inner, a))
//
// which under the row convention makes the composed matrix
// inner.matrix * outer.matrix.

#include <optional>
#include <ostream>
#include <vector>

#include "rigidity/ring.hpp"

namespace rigidity {

class LinearSubstitution {
 public:
  // rows[i][j] is the coefficient of x_j in the image of x_i.
  LinearSubstitution(std::vector<std::vector<Int>> rows, RingSpec spec);

  static LinearSubstitution identity(const RingSpec& spec);

  const RingSpec& spec() const { return spec_; }
  int dim() const { return spec_.dim(); }
  const Int& entry(int i, int j) const { return rows_.at(i).at(j); }
  const std::vector<std::vector<Int>>& rows() const { return rows_; }

  // The image of x_i as a ring element.
  RingElement generator_image(int i) const;

  friend bool operator==(const LinearSubstitution&,
                         const LinearSubstitution&) = default;

 private:
  std::vector<std::vector<Int>> rows_;
  RingSpec spec_;
};

// Substitute every generator by its image row, expand, reduce. Defined on
// canonical representatives whether or not psi respects the defining
// relations; it is multiplicative exactly when it does.
RingElement apply(const LinearSubstitution& psi, const RingElement& a);

// Result of checking that a substitution descends to the quotient ring:
// the image of each x_i must satisfy image^{n_i+1} = 0. On failure the first
// offending generator and the nonzero residue power are kept as a witness.
struct EndomorphismCheck {
  bool well_defined = true;
  std::optional<int> generator;        // 0-based index of first failure
  std::optional<int> power;            // exponent checked there, n_i + 1
  std::optional<RingElement> residue;  // the nonzero power itself
};

EndomorphismCheck is_well_defined_endomorphism(const LinearSubstitution& psi);

// Exact determinant by fraction-free (Bareiss) elimination: integer
// arithmetic throughout, no rational intermediates. The raw overload takes
// any square integer matrix.
Int determinant(const std::vector<std::vector<Int>>& matrix);
Int determinant(const LinearSubstitution& psi);

// Exact determinant by cofactor expansion. Exponential; kept as an
// independent route for cross-checking the elimination form.
Int determinant_by_cofactors(const std::vector<std::vector<Int>>& matrix);
Int determinant_by_cofactors(const LinearSubstitution& psi);

// True iff psi is a well-defined endomorphism with determinant +1 or -1.
// For these rings that pair of conditions characterizes the graded
// automorphisms; the classifier verifies the characterization exhaustively
// at small scale rather than assuming it.
bool is_graded_automorphism(const LinearSubstitution& psi);

// The substitution acting as inner first, then outer.
LinearSubstitution compose(const LinearSubstitution& outer,
                           const LinearSubstitution& inner);

std::ostream& operator<<(std::ostream& os, const LinearSubstitution& psi);

}  // namespace rigidity
