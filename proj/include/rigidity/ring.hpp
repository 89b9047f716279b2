#pragma once

// Exact arithmetic in truncated polynomial rings
//
//     Z[x_1, ..., x_m] / (x_1^{n_1+1}, ..., x_m^{n_m+1}),
//
// the integral cohomology rings of products of complex projective spaces.
// Generator x_i sits in cohomological degree 2, so polynomial degree d is
// cohomological degree 2d.
//
// Elements are sparse and always canonical: monomials lying in the defining
// ideal are never stored, zero coefficients are never stored, and terms
// iterate in graded-lexicographic order. Coefficients are arbitrary-precision
// integers; the multinomial coefficients of (a_1 x_1 + ... + a_m x_m)^k
// overflow machine words already at moderate k. Every value is immutable
// after construction and every operation is a pure function, so values can
// be shared freely between threads.

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rigidity/errors.hpp"

namespace rigidity {

using Int = boost::multiprecision::cpp_int;

// The truncation exponents (n_1, ..., n_m). Exponents need not be distinct.
class RingSpec {
 public:
  explicit RingSpec(std::vector<int> exponents);

  int dim() const { return static_cast<int>(exponents_.size()); }
  int exponent(int i) const { return exponents_.at(i); }
  const std::vector<int>& exponents() const { return exponents_; }

  // Sum of all truncation exponents: the polynomial degree of the top class.
  int top_degree() const;
  // Number of monomials surviving reduction: prod (n_i + 1).
  Int basis_size() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  std::vector<int> exponents_;
};

// An exponent vector (e_1, ..., e_m), e_i >= 0. A Monomial on its own may
// exceed the truncation bounds (raw convolution products do); RingElement
// never stores one that does.
class Monomial {
 public:
  explicit Monomial(std::vector<int> exponents);

  static Monomial unit(int dim);              // all exponents zero
  static Monomial generator(int dim, int i);  // e_i = 1, rest zero

  int dim() const { return static_cast<int>(exponents_.size()); }
  int exponent(int i) const { return exponents_.at(i); }
  const std::vector<int>& exponents() const { return exponents_; }
  int degree() const;

  // True when e_i <= n_i for every i, i.e. the monomial survives reduction.
  bool within(const RingSpec& spec) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exponents_;
};

// Exponentwise sum. Dimensions must agree.
Monomial operator*(const Monomial& a, const Monomial& b);

// Canonical term order: total degree first, then descending lexicographic on
// exponent vectors, so x_1 precedes x_2 within a degree.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using TermMap = std::map<Monomial, Int, GradedLexLess>;

class RingElement {
 public:
  static RingElement zero(const RingSpec& spec);
  static RingElement one(const RingSpec& spec);
  static RingElement generator(const RingSpec& spec, int i);

  // Canonical residue of an arbitrary term mapping: monomials exceeding a
  // truncation bound and zero coefficients are dropped. Idempotent.
  static RingElement reduce(const TermMap& raw, const RingSpec& spec);

  const RingSpec& spec() const { return spec_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coefficient(const Monomial& mono) const;

  // Common polynomial degree of all terms, or nullopt when the element is
  // zero or inhomogeneous.
  std::optional<int> homogeneous_degree() const;

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const Int& c, const RingElement& a);
  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  RingElement(RingSpec spec, TermMap terms);

  RingSpec spec_;
  TermMap terms_;
};

// k-fold product with truncation applied after every multiplication.
// pow(a, 0) is the multiplicative identity.
RingElement pow(const RingElement& base, int k);

// The element a_1 x_1 + ... + a_m x_m.
RingElement degree_one_element(const std::vector<Int>& coeffs,
                               const RingSpec& spec);

// For y = sum a_j x_j, records for each index i with a_i != 0 whether
// y^{n_i} != 0. Each answer is computed, not assumed; in these rings all of
// them are true, and the report makes that checkable.
struct NonvanishingReport {
  struct Entry {
    int index;     // 0-based generator index with a_i != 0
    int exponent;  // n_i
    bool nonzero;  // pow(y, n_i) != 0
  };
  std::vector<Entry> entries;
  bool all_nonzero() const;
};

NonvanishingReport verify_nonvanishing_powers(const std::vector<Int>& coeffs,
                                              const RingSpec& spec);

// Smallest k >= 1 with y^k = 0, for nonzero homogeneous degree-one y.
// Always at most 1 + top_degree().
int nilpotency_order(const RingElement& y);

std::string to_string(const Monomial& mono);
std::string to_string(const RingElement& a);

inline std::ostream& operator<<(std::ostream& os, const RingElement& a) {
  return os << to_string(a);
}

}  // namespace rigidity
