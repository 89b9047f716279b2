// Deterministic random inputs for property tests and the self-check
// driver. A fixed seed yields the same stream on every platform, which
// std::uniform_int_distribution does not guarantee.

#pragma once

#include <cstdint>
#include <vector>

#include "rigidity/ring.hpp"

namespace rigidity {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform over [lo, hi], inclusive. Requires lo <= hi.
  int uniform_int(int lo, int hi);

  RingSpec random_spec(int max_dim, int max_exponent);

  // Coefficient vector of length m with entries in [lo, hi].
  std::vector<Int> random_coeffs(int m, int lo, int hi);

  // Entries in [-magnitude, magnitude] \ {0}: full support.
  std::vector<Int> random_full_support_coeffs(int m, int magnitude);

  // Sum of up to max_terms random monomials inside the truncation box,
  // coefficients in [-coeff_magnitude, coeff_magnitude].
  RingElement random_element(const RingSpec& spec, int max_terms,
                             int coeff_magnitude);

 private:
  std::uint64_t state_;
};

}  // namespace rigidity
