// Reference implementations for cross-checking, deliberately independent
// of the library's production code paths.

#pragma once

#include "rigidity/ring.hpp"

namespace oracles {

// Plain convolution over raw term maps with no truncation inside the loop;
// out-of-box monomials are discarded once, by reduce, at the end. This
// shares no logic with operator*'s eager per-product truncation.
inline rigidity::RingElement naive_convolve(const rigidity::RingElement& a,
                                            const rigidity::RingElement& b) {
  rigidity::TermMap raw;
  for (const auto& [mono_a, coeff_a] : a.terms()) {
    for (const auto& [mono_b, coeff_b] : b.terms()) {
      raw[mono_a * mono_b] += coeff_a * coeff_b;
    }
  }
  return rigidity::RingElement::reduce(raw, a.spec());
}

inline rigidity::Int factorial(int n) {
  rigidity::Int result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

// Coefficient of the top monomial in (a_1 x_1 + ... + a_m x_m)^{sum n_i}:
// the multinomial (sum n_i)! / prod(n_i!) times prod a_i^{n_i}.
inline rigidity::Int top_power_coefficient(const std::vector<rigidity::Int>& coeffs,
                                           const rigidity::RingSpec& spec) {
  rigidity::Int result = factorial(spec.top_degree());
  for (int i = 0; i < spec.dim(); ++i) {
    result /= factorial(spec.exponent(i));
    rigidity::Int power = 1;
    for (int e = 0; e < spec.exponent(i); ++e) {
      power *= coeffs[static_cast<std::size_t>(i)];
    }
    result *= power;
  }
  return result;
}

}  // namespace oracles
