#include "rigidity/sampling.hpp"

#include "rigidity/errors.hpp"

namespace rigidity {

std::uint64_t Sampler::next_u64() {
  // splitmix64: equidistributed, trivially portable.
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Sampler::uniform_int(int lo, int hi) {
  if (lo > hi) throw InputError("uniform_int requires lo <= hi");
  const std::uint64_t width = static_cast<std::uint64_t>(hi) - lo + 1;
  // Rejection sampling removes modulo bias; width is tiny next to 2^64,
  // so rejections are vanishingly rare.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % width;
  std::uint64_t draw = next_u64();
  while (draw >= limit) draw = next_u64();
  return static_cast<int>(static_cast<std::int64_t>(draw % width) + lo);
}

RingSpec Sampler::random_spec(int max_dim, int max_exponent) {
  const int m = uniform_int(1, max_dim);
  std::vector<int> exponents(static_cast<std::size_t>(m));
  for (int& e : exponents) e = uniform_int(1, max_exponent);
  return RingSpec(std::move(exponents));
}

std::vector<Int> Sampler::random_coeffs(int m, int lo, int hi) {
  std::vector<Int> coeffs(static_cast<std::size_t>(m));
  for (auto& c : coeffs) c = uniform_int(lo, hi);
  return coeffs;
}

std::vector<Int> Sampler::random_full_support_coeffs(int m, int magnitude) {
  std::vector<Int> coeffs(static_cast<std::size_t>(m));
  for (auto& c : coeffs) {
    int value = uniform_int(1, magnitude);
    if (uniform_int(0, 1) == 1) value = -value;
    c = value;
  }
  return coeffs;
}

RingElement Sampler::random_element(const RingSpec& spec, int max_terms,
                                    int coeff_magnitude) {
  TermMap raw;
  const int terms = uniform_int(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exponents(static_cast<std::size_t>(spec.dim()));
    for (int i = 0; i < spec.dim(); ++i) {
      exponents[static_cast<std::size_t>(i)] =
          uniform_int(0, spec.exponent(i));
    }
    raw[Monomial(std::move(exponents))] +=
        uniform_int(-coeff_magnitude, coeff_magnitude);
  }
  return RingElement::reduce(raw, spec);
}

}  // namespace rigidity
