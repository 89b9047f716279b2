#include "rigidity/ring.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <utility>

namespace rigidity {

RingSpec::RingSpec(std::vector<int> exponents)
    : exponents_(std::move(exponents)) {
  if (exponents_.empty()) {
    throw InputError("ring spec requires at least one exponent");
  }
  for (int n : exponents_) {
    if (n < 1) {
      throw InputError("ring spec exponents must be positive");
    }
  }
}

int RingSpec::top_degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

Int RingSpec::basis_size() const {
  Int size = 1;
  for (int n : exponents_) size *= n + 1;
  return size;
}

Monomial::Monomial(std::vector<int> exponents)
    : exponents_(std::move(exponents)) {
  if (exponents_.empty()) {
    throw InputError("monomial requires at least one exponent");
  }
  for (int e : exponents_) {
    if (e < 0) {
      throw InputError("monomial exponents must be nonnegative");
    }
  }
}

Monomial Monomial::unit(int dim) {
  return Monomial(std::vector<int>(static_cast<std::size_t>(dim), 0));
}

Monomial Monomial::generator(int dim, int i) {
  std::vector<int> exps(static_cast<std::size_t>(dim), 0);
  exps.at(i) = 1;
  return Monomial(std::move(exps));
}

int Monomial::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

bool Monomial::within(const RingSpec& spec) const {
  for (int i = 0; i < dim(); ++i) {
    if (exponents_[i] > spec.exponent(i)) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatchError("monomial dimensions differ");
  }
  std::vector<int> exps(a.exponents());
  for (int i = 0; i < b.dim(); ++i) exps[i] += b.exponent(i);
  return Monomial(std::move(exps));
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  return a.exponents() > b.exponents();
}

RingElement::RingElement(RingSpec spec, TermMap terms)
    : spec_(std::move(spec)), terms_(std::move(terms)) {}

RingElement RingElement::zero(const RingSpec& spec) {
  return RingElement(spec, TermMap{});
}

RingElement RingElement::one(const RingSpec& spec) {
  TermMap terms;
  terms.emplace(Monomial::unit(spec.dim()), 1);
  return RingElement(spec, std::move(terms));
}

RingElement RingElement::generator(const RingSpec& spec, int i) {
  if (i < 0 || i >= spec.dim()) {
    throw InputError("generator index out of range");
  }
  TermMap terms;
  terms.emplace(Monomial::generator(spec.dim(), i), 1);
  return RingElement(spec, std::move(terms));
}

RingElement RingElement::reduce(const TermMap& raw, const RingSpec& spec) {
  TermMap terms;
  for (const auto& [mono, coeff] : raw) {
    if (mono.dim() != spec.dim()) {
      throw DimensionMismatchError(
          "monomial dimension does not match ring spec");
    }
    if (coeff == 0) continue;
    if (!mono.within(spec)) continue;
    terms.emplace(mono, coeff);
  }
  return RingElement(spec, std::move(terms));
}

Int RingElement::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Int(0) : it->second;
}

std::optional<int> RingElement::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int degree = terms_.begin()->first.degree();
  for (const auto& [mono, coeff] : terms_) {
    if (mono.degree() != degree) return std::nullopt;
  }
  return degree;
}

namespace {

void require_same_spec(const RingElement& a, const RingElement& b) {
  if (a.spec() != b.spec()) {
    throw SpecMismatchError("operands live in different rings");
  }
}

}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same_spec(a, b);
  TermMap terms = a.terms_;
  for (const auto& [mono, coeff] : b.terms_) {
    auto it = terms.find(mono);
    if (it == terms.end()) {
      terms.emplace(mono, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms.erase(it);
    }
  }
  return RingElement(a.spec_, std::move(terms));
}

RingElement operator-(const RingElement& a) {
  TermMap terms = a.terms_;
  for (auto& [mono, coeff] : terms) coeff = -coeff;
  return RingElement(a.spec_, std::move(terms));
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  return a + (-b);
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_spec(a, b);
  TermMap terms;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial product = ma * mb;
      if (!product.within(a.spec_)) continue;  // eager truncation
      terms[std::move(product)] += ca * cb;
    }
  }
  std::erase_if(terms, [](const auto& term) { return term.second == 0; });
  return RingElement(a.spec_, std::move(terms));
}

RingElement operator*(const Int& c, const RingElement& a) {
  if (c == 0) return RingElement::zero(a.spec_);
  TermMap terms = a.terms_;
  for (auto& [mono, coeff] : terms) coeff *= c;
  return RingElement(a.spec_, std::move(terms));
}

RingElement pow(const RingElement& base, int k) {
  if (k < 0) throw InputError("negative power");
  RingElement result = RingElement::one(base.spec());
  for (int step = 0; step < k; ++step) {
    result = result * base;
    if (result.is_zero()) break;  // stays zero from here on
  }
  return result;
}

RingElement degree_one_element(const std::vector<Int>& coeffs,
                               const RingSpec& spec) {
  if (static_cast<int>(coeffs.size()) != spec.dim()) {
    throw DimensionMismatchError(
        "coefficient vector length does not match ring dimension");
  }
  TermMap terms;
  for (int i = 0; i < spec.dim(); ++i) {
    if (coeffs[i] == 0) continue;
    terms.emplace(Monomial::generator(spec.dim(), i), coeffs[i]);
  }
  return RingElement::reduce(terms, spec);
}

bool NonvanishingReport::all_nonzero() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Entry& e) { return e.nonzero; });
}

NonvanishingReport verify_nonvanishing_powers(const std::vector<Int>& coeffs,
                                              const RingSpec& spec) {
  const RingElement y = degree_one_element(coeffs, spec);

  std::vector<int> checked;
  int max_exponent = 0;
  for (int i = 0; i < spec.dim(); ++i) {
    if (coeffs[i] == 0) continue;
    checked.push_back(i);
    max_exponent = std::max(max_exponent, spec.exponent(i));
  }

  // One incremental pass y, y^2, ..., recording which powers vanish.
  std::vector<bool> zero_at(static_cast<std::size_t>(max_exponent) + 1, false);
  RingElement power = RingElement::one(spec);
  for (int k = 1; k <= max_exponent; ++k) {
    power = power * y;
    zero_at[k] = power.is_zero();
  }

  NonvanishingReport report;
  for (int i : checked) {
    const int n = spec.exponent(i);
    report.entries.push_back({i, n, !zero_at[n]});
  }
  return report;
}

int nilpotency_order(const RingElement& y) {
  if (y.is_zero()) {
    throw InputError("nilpotency order requires a nonzero element");
  }
  const auto degree = y.homogeneous_degree();
  if (!degree || *degree != 1) {
    throw InputError(
        "nilpotency order requires a homogeneous degree-one element");
  }
  const int limit = y.spec().top_degree() + 1;
  RingElement power = y;
  int k = 1;
  while (!power.is_zero()) {
    power = power * y;
    ++k;
    assert(k <= limit);
  }
  (void)limit;
  return k;
}

std::string to_string(const Monomial& mono) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < mono.dim(); ++i) {
    const int e = mono.exponent(i);
    if (e == 0) continue;
    if (!first) out << "*";
    out << "x" << i + 1;
    if (e > 1) out << "^" << e;
    first = false;
  }
  return out.str();
}

std::string to_string(const RingElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, coeff] : a.terms()) {
    const bool negative = coeff < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    const Int magnitude = abs(coeff);
    const std::string monomial = to_string(mono);
    if (monomial.empty()) {
      out << magnitude.str();
    } else if (magnitude == 1) {
      out << monomial;
    } else {
      out << magnitude.str() << "*" << monomial;
    }
    first = false;
  }
  return out.str();
}

}  // namespace rigidity
