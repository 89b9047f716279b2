#include "rigidity/substitution.hpp"

#include <utility>

namespace rigidity {

LinearSubstitution::LinearSubstitution(std::vector<std::vector<Int>> rows,
                                       RingSpec spec)
    : rows_(std::move(rows)), spec_(std::move(spec)) {
  const auto m = static_cast<std::size_t>(spec_.dim());
  if (rows_.size() != m) {
    throw DimensionMismatchError("matrix row count does not match ring "
                                 "dimension");
  }
  for (const auto& row : rows_) {
    if (row.size() != m) {
      throw DimensionMismatchError("matrix is not square of ring dimension");
    }
  }
}

LinearSubstitution LinearSubstitution::identity(const RingSpec& spec) {
  const auto m = static_cast<std::size_t>(spec.dim());
  std::vector<std::vector<Int>> rows(m, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) rows[i][i] = 1;
  return LinearSubstitution(std::move(rows), spec);
}

RingElement LinearSubstitution::generator_image(int i) const {
  return degree_one_element(rows_.at(i), spec_);
}

RingElement apply(const LinearSubstitution& psi, const RingElement& a) {
  if (psi.spec() != a.spec()) {
    throw SpecMismatchError("substitution and element live in different "
                            "rings");
  }
  const RingSpec& spec = psi.spec();
  const int m = spec.dim();

  // Powers of generator images, filled on demand: memo[j][e] = image(x_j)^e.
  std::vector<RingElement> images;
  images.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) images.push_back(psi.generator_image(j));
  std::vector<std::vector<RingElement>> memo(
      static_cast<std::size_t>(m), {RingElement::one(spec)});
  const auto image_power = [&](int j, int e) -> const RingElement& {
    auto& column = memo[static_cast<std::size_t>(j)];
    while (static_cast<int>(column.size()) <= e) {
      column.push_back(column.back() * images[static_cast<std::size_t>(j)]);
    }
    return column[static_cast<std::size_t>(e)];
  };

  RingElement result = RingElement::zero(spec);
  for (const auto& [mono, coeff] : a.terms()) {
    RingElement term = RingElement::one(spec);
    for (int j = 0; j < m && !term.is_zero(); ++j) {
      const int e = mono.exponent(j);
      if (e > 0) term = term * image_power(j, e);
    }
    result = result + coeff * term;
  }
  return result;
}

EndomorphismCheck is_well_defined_endomorphism(const LinearSubstitution& psi) {
  const RingSpec& spec = psi.spec();
  for (int i = 0; i < spec.dim(); ++i) {
    const int power = spec.exponent(i) + 1;
    const RingElement residue = pow(psi.generator_image(i), power);
    if (!residue.is_zero()) {
      return {false, i, power, residue};
    }
  }
  return {};
}

namespace {

void require_square(const std::vector<std::vector<Int>>& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) {
      throw DimensionMismatchError("determinant requires a square matrix");
    }
  }
  if (m.empty()) {
    throw DimensionMismatchError("determinant requires a nonempty matrix");
  }
}

Int determinant_bareiss(std::vector<std::vector<Int>> m) {
  const int n = static_cast<int>(m.size());
  Int sign = 1;
  Int previous_pivot = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (m[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        // Exact: previous_pivot divides the numerator at every step.
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous_pivot;
      }
      m[i][k] = 0;
    }
    previous_pivot = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Int determinant_cofactor(const std::vector<std::vector<Int>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 1) return m[0][0];
  Int total = 0;
  for (int p = 0; p < n; ++p) {
    if (m[0][p] == 0) continue;
    std::vector<std::vector<Int>> minor;
    minor.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) {
      std::vector<Int> row;
      row.reserve(static_cast<std::size_t>(n - 1));
      for (int j = 0; j < n; ++j) {
        if (j != p) row.push_back(m[i][j]);
      }
      minor.push_back(std::move(row));
    }
    const Int cofactor = m[0][p] * determinant_cofactor(minor);
    total += (p % 2 == 0) ? cofactor : -cofactor;
  }
  return total;
}

}  // namespace

Int determinant(const std::vector<std::vector<Int>>& matrix) {
  require_square(matrix);
  return determinant_bareiss(matrix);
}

Int determinant(const LinearSubstitution& psi) {
  return determinant_bareiss(psi.rows());
}

Int determinant_by_cofactors(const std::vector<std::vector<Int>>& matrix) {
  require_square(matrix);
  return determinant_cofactor(matrix);
}

Int determinant_by_cofactors(const LinearSubstitution& psi) {
  return determinant_cofactor(psi.rows());
}

bool is_graded_automorphism(const LinearSubstitution& psi) {
  if (!is_well_defined_endomorphism(psi).well_defined) return false;
  return abs(determinant(psi)) == 1;
}

LinearSubstitution compose(const LinearSubstitution& outer,
                           const LinearSubstitution& inner) {
  if (outer.spec() != inner.spec()) {
    throw SpecMismatchError("cannot compose substitutions over different "
                            "rings");
  }
  const int m = outer.dim();
  std::vector<std::vector<Int>> rows(
      static_cast<std::size_t>(m), std::vector<Int>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Int sum = 0;
      for (int k = 0; k < m; ++k) {
        sum += inner.entry(i, k) * outer.entry(k, j);
      }
      rows[i][j] = std::move(sum);
    }
  }
  return LinearSubstitution(std::move(rows), outer.spec());
}

std::ostream& operator<<(std::ostream& os, const LinearSubstitution& psi) {
  os << "[";
  for (int i = 0; i < psi.dim(); ++i) {
    os << (i == 0 ? "[" : " [");
    for (int j = 0; j < psi.dim(); ++j) {
      if (j > 0) os << ", ";
      os << psi.entry(i, j);
    }
    os << "]";
  }
  return os << "]";
}

}  // namespace rigidity
