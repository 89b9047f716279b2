#include "rigidity/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace rigidity {

namespace {

Int integer_power(const Int& base, int exponent) {
  Int result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

Int factorial(int n) {
  Int result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

bool canonical_less(const LinearSubstitution& a, const LinearSubstitution& b) {
  return a.rows() < b.rows();  // row-major lexicographic
}

// Visits every matrix with entries in [-bound, bound], row-major odometer
// order. The caller has already checked the box against the ceiling.
template <typename Visit>
void scan_box(const RingSpec& spec, int bound, Visit&& visit) {
  const int m = spec.dim();
  const int cell_count = m * m;
  std::vector<int> cells(static_cast<std::size_t>(cell_count), -bound);
  while (true) {
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      auto& row = rows[static_cast<std::size_t>(i)];
      row.reserve(static_cast<std::size_t>(m));
      for (int j = 0; j < m; ++j) {
        row.emplace_back(cells[static_cast<std::size_t>(i * m + j)]);
      }
    }
    visit(LinearSubstitution(std::move(rows), spec));

    int pos = cell_count - 1;
    while (pos >= 0 && cells[static_cast<std::size_t>(pos)] == bound) {
      cells[static_cast<std::size_t>(pos)] = -bound;
      --pos;
    }
    if (pos < 0) break;
    ++cells[static_cast<std::size_t>(pos)];
  }
}

void require_positive_bound(int bound) {
  if (bound < 1) throw InputError("enumeration bound must be positive");
}

Int checked_box_size(const Int& width, int cells, const Int& ceiling) {
  const Int size = integer_power(width, cells);
  if (size > ceiling) throw SearchSpaceError(size, ceiling);
  return size;
}

}  // namespace

DegreeProfile degree_profile(const RingSpec& spec) {
  DegreeProfile profile;
  profile.distinct_exponents = spec.exponents();
  std::sort(profile.distinct_exponents.begin(),
            profile.distinct_exponents.end(), std::greater<int>());
  profile.distinct_exponents.erase(
      std::unique(profile.distinct_exponents.begin(),
                  profile.distinct_exponents.end()),
      profile.distinct_exponents.end());

  profile.block_index.assign(static_cast<std::size_t>(spec.dim()), -1);
  profile.blocks.resize(profile.distinct_exponents.size());
  for (int i = 0; i < spec.dim(); ++i) {
    const auto it = std::find(profile.distinct_exponents.begin(),
                              profile.distinct_exponents.end(),
                              spec.exponent(i));
    const int l = static_cast<int>(it - profile.distinct_exponents.begin());
    profile.blocks[static_cast<std::size_t>(l)].push_back(i);
    profile.block_index[static_cast<std::size_t>(i)] = l;
  }

  profile.lower_unions.resize(profile.distinct_exponents.size());
  for (std::size_t l = 0; l < profile.blocks.size(); ++l) {
    auto& lower = profile.lower_unions[l];
    for (std::size_t below = l + 1; below < profile.blocks.size(); ++below) {
      lower.insert(lower.end(), profile.blocks[below].begin(),
                   profile.blocks[below].end());
    }
    std::sort(lower.begin(), lower.end());
  }
  return profile;
}

SignedPermutation::SignedPermutation(std::vector<int> sigma,
                                     std::vector<int> signs, RingSpec spec)
    : sigma_(std::move(sigma)), signs_(std::move(signs)),
      spec_(std::move(spec)) {
  const int m = spec_.dim();
  if (static_cast<int>(sigma_.size()) != m ||
      static_cast<int>(signs_.size()) != m) {
    throw DimensionMismatchError(
        "signed permutation length does not match ring dimension");
  }
  std::vector<bool> hit(static_cast<std::size_t>(m), false);
  for (int image : sigma_) {
    if (image < 0 || image >= m || hit[static_cast<std::size_t>(image)]) {
      throw InputError("sigma is not a permutation");
    }
    hit[static_cast<std::size_t>(image)] = true;
  }
  for (int sign : signs_) {
    if (sign != 1 && sign != -1) {
      throw InputError("signs must be +1 or -1");
    }
  }
  for (int i = 0; i < m; ++i) {
    if (spec_.exponent(i) != spec_.exponent(sigma_[static_cast<std::size_t>(i)])) {
      throw InputError(
          "signed permutation must match equal truncation exponents");
    }
  }
}

SignedPermutation SignedPermutation::identity(const RingSpec& spec) {
  std::vector<int> sigma(static_cast<std::size_t>(spec.dim()));
  std::iota(sigma.begin(), sigma.end(), 0);
  return SignedPermutation(std::move(sigma),
                           std::vector<int>(static_cast<std::size_t>(spec.dim()), 1),
                           spec);
}

SignedPermutation inverse(const SignedPermutation& p) {
  const int m = p.dim();
  std::vector<int> sigma_inv(static_cast<std::size_t>(m));
  std::vector<int> signs_inv(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const int image = p.sigma()[static_cast<std::size_t>(i)];
    sigma_inv[static_cast<std::size_t>(image)] = i;
    // x_image pulls back through x_i with the same sign.
    signs_inv[static_cast<std::size_t>(image)] =
        p.signs()[static_cast<std::size_t>(i)];
  }
  return SignedPermutation(std::move(sigma_inv), std::move(signs_inv),
                           p.spec());
}

LinearSubstitution to_substitution(const SignedPermutation& p) {
  const int m = p.dim();
  std::vector<std::vector<Int>> rows(
      static_cast<std::size_t>(m),
      std::vector<Int>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i) {
    rows[static_cast<std::size_t>(i)]
        [static_cast<std::size_t>(p.sigma()[static_cast<std::size_t>(i)])] =
        p.signs()[static_cast<std::size_t>(i)];
  }
  return LinearSubstitution(std::move(rows), p.spec());
}

std::string to_string(NormalFormFailure failure) {
  switch (failure) {
    case NormalFormFailure::NotMonomialMatrix:
      return "not-monomial-matrix";
    case NormalFormFailure::EntryNotUnit:
      return "entry-not-unit";
    case NormalFormFailure::ProfileViolation:
      return "profile-violation";
  }
  return "unknown";
}

NormalForm as_signed_permutation(const LinearSubstitution& psi) {
  const int m = psi.dim();
  std::vector<int> sigma(static_cast<std::size_t>(m), -1);
  std::vector<int> signs(static_cast<std::size_t>(m), 0);
  std::vector<bool> column_hit(static_cast<std::size_t>(m), false);

  for (int i = 0; i < m; ++i) {
    int nonzero_column = -1;
    for (int j = 0; j < m; ++j) {
      if (psi.entry(i, j) == 0) continue;
      if (nonzero_column >= 0) {
        return {std::nullopt, NormalFormFailure::NotMonomialMatrix};
      }
      nonzero_column = j;
    }
    if (nonzero_column < 0 || column_hit[static_cast<std::size_t>(nonzero_column)]) {
      return {std::nullopt, NormalFormFailure::NotMonomialMatrix};
    }
    column_hit[static_cast<std::size_t>(nonzero_column)] = true;
    sigma[static_cast<std::size_t>(i)] = nonzero_column;
  }
  for (int i = 0; i < m; ++i) {
    const Int& entry = psi.entry(i, sigma[static_cast<std::size_t>(i)]);
    if (entry != 1 && entry != -1) {
      return {std::nullopt, NormalFormFailure::EntryNotUnit};
    }
    signs[static_cast<std::size_t>(i)] = entry == 1 ? 1 : -1;
  }
  for (int i = 0; i < m; ++i) {
    if (psi.spec().exponent(i) !=
        psi.spec().exponent(sigma[static_cast<std::size_t>(i)])) {
      return {std::nullopt, NormalFormFailure::ProfileViolation};
    }
  }
  return {SignedPermutation(std::move(sigma), std::move(signs), psi.spec()),
          std::nullopt};
}

std::vector<LinearSubstitution> enumerate_automorphisms(const RingSpec& spec,
                                                        int bound,
                                                        Pruning pruning,
                                                        const Int& ceiling) {
  require_positive_bound(bound);
  const int m = spec.dim();
  const Int width = 2 * bound + 1;
  std::vector<LinearSubstitution> found;

  if (pruning == Pruning::Off) {
    checked_box_size(width, m * m, ceiling);
    scan_box(spec, bound, [&](LinearSubstitution candidate) {
      if (is_graded_automorphism(candidate)) {
        found.push_back(std::move(candidate));
      }
    });
  } else {
    // Positions (i, j) with n_i < n_j are forced to zero: the image of x_i
    // could otherwise not satisfy image^{n_i+1} = 0. Only the remaining
    // cells are searched.
    std::vector<std::vector<int>> free_columns(static_cast<std::size_t>(m));
    int free_cells = 0;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (spec.exponent(i) >= spec.exponent(j)) {
          free_columns[static_cast<std::size_t>(i)].push_back(j);
          ++free_cells;
        }
      }
    }
    checked_box_size(width, free_cells, ceiling);

    // Per-row candidates surviving the nilpotency rejection, found before
    // any determinant work.
    std::vector<std::vector<std::vector<Int>>> valid_rows(
        static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      const auto& columns = free_columns[static_cast<std::size_t>(i)];
      const int slots = static_cast<int>(columns.size());
      std::vector<int> values(static_cast<std::size_t>(slots), -bound);
      while (true) {
        std::vector<Int> row(static_cast<std::size_t>(m), 0);
        for (int s = 0; s < slots; ++s) {
          row[static_cast<std::size_t>(columns[static_cast<std::size_t>(s)])] =
              values[static_cast<std::size_t>(s)];
        }
        if (pow(degree_one_element(row, spec), spec.exponent(i) + 1)
                .is_zero()) {
          valid_rows[static_cast<std::size_t>(i)].push_back(std::move(row));
        }
        int pos = slots - 1;
        while (pos >= 0 && values[static_cast<std::size_t>(pos)] == bound) {
          values[static_cast<std::size_t>(pos)] = -bound;
          --pos;
        }
        if (pos < 0) break;
        ++values[static_cast<std::size_t>(pos)];
      }
    }

    std::vector<std::size_t> choice(static_cast<std::size_t>(m), 0);
    while (true) {
      std::vector<std::vector<Int>> rows;
      rows.reserve(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) {
        rows.push_back(
            valid_rows[static_cast<std::size_t>(i)][choice[static_cast<std::size_t>(i)]]);
      }
      if (abs(determinant(rows)) == 1) {
        found.emplace_back(std::move(rows), spec);
      }
      int pos = m - 1;
      while (pos >= 0 &&
             choice[static_cast<std::size_t>(pos)] + 1 ==
                 valid_rows[static_cast<std::size_t>(pos)].size()) {
        choice[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++choice[static_cast<std::size_t>(pos)];
    }
  }

  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

std::vector<LinearSubstitution> enumerate_well_defined_endomorphisms(
    const RingSpec& spec, int bound, const Int& ceiling) {
  require_positive_bound(bound);
  const int m = spec.dim();
  checked_box_size(2 * bound + 1, m * m, ceiling);
  std::vector<LinearSubstitution> found;
  scan_box(spec, bound, [&](LinearSubstitution candidate) {
    if (is_well_defined_endomorphism(candidate).well_defined) {
      found.push_back(std::move(candidate));
    }
  });
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

Int automorphism_group_order(const RingSpec& spec) {
  Int order = integer_power(2, spec.dim());
  for (const auto& block : degree_profile(spec).blocks) {
    order *= factorial(static_cast<int>(block.size()));
  }
  return order;
}

BlockTriangularWitness block_triangular_witness(const LinearSubstitution& psi) {
  if (!is_well_defined_endomorphism(psi).well_defined) {
    throw InputError(
        "block-triangular witness requires a well-defined endomorphism");
  }
  const RingSpec& spec = psi.spec();
  const int m = spec.dim();
  const DegreeProfile profile = degree_profile(spec);

  BlockTriangularWitness witness;
  witness.permutation.resize(static_cast<std::size_t>(m));
  std::iota(witness.permutation.begin(), witness.permutation.end(), 0);
  // Stable on ties, so equal-exponent indices keep their original order.
  std::stable_sort(witness.permutation.begin(), witness.permutation.end(),
                   [&](int a, int b) {
                     return spec.exponent(a) > spec.exponent(b);
                   });

  witness.conjugated.assign(static_cast<std::size_t>(m),
                            std::vector<Int>(static_cast<std::size_t>(m), 0));
  for (int r = 0; r < m; ++r) {
    for (int s = 0; s < m; ++s) {
      witness.conjugated[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] =
          psi.entry(witness.permutation[static_cast<std::size_t>(r)],
                    witness.permutation[static_cast<std::size_t>(s)]);
    }
  }

  witness.verdict = true;
  for (int r = 0; r < m; ++r) {
    for (int s = 0; s < m; ++s) {
      const int row_block = profile.block_index[static_cast<std::size_t>(
          witness.permutation[static_cast<std::size_t>(r)])];
      const int col_block = profile.block_index[static_cast<std::size_t>(
          witness.permutation[static_cast<std::size_t>(s)])];
      if (row_block > col_block &&
          witness.conjugated[static_cast<std::size_t>(r)]
                            [static_cast<std::size_t>(s)] != 0) {
        witness.verdict = false;
      }
    }
  }
  return witness;
}

StructureTheoremReport verify_structure_theorem(const RingSpec& spec,
                                                int bound,
                                                Pruning enumeration_mode,
                                                const Int& ceiling) {
  require_positive_bound(bound);
  const int m = spec.dim();
  const Int candidates = checked_box_size(2 * bound + 1, m * m, ceiling);

  std::vector<LinearSubstitution> automorphisms;
  std::vector<LinearSubstitution> counterexamples;
  scan_box(spec, bound, [&](LinearSubstitution candidate) {
    const bool automorphism = is_graded_automorphism(candidate);
    const bool normal_form = as_signed_permutation(candidate).present();
    if (automorphism != normal_form) {
      counterexamples.push_back(candidate);
    }
    if (automorphism) {
      automorphisms.push_back(std::move(candidate));
    }
  });
  std::sort(automorphisms.begin(), automorphisms.end(), canonical_less);

  const auto enumerated =
      enumerate_automorphisms(spec, bound, enumeration_mode, ceiling);
  if (enumerated != automorphisms) {
    throw InternalError("enumeration disagrees with the exhaustive scan");
  }

  return {spec,
          bound,
          candidates,
          Int(automorphisms.size()),
          automorphism_group_order(spec),
          counterexamples.empty(),
          std::move(counterexamples)};
}

}  // namespace rigidity
