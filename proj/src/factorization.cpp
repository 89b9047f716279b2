#include "rigidity/factorization.hpp"

#include <cstddef>

#include "rigidity/errors.hpp"

namespace rigidity {

SignedPermutation induced_signed_permutation(const DiffeoRecipe& recipe,
                                             const RingSpec& spec) {
  const int m = spec.dim();
  if (static_cast<int>(recipe.factor_permutation.size()) != m ||
      static_cast<int>(recipe.conjugation_flags.size()) != m) {
    throw DimensionMismatchError(
        "recipe length does not match the number of factors");
  }
  std::vector<bool> hit(static_cast<std::size_t>(m), false);
  for (int target : recipe.factor_permutation) {
    if (target < 0 || target >= m || hit[static_cast<std::size_t>(target)]) {
      throw InputError("recipe factor assignment is not a permutation");
    }
    hit[static_cast<std::size_t>(target)] = true;
  }
  for (int i = 0; i < m; ++i) {
    const int source = recipe.factor_permutation[static_cast<std::size_t>(i)];
    if (spec.exponent(i) != spec.exponent(source)) {
      throw InputError("recipe pairs factors of different dimensions");
    }
  }
  std::vector<int> signs(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    signs[static_cast<std::size_t>(i)] =
        recipe.conjugation_flags[static_cast<std::size_t>(i)] ? -1 : 1;
  }
  return SignedPermutation(recipe.factor_permutation, std::move(signs), spec);
}

Realization realize(const SignedPermutation& p) {
  const int m = p.dim();
  DiffeoRecipe recipe;
  recipe.factor_permutation = p.sigma();
  recipe.conjugation_flags.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    recipe.conjugation_flags[static_cast<std::size_t>(i)] =
        p.signs()[static_cast<std::size_t>(i)] == -1;
  }
  LinearSubstitution induced =
      to_substitution(induced_signed_permutation(recipe, p.spec()));
  if (induced != to_substitution(p)) {
    throw InternalError("realized recipe does not reinduce its input");
  }
  return {std::move(recipe), std::move(induced)};
}

Factorization factor_isomorphism(const LinearSubstitution& phi,
                                 const LinearSubstitution& h_star) {
  if (phi.spec() != h_star.spec()) {
    throw SpecMismatchError("phi and h_star live over different rings");
  }
  if (!is_graded_automorphism(phi)) {
    throw NotAutomorphismError("phi is not an automorphism");
  }
  if (!is_graded_automorphism(h_star)) {
    throw NotAutomorphismError("h_star is not an automorphism");
  }

  LinearSubstitution g = compose(phi, h_star);

  const NormalForm g_form = as_signed_permutation(g);
  const NormalForm h_form = as_signed_permutation(h_star);
  if (!g_form.present() || !h_form.present()) {
    throw InternalError("automorphism has no signed-permutation normal form");
  }

  const LinearSubstitution h_inv = to_substitution(inverse(*h_form.value));
  LinearSubstitution f_star = compose(g, h_inv);

  Realization realization = realize(*g_form.value);

  bool certified = f_star == phi && realization.induced == g;
  for (int i = 0; certified && i < phi.dim(); ++i) {
    const RingElement x = RingElement::generator(phi.spec(), i);
    if (apply(g, apply(h_inv, x)) != apply(phi, x)) certified = false;
  }
  if (!certified) {
    throw InternalError("factorization certificate failed");
  }

  return {std::move(g), *g_form.value, std::move(realization.recipe),
          std::move(f_star), certified};
}

}  // namespace rigidity
