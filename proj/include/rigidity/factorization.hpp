// Diffeomorphism recipes for products of complex projective spaces and the
// factorization of a ring isomorphism through one of them.
//
// A recipe assembles a self-map of CP^{n_1} x ... x CP^{n_m} from two kinds
// of building blocks: a permutation of factors with equal dimension, and
// complex conjugation applied to a chosen subset of factors. The map sends
// (z_1, ..., z_m) to (c_1(z_{delta(1)}), ..., c_m(z_{delta(m)})), where c_i
// conjugates its factor when the flag is set. On second cohomology this
// pulls the generator x_i back to +/- x_{delta(i)}, with the minus sign
// exactly on the conjugated factors, so every recipe induces a signed
// permutation and every signed permutation arises from a recipe.

#pragma once

#include <vector>

#include "rigidity/classifier.hpp"
#include "rigidity/substitution.hpp"

namespace rigidity {

struct DiffeoRecipe {
  std::vector<int> factor_permutation;  // delta, 0-based
  std::vector<bool> conjugation_flags;  // true = conjugate that factor

  friend bool operator==(const DiffeoRecipe&, const DiffeoRecipe&) = default;
};

// The signed permutation a recipe induces on cohomology: sigma = delta and
// sign -1 on conjugated factors. Rejects recipes that pair factors of
// different dimensions, which no diffeomorphism of the product could do.
SignedPermutation induced_signed_permutation(const DiffeoRecipe& recipe,
                                             const RingSpec& spec);

struct Realization {
  DiffeoRecipe recipe;
  LinearSubstitution induced;
};

// Builds the recipe whose induced map is exactly p, and certifies the
// round trip by recomputing the induced substitution from the recipe.
Realization realize(const SignedPermutation& p);

struct Factorization {
  LinearSubstitution g;        // the composite isomorphism phi . h_star
  SignedPermutation g_normal;  // its signed-permutation normal form
  DiffeoRecipe recipe;         // a diffeomorphism inducing g
  LinearSubstitution f_star;   // g . (h_star)^{-1}, recovered exactly
  bool certified;
};

// Given a graded automorphism phi and the pullback h_star of a recipe
// diffeomorphism, forms g = phi . h_star, inverts h_star combinatorially
// through its signed permutation, and recovers f_star = g . (h_star)^{-1}.
// The result is certified: f_star equals phi entrywise, the two sides agree
// generator by generator under apply, and the recipe reinduces g. Throws
// NotAutomorphismError when an input is not a graded automorphism.
Factorization factor_isomorphism(const LinearSubstitution& phi,
                                 const LinearSubstitution& h_star);

}  // namespace rigidity
