#pragma once

// Irreducibility verdicts for matrix groups given by generators, commutant
// dimensions, and invariant bilinear / sesquilinear forms.

#include <optional>
#include <vector>

#include "gen23/matgrp.hpp"
#include "json.hpp"

namespace gen23 {

struct ModuleVerdict {
  bool irreducible = false;
  bool absolutely_irreducible = false;
  /// Basis of a proper nonzero invariant subspace when reducible.
  std::vector<Vec> witness;
};

enum class Twist { Identity, Sigma };

struct FormSolution {
  Twist twist = Twist::Identity;
  /// lambda_g for each generator: g^T J g^tau = lambda_g J.
  std::vector<Elem> character;
  std::vector<Matrix> basis;
  std::optional<Matrix> nondegenerate;
};

/// Smallest subspace containing `vectors` and invariant under `gens`.
std::vector<Vec> spin(const std::vector<Matrix>& gens, const std::vector<Vec>& vectors);
bool is_invariant(const std::vector<Matrix>& gens, const std::vector<Vec>& basis);

int commutant_dimension(const std::vector<Matrix>& gens);

/// Holt-Rees MeatAxe with Norton's criterion; randomness is seeded from the
/// generator entries. Falls back to spinning every vector when unlucky and
/// q^n is small.
ModuleVerdict meataxe_irreducible(const std::vector<Matrix>& gens);

/// All invariant lines and planes of a 3-dimensional module, q <= 121.
std::vector<std::vector<Vec>> brute_submodules_dim3(const std::vector<Matrix>& gens);

/// Solves g^T J g^tau = lambda_g J. Without up_to_scalars only the trivial
/// character is tried; otherwise every character with lambda_g^ord(g) = 1
/// that lives in the field, keeping nonzero solution spaces.
std::vector<FormSolution> invariant_forms(const std::vector<Matrix>& gens, Twist twist, bool up_to_scalars);
/// True if some returned space contains an invertible J.
bool has_nondegenerate_form(const std::vector<FormSolution>& sols);

nlohmann::json to_json(const ModuleVerdict& v, const Field& f);
nlohmann::json to_json(const FormSolution& s);

}  // namespace gen23
