#pragma once

// The generator pairs in dimensions 3 and 5, their irreducibility and
// theorem conditions, scalar-power classification and witness search.

#include <optional>
#include <string>
#include <vector>

#include "gen23/matgrp.hpp"
#include "gen23/report.hpp"
#include "gen23/reptools.hpp"

namespace gen23 {

enum class Target { SL3, SU3, SL5, SU5 };

std::string to_string(Target t);
/// "sl3", "su3", "sl5", "su5" (case-insensitive).
Target parse_target(std::string_view s);
inline bool is_unitary(Target t) { return t == Target::SU3 || t == Target::SU5; }
inline int dimension(Target t) { return t == Target::SL3 || t == Target::SU3 ? 3 : 5; }

struct GeneratorPair {
  Field field;
  int dim = 3;
  /// (a, b) in dimension 3, (b, c) in dimension 5.
  Elem p0, p1;
  Matrix x, y;

  Matrix z() const { return x * y; }
  std::vector<Matrix> gens() const { return {x, y}; }
};

/// x = [[-1,0,a],[0,-1,b],[0,0,1]], y the 3-cycle. (a,b) = (0,0) needs
/// allow_degenerate (the Alt(4) case, or a non-involution when p = 2).
GeneratorPair build_dim3(const Field& f, Elem a, Elem b, bool allow_degenerate = false);
/// The 5x5 pair with parameters (b, c), c != 0.
GeneratorPair build_dim5(const Field& f, Elem b, Elem c);

struct ConditionPart {
  std::string label;
  bool holds = false;
  nlohmann::json detail = nlohmann::json::object();
};

struct ConditionReport {
  std::vector<ConditionPart> parts;
  bool overall() const;
};

nlohmann::json to_json(const ConditionReport& r);

/// w of order 3 (or 1 when p = 3) in the smallest extension of f containing it.
struct OmegaContext {
  Field ext;
  FieldEmbedding embed;
  Elem omega;
  static OmegaContext make(const Field& f);
  Elem power(int j) const;
};

ConditionReport dim3_irreducibility_conditions(const Field& f, Elem a, Elem b);
ConditionReport dim5_irreducibility_conditions(const Field& f, Elem b, Elem c);

struct Dim3ScalarPowers {
  bool z5_scalar = false;  // predicted
  bool z7_scalar = false;  // predicted
  bool z5_necessary = false;  // a and b are roots of t^6 - 4t^3 - 1
  bool z7_necessary = false;  // the p = 2 pairs, or a, b nonzero roots of R
};

/// Requires ab != 1 and the irreducibility conditions; throws
/// std::invalid_argument otherwise unless check_hypotheses is false.
Dim3ScalarPowers scalar_power_classify_dim3(const Field& f, Elem a, Elem b, bool check_hypotheses = true);

/// Projective orders of xy (>= 10) and [x,y] (>= 5); throws if (b,c) fails
/// the irreducibility conditions.
ClaimReport scalar_power_bounds_dim5(const Field& f, Elem b, Elem c);

/// The numbered hypotheses of the theorem for `target`, evaluated at the free
/// parameter. Unitary targets take the field GF(q^2).
ConditionReport theorem_conditions(Target target, const Field& f, Elem param);

/// Generator parameters for the theorem's free parameter: SL3 (0,b),
/// SU3 (a,a^q), SL5 (0,c), SU5 (c^q-c-1, c).
GeneratorPair build_for_target(Target target, const Field& f, Elem param);

struct SearchResult {
  Elem param;
  GeneratorPair pair;
  ConditionReport conditions;
  /// Fixed witness from the constructions for small q instead of the generic search.
  bool special = false;
  std::string note;
};

/// Candidates: elements of order |f|-1 by coefficient vectors compared from
/// the constant term, then the remaining nonzero elements. order_hint limits
/// candidates to that multiplicative order.
std::optional<SearchResult> search_params(Target target, const Field& f, std::optional<u64> order_hint = std::nullopt);

/// Nonzero elements in search order.
std::vector<Elem> search_candidates(const Field& f);

/// {v1, y v1, y^2 v1} with v1 = (b, 1, 0) when ab = 1 and x, y act monomially
/// on it; nullopt otherwise. Throws on reducible input.
std::optional<std::vector<Vec>> dim3_monomial_basis(const Field& f, Elem a, Elem b);

/// Minimal polynomial over GF(p), low degree first.
std::vector<u64> minimal_polynomial(const Field& f, Elem a);
/// Field element from its minimal polynomial: the smallest root in search order.
std::optional<Elem> root_of(const Field& f, const std::vector<u64>& minpoly);

/// Outcome label for a dim-3 pair: reducible, monomial, Alt(5)-factor,
/// PSL2(7) or other-proper.
std::string dim3_outcome_label(const GeneratorPair& pair);

/// Expected label keyed by the minimal polynomial of a (b = a^q) for
/// q^2 in {4, 9, 25}; nullopt for values not listed.
std::optional<std::string> thm36_expected_label(const Field& f, Elem a);

struct TableBRow {
  u64 q;
  /// Over GF(p), low degree first.
  std::vector<u64> minpoly;
};

/// The six SU witness rows, q = 4, 7, 8, 9, 11, 13.
const std::vector<TableBRow>& table_b();

/// Irreducibility, root order q^2-1 and coprimality with the dimension-3
/// condition polynomials (t^q + w^j t + 2w^2j, t^6-4t^3-1, R) and the
/// dimension-5 ones (p1, p2); also evaluates both theorems at the root.
ClaimReport table_b_claim(const TableBRow& row);
/// The q = 3, 5 dimension-5 witnesses t^2-t-1 and t^2-t+2.
ClaimReport su5_small_witness_claim(u64 q);

}  // namespace gen23
