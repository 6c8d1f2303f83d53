#include "gen23/reptools.hpp"

#include <random>
#include <stdexcept>

namespace gen23 {

namespace {

void check_gens(const std::vector<Matrix>& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  for (const auto& g : gens)
    if (g.n() != gens[0].n() || !(g.field() == gens[0].field())) throw std::invalid_argument("generator mismatch");
}

u64 seed_of(const std::vector<Matrix>& gens) {
  u64 h = 1469598103934665603ULL;
  for (const auto& g : gens)
    for (Elem e : g.data()) {
      h ^= e.v;
      h *= 1099511628211ULL;
    }
  return h;
}

/// Invariant subspace of gens orthogonal to a gens^T-invariant subspace.
std::vector<Vec> annihilator(const Field& f, const std::vector<Vec>& u, int n) { return nullspace(f, u, n); }

Vec index_vector(const Field& f, int n, u64 idx) {
  Vec v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] = f.from_index(idx % f.q());
    idx /= f.q();
  }
  return v;
}

std::vector<Matrix> transposes(const std::vector<Matrix>& gens) {
  std::vector<Matrix> t;
  for (const auto& g : gens) t.push_back(g.transpose());
  return t;
}

std::optional<ModuleVerdict> brute_spin(const std::vector<Matrix>& gens) {
  const Field& f = gens[0].field();
  const int n = gens[0].n();
  u128 total = 1;
  for (int i = 0; i < n; ++i) total *= f.q();
  if (total > 1000000) return std::nullopt;
  for (u64 idx = 1; idx < static_cast<u64>(total); ++idx) {
    Vec v = index_vector(f, n, idx);
    // only normalized representatives: first nonzero coordinate is one
    std::size_t k = 0;
    while (v[k] == f.zero()) ++k;
    if (v[k] != f.one()) continue;
    auto s = spin(gens, {v});
    if (static_cast<int>(s.size()) < n) return ModuleVerdict{false, false, s};
  }
  return ModuleVerdict{true, false, {}};
}

}  // namespace

std::vector<Vec> spin(const std::vector<Matrix>& gens, const std::vector<Vec>& vectors) {
  const Field& f = gens[0].field();
  std::vector<Vec> basis;  // kept in reduced echelon form
  std::vector<Vec> queue;
  auto try_add = [&](const Vec& v) {
    auto ext = basis;
    ext.push_back(v);
    auto piv = row_reduce(f, ext);
    if (ext.size() > basis.size()) {
      basis = std::move(ext);
      queue.push_back(v);
    }
  };
  for (const auto& v : vectors) try_add(v);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) try_add(g * queue[i]);
  return basis;
}

bool is_invariant(const std::vector<Matrix>& gens, const std::vector<Vec>& basis) {
  const Field& f = gens[0].field();
  for (const auto& g : gens)
    for (const auto& v : basis)
      if (!in_span(f, basis, g * v)) return false;
  return true;
}

int commutant_dimension(const std::vector<Matrix>& gens) {
  check_gens(gens);
  const Field& f = gens[0].field();
  const int n = gens[0].n();
  std::vector<Vec> eqs;
  // (A g - g A)_{ij} = sum_k A_ik g_kj - g_ik A_kj; unknown A_rs at index r*n+s
  for (const auto& g : gens)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec row(static_cast<std::size_t>(n * n), f.zero());
        for (int k = 0; k < n; ++k) {
          auto& a = row[static_cast<std::size_t>(i * n + k)];
          a = f.add(a, g(k, j));
          auto& b = row[static_cast<std::size_t>(k * n + j)];
          b = f.sub(b, g(i, k));
        }
        eqs.push_back(std::move(row));
      }
  return n * n - rank(f, std::move(eqs));
}

ModuleVerdict meataxe_irreducible(const std::vector<Matrix>& gens) {
  check_gens(gens);
  const Field& f = gens[0].field();
  const int n = gens[0].n();
  if (n == 1) return {true, true, {}};
  std::mt19937_64 rng(seed_of(gens));
  const auto gt = transposes(gens);
  std::vector<Matrix> words = gens;
  ModuleVerdict result;
  bool decided = false;
  for (int attempt = 0; attempt < 64 && !decided; ++attempt) {
    words.push_back(words[rng() % words.size()] * words[rng() % words.size()]);
    Matrix A(f, n);
    const std::size_t from = words.size() > 6 ? words.size() - 6 : 0;
    for (std::size_t i = from; i < words.size(); ++i) A = A + words[i].scaled(f.from_index(rng() % f.q()));
    for (const auto& term : factorize(charpoly(A))) {
      // N = factor(A)
      Matrix N(f, n);
      for (int i = term.factor.degree(); i >= 0; --i) N = N * A + Matrix::scalar(f, n, term.factor.coeff(i));
      std::vector<Vec> rows;
      for (int i = 0; i < n; ++i) rows.push_back(N.row(i));
      auto ker = nullspace(f, rows, n);
      auto s = spin(gens, {ker[0]});
      if (static_cast<int>(s.size()) < n) {
        result = {false, false, s};
        decided = true;
        break;
      }
      if (static_cast<int>(ker.size()) != term.factor.degree()) continue;
      const Matrix Nt = N.transpose();
      std::vector<Vec> trows;
      for (int i = 0; i < n; ++i) trows.push_back(Nt.row(i));
      auto kert = nullspace(f, trows, n);
      auto st = spin(gt, {kert[0]});
      if (static_cast<int>(st.size()) < n) {
        result = {false, false, annihilator(f, st, n)};
      } else {
        result = {true, false, {}};
      }
      decided = true;
      break;
    }
  }
  if (!decided) {
    auto b = brute_spin(gens);
    if (!b) throw std::runtime_error("meataxe: no decision reached");
    result = *b;
  }
  if (result.irreducible) result.absolutely_irreducible = commutant_dimension(gens) == 1;
  return result;
}

std::vector<std::vector<Vec>> brute_submodules_dim3(const std::vector<Matrix>& gens) {
  check_gens(gens);
  const Field& f = gens[0].field();
  if (gens[0].n() != 3) throw std::invalid_argument("brute_submodules_dim3: dimension must be 3");
  if (f.q() > 121) throw std::invalid_argument("brute_submodules_dim3: field too large");
  const auto gt = transposes(gens);
  std::vector<std::vector<Vec>> lines, planes;
  const u64 total = f.q() * f.q() * f.q();
  for (u64 idx = 1; idx < total; ++idx) {
    Vec v = index_vector(f, 3, idx);
    std::size_t k = 0;
    while (v[k] == f.zero()) ++k;
    if (v[k] != f.one()) continue;
    if (is_invariant(gens, {v})) lines.push_back({v});
    if (is_invariant(gt, {v})) planes.push_back(annihilator(f, {v}, 3));
  }
  lines.insert(lines.end(), planes.begin(), planes.end());
  return lines;
}

std::vector<FormSolution> invariant_forms(const std::vector<Matrix>& gens, Twist twist, bool up_to_scalars) {
  check_gens(gens);
  const Field& f = gens[0].field();
  const int n = gens[0].n();
  if (twist == Twist::Sigma && !f.is_square_extension())
    throw std::invalid_argument("invariant_forms: sigma twist needs a square extension field");

  std::vector<std::vector<Elem>> choices;
  for (const auto& g : gens) {
    std::vector<Elem> c;
    if (!up_to_scalars) {
      c.push_back(f.one());
    } else {
      auto ord = element_order(g);
      if (!ord) throw std::runtime_error("invariant_forms: generator order too large");
      for (u64 i = 1; i < f.q(); ++i) {
        const Elem l = f.from_index(i);
        if (*ord % f.order(l) == 0) c.push_back(l);
      }
    }
    choices.push_back(std::move(c));
  }

  std::vector<FormSolution> out;
  std::vector<std::size_t> pick(gens.size(), 0);
  while (true) {
    std::vector<Elem> chi;
    for (std::size_t g = 0; g < gens.size(); ++g) chi.push_back(choices[g][pick[g]]);
    // (g^T J h)_{ij} = sum_{k,l} g_ki J_kl h_lj, h = g^tau
    std::vector<Vec> eqs;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const Matrix& g = gens[gi];
      const Matrix h = twist == Twist::Sigma ? g.sigma() : g;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Vec row(static_cast<std::size_t>(n * n), f.zero());
          for (int k = 0; k < n; ++k) {
            if (g(k, i) == f.zero()) continue;
            for (int l = 0; l < n; ++l) row[static_cast<std::size_t>(k * n + l)] = f.mul(g(k, i), h(l, j));
          }
          auto& d = row[static_cast<std::size_t>(i * n + j)];
          d = f.sub(d, chi[gi]);
          eqs.push_back(std::move(row));
        }
    }
    auto ns = nullspace(f, std::move(eqs), n * n);
    if (!ns.empty() || !up_to_scalars) {
      FormSolution s{twist, chi, {}, std::nullopt};
      for (const auto& v : ns) {
        Matrix J(f, n);
        for (int k = 0; k < n * n; ++k) J(k / n, k % n) = v[static_cast<std::size_t>(k)];
        s.basis.push_back(J);
      }
      // search for an invertible member: basis elements, all combinations when few, else random ones
      for (const auto& J : s.basis)
        if (J.invertible()) {
          s.nondegenerate = J;
          break;
        }
      u128 combos = 1;
      for (std::size_t i = 0; i < s.basis.size(); ++i) combos *= f.q();
      if (!s.nondegenerate && s.basis.size() > 1 && combos <= 100000) {
        for (u64 idx = 1; idx < static_cast<u64>(combos) && !s.nondegenerate; ++idx) {
          Matrix J(f, n);
          u64 r = idx;
          for (const auto& B : s.basis) {
            J = J + B.scaled(f.from_index(r % f.q()));
            r /= f.q();
          }
          if (J.invertible()) s.nondegenerate = J;
        }
      }
      if (!s.nondegenerate && s.basis.size() > 1) {
        std::mt19937_64 r(seed_of(gens));
        for (int t = 0; t < 256 && !s.nondegenerate; ++t) {
          Matrix J(f, n);
          for (const auto& B : s.basis) J = J + B.scaled(f.from_index(r() % f.q()));
          if (J.invertible()) s.nondegenerate = J;
        }
      }
      out.push_back(std::move(s));
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return out;
}

bool has_nondegenerate_form(const std::vector<FormSolution>& sols) {
  for (const auto& s : sols)
    if (s.nondegenerate) return true;
  return false;
}

nlohmann::json to_json(const ModuleVerdict& v, const Field& f) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& vec : v.witness) {
    nlohmann::json r = nlohmann::json::array();
    for (Elem e : vec) r.push_back(f.format(e));
    w.push_back(r);
  }
  return {{"irreducible", v.irreducible}, {"absolutely_irreducible", v.absolutely_irreducible}, {"witness", w}};
}

nlohmann::json to_json(const FormSolution& s) {
  nlohmann::json j{{"twist", s.twist == Twist::Sigma ? "sigma" : "id"}};
  nlohmann::json chi = nlohmann::json::array();
  nlohmann::json basis = nlohmann::json::array();
  if (!s.basis.empty() || s.nondegenerate) {
    const Field& f = s.basis.empty() ? s.nondegenerate->field() : s.basis[0].field();
    for (Elem e : s.character) chi.push_back(f.format(e));
  }
  for (const auto& J : s.basis) basis.push_back(to_json(J));
  j["character"] = chi;
  j["dimension"] = s.basis.size();
  j["basis"] = basis;
  j["nondegenerate"] = s.nondegenerate ? to_json(*s.nondegenerate) : nlohmann::json(nullptr);
  return j;
}

}  // namespace gen23
