#include "gen23/engine.hpp"

#include <array>
#include <atomic>
#include <chrono>
#include <limits>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace gen23 {

namespace {

constexpr int kMaxEntries = 64;
using Entries = std::array<Elem, kMaxEntries>;

u64 mix(u64 x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

u64 hash_key(u64 k) { return mix(k); }
u64 hash_key(u128 k) { return mix(static_cast<u64>(k) ^ mix(static_cast<u64>(k >> 64))); }

// Linear probing; the zero key (zero matrix) marks an empty slot.
template <class Key>
class OpenSet {
 public:
  OpenSet() : slots_(1024, Key{0}), mask_(1023) {}

  bool insert(Key k) {
    if ((count_ + 1) * 4 > slots_.size() * 3) grow();
    std::size_t i = hash_key(k) & mask_;
    while (slots_[i] != Key{0}) {
      if (slots_[i] == k) return false;
      i = (i + 1) & mask_;
    }
    slots_[i] = k;
    ++count_;
    return true;
  }

  bool contains(Key k) const {
    std::size_t i = hash_key(k) & mask_;
    while (slots_[i] != Key{0}) {
      if (slots_[i] == k) return true;
      i = (i + 1) & mask_;
    }
    return false;
  }

 private:
  void grow() {
    std::vector<Key> old(slots_.size() * 2, Key{0});
    old.swap(slots_);
    mask_ = slots_.size() - 1;
    count_ = 0;
    for (Key k : old)
      if (k != Key{0}) insert(k);
  }

  std::vector<Key> slots_;
  std::size_t mask_;
  std::size_t count_ = 0;
};

struct BytesSet {
  std::unordered_set<std::string> s;
  bool insert(const std::string& k) { return s.insert(k).second; }
  bool contains(const std::string& k) const { return s.count(k) != 0; }
};

template <class Key>
struct BitCodec {
  int nn, bits;
  Key pack(const Entries& e) const {
    Key k = 0;
    for (int i = 0; i < nn; ++i) k |= static_cast<Key>(e[static_cast<std::size_t>(i)].v) << (bits * i);
    return k;
  }
  void unpack(Key k, Entries& e) const {
    const Key m = (Key{1} << bits) - 1;
    for (int i = 0; i < nn; ++i) e[static_cast<std::size_t>(i)].v = static_cast<std::uint32_t>((k >> (bits * i)) & m);
  }
};

struct ByteCodec {
  int nn, bits;
  std::string pack(const Entries& e) const {
    std::string k(static_cast<std::size_t>(3 * nn), '\0');
    for (int i = 0; i < nn; ++i)
      for (int b = 0; b < 3; ++b) k[static_cast<std::size_t>(3 * i + b)] = static_cast<char>((e[static_cast<std::size_t>(i)].v >> (8 * b)) & 0xff);
    return k;
  }
  void unpack(const std::string& k, Entries& e) const {
    for (int i = 0; i < nn; ++i) {
      std::uint32_t v = 0;
      for (int b = 0; b < 3; ++b) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(k[static_cast<std::size_t>(3 * i + b)])) << (8 * b);
      e[static_cast<std::size_t>(i)].v = v;
    }
  }
};

// Nonzero entries of a generator by column, for sparse right multiplication.
struct SparseGen {
  std::vector<std::vector<std::pair<int, Elem>>> cols;
};

template <class Key, class Set, class Codec>
ClosureResult run_closure(const std::vector<Matrix>& gens, const ClosureOptions& opts, const Codec& codec,
                          const char* width) {
  const Field& f = gens[0].field();
  const int n = gens[0].n();
  std::vector<SparseGen> sg;
  for (const auto& g : gens) {
    SparseGen s;
    s.cols.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (g(k, j) != f.zero()) s.cols[static_cast<std::size_t>(j)].emplace_back(k, g(k, j));
    sg.push_back(std::move(s));
  }

  Set set;
  std::vector<Key> queue;
  Entries cur{}, next{};
  for (int i = 0; i < n; ++i) cur[static_cast<std::size_t>(i * n + i)] = f.one();
  const Key id = codec.pack(cur);
  set.insert(id);
  queue.push_back(id);

  ClosureResult r;
  r.key_width = width;
  for (std::size_t qi = 0; qi < queue.size() && !r.truncated; ++qi) {
    codec.unpack(queue[qi], cur);
    for (const auto& s : sg) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Elem acc = f.zero();
          for (auto [k, h] : s.cols[static_cast<std::size_t>(j)])
            acc = f.add(acc, f.mul(cur[static_cast<std::size_t>(i * n + k)], h));
          next[static_cast<std::size_t>(i * n + j)] = acc;
        }
      Key k = codec.pack(next);
      if (set.insert(k)) {
        queue.push_back(k);
        if (opts.progress && (queue.size() & ((u64{1} << 20) - 1)) == 0) opts.progress(queue.size());
        if (queue.size() > opts.cap) {
          r.truncated = true;
          break;
        }
      }
    }
  }
  r.order = queue.size();
  for (u64 i = 1; i < f.q(); ++i) {
    Entries sc{};
    for (int d = 0; d < n; ++d) sc[static_cast<std::size_t>(d * n + d)] = f.from_index(i);
    if (set.contains(codec.pack(sc))) ++r.scalar_subgroup_order;
  }
  if (opts.keep_elements) {
    r.elements.reserve(queue.size());
    for (const auto& k : queue) {
      codec.unpack(k, cur);
      Matrix m(f, n);
      for (int i = 0; i < n * n; ++i) m(i / n, i % n) = cur[static_cast<std::size_t>(i)];
      r.elements.push_back(std::move(m));
    }
  }
  return r;
}

int bits_for(u64 q) {
  int b = 0;
  while ((u64{1} << b) < q) ++b;
  return std::max(b, 1);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string big_string(const BigInt& v) { return v.str(); }

nlohmann::json big_json(const BigInt& v) {
  if (v <= BigInt(std::numeric_limits<u64>::max())) return static_cast<u64>(v);
  return v.str();
}

// Packs a 3x3 (or small) matrix for hashing in the scans.
u64 key64(const Matrix& m, int bits) {
  u64 k = 0;
  for (std::size_t i = 0; i < m.data().size(); ++i) k |= static_cast<u64>(m.data()[i].v) << (bits * static_cast<int>(i));
  return k;
}

// Smallest key among the scalar multiples lambda*m, lambda in the center.
u64 canonical_key(const Matrix& m, const std::vector<Elem>& center, int bits) {
  u64 best = ~u64{0};
  for (Elem l : center) best = std::min(best, key64(m.scaled(l), bits));
  return best;
}

bool proj_power_scalar(const Matrix& m, int k) { return m.pow(k).is_scalar(); }

std::string general_label(const Matrix& x, const Matrix& y) {
  if (!meataxe_irreducible({x, y}).absolutely_irreducible) return "reducible";
  const Matrix z = x * y;
  if (proj_power_scalar(z, 5)) return "Alt(5)-factor";
  if (proj_power_scalar(z, 7) && proj_power_scalar(commutator(x, y), 4)) return "PSL2(7)";
  return "other-proper";
}

template <class Fn>
void parallel_for(std::size_t count, int threads, Fn fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < count; i = next++) fn(i);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

ClosureResult closure(const std::vector<Matrix>& gens, const ClosureOptions& opts) {
  if (gens.empty()) throw std::invalid_argument("closure: empty generator list");
  const Field& f = gens[0].field();
  const int n = gens[0].n();
  for (const auto& g : gens) {
    if (g.n() != n || !(g.field() == f)) throw std::invalid_argument("closure: generator mismatch");
    if (!g.invertible()) throw std::invalid_argument("closure: singular generator");
  }
  if (n * n > kMaxEntries) throw std::invalid_argument("closure: dimension too large");
  const int bits = bits_for(f.q());
  if (n * n * bits <= 64) return run_closure<u64, OpenSet<u64>>(gens, opts, BitCodec<u64>{n * n, bits}, "u64");
  if (n * n * bits <= 128) return run_closure<u128, OpenSet<u128>>(gens, opts, BitCodec<u128>{n * n, bits}, "u128");
  return run_closure<std::string, BytesSet>(gens, opts, ByteCodec{n * n, bits}, "bytes");
}

std::string TargetGroup::name() const {
  std::ostringstream os;
  os << (family == Family::SL ? "SL" : "SU") << n << '(' << q;
  if (family == Family::SU) os << "^2";
  os << ')';
  return os.str();
}

Field TargetGroup::field() const {
  u64 p;
  int m;
  prime_power(q, p, m);
  return Field::make(p, family == Family::SU ? 2 * m : m);
}

TargetGroup target_order(Family family, int n, u64 q) {
  u64 p;
  int m;
  if (n < 2) throw std::invalid_argument("target_order: n must be at least 2");
  if (!prime_power(q, p, m)) throw std::invalid_argument("target_order: q = " + std::to_string(q) + " is not a prime power");
  TargetGroup g{family, n, q, 1, 1};
  const BigInt Q(q);
  BigInt order = pow(Q, static_cast<unsigned>(n * (n - 1) / 2));
  for (int i = 2; i <= n; ++i) {
    const BigInt qi = pow(Q, static_cast<unsigned>(i));
    order *= family == Family::SL || i % 2 == 0 ? BigInt(qi - 1) : BigInt(qi + 1);
  }
  g.expected_order = order;
  g.center_order = gcd_u64(static_cast<u64>(n), family == Family::SL ? q - 1 : q + 1);
  return g;
}

TargetGroup target_for(Target t, u64 q) {
  return target_order(is_unitary(t) ? Family::SU : Family::SL, dimension(t), q);
}

std::vector<Matrix> classical_generators(const TargetGroup& g) {
  const Field f = g.field();
  const int n = g.n;
  std::vector<Matrix> out;
  if (g.family == Family::SL) {
    // transvections I + t^k E_ij, k < m: the t^k span F over the prime field
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Elem t = f.one();
        for (int k = 0; k < f.m(); ++k, t = f.mul(t, f.generator_t())) {
          Matrix e = Matrix::identity(f, n);
          e(i, j) = t;
          out.push_back(e);
        }
      }
    return out;
  }
  if (n != 3) throw std::invalid_argument("classical_generators: unitary groups only in dimension 3");
  // J = antidiag(1,1,1); keep det-1 matrices with g^T J g^sigma = J
  Matrix J(f, 3);
  for (int i = 0; i < 3; ++i) J(i, 2 - i) = f.one();
  auto keep = [&](const Matrix& m) {
    if (m.det() == f.one() && m.transpose() * J * m.sigma() == J && !m.is_identity()) out.push_back(m);
  };
  const u64 q = f.q();
  for (u64 u = 0; u < q; ++u)
    for (u64 v = 0; v < q; ++v)
      for (u64 w = 0; w < q; ++w) {
        Matrix up = Matrix::identity(f, 3), lo = Matrix::identity(f, 3);
        up(0, 1) = lo(1, 0) = f.from_index(u);
        up(0, 2) = lo(2, 0) = f.from_index(v);
        up(1, 2) = lo(2, 1) = f.from_index(w);
        keep(up);
        keep(lo);
      }
  for (u64 u = 1; u < q; ++u)
    for (u64 v = 1; v < q; ++v) {
      const Elem a = f.from_index(u), b = f.from_index(v);
      const Elem c = f.inv(f.mul(a, b));
      Matrix d(f, 3), w(f, 3);
      d(0, 0) = a, d(1, 1) = b, d(2, 2) = c;
      w(0, 2) = a, w(1, 1) = b, w(2, 0) = f.neg(c);
      keep(d);
      keep(w);
    }
  return out;
}

ClaimReport verify_generation(const SearchResult& witness, Target target, const TargetGroup& group,
                              const VerifyOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  const GeneratorPair& g = witness.pair;
  const Field& f = g.field;
  ClaimReport r{"generation-" + group.name(), group.name(), false, {}, 0};
  const Matrix z = g.z();
  r.data["target"] = to_json(group);
  r.data["param"] = f.format(witness.param);
  r.data["special_witness"] = witness.special;
  if (!witness.note.empty()) r.data["note"] = witness.note;
  r.data["conditions"] = to_json(witness.conditions);
  r.data["x"] = to_json(g.x);
  r.data["y"] = to_json(g.y);
  // Lemma 2.3 hypothesis
  r.data["xy6_nonscalar"] = !z.pow(6).is_scalar();

  if (group.expected_order <= BigInt(opts.cap)) {
    r.data["mode"] = "full";
    ClosureOptions co;
    co.cap = opts.cap;
    co.progress = opts.progress;
    const auto c = closure(g.gens(), co);
    r.data["closure"] = to_json(c);
    r.verdict = !c.truncated && BigInt(c.order) == group.expected_order;
  } else {
    r.data["mode"] = "partial";
    nlohmann::json checks = nlohmann::json::object();
    const auto mv = meataxe_irreducible(g.gens());
    checks["absolutely_irreducible"] = mv.absolutely_irreducible;
    bool forms_ok;
    if (is_unitary(target)) {
      forms_ok = has_nondegenerate_form(invariant_forms(g.gens(), Twist::Sigma, false));
      checks["hermitian_form"] = forms_ok;
    } else {
      const bool orth = has_nondegenerate_form(invariant_forms(g.gens(), Twist::Identity, true));
      const bool herm = f.is_square_extension() && has_nondegenerate_form(invariant_forms(g.gens(), Twist::Sigma, true));
      checks["no_orthogonal_form"] = !orth;
      checks["no_hermitian_form"] = !herm;
      forms_ok = !orth && !herm;
    }
    const u64 pz = projective_order(z);
    const u64 bound = g.dim == 3 ? 8 : 10;
    bool bounds = pz >= bound;
    checks["projective_order_xy"] = pz;
    if (g.dim == 5) {
      const u64 pc = projective_order(commutator(g.x, g.y));
      checks["projective_order_commutator"] = pc;
      bounds = bounds && pc >= 5;
    }
    bool divisor_ok = true;
    if (opts.witness_divisor) {
      const auto ord = element_order(z);
      divisor_ok = ord && *ord % *opts.witness_divisor == 0;
      checks["order_xy"] = ord ? nlohmann::json(*ord) : nlohmann::json(nullptr);
      checks["witness_divisor"] = *opts.witness_divisor;
      checks["divisible"] = divisor_ok;
    }
    checks["conditions_hold"] = witness.conditions.overall();
    r.data["checks"] = checks;
    r.verdict = mv.absolutely_irreducible && forms_ok && bounds && divisor_ok &&
                (witness.conditions.overall() || witness.special);
  }
  r.seconds = seconds_since(t0);
  return r;
}

NonGenerationCertificate nongeneration_scan(const TargetGroup& group, ScanMode mode, const ScanOptions& opts) {
  NonGenerationCertificate cert;
  cert.group = group;
  cert.mode = mode;
  const Field f = group.field();
  const BigInt proj = group.projective_order();
  auto proj_order = [&](const ClosureResult& c) { return c.order / std::max<u64>(c.scalar_subgroup_order, 1); };

  if (group.expected_order > BigInt(opts.cap)) throw CapExceeded("nongeneration_scan: " + group.name() + " exceeds the cap");

  if (mode == ScanMode::Canonical) {
    if (group.family != Family::SU || group.n != 3)
      throw std::invalid_argument("nongeneration_scan: canonical mode needs a unitary dimension-3 target");
    std::vector<Elem> params;
    for (u64 i = 1; i < f.q(); ++i) params.push_back(f.from_index(i));
    cert.cases.resize(params.size());
    std::vector<char> gen(params.size(), 0);
    parallel_for(params.size(), opts.threads, [&](std::size_t i) {
      const Elem a = params[i];
      const auto pair = build_dim3(f, a, f.sigma(a));
      ClosureOptions co;
      co.cap = opts.cap;
      const auto c = closure(pair.gens(), co);
      if (c.truncated) throw CapExceeded("nongeneration_scan: closure exceeded the cap");
      ScanCase sc{"a=" + f.format(a), dim3_outcome_label(pair), proj_order(c), thm36_expected_label(f, a),
                  has_nondegenerate_form(invariant_forms(pair.gens(), Twist::Sigma, false))};
      gen[i] = BigInt(sc.order) == proj;
      cert.cases[i] = std::move(sc);
    });
    cert.group_elements = 0;
    bool ok = true;
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (gen[i]) cert.generating_pair_found = true;
      const auto& sc = cert.cases[i];
      if (gen[i] || (sc.in_target && proj % sc.order != 0)) ok = false;
      if (sc.expected_label && *sc.expected_label != sc.label) ok = false;
    }
    cert.verdict = ok && !cert.generating_pair_found;
    return cert;
  }

  if (group.n * group.n * bits_for(f.q()) > 64) throw std::invalid_argument("nongeneration_scan: all-pairs needs 64-bit keys");
  ClosureOptions all;
  all.cap = opts.cap;
  all.keep_elements = true;
  const auto G = closure(classical_generators(group), all);
  if (G.truncated || BigInt(G.order) != group.expected_order)
    throw std::runtime_error("nongeneration_scan: enumerated " + std::to_string(G.order) + " elements, expected " +
                             big_string(group.expected_order));
  cert.group_elements = G.order;
  const int bits = bits_for(f.q());
  std::vector<Elem> center;
  for (const auto& m : G.elements)
    if (auto s = m.scalar_value()) center.push_back(*s);

  std::vector<Matrix> invols, order3;
  for (const auto& m : G.elements) {
    if (m.is_scalar()) continue;
    const u64 k = key64(m, bits);
    if (canonical_key(m, center, bits) != k) continue;
    const Matrix m2 = m * m;
    if (m2.is_scalar()) invols.push_back(m);
    else if ((m2 * m).is_scalar()) order3.push_back(m);
  }
  // one involution per conjugacy class of the projective group
  std::unordered_set<u64> seen;
  std::vector<Matrix> reps;
  std::vector<Matrix> inverses;
  for (const auto& g : G.elements) inverses.push_back(g.inverse());
  for (const auto& x : invols) {
    if (seen.count(key64(x, bits))) continue;
    reps.push_back(x);
    for (std::size_t i = 0; i < G.elements.size(); ++i)
      seen.insert(canonical_key(inverses[i] * x * G.elements[i], center, bits));
  }
  cert.involution_classes = reps.size();
  cert.order3_elements = order3.size();

  const std::size_t total = reps.size() * order3.size();
  cert.cases.resize(total);
  std::vector<char> gen(total, 0);
  parallel_for(total, opts.threads, [&](std::size_t idx) {
    const Matrix& x = reps[idx / order3.size()];
    const Matrix& y = order3[idx % order3.size()];
    ClosureOptions co;
    co.cap = G.order + 1;
    const auto c = closure({x, y}, co);
    ScanCase sc{"x" + std::to_string(idx / order3.size()) + ",y" + std::to_string(idx % order3.size()),
                general_label(x, y), proj_order(c), std::nullopt};
    gen[idx] = BigInt(sc.order) == proj;
    cert.cases[idx] = std::move(sc);
  });
  bool ok = !reps.empty() && !order3.empty();
  for (std::size_t i = 0; i < total; ++i) {
    if (gen[i]) cert.generating_pair_found = true;
    if (gen[i] || proj % cert.cases[i].order != 0) ok = false;
  }
  cert.verdict = ok && !cert.generating_pair_found;
  return cert;
}

nlohmann::json to_json(const ClosureResult& r) {
  return {{"order", r.order}, {"scalar_subgroup_order", r.scalar_subgroup_order}, {"truncated", r.truncated},
          {"key_width", r.key_width}};
}

nlohmann::json to_json(const TargetGroup& g) {
  return {{"name", g.name()}, {"family", g.family == Family::SL ? "SL" : "SU"}, {"n", g.n}, {"q", g.q},
          {"expected_order", big_json(g.expected_order)}, {"center_order", g.center_order},
          {"projective_order", big_json(g.projective_order())}};
}

std::string to_string(ScanMode m) { return m == ScanMode::AllPairs ? "all-pairs" : "canonical-scan"; }

nlohmann::json to_json(const NonGenerationCertificate& c) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& s : c.cases) {
    nlohmann::json j{{"id", s.id}, {"label", s.label}, {"order", s.order}};
    if (s.expected_label) j["expected_label"] = *s.expected_label;
    if (!s.in_target) j["in_target"] = false;
    cases.push_back(j);
  }
  return {{"group", to_json(c.group)},
          {"mode", to_string(c.mode)},
          {"verdict", c.verdict},
          {"generating_pair_found", c.generating_pair_found},
          {"group_elements", c.group_elements},
          {"involution_classes", c.involution_classes},
          {"order3_elements", c.order3_elements},
          {"cases", cases}};
}

}  // namespace gen23
