#include "twostar/modrep.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <variant>

#include "poly.hpp"
#include "twostar/error.hpp"

namespace twostar {

namespace {

using detail::Poly;

std::vector<GFMatrix> transposed(const std::vector<GFMatrix>& mats) {
  std::vector<GFMatrix> out;
  out.reserve(mats.size());
  for (const auto& m : mats) out.push_back(m.transpose());
  return out;
}

GFMatrix spin_mats(const std::vector<GFMatrix>& mats, unsigned p, std::size_t dim,
                   const GFVec& v) {
  if (v.is_zero()) throw Error(Errc::ZeroVector, "cannot spin the zero vector");
  RrefBasis basis(p, dim);
  std::vector<GFVec> queue{v};
  basis.insert(v);
  for (std::size_t i = 0; i < queue.size() && basis.size() < dim; ++i) {
    for (const auto& m : mats) {
      GFVec w = vec_mul(queue[i], m);
      if (basis.insert(w)) queue.push_back(std::move(w));
    }
  }
  return basis.basis();
}

// Spin images in discovery order: a standard basis determined by v alone.
GFMatrix spin_sequence(const std::vector<GFMatrix>& mats, unsigned p, std::size_t dim,
                       const GFVec& v) {
  RrefBasis basis(p, dim);
  GFMatrix seq(p, 0, dim);
  if (!basis.insert(v)) return seq;
  seq.append_row(v);
  for (std::size_t i = 0; i < seq.rows() && seq.rows() < dim; ++i) {
    for (const auto& m : mats) {
      GFVec w = vec_mul(seq.row(i), m);
      if (basis.insert(w)) seq.append_row(std::move(w));
    }
  }
  return seq;
}

GFMatrix evaluate_word(const AlgebraWord& word, const ActionModule& m) {
  std::vector<GFMatrix> pool;
  pool.push_back(GFMatrix::identity(m.p, m.dim));
  for (const auto& g : m.mats) pool.push_back(g);
  for (auto [i, j] : word.products) pool.push_back(pool[i] * pool[j]);
  GFMatrix theta(m.p, m.dim, m.dim);
  for (std::size_t i = 0; i < word.coeffs.size() && i < pool.size(); ++i) {
    if (word.coeffs[i]) theta = theta + pool[i].scaled(word.coeffs[i]);
  }
  return theta;
}

AlgebraWord random_word(const ActionModule& m, std::size_t attempt, std::mt19937_64& rng) {
  AlgebraWord word;
  std::size_t pool = 1 + m.mats.size();
  const std::size_t extra = m.mats.empty() ? 0 : 2 + attempt % 4;
  for (std::size_t i = 0; i < extra; ++i) {
    const std::size_t a = rng() % pool;
    const std::size_t b = 1 + rng() % (pool - 1);
    word.products.emplace_back(a, b);
    ++pool;
  }
  word.coeffs.resize(pool);
  for (auto& c : word.coeffs) c = static_cast<unsigned>(rng() % m.p);
  return word;
}

struct Split {
  GFMatrix sub;
};

std::variant<Split, IrreducibilityWitness> meataxe_step(const ActionModule& m,
                                                        std::mt19937_64& rng) {
  if (m.dim == 1) return IrreducibilityWitness{AlgebraWord{{}, {1}}, {m.p - 1, 1}};
  const std::vector<GFMatrix> dual = transposed(m.mats);
  for (std::size_t attempt = 0; attempt < 2000; ++attempt) {
    const AlgebraWord word = random_word(m, attempt, rng);
    const GFMatrix theta = evaluate_word(word, m);
    for (const Poly& f : detail::irreducible_factors(detail::charpoly(theta), m.p, rng)) {
      const GFMatrix n = detail::evaluate(f, theta);
      const GFMatrix kernel = left_nullspace(n);
      GFMatrix sub = spin_mats(m.mats, m.p, m.dim, kernel.row(0));
      if (sub.rows() < m.dim) return Split{std::move(sub)};
      if (kernel.rows() != detail::degree(f)) continue;
      const GFMatrix dual_kernel = left_nullspace(n.transpose());
      const GFMatrix dual_sub = spin_mats(dual, m.p, m.dim, dual_kernel.row(0));
      if (dual_sub.rows() < m.dim) {
        GFMatrix ann = nullspace(dual_sub);
        rref(ann);
        return Split{std::move(ann)};
      }
      return IrreducibilityWitness{word, f};
    }
  }
  throw Error(Errc::NotModule, "MeatAxe did not converge");
}

unsigned long long ipow(unsigned long long b, std::size_t e) {
  unsigned long long r = 1;
  while (e--) r *= b;
  return r;
}

bool isomorphic_by_hom_space(const ActionModule& a, const ActionModule& b) {
  const std::size_t d = a.dim;
  GFMatrix eqs(a.p, 0, d * d);
  for (std::size_t j = 0; j < a.mats.size(); ++j) {
    const GFMatrix& ma = a.mats[j];
    const GFMatrix& mb = b.mats[j];
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        GFVec row(a.p, d * d);
        for (std::size_t k = 0; k < d; ++k) {
          const unsigned x = ma.get(r, k);
          if (x) row.set(k * d + c, (row.get(k * d + c) + x) % a.p);
          const unsigned y = mb.get(k, c);
          if (y) row.set(r * d + k, (row.get(r * d + k) + a.p - y) % a.p);
        }
        if (!row.is_zero()) eqs.append_row(std::move(row));
      }
    }
  }
  return rank(eqs) < d * d;
}

}  // namespace

std::vector<GFMatrix> element_matrices(const ActionModule& m) {
  if (!m.group) throw Error(Errc::NotModule, "module has no group");
  const GroupTable& q = *m.group;
  const std::size_t n = q.order();
  std::vector<GFMatrix> mats(n);
  std::vector<bool> seen(n, false);
  mats[0] = GFMatrix::identity(m.p, m.dim);
  seen[0] = true;
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem a = queue[i];
    for (std::size_t j = 0; j < m.gens.size(); ++j) {
      const Elem b = q.mul(a, m.gens[j]);
      GFMatrix cand = mats[a] * m.mats[j];
      if (!seen[b]) {
        seen[b] = true;
        mats[b] = std::move(cand);
        queue.push_back(b);
      } else if (!(mats[b] == cand)) {
        throw Error(Errc::NotModule, "generator matrices violate a group relation");
      }
    }
  }
  if (queue.size() != n) throw Error(Errc::NotModule, "generators do not generate the group");
  return mats;
}

ActionModule make_module(GroupPtr group, unsigned p, std::vector<Elem> gens,
                         std::vector<GFMatrix> mats) {
  if (!group) throw Error(Errc::NotModule, "null group");
  if (!is_prime(p) || p > 255) throw Error(Errc::NotModule, "characteristic must be a prime below 256");
  if (gens.size() != mats.size()) throw Error(Errc::NotModule, "one matrix per generator required");
  const std::size_t d = mats.empty() ? 1 : mats.front().rows();
  for (std::size_t j = 0; j < mats.size(); ++j) {
    if (gens[j] >= group->order()) throw Error(Errc::NotModule, "generator out of range");
    if (mats[j].prime() != p || mats[j].rows() != d || mats[j].cols() != d) {
      throw Error(Errc::NotModule, "generator matrices must be square of equal size");
    }
    GFMatrix inv;
    if (!invert(mats[j], inv)) throw Error(Errc::NotModule, "generator matrix is singular");
  }
  ActionModule m{p, d, std::move(group), std::move(gens), std::move(mats), std::nullopt};
  element_matrices(m);
  return m;
}

ActionModule trivial_module(const GroupPtr& group, unsigned p) {
  const auto gens = generating_set(*group);
  std::vector<GFMatrix> mats(gens.size(), GFMatrix::identity(p, 1));
  return ActionModule{p, 1, group, gens, std::move(mats), std::nullopt};
}

ActionModule regular_module(const GroupPtr& group, unsigned p) {
  const GroupTable& q = *group;
  const std::size_t n = q.order();
  const auto gens = generating_set(q);
  std::vector<GFMatrix> mats;
  for (Elem s : gens) {
    GFMatrix m(p, n, n);
    for (Elem a = 0; a < n; ++a) m.set(a, q.mul(a, s), 1);
    mats.push_back(std::move(m));
  }
  return ActionModule{p, n, group, gens, std::move(mats), std::nullopt};
}

GFMatrix spin(const ActionModule& m, const GFVec& v) {
  if (v.size() != m.dim) throw Error(Errc::MalformedInput, "vector length differs from module dimension");
  return spin_mats(m.mats, m.p, m.dim, v);
}

ActionModule submodule(const ActionModule& m, const GFMatrix& sub) {
  GFMatrix basis = sub;
  const auto pivots = rref(basis);
  const std::size_t k = basis.rows();
  ActionModule out{m.p, k, m.group, m.gens, {}, std::nullopt};
  for (const auto& g : m.mats) {
    GFMatrix r(m.p, k, k);
    for (std::size_t i = 0; i < k; ++i) {
      const GFVec img = vec_mul(basis.row(i), g);
      for (std::size_t j = 0; j < k; ++j) r.set(i, j, img.get(pivots[j]));
    }
    out.mats.push_back(std::move(r));
  }
  return out;
}

ActionModule quotient_module(const ActionModule& m, const GFMatrix& sub) {
  RrefBasis basis(m.p, m.dim);
  for (const auto& row : sub.row_list()) basis.insert(row);
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.dim; ++c) {
    if (!basis.is_pivot(c)) free_cols.push_back(c);
  }
  const std::size_t k = free_cols.size();
  ActionModule out{m.p, k, m.group, m.gens, {}, std::nullopt};
  for (const auto& g : m.mats) {
    GFMatrix r(m.p, k, k);
    for (std::size_t i = 0; i < k; ++i) {
      GFVec img = g.row(free_cols[i]);
      basis.reduce(img);
      for (std::size_t j = 0; j < k; ++j) r.set(i, j, img.get(free_cols[j]));
    }
    out.mats.push_back(std::move(r));
  }
  return out;
}

bool brute_force_checkable(const ActionModule& m) {
  return m.dim <= 12 && ipow(m.p, m.dim) <= 4096;
}

std::optional<GFVec> find_proper_submodule_bruteforce(const ActionModule& m) {
  const unsigned long long total = ipow(m.p, m.dim);
  for (unsigned long long code = 1; code < total; ++code) {
    GFVec v(m.p, m.dim);
    unsigned long long c = code;
    for (std::size_t i = 0; i < m.dim; ++i, c /= m.p) v.set(i, static_cast<unsigned>(c % m.p));
    // One vector per line: leading coefficient 1.
    if (v.get(v.first_nonzero()) != 1) continue;
    if (spin_mats(m.mats, m.p, m.dim, v).rows() < m.dim) return v;
  }
  return std::nullopt;
}

bool are_isomorphic(const ActionModule& a, const ActionModule& b) {
  if (a.p != b.p || a.dim != b.dim || a.gens != b.gens) return false;
  if (!a.witness) return isomorphic_by_hom_space(a, b);
  const Poly& f = a.witness->factor;
  const GFMatrix ka = left_nullspace(detail::evaluate(f, evaluate_word(a.witness->word, a)));
  const GFMatrix kb = left_nullspace(detail::evaluate(f, evaluate_word(a.witness->word, b)));
  if (ka.rows() != kb.rows()) return false;
  const std::size_t k = kb.rows();
  const unsigned long long lines = (ipow(a.p, k) - 1) / (a.p - 1);
  if (k > 12 || lines > 4096) return isomorphic_by_hom_space(a, b);

  const GFMatrix base_a = spin_sequence(a.mats, a.p, a.dim, ka.row(0));
  GFMatrix base_a_inv;
  if (base_a.rows() != a.dim || !invert(base_a, base_a_inv)) return isomorphic_by_hom_space(a, b);
  std::vector<GFMatrix> std_a;
  for (const auto& g : a.mats) std_a.push_back(base_a * g * base_a_inv);

  const unsigned long long total = ipow(a.p, k);
  for (unsigned long long code = 1; code < total; ++code) {
    std::vector<unsigned> coef(k);
    unsigned long long c = code;
    for (std::size_t i = 0; i < k; ++i, c /= a.p) coef[i] = static_cast<unsigned>(c % a.p);
    const auto lead = std::find_if(coef.begin(), coef.end(), [](unsigned x) { return x != 0; });
    if (*lead != 1) continue;
    GFVec v(a.p, a.dim);
    for (std::size_t i = 0; i < k; ++i) v.add_scaled(kb.row(i), coef[i]);
    const GFMatrix base_b = spin_sequence(b.mats, b.p, b.dim, v);
    if (base_b.rows() != b.dim) continue;
    bool ok = true;
    for (std::size_t j = 0; j < b.mats.size() && ok; ++j) ok = base_b * b.mats[j] == std_a[j] * base_b;
    if (ok) return true;
  }
  return false;
}

std::vector<Factor> chop_irreducibles(const ActionModule& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Factor> factors;
  std::vector<ActionModule> stack{m};
  stack.back().witness.reset();
  while (!stack.empty()) {
    ActionModule cur = std::move(stack.back());
    stack.pop_back();
    auto step = meataxe_step(cur, rng);
    if (auto* w = std::get_if<IrreducibilityWitness>(&step)) {
      if (brute_force_checkable(cur)) {
        if (auto v = find_proper_submodule_bruteforce(cur)) {
          step = Split{spin(cur, *v)};
        }
      }
      if (std::holds_alternative<IrreducibilityWitness>(step)) {
        cur.witness = std::move(*w);
        auto match = std::find_if(factors.begin(), factors.end(), [&](const Factor& f) {
          return f.module.dim == cur.dim && are_isomorphic(f.module, cur);
        });
        if (match != factors.end()) {
          ++match->multiplicity;
        } else {
          factors.push_back(Factor{std::move(cur), 1});
        }
        continue;
      }
    }
    const GFMatrix& sub = std::get<Split>(step).sub;
    stack.push_back(quotient_module(cur, sub));
    stack.push_back(submodule(cur, sub));
  }
  std::stable_sort(factors.begin(), factors.end(),
                   [](const Factor& x, const Factor& y) { return x.module.dim < y.module.dim; });
  return factors;
}

std::vector<ActionModule> irreducible_modules(const GroupPtr& group, unsigned p,
                                              std::size_t max_dim, std::uint64_t seed) {
  if (max_dim == 0) return {};
  if (is_p_group(*group, p)) return {trivial_module(group, p)};
  std::vector<ActionModule> out;
  for (auto& f : chop_irreducibles(regular_module(group, p), seed)) {
    if (f.module.dim <= max_dim) out.push_back(std::move(f.module));
  }
  return out;
}

std::string to_mod1(const ActionModule& m) {
  std::ostringstream out;
  out << "MOD1 " << m.p << ' ' << m.dim << ' ' << m.mats.size() << '\n';
  for (std::size_t j = 0; j < m.mats.size(); ++j) {
    out << "gen " << m.gens[j] << '\n';
    for (std::size_t r = 0; r < m.dim; ++r) {
      for (std::size_t c = 0; c < m.dim; ++c) {
        if (c) out << ' ';
        out << m.mats[j].get(r, c);
      }
      out << '\n';
    }
  }
  return out.str();
}

ActionModule parse_mod1(std::string_view text, GroupPtr group) {
  std::istringstream in{std::string(text)};
  std::string magic;
  unsigned p = 0;
  std::size_t d = 0, k = 0;
  if (!(in >> magic >> p >> d >> k) || magic != "MOD1" || d == 0) {
    throw Error(Errc::MalformedInput, "bad MOD1 header");
  }
  std::vector<Elem> gens;
  std::vector<GFMatrix> mats;
  for (std::size_t j = 0; j < k; ++j) {
    std::string tag;
    Elem e = 0;
    if (!(in >> tag >> e) || tag != "gen") throw Error(Errc::MalformedInput, "expected gen line");
    GFMatrix m(p, d, d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        unsigned v = 0;
        if (!(in >> v) || v >= p) throw Error(Errc::MalformedInput, "bad matrix entry");
        m.set(r, c, v);
      }
    }
    gens.push_back(e);
    mats.push_back(std::move(m));
  }
  if (k == 0) {
    ActionModule out = trivial_module(group, p);
    if (!out.mats.empty() || d != 1) throw Error(Errc::MalformedInput, "generator-free module must be trivial");
    return out;
  }
  return make_module(std::move(group), p, std::move(gens), std::move(mats));
}

}  // namespace twostar
