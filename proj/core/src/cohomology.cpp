#include "twostar/cohomology.hpp"

#include "twostar/error.hpp"

namespace twostar {

namespace {

// rho[q] = M_{q^-1}, so that q.v = v * rho[q] is a left action.
std::vector<GFMatrix> left_action(const GroupTable& q, const ActionModule& m) {
  if (!m.group || m.group->order() != q.order()) {
    throw Error(Errc::NotModule, "module belongs to a different group");
  }
  const auto mats = element_matrices(m);
  std::vector<GFMatrix> rho(q.order());
  for (Elem a = 0; a < q.order(); ++a) rho[a] = mats[q.inv(a)];
  return rho;
}

void add_at(GFVec& row, std::size_t i, unsigned c, unsigned p) {
  if (c % p) row.set(i, (row.get(i) + c) % p);
}

std::size_t unknowns(const GroupTable& q, const ActionModule& m) {
  return (q.order() - 1) * (q.order() - 1) * m.dim;
}

std::size_t ipow(unsigned b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

GFVec Cocycle::value(Elem q1, Elem q2) const {
  GFVec v(values.prime(), dim);
  if (q1 == 0 || q2 == 0) return v;
  for (std::size_t k = 0; k < dim; ++k) v.set(k, values.get(coordinate(order, dim, q1, q2, k)));
  return v;
}

Cocycle zero_cocycle(const ActionModule& m) {
  const std::size_t n = m.group->order();
  return Cocycle{n, m.dim, GFVec(m.p, (n - 1) * (n - 1) * m.dim)};
}

Cocycle cocycle_from_table(const ActionModule& m, const std::vector<std::vector<GFVec>>& table) {
  const std::size_t n = m.group->order();
  if (table.size() != n) throw Error(Errc::MalformedInput, "cocycle table has wrong size");
  Cocycle f = zero_cocycle(m);
  for (Elem a = 0; a < n; ++a) {
    if (table[a].size() != n) throw Error(Errc::MalformedInput, "cocycle table has wrong size");
    for (Elem b = 0; b < n; ++b) {
      const GFVec& v = table[a][b];
      if (v.size() != m.dim) throw Error(Errc::MalformedInput, "cocycle value has wrong length");
      if (a == 0 || b == 0) {
        if (!v.is_zero()) throw Error(Errc::NotNormalized, "f(1,q) and f(q,1) must vanish");
        continue;
      }
      for (std::size_t k = 0; k < m.dim; ++k) {
        f.values.set(Cocycle::coordinate(n, m.dim, a, b, k), v.get(k));
      }
    }
  }
  return f;
}

GFMatrix cocycle_space(const GroupTable& q, const ActionModule& m) {
  const auto rho = left_action(q, m);
  const std::size_t n = q.order();
  const std::size_t d = m.dim;
  const unsigned p = m.p;
  const std::size_t u = unknowns(q, m);
  RrefBasis eqs(p, u);
  auto at = [&](Elem a, Elem b, std::size_t k) { return Cocycle::coordinate(n, d, a, b, k); };
  for (Elem q1 = 1; q1 < n && eqs.size() < u; ++q1) {
    for (Elem q2 = 1; q2 < n; ++q2) {
      const Elem q12 = q.mul(q1, q2);
      for (Elem q3 = 1; q3 < n; ++q3) {
        const Elem q23 = q.mul(q2, q3);
        for (std::size_t k = 0; k < d; ++k) {
          GFVec row(p, u);
          for (std::size_t j = 0; j < d; ++j) add_at(row, at(q2, q3, j), rho[q1].get(j, k), p);
          if (q12 != 0) add_at(row, at(q12, q3, k), p - 1, p);
          if (q23 != 0) add_at(row, at(q1, q23, k), 1, p);
          add_at(row, at(q1, q2, k), p - 1, p);
          if (!row.is_zero()) eqs.insert(std::move(row));
        }
      }
    }
  }
  return nullspace(eqs.basis());
}

GFMatrix coboundary_space(const GroupTable& q, const ActionModule& m) {
  const auto rho = left_action(q, m);
  const std::size_t n = q.order();
  const std::size_t d = m.dim;
  const unsigned p = m.p;
  const std::size_t u = unknowns(q, m);
  RrefBasis span(p, u);
  auto at = [&](Elem a, Elem b, std::size_t k) { return Cocycle::coordinate(n, d, a, b, k); };
  // delta c (q1,q2) = q1.c(q2) - c(q1 q2) + c(q1) for c the unit function at (target, k).
  for (Elem target = 1; target < n; ++target) {
    for (std::size_t k = 0; k < d; ++k) {
      GFVec row(p, u);
      for (Elem q1 = 1; q1 < n; ++q1) {
        for (std::size_t j = 0; j < d; ++j) add_at(row, at(q1, target, j), rho[q1].get(k, j), p);
        const Elem q2 = q.mul(q.inv(q1), target);
        if (q2 != 0) add_at(row, at(q1, q2, k), p - 1, p);
      }
      for (Elem q2 = 1; q2 < n; ++q2) add_at(row, at(target, q2, k), 1, p);
      if (!row.is_zero()) span.insert(std::move(row));
    }
  }
  return span.basis();
}

std::vector<Cocycle> h2_reps(const GroupTable& q, const ActionModule& m, std::size_t cap) {
  const GFMatrix z2 = cocycle_space(q, m);
  const GFMatrix b2 = coboundary_space(q, m);
  RrefBasis span(m.p, unknowns(q, m));
  for (const auto& row : b2.row_list()) span.insert(row);
  std::vector<GFVec> complement;
  for (const auto& row : z2.row_list()) {
    if (span.insert(row)) complement.push_back(row);
  }
  unsigned long long total = 1;
  for (std::size_t i = 0; i < complement.size(); ++i) {
    total *= m.p;
    if (total > cap) throw Error(Errc::CohomologyTooLarge, "H^2 exceeds the configured cap");
  }
  std::vector<Cocycle> out;
  out.reserve(total);
  for (unsigned long long code = 0; code < total; ++code) {
    Cocycle f = zero_cocycle(m);
    unsigned long long c = code;
    for (std::size_t i = 0; i < complement.size(); ++i, c /= m.p) {
      f.values.add_scaled(complement[i], static_cast<unsigned>(c % m.p));
    }
    out.push_back(std::move(f));
  }
  return out;
}

bool is_cocycle(const GroupTable& q, const ActionModule& m, const Cocycle& f) {
  const auto rho = left_action(q, m);
  const std::size_t n = q.order();
  if (f.order != n || f.dim != m.dim || f.values.size() != unknowns(q, m)) return false;
  for (Elem q1 = 1; q1 < n; ++q1) {
    for (Elem q2 = 1; q2 < n; ++q2) {
      for (Elem q3 = 1; q3 < n; ++q3) {
        GFVec lhs = vec_mul(f.value(q2, q3), rho[q1]);
        lhs.add_scaled(f.value(q.mul(q1, q2), q3), m.p - 1);
        lhs.add_scaled(f.value(q1, q.mul(q2, q3)), 1);
        lhs.add_scaled(f.value(q1, q2), m.p - 1);
        if (!lhs.is_zero()) return false;
      }
    }
  }
  return true;
}

Extension extension_from_cocycle(const GroupTable& q, const ActionModule& m, const Cocycle& f) {
  if (f.order != q.order() || f.dim != m.dim || f.values.size() != unknowns(q, m) ||
      f.values.prime() != m.p) {
    throw Error(Errc::MalformedInput, "cocycle does not match the module");
  }
  if (!is_cocycle(q, m, f)) throw Error(Errc::NotCocycle, "cocycle identity fails");
  const auto rho = left_action(q, m);
  const std::size_t n = q.order();
  const std::size_t d = m.dim;
  const unsigned p = m.p;
  const std::size_t nsize = ipow(p, d);

  auto decode = [&](std::size_t code) {
    GFVec v(p, d);
    for (std::size_t k = 0; k < d; ++k, code /= p) v.set(k, static_cast<unsigned>(code % p));
    return v;
  };
  auto encode = [&](const GFVec& v) {
    std::size_t code = 0;
    for (std::size_t k = d; k-- > 0;) code = code * p + v.get(k);
    return code;
  };
  auto add = [&](std::size_t a, std::size_t b) {
    std::size_t out = 0, scale = 1;
    for (std::size_t k = 0; k < d; ++k, a /= p, b /= p, scale *= p) out += (a % p + b % p) % p * scale;
    return out;
  };

  std::vector<std::vector<std::size_t>> act(n, std::vector<std::size_t>(nsize));
  for (Elem a = 0; a < n; ++a) {
    for (std::size_t code = 0; code < nsize; ++code) act[a][code] = encode(vec_mul(decode(code), rho[a]));
  }
  std::vector<std::size_t> fcode(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) fcode[a * n + b] = encode(f.value(a, b));
  }

  const std::size_t order = nsize * n;
  std::vector<Elem> flat(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    const Elem q1 = static_cast<Elem>(x / nsize);
    const std::size_t v1 = x % nsize;
    for (std::size_t y = 0; y < order; ++y) {
      const Elem q2 = static_cast<Elem>(y / nsize);
      const std::size_t v2 = y % nsize;
      const std::size_t v = add(add(v1, act[q1][v2]), fcode[q1 * n + q2]);
      flat[x * order + y] = static_cast<Elem>(q.mul(q1, q2) * nsize + v);
    }
  }
  Extension ext{GroupTable::from_flat(order, std::move(flat)), {}, {}};
  ext.embedding.resize(nsize);
  for (std::size_t code = 0; code < nsize; ++code) ext.embedding[code] = static_cast<Elem>(code);
  ext.projection.resize(order);
  for (std::size_t x = 0; x < order; ++x) ext.projection[x] = static_cast<Elem>(x / nsize);
  return ext;
}

}  // namespace twostar
