#include "poly.hpp"

#include <algorithm>
#include <utility>

namespace twostar::detail {

std::size_t degree(const Poly& f) { return f.empty() ? 0 : f.size() - 1; }

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_sub(const Poly& a, const Poly& b, unsigned p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

void poly_divmod(const Poly& a, const Poly& b, unsigned p, Poly& q, Poly& r) {
  r = a;
  trim(r);
  q.clear();
  const std::size_t db = b.size() - 1;
  if (r.size() < b.size()) return;
  q.assign(r.size() - db, 0);
  const unsigned lead_inv = inv_mod(b.back(), p);
  for (std::size_t i = r.size(); i-- > db;) {
    const unsigned c = r[i] * lead_inv % p;
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + (p - c) * b[j]) % p;
  }
  trim(q);
  trim(r);
}

Poly poly_mod(const Poly& a, const Poly& m, unsigned p) {
  Poly q, r;
  poly_divmod(a, m, p, q, r);
  return r;
}

Poly poly_monic(const Poly& f, unsigned p) {
  if (f.empty()) return f;
  const unsigned c = inv_mod(f.back(), p);
  Poly r = f;
  for (auto& v : r) v = v * c % p;
  return r;
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a, p);
}

Poly poly_derivative(const Poly& f, unsigned p) {
  if (f.size() <= 1) return {};
  Poly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = static_cast<unsigned>(i % p) * f[i] % p;
  trim(d);
  return d;
}

Poly poly_powmod(Poly base, unsigned long long e, const Poly& m, unsigned p) {
  Poly result{1};
  base = poly_mod(base, m, p);
  while (e) {
    if (e & 1) result = poly_mod(poly_mul(result, base, p), m, p);
    e >>= 1;
    if (e) base = poly_mod(poly_mul(base, base, p), m, p);
  }
  return poly_mod(result, m, p);
}

Poly charpoly(const GFMatrix& a) {
  const unsigned p = a.prime();
  const std::size_t n = a.rows();
  std::vector<std::vector<unsigned>> h = a.to_ints();
  // Similarity transform to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][m]);
    }
    const unsigned inv = inv_mod(h[m][m - 1], p);
    for (std::size_t j = m + 1; j < n; ++j) {
      const unsigned u = h[j][m - 1] * inv % p;
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[j][c] = (h[j][c] + (p - u) * h[m][c]) % p;
      for (std::size_t r = 0; r < n; ++r) h[r][m] = (h[r][m] + u * h[r][j]) % p;
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_i h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}, 1-based.
  std::vector<Poly> ps(n + 1);
  ps[0] = Poly{1};
  for (std::size_t k = 1; k <= n; ++k) {
    Poly next = poly_mul(ps[k - 1], Poly{(p - h[k - 1][k - 1]) % p, 1}, p);
    unsigned t = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      t = t * h[i][i - 1] % p;
      if (t == 0) break;
      const unsigned coef = h[i - 1][k - 1] * t % p;
      if (coef) next = poly_sub(next, poly_mul(ps[i - 1], Poly{coef}, p), p);
    }
    ps[k] = std::move(next);
  }
  return ps[n];
}

namespace {

Poly pth_root(const Poly& f, unsigned p) {
  Poly r;
  for (std::size_t i = 0; i < f.size(); i += p) r.push_back(f[i]);
  trim(r);
  return r;
}

Poly exact_div(const Poly& a, const Poly& b, unsigned p) {
  Poly q, r;
  poly_divmod(a, b, p, q, r);
  return q;
}

// Squarefree polynomials whose irreducible factors are exactly those of f.
void squarefree_parts(Poly f, unsigned p, std::vector<Poly>& out) {
  f = poly_monic(f, p);
  if (degree(f) == 0) return;
  const Poly d = poly_derivative(f, p);
  if (d.empty()) {
    squarefree_parts(pth_root(f, p), p, out);
    return;
  }
  Poly c = poly_gcd(f, d, p);
  const Poly w = exact_div(f, c, p);
  out.push_back(w);
  for (Poly g = poly_gcd(c, w, p); degree(g) > 0; g = poly_gcd(c, w, p)) c = exact_div(c, g, p);
  if (degree(c) > 0) squarefree_parts(pth_root(c, p), p, out);
}

Poly random_poly(std::size_t below_degree, unsigned p, std::mt19937_64& rng) {
  Poly a(below_degree);
  for (auto& v : a) v = static_cast<unsigned>(rng() % p);
  trim(a);
  return a;
}

void equal_degree_split(const Poly& g, std::size_t d, unsigned p, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
  if (degree(g) == d) {
    out.push_back(g);
    return;
  }
  while (true) {
    const Poly a = random_poly(degree(g), p, rng);
    if (degree(a) == 0) continue;
    Poly b;
    if (p == 2) {
      Poly t = a;
      b = a;
      for (std::size_t i = 1; i < d; ++i) {
        t = poly_mod(poly_mul(t, t, p), g, p);
        b = poly_sub(b, t, p);  // characteristic 2: subtraction is addition
      }
    } else {
      Poly t = a;
      Poly prod = a;
      for (std::size_t i = 1; i < d; ++i) {
        t = poly_powmod(t, p, g, p);
        prod = poly_mod(poly_mul(prod, t, p), g, p);
      }
      b = poly_sub(poly_powmod(prod, (p - 1) / 2, g, p), Poly{1}, p);
    }
    const Poly u = poly_gcd(g, b, p);
    if (degree(u) > 0 && degree(u) < degree(g)) {
      equal_degree_split(u, d, p, rng, out);
      equal_degree_split(exact_div(g, u, p), d, p, rng, out);
      return;
    }
  }
}

void distinct_degree_split(Poly f, unsigned p, std::mt19937_64& rng, std::vector<Poly>& out) {
  const Poly x{0, 1};
  Poly h = poly_mod(x, f, p);
  for (std::size_t d = 1; 2 * d <= degree(f); ++d) {
    h = poly_powmod(h, p, f, p);
    const Poly g = poly_gcd(f, poly_sub(h, x, p), p);
    if (degree(g) > 0) {
      equal_degree_split(g, d, p, rng, out);
      f = exact_div(f, g, p);
      h = poly_mod(h, f, p);
    }
  }
  if (degree(f) > 0) out.push_back(poly_monic(f, p));
}

}  // namespace

std::vector<Poly> irreducible_factors(const Poly& f, unsigned p, std::mt19937_64& rng) {
  std::vector<Poly> parts;
  squarefree_parts(f, p, parts);
  std::vector<Poly> out;
  for (const auto& part : parts) distinct_degree_split(part, p, rng, out);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GFMatrix evaluate(const Poly& f, const GFMatrix& a) {
  const unsigned p = a.prime();
  const std::size_t n = a.rows();
  GFMatrix acc(p, n, n);
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * a;
    if (f[i]) acc = acc + GFMatrix::identity(p, n).scaled(f[i]);
  }
  return acc;
}

}  // namespace twostar::detail
