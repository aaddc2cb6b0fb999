#include <algorithm>
#include <map>
#include <random>

#include "cubicff/poly.hpp"

namespace cubicff {

namespace {

FqPoly one_poly(const Field& F) { return FqPoly::constant(FqElem::one(F)); }

FqPoly pth_root(const FqPoly& f) {
  const Field& F = f.field();
  const u64 p = F->p();
  std::vector<u64> r;
  for (int i = 0; i <= f.deg(); i += static_cast<int>(p)) r.push_back(fq_frobenius_root(f.coeff(i)).code());
  return FqPoly(F, std::move(r));
}

// Squarefree decomposition of a monic polynomial.
void squarefree(const FqPoly& f, int mult, std::vector<std::pair<FqPoly, int>>& out) {
  if (f.deg() <= 0) return;
  const int p = static_cast<int>(f.field()->p());
  FqPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree(pth_root(f), mult * p, out);
    return;
  }
  FqPoly c = gcd(f, d);
  FqPoly w = f / c;
  int i = 1;
  while (w.deg() > 0) {
    FqPoly y = gcd(w, c);
    FqPoly z = w / y;
    if (z.deg() > 0) out.emplace_back(z, i * mult);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.deg() > 0) squarefree(pth_root(c), mult * p, out);
}

FqPoly random_poly(const Field& F, int below, std::mt19937_64& rng) {
  std::vector<u64> v(static_cast<size_t>(below));
  for (auto& c : v) c = rng() % F->q();
  return FqPoly(F, std::move(v));
}

// x^(q^k) mod f by iterated Frobenius.
FqPoly frobenius_power(const FqPoly& h, int k, const FqPoly& f) {
  FqPoly r = h % f;
  for (int i = 0; i < k; ++i) r = powmod(r, r.field()->q(), f);
  return r;
}

// Equal-degree splitting of a squarefree product of degree-d irreducibles.
void equal_degree(const FqPoly& g, int d, std::mt19937_64& rng, std::vector<FqPoly>& out) {
  if (g.deg() == d) {
    out.push_back(g);
    return;
  }
  const Field& F = g.field();
  const u64 q = F->q();
  while (true) {
    FqPoly a = random_poly(F, g.deg(), rng);
    if (a.deg() <= 0) continue;
    FqPoly h;
    if (F->p() == 2) {
      // Trace from F_{q^d} to F_2.
      const int steps = F->n() * d;
      FqPoly t = a % g, acc = t;
      for (int i = 1; i < steps; ++i) {
        t = mulmod(t, t, g);
        acc += t;
      }
      h = gcd(acc, g);
    } else {
      FqPoly norm = a % g, t = norm;
      for (int i = 1; i < d; ++i) {
        t = powmod(t, q, g);
        norm = mulmod(norm, t, g);
      }
      FqPoly b = powmod(norm, (q - 1) / 2, g) - one_poly(F);
      h = gcd(b, g);
    }
    if (h.deg() > 0 && h.deg() < g.deg()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

void distinct_degree(FqPoly f, std::mt19937_64& rng, std::vector<FqPoly>& out) {
  const Field& F = f.field();
  const FqPoly x = FqPoly::x(F);
  FqPoly h = x % f;
  int d = 0;
  while (f.deg() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, F->q(), f);
    FqPoly g = gcd(h - x, f);
    if (g.deg() > 0) {
      equal_degree(g, d, rng, out);
      f = f / g;
      h = h % f;
    }
  }
  if (f.deg() > 0) out.push_back(f.monic());
}

}  // namespace

FqPoly Factorization::expand() const {
  FqPoly r = FqPoly::constant(unit);
  for (const auto& [g, e] : factors) r *= g.pow(e);
  return r;
}

Factorization poly_factor(const FqPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "cannot factor the zero polynomial");
  Factorization out{f.lc(), {}};
  if (f.deg() == 0) return out;
  std::mt19937_64 rng(f.hash());
  std::vector<std::pair<FqPoly, int>> sqf;
  squarefree(f.monic(), 1, sqf);
  std::map<FqPoly, int> merged;
  for (const auto& [g, e] : sqf) {
    std::vector<FqPoly> irr;
    distinct_degree(g, rng, irr);
    for (auto& h : irr) merged[h.monic()] += e;
  }
  for (auto& [g, e] : merged) out.factors.emplace_back(g, e);
  return out;
}

bool poly_is_irreducible(const FqPoly& f) {
  if (f.deg() <= 0) return false;
  if (f.deg() == 1) return true;
  const FqPoly g = f.monic();
  const FqPoly x = FqPoly::x(f.field());
  const int n = g.deg();
  if (frobenius_power(x, n, g) != x % g) return false;
  for (auto [r, e] : factor_u64(static_cast<u64>(n))) {
    (void)e;
    if (gcd(frobenius_power(x, n / static_cast<int>(r), g) - x, g).deg() > 0) return false;
  }
  return true;
}

bool poly_is_squarefree(const FqPoly& f) {
  if (f.deg() <= 0) return true;
  for (const auto& [g, e] : poly_factor(f).factors)
    if (e > 1) return false;
  return true;
}

std::vector<FqElem> poly_roots(const FqPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  const Field& F = f.field();
  if (f.deg() <= 0) return {};
  const FqPoly g0 = f.monic();
  const FqPoly x = FqPoly::x(F);
  FqPoly g = gcd(powmod(x, F->q(), g0) - x, g0);
  std::vector<FqElem> roots;
  if (g.deg() <= 0) return roots;
  std::mt19937_64 rng(f.hash());
  std::vector<FqPoly> lin;
  equal_degree(g, 1, rng, lin);
  for (const auto& l : lin) roots.push_back(-(l.monic().coeff(0)));
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<FqPoly> poly_exact_root(const FqPoly& f, int r) {
  if (f.is_zero()) return f;
  Factorization fac = poly_factor(f);
  FqPoly base = FqPoly::constant(FqElem::one(f.field()));
  for (const auto& [g, e] : fac.factors) {
    if (e % r) return std::nullopt;
    base *= g.pow(e / r);
  }
  auto units = fq_roots_of(fac.unit, r);
  if (units.empty()) return std::nullopt;
  std::vector<FqPoly> cands;
  for (const auto& u : units) cands.push_back(base.scale(u));
  return *std::min_element(cands.begin(), cands.end());
}

std::vector<FqPoly> monic_divisors(const FqPoly& f) {
  Factorization fac = poly_factor(f);
  std::vector<FqPoly> out{FqPoly::constant(FqElem::one(f.field()))};
  for (const auto& [g, e] : fac.factors) {
    std::vector<FqPoly> next;
    for (const auto& d : out) {
      FqPoly cur = d;
      for (int k = 0; k <= e; ++k) {
        next.push_back(cur);
        cur *= g;
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FqPoly> monic_irreducibles(const Field& F, int degree) {
  std::vector<FqPoly> out;
  const u64 q = F->q();
  u64 total = 1;
  for (int i = 0; i < degree; ++i) total *= q;
  for (u64 idx = 0; idx < total; ++idx) {
    std::vector<u64> c(static_cast<size_t>(degree) + 1);
    u64 v = idx;
    for (int i = 0; i < degree; ++i) {
      c[static_cast<size_t>(i)] = F->from_rank(v % q);
      v /= q;
    }
    c.back() = F->from_int(1);
    FqPoly g(F, std::move(c));
    if (poly_is_irreducible(g)) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cubicff
