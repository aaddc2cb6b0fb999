#include <algorithm>
#include <tuple>

#include "cubicff/gfq.hpp"

namespace cubicff {

namespace {

// Inverse of a modulo m, for gcd(a, m) = 1.
u64 inv_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  long long t = 0, nt = 1;
  long long r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
  while (nr) {
    long long qq = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - qq * nt);
    std::tie(r, nr) = std::make_pair(nr, r - qq * nr);
  }
  ensure(r == 1, "inverse modulo group order");
  if (t < 0) t += static_cast<long long>(m);
  return static_cast<u64>(t);
}

void sort_unique(std::vector<FqElem>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// One r-th root of a nonzero r-th power via Adleman-Manders-Miller.
FqElem amm_root(const FqElem& a, u64 r) {
  const Field& F = a.field();
  const u64 order = F->q() - 1;
  u64 s = 0, t = order;
  while (t % r == 0) {
    t /= r;
    ++s;
  }
  FqElem z;
  for (u64 rk = 1; rk < F->q(); ++rk) {
    FqElem c(F, F->from_rank(rk));
    if (!c.pow(order / r).is_one()) {
      z = c;
      break;
    }
  }
  ensure(z.valid(), "non-residue exists");
  const FqElem g = z.pow(t);  // generates the Sylow r-subgroup
  u64 rs1 = 1;
  for (u64 i = 0; i + 1 < s; ++i) rs1 *= r;
  const FqElem gamma = g.pow(rs1);  // order r
  const u64 m = inv_mod(r % t, t);
  const FqElem x = a.pow(m);
  const FqElem e = x.pow(r) / a;  // lies in the Sylow subgroup
  // Discrete log of e to base g, digit by digit.
  u64 L = 0, rk = 1;
  const FqElem ginv = g.inv();
  for (u64 k = 0; k < s; ++k) {
    u64 ex = 1;
    for (u64 i = k + 1; i < s; ++i) ex *= r;
    FqElem h = (ginv.pow(L) * e).pow(ex);
    u64 d = 0;
    FqElem acc = FqElem::one(F);
    while (acc != h) {
      acc *= gamma;
      ++d;
      ensure(d < r, "discrete log digit");
    }
    L += d * rk;
    rk *= r;
  }
  ensure(L % r == 0, "r-th power has divisible log");
  FqElem root = x / g.pow(L / r);
  ensure(root.pow(r) == a, "AMM root");
  return root;
}

}  // namespace

std::vector<FqElem> fq_roots_of(const FqElem& e, int r) {
  const Field& F = e.field();
  if (e.is_zero()) return {e};
  const u64 order = F->q() - 1;
  const u64 ru = static_cast<u64>(r);
  if (order % ru != 0) return {e.pow(inv_mod(ru, order))};
  if (!e.pow(order / ru).is_one()) return {};
  FqElem root = amm_root(e, ru);
  std::vector<FqElem> out{root};
  if (r == 2) {
    out.push_back(-root);
  } else {
    auto w = fq_cube_root_of_unity(F);
    ensure(w.has_value(), "cube root of unity");
    out.push_back(root * *w);
    out.push_back(root * *w * *w);
  }
  sort_unique(out);
  return out;
}

bool fq_is_square(const FqElem& e) { return !fq_roots_of(e, 2).empty(); }

std::optional<FqElem> fq_sqrt(const FqElem& e) {
  auto r = fq_roots_of(e, 2);
  if (r.empty()) return std::nullopt;
  return r.front();
}

bool fq_is_cube(const FqElem& e) { return !fq_roots_of(e, 3).empty(); }

std::optional<FqElem> fq_cube_root(const FqElem& e) {
  auto r = fq_roots_of(e, 3);
  if (r.empty()) return std::nullopt;
  return r.front();
}

FqElem fq_trace(const FqElem& e) {
  FqElem acc = e, cur = e;
  for (int i = 1; i < e.field()->n(); ++i) {
    cur = cur.pow(e.field()->p());
    acc += cur;
  }
  return acc;
}

int fq_trace_to_F2(const FqElem& e) {
  if (e.field()->p() != 2) fail(ErrorKind::WrongCharacteristic, "trace to F_2 needs characteristic 2");
  return static_cast<int>(fq_trace(e).code());
}

FqElem fq_frobenius_root(const FqElem& e) { return e.pow(e.field()->q() / e.field()->p()); }

std::optional<FqElem> fq_cube_root_of_unity(const Field& f) {
  if ((f->q() - 1) % 3 != 0) return std::nullopt;
  auto roots = fq_quadratic_roots(FqElem::one(f), FqElem::one(f));
  ensure(roots.size() == 2, "two primitive cube roots of unity");
  return roots.front();
}

std::vector<FqElem> fq_solve_as_quadratic(const FqElem& c) {
  const Field& F = c.field();
  if (F->p() != 2) fail(ErrorKind::WrongCharacteristic, "X^2 + X = c is solved here only in characteristic 2");
  if (fq_trace_to_F2(c) != 0) return {};
  const int n = F->n();
  FqElem delta;
  for (u64 rk = 1; rk < F->q(); ++rk) {
    FqElem d(F, F->from_rank(rk));
    if (fq_trace_to_F2(d) == 1) {
      delta = d;
      break;
    }
  }
  ensure(delta.valid(), "trace-one element");
  std::vector<FqElem> cp(static_cast<size_t>(n)), dp(static_cast<size_t>(n));
  cp[0] = c;
  dp[0] = delta;
  for (int i = 1; i < n; ++i) {
    cp[static_cast<size_t>(i)] = cp[static_cast<size_t>(i - 1)] * cp[static_cast<size_t>(i - 1)];
    dp[static_cast<size_t>(i)] = dp[static_cast<size_t>(i - 1)] * dp[static_cast<size_t>(i - 1)];
  }
  FqElem x = FqElem::zero(F), partial = FqElem::zero(F);
  for (int i = 1; i < n; ++i) {
    partial += dp[static_cast<size_t>(i - 1)];
    x += cp[static_cast<size_t>(i)] * partial;
  }
  ensure(x * x + x == c, "Artin-Schreier root");
  std::vector<FqElem> out{x, x + FqElem::one(F)};
  sort_unique(out);
  return out;
}

std::vector<FqElem> fq_quadratic_roots(const FqElem& b, const FqElem& c) {
  const Field& F = b.field();
  std::vector<FqElem> out;
  if (F->p() == 2) {
    if (b.is_zero()) return {*fq_sqrt(c)};
    for (const auto& y : fq_solve_as_quadratic(c / (b * b))) out.push_back(b * y);
  } else {
    FqElem two = FqElem::from_int(F, 2);
    for (const auto& s : fq_roots_of(b * b - FqElem::from_int(F, 4) * c, 2)) out.push_back((s - b) / two);
  }
  sort_unique(out);
  return out;
}

FqElem fq_inverse_of_three(const Field& f) {
  if (f->p() == 3) fail(ErrorKind::WrongCharacteristic, "3 is not invertible in characteristic 3");
  return FqElem::from_int(f, 3).inv();
}

}  // namespace cubicff
