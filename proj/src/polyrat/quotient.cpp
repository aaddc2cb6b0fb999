#include <algorithm>
#include <climits>
#include <map>

#include "cubicff/quotient.hpp"

namespace cubicff {

std::string ratpoly_str(const RatPoly& p, const std::string& var) {
  std::string out;
  for (size_t i = p.size(); i-- > 0;) {
    if (p[i].is_zero()) continue;
    std::string c = p[i].str();
    if (c.find_first_of("+/") != std::string::npos) c = "(" + c + ")";
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += c;
      continue;
    }
    if (c != "1") out += c + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

RatFunc ratpoly_eval(const RatPoly& p, const RatFunc& at) {
  RatFunc acc(at.field());
  for (size_t i = p.size(); i-- > 0;) acc = acc * at + p[i];
  return acc;
}

RatMatrix::RatMatrix(const Field& f, size_t n) : f_(f), n_(n), a_(n * n, RatFunc(f)) {}

RatMatrix RatMatrix::identity(const Field& f, size_t n) {
  RatMatrix m(f, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = RatFunc::from_int(f, 1);
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  RatMatrix r(f_, n_);
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) {
      RatFunc acc(f_);
      for (size_t k = 0; k < n_; ++k) acc += at(i, k) * o.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix r(f_, n_);
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  return r;
}

RatFunc RatMatrix::det() const {
  RatMatrix m = *this;
  RatFunc d = RatFunc::from_int(f_, 1);
  for (size_t c = 0; c < n_; ++c) {
    size_t piv = c;
    while (piv < n_ && m.at(piv, c).is_zero()) ++piv;
    if (piv == n_) return RatFunc(f_);
    if (piv != c) {
      for (size_t j = 0; j < n_; ++j) std::swap(m.at(piv, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    RatFunc inv = m.at(c, c).inv();
    for (size_t i = c + 1; i < n_; ++i) {
      if (m.at(i, c).is_zero()) continue;
      RatFunc f = m.at(i, c) * inv;
      for (size_t j = c; j < n_; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

RatMatrix RatMatrix::inverse() const {
  RatMatrix m = *this, r = identity(f_, n_);
  for (size_t c = 0; c < n_; ++c) {
    size_t piv = c;
    while (piv < n_ && m.at(piv, c).is_zero()) ++piv;
    if (piv == n_) fail(ErrorKind::DivisionByZero, "singular matrix");
    for (size_t j = 0; j < n_; ++j) {
      std::swap(m.at(piv, j), m.at(c, j));
      std::swap(r.at(piv, j), r.at(c, j));
    }
    RatFunc inv = m.at(c, c).inv();
    for (size_t j = 0; j < n_; ++j) {
      m.at(c, j) *= inv;
      r.at(c, j) *= inv;
    }
    for (size_t i = 0; i < n_; ++i) {
      if (i == c || m.at(i, c).is_zero()) continue;
      RatFunc f = m.at(i, c);
      for (size_t j = 0; j < n_; ++j) {
        m.at(i, j) -= f * m.at(c, j);
        r.at(i, j) -= f * r.at(c, j);
      }
    }
  }
  return r;
}

std::vector<std::vector<std::string>> RatMatrix::strs() const {
  std::vector<std::vector<std::string>> out(n_);
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) out[i].push_back(at(i, j).str());
  return out;
}

std::vector<RatFunc> solve(const RatMatrix& m, const std::vector<RatFunc>& b) {
  RatMatrix inv = m.inverse();
  std::vector<RatFunc> x(m.size(), RatFunc(m.field()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) x[i] += inv.at(i, j) * b[j];
  return x;
}

CubicRing::CubicRing(const RatFunc& c0, const RatFunc& c1, const RatFunc& c2) : c0_(c0), c1_(c1), c2_(c2) {
  z3_ = {-c0_, -c1_, -c2_};
  // z^4 = z * z^3
  z4_ = {c2_ * c0_, c2_ * c1_ - c0_, c2_ * c2_ - c1_};
}

CubicRing CubicRing::from_poly(const RatPoly& p) {
  ensure(p.size() == 4 && p[3].is_one(), "monic cubic modulus");
  return CubicRing(p[0], p[1], p[2]);
}

RatPoly CubicRing::modulus() const { return {c0_, c1_, c2_, RatFunc::from_int(field(), 1)}; }

CubicRing::Elem CubicRing::zero() const { return {RatFunc(field()), RatFunc(field()), RatFunc(field())}; }
CubicRing::Elem CubicRing::one() const { return scalar(RatFunc::from_int(field(), 1)); }
CubicRing::Elem CubicRing::gen() const {
  return {RatFunc(field()), RatFunc::from_int(field(), 1), RatFunc(field())};
}
CubicRing::Elem CubicRing::scalar(const RatFunc& c) const { return {c, RatFunc(field()), RatFunc(field())}; }

CubicRing::Elem CubicRing::add(const Elem& a, const Elem& b) const {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
CubicRing::Elem CubicRing::sub(const Elem& a, const Elem& b) const {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
CubicRing::Elem CubicRing::neg(const Elem& a) const { return {-a[0], -a[1], -a[2]}; }
CubicRing::Elem CubicRing::scale(const Elem& a, const RatFunc& c) const { return {a[0] * c, a[1] * c, a[2] * c}; }

CubicRing::Elem CubicRing::mul(const Elem& a, const Elem& b) const {
  RatFunc p0 = a[0] * b[0];
  RatFunc p1 = a[0] * b[1] + a[1] * b[0];
  RatFunc p2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0];
  RatFunc p3 = a[1] * b[2] + a[2] * b[1];
  RatFunc p4 = a[2] * b[2];
  Elem r{p0, p1, p2};
  if (!p3.is_zero())
    for (int i = 0; i < 3; ++i) r[static_cast<size_t>(i)] += p3 * z3_[static_cast<size_t>(i)];
  if (!p4.is_zero())
    for (int i = 0; i < 3; ++i) r[static_cast<size_t>(i)] += p4 * z4_[static_cast<size_t>(i)];
  return r;
}

CubicRing::Elem CubicRing::pow(const Elem& a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  Elem r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

CubicRing::Elem CubicRing::inv(const Elem& a) const {
  auto v = solve(mult_matrix(a), {RatFunc::from_int(field(), 1), RatFunc(field()), RatFunc(field())});
  return {v[0], v[1], v[2]};
}

bool CubicRing::is_zero(const Elem& a) const { return a[0].is_zero() && a[1].is_zero() && a[2].is_zero(); }

CubicRing::Elem CubicRing::eval(const RatPoly& p, const Elem& at) const {
  Elem acc = zero();
  for (size_t i = p.size(); i-- > 0;) acc = add(mul(acc, at), scalar(p[i]));
  return acc;
}

RatMatrix CubicRing::mult_matrix(const Elem& a) const {
  RatMatrix m(field(), 3);
  Elem col = a;
  for (size_t j = 0; j < 3; ++j) {
    for (size_t i = 0; i < 3; ++i) m.at(i, j) = col[i];
    col = mul(col, gen());
  }
  return m;
}

RatFunc CubicRing::trace(const Elem& a) const {
  RatMatrix m = mult_matrix(a);
  return m.at(0, 0) + m.at(1, 1) + m.at(2, 2);
}

RatFunc CubicRing::norm(const Elem& a) const { return mult_matrix(a).det(); }

RatPoly CubicRing::charpoly(const Elem& a) const {
  RatMatrix m = mult_matrix(a);
  RatFunc tr = m.at(0, 0) + m.at(1, 1) + m.at(2, 2);
  RatFunc minors = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0) + m.at(0, 0) * m.at(2, 2) -
                   m.at(0, 2) * m.at(2, 0) + m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1);
  return {-m.det(), minors, -tr, RatFunc::from_int(field(), 1)};
}

std::string CubicRing::str(const Elem& a, const std::string& var) const {
  return ratpoly_str({a[0], a[1], a[2]}, var);
}

namespace {

// Integer slopes s for which min_i (v[i] + i*s) is attained at least twice.
// Entries equal to kInfiniteValuation mark zero coefficients.
std::vector<int> newton_slopes(const std::vector<int>& v) {
  int lo = INT_MAX, hi = INT_MIN;
  for (int x : v)
    if (x != kInfiniteValuation) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  const int span = hi - lo;
  std::vector<int> out;
  for (int s = -span; s <= span; ++s) {
    long long best = LLONG_MAX;
    int hits = 0;
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == kInfiniteValuation) continue;
      long long val = v[i] + static_cast<long long>(i) * s;
      if (val < best) {
        best = val;
        hits = 1;
      } else if (val == best) {
        ++hits;
      }
    }
    if (hits >= 2) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<RatFunc> rational_roots(const RatPoly& coeffs) {
  ensure(!coeffs.empty(), "rational_roots needs coefficients");
  const Field& F = coeffs.front().field();
  FqPoly den = FqPoly::constant(FqElem::one(F));
  for (const auto& c : coeffs) den = lcm(den, c.den());
  std::vector<FqPoly> g;
  for (const auto& c : coeffs) g.push_back(c.num() * (den / c.den()));
  while (!g.empty() && g.back().is_zero()) g.pop_back();
  if (g.empty()) fail(ErrorKind::ZeroPolynomial, "rational roots of the zero polynomial");

  std::vector<RatFunc> out;
  size_t lead = 0;
  while (g[lead].is_zero()) ++lead;
  if (lead > 0) {
    out.push_back(RatFunc(F));
    g.erase(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(lead));
  }
  const size_t m = g.size() - 1;
  if (m == 0) return out;

  FqPoly content(F);
  for (const auto& c : g) content = gcd(content, c);
  for (auto& c : g)
    if (!c.is_zero()) c = c / content;

  std::vector<FqPoly> primes;
  for (const auto& [pi, e] : poly_factor(g.front() * g.back()).factors) primes.push_back(pi);

  std::vector<std::vector<int>> prime_slopes;
  for (const auto& pi : primes) {
    std::vector<int> v;
    for (const auto& c : g) v.push_back(c.is_zero() ? kInfiniteValuation : poly_valuation(c, pi));
    prime_slopes.push_back(newton_slopes(v));
    if (prime_slopes.back().empty()) return out;
  }

  std::vector<int> vinf;
  for (const auto& c : g) vinf.push_back(c.is_zero() ? kInfiniteValuation : -c.deg());
  std::map<int, std::vector<FqElem>> units;
  for (int s : newton_slopes(vinf)) {
    long long best = LLONG_MAX;
    for (size_t i = 0; i <= m; ++i)
      if (vinf[i] != kInfiniteValuation) best = std::min(best, vinf[i] + static_cast<long long>(i) * s);
    std::vector<u64> lead_codes(m + 1, 0);
    for (size_t i = 0; i <= m; ++i)
      if (vinf[i] != kInfiniteValuation && vinf[i] + static_cast<long long>(i) * s == best)
        lead_codes[i] = g[i].lc().code();
    std::vector<FqElem> us;
    for (const auto& u : poly_roots(FqPoly(F, lead_codes)))
      if (!u.is_zero()) us.push_back(u);
    if (!us.empty()) units[s] = us;
  }

  const RatPoly check(coeffs.begin() + static_cast<std::ptrdiff_t>(lead), coeffs.end());
  std::vector<size_t> idx(primes.size(), 0);
  while (true) {
    FqPoly n = FqPoly::constant(FqElem::one(F)), d = n;
    for (size_t k = 0; k < primes.size(); ++k) {
      int s = prime_slopes[k][idx[k]];
      if (s > 0) n *= primes[k].pow(s);
      if (s < 0) d *= primes[k].pow(-s);
    }
    auto it = units.find(d.deg() - n.deg());
    if (it != units.end())
      for (const auto& u : it->second) {
        RatFunc r(n.scale(u), d);
        if (ratpoly_eval(check, r).is_zero()) out.push_back(r);
      }
    size_t k = 0;
    while (k < primes.size() && ++idx[k] == prime_slopes[k].size()) idx[k++] = 0;
    if (k == primes.size()) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cubicff
