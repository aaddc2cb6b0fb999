#include <algorithm>

#include "cubicff/poly.hpp"

namespace cubicff {

FqPoly::FqPoly(Field f, std::vector<u64> codes) : field_(std::move(f)), c_(std::move(codes)) { trim(); }

void FqPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FqPoly FqPoly::constant(const FqElem& c) { return FqPoly(c.field(), {c.code()}); }

FqPoly FqPoly::x(const Field& f) { return FqPoly(f, {0, f->from_int(1)}); }

FqPoly FqPoly::monomial(const FqElem& c, int k) {
  std::vector<u64> v(static_cast<size_t>(k) + 1, 0);
  v.back() = c.code();
  return FqPoly(c.field(), std::move(v));
}

FqPoly FqPoly::from_elems(const Field& f, const std::vector<FqElem>& coeffs) {
  std::vector<u64> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    require_same_field(f, c.field());
    v.push_back(c.code());
  }
  return FqPoly(f, std::move(v));
}

bool FqPoly::is_one() const { return c_.size() == 1 && c_[0] == field_->from_int(1); }
bool FqPoly::is_monic() const { return !c_.empty() && c_.back() == field_->from_int(1); }

FqElem FqPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return FqElem::zero(field_);
  return {field_, c_[static_cast<size_t>(i)]};
}

FqElem FqPoly::lc() const {
  if (c_.empty()) return FqElem::zero(field_);
  return {field_, c_.back()};
}

FqPoly FqPoly::operator+(const FqPoly& o) const {
  require_same_field(field_, o.field_);
  const FieldSpec& F = *field_;
  std::vector<u64> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    u64 a = i < c_.size() ? c_[i] : 0;
    u64 b = i < o.c_.size() ? o.c_[i] : 0;
    r[i] = F.add(a, b);
  }
  return FqPoly(field_, std::move(r));
}

FqPoly FqPoly::operator-() const {
  std::vector<u64> r(c_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = field_->neg(c_[i]);
  return FqPoly(field_, std::move(r));
}

FqPoly FqPoly::operator-(const FqPoly& o) const { return *this + (-o); }

FqPoly FqPoly::operator*(const FqPoly& o) const {
  require_same_field(field_, o.field_);
  if (c_.empty() || o.c_.empty()) return FqPoly(field_);
  const FieldSpec& F = *field_;
  std::vector<u64> r(c_.size() + o.c_.size() - 1, 0);
  if (F.is_prime_field()) {
    const u64 p = F.p();
    for (size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i]) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = (r[i + j] + c_[i] * o.c_[j]) % p;
    }
  } else {
    for (size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i]) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(c_[i], o.c_[j]));
    }
  }
  return FqPoly(field_, std::move(r));
}

void divmod(const FqPoly& a, const FqPoly& b, FqPoly& q, FqPoly& r) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  const FieldSpec& F = *a.field();
  std::vector<u64> rem = a.codes();
  const auto& bc = b.codes();
  const int db = b.deg();
  if (a.deg() < db) {
    q = FqPoly(a.field());
    r = a;
    return;
  }
  std::vector<u64> quo(static_cast<size_t>(a.deg() - db + 1), 0);
  const u64 inv_lc = F.inv(bc.back());
  for (int k = a.deg(); k >= db; --k) {
    u64 c = rem[static_cast<size_t>(k)];
    if (!c) continue;
    c = F.mul(c, inv_lc);
    quo[static_cast<size_t>(k - db)] = c;
    const u64 nc = F.neg(c);
    for (int i = 0; i <= db; ++i) {
      size_t idx = static_cast<size_t>(k - db + i);
      rem[idx] = F.add(rem[idx], F.mul(nc, bc[static_cast<size_t>(i)]));
    }
  }
  q = FqPoly(a.field(), std::move(quo));
  r = FqPoly(a.field(), std::move(rem));
}

FqPoly FqPoly::operator/(const FqPoly& o) const {
  FqPoly q, r;
  divmod(*this, o, q, r);
  return q;
}

FqPoly FqPoly::operator%(const FqPoly& o) const {
  FqPoly q, r;
  divmod(*this, o, q, r);
  return r;
}

FqPoly FqPoly::scale(const FqElem& c) const {
  require_same_field(field_, c.field());
  std::vector<u64> r(c_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = field_->mul(c_[i], c.code());
  return FqPoly(field_, std::move(r));
}

FqPoly FqPoly::monic() const {
  if (c_.empty()) return *this;
  return scale(lc().inv());
}

FqPoly FqPoly::derivative() const {
  if (c_.size() <= 1) return FqPoly(field_);
  std::vector<u64> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<long long>(i % field_->p())));
  return FqPoly(field_, std::move(r));
}

FqPoly FqPoly::shift(int k) const {
  if (c_.empty()) return *this;
  std::vector<u64> r(static_cast<size_t>(k), 0);
  r.insert(r.end(), c_.begin(), c_.end());
  return FqPoly(field_, std::move(r));
}

FqPoly FqPoly::pow(int e) const {
  FqPoly r = constant(FqElem::one(field_)), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

FqElem FqPoly::eval(const FqElem& v) const {
  require_same_field(field_, v.field());
  u64 acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, v.code()), c_[i]);
  return {field_, acc};
}

FqPoly FqPoly::compose(const FqPoly& inner) const {
  FqPoly acc(field_);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * inner + constant(FqElem(field_, c_[i]));
  return acc;
}

FqPoly FqPoly::reverse(int degree) const {
  std::vector<u64> r(static_cast<size_t>(degree) + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) r[static_cast<size_t>(degree) - i] = c_[i];
  return FqPoly(field_, std::move(r));
}

FqPoly FqPoly::map_coeffs_pow(u64 k) const {
  std::vector<u64> r(c_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = field_->pow(c_[i], k);
  return FqPoly(field_, std::move(r));
}

bool FqPoly::operator==(const FqPoly& o) const {
  return c_ == o.c_ && (c_.empty() || same_field(field_, o.field_));
}

bool FqPoly::operator<(const FqPoly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == o.c_[i]) continue;
    return field_->rank(c_[i]) < field_->rank(o.c_[i]);
  }
  return false;
}

std::string FqPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = deg(); i >= 0; --i) {
    u64 c = c_[static_cast<size_t>(i)];
    if (!c) continue;
    std::string cs = FqElem(field_, c).str();
    bool compound = cs.find('+') != std::string::npos;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += compound ? "(" + cs + ")" : cs;
      continue;
    }
    if (cs != "1") out += (compound ? "(" + cs + ")" : cs) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

u64 FqPoly::hash() const {
  u64 h = 1469598103934665603ull;
  auto mix = [&h](u64 v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  if (field_) {
    mix(field_->p());
    mix(static_cast<u64>(field_->n()));
    for (u64 m : field_->modulus()) mix(m);
  }
  for (u64 c : c_) mix(c);
  return h;
}

FqPoly gcd(const FqPoly& a, const FqPoly& b) {
  FqPoly x = a, y = b;
  while (!y.is_zero()) {
    FqPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FqPoly lcm(const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) return FqPoly(a.field());
  return (a * b / gcd(a, b)).monic();
}

std::tuple<FqPoly, FqPoly, FqPoly> xgcd(const FqPoly& a, const FqPoly& b) {
  const Field& F = a.field();
  FqPoly r0 = a, r1 = b;
  FqPoly s0 = FqPoly::constant(FqElem::one(F)), s1(F);
  FqPoly t0(F), t1 = FqPoly::constant(FqElem::one(F));
  while (!r1.is_zero()) {
    FqPoly q, r;
    divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    FqPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  FqElem inv = r0.lc().inv();
  return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m) { return (a * b) % m; }

FqPoly powmod(const FqPoly& a, u64 e, const FqPoly& m) {
  FqPoly r = FqPoly::constant(FqElem::one(a.field())) % m, b = a % m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    e >>= 1;
    if (e) b = mulmod(b, b, m);
  }
  return r;
}

FqPoly invmod(const FqPoly& a, const FqPoly& m) {
  auto [g, s, t] = xgcd(a % m, m);
  (void)t;
  if (!g.is_one()) fail(ErrorKind::NotCoprime, "polynomial is not invertible modulo " + m.str());
  return s % m;
}

int poly_valuation(const FqPoly& g, const FqPoly& f) {
  if (g.is_zero()) fail(ErrorKind::ZeroPolynomial, "valuation of zero");
  int v = 0;
  FqPoly cur = g;
  while (true) {
    FqPoly q, r;
    divmod(cur, f, q, r);
    if (!r.is_zero()) return v;
    cur = std::move(q);
    ++v;
  }
}

}  // namespace cubicff
