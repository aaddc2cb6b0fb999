#include <algorithm>

#include "cubicff/ratfunc.hpp"

namespace cubicff {

RatFunc::RatFunc(const FqPoly& num) : num_(num), den_(FqPoly::constant(FqElem::one(num.field()))) {}

RatFunc::RatFunc(const FqPoly& num, const FqPoly& den) {
  if (den.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
  require_same_field(num.field(), den.field());
  if (num.is_zero()) {
    num_ = FqPoly(den.field());
    den_ = FqPoly::constant(FqElem::one(den.field()));
    return;
  }
  FqPoly g = gcd(num, den);
  FqPoly n = num, d = den;
  if (g.deg() > 0) {
    n = num / g;
    d = den / g;
  }
  FqElem c = d.lc().inv();
  num_ = n.scale(c);
  den_ = d.scale(c);
}

FqElem RatFunc::constant_value() const {
  if (!is_constant()) fail(ErrorKind::DegreeMismatch, "rational function is not constant");
  return num_.coeff(0);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -num_;
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc(field());
  FqPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  RatFunc r;
  r.num_ = (num_ / g1) * (o.num_ / g2);
  r.den_ = (den_ / g2) * (o.den_ / g1);
  return r;
}

RatFunc RatFunc::inv() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  RatFunc r;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  return r;
}

RatFunc RatFunc::scale(const FqElem& c) const {
  if (c.is_zero()) return RatFunc(field());
  RatFunc r = *this;
  r.num_ = num_.scale(c);
  return r;
}

RatFunc RatFunc::invert_variable() const {
  const int dn = num_.deg(), dd = den_.deg();
  if (is_zero()) return *this;
  FqPoly n = num_.reverse(dn), d = den_.reverse(dd);
  if (dd > dn) n = n.shift(dd - dn);
  else d = d.shift(dn - dd);
  return RatFunc(n, d);
}

bool RatFunc::operator<(const RatFunc& o) const {
  if (num_ != o.num_) return num_ < o.num_;
  return den_ < o.den_;
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  auto wrap = [](const std::string& s) { return s.find('+') != std::string::npos ? "(" + s + ")" : s; };
  return wrap(num_.str()) + "/" + wrap(den_.str());
}

Place Place::finite(const FqPoly& f) {
  if (!f.is_monic() || !poly_is_irreducible(f))
    fail(ErrorKind::ParseError, "a finite place needs a monic irreducible polynomial, got " + f.str());
  return Place(f);
}

bool Place::operator<(const Place& o) const {
  if (is_infinity() || o.is_infinity()) return !is_infinity() && o.is_infinity();
  return *poly_ < *o.poly_;
}

int valuation(const RatFunc& r, const Place& p) {
  if (r.is_zero()) return kInfiniteValuation;
  if (p.is_infinity()) return r.den().deg() - r.num().deg();
  return poly_valuation(r.num(), p.poly()) - poly_valuation(r.den(), p.poly());
}

std::vector<Place> support(const RatFunc& r) {
  std::vector<Place> out;
  if (r.is_zero()) return out;
  for (const FqPoly* f : {&r.num(), &r.den()})
    for (const auto& [g, e] : poly_factor(*f).factors) out.push_back(Place::finite(g));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Place> places_up_to_degree(const Field& f, int d) {
  std::vector<Place> out;
  for (int k = 1; k <= d; ++k)
    for (const auto& g : monic_irreducibles(f, k)) out.push_back(Place::finite(g));
  out.push_back(Place::infinity());
  return out;
}

ResidueField::ResidueField(const Place& place) : place_(place) {
  if (place.is_infinity()) fail(ErrorKind::DegreeMismatch, "residue fields are built for finite places");
  base_ = place.poly().field();
  const int d = place.poly().deg();
  if (d == 1) {
    k_ = base_;
    emb_ = make_embedding(base_, base_);
    x_image_ = -place.poly().coeff(0);
    return;
  }
  k_ = make_field(base_->p(), base_->n() * d);
  emb_ = make_embedding(base_, k_);
  auto roots = poly_roots(emb_.apply(place.poly()));
  ensure(!roots.empty(), "place polynomial splits in its residue field");
  x_image_ = roots.front();
}

FqElem ResidueField::reduce(const FqPoly& f) const {
  FqElem acc = FqElem::zero(k_);
  for (int i = f.deg(); i >= 0; --i) acc = acc * x_image_ + emb_.apply(f.coeff(i));
  return acc;
}

FqElem ResidueField::reduce(const RatFunc& r) const {
  int v = valuation(r, place_);
  if (v < 0) fail(ErrorKind::NegativeValuation, "residue of a function with a pole at " + place_.str());
  if (v > 0) return FqElem::zero(k_);
  return reduce(r.num()) / reduce(r.den());
}

FqElem residue(const RatFunc& r, const Place& p) {
  if (p.is_infinity()) {
    int v = valuation(r, p);
    if (v < 0) fail(ErrorKind::NegativeValuation, "residue of a function with a pole at inf");
    if (v > 0) return FqElem::zero(r.field());
    return r.num().lc() / r.den().lc();
  }
  return ResidueField(p).reduce(r);
}

namespace {

std::optional<FqPoly> monic_root(const FqPoly& f, int k) {
  FqPoly base = FqPoly::constant(FqElem::one(f.field()));
  for (const auto& [g, e] : poly_factor(f).factors) {
    if (e % k) return std::nullopt;
    base *= g.pow(e / k);
  }
  return base;
}

}  // namespace

std::vector<RatFunc> ratfunc_roots(const RatFunc& r, int order) {
  if (r.is_zero()) return {r};
  auto n = monic_root(r.num(), order);
  if (!n) return {};
  auto d = monic_root(r.den(), order);
  if (!d) return {};
  std::vector<RatFunc> out;
  for (const auto& u : fq_roots_of(r.num().lc(), order)) out.emplace_back(n->scale(u), *d);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<RatFunc> ratfunc_sqrt(const RatFunc& r) {
  auto v = ratfunc_roots(r, 2);
  if (v.empty()) return std::nullopt;
  return v.front();
}

std::optional<RatFunc> ratfunc_cbrt(const RatFunc& r) {
  auto v = ratfunc_roots(r, 3);
  if (v.empty()) return std::nullopt;
  return v.front();
}

RatFunc embed(const Embedding& e, const RatFunc& r) { return RatFunc(e.apply(r.num()), e.apply(r.den())); }

std::optional<RatFunc> pull_back(const Embedding& e, const RatFunc& r) {
  auto n = e.preimage(r.num());
  auto d = e.preimage(r.den());
  if (!n || !d) return std::nullopt;
  return RatFunc(*n, *d);
}

}  // namespace cubicff
