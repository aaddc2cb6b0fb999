#include "cubicff/action.hpp"

#include <algorithm>

namespace cubicff {

namespace {

RatFunc num(const Field& F, long long v) { return RatFunc::from_int(F, v); }

RatPoly padd(const RatPoly& x, const RatPoly& y) {
  const Field& F = x.empty() ? y.front().field() : x.front().field();
  RatPoly out(std::max(x.size(), y.size()), RatFunc(F));
  for (size_t i = 0; i < x.size(); ++i) out[i] += x[i];
  for (size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return out;
}

RatPoly pmul(const RatPoly& x, const RatPoly& y) {
  RatPoly out(x.size() + y.size() - 1, RatFunc(x.front().field()));
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  return out;
}

RatPoly pscale(const RatPoly& x, const RatFunc& c) {
  RatPoly out = x;
  for (auto& v : out) v *= c;
  return out;
}

void trim(RatPoly& p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

// Raises unless X^3 - 3X - a is irreducible and Galois.
void require_galois(const RatFunc& a) {
  if (!is_galois(CanonicalCubic::standard(a)).galois)
    fail(ErrorKind::NotGalois, "X^3 - 3X - " + a.str() + " does not define a Galois extension");
}

void require_nondegenerate(const RatFunc& a) {
  const Field& F = a.field();
  if (F->p() == 3) fail(ErrorKind::WrongCharacteristic, "the standard form needs characteristic other than 3");
  if (a.is_zero() || a * a == num(F, 4)) fail(ErrorKind::DegenerateA, "a = 0 or a^2 = 4 gives a degenerate cubic");
}

RatFunc transformed_parameter(const RatFunc& a1, const ConicPoint& pt) {
  const RatFunc &phi = pt.phi, &chi = pt.chi;
  return (a1 * a1 - num(a1.field(), 2)) * phi.pow(3) + a1 * phi * phi * chi * 3 + phi * chi * chi * 6 +
         a1 * chi.pow(3);
}

}  // namespace

CubicRing ActionDescriptor::ring() const {
  return CubicRing::from_poly(canonical_polynomial(CanonicalKind::StandardForm, a));
}

CubicRing::Elem ActionDescriptor::sigma() const { return {c0, c1, c2}; }

CubicRing::Elem ActionDescriptor::sigma2() const {
  const Field& F = a.field();
  const RatFunc s = (num(F, 1) + f * 2) / a;
  return {-s * 2, -num(F, 1) - f, s};
}

CubicRing::Elem ActionDescriptor::apply(const CubicRing::Elem& e) const {
  const CubicRing R = ring();
  const auto s = sigma();
  return R.add(R.scalar(e[0]), R.add(R.scale(s, e[1]), R.scale(R.mul(s, s), e[2])));
}

ActionDescriptor galois_action(const RatFunc& a) {
  require_nondegenerate(a);
  require_galois(a);
  const Field& F = a.field();
  // a^2 S(X) = (a^2 - 4) X^2 + (a^2 - 4) X + (a^2 - 1).
  const RatFunc a2 = a * a;
  auto roots = rational_roots({a2 - num(F, 1), a2 - num(F, 4), a2 - num(F, 4)});
  if (roots.empty()) fail(ErrorKind::NotGalois, "the auxiliary quadratic has no root");
  const RatFunc f = roots.front();
  const RatFunc s = (num(F, 1) + f * 2) / a;
  ActionDescriptor d{a, f, -s, f, s * 2};

  const CubicRing R = d.ring();
  const auto z = R.gen(), sz = d.sigma(), s2 = d.sigma2();
  ensure(R.is_zero(R.eval(canonical_polynomial(CanonicalKind::StandardForm, a), sz)), "sigma(z) is a root");
  ensure(!R.equal(sz, z), "sigma is not the identity");
  ensure(R.equal(d.apply(sz), s2), "sigma^2 closed form");
  ensure(R.equal(d.apply(s2), z), "sigma has order three");
  ensure(R.is_zero(R.add(z, R.add(sz, s2))), "trace of z vanishes");
  ensure(R.equal(R.mul(z, R.mul(sz, s2)), R.scalar(a)), "norm of z is a");
  return d;
}

bool on_conic(const RatFunc& a1, const ConicPoint& pt) {
  return pt.chi * pt.chi + a1 * pt.phi * pt.chi + pt.phi * pt.phi == num(a1.field(), 1);
}

ConicPoint conic_point_from_slope(const RatFunc& a1, const RatFunc& m) {
  const Field& F = a1.field();
  const RatFunc den = m * m + a1 * m + num(F, 1);
  if (den.is_zero()) fail(ErrorKind::DivisionByZero, "the line is tangent to the conic at infinity");
  const RatFunc phi = -(m * 2 + a1) / den;
  return {phi, num(F, 1) + m * phi};
}

GeneratorTransform transform_generator(const RatFunc& a1, const ConicPoint& pt) {
  require_same_field(a1.field(), pt.phi.field());
  require_same_field(a1.field(), pt.chi.field());
  if (!on_conic(a1, pt)) fail(ErrorKind::NotOnConic, "(phi, chi) does not satisfy chi^2 + a1 phi chi + phi^2 = 1");
  const Field& F = a1.field();
  const RatFunc a2 = transformed_parameter(a1, pt);
  const CubicRing R = CubicRing::from_poly(canonical_polynomial(CanonicalKind::StandardForm, a1));
  const CubicRing::Elem z2{-pt.phi * 2, pt.chi, pt.phi};
  ensure(R.is_zero(R.eval(canonical_polynomial(CanonicalKind::StandardForm, a2), z2)), "z2 is a root of the new cubic");
  RatMatrix fwd(F, 3);
  CubicRing::Elem cur = R.one();
  for (size_t i = 0; i < 3; ++i) {
    for (size_t j = 0; j < 3; ++j) fwd.at(i, j) = cur[j];
    cur = R.mul(cur, z2);
  }
  return {a2, fwd, fwd.inverse()};
}

std::vector<ConicPoint> same_field_points(const RatFunc& a1, const RatFunc& a2) {
  if (!same_field(a1.field(), a2.field())) fail(ErrorKind::MixedFields, "a1 and a2 live over different fields");
  require_nondegenerate(a1);
  require_nondegenerate(a2);
  require_galois(a1);
  require_galois(a2);
  const Field& F = a1.field();
  const RatFunc one = num(F, 1), zero(F);
  // Reducing the cubic condition modulo the conic (monic in chi) leaves r1 chi + r0.
  const RatFunc s = a1 * a1 - num(F, 4);
  const RatPoly r1{a1, zero, a1 * s};
  const RatPoly r0{-a2, num(F, 6) - a1 * a1, zero, s * 2};
  // Resultant in chi: r0^2 - a1 phi r0 r1 + (phi^2 - 1) r1^2.
  RatPoly res = padd(padd(pmul(r0, r0), pmul(pscale(pmul(r0, r1), -a1), {zero, one})),
                     pmul(pmul(r1, r1), {-one, zero, one}));
  trim(res);
  std::vector<ConicPoint> out;
  for (const auto& phi : rational_roots(res)) {
    for (const auto& chi : rational_roots({phi * phi - one, a1 * phi, one})) {
      ConicPoint pt{phi, chi};
      if (transformed_parameter(a1, pt) == a2) out.push_back(pt);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<ConicPoint> same_field_standard(const RatFunc& a1, const RatFunc& a2) {
  auto pts = same_field_points(a1, a2);
  if (pts.empty()) return std::nullopt;
  ensure(transform_generator(a1, pts.front()).a2 == a2, "conic point maps a1 to a2");
  return pts.front();
}

std::optional<std::pair<int, RatFunc>> as_same_field(const RatFunc& a1, const RatFunc& a2) {
  if (!same_field(a1.field(), a2.field())) fail(ErrorKind::MixedFields, "a1 and a2 live over different fields");
  const Field& F = a1.field();
  if (F->p() != 3) fail(ErrorKind::WrongCharacteristic, "Artin-Schreier equivalence needs characteristic 3");
  for (int j = 1; j <= 2; ++j) {
    // a1 - j a2 = b^3 - b iff its reduction is a constant t^3 - t.
    auto [c, w] = as_reduce(a1 - a2 * j);
    if (!c.is_constant()) continue;
    const FqElem k = c.is_zero() ? FqElem::zero(F) : c.constant_value();
    std::optional<RatFunc> best;
    for (const auto& t : all_elements(F)) {
      if (t.pow(3) - t != k) continue;
      RatFunc b = RatFunc::constant(t) - w;
      if (!best || b < *best) best = b;
    }
    if (best) {
      ensure(a1 == a2 * j + best->pow(3) - *best, "Artin-Schreier equivalence identity");
      return std::make_pair(j, *best);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<int, RatFunc>> kummer_same_field(const RatFunc& a1, const RatFunc& a2) {
  if (!same_field(a1.field(), a2.field())) fail(ErrorKind::MixedFields, "a1 and a2 live over different fields");
  const Field& F = a1.field();
  if (F->q() % 3 != 1) fail(ErrorKind::WrongResidue, "Kummer equivalence needs q = 1 mod 3");
  if (a1.is_zero() || a2.is_zero()) fail(ErrorKind::ZeroInput, "Kummer parameters must be nonzero");
  for (int j = 1; j <= 2; ++j) {
    auto roots = ratfunc_roots(a1 / a2.pow(j), 3);
    if (roots.empty()) continue;
    // Prefer the cube root with monic numerator.
    RatFunc c = roots.front();
    for (const auto& r : roots)
      if (r.num().lc().is_one()) c = r;
    return std::make_pair(j, c);
  }
  return std::nullopt;
}

}  // namespace cubicff
