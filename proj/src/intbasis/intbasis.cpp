#include "cubicff/intbasis.hpp"

#include <algorithm>

namespace cubicff {

namespace {

FqPoly one_poly(const Field& F) { return FqPoly::constant(FqElem::one(F)); }

FqPoly reduce(const FqPoly& r, const FqPoly& m) { return m.deg() <= 0 ? FqPoly(r.field()) : r % m; }

// x with x = r1 mod m1 and x = r2 mod m2, for coprime moduli.
FqPoly crt(const FqPoly& r1, const FqPoly& m1, const FqPoly& r2, const FqPoly& m2) {
  if (m1.deg() <= 0) return reduce(r2, m2);
  if (m2.deg() <= 0) return reduce(r1, m1);
  ensure(gcd(m1, m2).is_one(), "CRT moduli are coprime");
  FqPoly t = reduce((r2 - r1) * invmod(m1 % m2, m2), m2);
  return reduce(r1 + m1 * t, m1 * m2);
}

RatFunc rf(const FqPoly& p) { return RatFunc(p); }

}  // namespace

std::string to_string(BasisFamily f) {
  switch (f) {
    case BasisFamily::ArtinSchreier:
      return "artin_schreier";
    case BasisFamily::Kummer:
      return "kummer";
    case BasisFamily::Standard:
      return "standard";
  }
  return "";
}

CubeSplit cube_split(const RatFunc& a) {
  if (a.is_zero()) fail(ErrorKind::ZeroInput, "cube split of zero");
  const Field& F = a.field();
  CubeSplit s{a.num(), one_poly(F), one_poly(F), one_poly(F), one_poly(F)};
  for (const auto& [P, e] : poly_factor(a.den()).factors) {
    s.gamma *= P.pow(e / 3);
    if (e % 3 == 1) s.beta1 *= P;
    if (e % 3 == 2) s.beta2 *= P;
  }
  s.beta = s.beta1 * s.beta2 * s.beta2;
  ensure(a == RatFunc(s.alpha, s.gamma.pow(3) * s.beta), "cube split reconstructs a");
  return s;
}

CubicRing::Elem IntegralBasis::element(size_t i) const {
  const BasisElement& e = elems.at(i);
  const RatFunc d = rf(e.den);
  return {rf(e.num[0]) / d, rf(e.num[1]) / d, rf(e.num[2]) / d};
}

const FqPoly& IntegralBasis::aux_value(const std::string& name) const {
  for (const auto& [k, v] : aux)
    if (k == name) return v;
  fail(ErrorKind::Internal, "no auxiliary value " + name);
}

IntegralBasis as_integral_basis(const RatFunc& a) {
  const Field& F = a.field();
  if (F->p() != 3) fail(ErrorKind::WrongCharacteristic, "Artin-Schreier bases need characteristic 3");
  FqPoly S1 = one_poly(F), S2 = one_poly(F);
  for (const auto& [P, lambda] : poly_factor(a.den()).factors) {
    if (lambda % 3 == 0)
      fail(ErrorKind::NotStandardForm, "pole order divisible by 3 at " + P.str() + "; standardize the parameter first");
    S1 *= P.pow(1 + lambda / 3);
    S2 *= P.pow(1 + 2 * lambda / 3);
  }
  const FqPoly z(F), o = one_poly(F);
  IntegralBasis b{BasisFamily::ArtinSchreier,
                  a,
                  canonical_polynomial(CanonicalKind::ArtinSchreier, a),
                  RatFunc::from_int(F, 1),
                  {{{o, z, z}, o}, {{z, S1, z}, o}, {{z, z, S2}, o}},
                  {{"S1", S1}, {"S2", S2}}};
  return b;
}

IntegralBasis kummer_integral_basis(const RatFunc& a) {
  const Field& F = a.field();
  if (F->q() % 3 != 1) fail(ErrorKind::WrongResidue, "Kummer bases need q = 1 mod 3");
  if (a.is_zero() || !a.is_polynomial())
    fail(ErrorKind::NotStandardForm, "the Kummer parameter must be a nonzero polynomial; standardize it first");
  FqPoly S1 = one_poly(F), S2 = one_poly(F);
  for (const auto& [P, lambda] : poly_factor(a.num()).factors) {
    if (lambda > 2) fail(ErrorKind::NotStandardForm, "exponent above 2 at " + P.str() + "; standardize the parameter first");
    S1 *= P.pow(lambda / 3);
    S2 *= P.pow(2 * lambda / 3);
  }
  const FqPoly z(F), o = one_poly(F);
  return {BasisFamily::Kummer,
          a,
          canonical_polynomial(CanonicalKind::PurelyCubic, a),
          RatFunc::from_int(F, 1),
          {{{o, z, z}, o}, {{z, o, z}, S1}, {{z, z, o}, S2}},
          {{"S1", S1}, {"S2", S2}}};
}

IntegralBasis standard_integral_basis(const RatFunc& a) {
  const Field& F = a.field();
  if (F->q() % 3 != 2) fail(ErrorKind::WrongResidue, "the standard-form basis needs q = 2 mod 3");
  if (F->p() == 2 ? a.is_zero() : a * a == RatFunc::from_int(F, 4))
    fail(ErrorKind::DegenerateA, "a = 0 or a^2 = 4 gives a degenerate cubic");
  if (!is_galois(CanonicalCubic::standard(a)).galois)
    fail(ErrorKind::NotGalois, "X^3 - 3X - " + a.str() + " does not define a Galois extension");
  std::pair<FqPoly, FqPoly> w;
  try {
    w = galois_witness(a);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotGaloisShape) fail(ErrorKind::NoNormWitness, e.what());
    throw;
  }
  const FqPoly &A = w.first, &B = w.second;
  CubeSplit cs = cube_split(a);
  // Scale so that alpha and gamma^3 beta are the exact norm-form values.
  const FqElem c = norm_form(A, B).lc();
  const FqPoly alpha = cs.alpha.scale(c), beta1 = cs.beta1.scale(c), &beta2 = cs.beta2, &gamma = cs.gamma;
  ensure(gamma.pow(3) * beta1 * beta2 * beta2 == norm_form(A, B), "gamma^3 beta is the norm form");

  const FqPoly g12 = gamma * beta1 * beta2;
  const RatFunc scale = rf(g12);
  // omega^3 - 3 gamma^2 beta1^2 beta2^2 omega - alpha beta1^2 beta2 = 0.
  const RatPoly gen_poly{-rf(alpha * beta1 * beta1 * beta2), -rf(g12 * g12) * 3, RatFunc(F), RatFunc::from_int(F, 1)};
  const FqPoly z(F), o = one_poly(F);
  IntegralBasis b{BasisFamily::Standard, a, gen_poly, scale, {}, {}};
  b.aux = {{"alpha", alpha}, {"gamma", gamma}, {"beta1", beta1}, {"beta2", beta2}, {"A", A}, {"B", B}};

  if (F->p() != 2) {
    const FqPoly AB = A * B, M1 = AB * AB, M2 = beta1 * beta1;
    FqPoly r1(F);
    if (M1.deg() > 0) {
      const FqPoly d = (gamma * gamma * beta2).scale(FqElem::from_int(F, 2));
      r1 = reduce(-(alpha * invmod(d % M1, M1)), M1);
    }
    const FqPoly theta = crt(r1, M1, g12, M2);
    const FqPoly kappa = reduce((g12 * g12).scale(FqElem::from_int(F, -2)), M1 * M2);
    b.elems = {{{o, z, z}, o}, {{z, o, z}, o}, {{kappa, theta, o}, AB * beta1}};
    b.aux.emplace_back("theta", theta);
    b.aux.emplace_back("kappa", kappa);
  } else {
    // A + B = A G + beta1 gamma^2 beta2 H with deg H < deg A.
    const FqPoly M = beta1 * gamma * gamma * beta2;
    auto [g, s, t] = xgcd(A, M);
    ensure(g.is_one(), "A is coprime to beta1 gamma beta2");
    const FqPoly H = reduce(t * (A + B), A);
    const FqPoly G = (A + B - M * H) / A;
    ensure(A * G + M * H == A + B, "H, G identity");
    const FqPoly T = g12 + A * beta1 * H;
    const FqPoly R = T * T + g12 * g12;
    const FqPoly I = beta1 * A * A;
    b.elems = {{{o, z, z}, o}, {{z, o, z}, o}, {{R, T, o}, I}};
    b.aux.emplace_back("H", H);
    b.aux.emplace_back("G", G);
    b.aux.emplace_back("T", T);
    b.aux.emplace_back("R", R);
    b.aux.emplace_back("I", I);
  }
  return b;
}

RatFunc basis_discriminant(const IntegralBasis& b) {
  const CubicRing ring = b.ring();
  const Field& F = b.param.field();
  RatMatrix m(F, 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) m.at(i, j) = ring.trace(ring.mul(b.element(i), b.element(j)));
  return m.det();
}

bool basis_is_integral(const IntegralBasis& b) {
  const CubicRing ring = b.ring();
  for (size_t i = 0; i < b.elems.size(); ++i)
    for (const auto& c : ring.charpoly(b.element(i)))
      if (!c.is_polynomial()) return false;
  return true;
}

std::vector<FqPoly> basis_ramified_primes(const IntegralBasis& b) {
  std::vector<FqPoly> out;
  auto add = [&](const FqPoly& f) {
    for (const auto& [P, e] : poly_factor(f).factors) out.push_back(P);
  };
  switch (b.family) {
    case BasisFamily::ArtinSchreier:
      add(b.param.den());
      break;
    case BasisFamily::Kummer:
      add(b.param.num());
      break;
    case BasisFamily::Standard:
      add(b.aux_value("beta1").monic() * b.aux_value("beta2"));
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cubicff
