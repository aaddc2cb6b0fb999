#include "cubicff/normalform.hpp"

namespace cubicff {

namespace {

RatFunc one(const Field& F) { return RatFunc::from_int(F, 1); }
RatFunc num(const Field& F, long long v) { return RatFunc::from_int(F, v); }

void require_same(const CubicInput& in) {
  require_same_field(in.e.field(), in.f.field());
  require_same_field(in.e.field(), in.g.field());
}

}  // namespace

RatPoly CubicInput::polynomial() const { return {g, f, e, one(g.field())}; }

Substitution Substitution::moebius(const RatFunc& c1, const RatFunc& c2, const RatFunc& c3, const RatFunc& c4) {
  return {Kind::Moebius, {c1, c2, c3, c4}};
}
Substitution Substitution::scale(const RatFunc& c) { return {Kind::Scale, {c}}; }
Substitution Substitution::shift(const RatFunc& c) { return {Kind::Shift, {c}}; }
Substitution Substitution::invert() { return {Kind::Invert, {}}; }

std::string Substitution::str() const {
  switch (kind) {
    case Kind::Moebius:
      return "moebius(" + c[0].str() + "," + c[1].str() + "," + c[2].str() + "," + c[3].str() + ")";
    case Kind::Scale:
      return "scale(" + c[0].str() + ")";
    case Kind::Shift:
      return "shift(" + c[0].str() + ")";
    case Kind::Invert:
      return "invert";
  }
  return "";
}

CubicRing::Elem apply_chain(const CubicRing& ring, const SubstitutionChain& chain, const CubicRing::Elem& y) {
  CubicRing::Elem cur = y;
  for (const auto& s : chain) {
    switch (s.kind) {
      case Substitution::Kind::Moebius: {
        auto top = ring.add(ring.scale(cur, s.c[0]), ring.scalar(s.c[1]));
        auto bot = ring.add(ring.scale(cur, s.c[2]), ring.scalar(s.c[3]));
        cur = ring.mul(top, ring.inv(bot));
        break;
      }
      case Substitution::Kind::Scale:
        cur = ring.scale(cur, s.c[0]);
        break;
      case Substitution::Kind::Shift:
        cur = ring.add(cur, ring.scalar(s.c[0]));
        break;
      case Substitution::Kind::Invert:
        cur = ring.inv(cur);
        break;
    }
  }
  return cur;
}

std::string to_string(CanonicalKind k) {
  switch (k) {
    case CanonicalKind::StandardForm:
      return "standard";
    case CanonicalKind::PurelyCubic:
      return "purely_cubic";
    case CanonicalKind::ArtinSchreier:
      return "artin_schreier";
    case CanonicalKind::Char3Separable:
      return "char3_separable";
    case CanonicalKind::Inseparable:
      return "inseparable";
  }
  return "";
}

RatPoly canonical_polynomial(CanonicalKind kind, const RatFunc& t) {
  const Field& F = t.field();
  const RatFunc z(F), o = one(F);
  switch (kind) {
    case CanonicalKind::StandardForm:
      return {-t, num(F, -3), z, o};
    case CanonicalKind::PurelyCubic:
      return {-t, z, z, o};
    case CanonicalKind::ArtinSchreier:
      return {-t, num(F, -1), z, o};
    case CanonicalKind::Char3Separable:
      return {t * t, t, z, o};
    case CanonicalKind::Inseparable:
      return {t, z, z, o};
  }
  return {};
}

RatPoly CanonicalCubic::polynomial() const { return canonical_polynomial(kind, param); }

bool cubic_is_irreducible(const RatPoly& p) {
  ensure(p.size() == 4, "cubic has four coefficients");
  return rational_roots(p).empty();
}

std::pair<RatFunc, RatFunc> depress(const CubicInput& in) {
  require_same(in);
  const Field& F = in.e.field();
  if (F->p() == 3) fail(ErrorKind::WrongCharacteristic, "depressing a cubic needs characteristic other than 3");
  const RatFunc third = num(F, 3).inv();
  RatFunc a = in.f - in.e * in.e * third;
  RatFunc b = in.g - in.e * in.f * third + in.e.pow(3) * num(F, 2) * third.pow(3);
  return {a, b};
}

RatFunc cubic_discriminant(const RatPoly& p) {
  const RatFunc &g = p[0], &f = p[1], &e = p[2];
  return e * e * f * f - f.pow(3) * 4 - e.pow(3) * g * 4 - g * g * 27 + e * f * g * 18;
}

CanonicalCubic normalize(const CubicInput& in) {
  require_same(in);
  const Field& F = in.e.field();
  const RatFunc &e = in.e, &f = in.f, &g = in.g;
  if (g.is_zero()) fail(ErrorKind::ZeroConstantTerm, "the cubic has zero constant term, so X divides it");
  if (F->p() == 3 && e.is_zero() && f.is_zero()) {
    if (ratfunc_cbrt(-g)) fail(ErrorKind::ReducibleInput, "X^3 + g is reducible since -g is a cube");
    return {CanonicalKind::Inseparable, g, {}};
  }
  if (!cubic_is_irreducible(in.polynomial()))
    fail(ErrorKind::ReducibleInput, "the cubic has a root in F_q(x)");

  if (F->p() != 3) {
    const RatFunc third = num(F, 3).inv();
    const RatFunc s = f * (g * 3).inv();  // f/(3g)
    const RatFunc gamma = one(F) - e * s + f.pow(3) * num(F, 2) * (g * g * 27).inv();
    const RatFunc alpha = e - f * s;
    SubstitutionChain chain{Substitution::moebius(one(F), RatFunc(F), s, one(F))};
    if (alpha.is_zero()) return {CanonicalKind::PurelyCubic, -g / gamma, chain};
    chain.push_back(Substitution::scale(gamma / alpha));
    chain.push_back(Substitution::shift(third));
    chain.push_back(Substitution::scale(num(F, 3)));
    RatFunc top = g * g * 27 - e * f * g * 9 + f.pow(3) * 2;
    RatFunc bot = g * e * 3 - f * f;
    return {CanonicalKind::StandardForm, num(F, -2) - top * top / bot.pow(3), chain};
  }

  SubstitutionChain chain;
  RatFunc b;
  if (e.is_zero()) {
    chain = {Substitution::invert(), Substitution::scale(g / f)};
    b = g * g / f.pow(3);
  } else {
    chain = {Substitution::shift(-f / e), Substitution::scale(e.inv())};
    b = f * f * 2 / e.pow(4) + g / e.pow(3) + f.pow(3) / e.pow(6);
  }
  chain.push_back(Substitution::invert());
  chain.push_back(Substitution::scale(b));
  return {CanonicalKind::Char3Separable, b, chain};
}

std::optional<CanonicalCubic> char3_to_artin_schreier(const CanonicalCubic& c) {
  if (c.field()->p() != 3) fail(ErrorKind::WrongCharacteristic, "Artin-Schreier conversion needs characteristic 3");
  ensure(c.kind == CanonicalKind::Char3Separable, "char3_to_artin_schreier takes a separable char-3 form");
  auto s = ratfunc_sqrt(-c.param);
  if (!s) return std::nullopt;
  CanonicalCubic out{CanonicalKind::ArtinSchreier, *s, c.chain};
  out.chain.push_back(Substitution::scale(-s->inv()));
  return out;
}

}  // namespace cubicff
