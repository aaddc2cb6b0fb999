#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubicff/quotient.hpp"

namespace cubicff {

// T(X) = X^3 + eX^2 + fX + g over F_q(x).
struct CubicInput {
  RatFunc e, f, g;
  RatPoly polynomial() const;
};

// One step of a generator substitution y -> y'.
struct Substitution {
  enum class Kind { Moebius, Scale, Shift, Invert };
  Kind kind;
  // Moebius: y' = (c[0] y + c[1]) / (c[2] y + c[3]); Scale: y' = c[0] y; Shift: y' = y + c[0].
  std::vector<RatFunc> c;

  static Substitution moebius(const RatFunc& c1, const RatFunc& c2, const RatFunc& c3, const RatFunc& c4);
  static Substitution scale(const RatFunc& c);
  static Substitution shift(const RatFunc& c);
  static Substitution invert();
  std::string str() const;
};

using SubstitutionChain = std::vector<Substitution>;

// Applies the chain to an element of the quotient ring.
CubicRing::Elem apply_chain(const CubicRing& ring, const SubstitutionChain& chain, const CubicRing::Elem& y);

enum class CanonicalKind { StandardForm, PurelyCubic, ArtinSchreier, Char3Separable, Inseparable };
std::string to_string(CanonicalKind k);

struct CanonicalCubic {
  CanonicalKind kind;
  RatFunc param;
  SubstitutionChain chain;

  // StandardForm X^3-3X-a, PurelyCubic X^3-b, ArtinSchreier X^3-X-a,
  // Char3Separable X^3+bX+b^2, Inseparable X^3+b.
  RatPoly polynomial() const;
  const Field& field() const { return param.field(); }
  static CanonicalCubic standard(const RatFunc& a) { return {CanonicalKind::StandardForm, a, {}}; }
  static CanonicalCubic pure(const RatFunc& b) { return {CanonicalKind::PurelyCubic, b, {}}; }
  static CanonicalCubic artin_schreier(const RatFunc& a) { return {CanonicalKind::ArtinSchreier, a, {}}; }
};

RatPoly canonical_polynomial(CanonicalKind kind, const RatFunc& param);

// True when the cubic has no root in F_q(x).
bool cubic_is_irreducible(const RatPoly& monic_cubic);

// X^3 + aX + b via X -> X - e/3.
std::pair<RatFunc, RatFunc> depress(const CubicInput& in);
// Discriminant of a monic cubic.
RatFunc cubic_discriminant(const RatPoly& monic_cubic);

CanonicalCubic normalize(const CubicInput& in);

// For Char3Separable b: the Artin-Schreier form when -b is a square.
std::optional<CanonicalCubic> char3_to_artin_schreier(const CanonicalCubic& c);

struct ASStandard {
  RatFunc c;  // standardized parameter
  RatFunc w;  // c = a + w^3 - w
};
ASStandard as_standardize(const RatFunc& a);
// The pole reduction of as_standardize without the degeneracy check.
ASStandard as_reduce(const RatFunc& a);

struct KummerStandard {
  RatFunc b;  // cube-free polynomial times a unit
  RatFunc c;  // b = a * c^3
};
KummerStandard kummer_standardize(const RatFunc& a);

struct PureCubicWitness {
  RatFunc k, b;
  RatFunc u_const;  // u = y^2 + k y + u_const
  CubicRing::Elem u(const CubicRing& ring) const;
};
std::optional<PureCubicWitness> purely_cubic_test(const RatFunc& a);

// Root of X^2 + X = c in F_q(x) for p = 2, smaller of the two roots.
std::optional<RatFunc> solve_as_quadratic(const RatFunc& c);

}  // namespace cubicff
