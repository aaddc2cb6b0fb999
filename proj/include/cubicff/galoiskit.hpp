#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubicff/normalform.hpp"

namespace cubicff {

// X^2 + (ef - 3g) X + (e^3 g + f^3 + 9g^2 - 6efg), low degree first.
RatPoly quadratic_resolvent(const RatFunc& e, const RatFunc& f, const RatFunc& g);

enum class ClosureKind {
  AlreadyGalois,
  PureCubicTimesConstantQuadratic,
  StandardTimesKummerQuadratic,
  Char3KummerThenArtinSchreier,
  StandardTimesArtinSchreierQuadratic,
};
std::string to_string(ClosureKind k);

struct ClosureDescriptor {
  ClosureKind kind;
  RatPoly quadratic;  // generator equation of the quadratic layer, low degree first
};

struct GaloisResult {
  bool galois;
  ClosureDescriptor closure;
};

GaloisResult is_galois(const CanonicalCubic& c);
// Normalizes first; the answer is a property of the field.
GaloisResult is_galois(const CubicInput& in);
// Galois test of a raw cubic by discriminant (p != 2) or resolvent root (p = 2).
bool is_galois_direct(const CubicInput& in);

// Q = A^2 + 3^{-1} B^2 (p != 2) or A^2 + AB + B^2 (p = 2).
struct NormFormWitness {
  FqPoly A, B;
  FqElem u, v;  // unit part u + tv (or u + xi v)
  bool char2;
  FqPoly norm() const;
  bool operator==(const NormFormWitness& o) const { return A == o.A && B == o.B; }
  bool operator<(const NormFormWitness& o) const { return A < o.A || (A == o.A && B < o.B); }
};

FqPoly norm_form(const FqPoly& A, const FqPoly& B);
std::vector<NormFormWitness> norm_decompose(const FqPoly& Q);

RatFunc construct_galois_a(const FqPoly& A, const FqPoly& B);
// (A, B) with construct_galois_a(A, B) == a exactly; NotGaloisShape when none exists.
std::pair<FqPoly, FqPoly> galois_witness(const RatFunc& a);

// The F_{q^2} polynomial whose cube class decides reducibility: A + tB, or B + xi A when p = 2.
FqPoly cube_test_polynomial(const FqPoly& A, const FqPoly& B);

bool is_irreducible_standard(const RatFunc& a);
bool is_constant_extension(const CanonicalCubic& c);

}  // namespace cubicff
