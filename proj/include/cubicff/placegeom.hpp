#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubicff/action.hpp"
#include "cubicff/intbasis.hpp"

namespace cubicff {

struct RamifiedPlace {
  Place place;
  int diff_exponent;
  std::optional<int> m;  // Artin-Schreier jump
  bool operator==(const RamifiedPlace& o) const {
    return place == o.place && diff_exponent == o.diff_exponent && m == o.m;
  }
};

enum class SplitType { Ramified, Inert, TotallySplit };
std::string to_string(SplitType t);

// (e, f, r) with e f r = 3.
struct LocalDegrees {
  int e, f, r;
};
LocalDegrees local_degrees(SplitType t);

// Ramified places of a geometric Galois cubic, sorted by place.
std::vector<RamifiedPlace> ramified_places(const CanonicalCubic& c);
// Family genus formula, cross-checked against Riemann-Hurwitz.
int genus(const CanonicalCubic& c);
// g = -2 + (1/2) sum d(P) deg(P) for a cubic extension of F_q(x).
int riemann_hurwitz_genus(const std::vector<RamifiedPlace>& ramified);

struct GeneratorValuations {
  int rule;                 // 1..5
  std::vector<int> values;  // v_P(y) at each place above p
};
GeneratorValuations generator_valuations(const RatFunc& a, const Place& p);

struct SplitResult {
  SplitType type;
  std::string rule;  // which criterion decided
};

SplitType splitting_type(const CanonicalCubic& c, const Place& p);
SplitResult splitting_type_detailed(const CanonicalCubic& c, const Place& p);

// Inertness of X^3 - 3X - abar over the residue field holding abar, abar^2 != 4:
// a root of T^2 - abar T + 1 is a non-cube in k(cube roots of unity, that root).
bool dickson_inert(const FqElem& abar);
// The two cube formulations for |k(p)| = 1 mod 3 and p > 3, at v_p(a) = 0.
bool half_sum_not_cube(const FqElem& abar);
bool norm_witness_not_cube(const RatFunc& a, const Place& p);

// The integral basis used by the order oracle for c (after standardizing AS and Kummer parameters).
IntegralBasis order_basis(const CanonicalCubic& c);
// Decomposes O_L / p O_L over k(p) for a finite place.
SplitType split_via_order(const IntegralBasis& basis, const Place& p);
// As above; the infinite place is moved to x = 0 through x -> 1/x.
SplitType split_via_order(const CanonicalCubic& c, const Place& p);

}  // namespace cubicff
