#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cubicff/galoiskit.hpp"

namespace cubicff {

// sigma(z) = c2 z^2 + c1 z + c0 for a generator z of X^3 - 3X - a.
struct ActionDescriptor {
  RatFunc a, f;
  RatFunc c2, c1, c0;
  CubicRing ring() const;
  CubicRing::Elem sigma() const;
  CubicRing::Elem sigma2() const;
  // Applies sigma to an arbitrary ring element.
  CubicRing::Elem apply(const CubicRing::Elem& e) const;
};

ActionDescriptor galois_action(const RatFunc& a);

struct ConicPoint {
  RatFunc phi, chi;
  bool operator==(const ConicPoint& o) const { return phi == o.phi && chi == o.chi; }
  bool operator<(const ConicPoint& o) const { return phi < o.phi || (phi == o.phi && chi < o.chi); }
};

bool on_conic(const RatFunc& a1, const ConicPoint& pt);
// Second intersection of the conic with the line through (0, 1) of slope m in (phi, chi).
ConicPoint conic_point_from_slope(const RatFunc& a1, const RatFunc& m);

struct GeneratorTransform {
  RatFunc a2;
  RatMatrix forward;  // row i: coordinates of z2^i in 1, z1, z1^2
  RatMatrix inverse;
};

GeneratorTransform transform_generator(const RatFunc& a1, const ConicPoint& pt);

// All conic points taking a1 to a2, canonical order.
std::vector<ConicPoint> same_field_points(const RatFunc& a1, const RatFunc& a2);
std::optional<ConicPoint> same_field_standard(const RatFunc& a1, const RatFunc& a2);

// a1 = j a2 + (b^3 - b).
std::optional<std::pair<int, RatFunc>> as_same_field(const RatFunc& a1, const RatFunc& a2);
// a1 = a2^j c^3.
std::optional<std::pair<int, RatFunc>> kummer_same_field(const RatFunc& a1, const RatFunc& a2);

}  // namespace cubicff
