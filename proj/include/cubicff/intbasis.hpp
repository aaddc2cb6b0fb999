#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cubicff/galoiskit.hpp"

namespace cubicff {

// a = alpha / (gamma^3 beta), beta = beta1 beta2^2 with gamma, beta1, beta2 monic.
struct CubeSplit {
  FqPoly alpha, beta, gamma, beta1, beta2;
};

CubeSplit cube_split(const RatFunc& a);

// (num[0] + num[1] w + num[2] w^2) / den.
struct BasisElement {
  std::array<FqPoly, 3> num;
  FqPoly den;
};

enum class BasisFamily { ArtinSchreier, Kummer, Standard };
std::string to_string(BasisFamily f);

struct IntegralBasis {
  BasisFamily family;
  RatFunc param;
  RatPoly gen_poly;  // monic minimal polynomial of w, low degree first
  RatFunc gen_scale;  // w = gen_scale * y
  std::vector<BasisElement> elems;
  std::vector<std::pair<std::string, FqPoly>> aux;

  CubicRing ring() const { return CubicRing::from_poly(gen_poly); }
  CubicRing::Elem element(size_t i) const;
  const FqPoly& aux_value(const std::string& name) const;
};

IntegralBasis as_integral_basis(const RatFunc& a);
IntegralBasis kummer_integral_basis(const RatFunc& a);
IntegralBasis standard_integral_basis(const RatFunc& a);

// det of the trace form on the basis.
RatFunc basis_discriminant(const IntegralBasis& b);
// Every basis element has a characteristic polynomial over F_q[x].
bool basis_is_integral(const IntegralBasis& b);
// Monic irreducibles ramified at finite places according to the family's closed form.
std::vector<FqPoly> basis_ramified_primes(const IntegralBasis& b);

}  // namespace cubicff
