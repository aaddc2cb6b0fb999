#pragma once

#include <array>
#include <string>
#include <vector>

#include "cubicff/ratfunc.hpp"

namespace cubicff {

// Polynomial over F_q(x), low degree first.
using RatPoly = std::vector<RatFunc>;

std::string ratpoly_str(const RatPoly& p, const std::string& var = "X");
// Evaluates a polynomial over F_q(x) at a rational function.
RatFunc ratpoly_eval(const RatPoly& p, const RatFunc& at);

// Square matrix over F_q(x), row-major.
class RatMatrix {
 public:
  RatMatrix(const Field& f, size_t n);
  static RatMatrix identity(const Field& f, size_t n);

  size_t size() const { return n_; }
  const Field& field() const { return f_; }
  RatFunc& at(size_t i, size_t j) { return a_[i * n_ + j]; }
  const RatFunc& at(size_t i, size_t j) const { return a_[i * n_ + j]; }

  RatMatrix operator*(const RatMatrix& o) const;
  bool operator==(const RatMatrix& o) const { return a_ == o.a_; }
  RatFunc det() const;
  // Throws DivisionByZero when singular.
  RatMatrix inverse() const;
  RatMatrix transpose() const;
  std::vector<std::vector<std::string>> strs() const;

 private:
  Field f_;
  size_t n_;
  std::vector<RatFunc> a_;
};

// Solves M v = b for invertible M.
std::vector<RatFunc> solve(const RatMatrix& m, const std::vector<RatFunc>& b);

// F_q(x)[z]/(z^3 + c2 z^2 + c1 z + c0), elements as coefficient triples in 1, z, z^2.
class CubicRing {
 public:
  using Elem = std::array<RatFunc, 3>;

  CubicRing(const RatFunc& c0, const RatFunc& c1, const RatFunc& c2);
  // From a monic cubic given low degree first (four entries).
  static CubicRing from_poly(const RatPoly& monic_cubic);

  const Field& field() const { return c0_.field(); }
  RatPoly modulus() const;

  Elem zero() const;
  Elem one() const;
  Elem gen() const;
  Elem scalar(const RatFunc& c) const;
  Elem make(const RatFunc& a0, const RatFunc& a1, const RatFunc& a2) const { return {a0, a1, a2}; }

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(const Elem& a, const RatFunc& c) const;
  Elem pow(const Elem& a, long long e) const;
  // Throws DivisionByZero when a is a zero divisor.
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  // Horner evaluation of a polynomial over F_q(x) at a ring element.
  Elem eval(const RatPoly& p, const Elem& at) const;

  // Column j holds the coordinates of a * z^j.
  RatMatrix mult_matrix(const Elem& a) const;
  RatFunc trace(const Elem& a) const;
  RatFunc norm(const Elem& a) const;
  // Monic characteristic polynomial, low degree first.
  RatPoly charpoly(const Elem& a) const;

  std::string str(const Elem& a, const std::string& var = "z") const;

 private:
  RatFunc c0_, c1_, c2_;
  Elem z3_, z4_;
};

// All roots in F_q(x) of a nonzero polynomial over F_q(x), canonical order.
// Candidates come from Newton polygons at the finite primes of the extreme
// coefficients and at infinity, and each is verified exactly.
std::vector<RatFunc> rational_roots(const RatPoly& coeffs);

}  // namespace cubicff
