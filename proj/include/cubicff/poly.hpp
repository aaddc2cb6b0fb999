#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cubicff/gfq.hpp"

namespace cubicff {

// Element of F_q[x], coefficients stored low degree first as field codes.
class FqPoly {
 public:
  FqPoly() = default;
  explicit FqPoly(Field f) : field_(std::move(f)) {}
  FqPoly(Field f, std::vector<u64> codes);

  static FqPoly constant(const FqElem& c);
  static FqPoly constant(const Field& f, long long v) { return constant(FqElem::from_int(f, v)); }
  static FqPoly x(const Field& f);
  static FqPoly monomial(const FqElem& c, int k);
  static FqPoly from_elems(const Field& f, const std::vector<FqElem>& coeffs);

  const Field& field() const { return field_; }
  // -1 stands for the zero polynomial.
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const;
  bool is_monic() const;
  FqElem coeff(int i) const;
  FqElem lc() const;
  const std::vector<u64>& codes() const { return c_; }

  FqPoly operator+(const FqPoly& o) const;
  FqPoly operator-(const FqPoly& o) const;
  FqPoly operator*(const FqPoly& o) const;
  FqPoly operator-() const;
  FqPoly& operator+=(const FqPoly& o) { return *this = *this + o; }
  FqPoly& operator-=(const FqPoly& o) { return *this = *this - o; }
  FqPoly& operator*=(const FqPoly& o) { return *this = *this * o; }
  // Euclidean quotient and remainder.
  FqPoly operator/(const FqPoly& o) const;
  FqPoly operator%(const FqPoly& o) const;
  FqPoly scale(const FqElem& c) const;
  FqPoly monic() const;
  FqPoly derivative() const;
  FqPoly shift(int k) const;
  FqPoly pow(int e) const;
  FqElem eval(const FqElem& v) const;
  // Substitutes a polynomial for x.
  FqPoly compose(const FqPoly& inner) const;
  // x^deg * f(1/x) for the given degree bound.
  FqPoly reverse(int degree) const;
  // Applies e -> e^k to every coefficient.
  FqPoly map_coeffs_pow(u64 k) const;

  bool operator==(const FqPoly& o) const;
  bool operator!=(const FqPoly& o) const { return !(*this == o); }
  // Canonical order: degree first, then coefficients from the constant term up.
  bool operator<(const FqPoly& o) const;

  std::string str(const std::string& var = "x") const;
  u64 hash() const;

 private:
  void trim();
  Field field_;
  std::vector<u64> c_;
};

void divmod(const FqPoly& a, const FqPoly& b, FqPoly& q, FqPoly& r);
// Monic gcd (zero if both are zero).
FqPoly gcd(const FqPoly& a, const FqPoly& b);
FqPoly lcm(const FqPoly& a, const FqPoly& b);
// Returns (g, s, t) with g = s a + t b and g monic.
std::tuple<FqPoly, FqPoly, FqPoly> xgcd(const FqPoly& a, const FqPoly& b);
FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m);
FqPoly powmod(const FqPoly& a, u64 e, const FqPoly& m);
// Inverse of a modulo m; throws NotCoprime when it does not exist.
FqPoly invmod(const FqPoly& a, const FqPoly& m);
// Multiplicity of the irreducible f in g (g nonzero).
int poly_valuation(const FqPoly& g, const FqPoly& f);

// Solves A x = b over F_p with A given column-wise (cols[j] has length b.size()).
// Returns the solution with all free variables zero, or none when inconsistent.
std::optional<std::vector<u64>> solve_fp(const std::vector<std::vector<u64>>& cols, const std::vector<u64>& b,
                                         u64 p);

struct Factorization {
  FqElem unit;
  std::vector<std::pair<FqPoly, int>> factors;
  FqPoly expand() const;
};

Factorization poly_factor(const FqPoly& f);
bool poly_is_irreducible(const FqPoly& f);
bool poly_is_squarefree(const FqPoly& f);
// Distinct roots in F_q, canonical order.
std::vector<FqElem> poly_roots(const FqPoly& f);
// Returns h with h^r = f exactly, choosing the canonically smallest such h.
std::optional<FqPoly> poly_exact_root(const FqPoly& f, int r);
// All monic divisors, sorted canonically.
std::vector<FqPoly> monic_divisors(const FqPoly& f);
// Monic irreducibles of the given degree, sorted canonically.
std::vector<FqPoly> monic_irreducibles(const Field& f, int degree);

// Field embedding F_{p^a} -> F_{p^b} sending the source generator to a chosen root.
class Embedding {
 public:
  Embedding() = default;
  Embedding(Field src, Field dst, FqElem gen_image);

  const Field& src() const { return src_; }
  const Field& dst() const { return dst_; }
  const FqElem& gen_image() const { return gen_image_; }
  FqElem apply(const FqElem& e) const;
  FqPoly apply(const FqPoly& f) const;
  std::optional<FqElem> preimage(const FqElem& e) const;
  std::optional<FqPoly> preimage(const FqPoly& f) const;

 private:
  Field src_, dst_;
  FqElem gen_image_;
  std::vector<FqElem> basis_images_;
};

// Canonical embedding: the source generator goes to the smallest root of its modulus.
Embedding make_embedding(const Field& src, const Field& dst);

// F_{q^2} presented both as pairs over the norm-form extension and as an absolute field.
class QuadAbs {
 public:
  explicit QuadAbs(const Field& base);

  const QuadExt& ext() const { return ext_; }
  const Field& base() const { return ext_.base(); }
  const Field& big() const { return big_; }
  const Embedding& embedding() const { return emb_; }
  const FqElem& t_image() const { return t_; }
  FqElem to_abs(const QuadElem& z) const;
  QuadElem from_abs(const FqElem& z) const;
  // The nontrivial automorphism z -> z^q.
  FqElem conj(const FqElem& z) const { return z.pow(base()->q()); }
  FqPoly conj(const FqPoly& f) const { return f.map_coeffs_pow(base()->q()); }
  // Splits a polynomial over F_{q^2} into A + tB with A, B over F_q.
  std::pair<FqPoly, FqPoly> split(const FqPoly& z) const;
  FqPoly combine(const FqPoly& a, const FqPoly& b) const;

 private:
  QuadExt ext_;
  Field big_;
  Embedding emb_;
  FqElem t_;
};

const QuadAbs& quad_abs(const Field& base);

Factorization factor_over_quad_ext(const FqPoly& f);

struct CubeWitness {
  FqElem unit;
  FqPoly root;  // monic, g = unit * root^3
  bool unit_is_cube;
};

std::optional<CubeWitness> is_cube_up_to_unit(const FqPoly& g);

}  // namespace cubicff
