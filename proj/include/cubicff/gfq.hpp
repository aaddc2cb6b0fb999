#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubicff/error.hpp"

namespace cubicff {

using u64 = std::uint64_t;

// Integer helpers shared across modules.
bool is_prime_u64(u64 n);
std::vector<std::pair<u64, int>> factor_u64(u64 n);
// Returns (p, n) with q = p^n, or nullopt if q is not a prime power.
std::optional<std::pair<u64, int>> prime_power(u64 q);

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

// F_q = F_p[t]/(modulus). Elements are encoded as sum c_i p^i over the power basis.
class FieldSpec {
 public:
  FieldSpec(u64 p, int n, std::vector<u64> modulus);

  u64 p() const { return p_; }
  int n() const { return n_; }
  u64 q() const { return q_; }
  // Monic, low degree first, length n + 1.
  const std::vector<u64>& modulus() const { return modulus_; }
  bool is_prime_field() const { return n_ == 1; }
  bool same_as(const FieldSpec& other) const;
  std::string describe() const;

  u64 add(u64 a, u64 b) const;
  u64 sub(u64 a, u64 b) const;
  u64 neg(u64 a) const;
  u64 mul(u64 a, u64 b) const;
  u64 inv(u64 a) const;
  u64 pow(u64 a, u64 e) const;
  u64 from_int(long long v) const;
  // Code of the generator t. In a prime field this is just 1.
  u64 generator() const { return n_ == 1 ? 1 : p_; }

  std::vector<u64> coords(u64 code) const;
  u64 encode(const std::vector<u64>& coords) const;
  // Canonical order: lexicographic on (c0, c1, ...).
  u64 rank(u64 code) const;
  bool less(u64 a, u64 b) const { return rank(a) < rank(b); }
  u64 from_rank(u64 r) const;

 private:
  u64 mul_slow(u64 a, u64 b) const;
  void build_tables();

  u64 p_;
  int n_;
  u64 q_;
  std::vector<u64> modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

// Builds F_{p^n}. Without a modulus, picks the lexicographically smallest monic
// irreducible (coefficients compared from the constant term upward).
Field make_field(u64 p, int n, std::optional<std::vector<u64>> modulus = std::nullopt);
Field make_field_q(u64 q);
bool same_field(const Field& a, const Field& b);
void require_same_field(const Field& a, const Field& b);

class FqElem {
 public:
  FqElem() = default;
  FqElem(Field field, u64 code) : field_(std::move(field)), code_(code) {}

  static FqElem zero(const Field& f) { return {f, 0}; }
  static FqElem one(const Field& f) { return {f, f->from_int(1)}; }
  static FqElem from_int(const Field& f, long long v) { return {f, f->from_int(v)}; }
  static FqElem gen(const Field& f) { return {f, f->generator()}; }

  const Field& field() const { return field_; }
  u64 code() const { return code_; }
  bool valid() const { return static_cast<bool>(field_); }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == field_->from_int(1); }

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const;
  FqElem operator-() const { return {field_, field_->neg(code_)}; }
  FqElem& operator+=(const FqElem& o) { return *this = *this + o; }
  FqElem& operator-=(const FqElem& o) { return *this = *this - o; }
  FqElem& operator*=(const FqElem& o) { return *this = *this * o; }
  FqElem inv() const;
  FqElem pow(u64 e) const { return {field_, field_->pow(code_, e)}; }

  bool operator==(const FqElem& o) const;
  bool operator!=(const FqElem& o) const { return !(*this == o); }
  // Canonical order on coordinates.
  bool operator<(const FqElem& o) const;

  std::vector<u64> coords() const { return field_->coords(code_); }
  std::string str() const;

 private:
  Field field_;
  u64 code_ = 0;
};

bool fq_is_square(const FqElem& e);
std::optional<FqElem> fq_sqrt(const FqElem& e);
bool fq_is_cube(const FqElem& e);
std::optional<FqElem> fq_cube_root(const FqElem& e);
// All r-th roots (r = 2 or 3), sorted canonically.
std::vector<FqElem> fq_roots_of(const FqElem& e, int r);
// Absolute trace to the prime field, returned as an element of F_q.
FqElem fq_trace(const FqElem& e);
int fq_trace_to_F2(const FqElem& e);
// p-th root (inverse Frobenius).
FqElem fq_frobenius_root(const FqElem& e);
// Canonical primitive cube root of unity, if q = 1 mod 3.
std::optional<FqElem> fq_cube_root_of_unity(const Field& f);
// Roots of X^2 + X = c in characteristic 2, canonical order.
std::vector<FqElem> fq_solve_as_quadratic(const FqElem& c);
// Roots of X^2 + bX + c, canonical order, any characteristic.
std::vector<FqElem> fq_quadratic_roots(const FqElem& b, const FqElem& c);
FqElem fq_inverse_of_three(const Field& f);
std::vector<FqElem> all_elements(const Field& f);

enum class QuadKind { SqrtNegThird, CubeRootUnity, Generic };

struct QuadElem {
  FqElem a;  // coefficient of 1
  FqElem b;  // coefficient of t (or xi)
};

// F_q(t) with t^2 + c1 t + c0 = 0.
class QuadExt {
 public:
  QuadExt(Field base, QuadKind kind, FqElem c1, FqElem c0);

  const Field& base() const { return base_; }
  QuadKind kind() const { return kind_; }
  const FqElem& c1() const { return c1_; }
  const FqElem& c0() const { return c0_; }

  QuadElem make(const FqElem& a, const FqElem& b) const { return {a, b}; }
  QuadElem from_base(const FqElem& a) const { return {a, FqElem::zero(base_)}; }
  QuadElem zero() const { return from_base(FqElem::zero(base_)); }
  QuadElem one() const { return from_base(FqElem::one(base_)); }
  QuadElem gen() const { return {FqElem::zero(base_), FqElem::one(base_)}; }

  QuadElem add(const QuadElem& x, const QuadElem& y) const;
  QuadElem sub(const QuadElem& x, const QuadElem& y) const;
  QuadElem mul(const QuadElem& x, const QuadElem& y) const;
  QuadElem inv(const QuadElem& x) const;
  QuadElem pow(const QuadElem& x, u64 e) const;
  QuadElem conjugate(const QuadElem& x) const;
  FqElem norm(const QuadElem& x) const;
  bool equal(const QuadElem& x, const QuadElem& y) const { return x.a == y.a && x.b == y.b; }

 private:
  Field base_;
  QuadKind kind_;
  FqElem c1_;
  FqElem c0_;
};

// The norm-form extension used throughout: t^2 = -1/3 for p != 2, xi^2 + xi + 1 = 0 for p = 2.
QuadExt quad_ext(const Field& base);
QuadExt quad_ext_generic(const Field& base, const FqElem& c1, const FqElem& c0);

// All (u, v) with N(u + t v) = w, sorted by (u, v) in canonical order.
std::vector<std::pair<FqElem, FqElem>> enumerate_unit_norm_reps(const FqElem& w);

}  // namespace cubicff
