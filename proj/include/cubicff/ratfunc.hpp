#pragma once

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "cubicff/poly.hpp"

namespace cubicff {

// Element of F_q(x) with monic denominator and gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const Field& f) : num_(f), den_(FqPoly::constant(FqElem::one(f))) {}
  RatFunc(const FqPoly& num);  // NOLINT(google-explicit-constructor)
  RatFunc(const FqPoly& num, const FqPoly& den);

  static RatFunc from_int(const Field& f, long long v) { return RatFunc(FqPoly::constant(f, v)); }
  static RatFunc constant(const FqElem& c) { return RatFunc(FqPoly::constant(c)); }
  static RatFunc x(const Field& f) { return RatFunc(FqPoly::x(f)); }

  const FqPoly& num() const { return num_; }
  const FqPoly& den() const { return den_; }
  const Field& field() const { return num_.field(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.deg() == 0; }
  bool is_constant() const { return den_.deg() == 0 && num_.deg() <= 0; }
  FqElem constant_value() const;

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  RatFunc inv() const;
  RatFunc pow(int e) const;
  RatFunc scale(const FqElem& c) const;
  RatFunc operator*(long long k) const { return scale(FqElem::from_int(field(), k)); }
  // Substitutes x -> 1/x.
  RatFunc invert_variable() const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  // Canonical order: numerator first, then denominator.
  bool operator<(const RatFunc& o) const;

  std::string str() const;

 private:
  FqPoly num_, den_;
};

inline RatFunc operator*(long long k, const RatFunc& r) { return r * k; }

constexpr int kInfiniteValuation = INT_MAX;

// A place of F_q(x): a monic irreducible polynomial or the infinite place.
class Place {
 public:
  static Place infinity() { return Place(); }
  static Place finite(const FqPoly& f);

  bool is_infinity() const { return !poly_.has_value(); }
  const FqPoly& poly() const { return *poly_; }
  int degree() const { return is_infinity() ? 1 : poly_->deg(); }
  std::string str() const { return is_infinity() ? "inf" : poly_->str(); }
  bool operator==(const Place& o) const { return poly_ == o.poly_; }
  bool operator!=(const Place& o) const { return !(*this == o); }
  // Finite places in canonical polynomial order, then infinity.
  bool operator<(const Place& o) const;

 private:
  Place() = default;
  explicit Place(FqPoly f) : poly_(std::move(f)) {}
  std::optional<FqPoly> poly_;
};

int valuation(const RatFunc& r, const Place& p);
// Finite places occurring in the numerator or denominator of r.
std::vector<Place> support(const RatFunc& r);
// Finite places of degree at most d, plus infinity.
std::vector<Place> places_up_to_degree(const Field& f, int d);

// k(p) = F_q[x]/(p) materialized as an absolute field.
class ResidueField {
 public:
  explicit ResidueField(const Place& place);

  const Place& place() const { return place_; }
  const Field& base() const { return base_; }
  const Field& field() const { return k_; }
  const Embedding& embedding() const { return emb_; }
  u64 size() const { return k_->q(); }

  FqElem reduce(const FqPoly& f) const;
  // Throws NegativeValuation when r has a pole at the place.
  FqElem reduce(const RatFunc& r) const;

 private:
  Place place_;
  Field base_, k_;
  Embedding emb_;
  FqElem x_image_;
};

FqElem residue(const RatFunc& r, const Place& p);

// Roots of r in F_q(x) of the given order (2 or 3), sorted canonically.
std::vector<RatFunc> ratfunc_roots(const RatFunc& r, int order);
std::optional<RatFunc> ratfunc_sqrt(const RatFunc& r);
std::optional<RatFunc> ratfunc_cbrt(const RatFunc& r);

// Coefficientwise transport between fields.
RatFunc embed(const Embedding& e, const RatFunc& r);
std::optional<RatFunc> pull_back(const Embedding& e, const RatFunc& r);

// Grammar: + - * / ^ and parentheses over integers, x, and t.
RatFunc parse_ratfunc(const std::string& s, const Field& f);
FqPoly parse_poly(const std::string& s, const Field& f);
FqElem parse_elem(const std::string& s, const Field& f);
Place parse_place(const std::string& s, const Field& f);
// Parses "t^3+t+1" over F_p into low-first coefficients.
std::vector<u64> parse_modulus(const std::string& s, u64 p);
// Accepts "q=8", "q=8,mod=t^3+t+1", or "5".
Field parse_field_spec(const std::string& s);

}  // namespace cubicff
