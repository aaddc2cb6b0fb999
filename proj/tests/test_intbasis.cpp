#include <functional>
#include <random>

#include "cubicff/intbasis.hpp"
#include "doctest.h"

using namespace cubicff;

namespace {

RatFunc R(const std::string& s, const Field& F) { return parse_ratfunc(s, F); }
FqPoly P(const std::string& s, const Field& F) { return parse_poly(s, F); }
RatFunc I(const Field& F, long long v) { return RatFunc::from_int(F, v); }

FqPoly random_poly(const Field& F, int deg, std::mt19937_64& rng) {
  std::vector<u64> c(static_cast<size_t>(deg) + 1);
  for (auto& v : c) v = rng() % F->q();
  return FqPoly(F, c);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

// disc / prod P^e is a nonzero constant.
bool disc_matches(const RatFunc& disc, const std::vector<std::pair<FqPoly, int>>& expected) {
  if (disc.is_zero()) return false;
  RatFunc rest = disc;
  for (const auto& [Pp, e] : expected) rest = rest / RatFunc(Pp.pow(e));
  return rest.is_constant();
}

void check_basis(const IntegralBasis& b, const std::vector<std::pair<FqPoly, int>>& expected) {
  CHECK(basis_is_integral(b));
  CHECK(disc_matches(basis_discriminant(b), expected));
}

}  // namespace

TEST_CASE("cube split") {
  auto F5 = make_field(5, 1);
  auto s = cube_split(R("(2*x^2+1)/(x^2+2)", F5));
  CHECK(s.gamma.is_one());
  CHECK(s.beta1 == P("x^2+2", F5));
  CHECK(s.beta2.is_one());
  CHECK(s.alpha == P("2*x^2+1", F5));
  auto c = cube_split(R("1/x^3", F5));
  CHECK(c.gamma == P("x", F5));
  CHECK(c.beta.is_one());
  auto d = cube_split(R("1/(x*(x+1)^2)", F5));
  CHECK(d.beta1 == P("x", F5));
  CHECK(d.beta2 == P("x+1", F5));
  CHECK(d.gamma.is_one());
  CHECK(kind_of([&] { cube_split(RatFunc(F5)); }) == ErrorKind::ZeroInput);

  // omega = gamma beta1 beta2 y satisfies the scaled cubic.
  RatFunc a = R("(x+3)/(x^4*(x+1)^2*(x+2)^5)", F5);
  auto t = cube_split(a);
  CubicRing ring = CubicRing::from_poly(canonical_polynomial(CanonicalKind::StandardForm, a));
  auto om = ring.scale(ring.gen(), RatFunc(t.gamma * t.beta1 * t.beta2));
  RatFunc g12(t.gamma * t.beta1 * t.beta2);
  auto lhs = ring.sub(ring.sub(ring.pow(om, 3), ring.scale(om, g12 * g12 * 3)),
                      ring.scalar(RatFunc(t.alpha * t.beta1 * t.beta1 * t.beta2)));
  CHECK(ring.is_zero(lhs));
}

TEST_CASE("Artin-Schreier integral bases") {
  auto F3 = make_field(3, 1);
  auto b = as_integral_basis(R("1/x", F3));
  CHECK(b.aux_value("S1") == P("x", F3));
  CHECK(b.aux_value("S2") == P("x", F3));
  check_basis(b, {{P("x", F3), 4}});
  auto p = as_integral_basis(R("x^2+1", F3));
  CHECK(p.aux_value("S1").is_one());
  CHECK(p.aux_value("S2").is_one());
  check_basis(p, {});
  auto b2 = as_integral_basis(R("1/x^2", F3));
  CHECK(b2.aux_value("S1") == P("x", F3));
  CHECK(b2.aux_value("S2") == P("x^2", F3));
  check_basis(b2, {{P("x", F3), 6}});
  CHECK(kind_of([&] { as_integral_basis(R("1/x^3", F3)); }) == ErrorKind::NotStandardForm);

  std::mt19937_64 rng(3);
  for (u64 q : {3, 9}) {
    auto F = make_field_q(q);
    for (int i = 0; i < 15; ++i) {
      RatFunc a(random_poly(F, 3, rng), P("x^2*(x+1)^4*(x^2+1)^5", F));
      ASStandard s;
      try {
        s = as_standardize(a);
      } catch (const Error&) {
        continue;
      }
      auto bb = as_integral_basis(s.c);
      std::vector<std::pair<FqPoly, int>> expect;
      for (const auto& [Pp, lam] : poly_factor(s.c.den()).factors) expect.emplace_back(Pp, 2 * (lam + 1));
      check_basis(bb, expect);
    }
  }
}

TEST_CASE("Kummer integral bases") {
  auto F4 = make_field_q(4);
  auto b = kummer_integral_basis(R("x", F4));
  CHECK(b.aux_value("S1").is_one());
  CHECK(b.aux_value("S2").is_one());
  check_basis(b, {{P("x", F4), 2}});
  auto b2 = kummer_integral_basis(R("x^2", F4));
  CHECK(b2.aux_value("S1").is_one());
  CHECK(b2.aux_value("S2") == P("x", F4));
  check_basis(b2, {{P("x", F4), 2}});
  auto F7 = make_field(7, 1);
  auto b3 = kummer_integral_basis(R("x*(x+1)^2", F7));
  CHECK(b3.aux_value("S1").is_one());
  CHECK(b3.aux_value("S2") == P("x+1", F7));
  check_basis(b3, {{P("x", F7), 2}, {P("x+1", F7), 2}});
  CHECK(kind_of([&] { kummer_integral_basis(R("x^3", F7)); }) == ErrorKind::NotStandardForm);
  CHECK(kind_of([&] { kummer_integral_basis(R("1/x", F7)); }) == ErrorKind::NotStandardForm);
  CHECK(kind_of([&] { kummer_integral_basis(R("x", make_field(5, 1))); }) == ErrorKind::WrongResidue);
}

TEST_CASE("standard-form basis, odd characteristic") {
  auto F5 = make_field(5, 1);
  RatFunc a = R("(2*x^2+1)/(x^2+2)", F5);
  auto b = standard_integral_basis(a);
  const FqPoly &A = b.aux_value("A"), &B = b.aux_value("B"), &theta = b.aux_value("theta");
  const FqPoly &kappa = b.aux_value("kappa"), &alpha = b.aux_value("alpha"), &beta1 = b.aux_value("beta1");
  CHECK((A * B).monic() == P("x", F5));
  CHECK(beta1.monic() == P("x^2+2", F5));
  const FqPoly M1 = (A * B).pow(2);
  // theta = -alpha / (2 gamma^2 beta2) mod (AB)^2, and theta = gamma beta1 beta2 mod beta1^2.
  CHECK(((theta * FqPoly::constant(F5, 2) + alpha) % M1).is_zero());
  CHECK(((theta - beta1) % (beta1 * beta1)).is_zero());
  CHECK(((kappa + (beta1 * beta1).scale(FqElem::from_int(F5, 2))) % (M1 * beta1 * beta1)).is_zero());
  check_basis(b, {{P("x^2+2", F5), 2}});
  CHECK(basis_ramified_primes(b) == std::vector<FqPoly>{P("x^2+2", F5)});
  CHECK(kind_of([&] { standard_integral_basis(R("1/x", F5)); }) == ErrorKind::NotGalois);
  CHECK(kind_of([&] { standard_integral_basis(R("x", make_field(7, 1))); }) == ErrorKind::WrongResidue);
}

TEST_CASE("standard-form basis, characteristic 2") {
  auto F2 = make_field(2, 1);
  auto b = standard_integral_basis(R("x^2/(x^2+x+1)", F2));
  CHECK(b.aux_value("A") == P("x", F2));
  CHECK(b.aux_value("B") == P("1", F2));
  CHECK(b.aux_value("H") == P("1", F2));
  CHECK(b.aux_value("G") == P("x", F2));
  CHECK(b.aux_value("T") == P("(x^2+x+1)*(x+1)", F2));
  const FqPoly &T = b.aux_value("T"), &A = b.aux_value("A"), &beta1 = b.aux_value("beta1");
  CHECK(((T * T + beta1 * beta1) % (beta1 * A * A)).is_zero());
  check_basis(b, {{P("x^2+x+1", F2), 2}});
}

TEST_CASE("standard-form bases on sampled Galois fields") {
  std::mt19937_64 rng(29);
  for (u64 q : {2, 5, 8, 11}) {
    auto F = make_field_q(q);
    int done = 0;
    while (done < 8) {
      FqPoly A = random_poly(F, static_cast<int>(rng() % 3), rng);
      FqPoly B = random_poly(F, static_cast<int>(rng() % 3), rng);
      if (A.is_zero() || !gcd(A, B).is_one()) continue;
      RatFunc a = construct_galois_a(A, B);
      if (F->p() == 2 ? a.is_zero() : a * a == I(F, 4)) continue;
      if (!cubic_is_irreducible(canonical_polynomial(CanonicalKind::StandardForm, a))) continue;
      ++done;
      auto b = standard_integral_basis(a);
      std::vector<std::pair<FqPoly, int>> expect;
      for (const auto& Pp : basis_ramified_primes(b)) expect.emplace_back(Pp, 2);
      check_basis(b, expect);
      // The third element is (w^2 + theta w + kappa) / I with I | disc index.
      auto ring = b.ring();
      CHECK_FALSE(ring.is_zero(b.element(2)));
    }
  }
}
