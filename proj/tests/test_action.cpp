#include <functional>
#include <random>

#include "cubicff/action.hpp"
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

// Irreducible Galois standard-form parameters from the norm-form construction.
std::vector<RatFunc> galois_samples(const Field& F, int count, int max_deg, std::mt19937_64& rng) {
  std::vector<RatFunc> out;
  while (static_cast<int>(out.size()) < count) {
    FqPoly A = random_poly(F, static_cast<int>(rng() % (max_deg + 1)), rng);
    FqPoly B = random_poly(F, static_cast<int>(rng() % (max_deg + 1)), rng);
    if (!gcd(A, B).is_one()) continue;
    RatFunc a = construct_galois_a(A, B);
    if (a.is_zero() || a * a == I(F, 4)) continue;
    if (!cubic_is_irreducible(canonical_polynomial(CanonicalKind::StandardForm, a))) continue;
    out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("Galois action example") {
  auto F5 = make_field(5, 1);
  auto d = galois_action(I(F5, 1));
  CHECK(d.f == I(F5, 0));
  CHECK(d.c2 == I(F5, 4));
  CHECK(d.c1 == I(F5, 0));
  CHECK(d.c0 == I(F5, 2));
  CubicRing ring = d.ring();
  CHECK(ring.equal(d.apply(d.apply(d.apply(ring.gen()))), ring.gen()));
  CHECK(ring.is_zero(ring.add(ring.gen(), ring.add(d.sigma(), d.sigma2()))));
  CHECK(kind_of([&] { galois_action(R("1/x", F5)); }) == ErrorKind::NotGalois);
  CHECK(kind_of([&] { galois_action(I(F5, 2)); }) == ErrorKind::DegenerateA);
  CHECK(kind_of([&] { galois_action(RatFunc(make_field(2, 1))); }) == ErrorKind::DegenerateA);
}

TEST_CASE("Galois action identities on sampled fields") {
  std::mt19937_64 rng(41);
  for (u64 q : {2, 5, 8, 11}) {
    auto F = make_field_q(q);
    for (const auto& a : galois_samples(F, 6, 2, rng)) {
      auto d = galois_action(a);
      CHECK(d.c0 == -d.c2 * 2);
      CubicRing ring = d.ring();
      auto z = ring.gen();
      CHECK(ring.is_zero(ring.eval(canonical_polynomial(CanonicalKind::StandardForm, a), d.sigma())));
      CHECK_FALSE(ring.equal(d.sigma(), z));
      CHECK(ring.equal(d.apply(d.sigma2()), z));
      CHECK(ring.equal(ring.mul(z, ring.mul(d.sigma(), d.sigma2())), ring.scalar(a)));
      // sigma is a ring automorphism.
      auto u = ring.make(R("x", F), I(F, 1), R("1/(x+1)", F));
      CHECK(ring.equal(d.apply(ring.mul(u, z)), ring.mul(d.apply(u), d.sigma())));
    }
  }
}

TEST_CASE("transform generator") {
  auto F5 = make_field(5, 1);
  RatFunc a1 = R("(2*x^2+1)/(x^2+2)", F5);
  auto id = transform_generator(a1, {RatFunc(F5), I(F5, 1)});
  CHECK(id.a2 == a1);
  CHECK(id.forward == RatMatrix::identity(F5, 3));
  CHECK(transform_generator(a1, {RatFunc(F5), I(F5, -1)}).a2 == -a1);
  auto t = transform_generator(I(F5, 1), {I(F5, 1), RatFunc(F5)});
  CHECK(t.a2 == I(F5, 4));
  CHECK(kind_of([&] { transform_generator(a1, {I(F5, 1), I(F5, 1)}); }) == ErrorKind::NotOnConic);

  std::mt19937_64 rng(7);
  for (u64 q : {2, 5, 8}) {
    auto F = make_field_q(q);
    for (const auto& a : galois_samples(F, 4, 1, rng)) {
      RatFunc m(random_poly(F, 1, rng), random_poly(F, 0, rng).is_zero() ? P("1", F) : P("x+1", F));
      ConicPoint pt;
      try {
        pt = conic_point_from_slope(a, m);
      } catch (const Error&) {
        continue;
      }
      REQUIRE(on_conic(a, pt));
      auto tr = transform_generator(a, pt);
      CHECK(tr.forward * tr.inverse == RatMatrix::identity(F, 3));
      const RatFunc &phi = pt.phi, &chi = pt.chi;
      CHECK(tr.forward.at(1, 0) == -phi * 2);
      CHECK(tr.forward.at(1, 1) == chi);
      CHECK(tr.forward.at(1, 2) == phi);
      CHECK(tr.forward.at(2, 0) == phi * chi * a * 2 + phi * phi * 4);
      CHECK(tr.forward.at(2, 1) == phi * phi * a + phi * chi * 2);
      CHECK(tr.forward.at(2, 2) == chi * chi - phi * phi);
      // Expressing z1 back through z2 recovers z1.
      CubicRing r1 = CubicRing::from_poly(canonical_polynomial(CanonicalKind::StandardForm, a));
      CubicRing::Elem z2{-phi * 2, chi, phi};
      auto back = r1.add(r1.scalar(tr.inverse.at(1, 0)),
                         r1.add(r1.scale(z2, tr.inverse.at(1, 1)), r1.scale(r1.mul(z2, z2), tr.inverse.at(1, 2))));
      CHECK(r1.equal(back, r1.gen()));
    }
  }
}

TEST_CASE("same field for standard forms") {
  auto F5 = make_field(5, 1);
  RatFunc a = R("(2*x^2+1)/(x^2+2)", F5);
  CHECK(*same_field_standard(a, a) == ConicPoint{RatFunc(F5), I(F5, 1)});
  CHECK(*same_field_standard(a, -a) == ConicPoint{RatFunc(F5), I(F5, -1)});
  auto pts = same_field_points(I(F5, 1), I(F5, 4));
  CHECK(pts.size() == 3);
  CHECK(std::find(pts.begin(), pts.end(), ConicPoint{I(F5, 1), RatFunc(F5)}) != pts.end());
  auto p14 = same_field_standard(I(F5, 1), I(F5, 4));
  REQUIRE(p14);
  CHECK(transform_generator(I(F5, 1), *p14).a2 == I(F5, 4));
  CHECK(kind_of([&] { same_field_standard(a, R("1/x", F5)); }) == ErrorKind::NotGalois);
  CHECK(kind_of([&] { same_field_standard(a, R("x", make_field(2, 1))); }) == ErrorKind::MixedFields);
  // Different ramification, different fields.
  RatFunc b = construct_galois_a(P("x+1", F5), P("1", F5));
  CHECK_FALSE(same_field_standard(a, b));

  std::mt19937_64 rng(13);
  for (u64 q : {2, 5, 8, 11}) {
    auto F = make_field_q(q);
    for (const auto& a1 : galois_samples(F, 3, 1, rng)) {
      RatFunc m = RatFunc::constant(FqElem(F, rng() % q)) + RatFunc::x(F) * static_cast<long long>(rng() % 2);
      ConicPoint pt;
      try {
        pt = conic_point_from_slope(a1, m);
      } catch (const Error&) {
        continue;
      }
      RatFunc a2 = transform_generator(a1, pt).a2;
      if (a2.is_zero() || a2 * a2 == I(F, 4)) continue;
      auto all = same_field_points(a1, a2);
      CHECK(all.size() == 3);
      CHECK(std::find(all.begin(), all.end(), pt) != all.end());
      for (const auto& s : all) CHECK(transform_generator(a1, s).a2 == a2);
    }
  }
}

TEST_CASE("Artin-Schreier equivalence") {
  auto F3 = make_field(3, 1);
  RatFunc a = R("1/x + x", F3);
  CHECK(*as_same_field(a, a) == std::make_pair(1, RatFunc(F3)));
  auto r = as_same_field(a, a + R("x^3-x", F3));
  REQUIRE(r);
  CHECK(r->first == 1);
  CHECK(r->second == R("-x", F3));
  CHECK(*as_same_field(R("1/x", F3), R("2/x", F3)) == std::make_pair(2, RatFunc(F3)));
  CHECK_FALSE(as_same_field(R("1/x", F3), R("1/(x+1)", F3)));
  CHECK(kind_of([&] { as_same_field(R("x", make_field(5, 1)), R("x", make_field(5, 1))); }) ==
        ErrorKind::WrongCharacteristic);

  std::mt19937_64 rng(19);
  auto F9 = make_field_q(9);
  for (int i = 0; i < 20; ++i) {
    RatFunc a2(random_poly(F9, 2, rng), P("x^2+1", F9));
    RatFunc b(random_poly(F9, 2, rng), random_poly(F9, 1, rng).is_zero() ? P("1", F9) : P("x", F9));
    const int j = 1 + static_cast<int>(rng() % 2);
    RatFunc a1 = a2 * j + b.pow(3) - b;
    auto s = as_same_field(a1, a2);
    REQUIRE(s);
    CHECK(a1 == a2 * s->first + s->second.pow(3) - s->second);
  }
}

TEST_CASE("Kummer equivalence") {
  auto F4 = make_field_q(4);
  RatFunc a = R("x^2+x", F4);
  CHECK(*kummer_same_field(a, a) == std::make_pair(1, I(F4, 1)));
  CHECK(*kummer_same_field(R("x", F4), R("x^2", F4)) == std::make_pair(2, R("1/x", F4)));
  CHECK_FALSE(kummer_same_field(R("x", F4), R("x+1", F4)));
  CHECK(kind_of([&] { kummer_same_field(R("x", make_field(5, 1)), R("x", make_field(5, 1))); }) ==
        ErrorKind::WrongResidue);
  auto F7 = make_field(7, 1);
  auto r = kummer_same_field(R("2*x", F7), R("x^2/(x+1)^3", F7));
  CHECK_FALSE(r);
  auto r2 = kummer_same_field(R("4*x^2*(x+1)^3", F7), R("2*x", F7));
  REQUIRE(r2);
  CHECK(r2->first == 2);
  CHECK(R("4*x^2*(x+1)^3", F7) == R("2*x", F7).pow(2) * r2->second.pow(3));
}
