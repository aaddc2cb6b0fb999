#include <random>
#include <set>

#include "cubicff/gfq.hpp"
#include "doctest.h"

using namespace cubicff;

namespace {

FqElem E(const Field& f, long long v) { return FqElem::from_int(f, v); }

std::vector<u64> test_qs() { return {2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 32}; }

}  // namespace

TEST_CASE("make_field picks deterministic default moduli") {
  auto f5 = make_field(5, 1);
  CHECK(f5->q() == 5);
  CHECK(f5->is_prime_field());
  CHECK(make_field(2, 2)->modulus() == std::vector<u64>{1, 1, 1});
  CHECK(make_field(2, 3)->modulus() == std::vector<u64>{1, 0, 1, 1});
  CHECK(make_field(3, 2)->modulus() == std::vector<u64>{1, 0, 1});
  CHECK(make_field(2, 3)->describe() == "q=8,mod=t^3+t^2+1");
}

TEST_CASE("make_field rejects bad input") {
  try {
    make_field(4, 1);
    FAIL("expected NotPrime");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrime);
  }
  try {
    make_field(2, 2, std::vector<u64>{1, 0, 1});
    FAIL("expected ReducibleModulus");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReducibleModulus);
  }
  try {
    make_field(2, 3, std::vector<u64>{1, 1, 1});
    FAIL("expected DegreeMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeMismatch);
  }
}

TEST_CASE("explicit modulus is honoured and fields compare by modulus") {
  auto a = make_field(2, 3, std::vector<u64>{1, 1, 0, 1});
  auto b = make_field(2, 3);
  CHECK_FALSE(same_field(a, b));
  CHECK_THROWS_AS(FqElem::one(a) + FqElem::one(b), Error);
}

TEST_CASE("multiplicative group has order q - 1") {
  std::mt19937_64 rng(7);
  for (u64 q : test_qs()) {
    auto F = make_field_q(q);
    for (int i = 0; i < 20; ++i) {
      FqElem e(F, F->from_rank(1 + rng() % (q - 1)));
      CHECK(e.pow(q - 1).is_one());
      CHECK((e * e.inv()).is_one());
    }
  }
}

TEST_CASE("table and schoolbook multiplication agree on a large field") {
  auto F = make_field(3, 11);  // above the table threshold
  auto G = make_field(3, 5);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    FqElem a(F, rng() % F->q()), b(F, rng() % F->q());
    if (!a.is_zero()) CHECK(((a * b) / a) == b);
    FqElem c(G, rng() % G->q());
    if (!c.is_zero()) CHECK(c.pow(G->q() - 1).is_one());
  }
}

TEST_CASE("square roots over F_5") {
  auto F = make_field(5, 1);
  CHECK(fq_is_square(E(F, 4)));
  CHECK(*fq_sqrt(E(F, 4)) == E(F, 2));
  CHECK_FALSE(fq_is_square(E(F, 2)));
  CHECK_FALSE(fq_sqrt(E(F, 2)).has_value());
  CHECK(*fq_sqrt(E(F, 0)) == E(F, 0));
}

TEST_CASE("cube roots") {
  auto F5 = make_field(5, 1);
  for (auto& e : all_elements(F5)) CHECK(fq_is_cube(e));
  auto F7 = make_field(7, 1);
  CHECK_FALSE(fq_is_cube(E(F7, 2)));
  CHECK(*fq_cube_root(E(F7, 1)) == E(F7, 1));
  CHECK(fq_roots_of(E(F7, 6), 3).size() == 3);
}

TEST_CASE("roots agree with exhaustive search") {
  for (u64 q : test_qs()) {
    auto F = make_field_q(q);
    auto elems = all_elements(F);
    for (auto& e : elems) {
      for (int r : {2, 3}) {
        std::vector<FqElem> brute;
        for (auto& x : elems)
          if (x.pow(static_cast<u64>(r)) == e) brute.push_back(x);
        auto got = fq_roots_of(e, r);
        REQUIRE(got.size() == brute.size());
        for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == brute[i]);
      }
    }
  }
}

TEST_CASE("cubing is a bijection when q = 2 mod 3") {
  for (u64 q : test_qs()) {
    if (q % 3 != 2) continue;
    auto F = make_field_q(q);
    std::set<u64> img;
    for (auto& e : all_elements(F)) img.insert(e.pow(3).code());
    CHECK(img.size() == q);
  }
}

TEST_CASE("trace to F_2") {
  auto F2 = make_field(2, 1);
  CHECK(fq_trace_to_F2(FqElem::one(F2)) == 1);
  auto F4 = make_field(2, 2);
  CHECK(fq_trace_to_F2(FqElem::gen(F4)) == 1);
  CHECK(fq_trace_to_F2(FqElem::one(F4)) == 0);
  CHECK_THROWS_AS(fq_trace_to_F2(FqElem::one(make_field(3, 1))), Error);
}

TEST_CASE("Artin-Schreier quadratic over F_{2^n}") {
  for (u64 q : {2, 4, 8, 16, 32, 64}) {
    auto F = make_field_q(q);
    for (auto& c : all_elements(F)) {
      auto roots = fq_solve_as_quadratic(c);
      CHECK(roots.size() == (fq_trace_to_F2(c) == 0 ? 2u : 0u));
      for (auto& x : roots) CHECK(x * x + x == c);
    }
  }
}

TEST_CASE("quadratic extension norms") {
  auto F5 = make_field(5, 1);
  auto E5 = quad_ext(F5);
  CHECK(E5.norm(E5.make(E(F5, 1), E(F5, 1))) == E(F5, 3));
  CHECK(E5.norm(E5.from_base(E(F5, 3))) == E(F5, 4));
  auto F2 = make_field(2, 1);
  auto E2 = quad_ext(F2);
  CHECK(E2.norm(E2.make(E(F2, 1), E(F2, 1))) == E(F2, 1));
  CHECK_THROWS_AS(quad_ext(make_field(7, 1)), Error);
}

TEST_CASE("norm equals z^(q+1) in the quadratic extension") {
  std::mt19937_64 rng(11);
  for (u64 q : {2, 5, 8, 11, 17, 32}) {
    auto F = make_field_q(q);
    auto X = quad_ext(F);
    for (int i = 0; i < 30; ++i) {
      QuadElem z = X.make(FqElem(F, rng() % q), FqElem(F, rng() % q));
      QuadElem zq1 = X.pow(z, q + 1);
      CHECK(zq1.b.is_zero());
      CHECK(zq1.a == X.norm(z));
      CHECK(X.equal(X.mul(z, X.conjugate(z)), X.from_base(X.norm(z))));
      if (!X.norm(z).is_zero()) CHECK(X.equal(X.mul(z, X.inv(z)), X.one()));
    }
  }
}

TEST_CASE("unit norm representations over F_5 and F_2") {
  auto F5 = make_field(5, 1);
  auto reps = enumerate_unit_norm_reps(E(F5, 1));
  std::vector<std::pair<long long, long long>> want{{1, 0}, {2, 1}, {2, 4}, {3, 1}, {3, 4}, {4, 0}};
  REQUIRE(reps.size() == 6);
  for (size_t i = 0; i < 6; ++i) {
    CHECK(reps[i].first == E(F5, want[i].first));
    CHECK(reps[i].second == E(F5, want[i].second));
  }
  auto F2 = make_field(2, 1);
  CHECK(enumerate_unit_norm_reps(E(F2, 1)).size() == 3);
  CHECK(enumerate_unit_norm_reps(E(make_field(2, 3), 1)).size() == 9);
  CHECK_THROWS_AS(enumerate_unit_norm_reps(E(F5, 0)), Error);
}

TEST_CASE("unit norm representation counts are q + 1") {
  for (u64 q : {2, 5, 8, 11, 17, 23, 29, 32}) {
    auto F = make_field_q(q);
    auto X = quad_ext(F);
    for (auto& w : all_elements(F)) {
      if (w.is_zero()) continue;
      auto reps = enumerate_unit_norm_reps(w);
      CHECK(reps.size() == q + 1);
      for (auto& [u, v] : reps) CHECK(X.norm(X.make(u, v)) == w);
    }
  }
}

TEST_CASE("element printing") {
  auto F9 = make_field(3, 2);
  CHECK(FqElem(F9, 0).str() == "0");
  CHECK(FqElem(F9, 1 + 2 * 3).str() == "2*t+1");
  CHECK(FqElem(F9, 3).str() == "t");
  CHECK(E(make_field(7, 1), -1).str() == "6");
}
