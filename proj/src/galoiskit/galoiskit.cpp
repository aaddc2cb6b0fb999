#include "cubicff/galoiskit.hpp"

#include <algorithm>

namespace cubicff {

namespace {

RatFunc num(const Field& F, long long v) { return RatFunc::from_int(F, v); }

void require_q2(const Field& F, const char* what) {
  if (F->q() % 3 != 2) fail(ErrorKind::WrongResidue, std::string(what) + " needs q = 2 mod 3");
}

void require_irreducible(const CanonicalCubic& c) {
  if (!cubic_is_irreducible(c.polynomial()))
    fail(ErrorKind::ReducibleInput, "the cubic " + ratpoly_str(c.polynomial()) + " has a root in F_q(x)");
}

// Galois test for X^3 - 3X - a, a^2 != 4 (p != 2) or a != 0 (p = 2).
bool standard_is_galois(const RatFunc& a) {
  const Field& F = a.field();
  if (F->p() == 2) return solve_as_quadratic((num(F, 1) + a * a) / (a * a)).has_value();
  return ratfunc_sqrt(num(F, -27) * (a * a - num(F, 4))).has_value();
}

bool kummer_is_constant(const RatFunc& b) {
  try {
    return kummer_standardize(b).b.is_constant();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CubeInput) fail(ErrorKind::ReducibleInput, "the Kummer parameter is a cube");
    throw;
  }
}

bool as_is_constant(const RatFunc& a) {
  try {
    return as_standardize(a).c.is_constant();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DegenerateArtinSchreier)
      fail(ErrorKind::ReducibleInput, "the Artin-Schreier parameter has the form w^3 - w");
    throw;
  }
}

}  // namespace

RatPoly quadratic_resolvent(const RatFunc& e, const RatFunc& f, const RatFunc& g) {
  require_same_field(e.field(), f.field());
  require_same_field(e.field(), g.field());
  RatFunc c0 = e.pow(3) * g + f.pow(3) + g * g * 9 - e * f * g * 6;
  return {c0, e * f - g * 3, num(e.field(), 1)};
}

std::string to_string(ClosureKind k) {
  switch (k) {
    case ClosureKind::AlreadyGalois:
      return "already_galois";
    case ClosureKind::PureCubicTimesConstantQuadratic:
      return "pure_cubic_times_constant_quadratic";
    case ClosureKind::StandardTimesKummerQuadratic:
      return "standard_times_kummer_quadratic";
    case ClosureKind::Char3KummerThenArtinSchreier:
      return "char3_kummer_then_artin_schreier";
    case ClosureKind::StandardTimesArtinSchreierQuadratic:
      return "standard_times_artin_schreier_quadratic";
  }
  return "";
}

bool is_galois_direct(const CubicInput& in) {
  const Field& F = in.g.field();
  if (F->p() == 2) return !rational_roots(quadratic_resolvent(in.e, in.f, in.g)).empty();
  return ratfunc_sqrt(cubic_discriminant(in.polynomial())).has_value();
}

GaloisResult is_galois(const CanonicalCubic& c) {
  const Field& F = c.field();
  const RatFunc& t = c.param;
  const RatFunc o = num(F, 1), z(F);
  if (c.kind == CanonicalKind::Inseparable || (c.kind == CanonicalKind::PurelyCubic && F->p() == 3))
    fail(ErrorKind::InseparableInput, "X^3 - b is inseparable in characteristic 3");
  if (c.kind == CanonicalKind::StandardForm && F->p() == 3)
    fail(ErrorKind::InseparableInput, "X^3 - 3X - a is inseparable in characteristic 3");
  require_irreducible(c);
  switch (c.kind) {
    case CanonicalKind::StandardForm: {
      const bool g = standard_is_galois(t);
      RatPoly quad = F->p() == 2 ? RatPoly{(o + t * t) / (t * t), o, o} : RatPoly{(t * t - num(F, 4)) * 3, z, o};
      return {g, {g ? ClosureKind::AlreadyGalois
                    : (F->p() == 2 ? ClosureKind::StandardTimesArtinSchreierQuadratic
                                   : ClosureKind::StandardTimesKummerQuadratic),
                  quad}};
    }
    case CanonicalKind::PurelyCubic: {
      const bool g = F->q() % 3 == 1;
      return {g, {g ? ClosureKind::AlreadyGalois : ClosureKind::PureCubicTimesConstantQuadratic, {o, o, o}}};
    }
    case CanonicalKind::Char3Separable: {
      const bool g = ratfunc_sqrt(-t).has_value();
      return {g, {g ? ClosureKind::AlreadyGalois : ClosureKind::Char3KummerThenArtinSchreier, {t, z, o}}};
    }
    case CanonicalKind::ArtinSchreier:
      return {true, {ClosureKind::AlreadyGalois, quadratic_resolvent(z, -o, -t)}};
    case CanonicalKind::Inseparable:
      break;
  }
  fail(ErrorKind::Internal, "unhandled canonical kind");
}

GaloisResult is_galois(const CubicInput& in) {
  CanonicalCubic c = normalize(in);
  GaloisResult r = is_galois(c);
  ensure(r.galois == is_galois_direct(in), "Galois property is invariant under normalization");
  return r;
}

FqPoly norm_form(const FqPoly& A, const FqPoly& B) {
  require_same_field(A.field(), B.field());
  const Field& F = A.field();
  if (F->p() == 2) return A * A + A * B + B * B;
  return A * A + (B * B).scale(fq_inverse_of_three(F));
}

FqPoly NormFormWitness::norm() const { return norm_form(A, B); }

std::vector<NormFormWitness> norm_decompose(const FqPoly& Q) {
  const Field& F = Q.field();
  require_q2(F, "norm-form decomposition");
  if (Q.is_zero()) fail(ErrorKind::ZeroPolynomial, "cannot decompose the zero polynomial");
  const Factorization fac = poly_factor(Q);
  for (const auto& [P, e] : fac.factors)
    if (P.deg() % 2 != 0) return {};
  const QuadAbs& qa = quad_abs(F);
  // Each F_q-irreducible factor splits into two conjugate factors over F_{q^2}.
  std::vector<std::pair<FqPoly, FqPoly>> powers;
  for (const auto& [P, e] : fac.factors) {
    Factorization fb = factor_over_quad_ext(P);
    ensure(fb.factors.size() == 2, "even-degree irreducible splits in two over F_{q^2}");
    powers.emplace_back(fb.factors[0].first.pow(e), fb.factors[1].first.pow(e));
  }
  const auto reps = enumerate_unit_norm_reps(Q.lc());
  const size_t r = powers.size();
  std::vector<NormFormWitness> out;
  for (size_t mask = 0; mask < (size_t{1} << r); ++mask) {
    FqPoly prod = FqPoly::constant(FqElem::one(qa.big()));
    for (size_t i = 0; i < r; ++i) prod *= (mask >> i) & 1 ? powers[i].second : powers[i].first;
    for (const auto& [u, v] : reps) {
      auto [A, B] = qa.split(prod.scale(qa.to_abs(qa.ext().make(u, v))));
      ensure(norm_form(A, B) == Q, "norm-form witness reproduces Q");
      out.push_back({A, B, u, v, F->p() == 2});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RatFunc construct_galois_a(const FqPoly& A, const FqPoly& B) {
  require_same_field(A.field(), B.field());
  const Field& F = A.field();
  require_q2(F, "the norm-form construction");
  if (!gcd(A, B).is_one()) fail(ErrorKind::NotCoprime, "A and B must be coprime");
  const FqPoly Q = norm_form(A, B);
  if (F->p() == 2) return RatFunc(A * A, Q);
  const FqPoly P = (A * A - (B * B).scale(fq_inverse_of_three(F))).scale(FqElem::from_int(F, 2));
  return RatFunc(P, Q);
}

std::pair<FqPoly, FqPoly> galois_witness(const RatFunc& a) {
  const Field& F = a.field();
  require_q2(F, "the norm-form witness");
  const auto no_shape = [] { fail(ErrorKind::NotGaloisShape, "a is not of the form P/Q with Q a norm form"); };
  std::pair<FqPoly, FqPoly> out;
  if (F->p() == 2) {
    if (a.is_zero()) no_shape();
    auto w = solve_as_quadratic((a + num(F, 1)) / a);
    if (!w) no_shape();
    out = {w->den(), w->num()};
  } else {
    const FqPoly &P = a.num(), &Q = a.den();
    const FqPoly S = P + Q.scale(FqElem::from_int(F, 2));
    const FqPoly D = Q.scale(FqElem::from_int(F, 2)) - P;
    if (S.is_zero() || D.is_zero()) no_shape();
    // P + 2Q = 4 lambda^{-1} A^2 and 2Q - P = (4/3) lambda^{-1} B^2.
    const FqElem lambda = S.lc().inv();
    auto A = poly_exact_root(S.scale(lambda), 2);
    auto B = poly_exact_root(D.scale(lambda * FqElem::from_int(F, 3) / FqElem::from_int(F, 4)), 2);
    if (!A || !B) no_shape();
    out = {A->scale(FqElem::from_int(F, 2).inv()), *B};
  }
  ensure(construct_galois_a(out.first, out.second) == a, "witness reproduces a");
  return out;
}

FqPoly cube_test_polynomial(const FqPoly& A, const FqPoly& B) {
  const QuadAbs& qa = quad_abs(A.field());
  return A.field()->p() == 2 ? qa.combine(B, A) : qa.combine(A, B);
}

bool is_irreducible_standard(const RatFunc& a) {
  const Field& F = a.field();
  require_q2(F, "the norm-form irreducibility test");
  if (F->p() == 2 ? a.is_zero() : a * a == num(F, 4)) return false;
  if (!standard_is_galois(a)) fail(ErrorKind::NotGaloisShape, "X^3 - 3X - a is not Galois, so a has no norm-form shape");
  // A reducible T forces Q to be a cube up to a constant.
  if (!poly_exact_root(a.den(), 3)) return true;
  auto [A, B] = galois_witness(a);
  auto cw = is_cube_up_to_unit(cube_test_polynomial(A, B));
  return !(cw && cw->unit_is_cube);
}

bool is_constant_extension(const CanonicalCubic& c) {
  const Field& F = c.field();
  switch (c.kind) {
    case CanonicalKind::Inseparable:
      return false;
    case CanonicalKind::ArtinSchreier:
      return as_is_constant(c.param);
    case CanonicalKind::Char3Separable: {
      require_irreducible(c);
      auto as = char3_to_artin_schreier(c);
      return as && as_is_constant(as->param);
    }
    case CanonicalKind::PurelyCubic:
      if (F->p() == 3) return false;
      require_irreducible(c);
      return F->q() % 3 == 1 && kummer_is_constant(c.param);
    case CanonicalKind::StandardForm:
      break;
  }
  if (F->p() == 3) fail(ErrorKind::InseparableInput, "X^3 - 3X - a is inseparable in characteristic 3");
  require_irreducible(c);
  if (!standard_is_galois(c.param)) return false;
  if (F->q() % 3 == 1) {
    auto pc = purely_cubic_test(c.param);
    ensure(pc.has_value(), "a Galois standard form is purely cubic when q = 1 mod 3");
    return kummer_is_constant(pc->b);
  }
  auto [A, B] = galois_witness(c.param);
  auto cw = is_cube_up_to_unit(cube_test_polynomial(A, B));
  if (!cw) return false;
  // Irreducibility forces the unit to be a non-cube.
  ensure(!cw->unit_is_cube, "unit part of an irreducible witness is not a cube");
  return true;
}

}  // namespace cubicff
