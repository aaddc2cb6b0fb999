#include "cubicff/placegeom.hpp"

#include <algorithm>

namespace cubicff {

namespace {

// Irreducible Galois cubic in one of the three families with a ramification rule.
CanonicalCubic galois_family(const CanonicalCubic& c) {
  if (!is_galois(c).galois)
    fail(ErrorKind::NotGalois, "the cubic " + ratpoly_str(c.polynomial()) + " does not define a Galois extension");
  if (c.kind == CanonicalKind::Char3Separable) {
    auto as = char3_to_artin_schreier(c);
    ensure(as.has_value(), "Galois char-3 form has an Artin-Schreier model");
    return *as;
  }
  return c;
}

CanonicalCubic geometric_family(const CanonicalCubic& c) {
  CanonicalCubic fam = galois_family(c);
  if (is_constant_extension(fam))
    fail(ErrorKind::ConstantExtension, "the extension is constant, L = F_{q^3}(x)");
  return fam;
}

// Residue of r at p in k(p); F_q itself at infinity.
FqElem reduce_at(const RatFunc& r, const Place& p) {
  return p.is_infinity() ? residue(r, p) : ResidueField(p).reduce(r);
}

// x^{-k} at infinity, P^k at a finite place.
RatFunc uniformizer_pow(const Place& p, const Field& F, int k) {
  if (p.is_infinity()) return RatFunc::x(F).pow(-k);
  return RatFunc(p.poly()).pow(k);
}

CanonicalCubic invert(const CanonicalCubic& c) { return {c.kind, c.param.invert_variable(), {}}; }

bool has_zero(const RatFunc& r) { return !r.is_zero() && !r.is_constant(); }

void add_places(std::vector<RamifiedPlace>& out, const FqPoly& f) {
  for (const auto& [P, e] : poly_factor(f).factors)
    if (e % 3 != 0) out.push_back({Place::finite(P), 2, std::nullopt});
}

// Rank of an n x n matrix over a finite field, row-major.
int rank_of(std::vector<std::vector<FqElem>> m) {
  const size_t n = m.size();
  int rank = 0;
  for (size_t col = 0; col < n && rank < static_cast<int>(n); ++col) {
    size_t piv = static_cast<size_t>(rank);
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[static_cast<size_t>(rank)]);
    const auto& pr = m[static_cast<size_t>(rank)];
    const FqElem inv = pr[col].inv();
    for (size_t r = 0; r < n; ++r) {
      if (r == static_cast<size_t>(rank) || m[r][col].is_zero()) continue;
      const FqElem f = m[r][col] * inv;
      for (size_t j = col; j < n; ++j) m[r][j] -= f * pr[j];
    }
    ++rank;
  }
  return rank;
}

using Vec3 = std::array<FqElem, 3>;

// Commutative k-algebra of dimension 3 given by structure constants.
struct ResidueAlgebra {
  Field k;
  std::array<std::array<Vec3, 3>, 3> table;  // e_i e_j = sum_k table[i][j][k] e_k

  Vec3 zero() const { return {FqElem::zero(k), FqElem::zero(k), FqElem::zero(k)}; }
  Vec3 unit(size_t i) const {
    Vec3 v = zero();
    v[i] = FqElem::one(k);
    return v;
  }
  Vec3 mul(const Vec3& a, const Vec3& b) const {
    Vec3 out = zero();
    for (size_t i = 0; i < 3; ++i) {
      if (a[i].is_zero()) continue;
      for (size_t j = 0; j < 3; ++j) {
        if (b[j].is_zero()) continue;
        const FqElem c = a[i] * b[j];
        for (size_t t = 0; t < 3; ++t) out[t] += c * table[i][j][t];
      }
    }
    return out;
  }
  Vec3 pow(Vec3 a, u64 e) const {
    Vec3 r = one;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Vec3 one;
};

}  // namespace

std::string to_string(SplitType t) {
  switch (t) {
    case SplitType::Ramified:
      return "ramified";
    case SplitType::Inert:
      return "inert";
    case SplitType::TotallySplit:
      return "totally_split";
  }
  return "";
}

LocalDegrees local_degrees(SplitType t) {
  switch (t) {
    case SplitType::Ramified:
      return {3, 1, 1};
    case SplitType::Inert:
      return {1, 3, 1};
    case SplitType::TotallySplit:
      return {1, 1, 3};
  }
  return {0, 0, 0};
}

std::vector<RamifiedPlace> ramified_places(const CanonicalCubic& c) {
  const CanonicalCubic fam = geometric_family(c);
  const RatFunc& a = fam.param;
  std::vector<RamifiedPlace> out;
  switch (fam.kind) {
    case CanonicalKind::StandardForm:
      ensure(valuation(a, Place::infinity()) >= 0, "a has no pole at infinity for a Galois standard form");
      add_places(out, a.den());
      break;
    case CanonicalKind::PurelyCubic: {
      add_places(out, a.num());
      add_places(out, a.den());
      if (valuation(a, Place::infinity()) % 3 != 0) out.push_back({Place::infinity(), 2, std::nullopt});
      break;
    }
    case CanonicalKind::ArtinSchreier: {
      const RatFunc s = as_reduce(a).c;
      for (const auto& [P, m] : poly_factor(s.den()).factors) {
        ensure(m % 3 != 0, "standardized pole orders are prime to 3");
        out.push_back({Place::finite(P), 2 * (m + 1), m});
      }
      const int m = -valuation(s, Place::infinity());
      if (m > 0) {
        ensure(m % 3 != 0, "standardized pole orders are prime to 3");
        out.push_back({Place::infinity(), 2 * (m + 1), m});
      }
      break;
    }
    default:
      fail(ErrorKind::Internal, "unexpected canonical kind");
  }
  std::sort(out.begin(), out.end(), [](const RamifiedPlace& x, const RamifiedPlace& y) { return x.place < y.place; });
  return out;
}

int riemann_hurwitz_genus(const std::vector<RamifiedPlace>& ramified) {
  int total = 0;
  for (const auto& r : ramified) total += r.diff_exponent * r.place.degree();
  ensure(total % 2 == 0, "the different has even degree");
  return -2 + total / 2;
}

int genus(const CanonicalCubic& c) {
  const CanonicalCubic fam = galois_family(c);
  if (fam.kind != CanonicalKind::StandardForm && !has_zero(fam.param))
    fail(ErrorKind::HypothesisFailed, "the genus formula needs a place where the parameter has positive valuation");
  const auto ram = ramified_places(fam);
  int g = -2;
  for (const auto& r : ram) g += (fam.kind == CanonicalKind::ArtinSchreier ? *r.m + 1 : 1) * r.place.degree();
  ensure(g == riemann_hurwitz_genus(ram), "genus formula agrees with Riemann-Hurwitz");
  ensure(g >= 0, "genus is nonnegative");
  return g;
}

GeneratorValuations generator_valuations(const RatFunc& a, const Place& p) {
  const CanonicalCubic c = galois_family(CanonicalCubic::standard(a));
  const int v = valuation(a, p);
  auto count = [&] { return splitting_type(c, p) == SplitType::Inert ? 1 : 3; };
  auto with_leader = [&](int rule, int lead) {
    std::vector<int> vals(static_cast<size_t>(count()), 0);
    vals.front() = lead;
    return GeneratorValuations{rule, vals};
  };
  if (p.is_infinity()) {
    ensure(v >= 0, "a has no pole at infinity for a Galois standard form");
    return with_leader(4, v);
  }
  const CubeSplit cs = cube_split(a);
  const FqPoly& P = p.poly();
  if (poly_valuation(cs.beta, P) > 0) return {1, {v}};
  if (poly_valuation(cs.gamma, P) > 0) {
    return {2, std::vector<int>(static_cast<size_t>(count()), -poly_valuation(cs.gamma, P))};
  }
  if (poly_valuation(cs.alpha, P) > 0) {
    auto g = with_leader(3, v);
    ensure(g.values.size() == 3, "zeros of a split completely");
    return g;
  }
  return with_leader(5, 0);
}

bool dickson_inert(const FqElem& abar) {
  const Field& k = abar.field();
  if (abar * abar == FqElem::from_int(k, 4)) fail(ErrorKind::DegenerateA, "abar^2 = 4 makes the reduced cubic inseparable");
  const FqElem one = FqElem::one(k);
  auto roots = fq_quadratic_roots(-abar, one);
  if (k->q() % 3 == 1 && !roots.empty()) return !fq_is_cube(roots.front());
  // Cube roots of unity and the roots both live in the quadratic extension.
  const Field K2 = make_field(k->p(), k->n() * 2);
  const Embedding e = make_embedding(k, K2);
  auto big = fq_quadratic_roots(-e.apply(abar), FqElem::one(K2));
  ensure(!big.empty(), "a quadratic splits over the quadratic extension");
  return !fq_is_cube(big.front());
}

bool half_sum_not_cube(const FqElem& abar) {
  const Field& k = abar.field();
  if (k->q() % 3 != 1 || k->p() <= 3) fail(ErrorKind::WrongResidue, "needs |k| = 1 mod 3 and p > 3");
  auto delta = fq_sqrt(abar * abar - FqElem::from_int(k, 4));
  if (!delta) fail(ErrorKind::NotGalois, "abar^2 - 4 is not a square in the residue field");
  return !fq_is_cube((abar + *delta) * FqElem::from_int(k, 2).inv());
}

bool norm_witness_not_cube(const RatFunc& a, const Place& p) {
  if (p.is_infinity()) fail(ErrorKind::DegreeMismatch, "the norm-witness test runs at finite places");
  if (valuation(a, p) != 0) fail(ErrorKind::NegativeValuation, "the norm-witness test needs v_p(a) = 0");
  const auto [A, B] = galois_witness(a);
  const ResidueField rf(p);
  const Field& k = rf.field();
  if (k->q() % 3 != 1 || k->p() <= 3) fail(ErrorKind::WrongResidue, "needs |k| = 1 mod 3 and p > 3");
  auto t = fq_sqrt(-fq_inverse_of_three(k));
  ensure(t.has_value(), "-1/3 is a square when |k| = 1 mod 3");
  const FqElem Ab = rf.reduce(A), Bb = rf.reduce(B);
  const FqElem den = Ab - *t * Bb;
  ensure(!den.is_zero(), "A - tB is a unit at p");
  return !fq_is_cube((Ab + *t * Bb) / den);
}

SplitType splitting_type(const CanonicalCubic& c, const Place& p) { return splitting_type_detailed(c, p).type; }

SplitResult splitting_type_detailed(const CanonicalCubic& c, const Place& p) {
  require_same_field(c.field(), p.is_infinity() ? c.field() : p.poly().field());
  const CanonicalCubic fam = galois_family(c);
  if (is_constant_extension(fam))
    return {p.degree() % 3 == 0 ? SplitType::TotallySplit : SplitType::Inert, "constant_extension"};
  for (const auto& r : ramified_places(fam))
    if (r.place == p) return {SplitType::Ramified, "ramification_rule"};
  if (fam.kind != CanonicalKind::StandardForm) return {split_via_order(fam, p), "order_decomposition"};

  const RatFunc& a = fam.param;
  const int v = valuation(a, p);
  if (v > 0) return {SplitType::TotallySplit, "positive_valuation"};
  if (v < 0) {
    ensure(v % 3 == 0, "unramified poles have order divisible by 3");
    const FqElem lead = reduce_at(a * uniformizer_pow(p, a.field(), -v), p);
    return {fq_is_cube(lead) ? SplitType::TotallySplit : SplitType::Inert, "pole_residue_cube"};
  }
  const FqElem abar = reduce_at(a, p);
  if (abar * abar == FqElem::from_int(abar.field(), 4)) return {split_via_order(fam, p), "order_fallback"};
  return {dickson_inert(abar) ? SplitType::Inert : SplitType::TotallySplit, "dickson"};
}

IntegralBasis order_basis(const CanonicalCubic& c) {
  const Field& F = c.field();
  auto unavailable = [&](const std::string& why) -> IntegralBasis {
    fail(ErrorKind::BasisUnavailable, "no integral basis for " + ratpoly_str(c.polynomial()) + ": " + why);
  };
  try {
    switch (c.kind) {
      case CanonicalKind::StandardForm:
        if (F->q() % 3 == 2) return standard_integral_basis(c.param);
        if (F->q() % 3 == 1) {
          auto w = purely_cubic_test(c.param);
          if (!w) return unavailable("the standard form is not purely cubic");
          return kummer_integral_basis(kummer_standardize(w->b).b);
        }
        return unavailable("characteristic 3");
      case CanonicalKind::PurelyCubic:
        return kummer_integral_basis(kummer_standardize(c.param).b);
      case CanonicalKind::ArtinSchreier:
        return as_integral_basis(as_standardize(c.param).c);
      case CanonicalKind::Char3Separable: {
        auto as = char3_to_artin_schreier(c);
        if (!as) return unavailable("-b is not a square");
        return as_integral_basis(as_standardize(as->param).c);
      }
      case CanonicalKind::Inseparable:
        return unavailable("inseparable cubic");
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::WrongResidue || e.kind() == ErrorKind::NoNormWitness ||
        e.kind() == ErrorKind::WrongCharacteristic)
      unavailable(e.what());
    throw;
  }
  return unavailable("unknown kind");
}

SplitType split_via_order(const IntegralBasis& basis, const Place& p) {
  if (p.is_infinity()) fail(ErrorKind::BasisUnavailable, "the integral basis is over F_q[x]; move infinity to 0 first");
  const Field& F = basis.param.field();
  require_same_field(F, p.poly().field());
  const CubicRing ring = basis.ring();
  const ResidueField rf(p);
  RatMatrix M(F, 3);
  std::array<CubicRing::Elem, 3> e;
  for (size_t k = 0; k < 3; ++k) {
    e[k] = basis.element(k);
    for (size_t r = 0; r < 3; ++r) M.at(r, k) = e[k][r];
  }
  ResidueAlgebra alg;
  alg.k = rf.field();
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i; j < 3; ++j) {
      const auto prod = ring.mul(e[i], e[j]);
      const auto c = solve(M, {prod[0], prod[1], prod[2]});
      Vec3 red;
      for (size_t t = 0; t < 3; ++t) red[t] = rf.reduce(c[t]);
      alg.table[i][j] = red;
      alg.table[j][i] = red;
    }
  // The unit of the algebra in basis coordinates.
  const auto one = solve(M, {RatFunc::from_int(F, 1), RatFunc(F), RatFunc(F)});
  for (size_t t = 0; t < 3; ++t) alg.one[t] = rf.reduce(one[t]);

  // Frobenius x -> x^|k| is k-linear; column i is the image of e_i.
  const u64 Q = rf.size();
  std::array<Vec3, 3> frob;
  for (size_t i = 0; i < 3; ++i) frob[i] = alg.pow(alg.unit(i), Q);
  auto matrix = [&](const std::array<Vec3, 3>& cols, bool minus_identity) {
    std::vector<std::vector<FqElem>> m(3, std::vector<FqElem>(3));
    for (size_t r = 0; r < 3; ++r)
      for (size_t col = 0; col < 3; ++col) {
        m[r][col] = cols[col][r];
        if (minus_identity && r == col) m[r][col] -= FqElem::one(alg.k);
      }
    return m;
  };
  std::array<Vec3, 3> frob3;
  for (size_t i = 0; i < 3; ++i) frob3[i] = alg.pow(alg.unit(i), Q * Q * Q);
  const int reduced_dim = rank_of(matrix(frob3, false));
  if (reduced_dim == 1) return SplitType::Ramified;
  ensure(reduced_dim == 3, "the residue algebra is local or reduced");
  const int fixed = 3 - rank_of(matrix(frob, true));
  if (fixed == 3) return SplitType::TotallySplit;
  ensure(fixed == 1, "an unramified place of a Galois cubic is inert or totally split");
  return SplitType::Inert;
}

SplitType split_via_order(const CanonicalCubic& c, const Place& p) {
  if (!p.is_infinity()) return split_via_order(order_basis(c), p);
  return split_via_order(order_basis(invert(c)), Place::finite(FqPoly::x(c.field())));
}

}  // namespace cubicff
