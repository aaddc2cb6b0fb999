#include <algorithm>

#include "cubicff/normalform.hpp"

namespace cubicff {

namespace {

// Preimage of h under cubing in F_q[x]/(P), char 3.
FqPoly residue_cube_root(const FqPoly& h, const FqPoly& P) {
  const int steps = P.field()->n() * P.deg() - 1;
  FqPoly r = h % P;
  for (int i = 0; i < steps; ++i) r = powmod(r, 3, P);
  return r;
}

}  // namespace

ASStandard as_reduce(const RatFunc& a) {
  const Field& F = a.field();
  if (F->p() != 3) fail(ErrorKind::WrongCharacteristic, "Artin-Schreier standardization needs characteristic 3");
  RatFunc c = a, w(F);
  auto step = [&](const RatFunc& t) {
    c = c - (t.pow(3) - t);
    w = w - t;
  };
  // Finite poles of order divisible by 3.
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [P, e] : poly_factor(c.den()).factors) {
      (void)e;
      const Place pl = Place::finite(P);
      int v = valuation(c, pl);
      if (v >= 0 || v % 3 != 0) continue;
      const int k = -v / 3;
      // Leading coefficient of the principal part at P, as a residue class.
      RatFunc scaled = c * RatFunc(P.pow(3 * k));
      FqPoly u = scaled.num() * invmod(scaled.den() % P, P) % P;
      FqPoly h = residue_cube_root(u, P);
      step(RatFunc(h, P.pow(k)));
      changed = true;
      break;
    }
  }
  // Pole at infinity.
  while (true) {
    const int m = c.num().deg() - c.den().deg();
    if (c.is_zero() || m <= 0 || m % 3 != 0) break;
    FqElem l = c.num().lc() / c.den().lc();
    auto r = fq_cube_root(l);
    ensure(r.has_value(), "cubing is bijective in characteristic 3");
    step(RatFunc(FqPoly::monomial(*r, m / 3)));
  }
  return {c, w};
}

ASStandard as_standardize(const RatFunc& a) {
  const Field& F = a.field();
  auto [c, w] = as_reduce(a);
  if (c.is_constant()) {
    const FqElem k = c.is_zero() ? FqElem::zero(F) : c.constant_value();
    for (const auto& t : all_elements(F))
      if (t.pow(3) - t == k)
        fail(ErrorKind::DegenerateArtinSchreier, "the parameter has the form w^3 - w, so the extension is trivial");
  }
  return {c, w};
}

KummerStandard kummer_standardize(const RatFunc& a) {
  const Field& F = a.field();
  if (F->q() % 3 != 1) fail(ErrorKind::WrongResidue, "Kummer standardization needs q = 1 mod 3");
  if (a.is_zero()) fail(ErrorKind::ZeroInput, "Kummer parameter must be nonzero");
  FqPoly b = FqPoly::constant(a.num().lc()), c_num = FqPoly::constant(FqElem::one(F)), c_den = c_num;
  // a = unit * prod P^e; choose c with a c^3 = unit * prod P^(e mod 3).
  for (const auto& [P, e] : poly_factor(a.num()).factors) {
    b *= P.pow(e % 3);
    c_den *= P.pow(e / 3);
  }
  for (const auto& [P, e] : poly_factor(a.den()).factors) {
    const int k = (e + 2) / 3;
    b *= P.pow(3 * k - e);
    c_num *= P.pow(k);
  }
  if (b.deg() == 0 && fq_is_cube(b.lc())) fail(ErrorKind::CubeInput, "the Kummer parameter is a cube");
  RatFunc c(c_num, c_den);
  ensure(a * c.pow(3) == RatFunc(b), "kummer standardization identity");
  return {RatFunc(b), c};
}

CubicRing::Elem PureCubicWitness::u(const CubicRing& ring) const {
  return ring.make(u_const, k, RatFunc::from_int(ring.field(), 1));
}

std::optional<RatFunc> solve_as_quadratic(const RatFunc& c) {
  const Field& F = c.field();
  if (F->p() != 2) fail(ErrorKind::WrongCharacteristic, "X^2 + X = c is solved here in characteristic 2 only");
  if (c.is_zero()) return RatFunc(F);
  // w = U/V in lowest terms forces V^2 = den(c) and U^2 + V U = num(c).
  auto V = poly_exact_root(c.den(), 2);
  if (!V) return std::nullopt;
  const FqPoly& N = c.num();
  const int bound = std::max(N.deg(), V->deg()) + 1;
  const int n = F->n();
  const int rows = 2 * bound + 2;
  std::vector<std::vector<u64>> cols;
  for (int i = 0; i < bound; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<u64> basis_coords(static_cast<size_t>(n), 0);
      basis_coords[static_cast<size_t>(j)] = 1;
      FqPoly U = FqPoly::monomial(FqElem(F, F->encode(basis_coords)), i);
      FqPoly img = U * U + *V * U;
      std::vector<u64> col;
      for (int d = 0; d < rows; ++d) {
        auto cc = img.coeff(d).coords();
        col.insert(col.end(), cc.begin(), cc.end());
      }
      cols.push_back(std::move(col));
    }
  std::vector<u64> rhs;
  for (int d = 0; d < rows; ++d) {
    auto cc = N.coeff(d).coords();
    rhs.insert(rhs.end(), cc.begin(), cc.end());
  }
  auto sol = solve_fp(cols, rhs, 2);
  if (!sol) return std::nullopt;
  std::vector<u64> codes;
  for (int i = 0; i < bound; ++i) {
    std::vector<u64> cc(sol->begin() + i * n, sol->begin() + (i + 1) * n);
    codes.push_back(F->encode(cc));
  }
  RatFunc w(FqPoly(F, codes), *V);
  ensure(w * w + w == c, "Artin-Schreier quadratic root");
  return std::min(w, w + RatFunc::from_int(F, 1));
}

std::optional<PureCubicWitness> purely_cubic_test(const RatFunc& a) {
  const Field& F = a.field();
  if (F->p() == 3) fail(ErrorKind::WrongCharacteristic, "the purely cubic test needs characteristic other than 3");
  if (F->p() != 2) {
    RatFunc d2 = a * a - RatFunc::from_int(F, 4);
    if (d2.is_zero()) fail(ErrorKind::ReducibleInput, "a^2 = 4 gives a repeated root");
    auto delta = ratfunc_sqrt(d2);
    if (!delta) return std::nullopt;
    // With this sign u^3 = delta^3 k holds exactly.
    RatFunc k = (-a - *delta) / RatFunc::from_int(F, 2);
    return PureCubicWitness{k, delta->pow(3) * k, RatFunc::from_int(F, -2)};
  }
  if (a.is_zero()) fail(ErrorKind::ReducibleInput, "a = 0 makes X^3 + X reducible");
  auto w = solve_as_quadratic((a * a).inv());
  if (!w) return std::nullopt;
  // w = (W/Z)^2 with a = Z^2 / (W (Z + W)).
  auto W = poly_exact_root(w->num(), 2);
  auto Z = poly_exact_root(w->den(), 2);
  ensure(W && Z, "Artin-Schreier root is a square");
  const RatFunc Wr(*W), Zr(*Z), S(*Z + *W);
  ensure(a == Zr * Zr / (Wr * S), "purely cubic shape a = Z^2/(W(Z+W))");
  // k is the root a*w of k^2 + a k + 1 = 0, which kills the y and y^2 terms of u^3.
  RatFunc k = Wr / S;
  RatFunc b = Zr.pow(6) / (Wr.pow(2) * S.pow(4));
  return PureCubicWitness{k, b, RatFunc(F)};
}

}  // namespace cubicff
