#include <algorithm>

#include "cubicff/gfq.hpp"

namespace cubicff {

QuadExt::QuadExt(Field base, QuadKind kind, FqElem c1, FqElem c0)
    : base_(std::move(base)), kind_(kind), c1_(std::move(c1)), c0_(std::move(c0)) {}

QuadElem QuadExt::add(const QuadElem& x, const QuadElem& y) const { return {x.a + y.a, x.b + y.b}; }
QuadElem QuadExt::sub(const QuadElem& x, const QuadElem& y) const { return {x.a - y.a, x.b - y.b}; }

QuadElem QuadExt::mul(const QuadElem& x, const QuadElem& y) const {
  FqElem bb = x.b * y.b;
  return {x.a * y.a - c0_ * bb, x.a * y.b + x.b * y.a - c1_ * bb};
}

QuadElem QuadExt::conjugate(const QuadElem& x) const { return {x.a - c1_ * x.b, -x.b}; }

FqElem QuadExt::norm(const QuadElem& x) const {
  return x.a * x.a - c1_ * x.a * x.b + c0_ * x.b * x.b;
}

QuadElem QuadExt::inv(const QuadElem& x) const {
  FqElem n = norm(x);
  if (n.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in quadratic extension");
  QuadElem c = conjugate(x);
  FqElem ni = n.inv();
  return {c.a * ni, c.b * ni};
}

QuadElem QuadExt::pow(const QuadElem& x, u64 e) const {
  QuadElem r = one(), b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

QuadExt quad_ext(const Field& base) {
  if (base->q() % 3 != 2)
    fail(ErrorKind::WrongResidue, "the norm-form quadratic extension needs q = -1 mod 3");
  if (base->p() == 2)
    return QuadExt(base, QuadKind::CubeRootUnity, FqElem::one(base), FqElem::one(base));
  return QuadExt(base, QuadKind::SqrtNegThird, FqElem::zero(base), fq_inverse_of_three(base));
}

QuadExt quad_ext_generic(const Field& base, const FqElem& c1, const FqElem& c0) {
  if (!fq_quadratic_roots(c1, c0).empty())
    fail(ErrorKind::ReducibleModulus, "quadratic modulus has a root in the base field");
  return QuadExt(base, QuadKind::Generic, c1, c0);
}

std::vector<std::pair<FqElem, FqElem>> enumerate_unit_norm_reps(const FqElem& w) {
  const Field& F = w.field();
  if (w.is_zero()) fail(ErrorKind::ZeroInput, "norm target must be nonzero");
  QuadExt E = quad_ext(F);
  std::vector<std::pair<FqElem, FqElem>> out;
  for (const auto& u : all_elements(F)) {
    if (F->p() == 2) {
      // u^2 + uv + v^2 = w
      if (u.is_zero()) {
        out.emplace_back(u, *fq_sqrt(w));
        continue;
      }
      for (const auto& s : fq_solve_as_quadratic(w / (u * u) + FqElem::one(F))) out.emplace_back(u, u * s);
    } else {
      for (const auto& v : fq_roots_of((w - u * u) / E.c0(), 2)) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second < y.second;
  });
  return out;
}

}  // namespace cubicff
