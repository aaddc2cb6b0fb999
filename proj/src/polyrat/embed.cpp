#include <map>
#include <memory>
#include <mutex>

#include "cubicff/poly.hpp"

namespace cubicff {

namespace {

std::vector<u64> prime_coords(const FqElem& e) { return e.coords(); }

}  // namespace

std::optional<std::vector<u64>> solve_fp(const std::vector<std::vector<u64>>& cols, const std::vector<u64>& b,
                                         u64 p) {
  const size_t m = b.size(), k = cols.size();
  std::vector<std::vector<u64>> M(m, std::vector<u64>(k + 1));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < k; ++j) M[i][j] = cols[j][i] % p;
    M[i][k] = b[i] % p;
  }
  auto inv = [p](u64 a) {
    u64 r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  size_t row = 0;
  std::vector<size_t> pivots;
  for (size_t col = 0; col < k && row < m; ++col) {
    size_t piv = row;
    while (piv < m && M[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(M[piv], M[row]);
    u64 iv = inv(M[row][col]);
    for (auto& v : M[row]) v = v * iv % p;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || M[i][col] == 0) continue;
      u64 f = M[i][col];
      for (size_t j = 0; j <= k; ++j) M[i][j] = (M[i][j] + (p - f) * M[row][j]) % p;
    }
    pivots.push_back(col);
    ++row;
  }
  for (size_t i = row; i < m; ++i)
    if (M[i][k] != 0) return std::nullopt;
  std::vector<u64> x(k, 0);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = M[i][k];
  return x;
}

Embedding::Embedding(Field src, Field dst, FqElem gen_image)
    : src_(std::move(src)), dst_(std::move(dst)), gen_image_(std::move(gen_image)) {
  FqElem cur = FqElem::one(dst_);
  for (int i = 0; i < src_->n(); ++i) {
    basis_images_.push_back(cur);
    cur *= gen_image_;
  }
}

FqElem Embedding::apply(const FqElem& e) const {
  require_same_field(e.field(), src_);
  auto c = e.coords();
  FqElem acc = FqElem::zero(dst_);
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i]) acc += FqElem::from_int(dst_, static_cast<long long>(c[i])) * basis_images_[i];
  return acc;
}

FqPoly Embedding::apply(const FqPoly& f) const {
  std::vector<u64> v;
  v.reserve(f.codes().size());
  for (int i = 0; i <= f.deg(); ++i) v.push_back(apply(f.coeff(i)).code());
  return FqPoly(dst_, std::move(v));
}

std::optional<FqElem> Embedding::preimage(const FqElem& e) const {
  require_same_field(e.field(), dst_);
  std::vector<std::vector<u64>> cols;
  for (const auto& b : basis_images_) cols.push_back(prime_coords(b));
  auto sol = solve_fp(cols, prime_coords(e), src_->p());
  if (!sol) return std::nullopt;
  return FqElem(src_, src_->encode(*sol));
}

std::optional<FqPoly> Embedding::preimage(const FqPoly& f) const {
  std::vector<u64> v;
  for (int i = 0; i <= f.deg(); ++i) {
    auto c = preimage(f.coeff(i));
    if (!c) return std::nullopt;
    v.push_back(c->code());
  }
  return FqPoly(src_, std::move(v));
}

namespace {
std::mutex embed_mutex;
}

Embedding make_embedding(const Field& src, const Field& dst) {
  if (src->p() != dst->p() || dst->n() % src->n() != 0)
    fail(ErrorKind::DegreeMismatch, "no embedding of " + src->describe() + " into " + dst->describe());
  if (same_field(src, dst)) return Embedding(src, dst, FqElem::gen(dst));
  static std::map<std::pair<const FieldSpec*, const FieldSpec*>, Embedding> cache;
  {
    std::lock_guard<std::mutex> lock(embed_mutex);
    auto it = cache.find({src.get(), dst.get()});
    if (it != cache.end()) return it->second;
  }
  FqElem img = FqElem::one(dst);
  if (src->n() > 1) {
    std::vector<u64> m;
    for (u64 c : src->modulus()) m.push_back(dst->from_int(static_cast<long long>(c)));
    auto roots = poly_roots(FqPoly(dst, m));
    ensure(!roots.empty(), "modulus has a root in the larger field");
    img = roots.front();
  }
  Embedding e(src, dst, img);
  std::lock_guard<std::mutex> lock(embed_mutex);
  cache.emplace(std::make_pair(src.get(), dst.get()), e);
  return e;
}

QuadAbs::QuadAbs(const Field& base)
    : ext_(quad_ext(base)), big_(make_field(base->p(), 2 * base->n())), emb_(make_embedding(base, big_)) {
  FqPoly m = FqPoly::from_elems(big_, {emb_.apply(ext_.c0()), emb_.apply(ext_.c1()), FqElem::one(big_)});
  auto roots = poly_roots(m);
  ensure(roots.size() == 2, "norm-form quadratic splits in F_{q^2}");
  t_ = roots.front();
}

FqElem QuadAbs::to_abs(const QuadElem& z) const { return emb_.apply(z.a) + t_ * emb_.apply(z.b); }

QuadElem QuadAbs::from_abs(const FqElem& z) const {
  const int n = base()->n();
  std::vector<FqElem> pw;
  for (int i = 0; i < n; ++i) {
    std::vector<u64> unit(static_cast<size_t>(n), 0);
    unit[static_cast<size_t>(i)] = 1;
    pw.push_back(emb_.apply(FqElem(base(), base()->encode(unit))));
  }
  std::vector<std::vector<u64>> cols;
  for (const auto& b : pw) cols.push_back(b.coords());
  for (const auto& b : pw) cols.push_back((t_ * b).coords());
  auto sol = solve_fp(cols, z.coords(), base()->p());
  ensure(sol.has_value(), "F_{q^2} coordinates");
  std::vector<u64> a(sol->begin(), sol->begin() + n), b(sol->begin() + n, sol->end());
  return {FqElem(base(), base()->encode(a)), FqElem(base(), base()->encode(b))};
}

std::pair<FqPoly, FqPoly> QuadAbs::split(const FqPoly& z) const {
  std::vector<u64> a, b;
  for (int i = 0; i <= z.deg(); ++i) {
    QuadElem e = from_abs(z.coeff(i));
    a.push_back(e.a.code());
    b.push_back(e.b.code());
  }
  return {FqPoly(base(), a), FqPoly(base(), b)};
}

FqPoly QuadAbs::combine(const FqPoly& a, const FqPoly& b) const {
  return emb_.apply(a) + emb_.apply(b).scale(t_);
}

const QuadAbs& quad_abs(const Field& base) {
  static std::map<const FieldSpec*, std::unique_ptr<QuadAbs>> cache;
  static std::mutex m;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(base.get());
    if (it != cache.end()) return *it->second;
  }
  auto qa = std::make_unique<QuadAbs>(base);
  std::lock_guard<std::mutex> lock(m);
  auto [it, inserted] = cache.emplace(base.get(), std::move(qa));
  return *it->second;
}

Factorization factor_over_quad_ext(const FqPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "cannot factor the zero polynomial");
  return poly_factor(quad_abs(f.field()).embedding().apply(f));
}

std::optional<CubeWitness> is_cube_up_to_unit(const FqPoly& g) {
  if (g.is_zero()) fail(ErrorKind::ZeroPolynomial, "cube test of the zero polynomial");
  Factorization fac = poly_factor(g);
  FqPoly root = FqPoly::constant(FqElem::one(g.field()));
  for (const auto& [h, e] : fac.factors) {
    if (e % 3) return std::nullopt;
    root *= h.pow(e / 3);
  }
  return CubeWitness{fac.unit, root, fq_is_cube(fac.unit)};
}

}  // namespace cubicff
