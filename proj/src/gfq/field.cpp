#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "cubicff/gfq.hpp"

namespace cubicff {

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<u64, int>> factor_u64(u64 n) {
  std::vector<std::pair<u64, int>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::optional<std::pair<u64, int>> prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  auto f = factor_u64(q);
  if (f.size() != 1) return std::nullopt;
  return f[0];
}

namespace {

// Dense polynomials over F_p used only to validate and search for moduli.
using Vec = std::vector<u64>;

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec pmod(Vec a, const Vec& m, u64 p) {
  trim(a);
  const size_t dm = m.size() - 1;
  u64 inv_lc = 1;
  {
    u64 b = m.back() % p, e = p - 2;
    while (e) {
      if (e & 1) inv_lc = inv_lc * b % p;
      b = b * b % p;
      e >>= 1;
    }
  }
  while (a.size() > dm) {
    u64 c = a.back() * inv_lc % p;
    size_t shift = a.size() - 1 - dm;
    for (size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    trim(a);
  }
  return a;
}

Vec pmulmod(const Vec& a, const Vec& b, const Vec& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return pmod(r, m, p);
}

Vec ppowmod(Vec b, u64 e, const Vec& m, u64 p) {
  Vec r{1};
  b = pmod(b, m, p);
  while (e) {
    if (e & 1) r = pmulmod(r, b, m, p);
    b = pmulmod(b, b, m, p);
    e >>= 1;
  }
  return r;
}

Vec pgcd(Vec a, Vec b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Vec r = pmod(a, b, p);
    a = b;
    b = r;
  }
  return a;
}

Vec psub(Vec a, const Vec& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// Rabin's test.
bool irreducible_fp(const Vec& f, u64 p) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 0) return false;
  if (n == 1) return true;
  const Vec x{0, 1};
  auto frob_iter = [&](int k) {
    Vec h = x;
    for (int i = 0; i < k; ++i) h = ppowmod(h, p, f, p);
    return h;
  };
  if (!psub(frob_iter(n), x, p).empty()) return false;
  for (auto [r, e] : factor_u64(static_cast<u64>(n))) {
    (void)e;
    Vec g = pgcd(f, psub(frob_iter(n / static_cast<int>(r)), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

struct FieldKey {
  u64 p;
  int n;
  Vec modulus;
  bool operator<(const FieldKey& o) const {
    return std::tie(p, n, modulus) < std::tie(o.p, o.n, o.modulus);
  }
};

std::mutex cache_mutex;
std::map<FieldKey, Field>& field_cache() {
  static std::map<FieldKey, Field> cache;
  return cache;
}
std::map<std::pair<u64, int>, Vec>& default_modulus_cache() {
  static std::map<std::pair<u64, int>, Vec> cache;
  return cache;
}

Vec default_modulus(u64 p, int n) {
  if (n == 1) return {0, 1};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& c = default_modulus_cache();
    auto it = c.find({p, n});
    if (it != c.end()) return it->second;
  }
  // Counter whose most significant digit is c0, so counting up walks the
  // lexicographic order on (c0, ..., c_{n-1}).
  Vec digits(static_cast<size_t>(n), 0);
  while (true) {
    Vec f(digits.begin(), digits.end());
    f.push_back(1);
    if (f[0] != 0 && irreducible_fp(f, p)) {
      std::lock_guard<std::mutex> lock(cache_mutex);
      default_modulus_cache()[{p, n}] = f;
      return f;
    }
    int i = n - 1;
    while (i >= 0 && ++digits[static_cast<size_t>(i)] == p) digits[static_cast<size_t>(i--)] = 0;
    ensure(i >= 0, "no irreducible polynomial found");
  }
}

}  // namespace

FieldSpec::FieldSpec(u64 p, int n, std::vector<u64> modulus)
    : p_(p), n_(n), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < n; ++i) q_ *= p;
  if (n > 1 && q_ <= (1u << 16)) build_tables();
}

bool FieldSpec::same_as(const FieldSpec& o) const {
  return p_ == o.p_ && n_ == o.n_ && modulus_ == o.modulus_;
}

std::string FieldSpec::describe() const {
  std::ostringstream os;
  os << "q=" << q_;
  if (n_ > 1) {
    os << ",mod=";
    bool first = true;
    for (int i = n_; i >= 0; --i) {
      u64 c = modulus_[static_cast<size_t>(i)];
      if (!c) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0) {
        os << c;
        continue;
      }
      if (c != 1) os << c << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::vector<u64> FieldSpec::coords(u64 code) const {
  std::vector<u64> c(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    c[static_cast<size_t>(i)] = code % p_;
    code /= p_;
  }
  return c;
}

u64 FieldSpec::encode(const std::vector<u64>& c) const {
  u64 code = 0;
  for (int i = n_ - 1; i >= 0; --i) code = code * p_ + c[static_cast<size_t>(i)] % p_;
  return code;
}

u64 FieldSpec::rank(u64 code) const {
  if (n_ == 1) return code;
  u64 r = 0;
  for (int i = 0; i < n_; ++i) {
    r = r * p_ + code % p_;
    code /= p_;
  }
  return r;
}

u64 FieldSpec::from_rank(u64 r) const { return rank(r); }

u64 FieldSpec::add(u64 a, u64 b) const {
  if (n_ == 1) {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  u64 r = 0, scale = 1;
  for (int i = 0; i < n_; ++i) {
    u64 d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    r += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

u64 FieldSpec::neg(u64 a) const {
  if (n_ == 1) return a ? p_ - a : 0;
  if (p_ == 2) return a;
  u64 r = 0, scale = 1;
  for (int i = 0; i < n_; ++i) {
    u64 d = a % p_;
    r += (d ? p_ - d : 0) * scale;
    scale *= p_;
    a /= p_;
  }
  return r;
}

u64 FieldSpec::sub(u64 a, u64 b) const { return add(a, neg(b)); }

u64 FieldSpec::mul_slow(u64 a, u64 b) const {
  auto x = coords(a), y = coords(b);
  std::vector<u64> r(static_cast<size_t>(2 * n_ - 1), 0);
  for (int i = 0; i < n_; ++i) {
    if (!x[static_cast<size_t>(i)]) continue;
    for (int j = 0; j < n_; ++j)
      r[static_cast<size_t>(i + j)] =
          (r[static_cast<size_t>(i + j)] + x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)]) % p_;
  }
  for (int k = 2 * n_ - 2; k >= n_; --k) {
    u64 c = r[static_cast<size_t>(k)];
    if (!c) continue;
    r[static_cast<size_t>(k)] = 0;
    for (int i = 0; i < n_; ++i) {
      size_t idx = static_cast<size_t>(k - n_ + i);
      r[idx] = (r[idx] + (p_ - c) * modulus_[static_cast<size_t>(i)]) % p_;
    }
  }
  r.resize(static_cast<size_t>(n_));
  return encode(r);
}

void FieldSpec::build_tables() {
  const u64 order = q_ - 1;
  auto primes = factor_u64(order);
  auto slow_pow = [&](u64 a, u64 e) {
    u64 r = from_int(1);
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  u64 g = 0;
  for (u64 c = 1; c < q_; ++c) {
    bool prim = true;
    for (auto [r, e] : primes) {
      (void)e;
      if (slow_pow(c, order / r) == 1) {
        prim = false;
        break;
      }
    }
    if (prim) {
      g = c;
      break;
    }
  }
  ensure(g != 0, "primitive element");
  exp_.assign(static_cast<size_t>(order), 0);
  log_.assign(static_cast<size_t>(q_), 0);
  u64 x = 1;
  for (u64 i = 0; i < order; ++i) {
    exp_[static_cast<size_t>(i)] = static_cast<std::uint32_t>(x);
    log_[static_cast<size_t>(x)] = static_cast<std::uint32_t>(i);
    x = mul_slow(x, g);
  }
}

u64 FieldSpec::mul(u64 a, u64 b) const {
  if (a == 0 || b == 0) return 0;
  if (n_ == 1) return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p_);
  if (!exp_.empty()) {
    u64 s = static_cast<u64>(log_[static_cast<size_t>(a)]) + log_[static_cast<size_t>(b)];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[static_cast<size_t>(s)];
  }
  return mul_slow(a, b);
}

u64 FieldSpec::pow(u64 a, u64 e) const {
  if (e == 0) return from_int(1);
  if (a == 0) return 0;
  if (!exp_.empty()) {
    unsigned __int128 s = static_cast<unsigned __int128>(log_[static_cast<size_t>(a)]) * (e % (q_ - 1));
    return exp_[static_cast<size_t>(s % (q_ - 1))];
  }
  u64 r = from_int(1);
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 FieldSpec::inv(u64 a) const {
  if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in " + describe());
  if (!exp_.empty()) {
    u64 l = log_[static_cast<size_t>(a)];
    return exp_[static_cast<size_t>(l == 0 ? 0 : q_ - 1 - l)];
  }
  return pow(a, q_ - 2);
}

u64 FieldSpec::from_int(long long v) const {
  long long m = static_cast<long long>(p_);
  long long r = v % m;
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

Field make_field(u64 p, int n, std::optional<std::vector<u64>> modulus) {
  if (!is_prime_u64(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (n < 1) fail(ErrorKind::DegreeMismatch, "extension degree must be positive");
  Vec m;
  if (modulus) {
    m = *modulus;
    for (auto& c : m) c %= p;
    trim(m);
    if (static_cast<int>(m.size()) != n + 1) fail(ErrorKind::DegreeMismatch, "modulus degree differs from n");
    if (m.back() != 1) fail(ErrorKind::DegreeMismatch, "modulus must be monic");
    if (n == 1) m = {0, 1};
    else if (!irreducible_fp(m, p)) fail(ErrorKind::ReducibleModulus, "modulus is reducible over F_p");
  } else {
    m = default_modulus(p, n);
  }
  FieldKey key{p, n, m};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = field_cache().find(key);
    if (it != field_cache().end()) return it->second;
  }
  auto f = std::make_shared<const FieldSpec>(p, n, m);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto [it, inserted] = field_cache().emplace(key, f);
  return it->second;
}

Field make_field_q(u64 q) {
  auto pp = prime_power(q);
  if (!pp) fail(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  return make_field(pp->first, pp->second);
}

bool same_field(const Field& a, const Field& b) {
  return a == b || (a && b && a->same_as(*b));
}

void require_same_field(const Field& a, const Field& b) {
  if (!same_field(a, b)) fail(ErrorKind::FieldMismatch, "operands live in different fields");
}

FqElem FqElem::operator+(const FqElem& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->add(code_, o.code_)};
}
FqElem FqElem::operator-(const FqElem& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->sub(code_, o.code_)};
}
FqElem FqElem::operator*(const FqElem& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->mul(code_, o.code_)};
}
FqElem FqElem::operator/(const FqElem& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->mul(code_, field_->inv(o.code_))};
}
FqElem FqElem::inv() const { return {field_, field_->inv(code_)}; }

bool FqElem::operator==(const FqElem& o) const {
  return code_ == o.code_ && same_field(field_, o.field_);
}
bool FqElem::operator<(const FqElem& o) const { return field_->less(code_, o.code_); }

std::string FqElem::str() const {
  if (field_->n() == 1) return std::to_string(code_);
  auto c = coords();
  std::string out;
  for (int i = field_->n() - 1; i >= 0; --i) {
    u64 v = c[static_cast<size_t>(i)];
    if (!v) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(v);
      continue;
    }
    if (v != 1) out += std::to_string(v) + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::vector<FqElem> all_elements(const Field& f) {
  std::vector<FqElem> out;
  out.reserve(static_cast<size_t>(f->q()));
  for (u64 r = 0; r < f->q(); ++r) out.emplace_back(f, f->from_rank(r));
  return out;
}

}  // namespace cubicff
