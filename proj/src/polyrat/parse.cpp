#include <cctype>

#include "cubicff/ratfunc.hpp"

namespace cubicff {

namespace {

class Parser {
 public:
  // var names the polynomial variable; gen, when nonempty, names the field generator.
  Parser(const std::string& s, Field f, std::string var, std::string gen)
      : s_(s), f_(std::move(f)), var_(std::move(var)), gen_(std::move(gen)) {}

  RatFunc parse() {
    skip();
    if (pos_ >= s_.size()) error("empty expression");
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, "cannot parse \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  RatFunc expr() {
    RatFunc acc = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  bool starts_atom(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  RatFunc term() {
    RatFunc acc = unary();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (c == '/') {
        ++pos_;
        RatFunc d = unary();
        if (d.is_zero()) error("division by zero");
        acc /= d;
      } else if (starts_atom(c)) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  RatFunc unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (peek() != '^') return base;
    ++pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) error("exponent must be an integer");
    long long e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      e = e * 10 + (s_[pos_++] - '0');
      if (e > 100000) error("exponent too large");
    }
    if (neg && base.is_zero()) error("division by zero");
    return base.pow(static_cast<int>(neg ? -e : e));
  }

  RatFunc atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (peek() != ')') error("missing ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const long long p = static_cast<long long>(f_->p());
      long long v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = (v * 10 + (s_[pos_++] - '0')) % p;
      return RatFunc::from_int(f_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      if (id == var_) return RatFunc::x(f_);
      if (!gen_.empty() && id == gen_) {
        if (f_->n() == 1) error("'" + gen_ + "' is not available in a prime field");
        return RatFunc::constant(FqElem::gen(f_));
      }
      pos_ = start;
      error("unknown symbol '" + id + "'");
    }
    if (c == '\0') error("unexpected end of input");
    error("unexpected character '" + std::string(1, c) + "'");
  }

  std::string s_;
  Field f_;
  std::string var_, gen_;
  size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const std::string& s, const Field& f) { return Parser(s, f, "x", "t").parse(); }

FqPoly parse_poly(const std::string& s, const Field& f) {
  RatFunc r = parse_ratfunc(s, f);
  if (!r.is_polynomial()) fail(ErrorKind::ParseError, "expected a polynomial, got " + s);
  return r.num().scale(r.den().lc().inv());
}

FqElem parse_elem(const std::string& s, const Field& f) {
  RatFunc r = Parser(s, f, "", "t").parse();
  return r.constant_value();
}

Place parse_place(const std::string& s, const Field& f) {
  std::string trimmed;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  if (trimmed == "inf" || trimmed == "infinity") return Place::infinity();
  return Place::finite(parse_poly(s, f));
}

std::vector<u64> parse_modulus(const std::string& s, u64 p) {
  if (!is_prime_u64(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  Field fp = make_field(p, 1);
  RatFunc r = Parser(s, fp, "t", "").parse();
  if (!r.is_polynomial()) fail(ErrorKind::ParseError, "modulus must be a polynomial in t");
  FqPoly m = r.num();
  return m.codes();
}

Field parse_field_spec(const std::string& s) {
  std::optional<u64> q;
  std::optional<std::string> mod;
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto eq = part.find('=');
    std::string key = eq == std::string::npos ? "q" : part.substr(0, eq);
    std::string val = eq == std::string::npos ? part : part.substr(eq + 1);
    if (key == "q") {
      try {
        q = std::stoull(val);
      } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "bad field size '" + val + "'");
      }
    } else if (key == "mod") {
      mod = val;
    } else {
      fail(ErrorKind::ParseError, "unknown field spec key '" + key + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (!q) fail(ErrorKind::ParseError, "field spec needs q");
  auto pp = prime_power(*q);
  if (!pp) fail(ErrorKind::NotPrime, std::to_string(*q) + " is not a prime power");
  if (mod) return make_field(pp->first, pp->second, parse_modulus(*mod, pp->first));
  return make_field(pp->first, pp->second);
}

}  // namespace cubicff
