#include "serret/numbers.hpp"

#include <cctype>
#include <cmath>

#include "serret/errors.hpp"

namespace serret {

namespace mp = boost::multiprecision;

namespace {

std::strong_ordering cmp_int(const Integer& u, const Integer& v) {
  return u < v ? std::strong_ordering::less : (v < u ? std::strong_ordering::greater : std::strong_ordering::equal);
}

double ratio_to_double(const Integer& num, const Integer& den) {
  // scale to keep both in double range
  Integer n = num, d = den;
  auto bits = [](const Integer& x) { return x == 0 ? 0u : static_cast<unsigned>(mp::msb(mp::abs(x))); };
  unsigned excess = std::max(bits(n), bits(d));
  if (excess > 900) {
    unsigned shift = excess - 900;
    n >>= shift;
    d >>= shift;
  }
  return n.convert_to<double>() / d.convert_to<double>();
}

}  // namespace

// ---------------------------------------------------------------- ExtRational

ExtRational::ExtRational(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == 0 && q_ == 0) throw Error(ErrorKind::Domain, "0/0 is not a point of the projective line");
  if (q_ == 0) {
    p_ = 1;
    return;
  }
  if (q_ < 0) {
    p_ = -p_;
    q_ = -q_;
  }
  Integer g = mp::gcd(p_, q_);
  if (g != 1) {
    p_ /= g;
    q_ /= g;
  }
}

std::string ExtRational::to_string() const {
  if (q_ == 1) return p_.str();
  return p_.str() + "/" + q_.str();
}

double ExtRational::to_double() const {
  if (q_ == 0) return HUGE_VAL;
  return ratio_to_double(p_, q_);
}

std::strong_ordering operator<=>(const ExtRational& x, const ExtRational& y) {
  if (auto r = cmp_int(x.p_, y.p_); r != 0) return r;
  return cmp_int(x.q_, y.q_);
}

// -------------------------------------------------------------------- QuadIrr

QuadIrr::QuadIrr(Integer p, Integer q, Integer r, Integer d)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
  if (q_ == 0) throw Error(ErrorKind::Domain, "quadratic irrational with zero surd coefficient");
  if (r_ == 0) throw Error(ErrorKind::Domain, "quadratic irrational with zero denominator");
  if (d_ < 2 || !is_squarefree(d_)) throw Error(ErrorKind::Domain, "radicand " + d_.str() + " is not squarefree >= 2");
  normalize();
}

QuadIrr::QuadIrr(Trusted, Integer p, Integer q, Integer r, Integer d)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
  normalize();
}

void QuadIrr::normalize() {
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  Integer g = gcd3(p_, q_, r_);
  if (g != 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

QuadIrr QuadIrr::from_radicand(const Integer& p, const Integer& q, const Integer& r, const Integer& n) {
  if (n <= 0 || is_square(n)) throw Error(ErrorKind::Domain, "radicand " + n.str() + " is not a positive non-square");
  auto [m, d] = square_decompose(n);
  if (q == 0 || r == 0) throw Error(ErrorKind::Domain, "degenerate quadratic irrational");
  return {Trusted{}, p, q * m, r, d};
}

int sign_surd(const Integer& a, const Integer& b, const Integer& d) {
  if (b == 0) return a.sign();
  if (a == 0) return b.sign();
  if (a > 0 && b > 0) return 1;
  if (a < 0 && b < 0) return -1;
  Integer lhs = a * a, rhs = b * b * d;
  // a^2 != b^2 d since d is not a square
  if (a > 0) return lhs > rhs ? 1 : -1;
  return rhs > lhs ? 1 : -1;
}

int QuadIrr::sign() const { return sign_surd(p_, q_, d_); }

std::string QuadIrr::to_string() const {
  std::string surd;
  Integer aq = mp::abs(q_);
  surd = (aq == 1 ? std::string() : aq.str() + "*") + "sqrt(" + d_.str() + ")";
  std::string num;
  if (p_ == 0) {
    num = (q_ < 0 ? "-" : "") + surd;
  } else {
    num = p_.str() + (q_ < 0 ? "-" : "+") + surd;
  }
  if (r_ == 1) return num;
  if (p_ == 0 && q_ > 0) return num + "/" + r_.str();
  return "(" + num + ")/" + r_.str();
}

double QuadIrr::to_double() const {
  // p + q sqrt(D) can cancel badly; use the conjugate form when it does
  double s = std::sqrt(d_.convert_to<double>());
  double pd = p_.convert_to<double>(), qd = q_.convert_to<double>();
  if ((pd >= 0) == (qd >= 0)) return (pd + qd * s) / r_.convert_to<double>();
  // (p + q s) = (p^2 - q^2 D) / (p - q s)
  Integer norm = p_ * p_ - q_ * q_ * d_;
  return ratio_to_double(norm, r_) / (pd - qd * s);
}

std::strong_ordering operator<=>(const QuadIrr& x, const QuadIrr& y) {
  if (auto c = cmp_int(x.d_, y.d_); c != 0) return c;
  if (auto c = cmp_int(x.p_, y.p_); c != 0) return c;
  if (auto c = cmp_int(x.q_, y.q_); c != 0) return c;
  return cmp_int(x.r_, y.r_);
}

// ------------------------------------------------------------- Mobius action

ExtRational mobius_apply(const ProjMatrix& m, const ExtRational& x) {
  return {m.a() * x.p() + m.b() * x.q(), m.c() * x.p() + m.d() * x.q()};
}

QuadIrr mobius_apply(const ProjMatrix& m, const QuadIrr& x) {
  Integer p1 = m.a() * x.p() + m.b() * x.r();
  Integer q1 = m.a() * x.q();
  Integer p2 = m.c() * x.p() + m.d() * x.r();
  Integer q2 = m.c() * x.q();
  Integer p = p1 * p2 - q1 * q2 * x.D();
  Integer q = q1 * p2 - p1 * q2;
  Integer r = p2 * p2 - q2 * q2 * x.D();
  return QuadIrr::in_field(std::move(p), std::move(q), std::move(r), x.D());
}

Point mobius_apply(const ProjMatrix& m, const Point& x) {
  return std::visit([&](const auto& v) -> Point { return mobius_apply(m, v); }, x);
}

// ---------------------------------------------------------------- comparison

int compare(const ExtRational& x, const ExtRational& y) {
  if (!x.nonnegative() || !y.nonnegative()) {
    throw Error(ErrorKind::Domain, "values compared outside [0, infinity]: " + x.to_string() + ", " + y.to_string());
  }
  Integer lhs = x.p() * y.q(), rhs = y.p() * x.q();
  return lhs < rhs ? -1 : (rhs < lhs ? 1 : 0);
}

int compare(const QuadIrr& x, const ExtRational& y) {
  if (x.sign() < 0 || !y.nonnegative()) {
    throw Error(ErrorKind::Domain, "values compared outside [0, infinity]: " + x.to_string() + ", " + y.to_string());
  }
  if (y.is_infinity()) return -1;
  return sign_surd(y.q() * x.p() - x.r() * y.p(), y.q() * x.q(), x.D());
}

int compare(const Point& x, const ExtRational& y) {
  return std::visit([&](const auto& v) { return compare(v, y); }, x);
}

bool is_rational(const Point& x) { return std::holds_alternative<ExtRational>(x); }

bool in_base_interval(const Point& x) {
  if (auto* r = std::get_if<ExtRational>(&x)) return r->nonnegative();
  return std::get<QuadIrr>(x).sign() > 0;
}

std::string to_string(const Point& x) {
  return std::visit([](const auto& v) { return v.to_string(); }, x);
}

double to_double(const Point& x) {
  return std::visit([](const auto& v) { return v.to_double(); }, x);
}

// -------------------------------------------------------------------- parsing

namespace {

// (a + b sqrt(d)) / c, d = 0 while no surd has been seen
struct FieldElem {
  Integer a, b = 0, c = 1, d = 0;

  void normalize() {
    if (c < 0) {
      a = -a;
      b = -b;
      c = -c;
    }
    Integer g = gcd3(a, b, c);
    if (g > 1) {
      a /= g;
      b /= g;
      c /= g;
    }
    if (b == 0) d = 0;
  }
};

Integer common_radicand(const FieldElem& x, const FieldElem& y) {
  if (x.d != 0 && y.d != 0 && x.d != y.d) {
    throw Error(ErrorKind::Parse, "mixing sqrt(" + x.d.str() + ") and sqrt(" + y.d.str() + ")");
  }
  return x.d != 0 ? x.d : y.d;
}

FieldElem add(const FieldElem& x, const FieldElem& y) {
  FieldElem r{x.a * y.c + y.a * x.c, x.b * y.c + y.b * x.c, x.c * y.c, common_radicand(x, y)};
  r.normalize();
  return r;
}

FieldElem neg(FieldElem x) {
  x.a = -x.a;
  x.b = -x.b;
  return x;
}

FieldElem mul(const FieldElem& x, const FieldElem& y) {
  Integer d = common_radicand(x, y);
  FieldElem r{x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, x.c * y.c, d};
  r.normalize();
  return r;
}

FieldElem reciprocal(const FieldElem& y) {
  Integer norm = y.a * y.a - y.b * y.b * y.d;
  if (norm == 0) throw Error(ErrorKind::Parse, "division by zero");
  FieldElem r{y.c * y.a, -y.c * y.b, norm, y.d};
  r.normalize();
  return r;
}

class ValueParser {
 public:
  explicit ValueParser(std::string_view s) : s_(s) {}

  FieldElem parse() {
    FieldElem v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  FieldElem expr() {
    FieldElem v = term();
    for (;;) {
      if (eat('+')) {
        v = add(v, term());
      } else if (eat('-')) {
        v = add(v, neg(term()));
      } else {
        return v;
      }
    }
  }

  FieldElem term() {
    FieldElem v = unary();
    for (;;) {
      skip();
      if (eat('*')) {
        v = mul(v, unary());
      } else if (eat('/')) {
        v = mul(v, reciprocal(unary()));
      } else if (pos_ < s_.size() && (s_[pos_] == '(' || s_[pos_] == 's')) {
        v = mul(v, unary());  // implicit product, e.g. 2sqrt(3)
      } else {
        return v;
      }
    }
  }

  FieldElem unary() {
    if (eat('-')) return neg(unary());
    if (eat('+')) return unary();
    return primary();
  }

  FieldElem primary() {
    skip();
    if (eat('(')) {
      FieldElem v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (s_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (!eat('(')) fail("expected '(' after sqrt");
      FieldElem n = expr();
      if (!eat(')')) fail("expected ')'");
      if (n.b != 0 || n.c != 1 || n.a < 0) fail("sqrt needs a nonnegative integer argument");
      auto [m, d] = n.a == 0 ? std::pair<Integer, Integer>{0, 1} : square_decompose(n.a);
      if (d == 1) return FieldElem{m};
      return FieldElem{0, m, 1, d};
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return FieldElem{Integer(std::string(s_.substr(start, pos_ - start)))};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ExtRational parse_rational(std::string_view text) {
  Point v = parse_value(text);
  if (auto* r = std::get_if<ExtRational>(&v)) return *r;
  throw Error(ErrorKind::Parse, "expected a rational, got '" + std::string(text) + "'");
}

Point parse_value(std::string_view text) {
  text = trim(text);
  if (text == "inf" || text == "infinity" || text == "oo") return ExtRational::infinity();
  // plain "p/q" also admits q = 0
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto lhs = trim(text.substr(0, slash)), rhs = trim(text.substr(slash + 1));
    auto integral = [](std::string_view s) {
      std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
      if (i == s.size()) return false;
      for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
      }
      return true;
    };
    if (integral(lhs) && integral(rhs)) {
      return ExtRational(parse_integer(std::string(lhs)), parse_integer(std::string(rhs)));
    }
  }
  FieldElem v = ValueParser(text).parse();
  if (v.b == 0) return ExtRational(v.a, v.c);
  return QuadIrr(v.a, v.b, v.c, v.d);
}

}  // namespace serret
