#include "serret/integer.hpp"

#include <random>
#include <stdexcept>

#include <boost/multiprecision/miller_rabin.hpp>

#include "serret/errors.hpp"

namespace serret {

namespace mp = boost::multiprecision;

Integer isqrt(const Integer& n) {
  if (n < 0) throw Error(ErrorKind::Domain, "isqrt of a negative integer");
  return mp::sqrt(n);
}

bool is_square(const Integer& n) {
  if (n < 0) return false;
  Integer r = mp::sqrt(n);
  return r * r == n;
}

Integer floor_div(const Integer& num, const Integer& den) {
  Integer q = num / den;
  Integer r = num - q * den;
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return q;
}

Integer gcd3(const Integer& a, const Integer& b, const Integer& c) {
  return mp::gcd(mp::gcd(a, b), c);
}

namespace {

bool probably_prime(const Integer& n) {
  static thread_local std::mt19937_64 gen(0x5e77e7);
  return mp::miller_rabin_test(n, 25, gen);
}

// Pollard-Brent with batched gcds. n must be odd, composite and not a square.
Integer find_factor(const Integer& n) {
  for (unsigned c = 1;; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1;
    std::size_t r = 1;
    const std::size_t m = 64;
    auto f = [&](const Integer& v) { return (v * v + c) % n; };
    do {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = f(y);
      std::size_t k = 0;
      do {
        ys = y;
        for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * mp::abs(x - y)) % n;
        }
        g = mp::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = mp::gcd(mp::abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

// n = m^2 d with d squarefree. A square cofactor is absorbed without being
// factored, which keeps large square parts of discriminants cheap.
std::pair<Integer, Integer> split(const Integer& n) {
  if (n == 1) return {1, 1};
  if (is_square(n)) return {mp::sqrt(n), 1};
  if (probably_prime(n)) return {1, n};
  Integer f = find_factor(n);
  auto [m1, d1] = split(f);
  auto [m2, d2] = split(n / f);
  Integer g = mp::gcd(d1, d2);
  return {m1 * m2 * g, (d1 / g) * (d2 / g)};
}

}  // namespace

std::pair<Integer, Integer> square_decompose(const Integer& n) {
  if (n <= 0) throw Error(ErrorKind::Domain, "square_decompose needs a positive integer");
  Integer rest = n;
  Integer m = 1, d = 1;
  auto absorb = [&](const Integer& p, unsigned e) {
    for (unsigned i = 0; i < e / 2; ++i) m *= p;
    if (e % 2 == 1) d *= p;
  };
  for (unsigned p = 2; p < 2000 && Integer(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e != 0) absorb(p, e);
  }
  auto [ms, ds] = split(rest);
  return {m * ms, d * ds};
}

bool is_squarefree(const Integer& n) {
  if (n <= 0) return false;
  return square_decompose(n).first == 1;
}

Integer parse_integer(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::Parse, "empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw Error(ErrorKind::Parse, "bad integer literal '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') throw Error(ErrorKind::Parse, "bad integer literal '" + text + "'");
  }
  Integer v(text.substr(i));
  return text[0] == '-' ? Integer(-v) : v;
}

}  // namespace serret
