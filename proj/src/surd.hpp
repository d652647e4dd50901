#pragma once

// Working form of a quadratic irrational for hot loops: (P + sqrt(Delta)) / Q
// with Delta = m^2 D and Q | (Delta - P^2). Along an orbit Delta never
// changes, so (P, Q) identifies a value and serves as a cycle key.

#include <utility>

#include "serret/integer.hpp"
#include "serret/numbers.hpp"

namespace serret::detail {

struct Surd {
  Integer P, Q;
  Integer m, D, delta, root;  // root = isqrt(delta)

  static Surd from(const QuadIrr& x) {
    Surd s;
    s.D = x.D();
    const Integer& p = x.p();
    const Integer& r = x.r();
    Integer q = x.q() < 0 ? Integer(-x.q()) : x.q();
    Integer delta = q * q * s.D;
    if ((delta - p * p) % r == 0) {
      s.P = p;
      s.m = q;
      s.Q = r;
    } else {
      s.P = p * r;
      s.m = q * r;
      s.Q = r * r;
    }
    if (x.q() < 0) {
      s.P = -s.P;
      s.Q = -s.Q;
    }
    s.delta = s.m * s.m * s.D;
    s.root = isqrt(s.delta);
    return s;
  }

  QuadIrr to_quad() const { return QuadIrr::in_field(P, m, Q, D); }

  // sign of A + sqrt(delta)
  int sign_plus_root(const Integer& a) const { return a + root >= 0 ? 1 : -1; }

  int sign() const { return sign_plus_root(P) * (Q > 0 ? 1 : -1); }
  /// Sign of value - 1.
  int cmp_one() const { return sign_plus_root(P - Q) * (Q > 0 ? 1 : -1); }

  void sub_one() { P -= Q; }
  void invert() {
    P = -P;
    Q = (delta - P * P) / Q;
  }
  /// x -> x / (1 - x), the inverse of L.
  void apply_l_inverse() {
    invert();
    sub_one();
    invert();
  }

  Integer floor() const {
    if (Q > 0) return floor_div(P + root, Q);
    return floor_div(P + root + 1, Q);
  }

  std::pair<Integer, Integer> key() const { return {P, Q}; }
};

}  // namespace serret::detail
