#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>

#include "serret/integer.hpp"
#include "serret/proj_matrix.hpp"

namespace serret {

/// p/q on the projective line; infinity is 1/0.
/// Invariants: gcd(p,q) = 1, q >= 0, and p = 1 when q = 0.
class ExtRational {
 public:
  ExtRational() : p_(0), q_(1) {}
  /// Throws Error(Domain) for 0/0.
  ExtRational(Integer p, Integer q);
  ExtRational(long long n) : p_(n), q_(1) {}  // NOLINT(google-explicit-constructor)

  static ExtRational infinity() { return {1, 0}; }

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  bool is_infinity() const { return q_ == 0; }
  bool is_zero() const { return p_ == 0; }
  /// True for values in [0, infinity].
  bool nonnegative() const { return p_ >= 0; }

  std::string to_string() const;
  double to_double() const;

  friend bool operator==(const ExtRational&, const ExtRational&) = default;
  /// Field-wise order (for containers), not the order of values.
  friend std::strong_ordering operator<=>(const ExtRational& x, const ExtRational& y);

 private:
  Integer p_, q_;
};

/// (p + q*sqrt(D)) / r with D squarefree and >= 2, q != 0, r > 0 and
/// gcd(p, q, r) = 1. Equality is field-wise.
class QuadIrr {
 public:
  /// Normalizes sign and common factors. Throws Error(Domain) if q = 0,
  /// r = 0, or D is not a squarefree integer >= 2.
  QuadIrr(Integer p, Integer q, Integer r, Integer d);

  /// (p + q*sqrt(n)) / r for any positive non-square n; the square part of n
  /// is pulled out of the radical.
  static QuadIrr from_radicand(const Integer& p, const Integer& q, const Integer& r, const Integer& n);

  /// Like the constructor, but trusts that d is already squarefree.
  static QuadIrr in_field(Integer p, Integer q, Integer r, Integer d) {
    return {Trusted{}, std::move(p), std::move(q), std::move(r), std::move(d)};
  }

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  const Integer& r() const { return r_; }
  const Integer& D() const { return d_; }

  /// Sign of the value (never zero).
  int sign() const;
  /// Galois conjugate (p - q*sqrt(D)) / r.
  QuadIrr conjugate() const { return {p_, -q_, r_, d_}; }

  std::string to_string() const;
  double to_double() const;

  friend bool operator==(const QuadIrr&, const QuadIrr&) = default;
  friend std::strong_ordering operator<=>(const QuadIrr& x, const QuadIrr& y);

 private:
  struct Trusted {};
  QuadIrr(Trusted, Integer p, Integer q, Integer r, Integer d);
  void normalize();

  Integer p_, q_, r_, d_;
};

using Point = std::variant<ExtRational, QuadIrr>;

/// Sign of A + B*sqrt(D) for non-square D > 0.
int sign_surd(const Integer& a, const Integer& b, const Integer& d);

ExtRational mobius_apply(const ProjMatrix& m, const ExtRational& x);
QuadIrr mobius_apply(const ProjMatrix& m, const QuadIrr& x);
Point mobius_apply(const ProjMatrix& m, const Point& x);

/// Order of values on [0, infinity]. Throws Error(Domain) when an argument is
/// negative, since the ordering is only defined on the base interval.
int compare(const ExtRational& x, const ExtRational& y);
int compare(const QuadIrr& x, const ExtRational& y);
int compare(const Point& x, const ExtRational& y);

bool is_rational(const Point& x);
bool in_base_interval(const Point& x);
std::string to_string(const Point& x);
double to_double(const Point& x);

/// Exact value syntax: "p/q", "1/0" or "inf", and arithmetic expressions in
/// integers and sqrt(n) such as "(1335+sqrt(3))/939" or "sqrt(3)+1".
/// Throws Error(Parse).
Point parse_value(std::string_view text);
ExtRational parse_rational(std::string_view text);

}  // namespace serret
