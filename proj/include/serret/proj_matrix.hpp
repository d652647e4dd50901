#pragma once

#include <compare>
#include <string>

#include "serret/integer.hpp"

namespace serret {

/// An element of PGL(2,Z): the integer matrix [[a,b],[c,d]] with determinant
/// +1 or -1, taken modulo the global sign.
///
/// The stored representative is canonical: the first nonzero entry in the
/// order a, b, c, d is positive. Equality and ordering are therefore plain
/// field-wise comparisons.
class ProjMatrix {
 public:
  /// Identity.
  ProjMatrix() : a_(1), b_(0), c_(0), d_(1) {}

  /// Throws Error(BadDeterminant) unless ad - bc is +1 or -1.
  ProjMatrix(Integer a, Integer b, Integer c, Integer d);

  static ProjMatrix identity() { return {}; }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  /// +1 or -1.
  int det() const;
  Integer trace() const { return a_ + d_; }

  /// True when the canonical representative is entrywise >= 0; this is the
  /// case iff some sign representative is.
  bool is_nonnegative() const;
  bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

  /// Max of absolute values of the entries; used to pick small representatives.
  Integer height() const;

  ProjMatrix inverse() const;
  ProjMatrix power(long long k) const;

  friend ProjMatrix operator*(const ProjMatrix& x, const ProjMatrix& y);
  friend bool operator==(const ProjMatrix&, const ProjMatrix&) = default;
  friend std::strong_ordering operator<=>(const ProjMatrix& x, const ProjMatrix& y);

  /// "[[a,b],[c,d]]"
  std::string to_string() const;

 private:
  struct Unchecked {};
  ProjMatrix(Unchecked, Integer a, Integer b, Integer c, Integer d);
  void canonicalize();

  Integer a_, b_, c_, d_;
};

namespace gen {
// L = [[1,0],[1,1]], N = [[1,1],[0,1]], S = [[0,-1],[1,0]], R = [[1,-1],[1,0]],
// F = [[0,1],[1,0]].
const ProjMatrix& L();
const ProjMatrix& N();
const ProjMatrix& S();
const ProjMatrix& R();
const ProjMatrix& F();
}  // namespace gen

}  // namespace serret
