#include "serret/proj_matrix.hpp"

#include <algorithm>

#include "serret/errors.hpp"

namespace serret {

ProjMatrix::ProjMatrix(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  Integer det = a_ * d_ - b_ * c_;
  if (det != 1 && det != -1) {
    throw Error(ErrorKind::BadDeterminant,
                "determinant of " + to_string() + " is " + det.str() + ", expected +1 or -1");
  }
  canonicalize();
}

ProjMatrix::ProjMatrix(Unchecked, Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  canonicalize();
}

void ProjMatrix::canonicalize() {
  const Integer* first = &a_;
  if (a_ == 0) first = b_ != 0 ? &b_ : (c_ != 0 ? &c_ : &d_);
  if (*first < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

int ProjMatrix::det() const { return a_ * d_ - b_ * c_ > 0 ? 1 : -1; }

bool ProjMatrix::is_nonnegative() const { return a_ >= 0 && b_ >= 0 && c_ >= 0 && d_ >= 0; }

Integer ProjMatrix::height() const {
  using boost::multiprecision::abs;
  return std::max({Integer(abs(a_)), Integer(abs(b_)), Integer(abs(c_)), Integer(abs(d_))});
}

ProjMatrix ProjMatrix::inverse() const { return {Unchecked{}, d_, -b_, -c_, a_}; }

ProjMatrix ProjMatrix::power(long long k) const {
  ProjMatrix base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? 0ULL - static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
  ProjMatrix result;
  while (e != 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

ProjMatrix operator*(const ProjMatrix& x, const ProjMatrix& y) {
  return {ProjMatrix::Unchecked{}, x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
          x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_};
}

std::strong_ordering operator<=>(const ProjMatrix& x, const ProjMatrix& y) {
  auto cmp = [](const Integer& u, const Integer& v) {
    return u < v ? std::strong_ordering::less : (v < u ? std::strong_ordering::greater : std::strong_ordering::equal);
  };
  if (auto r = cmp(x.a_, y.a_); r != 0) return r;
  if (auto r = cmp(x.b_, y.b_); r != 0) return r;
  if (auto r = cmp(x.c_, y.c_); r != 0) return r;
  return cmp(x.d_, y.d_);
}

std::string ProjMatrix::to_string() const {
  return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," + d_.str() + "]]";
}

namespace gen {
const ProjMatrix& L() {
  static const ProjMatrix m(1, 0, 1, 1);
  return m;
}
const ProjMatrix& N() {
  static const ProjMatrix m(1, 1, 0, 1);
  return m;
}
const ProjMatrix& S() {
  static const ProjMatrix m(0, -1, 1, 0);
  return m;
}
const ProjMatrix& R() {
  static const ProjMatrix m(1, -1, 1, 0);
  return m;
}
const ProjMatrix& F() {
  static const ProjMatrix m(0, 1, 1, 0);
  return m;
}
}  // namespace gen

}  // namespace serret
