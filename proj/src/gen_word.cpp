#include "serret/gen_word.hpp"

#include <algorithm>

#include "serret/errors.hpp"

namespace serret {

Letter inverse(Letter x) {
  switch (x) {
    case Letter::L: return Letter::LInv;
    case Letter::N: return Letter::NInv;
    case Letter::LInv: return Letter::L;
    case Letter::NInv: return Letter::N;
    case Letter::R: return Letter::RInv;
    case Letter::RInv: return Letter::R;
    case Letter::F:
    case Letter::S: return x;
  }
  return x;
}

const ProjMatrix& matrix_of(Letter x) {
  static const ProjMatrix l_inv = gen::L().inverse();
  static const ProjMatrix n_inv = gen::N().inverse();
  static const ProjMatrix r_inv = gen::R().inverse();
  switch (x) {
    case Letter::L: return gen::L();
    case Letter::N: return gen::N();
    case Letter::F: return gen::F();
    case Letter::LInv: return l_inv;
    case Letter::NInv: return n_inv;
    case Letter::S: return gen::S();
    case Letter::R: return gen::R();
    case Letter::RInv: return r_inv;
  }
  return gen::F();
}

char symbol_of(Letter x) {
  switch (x) {
    case Letter::L:
    case Letter::LInv: return 'L';
    case Letter::N:
    case Letter::NInv: return 'N';
    case Letter::F: return 'F';
    case Letter::S: return 'S';
    case Letter::R:
    case Letter::RInv: return 'R';
  }
  return '?';
}

GenWord GenWord::parse(std::string_view text) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == ' ' || ch == '*' || ch == '.') continue;
    Letter x;
    switch (ch) {
      case 'L': x = Letter::L; break;
      case 'N': x = Letter::N; break;
      case 'F': x = Letter::F; break;
      case 'S': x = Letter::S; break;
      case 'R': x = Letter::R; break;
      case '1':
        // "1" denotes the empty word
        continue;
      default:
        throw Error(ErrorKind::Parse, std::string("unknown generator '") + ch + "' in word '" + std::string(text) + "'");
    }
    if (i + 1 < text.size() && text[i + 1] == '\'') {
      x = serret::inverse(x);
      ++i;
    }
    out.push_back(x);
  }
  return GenWord(std::move(out));
}

GenWord GenWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& x : out) x = serret::inverse(x);
  return GenWord(std::move(out));
}

GenWord GenWord::normalized() const {
  std::vector<Letter> out;
  for (Letter x : letters_) {
    if (!out.empty() && out.back() == serret::inverse(x)) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return GenWord(std::move(out));
}

GenWord& GenWord::operator+=(const GenWord& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

std::string GenWord::to_string() const {
  std::string s;
  for (Letter x : letters_) {
    s += symbol_of(x);
    if (x == Letter::LInv || x == Letter::NInv || x == Letter::RInv) s += '\'';
  }
  return s;
}

ProjMatrix eval_word(const GenWord& w) {
  ProjMatrix m;
  for (Letter x : w.letters()) m = m * matrix_of(x);
  return m;
}

std::string to_string(const MonoidWord& w) {
  std::string s;
  for (Letter x : w) s += symbol_of(x);
  return s;
}

MonoidWord parse_monoid_word(std::string_view text) {
  MonoidWord w;
  for (char ch : text) {
    if (ch == 'L') {
      w.push_back(Letter::L);
    } else if (ch == 'N') {
      w.push_back(Letter::N);
    } else {
      throw Error(ErrorKind::Parse, "expected a word over L, N: '" + std::string(text) + "'");
    }
  }
  return w;
}

ProjMatrix eval_monoid(const MonoidWord& w) {
  ProjMatrix m;
  for (Letter x : w) m = m * matrix_of(x);
  return m;
}

MonoidFactorization monoid_factor(const ProjMatrix& m) {
  if (!m.is_nonnegative()) {
    throw Error(ErrorKind::NotNonnegative, m.to_string() + " has no nonnegative representative");
  }
  MonoidFactorization out;
  out.flip = m.det() < 0;
  ProjMatrix b = out.flip ? m * gen::F() : m;
  Integer a = b.a(), bb = b.b(), c = b.c(), d = b.d();
  // Stern-Brocot descent: the bottom row dominates after a leading L.
  while (!(a == 1 && bb == 0 && c == 0 && d == 1)) {
    if (c >= a && d >= bb) {
      out.word.push_back(Letter::L);
      c -= a;
      d -= bb;
    } else if (a >= c && bb >= d) {
      out.word.push_back(Letter::N);
      a -= c;
      bb -= d;
    } else {
      throw Error(ErrorKind::NotNonnegative, m.to_string() + " is not a monoid element");
    }
  }
  return out;
}

namespace {

void append_power(std::vector<Letter>& out, Letter x, const Integer& k) {
  Letter y = k < 0 ? inverse(x) : x;
  Integer n = k < 0 ? Integer(-k) : k;
  for (Integer i = 0; i < n; ++i) out.push_back(y);
}

}  // namespace

GenWord generic_factor(const ProjMatrix& m) {
  const bool flip = m.det() < 0;
  ProjMatrix p = flip ? m * gen::F() : m;
  Integer a = p.a(), b = p.b(), c = p.c(), d = p.d();
  std::vector<Letter> out;
  // Euclid on the first column by left multiplication with powers of N, L.
  while (a != 0 && c != 0) {
    if (abs(a) >= abs(c)) {
      Integer k = a / c;
      a -= k * c;
      b -= k * d;
      append_power(out, Letter::N, k);
    } else {
      Integer k = c / a;
      c -= k * a;
      d -= k * b;
      append_power(out, Letter::L, k);
    }
  }
  if (c == 0) {
    // [[a,b],[0,a]] with a = +-1
    append_power(out, Letter::N, b * a);
  } else {
    // [[0,-c],[c,d]] with c = +-1, equal to S N^(dc); S = N L^-1 N
    out.push_back(Letter::N);
    out.push_back(Letter::LInv);
    out.push_back(Letter::N);
    append_power(out, Letter::N, d * c);
  }
  if (flip) out.push_back(Letter::F);
  return GenWord(std::move(out)).normalized();
}

}  // namespace serret
