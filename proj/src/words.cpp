#include "serret/words.hpp"

#include <algorithm>

#include "serret/errors.hpp"

namespace serret {

Symbols primitive_root(std::span<const int> w) {
  if (w.empty()) throw Error(ErrorKind::EmptyWord, "primitive root of the empty word");
  const std::size_t n = w.size();
  // KMP failure function: the smallest period is n - border
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  std::size_t p = n - fail[n - 1];
  if (n % p != 0) p = n;
  return Symbols(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
}

bool conjugacy_of_periodic(std::span<const int> u, std::span<const int> w) {
  if (u.empty() || w.empty()) throw Error(ErrorKind::EmptyWord, "periodic conjugacy needs nonempty words");
  Symbols ru = primitive_root(u), rw = primitive_root(w);
  if (ru.size() != rw.size()) return false;
  Symbols doubled = ru;
  doubled.insert(doubled.end(), ru.begin(), ru.end());
  return std::search(doubled.begin(), doubled.end(), rw.begin(), rw.end()) != doubled.end();
}

Symbols least_rotation(std::span<const int> w) {
  const std::size_t n = w.size();
  if (n == 0) return {};
  // Booth-style two-pointer minimum rotation
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    int a = w[(i + k) % n], b = w[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  std::size_t start = std::min(i, j);
  Symbols out;
  out.reserve(n);
  for (std::size_t t = 0; t < n; ++t) out.push_back(w[(start + t) % n]);
  return out;
}

UPWord::UPWord(Symbols prefix, Symbols period) : prefix_(std::move(prefix)) {
  if (period.empty()) throw Error(ErrorKind::EmptyWord, "UPWord needs a nonempty period");
  period_ = primitive_root(period);
  // Absorb prefix symbols that repeat the period: x (u y)^w = (y u)... shifted
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    prefix_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

int UPWord::at(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  return period_[(i - prefix_.size()) % period_.size()];
}

Symbols UPWord::take(std::size_t n) const {
  Symbols out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
  return out;
}

namespace {

std::string letters(const Symbols& s) {
  std::string out;
  for (int x : s) out += (x == 0 ? 'L' : (x == 1 ? 'N' : '?'));
  return out;
}

std::string digits(const Symbols& s, bool commas) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (commas && i > 0) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

}  // namespace

std::string UPWord::to_letters() const { return letters(prefix_) + "(" + letters(period_) + ")"; }

std::string UPWord::to_digits(bool force_commas) const {
  bool commas = force_commas;
  for (int x : prefix_) commas = commas || x > 9;
  for (int x : period_) commas = commas || x > 9;
  return digits(prefix_, commas) + "(" + digits(period_, commas) + ")";
}

namespace {

std::pair<std::string_view, std::string_view> split_period(std::string_view text) {
  auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')') {
    throw Error(ErrorKind::Parse, "expected prefix(period), got '" + std::string(text) + "'");
  }
  return {text.substr(0, open), text.substr(open + 1, text.size() - open - 2)};
}

Symbols parse_digit_run(std::string_view s) {
  Symbols out;
  bool commas = s.find(',') != std::string_view::npos;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ',' || s[i] == ' ') {
      ++i;
      continue;
    }
    if (s[i] < '0' || s[i] > '9') throw Error(ErrorKind::Parse, "bad symbol in '" + std::string(s) + "'");
    if (!commas) {
      out.push_back(s[i] - '0');
      ++i;
      continue;
    }
    int v = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') v = v * 10 + (s[i++] - '0');
    out.push_back(v);
  }
  return out;
}

}  // namespace

UPWord UPWord::parse_letters(std::string_view text) {
  auto [pre, per] = split_period(text);
  return {to_symbols(parse_monoid_word(pre)), to_symbols(parse_monoid_word(per))};
}

UPWord UPWord::parse_digits(std::string_view text) {
  auto [pre, per] = split_period(text);
  // a comma anywhere switches both parts to comma mode
  bool commas = text.find(',') != std::string_view::npos;
  auto run = [&](std::string_view s) {
    if (commas && s.find(',') == std::string_view::npos && !s.empty()) {
      return parse_digit_run(std::string(s) + ",");
    }
    return parse_digit_run(s);
  };
  return {run(pre), run(per)};
}

bool tail_equivalent(const UPWord& a, const UPWord& b) { return conjugacy_of_periodic(a.period(), b.period()); }

Symbols to_symbols(const MonoidWord& w) {
  Symbols s;
  s.reserve(w.size());
  for (Letter x : w) s.push_back(x == Letter::L ? 0 : 1);
  return s;
}

MonoidWord to_monoid_word(std::span<const int> s) {
  MonoidWord w;
  w.reserve(s.size());
  for (int x : s) w.push_back(x == 0 ? Letter::L : Letter::N);
  return w;
}

}  // namespace serret
