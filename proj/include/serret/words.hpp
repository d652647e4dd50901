#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "serret/gen_word.hpp"

namespace serret {

/// Finite word over a small alphabet of nonnegative symbols: branch indices,
/// or 0 = L and 1 = N for words in the free monoid.
using Symbols = std::vector<int>;

/// Shortest p with w = p^k. Throws Error(EmptyWord) on an empty word.
Symbols primitive_root(std::span<const int> w);

/// True iff u^omega and w^omega have a common tail, i.e. the primitive roots
/// of u and w are cyclic rotations of each other.
/// Throws Error(EmptyWord) if either word is empty.
bool conjugacy_of_periodic(std::span<const int> u, std::span<const int> w);

/// Least rotation of w in lexicographic order.
Symbols least_rotation(std::span<const int> w);

/// Ultimately periodic one-sided infinite word prefix (period)^omega.
///
/// Always held in canonical form: the period is primitive and the prefix is
/// as short as possible. Two UPWords are equal as infinite sequences iff they
/// are equal field-wise.
class UPWord {
 public:
  UPWord() = default;
  /// Throws Error(EmptyWord) if the period is empty.
  UPWord(Symbols prefix, Symbols period);

  const Symbols& prefix() const { return prefix_; }
  const Symbols& period() const { return period_; }

  int at(std::size_t i) const;
  /// First n symbols.
  Symbols take(std::size_t n) const;

  friend bool operator==(const UPWord&, const UPWord&) = default;

  /// "NLLNNLNNNL(LNL)" style for letter words.
  std::string to_letters() const;
  /// "4121(2)" when every symbol is a digit; "4,12,1(2)" otherwise, or when
  /// `force_commas` is set.
  std::string to_digits(bool force_commas = false) const;

  /// Parses "prefix(period)" over "LN".
  static UPWord parse_letters(std::string_view text);
  /// Parses "prefix(period)" with digit or comma separated symbols.
  static UPWord parse_digits(std::string_view text);

 private:
  Symbols prefix_, period_;
};

/// True iff a and b share a tail; prefixes are irrelevant.
bool tail_equivalent(const UPWord& a, const UPWord& b);

Symbols to_symbols(const MonoidWord& w);
MonoidWord to_monoid_word(std::span<const int> s);

}  // namespace serret
