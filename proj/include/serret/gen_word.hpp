#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "serret/proj_matrix.hpp"

namespace serret {

enum class Letter : std::uint8_t { L, N, F, LInv, NInv, S, R, RInv };

/// A word over the named generators. Parsed from and printed as strings over
/// "LNFSR" with a "'" suffix for inverses, e.g. "NL'N".
class GenWord {
 public:
  GenWord() = default;
  explicit GenWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Throws Error(Parse) on unknown letters.
  static GenWord parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  GenWord inverse() const;
  /// Removes immediate cancellations XX^-1 (F and S are involutions).
  GenWord normalized() const;

  GenWord& operator+=(const GenWord& rhs);
  friend GenWord operator+(GenWord lhs, const GenWord& rhs) { return lhs += rhs; }
  friend bool operator==(const GenWord&, const GenWord&) = default;

  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

Letter inverse(Letter x);
const ProjMatrix& matrix_of(Letter x);
char symbol_of(Letter x);

ProjMatrix eval_word(const GenWord& w);

/// A word in the free monoid on {L, N}.
using MonoidWord = std::vector<Letter>;

std::string to_string(const MonoidWord& w);
/// Parses a string over "LN" only.
MonoidWord parse_monoid_word(std::string_view text);
ProjMatrix eval_monoid(const MonoidWord& w);

struct MonoidFactorization {
  MonoidWord word;
  bool flip = false;  // true when the matrix equals eval(word) * F
};

/// Unique factorization M = B * F^e with B in the free monoid on L, N.
/// Throws Error(NotNonnegative) when M has no entrywise nonnegative
/// representative.
MonoidFactorization monoid_factor(const ProjMatrix& m);

/// A word over {L, N, F, L^-1, N^-1} evaluating to m.
GenWord generic_factor(const ProjMatrix& m);

}  // namespace serret
