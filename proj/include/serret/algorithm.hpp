#pragma once

#include <optional>
#include <string>
#include <vector>

#include "serret/gen_word.hpp"
#include "serret/numbers.hpp"
#include "serret/proj_matrix.hpp"
#include "serret/words.hpp"

namespace serret {

/// Closed interval [left, right] inside [0, infinity] with unimodular endpoints.
struct UnimodInterval {
  ExtRational left, right;
  friend bool operator==(const UnimodInterval&, const UnimodInterval&) = default;
};

/// Image of [0, infinity] under m.
UnimodInterval interval_of(const ProjMatrix& m);

/// One cell of a partition-form spec: the interval and the orientation sign
/// e = +1 (increasing inverse branch) or -1 (decreasing).
struct PartitionCell {
  UnimodInterval interval;
  int e = 1;
  friend bool operator==(const PartitionCell&, const PartitionCell&) = default;
};

struct StepResult {
  int symbol = 0;
  Point value;
  bool ambiguous = false;
  /// When ambiguous: the other admissible branch (always symbol + 1) and its value.
  std::optional<int> alt_symbol;
  std::optional<Point> alt_value;
};

/// E = Delta_first u ... u Delta_last, optionally without its endpoints.
struct Window {
  int first = 0, last = 0;
  bool open_left = false, open_right = false;
};

enum class ReturnStatus { Returned, NeverReturns, BoundExceeded };

struct FirstReturn {
  ReturnStatus status = ReturnStatus::Returned;
  Point value;            // T^r(x) when Returned; last iterate otherwise
  long long time = 0;     // r(x) when Returned
  Symbols symbols;        // branch symbols read on the way
  bool ambiguous = false; // some step hit a shared endpoint
};

const char* to_string(ReturnStatus s);

/// Validated slow continued fraction algorithm.
class SlowAlgorithm {
 public:
  /// Trie over the factor words B_a; leaves carry the branch index.
  struct TrieNode {
    int child[2] = {-1, -1};  // L, N
    int leaf = -1;
  };

  /// Throws Error(TooFewBranches | NegativeEntries | WrongOrder | NotAPartition).
  static SlowAlgorithm from_matrices(std::vector<ProjMatrix> branches);
  /// Branch words over L, N, F such as "LNLF".
  static SlowAlgorithm from_words(const std::vector<std::string>& words);
  /// Throws Error(BadDeterminant) for a non-unimodular cell, plus the errors
  /// of from_matrices.
  static SlowAlgorithm from_partition(const std::vector<PartitionCell>& cells);

  std::vector<PartitionCell> to_partition() const;

  int size() const { return static_cast<int>(branches_.size()); }
  const std::vector<ProjMatrix>& branches() const { return branches_; }
  const ProjMatrix& branch(int a) const { return branches_[a]; }
  const UnimodInterval& interval(int a) const { return intervals_[a]; }
  /// B_a, with A_a = B_a F^e(a).
  const MonoidWord& factor(int a) const { return factors_[a]; }
  /// e(a) = 1 iff det A_a = -1.
  bool flip(int a) const { return flips_[a]; }
  const std::vector<TrieNode>& trie() const { return trie_; }

  /// "LNLF" style name of branch a.
  std::string branch_word(int a) const;

 private:
  std::vector<ProjMatrix> branches_;
  std::vector<UnimodInterval> intervals_;
  std::vector<MonoidWord> factors_;
  std::vector<bool> flips_;
  std::vector<TrieNode> trie_;
};

/// Locates x in the partition and applies the inverse branch. Interior
/// points are deterministic; at a shared endpoint of two branches of equal
/// orientation the lower index is chosen and `ambiguous` is set.
/// Throws Error(Domain) for negative x.
StepResult step(const SlowAlgorithm& t, const Point& x);

/// Endpoints of the window as an interval.
UnimodInterval window_interval(const SlowAlgorithm& t, const Window& w);
bool in_window(const SlowAlgorithm& t, const Window& w, const Point& x);

/// Iterates step until the orbit re-enters the window. An exactly repeated
/// iterate outside the window proves that it never returns.
/// Throws Error(Domain) if x is not in the window.
FirstReturn first_return(const SlowAlgorithm& t, const Window& w, const Point& x, long long max_steps = 10000);

/// Inverse branches A_a B of the accelerated map with B a product of at most
/// `depth` branches outside the window; deduplicated and sorted by interval
/// (left endpoint, then wider first).
std::vector<ProjMatrix> accel_branches(const SlowAlgorithm& t, const Window& w, int depth);

}  // namespace serret
