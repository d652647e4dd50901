#pragma once

#include <optional>
#include <string>
#include <vector>

#include "serret/algorithm.hpp"
#include "serret/graph.hpp"
#include "serret/numbers.hpp"
#include "serret/words.hpp"

namespace serret {

enum class OrbitStatus { Periodic, ReachedZeroInfty, Ambiguous };
const char* to_string(OrbitStatus s);

struct OrbitResult {
  OrbitStatus status = OrbitStatus::Periodic;
  UPWord periodic;   // quadratic input
  Symbols finite;    // rational input: symbols until the orbit sits in {0, infinity}
  /// Rational input with a shared-endpoint visit: the other expansion, which
  /// takes the higher-index branch at that step.
  std::optional<Symbols> alternative;
  long long ambiguous_at = -1;  // step index of the shared-endpoint visit
};

/// T-symbolic orbit. Quadratic irrationals give an ultimately periodic word;
/// rationals stop once the orbit reaches 0 or infinity.
/// Throws Error(BoundExceeded) after max_steps, Error(Domain) for x < 0.
OrbitResult orbit(const SlowAlgorithm& t, const Point& x, long long max_steps = 100000);
/// Shorthand for quadratic input.
UPWord orbit_word(const SlowAlgorithm& t, const QuadIrr& x, long long max_steps = 100000);

/// The {L, N} coding: L while x < 1 (x -> x/(1-x)), N while x > 1 (x -> x-1).
/// Symbols are 0 = L, 1 = N. Throws Error(Domain) unless x > 0.
UPWord ln_expansion(const QuadIrr& x);

/// Fixed point in [0, infinity] of an entrywise nonnegative, non-identity
/// matrix; it attracts [0, infinity] under iteration.
Point positive_fixed_point(const ProjMatrix& m);

/// Value of an {L, N} word: eval(prefix) applied to the fixed point of
/// eval(period).
Point pi_value(const UPWord& z);

/// Regular continued fraction [a0; a1, a2, ...] of x > 0.
struct RegularCF {
  UPWord quotients;
  /// x = head * xi where xi is the complete quotient at the start of the
  /// period, a purely periodic value.
  ProjMatrix head;
  QuadIrr xi;
};
RegularCF regular_cf(const QuadIrr& x);

enum class SigmaVerdict { Equivalent, NotPiEquivalent, NotSigmaEquivalent };
const char* to_string(SigmaVerdict v);

struct SigmaResult {
  SigmaVerdict verdict = SigmaVerdict::NotPiEquivalent;
  std::optional<ProjMatrix> matrix;  // y = matrix * x, matrix in the subgroup
};

/// Decides whether y = M * x for some M in the subgroup with Schreier graph s.
/// The stabilizer of x in PGL(2,Z) is infinite cyclic, generated by the
/// primitive period of its regular continued fraction, so the search over
/// M0 G^k is complete; the answer of least height is returned.
SigmaResult sigma_equivalent(const SchreierGraph& s, const QuadIrr& x, const QuadIrr& y);

struct CensusResult {
  std::size_t ball_size = 0;  // distinct matrices within the radius
  std::size_t points = 0;     // distinct values in (0, infinity)
  std::vector<Symbols> classes;  // least rotation of each tail period
};

/// Tail classes among M * x, M a product of at most `radius` branches and
/// their inverses.
CensusResult census(const SlowAlgorithm& t, const QuadIrr& x, int radius);

}  // namespace serret
