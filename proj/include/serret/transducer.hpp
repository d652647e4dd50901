#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "serret/algorithm.hpp"
#include "serret/graph.hpp"
#include "serret/numbers.hpp"
#include "serret/words.hpp"

namespace serret {

/// Deterministic letter-to-word transducer. Input symbols are 0..alphabet-1
/// (0 = L, 1 = N for the graph transducer; branch indices for F_T).
struct Transducer {
  struct Edge {
    int to = -1;
    Symbols out;
  };
  int alphabet = 2;
  std::vector<std::string> names;
  std::vector<std::vector<std::optional<Edge>>> edges;  // [state][symbol]
  std::vector<int> initial;

  int size() const { return static_cast<int>(names.size()); }
  const std::optional<Edge>& edge(int s, int a) const { return edges[s][a]; }
};

/// The graph with F-edges removed; edges into 1 or 2 emit their branch symbol.
Transducer gt_transducer(const AlgGraph& g);

/// Finite run; `end_state` receives the final state. Throws Error(Stuck).
Symbols run(const Transducer& t, int start, const Symbols& input, int* end_state = nullptr);
/// Run on an ultimately periodic input. Throws Error(Stuck) when an edge is
/// missing and Error(Domain) when the output is finite.
UPWord run(const Transducer& t, int start, const UPWord& input);

struct CommutatorTransducers {
  Transducer full;       // F_T: states phi^-1{1}, root first
  Transducer pruned;     // F*_T: without the root and the edges into it
  std::vector<int> vertex;         // state of `full` -> vertex of the graph
  std::vector<int> pruned_vertex;  // state of `pruned` -> vertex of the graph
};

/// For each state P and branch a, follows B_a F^e(a) from P: the symbols
/// emitted on the way and the end state give P A_a = A_b1 ... A_bq P'.
CommutatorTransducers build_ft(const SlowAlgorithm& t, const AlgGraph& g, const OpFibration& phi);

struct DefectReport {
  struct Branch {
    std::vector<int> vertices;  // the two primitive paths of the branch
    int hits = 0;               // how many lie over the root
  };
  std::vector<Branch> branches;
  int defect = 0;
};

DefectReport defect(const SlowAlgorithm& t, const AlgGraph& g, const OpFibration& phi);

struct SyncResult {
  bool synchronizing = false;
  Symbols word;        // over 0 = L, 1 = N
  bool shortest = false;  // word found by exhaustive subset search
  int states = 0;
  int pair_graph_size = 0;
  int reset_state = -1;   // state of `t` reached by the word
};

/// Synchronizing-word check on the part of `t` reachable from its initial
/// state, input letters L and N.
SyncResult sync_check(const Transducer& t);

/// Fraction of random inputs of the given length after which the states
/// reachable from the root have not collapsed to one.
double unsynchronized_fraction(const Transducer& t, int samples, int length, std::uint64_t seed);

enum class SerretKind { Holds, Fails, Undecided };
const char* to_string(SerretKind k);

struct SerretWitness {
  Symbols cycle_input, cycle_output;
  std::string state;      // name of P_r
  ProjMatrix state_matrix;
  Point alpha, beta;      // beta = P_r * alpha
  UPWord orbit_alpha, orbit_beta;
  bool verified = false;  // orbits recomputed, not tail-equivalent, P_r in the group
};

struct SamplingReport {
  int samples = 0;
  int length = 0;
  int still_running = 0;  // runs of F*_T that never stopped
};

struct SerretVerdict {
  SerretKind kind = SerretKind::Undecided;
  std::string certificate;  // "trivial", "acyclic", "copy" when Holds
  std::optional<SerretWitness> witness;
  long long bound = 0;
  std::optional<SamplingReport> sampling;
};

/// Layered tail-property check on F*_T. bound = 0 picks 4 * |states|.
SerretVerdict serret_check(const SlowAlgorithm& t, long long bound = 0, std::uint64_t seed = 1);

}  // namespace serret
