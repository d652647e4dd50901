#pragma once

#include <array>
#include <string>
#include <vector>

#include "serret/algorithm.hpp"
#include "serret/proj_matrix.hpp"

namespace serret {

/// Edge labels of the graphs: L, N and F.
enum Label : int { kL = 0, kN = 1, kF = 2 };
char label_char(int z);

/// Double tree of left factors of the branch words, leaves glued to the root
/// (vertex 0, named "1") and its F-twin (vertex 1, named "2").
struct AlgGraph {
  struct Vertex {
    std::string name;        // "1", "2", "LN", "LNF", ...
    MonoidWord word;         // B
    bool lower = false;      // vertex is BF rather than B
    std::array<int, 3> next{};
    std::array<int, 2> emits{-1, -1};  // branch symbol read on the L/N edge, or -1
  };
  std::vector<Vertex> vertices;

  int size() const { return static_cast<int>(vertices.size()); }
  int next(int v, int z) const { return vertices[v].next[z]; }
  /// The group element B or BF named by the vertex.
  ProjMatrix matrix(int v) const;
  static constexpr int root = 0;
  static constexpr int covertex = 1;
};

AlgGraph build_graph(const SlowAlgorithm& t);

/// Schreier graph of a subgroup of PGL(2,Z) w.r.t. {L, N, F}: each label acts
/// as a permutation of the cosets. Vertex 0 is the root.
struct SchreierGraph {
  std::array<std::vector<int>, 3> perm;
  std::array<std::vector<int>, 3> inv;

  int size() const { return static_cast<int>(perm[0].size()); }
  int next(int v, int z) const { return perm[z][v]; }
  /// Right action of one letter, including the derived S = N L^-1 N and
  /// R = L N^-1.
  int act(int v, Letter x) const;
  int act(int v, const GenWord& w) const;
  /// v * L^k etc. for any integer k, reduced modulo the cycle length.
  int act_power(int v, int z, const Integer& k) const;
  /// v * m, following the Euclidean factorization of m without expanding it.
  int act(int v, const ProjMatrix& m) const;

  friend bool operator==(const SchreierGraph& x, const SchreierGraph& y) { return x.perm == y.perm; }
};

/// Schreier graph from explicit L, N, F images, renumbered canonically.
SchreierGraph make_schreier(std::array<std::vector<int>, 3> perm);

/// Renumbers vertices by breadth-first search from the root over L < N < F,
/// so that isomorphic rooted graphs become equal.
SchreierGraph canonical(const SchreierGraph& s);

struct OpFibration {
  std::vector<int> phi;  // AlgGraph vertex -> SchreierGraph vertex
};

struct Quotient {
  SchreierGraph schreier;
  OpFibration fibration;
};

/// Glues vertices until every label is deterministic and co-deterministic.
Quotient schreier_quotient(const AlgGraph& g);

/// True iff phi commutes with every edge and sends the root to the root.
bool fibration_ok(const AlgGraph& g, const Quotient& q);

/// Membership of m in the subgroup whose Schreier graph is s.
bool contains(const SchreierGraph& s, const ProjMatrix& m);

struct Fingerprint {
  int index = 0;
  bool in_gamma = false;          // all branches have determinant +1
  bool in_gamma_by_graph = false; // same, read off as F-parity 2-colouring
  bool has_srs = false, has_srsf = false, has_sr2sf = false;
  std::string group_class;        // "Pi", "Gamma", "<R,SRS>" or "other"
  std::string parity_class;       // for det +1 algorithms: from branch word lengths
};

Fingerprint fingerprint(const SlowAlgorithm& t, const SchreierGraph& s);
Fingerprint fingerprint(const SlowAlgorithm& t);

std::string export_dot(const AlgGraph& g);
std::string export_dot(const SchreierGraph& s);

}  // namespace serret
