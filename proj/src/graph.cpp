#include "serret/graph.hpp"

#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "serret/errors.hpp"

namespace serret {

char label_char(int z) { return z == kL ? 'L' : (z == kN ? 'N' : 'F'); }

ProjMatrix AlgGraph::matrix(int v) const {
  const Vertex& x = vertices[v];
  ProjMatrix m = eval_monoid(x.word);
  return x.lower ? m * gen::F() : m;
}

AlgGraph build_graph(const SlowAlgorithm& t) {
  const auto& trie = t.trie();
  // internal trie nodes in creation order; the trie root comes first
  std::vector<int> internal_id(trie.size(), -1);
  std::vector<int> internal;
  for (std::size_t k = 0; k < trie.size(); ++k) {
    if (trie[k].leaf < 0) {
      internal_id[k] = static_cast<int>(internal.size());
      internal.push_back(static_cast<int>(k));
    }
  }
  AlgGraph g;
  g.vertices.resize(2 * internal.size());
  // words of the internal nodes
  std::vector<MonoidWord> words(trie.size());
  for (std::size_t k = 0; k < trie.size(); ++k) {
    for (int z = 0; z < 2; ++z) {
      int c = trie[k].child[z];
      if (c < 0) continue;
      words[c] = words[k];
      words[c].push_back(z == 0 ? Letter::L : Letter::N);
    }
  }
  for (std::size_t i = 0; i < internal.size(); ++i) {
    int k = internal[i];
    auto& up = g.vertices[2 * i];
    auto& lo = g.vertices[2 * i + 1];
    up.word = lo.word = words[k];
    lo.lower = true;
    up.name = words[k].empty() ? "1" : to_string(words[k]);
    lo.name = words[k].empty() ? "2" : to_string(words[k]) + "F";
    up.next[kF] = static_cast<int>(2 * i + 1);
    lo.next[kF] = static_cast<int>(2 * i);
    for (int z = 0; z < 2; ++z) {
      // upper B: the Z-edge goes to BZ
      int c = trie[k].child[z];
      if (trie[c].leaf >= 0) {
        int a = trie[c].leaf;
        up.next[z] = t.flip(a) ? AlgGraph::covertex : AlgGraph::root;
        up.emits[z] = a;
      } else {
        up.next[z] = 2 * internal_id[c];
      }
      // lower BF: FL = NF, so the Z-edge goes to BZ'F
      int c2 = trie[k].child[1 - z];
      if (trie[c2].leaf >= 0) {
        int a = trie[c2].leaf;
        lo.next[z] = t.flip(a) ? AlgGraph::root : AlgGraph::covertex;
        lo.emits[z] = a;
      } else {
        lo.next[z] = 2 * internal_id[c2] + 1;
      }
    }
  }
  return g;
}

int SchreierGraph::act(int v, Letter x) const {
  switch (x) {
    case Letter::L: return perm[kL][v];
    case Letter::N: return perm[kN][v];
    case Letter::F: return perm[kF][v];
    case Letter::LInv: return inv[kL][v];
    case Letter::NInv: return inv[kN][v];
    case Letter::S: return perm[kN][inv[kL][perm[kN][v]]];
    case Letter::R: return inv[kN][perm[kL][v]];
    case Letter::RInv: return inv[kL][perm[kN][v]];
  }
  return v;
}

int SchreierGraph::act(int v, const GenWord& w) const {
  for (Letter x : w.letters()) v = act(v, x);
  return v;
}

int SchreierGraph::act_power(int v, int z, const Integer& k) const {
  if (k == 0) return v;
  int len = 1;
  for (int w = perm[z][v]; w != v; w = perm[z][w]) ++len;
  Integer r = k % len;
  if (r < 0) r += len;
  for (int i = static_cast<int>(r); i > 0; --i) v = perm[z][v];
  return v;
}

int SchreierGraph::act(int v, const ProjMatrix& m) const {
  // same reduction as generic_factor, applying each power as it is found
  const bool flip = m.det() < 0;
  ProjMatrix p = flip ? m * gen::F() : m;
  Integer a = p.a(), b = p.b(), c = p.c(), d = p.d();
  while (a != 0 && c != 0) {
    if (abs(a) >= abs(c)) {
      Integer k = a / c;
      a -= k * c;
      b -= k * d;
      v = act_power(v, kN, k);
    } else {
      Integer k = c / a;
      c -= k * a;
      d -= k * b;
      v = act_power(v, kL, k);
    }
  }
  if (c == 0) {
    v = act_power(v, kN, b * a);
  } else {
    v = act(v, Letter::S);
    v = act_power(v, kN, d * c);
  }
  if (flip) v = perm[kF][v];
  return v;
}

namespace {

// BFS numbering from the root over L < N < F; unreachable vertices go last.
std::vector<int> bfs_ids(const std::array<std::vector<int>, 3>& perm) {
  const int n = static_cast<int>(perm[0].size());
  std::vector<int> id(n, -1);
  int next_id = 0;
  std::queue<int> todo;
  if (n > 0) {
    id[0] = next_id++;
    todo.push(0);
  }
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop();
    for (int z = 0; z < 3; ++z) {
      int w = perm[z][v];
      if (id[w] < 0) {
        id[w] = next_id++;
        todo.push(w);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (id[v] < 0) id[v] = next_id++;
  }
  return id;
}

}  // namespace

SchreierGraph canonical(const SchreierGraph& s) {
  const int n = s.size();
  std::vector<int> id = bfs_ids(s.perm);
  SchreierGraph out;
  for (int z = 0; z < 3; ++z) {
    out.perm[z].assign(n, 0);
    out.inv[z].assign(n, 0);
    for (int v = 0; v < n; ++v) {
      out.perm[z][id[v]] = id[s.perm[z][v]];
      out.inv[z][id[s.perm[z][v]]] = id[v];
    }
  }
  return out;
}

SchreierGraph make_schreier(std::array<std::vector<int>, 3> perm) {
  SchreierGraph s;
  const int n = static_cast<int>(perm[0].size());
  for (int z = 0; z < 3; ++z) {
    if (static_cast<int>(perm[z].size()) != n) throw Error(ErrorKind::Domain, "label arrays differ in size");
    s.inv[z].assign(n, -1);
    for (int v = 0; v < n; ++v) {
      int w = perm[z][v];
      if (w < 0 || w >= n || s.inv[z][w] >= 0) throw Error(ErrorKind::Domain, "label does not act as a permutation");
      s.inv[z][w] = v;
    }
  }
  s.perm = std::move(perm);
  return canonical(s);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  bool unite(int u, int v) {
    u = find(u);
    v = find(v);
    if (u == v) return false;
    if (v < u) std::swap(u, v);
    parent[v] = u;
    return true;
  }
};

}  // namespace

Quotient schreier_quotient(const AlgGraph& g) {
  const int n = g.size();
  UnionFind uf(n);
  std::vector<int> cls(n, -1);
  std::array<std::vector<int>, 3> perm;
  int k = 0;
  for (;;) {
    // Sweep until stable: equal sources force equal targets (determinism) and
    // equal targets force equal sources (co-determinism).
    bool changed = true;
    while (changed) {
      changed = false;
      for (int z = 0; z < 3; ++z) {
        std::vector<int> target_of(n, -1), source_of(n, -1);
        for (int u = 0; u < n; ++u) {
          int cu = uf.find(u), cv = uf.find(g.next(u, z));
          if (target_of[cu] >= 0 && uf.find(target_of[cu]) != cv) {
            changed |= uf.unite(target_of[cu], cv);
          }
          target_of[uf.find(u)] = uf.find(g.next(u, z));
          if (source_of[cv] >= 0 && uf.find(source_of[cv]) != uf.find(u)) {
            changed |= uf.unite(source_of[cv], u);
          }
          source_of[uf.find(g.next(u, z))] = uf.find(u);
        }
      }
    }
    std::fill(cls.begin(), cls.end(), -1);
    std::vector<int> rep;
    k = 0;
    for (int u = 0; u < n; ++u) {
      if (uf.find(u) == u) {
        cls[u] = k++;
        rep.push_back(u);
      }
    }
    std::array<std::vector<int>, 3> inv;
    for (int z = 0; z < 3; ++z) {
      perm[z].assign(k, -1);
      inv[z].assign(k, -1);
      for (int u = 0; u < n; ++u) perm[z][cls[uf.find(u)]] = cls[uf.find(g.next(u, z))];
      for (int v = 0; v < k; ++v) inv[z][perm[z][v]] = v;
    }
    // Relators of PGL(2,Z) over L, N, F: F^2, FLFN^-1, (LN^-1)^3, (NL^-1N)^2.
    // Both ends of a relator path name the same coset.
    static const std::vector<std::pair<int, bool>> relators[] = {
        {{kF, false}, {kF, false}},
        {{kF, false}, {kL, false}, {kF, false}, {kN, true}},
        {{kL, false}, {kN, true}, {kL, false}, {kN, true}, {kL, false}, {kN, true}},
        {{kN, false}, {kL, true}, {kN, false}, {kN, false}, {kL, true}, {kN, false}},
    };
    bool glued = false;
    for (int v = 0; v < k; ++v) {
      for (const auto& rel : relators) {
        int w = v;
        for (auto [z, inverse] : rel) w = inverse ? inv[z][w] : perm[z][w];
        if (w != v) glued |= uf.unite(rep[v], rep[w]);
      }
    }
    if (!glued) break;
  }
  SchreierGraph raw;
  raw.perm = perm;
  for (int z = 0; z < 3; ++z) {
    raw.inv[z].assign(k, 0);
    for (int v = 0; v < k; ++v) raw.inv[z][perm[z][v]] = v;
  }
  Quotient q;
  q.schreier = canonical(raw);
  std::vector<int> relabel = bfs_ids(perm);
  q.fibration.phi.resize(n);
  for (int u = 0; u < n; ++u) q.fibration.phi[u] = relabel[cls[uf.find(u)]];
  return q;
}

bool fibration_ok(const AlgGraph& g, const Quotient& q) {
  const auto& phi = q.fibration.phi;
  if (phi[AlgGraph::root] != 0) return false;
  for (int u = 0; u < g.size(); ++u) {
    for (int z = 0; z < 3; ++z) {
      if (phi[g.next(u, z)] != q.schreier.next(phi[u], z)) return false;
    }
  }
  return true;
}

bool contains(const SchreierGraph& s, const ProjMatrix& m) { return s.act(0, m) == 0; }

namespace {

// 2-colouring in which L, N keep the colour and F swaps it; exists iff the
// subgroup has no element of determinant -1.
bool f_parity_colourable(const SchreierGraph& s) {
  std::vector<int> colour(s.size(), -1);
  std::queue<int> todo;
  colour[0] = 0;
  todo.push(0);
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop();
    for (int z = 0; z < 3; ++z) {
      int w = s.next(v, z);
      int c = z == kF ? 1 - colour[v] : colour[v];
      if (colour[w] < 0) {
        colour[w] = c;
        todo.push(w);
      } else if (colour[w] != c) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

Fingerprint fingerprint(const SlowAlgorithm& t, const SchreierGraph& s) {
  Fingerprint f;
  f.index = s.size();
  f.in_gamma = true;
  for (const auto& m : t.branches()) f.in_gamma = f.in_gamma && m.det() > 0;
  f.in_gamma_by_graph = f_parity_colourable(s);
  f.has_srs = contains(s, eval_word(GenWord::parse("SRS")));
  f.has_srsf = contains(s, eval_word(GenWord::parse("SRSF")));
  f.has_sr2sf = contains(s, eval_word(GenWord::parse("SRRSF")));
  if (f.index == 1) {
    f.group_class = "Pi";
  } else if (f.in_gamma_by_graph && f.index == 2) {
    f.group_class = "Gamma";
  } else if (f.in_gamma_by_graph && f.index == 4 && contains(s, gen::R()) &&
             contains(s, eval_word(GenWord::parse("SRS")))) {
    f.group_class = "<R,SRS>";
  } else {
    f.group_class = "other";
  }
  if (f.in_gamma) {
    bool odd = false;
    for (int a = 0; a < t.size(); ++a) odd = odd || t.factor(a).size() % 2 == 1;
    f.parity_class = odd ? "Gamma" : "<R,SRS>";
  }
  return f;
}

Fingerprint fingerprint(const SlowAlgorithm& t) {
  return fingerprint(t, schreier_quotient(build_graph(t)).schreier);
}

namespace {

const char* style_of(int z) { return z == kL ? "dashed" : (z == kN ? "solid" : "dotted"); }

template <class NameFn, class NextFn>
std::string dot_text(const std::string& graph_name, int n, NameFn name, NextFn next) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n";
  for (int v = 0; v < n; ++v) out << "  v" << v << " [label=\"" << name(v) << "\"];\n";
  for (int v = 0; v < n; ++v) {
    for (int z = 0; z < 2; ++z) {
      out << "  v" << v << " -> v" << next(v, z) << " [label=\"" << label_char(z) << "\", style=" << style_of(z)
          << "];\n";
    }
    int w = next(v, kF);
    // F is an involution: draw each pair once
    if (w >= v) {
      out << "  v" << v << " -> v" << w << " [label=\"F\", style=dotted, dir=none];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string export_dot(const AlgGraph& g) {
  return dot_text(
      "G_T", g.size(), [&](int v) { return g.vertices[v].name; }, [&](int v, int z) { return g.next(v, z); });
}

std::string export_dot(const SchreierGraph& s) {
  return dot_text(
      "Schreier", s.size(), [](int v) { return std::to_string(v + 1); }, [&](int v, int z) { return s.next(v, z); });
}

}  // namespace serret
