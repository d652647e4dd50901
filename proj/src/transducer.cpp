#include "serret/transducer.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>

#include "serret/errors.hpp"

namespace serret {

Transducer gt_transducer(const AlgGraph& g) {
  Transducer t;
  t.alphabet = 2;
  t.initial = {AlgGraph::root};
  for (int v = 0; v < g.size(); ++v) {
    t.names.push_back(g.vertices[v].name);
    std::vector<std::optional<Transducer::Edge>> row(2);
    for (int z = 0; z < 2; ++z) {
      Transducer::Edge e;
      e.to = g.next(v, z);
      if (g.vertices[v].emits[z] >= 0) e.out.push_back(g.vertices[v].emits[z]);
      row[z] = std::move(e);
    }
    t.edges.push_back(std::move(row));
  }
  return t;
}

namespace {

const Transducer::Edge& edge_or_throw(const Transducer& t, int s, int a) {
  if (a < 0 || a >= t.alphabet) throw Error(ErrorKind::Domain, "input symbol " + std::to_string(a) + " out of range");
  const auto& e = t.edge(s, a);
  if (!e) throw Error(ErrorKind::Stuck, "no edge from state " + t.names[s] + " on symbol " + std::to_string(a));
  return *e;
}

}  // namespace

Symbols run(const Transducer& t, int start, const Symbols& input, int* end_state) {
  Symbols out;
  int s = start;
  for (int a : input) {
    const auto& e = edge_or_throw(t, s, a);
    out.insert(out.end(), e.out.begin(), e.out.end());
    s = e.to;
  }
  if (end_state) *end_state = s;
  return out;
}

UPWord run(const Transducer& t, int start, const UPWord& input) {
  int s = start;
  Symbols out = run(t, s, input.prefix(), &s);
  // the state at each pass over the period eventually repeats
  std::map<int, std::size_t> seen;
  for (;;) {
    auto [it, fresh] = seen.emplace(s, out.size());
    if (!fresh) {
      std::size_t from = it->second;
      if (from == out.size()) throw Error(ErrorKind::Domain, "transducer output is finite on this input");
      Symbols prefix(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(from));
      Symbols period(out.begin() + static_cast<std::ptrdiff_t>(from), out.end());
      return {std::move(prefix), std::move(period)};
    }
    Symbols chunk = run(t, s, input.period(), &s);
    out.insert(out.end(), chunk.begin(), chunk.end());
  }
}

CommutatorTransducers build_ft(const SlowAlgorithm& t, const AlgGraph& g, const OpFibration& phi) {
  CommutatorTransducers out;
  std::vector<int> state_of(g.size(), -1);
  for (int v = 0; v < g.size(); ++v) {
    if (phi.phi[v] == 0) {
      state_of[v] = static_cast<int>(out.vertex.size());
      out.vertex.push_back(v);
    }
  }
  const int n = t.size();
  Transducer& full = out.full;
  full.alphabet = n;
  full.initial = {0};
  for (int v : out.vertex) {
    full.names.push_back(g.vertices[v].name);
    std::vector<std::optional<Transducer::Edge>> row(n);
    for (int a = 0; a < n; ++a) {
      Transducer::Edge e;
      int w = v;
      for (Letter x : t.factor(a)) {
        int z = x == Letter::L ? kL : kN;
        if (g.vertices[w].emits[z] >= 0) e.out.push_back(g.vertices[w].emits[z]);
        w = g.next(w, z);
      }
      if (t.flip(a)) w = g.next(w, kF);
      e.to = state_of[w];
      if (e.to < 0) throw Error(ErrorKind::Domain, "commutator walk left the root fibre; the fibration is wrong");
      row[a] = std::move(e);
    }
    full.edges.push_back(std::move(row));
  }
  // drop the root and every edge into it
  Transducer& pruned = out.pruned;
  pruned.alphabet = n;
  for (int s = 1; s < full.size(); ++s) {
    pruned.names.push_back(full.names[s]);
    out.pruned_vertex.push_back(out.vertex[s]);
    std::vector<std::optional<Transducer::Edge>> row(n);
    for (int a = 0; a < n; ++a) {
      const auto& e = *full.edges[s][a];
      if (e.to == 0) continue;
      row[a] = Transducer::Edge{e.to - 1, e.out};
    }
    pruned.edges.push_back(std::move(row));
  }
  for (int s = 0; s < pruned.size(); ++s) pruned.initial.push_back(s);
  return out;
}

DefectReport defect(const SlowAlgorithm& t, const AlgGraph& g, const OpFibration& phi) {
  DefectReport out;
  for (int a = 0; a < t.size(); ++a) {
    DefectReport::Branch b;
    b.vertices = {AlgGraph::root, AlgGraph::covertex};
    int v = AlgGraph::root;
    const auto& word = t.factor(a);
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      v = g.next(v, word[i] == Letter::L ? kL : kN);
      b.vertices.push_back(v);
      b.vertices.push_back(g.next(v, kF));
    }
    for (int w : b.vertices) b.hits += phi.phi[w] == 0 ? 1 : 0;
    out.defect = std::max(out.defect, b.hits);
    out.branches.push_back(std::move(b));
  }
  return out;
}

namespace {

// Deterministic automaton on the states reachable from the initial one.
struct Automaton {
  std::vector<int> original;                 // local -> transducer state
  std::vector<std::array<int, 2>> delta;     // local transitions on L, N
};

Automaton reachable_part(const Transducer& t) {
  Automaton m;
  std::vector<int> local(t.size(), -1);
  std::queue<int> todo;
  int s0 = t.initial.empty() ? 0 : t.initial.front();
  local[s0] = 0;
  m.original.push_back(s0);
  todo.push(s0);
  while (!todo.empty()) {
    int s = todo.front();
    todo.pop();
    for (int z = 0; z < 2; ++z) {
      int w = edge_or_throw(t, s, z).to;
      if (local[w] < 0) {
        local[w] = static_cast<int>(m.original.size());
        m.original.push_back(w);
        todo.push(w);
      }
    }
  }
  m.delta.resize(m.original.size());
  for (std::size_t i = 0; i < m.original.size(); ++i) {
    for (int z = 0; z < 2; ++z) m.delta[i][z] = local[edge_or_throw(t, m.original[i], z).to];
  }
  return m;
}

int pair_index(int i, int j, int k) {
  if (i > j) std::swap(i, j);
  // row-major upper triangle including the diagonal
  return i * k - i * (i - 1) / 2 + (j - i);
}

}  // namespace

SyncResult sync_check(const Transducer& t) {
  Automaton m = reachable_part(t);
  const int k = static_cast<int>(m.original.size());
  SyncResult out;
  out.states = k;
  out.pair_graph_size = k * (k + 1) / 2;
  if (k == 1) {
    out.synchronizing = true;
    out.shortest = true;
    out.reset_state = m.original[0];
    return out;
  }
  // pair automaton: which pairs can be merged
  std::vector<std::pair<int, int>> pairs(out.pair_graph_size);
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) pairs[pair_index(i, j, k)] = {i, j};
  }
  std::vector<std::vector<int>> preds(out.pair_graph_size);
  for (int p = 0; p < out.pair_graph_size; ++p) {
    auto [i, j] = pairs[p];
    for (int z = 0; z < 2; ++z) preds[pair_index(m.delta[i][z], m.delta[j][z], k)].push_back(p);
  }
  std::vector<char> good(out.pair_graph_size, 0);
  std::queue<int> todo;
  for (int i = 0; i < k; ++i) {
    good[pair_index(i, i, k)] = 1;
    todo.push(pair_index(i, i, k));
  }
  while (!todo.empty()) {
    int p = todo.front();
    todo.pop();
    for (int q : preds[p]) {
      if (!good[q]) {
        good[q] = 1;
        todo.push(q);
      }
    }
  }
  if (std::find(good.begin(), good.end(), 0) != good.end()) return out;
  out.synchronizing = true;

  auto image = [&](std::vector<int> set, int z) {
    for (int& s : set) s = m.delta[s][z];
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
  };

  if (k <= 12) {
    // exhaustive subset search: shortest word, L before N
    const int full = (1 << k) - 1;
    std::vector<int> parent(full + 1, -2), via(full + 1, -1);
    std::queue<int> q;
    parent[full] = -1;
    q.push(full);
    int hit = -1;
    while (!q.empty() && hit < 0) {
      int s = q.front();
      q.pop();
      for (int z = 0; z < 2 && hit < 0; ++z) {
        int img = 0;
        for (int i = 0; i < k; ++i) {
          if (s >> i & 1) img |= 1 << m.delta[i][z];
        }
        if (parent[img] != -2) continue;
        parent[img] = s;
        via[img] = z;
        if ((img & (img - 1)) == 0) hit = img;
        q.push(img);
      }
    }
    for (int s = hit; parent[s] != -1; s = parent[s]) out.word.push_back(via[s]);
    std::reverse(out.word.begin(), out.word.end());
    out.shortest = true;
    int last = 0;
    while (!(hit >> last & 1)) ++last;
    out.reset_state = m.original[last];
    return out;
  }

  // greedy pair merging
  std::vector<int> set(k);
  for (int i = 0; i < k; ++i) set[i] = i;
  while (set.size() > 1) {
    int start = pair_index(set[0], set[1], k);
    std::vector<int> parent(out.pair_graph_size, -2), via(out.pair_graph_size, -1);
    std::queue<int> q;
    parent[start] = -1;
    q.push(start);
    int hit = -1;
    while (!q.empty() && hit < 0) {
      int p = q.front();
      q.pop();
      auto [i, j] = pairs[p];
      if (i == j) {
        hit = p;
        break;
      }
      for (int z = 0; z < 2; ++z) {
        int r = pair_index(m.delta[i][z], m.delta[j][z], k);
        if (parent[r] != -2) continue;
        parent[r] = p;
        via[r] = z;
        q.push(r);
      }
    }
    Symbols piece;
    for (int p = hit; parent[p] != -1; p = parent[p]) piece.push_back(via[p]);
    std::reverse(piece.begin(), piece.end());
    for (int z : piece) set = image(std::move(set), z);
    out.word.insert(out.word.end(), piece.begin(), piece.end());
  }
  out.reset_state = m.original[set[0]];
  return out;
}

double unsynchronized_fraction(const Transducer& t, int samples, int length, std::uint64_t seed) {
  Automaton m = reachable_part(t);
  const int k = static_cast<int>(m.original.size());
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  int unsynced = 0;
  std::vector<char> cur(k), nxt(k);
  for (int s = 0; s < samples; ++s) {
    std::fill(cur.begin(), cur.end(), 1);
    int alive = k;
    for (int i = 0; i < length && alive > 1; ++i) {
      int z = coin(rng) ? 1 : 0;
      std::fill(nxt.begin(), nxt.end(), 0);
      for (int v = 0; v < k; ++v) {
        if (cur[v]) nxt[m.delta[v][z]] = 1;
      }
      cur.swap(nxt);
      alive = static_cast<int>(std::count(cur.begin(), cur.end(), 1));
    }
    if (alive > 1) ++unsynced;
  }
  return samples == 0 ? 0.0 : static_cast<double>(unsynced) / samples;
}

}  // namespace serret
