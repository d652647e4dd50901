#include <algorithm>
#include <functional>
#include <random>

#include "serret/errors.hpp"
#include "serret/expansion.hpp"
#include "serret/transducer.hpp"

namespace serret {

const char* to_string(SerretKind k) {
  switch (k) {
    case SerretKind::Holds: return "holds";
    case SerretKind::Fails: return "fails";
    case SerretKind::Undecided: return "undecided";
  }
  return "?";
}

namespace {

constexpr long long kNodeBudget = 200000;

// Tarjan; returns the component id of each state.
std::vector<int> components(const Transducer& t) {
  const int n = t.size();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<char> on_stack(n, 0);
  int counter = 0, ncomp = 0;
  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (int a = 0; a < t.alphabet; ++a) {
      const auto& e = t.edge(v, a);
      if (!e) continue;
      int w = e->to;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp[w] = ncomp;
      } while (w != v);
      ++ncomp;
    }
  };
  for (int v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }
  return comp;
}

ProjMatrix branch_product(const SlowAlgorithm& t, const Symbols& u) {
  ProjMatrix m;
  for (int a : u) m = m * t.branch(a);
  return m;
}

// Builds and re-checks the counterexample carried by a closed walk.
std::optional<SerretWitness> witness_from_cycle(const SlowAlgorithm& t, const SchreierGraph& s,
                                                const AlgGraph& g, int vertex, const Symbols& u,
                                                const Symbols& w) {
  ProjMatrix au = branch_product(t, u);
  Point alpha = positive_fixed_point(au);
  if (is_rational(alpha)) return std::nullopt;
  SerretWitness out;
  out.cycle_input = u;
  out.cycle_output = w;
  out.state = g.vertices[vertex].name;
  out.state_matrix = g.matrix(vertex);
  out.alpha = alpha;
  out.beta = mobius_apply(out.state_matrix, alpha);
  out.orbit_alpha = orbit_word(t, std::get<QuadIrr>(out.alpha));
  out.orbit_beta = orbit_word(t, std::get<QuadIrr>(out.beta));
  out.verified = !tail_equivalent(out.orbit_alpha, out.orbit_beta) && contains(s, out.state_matrix) &&
                 tail_equivalent(out.orbit_alpha, UPWord({}, u)) && tail_equivalent(out.orbit_beta, UPWord({}, w));
  return out;
}

}  // namespace

SerretVerdict serret_check(const SlowAlgorithm& t, long long bound, std::uint64_t seed) {
  AlgGraph g = build_graph(t);
  Quotient q = schreier_quotient(g);
  CommutatorTransducers ft = build_ft(t, g, q.fibration);
  const Transducer& fs = ft.pruned;
  const int k = fs.size();
  SerretVerdict out;
  if (bound <= 0) bound = 4LL * k;
  if (bound < k) throw Error(ErrorKind::Domain, "cycle bound below the number of states");
  out.bound = bound;

  if (k == 0) {
    out.kind = SerretKind::Holds;
    out.certificate = "trivial";
    return out;
  }
  std::vector<int> comp = components(fs);
  std::vector<int> comp_size(k, 0);
  for (int v = 0; v < k; ++v) ++comp_size[comp[v]];
  auto cyclic = [&](int v) {
    if (comp_size[comp[v]] > 1) return true;
    for (int a = 0; a < fs.alphabet; ++a) {
      if (fs.edge(v, a) && fs.edge(v, a)->to == v) return true;
    }
    return false;
  };
  bool any_cycle = false, all_copy = true;
  for (int v = 0; v < k; ++v) {
    if (!cyclic(v)) continue;
    any_cycle = true;
    for (int a = 0; a < fs.alphabet; ++a) {
      const auto& e = fs.edge(v, a);
      if (e && comp[e->to] == comp[v] && e->out != Symbols{a}) all_copy = false;
    }
  }
  if (!any_cycle) {
    out.kind = SerretKind::Holds;
    out.certificate = "acyclic";
    return out;
  }
  if (all_copy) {
    // a run that never stops ends inside one component, where it copies
    out.kind = SerretKind::Holds;
    out.certificate = "copy";
    return out;
  }

  // closed walks by increasing length, each counted from its least state
  long long nodes = 0;
  Symbols u, w;
  std::vector<std::size_t> out_len;
  std::optional<SerretWitness> found;
  std::function<bool(int, int, long long)> dfs = [&](int start, int v, long long left) -> bool {
    if (++nodes > kNodeBudget) return true;
    for (int a = 0; a < fs.alphabet; ++a) {
      const auto& e = fs.edge(v, a);
      if (!e || e->to < start || comp[e->to] != comp[start]) continue;
      u.push_back(a);
      w.insert(w.end(), e->out.begin(), e->out.end());
      out_len.push_back(e->out.size());
      bool stop = false;
      if (left == 1) {
        if (e->to == start && !w.empty() && !conjugacy_of_periodic(u, w)) {
          found = witness_from_cycle(t, q.schreier, g, ft.pruned_vertex[start], u, w);
          // only independently confirmed witnesses count
          stop = found && found->verified;
          if (!stop) found.reset();
        }
      } else {
        stop = dfs(start, e->to, left - 1);
      }
      w.resize(w.size() - out_len.back());
      out_len.pop_back();
      u.pop_back();
      if (stop) return true;
    }
    return false;
  };
  for (long long len = 1; len <= bound && !found && nodes <= kNodeBudget; ++len) {
    for (int s = 0; s < k && !found && nodes <= kNodeBudget; ++s) {
      if (cyclic(s)) dfs(s, s, len);
    }
  }
  if (found) {
    out.kind = SerretKind::Fails;
    out.witness = std::move(found);
    return out;
  }

  // no verdict: report how often random runs survive
  SamplingReport rep;
  rep.samples = 1000;
  rep.length = 64;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> sym(0, t.size() - 1), st(0, k - 1);
  for (int i = 0; i < rep.samples; ++i) {
    int v = st(rng);
    bool alive = true;
    for (int j = 0; j < rep.length && alive; ++j) {
      const auto& e = fs.edge(v, sym(rng));
      if (!e) {
        alive = false;
      } else {
        v = e->to;
      }
    }
    rep.still_running += alive ? 1 : 0;
  }
  out.kind = SerretKind::Undecided;
  out.sampling = rep;
  return out;
}

}  // namespace serret
