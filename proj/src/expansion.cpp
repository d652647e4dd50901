#include "serret/expansion.hpp"

#include <climits>
#include <map>
#include <set>

#include "descent.hpp"
#include "serret/errors.hpp"

namespace serret {

const char* to_string(OrbitStatus s) {
  switch (s) {
    case OrbitStatus::Periodic: return "periodic";
    case OrbitStatus::ReachedZeroInfty: return "reached-zero-infinity";
    case OrbitStatus::Ambiguous: return "ambiguous";
  }
  return "?";
}

const char* to_string(SigmaVerdict v) {
  switch (v) {
    case SigmaVerdict::Equivalent: return "equivalent";
    case SigmaVerdict::NotPiEquivalent: return "not-pi-equivalent";
    case SigmaVerdict::NotSigmaEquivalent: return "not-sigma-equivalent";
  }
  return "?";
}

namespace {

UPWord split_at_repeat(Symbols syms, std::size_t start) {
  Symbols prefix(syms.begin(), syms.begin() + static_cast<std::ptrdiff_t>(start));
  Symbols period(syms.begin() + static_cast<std::ptrdiff_t>(start), syms.end());
  return {std::move(prefix), std::move(period)};
}

// Iterates `advance` on a surd until (P, Q) repeats.
template <class Advance>
UPWord periodic_orbit(detail::Surd s, long long max_steps, Advance advance) {
  std::map<std::pair<Integer, Integer>, std::size_t> seen;
  Symbols syms;
  for (long long i = 0; i <= max_steps; ++i) {
    auto [it, fresh] = seen.emplace(s.key(), syms.size());
    if (!fresh) return split_at_repeat(std::move(syms), it->second);
    syms.push_back(advance(s));
  }
  throw Error(ErrorKind::BoundExceeded, "no period within " + std::to_string(max_steps) + " steps");
}

}  // namespace

OrbitResult orbit(const SlowAlgorithm& t, const Point& x, long long max_steps) {
  OrbitResult out;
  if (const auto* q = std::get_if<QuadIrr>(&x)) {
    out.periodic = orbit_word(t, *q, max_steps);
    return out;
  }
  ExtRational cur = std::get<ExtRational>(x);
  if (!cur.nonnegative()) throw Error(ErrorKind::Domain, "orbit needs x >= 0, got " + cur.to_string());
  out.status = OrbitStatus::ReachedZeroInfty;
  for (long long i = 0; !cur.is_zero() && !cur.is_infinity(); ++i) {
    if (i >= max_steps) throw Error(ErrorKind::BoundExceeded, "rational orbit longer than " + std::to_string(max_steps));
    StepResult s = step(t, cur);
    if (s.ambiguous) {
      out.status = OrbitStatus::Ambiguous;
      out.ambiguous_at = i;
      Symbols alt = out.finite;
      alt.push_back(*s.alt_symbol);
      out.alternative = std::move(alt);
    }
    out.finite.push_back(s.symbol);
    cur = std::get<ExtRational>(s.value);
  }
  return out;
}

UPWord orbit_word(const SlowAlgorithm& t, const QuadIrr& x, long long max_steps) {
  if (x.sign() < 0) throw Error(ErrorKind::Domain, "orbit needs x >= 0, got " + x.to_string());
  return periodic_orbit(detail::Surd::from(x), max_steps, [&](detail::Surd& s) { return detail::surd_step(t, s); });
}

UPWord ln_expansion(const QuadIrr& x) {
  if (x.sign() < 0) throw Error(ErrorKind::Domain, "the LN coding needs x > 0, got " + x.to_string());
  return periodic_orbit(detail::Surd::from(x), LLONG_MAX - 1, [](detail::Surd& s) {
    if (s.cmp_one() < 0) {
      s.apply_l_inverse();
      return 0;
    }
    s.sub_one();
    return 1;
  });
}

Point positive_fixed_point(const ProjMatrix& m) {
  if (!m.is_nonnegative() || m.is_identity()) {
    throw Error(ErrorKind::Domain, m.to_string() + " has no attracting fixed point on [0,infinity]");
  }
  const Integer &a = m.a(), &b = m.b(), &c = m.c(), &d = m.d();
  if (c == 0) return ExtRational::infinity();
  if (b == 0) return ExtRational(0);
  // c x^2 + (d - a) x - b = 0 has exactly one positive root
  Integer disc = (a - d) * (a - d) + 4 * b * c;
  if (is_square(disc)) return ExtRational(a - d + isqrt(disc), 2 * c);
  return QuadIrr::from_radicand(a - d, 1, 2 * c, disc);
}

Point pi_value(const UPWord& z) {
  ProjMatrix head = eval_monoid(to_monoid_word(z.prefix()));
  ProjMatrix loop = eval_monoid(to_monoid_word(z.period()));
  return mobius_apply(head, positive_fixed_point(loop));
}

namespace {

ProjMatrix quotient_matrix(const Integer& a) { return {a, 1, 1, 0}; }

int to_int(const Integer& a) {
  if (a > INT_MAX) throw Error(ErrorKind::Domain, "partial quotient " + a.str() + " exceeds int range");
  return static_cast<int>(a);
}

}  // namespace

RegularCF regular_cf(const QuadIrr& x) {
  if (x.sign() < 0) throw Error(ErrorKind::Domain, "regular continued fraction needs x > 0");
  detail::Surd s = detail::Surd::from(x);
  std::map<std::pair<Integer, Integer>, std::size_t> seen;
  std::vector<std::pair<Integer, Integer>> keys;
  Symbols quotients;
  for (;;) {
    auto [it, fresh] = seen.emplace(s.key(), quotients.size());
    if (!fresh) {
      std::size_t start = it->second;
      ProjMatrix head;
      for (std::size_t j = 0; j < start; ++j) head = head * quotient_matrix(quotients[j]);
      detail::Surd xi = s;
      xi.P = keys[start].first;
      xi.Q = keys[start].second;
      return {split_at_repeat(std::move(quotients), start), head, xi.to_quad()};
    }
    keys.push_back(s.key());
    Integer a = s.floor();
    quotients.push_back(to_int(a));
    s.P -= a * s.Q;
    s.invert();
  }
}

SigmaResult sigma_equivalent(const SchreierGraph& g, const QuadIrr& x, const QuadIrr& y) {
  SigmaResult out;
  if (x.D() != y.D()) return out;
  RegularCF cx = regular_cf(x), cy = regular_cf(y);
  const Symbols& px = cx.quotients.period();
  const Symbols& py = cy.quotients.period();
  if (!conjugacy_of_periodic(px, py)) return out;
  // rotate y's period onto x's; the complete quotients then coincide
  std::size_t n = py.size(), r = 0;
  for (; r < n; ++r) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) match = py[(r + i) % n] == px[i];
    if (match) break;
  }
  ProjMatrix my = cy.head;
  for (std::size_t j = 0; j < r; ++j) my = my * quotient_matrix(py[j]);
  ProjMatrix m0 = my * cx.head.inverse();
  ProjMatrix loop;
  for (int c : px) loop = loop * quotient_matrix(c);
  ProjMatrix gen_stab = cx.head * loop * cx.head.inverse();

  std::optional<std::pair<Integer, long long>> best;
  for (long long k = -16; k <= 16; ++k) {
    ProjMatrix m = m0 * gen_stab.power(k);
    if (!contains(g, m)) continue;
    std::pair<Integer, long long> rank{m.height(), k < 0 ? -2 * k : 2 * k + 1};
    if (!best || rank < *best) {
      best = rank;
      out.matrix = m;
    }
  }
  out.verdict = out.matrix ? SigmaVerdict::Equivalent : SigmaVerdict::NotSigmaEquivalent;
  return out;
}

CensusResult census(const SlowAlgorithm& t, const QuadIrr& x, int radius) {
  std::vector<ProjMatrix> gens;
  for (const auto& a : t.branches()) {
    gens.push_back(a);
    gens.push_back(a.inverse());
  }
  std::set<ProjMatrix> ball{ProjMatrix()};
  std::vector<ProjMatrix> frontier{ProjMatrix()};
  for (int k = 0; k < radius; ++k) {
    std::vector<ProjMatrix> next;
    for (const auto& m : frontier) {
      for (const auto& g : gens) {
        ProjMatrix mg = m * g;
        if (ball.insert(mg).second) next.push_back(std::move(mg));
      }
    }
    frontier = std::move(next);
  }
  std::set<QuadIrr> points;
  for (const auto& m : ball) {
    QuadIrr v = mobius_apply(m, x);
    if (v.sign() > 0) points.insert(std::move(v));
  }

  CensusResult out;
  out.ball_size = ball.size();
  out.points = points.size();
  std::map<Symbols, int> class_of_period;
  std::map<QuadIrr, int> memo;  // every value already walked -> class
  for (const auto& p : points) {
    if (memo.count(p)) continue;
    detail::Surd s = detail::Surd::from(p);
    std::map<QuadIrr, std::size_t> local;
    std::vector<QuadIrr> path;
    Symbols syms;
    int cls = -1;
    for (;;) {
      QuadIrr v = s.to_quad();
      if (auto it = memo.find(v); it != memo.end()) {
        cls = it->second;
        break;
      }
      if (auto it = local.find(v); it != local.end()) {
        Symbols period(syms.begin() + static_cast<std::ptrdiff_t>(it->second), syms.end());
        Symbols key = least_rotation(primitive_root(period));
        auto [pos, fresh] = class_of_period.emplace(key, static_cast<int>(out.classes.size()));
        if (fresh) out.classes.push_back(key);
        cls = pos->second;
        break;
      }
      local.emplace(v, path.size());
      path.push_back(std::move(v));
      syms.push_back(detail::surd_step(t, s));
    }
    for (auto& v : path) memo.emplace(std::move(v), cls);
  }
  return out;
}

}  // namespace serret
