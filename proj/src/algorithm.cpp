#include "serret/algorithm.hpp"

#include <algorithm>
#include <set>

#include "descent.hpp"
#include "serret/errors.hpp"

namespace serret {

UnimodInterval interval_of(const ProjMatrix& m) {
  ExtRational at_zero(m.b(), m.d()), at_inf(m.a(), m.c());
  if (m.det() > 0) return {at_zero, at_inf};
  return {at_inf, at_zero};
}

const char* to_string(ReturnStatus s) {
  switch (s) {
    case ReturnStatus::Returned: return "returned";
    case ReturnStatus::NeverReturns: return "never-returns";
    case ReturnStatus::BoundExceeded: return "bound-exceeded";
  }
  return "?";
}

namespace {

bool chains(const std::vector<UnimodInterval>& iv) {
  if (!iv.front().left.is_zero() || !iv.back().right.is_infinity()) return false;
  for (std::size_t i = 0; i + 1 < iv.size(); ++i) {
    if (iv[i].right != iv[i + 1].left) return false;
  }
  return true;
}

std::string describe(const std::vector<UnimodInterval>& iv) {
  std::string s;
  for (const auto& x : iv) s += " [" + x.left.to_string() + "," + x.right.to_string() + "]";
  return s;
}

}  // namespace

SlowAlgorithm SlowAlgorithm::from_matrices(std::vector<ProjMatrix> branches) {
  if (branches.size() < 2) {
    throw Error(ErrorKind::TooFewBranches, "a slow algorithm needs at least 2 branches, got " +
                                               std::to_string(branches.size()));
  }
  for (const auto& m : branches) {
    if (!m.is_nonnegative()) throw Error(ErrorKind::NegativeEntries, m.to_string() + " has a negative entry");
  }
  SlowAlgorithm t;
  for (const auto& m : branches) t.intervals_.push_back(interval_of(m));
  if (!chains(t.intervals_)) {
    std::vector<UnimodInterval> sorted = t.intervals_;
    std::sort(sorted.begin(), sorted.end(),
              [](const UnimodInterval& x, const UnimodInterval& y) { return compare(x.left, y.left) < 0; });
    if (chains(sorted)) {
      throw Error(ErrorKind::WrongOrder, "branches must follow their intervals left to right:" +
                                             describe(t.intervals_));
    }
    throw Error(ErrorKind::NotAPartition, "intervals do not tile [0,infinity]:" + describe(t.intervals_));
  }
  t.branches_ = std::move(branches);
  t.trie_.emplace_back();
  for (int a = 0; a < t.size(); ++a) {
    MonoidFactorization f = monoid_factor(t.branches_[a]);
    int node = 0;
    for (Letter x : f.word) {
      if (t.trie_[node].leaf >= 0) throw Error(ErrorKind::NotAPartition, "branch word is a prefix of another");
      int k = x == Letter::L ? 0 : 1;
      if (t.trie_[node].child[k] < 0) {
        t.trie_[node].child[k] = static_cast<int>(t.trie_.size());
        t.trie_.emplace_back();
      }
      node = t.trie_[node].child[k];
    }
    if (t.trie_[node].leaf >= 0 || t.trie_[node].child[0] >= 0 || t.trie_[node].child[1] >= 0) {
      throw Error(ErrorKind::NotAPartition, "branch word is a prefix of another");
    }
    t.trie_[node].leaf = a;
    t.factors_.push_back(std::move(f.word));
    t.flips_.push_back(f.flip);
  }
  for (const auto& node : t.trie_) {
    if (node.leaf < 0 && (node.child[0] < 0 || node.child[1] < 0)) {
      throw Error(ErrorKind::NotAPartition, "a left factor has a single child");
    }
  }
  return t;
}

SlowAlgorithm SlowAlgorithm::from_words(const std::vector<std::string>& words) {
  std::vector<ProjMatrix> ms;
  ms.reserve(words.size());
  for (const auto& w : words) ms.push_back(eval_word(GenWord::parse(w)));
  return from_matrices(std::move(ms));
}

SlowAlgorithm SlowAlgorithm::from_partition(const std::vector<PartitionCell>& cells) {
  std::vector<ProjMatrix> ms;
  for (const auto& c : cells) {
    const auto& l = c.interval.left;
    const auto& r = c.interval.right;
    if (l.p() * r.q() - r.p() * l.q() != -1) {
      throw Error(ErrorKind::BadDeterminant, "interval [" + l.to_string() + "," + r.to_string() + "] is not unimodular");
    }
    if (c.e != 1 && c.e != -1) throw Error(ErrorKind::Parse, "orientation e must be +1 or -1");
    ProjMatrix m(l.p(), r.p(), l.q(), r.q());
    if (c.e == 1) m = m * gen::F();
    ms.push_back(m);
  }
  return from_matrices(std::move(ms));
}

std::vector<PartitionCell> SlowAlgorithm::to_partition() const {
  std::vector<PartitionCell> out;
  for (int a = 0; a < size(); ++a) out.push_back({intervals_[a], flips_[a] ? -1 : 1});
  return out;
}

std::string SlowAlgorithm::branch_word(int a) const {
  return to_string(factors_[a]) + (flips_[a] ? "F" : "");
}

StepResult step(const SlowAlgorithm& t, const Point& x) {
  StepResult out;
  if (const auto* q = std::get_if<QuadIrr>(&x)) {
    if (q->sign() < 0) throw Error(ErrorKind::Domain, "step needs x >= 0, got " + q->to_string());
    detail::Surd s = detail::Surd::from(*q);
    out.symbol = detail::surd_step(t, s);
    out.value = s.to_quad();
    return out;
  }
  const auto& r = std::get<ExtRational>(x);
  if (!r.nonnegative()) throw Error(ErrorKind::Domain, "step needs x >= 0, got " + r.to_string());
  Integer p = r.p(), q = r.q();
  const auto& trie = t.trie();
  int node = 0;
  bool hit_endpoint = false;
  while (trie[node].leaf < 0) {
    if (p < q) {
      q -= p;
      node = trie[node].child[0];
    } else if (p > q) {
      p -= q;
      node = trie[node].child[1];
    } else {
      // shared endpoint: take the left cell, whose image of the point is infinity
      hit_endpoint = true;
      p = 1;
      q = 0;
      node = trie[node].child[0];
    }
  }
  int a = trie[node].leaf;
  if (t.flip(a)) std::swap(p, q);
  out.symbol = a;
  out.value = ExtRational(p, q);
  if (hit_endpoint && t.flip(a) == t.flip(a + 1)) {
    out.ambiguous = true;
    out.alt_symbol = a + 1;
    out.alt_value = t.flip(a + 1) ? ExtRational::infinity() : ExtRational(0);
  }
  return out;
}

UnimodInterval window_interval(const SlowAlgorithm& t, const Window& w) {
  if (w.first < 0 || w.first > w.last || w.last >= t.size()) {
    throw Error(ErrorKind::Domain, "window " + std::to_string(w.first) + ".." + std::to_string(w.last) +
                                       " outside 0.." + std::to_string(t.size() - 1));
  }
  return {t.interval(w.first).left, t.interval(w.last).right};
}

bool in_window(const SlowAlgorithm& t, const Window& w, const Point& x) {
  UnimodInterval e = window_interval(t, w);
  int lo = compare(x, e.left), hi = compare(x, e.right);
  bool left_ok = lo > 0 || (lo == 0 && !w.open_left);
  bool right_ok = hi < 0 || (hi == 0 && !w.open_right);
  return left_ok && right_ok;
}

FirstReturn first_return(const SlowAlgorithm& t, const Window& w, const Point& x, long long max_steps) {
  if (!in_window(t, w, x)) throw Error(ErrorKind::Domain, to_string(x) + " is not in the window");
  FirstReturn out;
  std::set<Point> seen;
  Point cur = x;
  for (long long i = 0; i < max_steps; ++i) {
    StepResult s = step(t, cur);
    out.symbols.push_back(s.symbol);
    out.ambiguous = out.ambiguous || s.ambiguous;
    out.time = i + 1;
    out.value = s.value;
    if (in_window(t, w, s.value)) {
      out.status = ReturnStatus::Returned;
      return out;
    }
    if (!seen.insert(s.value).second) {
      out.status = ReturnStatus::NeverReturns;
      return out;
    }
    cur = std::move(s.value);
  }
  out.status = ReturnStatus::BoundExceeded;
  return out;
}

std::vector<ProjMatrix> accel_branches(const SlowAlgorithm& t, const Window& w, int depth) {
  window_interval(t, w);
  std::vector<ProjMatrix> outside;
  for (int b = 0; b < t.size(); ++b) {
    if (b < w.first || b > w.last) outside.push_back(t.branch(b));
  }
  std::set<ProjMatrix> all;
  std::vector<ProjMatrix> level;
  for (int a = w.first; a <= w.last; ++a) level.push_back(t.branch(a));
  all.insert(level.begin(), level.end());
  for (int k = 0; k < depth && !outside.empty(); ++k) {
    std::vector<ProjMatrix> next;
    for (const auto& m : level) {
      for (const auto& b : outside) {
        ProjMatrix mb = m * b;
        if (all.insert(mb).second) next.push_back(mb);
      }
    }
    level = std::move(next);
  }
  std::vector<ProjMatrix> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), [](const ProjMatrix& x, const ProjMatrix& y) {
    UnimodInterval ix = interval_of(x), iy = interval_of(y);
    int c = compare(ix.left, iy.left);
    if (c != 0) return c < 0;
    c = compare(ix.right, iy.right);
    if (c != 0) return c > 0;
    return x < y;
  });
  return out;
}

}  // namespace serret
