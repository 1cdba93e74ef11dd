#include "slices/cross.hpp"

#include <stdexcept>

namespace slices {

RootSet cross_root(const WeylElement& w, int beta) {
  const RootSystem& sys = w.sys();
  if (!sys.is_positive_index(beta))
    throw std::invalid_argument("cross_root: beta must be a positive root");
  RootSet rw = w.inversion_set();
  auto rw_elems = rw.elements();
  // Closure of {beta} under adding roots of R_w; every admissible sum
  // reorders into a summing sequence starting at beta, so the closure
  // captures exactly the sums beta + sum beta_i that are roots.
  RootSet s = sys.empty_set();
  s.add(beta);
  std::vector<int> queue{beta};
  while (!queue.empty()) {
    int g = queue.back();
    queue.pop_back();
    for (int d : rw_elems) {
      int sum = sys.sum_index(g, d);
      if (sum >= 0 && !s.contains(sum)) {
        s.add(sum);
        queue.push_back(sum);
      }
    }
  }
  RootSet out = sys.empty_set();
  for (int g : s.elements()) {
    int img = w.act(g);
    if (sys.is_positive_index(img)) out.add(img);
  }
  return out;
}

RootSet cross_set(const WeylElement& w, const RootSet& n) {
  RootSet out = w.sys().empty_set();
  for (int b : n.elements()) out = out | cross_root(w, b);
  return out;
}

RootSet cross_iter(const WeylElement& w, const RootSet& n, int d) {
  RootSet s = n;
  for (int i = 0; i < d; ++i) s = cross_set(w, s);
  return s;
}

RootSet cross_braid(const PositiveBraid& b, const RootSet& n) {
  // Rightmost factor acts first; the twist (leftmost) acts last.
  RootSet s = n;
  auto factors = b.dgn();
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) s = cross_set(*it, s);
  RootSet out = b.sys().empty_set();
  for (int r : s.elements()) out.add(b.twist().apply_root(r));
  return out;
}

RootSet big_cross_set(const WeylElement& w, const RootSet& n) {
  const RootSystem& sys = w.sys();
  RootSet rw = w.inversion_set();
  if (!rw.subset_of(n)) throw std::invalid_argument("Cross: N must contain R_w");
  if (!n.subset_of(sys.full_positive_set()))
    throw std::invalid_argument("Cross: N must consist of positive roots");
  if (!is_convex(sys, n)) throw std::invalid_argument("Cross: N must be convex");
  RootSet sums = n;
  for (int b : n.elements())
    for (int g : rw.elements()) sums = sums | ray_combinations(sys, b, g);
  RootSet out = sys.empty_set();
  for (int r : sums.elements()) {
    int img = w.act(r);
    if (sys.is_positive_index(img)) out.add(img);
  }
  return out;
}

namespace {

// Iterate step without preconditions (iterates may lose convexity or R_w).
RootSet big_cross_step(const WeylElement& w, const RootSet& n) {
  const RootSystem& sys = w.sys();
  RootSet rw = w.inversion_set();
  RootSet sums = n;
  for (int b : n.elements())
    for (int g : rw.elements()) sums = sums | ray_combinations(sys, b, g);
  RootSet out = sys.empty_set();
  for (int r : sums.elements()) {
    int img = w.act(r);
    if (sys.is_positive_index(img)) out.add(img);
  }
  return out;
}

}  // namespace

RootSet big_cross_iter(const WeylElement& w, const RootSet& n, int d) {
  if (d == 0) return n;
  RootSet s = big_cross_set(w, n);
  for (int i = 1; i < d; ++i) s = big_cross_step(w, s);
  return s;
}

bool is_nimble(const WeylElement& w, const RootSet& n) {
  const RootSystem& sys = w.sys();
  RootSet live = sys.full_positive_set() - w.stable_roots();
  if (!n.subset_of(live)) return false;
  RootSet rw = w.inversion_set();
  if (!rw.subset_of(n)) return false;
  if (!is_convex(sys, n)) return false;
  for (int b : (n - rw).elements())
    if (!n.contains(w.act(b))) return false;
  return true;
}

std::optional<CrossingPair> make_crossing_pair(const WeylElement& w, const RootSet& n,
                                               const RootSet& l, std::string* why) {
  const RootSystem& sys = w.sys();
  std::string failures;
  auto fail = [&](const std::string& reason) {
    if (!failures.empty()) failures += "; ";
    failures += reason;
  };
  if (!is_nimble(w, n)) fail("N is not nimble");
  if (!(l & n).empty()) fail("L meets N");
  if (!is_convex(sys, l)) fail("L is not convex");
  if (w.act(l) != l) fail("L is not w-invariant");
  RootSet neg_l = sys.empty_set();
  for (int r : l.elements()) neg_l.add(sys.negate(r));
  if (neg_l != l) fail("L is not symmetric");
  if (!is_convex(sys, w.inversion_set() | l)) fail("R_w | L is not convex");
  if (!is_convex(sys, n | l)) fail("N | L is not convex");
  if (!failures.empty()) {
    if (why) *why = failures;
    return std::nullopt;
  }
  CrossingPair pair;
  pair.nimble_set = n;
  pair.leavener = l;
  pair.slicing = sys.full_positive_set().subset_of(n | l);
  return pair;
}

bool is_crossing_pair(const WeylElement& w, const RootSet& n, const RootSet& l) {
  return make_crossing_pair(w, n, l).has_value();
}

bool is_slicing(const WeylElement& w, const RootSet& n, const RootSet& l) {
  auto pair = make_crossing_pair(w, n, l);
  return pair && pair->slicing;
}

bool crossing_condition(const WeylElement& w, const RootSet& n) {
  if (!is_nimble(w, n)) throw std::invalid_argument("crossing_condition: N is not nimble");
  int d = n.size() - w.length() + 1;
  if (d < 1) d = 1;
  return cross_iter(w, n, d).empty();
}

std::tuple<bool, bool, bool> main_lemma_ii_check(const WeylElement& w, const WeylElement& wp,
                                                 int d) {
  WeylElement dg = PositiveBraid::reduced(w).pow(d).dg_factor();
  bool geq = weak_leq(wp, dg);
  RootSet it = cross_iter(w, wp.inversion_set(), d);
  bool empty = it.empty();
  bool no_simple = true;
  for (int s = 1; s <= w.sys().rank(); ++s)
    if (it.contains(w.sys().simple_root_index(s))) no_simple = false;
  return {geq, empty, no_simple};
}

bool braid_equation_check(const WeylElement& w) {
  if (!w.is_convex()) return false;
  RootSet live = w.sys().full_positive_set() - w.stable_roots();
  int d = live.size() - w.length() + 1;
  if (d < 1) d = 1;
  return cross_iter(w, live, d).empty();
}

}  // namespace slices
