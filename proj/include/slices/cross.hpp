#pragma once

#include <optional>
#include <string>
#include <tuple>

#include "slices/braid.hpp"

namespace slices {

// cross_w(beta) = { w(beta + sum of roots from R_w) in R } with all partial
// closure sums roots, intersected with R_+. beta must be positive.
RootSet cross_root(const WeylElement& w, int beta);

// Union of cross_root over the members of n (n a set of positive roots).
RootSet cross_set(const WeylElement& w, const RootSet& n);
// d-th iterate; d = 0 is the identity.
RootSet cross_iter(const WeylElement& w, const RootSet& n, int d);

// Composition of cross over the braid's normal-form factors (and twist).
RootSet cross_braid(const PositiveBraid& b, const RootSet& n);

// Cross_w(N) = w(N u (N + R_w)) n R_+ with N + R_w taken via strictly
// positive ray combinations. Requires N convex with R_w subseteq N.
RootSet big_cross_set(const WeylElement& w, const RootSet& n);
// d-th iterate, applied to the output set directly (no rechecking).
RootSet big_cross_iter(const WeylElement& w, const RootSet& n, int d);

// N subseteq R_+ \ R_st^w, convex, containing R_w, with w(N \ R_w) inside N.
bool is_nimble(const WeylElement& w, const RootSet& n);

struct CrossingPair {
  RootSet nimble_set;
  RootSet leavener;
  bool slicing = false;
};

// Verifies all crossing-pair conditions; on failure returns the name of the
// first failed condition instead.
std::optional<CrossingPair> make_crossing_pair(const WeylElement& w, const RootSet& n,
                                               const RootSet& l, std::string* why = nullptr);
bool is_crossing_pair(const WeylElement& w, const RootSet& n, const RootSet& l);
bool is_slicing(const WeylElement& w, const RootSet& n, const RootSet& l);

// cross_w^d(N) = {} for d = |N| - l(w) + 1; requires N nimble.
bool crossing_condition(const WeylElement& w, const RootSet& n);

// (DG(b_w^d) >= w', cross_w^d(R_w') empty, no simple roots in that set).
// The main equivalence asserts all three agree.
std::tuple<bool, bool, bool> main_lemma_ii_check(const WeylElement& w, const WeylElement& wp,
                                                 int d);

// w convex and cross_w^d(R_+ \ R_st^w) = {} at the stabilization bound.
bool braid_equation_check(const WeylElement& w);

}  // namespace slices
