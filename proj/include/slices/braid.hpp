#pragma once

#include <vector>

#include "slices/weyl.hpp"

namespace slices {

// Element of the positive braid monoid over a twisted Weyl group: a twist
// (moved leftmost) and a sequence of nonidentity untwisted factors in right
// Deligne-Garside normal form. factors_[0] is the rightmost factor.
class PositiveBraid {
 public:
  static PositiveBraid identity(std::shared_ptr<const RootSystem> sys);
  // The reduced braid b_w; the twist of w moves into the braid's twist.
  static PositiveBraid reduced(const WeylElement& w);
  // Renormalizes an arbitrary factor sequence (given leftmost first).
  static PositiveBraid from_factors(std::shared_ptr<const RootSystem> sys, const Twist& twist,
                                    std::vector<WeylElement> leftmost_first);

  const RootSystem& sys() const { return *sys_; }
  const Twist& twist() const { return twist_; }
  bool empty() const { return factors_.empty(); }
  int factor_count() const { return int(factors_.size()); }
  int total_length() const;

  PositiveBraid operator*(const PositiveBraid& o) const;
  PositiveBraid pow(int d) const;
  bool operator==(const PositiveBraid& o) const;

  // Rightmost normal-form factor; identity for the empty braid.
  WeylElement dg_factor() const;
  // The braid with the rightmost factor removed. Throws on empty braids.
  PositiveBraid dg_complement() const;
  // Normal-form factors, leftmost first.
  std::vector<WeylElement> dgn() const;

  std::string render() const;  // "[1 2 3 1 2][1 2]"

 private:
  PositiveBraid(std::shared_ptr<const RootSystem> sys, Twist twist)
      : sys_(std::move(sys)), twist_(std::move(twist)) {}
  void normalize();

  std::shared_ptr<const RootSystem> sys_;
  Twist twist_;
  std::vector<WeylElement> factors_;  // right-to-left
};

// DG(b_w^d) for the stabilization bound d = |R_+ \ R_st^w| - l(w) + 1.
WeylElement dg_stabilized(const WeylElement& w);

}  // namespace slices
