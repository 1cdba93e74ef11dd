#include "slices/braid.hpp"

#include <stdexcept>

namespace slices {

PositiveBraid PositiveBraid::identity(std::shared_ptr<const RootSystem> sys) {
  return PositiveBraid(sys, Twist(*sys));
}

PositiveBraid PositiveBraid::reduced(const WeylElement& w) {
  PositiveBraid b(w.sys_ptr(), w.twist());
  WeylElement x = w.untwisted();
  if (!x.is_identity()) b.factors_.push_back(x);
  return b;
}

PositiveBraid PositiveBraid::from_factors(std::shared_ptr<const RootSystem> sys,
                                          const Twist& twist,
                                          std::vector<WeylElement> leftmost_first) {
  PositiveBraid b(sys, twist);
  for (auto it = leftmost_first.rbegin(); it != leftmost_first.rend(); ++it)
    if (!it->is_identity()) b.factors_.push_back(it->untwisted());
  b.normalize();
  return b;
}

int PositiveBraid::total_length() const {
  int n = 0;
  for (const auto& f : factors_) n += f.length();
  return n;
}

// Right normal form: adjacent (left, right) must satisfy: every simple s with
// l(left*s) < l(left) also has l(s*right) < l(right). Local repair moves such
// an s across: (left, right) <- (left*s, s*right); sweeps run until fixpoint.
void PositiveBraid::normalize() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t j = 0; j + 1 < factors_.size(); ++j) {
      WeylElement& right = factors_[j];
      WeylElement& left = factors_[j + 1];
      bool moved = true;
      while (moved) {
        moved = false;
        for (int s = 1; s <= sys_->rank(); ++s) {
          if (left.right_descent(s) && !right.left_descent(s)) {
            WeylElement ss = WeylElement::simple(sys_, s);
            left = left * ss;
            right = ss * right;
            moved = true;
            changed = true;
          }
        }
      }
    }
    // Drop factors that emptied out.
    std::vector<WeylElement> keep;
    for (auto& f : factors_)
      if (!f.is_identity()) keep.push_back(f);
    if (keep.size() != factors_.size()) changed = true;
    factors_ = std::move(keep);
  }
}

PositiveBraid PositiveBraid::operator*(const PositiveBraid& o) const {
  if (sys_.get() != o.sys_.get()) throw std::invalid_argument("braid_mul: different systems");
  // delta1 x . delta2 y = delta1 delta2 . (delta2^-1 x delta2) y
  PositiveBraid b(sys_, o.twist_.compose(*sys_, twist_));
  b.factors_ = o.factors_;
  for (const auto& f : factors_) b.factors_.push_back(f.conjugate_by_twist(o.twist_));
  b.normalize();
  return b;
}

PositiveBraid PositiveBraid::pow(int d) const {
  PositiveBraid r = identity(sys_);
  for (int i = 0; i < d; ++i) r = r * *this;
  return r;
}

bool PositiveBraid::operator==(const PositiveBraid& o) const {
  return twist_ == o.twist_ && factors_ == o.factors_;
}

WeylElement PositiveBraid::dg_factor() const {
  if (factors_.empty()) return WeylElement::identity(sys_);
  return factors_.front();
}

PositiveBraid PositiveBraid::dg_complement() const {
  if (factors_.empty()) throw std::invalid_argument("dg_complement: empty braid");
  PositiveBraid b(sys_, twist_);
  b.factors_.assign(factors_.begin() + 1, factors_.end());
  return b;
}

std::vector<WeylElement> PositiveBraid::dgn() const {
  return std::vector<WeylElement>(factors_.rbegin(), factors_.rend());
}

std::string PositiveBraid::render() const {
  std::string out;
  if (!twist_.is_identity()) out += "(twist)";
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
    out += "[" + it->word_string() + "]";
  if (out.empty()) out = "[]";
  return out;
}

WeylElement dg_stabilized(const WeylElement& w) {
  RootSet live = w.sys().full_positive_set() - w.stable_roots();
  int d = live.size() - w.length() + 1;
  if (d < 1) d = 1;
  return PositiveBraid::reduced(w).pow(d).dg_factor();
}

}  // namespace slices
