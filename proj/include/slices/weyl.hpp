#pragma once

#include <string>
#include <vector>

#include "slices/matrix.hpp"
#include "slices/root_system.hpp"

namespace slices {

// Diagram automorphism: a permutation of simple-root indices preserving the
// Cartan matrix.
class Twist {
 public:
  // Identity twist.
  explicit Twist(const RootSystem& sys);
  // img[i] is the (0-based) image of simple index i; validated.
  Twist(const RootSystem& sys, std::vector<int> img);
  // The order-two flip for A_n; throws for other types.
  static Twist flip(const RootSystem& sys);

  bool is_identity() const;
  int image(int i) const { return img_[i]; }
  int apply_root(int index) const { return root_perm_[index]; }
  Twist inverse(const RootSystem& sys) const;
  Twist compose(const RootSystem& sys, const Twist& then_outer) const;
  bool operator==(const Twist& o) const { return img_ == o.img_; }

 private:
  std::vector<int> img_;
  std::vector<int> root_perm_;
};

// An element of the twisted Weyl group, stored as a signed permutation of the
// root index space plus the twist; the reduced word of the untwisted part is
// cached (recomputed canonically on construction).
class WeylElement {
 public:
  static WeylElement identity(std::shared_ptr<const RootSystem> sys);
  // Word letters are 1-based simple indices; out-of-range letters throw.
  static WeylElement from_word(std::shared_ptr<const RootSystem> sys,
                               const std::vector<int>& word);
  static WeylElement from_word(std::shared_ptr<const RootSystem> sys, const Twist& twist,
                               const std::vector<int>& word);
  static WeylElement simple(std::shared_ptr<const RootSystem> sys, int s);
  static WeylElement longest(std::shared_ptr<const RootSystem> sys);

  const RootSystem& sys() const { return *sys_; }
  std::shared_ptr<const RootSystem> sys_ptr() const { return sys_; }
  const Twist& twist() const { return twist_; }
  const std::vector<int>& word() const { return word_; }
  int length() const { return int(word_.size()); }
  bool is_identity() const { return word_.empty() && twist_.is_identity(); }

  int act(int root_index) const { return perm_[root_index]; }
  RootSet act(const RootSet& s) const;

  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;
  bool operator==(const WeylElement& o) const {
    return perm_ == o.perm_ && twist_ == o.twist_;
  }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }

  // Untwisted part (twist stripped off the left).
  WeylElement untwisted() const;
  WeylElement conjugate_by_twist(const Twist& delta) const;  // delta^-1 * w * delta

  // {beta in R_+ : w(beta) in R_-}; its size equals length().
  RootSet inversion_set() const;
  // Right descent: l(w s_i) < l(w). Left descent: l(s_i w) < l(w). 1-based.
  bool right_descent(int s) const;
  bool left_descent(int s) const;

  // {beta : w(beta) = beta}, over the full index space.
  RootSet fixed_roots() const;
  // Working definition of the stable roots: the w-orbit of beta keeps the
  // sign of beta.
  RootSet stable_roots() const;

  // det(1 - w) != 0 on the reflection representation.
  bool is_elliptic() const;
  // R_+ \ stable_roots(w) is a convex set of roots.
  bool is_convex() const;
  // Working predicate: R_+ \ fixed_roots(w) convex and the fixed roots form
  // a standard parabolic subsystem. Used only by optional checks.
  bool is_firmly_convex() const;

  // Action matrix on the simple-root basis (columns are images of simples).
  QMat reflection_matrix() const;

  std::string word_string() const;  // "1 2 3 1 2"

 private:
  WeylElement(std::shared_ptr<const RootSystem> sys, Twist twist, std::vector<int> perm);

  std::shared_ptr<const RootSystem> sys_;
  Twist twist_;
  std::vector<int> perm_;
  std::vector<int> word_;
};

// Weak left Bruhat-Chevalley order: R_y subseteq R_w.
bool weak_leq(const WeylElement& y, const WeylElement& w);

// All elements of the (untwisted) Weyl group; guarded by |W| <= cap.
std::vector<WeylElement> enumerate_weyl(std::shared_ptr<const RootSystem> sys,
                                        size_t cap = 1152);

std::vector<int> parse_word(const std::string& text);

}  // namespace slices
