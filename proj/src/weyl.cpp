#include "slices/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace slices {

Twist::Twist(const RootSystem& sys) {
  img_.resize(sys.rank());
  std::iota(img_.begin(), img_.end(), 0);
  root_perm_.resize(sys.universe());
  std::iota(root_perm_.begin(), root_perm_.end(), 0);
}

Twist::Twist(const RootSystem& sys, std::vector<int> img) : img_(std::move(img)) {
  int n = sys.rank();
  if (int(img_.size()) != n) throw std::invalid_argument("twist: wrong size");
  std::vector<bool> seen(n, false);
  for (int v : img_) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("twist: not a permutation");
    seen[v] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sys.cartan(img_[i], img_[j]) != sys.cartan(i, j))
        throw std::invalid_argument("twist: does not preserve the Cartan matrix");
  root_perm_.resize(sys.universe());
  for (int r = 0; r < sys.universe(); ++r) {
    std::vector<int> c(n, 0);
    for (int i = 0; i < n; ++i) c[img_[i]] = sys.root(r).coeffs[i];
    root_perm_[r] = sys.index_of(c);
  }
}

Twist Twist::flip(const RootSystem& sys) {
  if (sys.type() != 'A') throw std::invalid_argument("flip twist: only A_n supported");
  int n = sys.rank();
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = n - 1 - i;
  return Twist(sys, img);
}

bool Twist::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != int(i)) return false;
  return true;
}

Twist Twist::inverse(const RootSystem& sys) const {
  std::vector<int> inv(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = int(i);
  return Twist(sys, inv);
}

Twist Twist::compose(const RootSystem& sys, const Twist& outer) const {
  // (outer o this)(i) = outer.img[this->img[i]]
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[i] = outer.img_[img_[i]];
  return Twist(sys, img);
}

WeylElement::WeylElement(std::shared_ptr<const RootSystem> sys, Twist twist,
                         std::vector<int> perm)
    : sys_(std::move(sys)), twist_(std::move(twist)), perm_(std::move(perm)) {
  // Recompute the reduced word of the untwisted part by stripping right
  // descents.
  std::vector<int> q(perm_.size());
  Twist tinv = twist_.inverse(*sys_);
  for (size_t r = 0; r < perm_.size(); ++r) q[r] = tinv.apply_root(perm_[r]);
  std::vector<int> picks;
  for (;;) {
    int desc = -1;
    for (int s = 1; s <= sys_->rank(); ++s) {
      int a = sys_->simple_root_index(s);
      if (!sys_->is_positive_index(q[a])) {
        desc = s;
        break;
      }
    }
    if (desc < 0) break;
    std::vector<int> nq(q.size());
    for (size_t r = 0; r < q.size(); ++r) nq[r] = q[sys_->reflect_simple(desc, int(r))];
    q = std::move(nq);
    picks.push_back(desc);
  }
  word_.assign(picks.rbegin(), picks.rend());
}

WeylElement WeylElement::identity(std::shared_ptr<const RootSystem> sys) {
  Twist t(*sys);
  std::vector<int> perm(sys->universe());
  std::iota(perm.begin(), perm.end(), 0);
  return WeylElement(sys, t, perm);
}

WeylElement WeylElement::from_word(std::shared_ptr<const RootSystem> sys,
                                   const std::vector<int>& word) {
  return from_word(sys, Twist(*sys), word);
}

WeylElement WeylElement::from_word(std::shared_ptr<const RootSystem> sys, const Twist& twist,
                                   const std::vector<int>& word) {
  for (int s : word)
    if (s < 1 || s > sys->rank())
      throw std::invalid_argument("word letter out of range: " + std::to_string(s));
  // w(beta) = twist(s_{i1}(...(s_{ik}(beta)))) for word = (i1, ..., ik); the
  // rightmost letter acts first.
  std::vector<int> perm(sys->universe());
  std::iota(perm.begin(), perm.end(), 0);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::vector<int> np(perm.size());
    for (size_t r = 0; r < perm.size(); ++r) np[r] = sys->reflect_simple(*it, perm[r]);
    perm = std::move(np);
  }
  std::vector<int> tp(perm.size());
  for (size_t r = 0; r < perm.size(); ++r) tp[r] = twist.apply_root(perm[r]);
  return WeylElement(sys, twist, tp);
}

WeylElement WeylElement::simple(std::shared_ptr<const RootSystem> sys, int s) {
  return from_word(sys, {s});
}

WeylElement WeylElement::longest(std::shared_ptr<const RootSystem> sys) {
  // Greedily append descents until every simple root is inverted.
  WeylElement w = identity(sys);
  for (;;) {
    int pick = -1;
    for (int s = 1; s <= sys->rank(); ++s) {
      int a = sys->simple_root_index(s);
      if (sys->is_positive_index(w.act(a))) {
        pick = s;
        break;
      }
    }
    if (pick < 0) return w;
    w = w * simple(sys, pick);
  }
}

RootSet WeylElement::act(const RootSet& s) const {
  RootSet out = sys_->empty_set();
  for (int i : s.elements()) out.add(perm_[i]);
  return out;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  if (sys_.get() != o.sys_.get())
    throw std::invalid_argument("mixing elements of different systems");
  std::vector<int> perm(perm_.size());
  for (size_t r = 0; r < perm_.size(); ++r) perm[r] = perm_[o.perm_[r]];
  return WeylElement(sys_, o.twist_.compose(*sys_, twist_), perm);
}

WeylElement WeylElement::inverse() const {
  std::vector<int> inv(perm_.size());
  for (size_t r = 0; r < perm_.size(); ++r) inv[perm_[r]] = int(r);
  return WeylElement(sys_, twist_.inverse(*sys_), inv);
}

WeylElement WeylElement::untwisted() const {
  Twist tinv = twist_.inverse(*sys_);
  std::vector<int> q(perm_.size());
  for (size_t r = 0; r < perm_.size(); ++r) q[r] = tinv.apply_root(perm_[r]);
  return WeylElement(sys_, Twist(*sys_), q);
}

WeylElement WeylElement::conjugate_by_twist(const Twist& delta) const {
  Twist dinv = delta.inverse(*sys_);
  std::vector<int> q(perm_.size());
  for (size_t r = 0; r < perm_.size(); ++r)
    q[r] = dinv.apply_root(perm_[delta.apply_root(int(r))]);
  return WeylElement(sys_, delta.compose(*sys_, twist_).compose(*sys_, dinv), q);
}

RootSet WeylElement::inversion_set() const {
  RootSet s = sys_->empty_set();
  for (int i = 0; i < sys_->positive_count(); ++i)
    if (!sys_->is_positive_index(perm_[i])) s.add(i);
  return s;
}

bool WeylElement::right_descent(int s) const {
  return !sys_->is_positive_index(perm_[sys_->simple_root_index(s)]);
}

bool WeylElement::left_descent(int s) const {
  // l(s_i w) < l(w) iff w^-1(alpha_i) < 0.
  int a = sys_->simple_root_index(s);
  for (size_t r = 0; r < perm_.size(); ++r)
    if (perm_[r] == a) return !sys_->is_positive_index(int(r));
  return false;
}

RootSet WeylElement::fixed_roots() const {
  RootSet s = sys_->empty_set();
  for (int i = 0; i < sys_->universe(); ++i)
    if (perm_[i] == i) s.add(i);
  return s;
}

RootSet WeylElement::stable_roots() const {
  RootSet s = sys_->empty_set();
  for (int i = 0; i < sys_->universe(); ++i) {
    bool pos = sys_->is_positive_index(i);
    bool stable = true;
    int j = perm_[i];
    while (j != i) {
      if (sys_->is_positive_index(j) != pos) {
        stable = false;
        break;
      }
      j = perm_[j];
    }
    if (stable) s.add(i);
  }
  return s;
}

QMat WeylElement::reflection_matrix() const {
  int n = sys_->rank();
  QMat m(n, n);
  for (int j = 0; j < n; ++j) {
    int img = perm_[sys_->simple_root_index(j + 1)];
    const auto& c = sys_->root(img).coeffs;
    for (int i = 0; i < n; ++i) m(i, j) = c[i];
  }
  return m;
}

bool WeylElement::is_elliptic() const {
  QMat m = QMat::identity(sys_->rank()) - reflection_matrix();
  return m.det() != 0;
}

bool WeylElement::is_convex() const {
  RootSet s = sys_->full_positive_set() - stable_roots();
  return slices::is_convex(*sys_, s);
}

bool WeylElement::is_firmly_convex() const {
  RootSet fixed = fixed_roots();
  RootSet s = sys_->full_positive_set() - fixed;
  if (!slices::is_convex(*sys_, s)) return false;
  // Fixed roots must form a standard parabolic subsystem: the positive fixed
  // roots are exactly the positive roots supported on the fixed simples.
  std::vector<bool> simple_fixed(sys_->rank(), false);
  for (int i = 1; i <= sys_->rank(); ++i)
    simple_fixed[i - 1] = fixed.contains(sys_->simple_root_index(i));
  for (int r = 0; r < sys_->positive_count(); ++r) {
    bool supported = true;
    for (int k = 0; k < sys_->rank(); ++k)
      if (sys_->root(r).coeffs[k] != 0 && !simple_fixed[k]) supported = false;
    if (supported != fixed.contains(r)) return false;
  }
  return true;
}

std::string WeylElement::word_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i) os << ' ';
    os << word_[i];
  }
  return os.str();
}

bool weak_leq(const WeylElement& y, const WeylElement& w) {
  if (&y.sys() != &w.sys()) throw std::invalid_argument("weak_leq: different systems");
  return y.inversion_set().subset_of(w.inversion_set());
}

std::vector<WeylElement> enumerate_weyl(std::shared_ptr<const RootSystem> sys, size_t cap) {
  std::vector<WeylElement> out;
  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> perms;
  WeylElement id = WeylElement::identity(sys);
  out.push_back(id);
  // Track by permutation to dedupe.
  auto key = [&](const WeylElement& w) {
    std::vector<int> k(sys->universe());
    for (int i = 0; i < sys->universe(); ++i) k[i] = w.act(i);
    return k;
  };
  seen[key(id)] = 0;
  for (size_t head = 0; head < out.size(); ++head) {
    if (out.size() > cap) throw std::length_error("Weyl group larger than cap");
    WeylElement w = out[head];
    for (int s = 1; s <= sys->rank(); ++s) {
      WeylElement nw = w * WeylElement::simple(sys, s);
      auto k = key(nw);
      if (seen.emplace(std::move(k), int(out.size())).second) out.push_back(nw);
    }
  }
  return out;
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  std::istringstream is(text);
  int v;
  while (is >> v) out.push_back(v);
  return out;
}

}  // namespace slices
