#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "slices/cross.hpp"
#include "slices/matrix.hpp"

namespace slices {

// Exact-rational SL_n realization for type A systems: root subgroups, lifts
// of Weyl elements, the slice factorization machinery and the conjugation
// cross section with its constructive inverse.

// An element of SL_n: an n x n rational matrix of determinant 1.
class GroupElement {
 public:
  explicit GroupElement(QMat m);
  const QMat& mat() const { return m_; }
  int n() const { return m_.rows(); }
  GroupElement operator*(const GroupElement& o) const { return GroupElement(m_ * o.m_); }
  GroupElement inverse() const { return GroupElement(m_.inverse()); }
  bool operator==(const GroupElement& o) const { return m_ == o.m_; }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  static GroupElement identity(int n) { return GroupElement(QMat::identity(n)); }

 private:
  QMat m_;
};

// Subgroup of the torus allowed as the L-component.
enum class TorusPart {
  trivial,  // L = {id}
  fixed,    // L = T^w: diagonals constant on the w-orbits of coordinates
  full,     // L = T
};

// Context for a slice: a type A system, an element w, a crossing pair
// (N, L-roots) and a lift of w. Only L <= T is supported for the cross
// section; parabolic L-roots are accepted for factorization checks.
class SliceContext {
 public:
  // Standard product lift; N defaults to R_+, L to the trivial torus.
  SliceContext(std::shared_ptr<const RootSystem> sys, WeylElement w, RootSet nimble,
               TorusPart torus, std::optional<GroupElement> lift = std::nullopt);

  const RootSystem& sys() const { return *sys_; }
  int n() const { return sys_->rank() + 1; }
  const WeylElement& w() const { return w_; }
  const RootSet& nimble() const { return nimble_; }
  TorusPart torus() const { return torus_; }
  const GroupElement& lift() const { return lift_; }

  // Crossing-condition exponent |N| - l(w) + 1 (overridable in psi_inverse).
  int default_iterations() const;

  // Row pivot map of the lift: column of the nonzero entry in row i.
  int pivot(int row) const { return pivot_[row]; }
  // w as a permutation of torus coordinates: conjugation by the lift sends
  // diag(t) to diag(t o pivot).
  const std::vector<int>& coordinate_cycles_sizes() const;

 private:
  std::shared_ptr<const RootSystem> sys_;
  WeylElement w_;
  RootSet nimble_;
  TorusPart torus_;
  GroupElement lift_;
  std::vector<int> pivot_;
};

// Matrix position (i, j) of a root of A_{n-1} (0-based), e_i - e_j.
std::pair<int, int> root_position(const RootSystem& sys, int root);

// p_beta(c) = I + c E_{ij}.
GroupElement root_subgroup(const RootSystem& sys, int root, const Rat& c);

// Product of simple lifts p(1) p(-1) p(1) along a reduced word of w.
GroupElement standard_lift(const RootSystem& sys, const WeylElement& w);

// Checks that g normalizes the torus and conjugates root subgroups per the
// Steinberg relation for w (signs free); throws on failure.
void validate_lift(const RootSystem& sys, const WeylElement& w, const GroupElement& g);

// Coordinates c_beta with u = prod p_beta(c_beta) in the given root order.
// Throws when u is not unipotent with support inside the order's span.
std::vector<std::pair<int, Rat>> factorize_unipotent(const RootSystem& sys,
                                                     const GroupElement& u,
                                                     const std::vector<int>& root_order);

// Membership tests against the context's support sets.
bool in_unipotent_n(const SliceContext& ctx, const GroupElement& g);
bool in_torus_part(const SliceContext& ctx, const GroupElement& g);
bool in_slice(const SliceContext& ctx, const GroupElement& g);  // g in w.L N_w

// Unique factorization g = m . w. l u with m in N, l in L, u in N_w.
struct SlicePointParts {
  GroupElement m;      // in N
  GroupElement torus;  // diagonal, in L
  GroupElement u;      // in N_w
};
std::optional<SlicePointParts> factor_slice_point(const SliceContext& ctx,
                                                  const GroupElement& g);

// Canonical representative of a class in N[wL]: m' in N and d slice points.
struct OrbitPoint {
  GroupElement head;                 // m' in N
  std::vector<GroupElement> slices;  // (w.l_d u_d, ..., w.l_1 u_1)
};

// Canonicalizes (g_d, ..., g_1), each in N w.L N_w (throws otherwise).
OrbitPoint canonicalize(const SliceContext& ctx, std::vector<GroupElement> gs);
// Cross^d_{wL} of [g, ..., g]: the head of the canonical representative.
GroupElement cross_head(const SliceContext& ctx, const GroupElement& g, int d);

// The conjugation map (n, g) -> n^-1 g n; membership checked.
GroupElement psi(const SliceContext& ctx, const GroupElement& n, const GroupElement& g);

// Constructive inverse: the unique (n, g) with n^-1 g n = g_tilde. Throws
// when membership fails or when the slice does not absorb (crossing
// condition violated for the context's pair).
std::pair<GroupElement, GroupElement> psi_inverse(const SliceContext& ctx,
                                                  const GroupElement& g_tilde,
                                                  std::optional<int> iterations = std::nullopt);

// Random sampling helpers (exact rationals, seeded).
GroupElement random_unipotent(const SliceContext& ctx, std::mt19937_64& rng);
GroupElement random_slice_point(const SliceContext& ctx, std::mt19937_64& rng);

// The displayed 6x6 witness family certifying non-injectivity of psi for the
// A5 element s1 s2 s3 s4 s5 s3 s4 s1 s2 with pair (R_+, {}): checks that
// n lies in N_+, g in w.N_w and n^-1 g n in w.N_w. t must be nonzero.
bool spaltenstein_witness(const Rat& s, const Rat& t);

// Rank over Q of (id - Ad_m)(g) + t'_w + l + n_w + nbar_{w^-1} inside sl_n,
// in the left trivialization with Ad_m(x) = m^-1 x m.
int transversality_rank(const SliceContext& ctx, const GroupElement& m);

}  // namespace slices
