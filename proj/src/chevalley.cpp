#include "slices/chevalley.hpp"

#include <algorithm>
#include <stdexcept>

namespace slices {

GroupElement::GroupElement(QMat m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("group element: not square");
  if (m_.det() != 1) throw std::invalid_argument("group element: determinant is not 1");
}

std::pair<int, int> root_position(const RootSystem& sys, int root) {
  if (sys.type() != 'A') throw std::invalid_argument("matrix realization requires type A");
  const auto& c = sys.root(root).coeffs;
  int first = -1, last = -1;
  for (int k = 0; k < sys.rank(); ++k)
    if (c[k] != 0) {
      if (first < 0) first = k;
      last = k;
    }
  if (first < 0) throw std::invalid_argument("zero vector is not a root");
  // alpha_first + ... + alpha_last = e_first - e_{last+1} (0-based rows).
  if (c[first] > 0) return {first, last + 1};
  return {last + 1, first};
}

GroupElement root_subgroup(const RootSystem& sys, int root, const Rat& c) {
  auto [i, j] = root_position(sys, root);
  QMat m = QMat::identity(sys.rank() + 1);
  m(i, j) += c;
  return GroupElement(m);
}

GroupElement standard_lift(const RootSystem& sys, const WeylElement& w) {
  if (!w.twist().is_identity())
    throw std::invalid_argument("standard_lift: twisted elements have no matrix lift here");
  GroupElement g = GroupElement::identity(sys.rank() + 1);
  for (int s : w.word()) {
    int a = sys.simple_root_index(s);
    GroupElement lift = root_subgroup(sys, a, 1) * root_subgroup(sys, sys.negate(a), -1) *
                        root_subgroup(sys, a, 1);
    g = g * lift;
  }
  return g;
}

void validate_lift(const RootSystem& sys, const WeylElement& w, const GroupElement& g) {
  int n = sys.rank() + 1;
  if (g.n() != n) throw std::invalid_argument("lift: wrong size");
  for (int i = 0; i < n; ++i) {
    int nz = 0;
    for (int j = 0; j < n; ++j)
      if (g.mat()(i, j) != 0) ++nz;
    if (nz != 1) throw std::invalid_argument("lift: not monomial");
  }
  // Steinberg relation: g N_beta g^-1 = N_{w(beta)}.
  GroupElement gi = g.inverse();
  for (int r = 0; r < sys.universe(); ++r) {
    GroupElement conj = g * root_subgroup(sys, r, 1) * gi;
    auto [i, j] = root_position(sys, w.act(r));
    QMat diff = conj.mat() - QMat::identity(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (diff(a, b) != 0 && !(a == i && b == j))
          throw std::invalid_argument("lift: does not induce w on root subgroups");
    if (diff(i, j) == 0) throw std::invalid_argument("lift: kills a root subgroup");
  }
}

SliceContext::SliceContext(std::shared_ptr<const RootSystem> sys, WeylElement w,
                           RootSet nimble, TorusPart torus, std::optional<GroupElement> lift)
    : sys_(std::move(sys)),
      w_(std::move(w)),
      nimble_(std::move(nimble)),
      torus_(torus),
      lift_(lift ? *lift : standard_lift(*sys_, w_)) {
  if (sys_->type() != 'A') throw std::invalid_argument("slice context requires type A");
  if (!is_convex(*sys_, nimble_) || !w_.inversion_set().subset_of(nimble_) ||
      !nimble_.subset_of(sys_->full_positive_set()))
    throw std::invalid_argument("slice context: N must be convex, positive, containing R_w");
  validate_lift(*sys_, w_, lift_);
  int n = sys_->rank() + 1;
  pivot_.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (lift_.mat()(i, j) != 0) pivot_[i] = j;
}

int SliceContext::default_iterations() const {
  int d = nimble_.size() - w_.length() + 1;
  return d < 1 ? 1 : d;
}

std::vector<std::pair<int, Rat>> factorize_unipotent(const RootSystem& sys,
                                                     const GroupElement& u,
                                                     const std::vector<int>& root_order) {
  int n = sys.rank() + 1;
  for (int i = 0; i < n; ++i)
    if (u.mat()(i, i) != 1) throw std::invalid_argument("factorize: not unipotent");
  std::vector<Rat> coeff(root_order.size(), Rat(0));
  auto assemble = [&]() {
    GroupElement g = GroupElement::identity(n);
    for (size_t k = 0; k < root_order.size(); ++k)
      g = g * root_subgroup(sys, root_order[k], coeff[k]);
    return g;
  };
  // Coordinates of one height level at a time: entries at height h depend
  // on the lower levels already matched plus linearly on the level-h
  // coordinates.
  for (int h = 1; h <= n - 1; ++h) {
    QMat residual = assemble().inverse().mat() * u.mat();
    for (size_t k = 0; k < root_order.size(); ++k) {
      if (std::abs(sys.height(root_order[k])) != h) continue;
      auto [i, j] = root_position(sys, root_order[k]);
      coeff[k] += residual(i, j);
    }
  }
  if (!(assemble() == u))
    throw std::invalid_argument("factorize: element not supported on the given roots");
  std::vector<std::pair<int, Rat>> out;
  for (size_t k = 0; k < root_order.size(); ++k) out.emplace_back(root_order[k], coeff[k]);
  return out;
}

namespace {

std::vector<std::vector<bool>> position_mask(const RootSystem& sys, const RootSet& s) {
  int n = sys.rank() + 1;
  std::vector<std::vector<bool>> mask(n, std::vector<bool>(n, false));
  for (int r : s.elements()) {
    auto [i, j] = root_position(sys, r);
    mask[i][j] = true;
  }
  return mask;
}

bool torus_member(const SliceContext& ctx, const std::vector<Rat>& diag) {
  switch (ctx.torus()) {
    case TorusPart::trivial:
      for (const auto& v : diag)
        if (v != 1) return false;
      return true;
    case TorusPart::fixed:
      for (int i = 0; i < ctx.n(); ++i)
        if (diag[i] != diag[ctx.pivot(i)]) return false;
      return true;
    case TorusPart::full:
      return true;
  }
  return false;
}

std::vector<std::vector<int>> coordinate_cycles(const SliceContext& ctx) {
  int n = ctx.n();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> cycles;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      c.push_back(j);
      j = ctx.pivot(j);
    }
    cycles.push_back(c);
  }
  return cycles;
}

}  // namespace

bool in_unipotent_n(const SliceContext& ctx, const GroupElement& g) {
  int n = ctx.n();
  auto mask = position_mask(ctx.sys(), ctx.nimble());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        if (g.mat()(i, j) != 1) return false;
      } else if (g.mat()(i, j) != 0 && !mask[i][j]) {
        return false;
      }
    }
  return true;
}

bool in_torus_part(const SliceContext& ctx, const GroupElement& g) {
  int n = ctx.n();
  std::vector<Rat> diag(n);
  for (int i = 0; i < n; ++i) {
    diag[i] = g.mat()(i, i);
    for (int j = 0; j < n; ++j)
      if (i != j && g.mat()(i, j) != 0) return false;
  }
  return torus_member(ctx, diag);
}

bool in_slice(const SliceContext& ctx, const GroupElement& g) {
  int n = ctx.n();
  QMat lu = ctx.lift().mat().inverse() * g.mat();
  auto mask = position_mask(ctx.sys(), ctx.w().inversion_set());
  std::vector<Rat> diag(n);
  for (int i = 0; i < n; ++i) {
    diag[i] = lu(i, i);
    if (diag[i] == 0) return false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || lu(i, j) == 0) continue;
      if (j < i || !mask[i][j]) return false;
    }
  return torus_member(ctx, diag);
}

std::optional<SlicePointParts> factor_slice_point(const SliceContext& ctx,
                                                  const GroupElement& x) {
  int n = ctx.n();
  const QMat& xm = x.mat();
  auto n_mask = position_mask(ctx.sys(), ctx.nimble());
  auto w_mask = position_mask(ctx.sys(), ctx.w().inversion_set());

  // Solve x = m V with m unipotent on N and V = lift.l.u a staircase whose
  // row i has its pivot at column k_i := pivot(i). Rows are recovered bottom
  // up; sweeping columns left to right makes each unknown m(i, j) appear
  // first at the pivot column of row j.
  std::vector<int> pivot_row(n);
  for (int i = 0; i < n; ++i) pivot_row[ctx.pivot(i)] = i;

  QMat V(n, n);
  QMat m = QMat::identity(n);
  for (int i = n - 1; i >= 0; --i) {
    int ki = ctx.pivot(i);
    for (int c = 0; c < n; ++c) {
      Rat residual = xm(i, c);
      for (int j = i + 1; j < n; ++j)
        if (m(i, j) != 0 && V(j, c) != 0) residual -= m(i, j) * V(j, c);
      int jstar = pivot_row[c];
      if (jstar == i) {
        if (residual == 0) return std::nullopt;
        V(i, c) = residual;
        continue;
      }
      if (jstar > i && n_mask[i][jstar]) {
        // The (k_i, c) slot of l.u is w^-1 of a root of N, never in R_w, so
        // it must vanish; that pins m(i, jstar).
        m(i, jstar) = residual / V(jstar, c);
        continue;
      }
      V(i, c) = residual;
      bool free_slot = (c > ki) && w_mask[ki][c];
      if (c != ki && !free_slot && residual != 0) return std::nullopt;
    }
  }

  QMat lu = ctx.lift().mat().inverse() * V;
  std::vector<Rat> diag(n);
  QMat l = QMat::identity(n);
  for (int i = 0; i < n; ++i) {
    diag[i] = lu(i, i);
    if (diag[i] == 0) return std::nullopt;
    l(i, i) = diag[i];
  }
  if (!torus_member(ctx, diag)) return std::nullopt;
  QMat u = l.inverse() * lu;
  return SlicePointParts{GroupElement(m), GroupElement(l), GroupElement(u)};
}

OrbitPoint canonicalize(const SliceContext& ctx, std::vector<GroupElement> gs) {
  if (gs.empty()) throw std::invalid_argument("canonicalize: empty tuple");
  for (size_t i = gs.size(); i-- > 1;) {
    auto parts = factor_slice_point(ctx, gs[i]);
    if (!parts) throw std::invalid_argument("canonicalize: component not in N.w.L.N_w");
    gs[i] = GroupElement(parts->m.mat().inverse() * gs[i].mat());
    gs[i - 1] = gs[i - 1] * parts->m;
  }
  auto parts = factor_slice_point(ctx, gs[0]);
  if (!parts) throw std::invalid_argument("canonicalize: component not in N.w.L.N_w");
  gs[0] = GroupElement(parts->m.mat().inverse() * gs[0].mat());
  return OrbitPoint{parts->m, std::move(gs)};
}

GroupElement cross_head(const SliceContext& ctx, const GroupElement& g, int d) {
  std::vector<GroupElement> gs(size_t(d), g);
  return canonicalize(ctx, std::move(gs)).head;
}

GroupElement psi(const SliceContext& ctx, const GroupElement& n, const GroupElement& g) {
  if (!in_unipotent_n(ctx, n)) throw std::invalid_argument("psi: n is not in N");
  if (!in_slice(ctx, g)) throw std::invalid_argument("psi: g is not in w.L.N_w");
  return n.inverse() * g * n;
}

std::pair<GroupElement, GroupElement> psi_inverse(const SliceContext& ctx,
                                                  const GroupElement& g_tilde,
                                                  std::optional<int> iterations) {
  if (!is_nimble(ctx.w(), ctx.nimble()) || !crossing_condition(ctx.w(), ctx.nimble()))
    throw std::invalid_argument(
        "psi_inverse: crossing condition fails for this pair; the inverse contract is void");
  int d = iterations.value_or(ctx.default_iterations());
  GroupElement n = cross_head(ctx, g_tilde, d).inverse();
  GroupElement g = n * g_tilde * n.inverse();
  if (!in_slice(ctx, g))
    throw std::invalid_argument("psi_inverse: conjugate did not land in the slice");
  return {n, g};
}

GroupElement random_unipotent(const SliceContext& ctx, std::mt19937_64& rng) {
  GroupElement g = GroupElement::identity(ctx.n());
  for (int r : ctx.nimble().elements()) g = g * root_subgroup(ctx.sys(), r, random_rat(rng));
  return g;
}

GroupElement random_slice_point(const SliceContext& ctx, std::mt19937_64& rng) {
  int n = ctx.n();
  QMat l = QMat::identity(n);
  if (ctx.torus() != TorusPart::trivial) {
    auto cycles = ctx.torus() == TorusPart::full
                      ? [&] {
                          std::vector<std::vector<int>> cs;
                          for (int i = 0; i < n; ++i) cs.push_back({i});
                          return cs;
                        }()
                      : coordinate_cycles(ctx);
    int singleton = -1;
    for (size_t k = 0; k < cycles.size(); ++k)
      if (cycles[k].size() == 1) singleton = int(k);
    if (singleton >= 0) {
      Rat det(1);
      for (size_t k = 0; k < cycles.size(); ++k) {
        if (int(k) == singleton) continue;
        Rat v = random_nonzero_rat(rng, 5, 2);
        for (int i : cycles[k]) {
          l(i, i) = v;
          det *= v;
        }
      }
      for (int i : cycles[singleton]) l(i, i) = 1 / det;
    }
  }
  GroupElement u = GroupElement::identity(n);
  for (int r : ctx.w().inversion_set().elements())
    u = u * root_subgroup(ctx.sys(), r, random_rat(rng));
  return GroupElement(ctx.lift().mat() * l) * u;
}

bool spaltenstein_witness(const Rat& s, const Rat& t) {
  if (t == 0) throw std::invalid_argument("spaltenstein_witness: t must be invertible");
  auto sys = RootSystem::build("A5");
  auto w = WeylElement::from_word(sys, {1, 2, 3, 4, 5, 3, 4, 1, 2});
  Rat z(0), one(1);
  QMat wm{{z, z, z, z, z, one},    {z, z, -one, z, z, z}, {one, z, z, z, z, z},
          {z, z, z, z, -one, z},   {z, -one, z, z, z, z}, {z, z, z, one, z, z}};
  SliceContext ctx(sys, w, sys->full_positive_set(), TorusPart::trivial, GroupElement(wm));
  QMat nm = QMat::identity(6);
  nm(1, 3) = -s * t;
  nm(1, 5) = -s;
  nm(2, 3) = s;
  nm(2, 5) = s / t;
  QMat gm{{z, z, z, z, z, one},     {z, z, -one, z, z, z}, {one, z, 1 / t, z, z, z},
          {z, z, z, z, -one, z},    {z, -one, -t, z, z, z}, {z, z, z, one, t, 1 / t}};
  GroupElement n(nm), g(gm);
  if (!in_unipotent_n(ctx, n)) return false;
  if (!in_slice(ctx, g)) return false;
  GroupElement conj = n.inverse() * g * n;
  return in_slice(ctx, conj);
}

int transversality_rank(const SliceContext& ctx, const GroupElement& m) {
  if (!in_slice(ctx, m)) throw std::invalid_argument("transversality_rank: m not in slice");
  int n = ctx.n();
  const RootSystem& sys = ctx.sys();
  std::vector<std::vector<Rat>> rows;
  QMat mi = m.mat().inverse();

  auto push = [&](const QMat& x) { rows.push_back(x.flatten()); };
  auto push_image = [&](const QMat& x) { push(x - mi * x * m.mat()); };

  // (id - Ad_m)(g) over a basis of sl_n (right adjoint action).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      QMat e(n, n);
      e(i, j) = 1;
      push_image(e);
    }
  std::vector<QMat> torus_basis;
  for (int i = 0; i + 1 < n; ++i) {
    QMat t(n, n);
    t(i, i) = 1;
    t(i + 1, i + 1) = -1;
    torus_basis.push_back(t);
    push_image(t);
  }

  // l n t: the fixed subtorus algebra (cycle-constant traceless diagonals).
  std::vector<QMat> lt;
  if (ctx.torus() != TorusPart::trivial) {
    auto cycles = ctx.torus() == TorusPart::full
                      ? [&] {
                          std::vector<std::vector<int>> cs;
                          for (int i = 0; i < n; ++i) cs.push_back({i});
                          return cs;
                        }()
                      : coordinate_cycles(ctx);
    for (size_t k = 0; k + 1 < cycles.size(); ++k) {
      QMat d(n, n);
      for (int i : cycles[k]) d(i, i) = rat(1, long(cycles[k].size()));
      for (int i : cycles[k + 1]) d(i, i) = -rat(1, long(cycles[k + 1].size()));
      lt.push_back(d);
    }
  }
  for (const auto& x : lt) push(x);

  // t'_w: component of t orthogonal to l n t under the trace form.
  for (const auto& t : torus_basis) {
    QMat v = t;
    for (const auto& b : lt) {
      Rat num = (v * b).trace();
      Rat den = (b * b).trace();
      if (den != 0) v = v - b * (num / den);
    }
    push(v);
  }

  // n_w and nbar_{w^-1}.
  for (int r : ctx.w().inversion_set().elements()) {
    auto [i, j] = root_position(sys, r);
    QMat e(n, n);
    e(i, j) = 1;
    push(e);
  }
  for (int r : ctx.w().inverse().inversion_set().elements()) {
    auto [i, j] = root_position(sys, sys.negate(r));
    QMat e(n, n);
    e(i, j) = 1;
    push(e);
  }

  return rank_of_rows(std::move(rows));
}

}  // namespace slices
