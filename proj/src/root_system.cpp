#include "slices/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace slices {

namespace {

// Cartan matrix a[i][j] = <alpha_j, alpha_i^vee> in Bourbaki numbering.
// B_n has alpha_n short; C_n has alpha_n long; in E_n node 2 is the branch
// node attached to node 4; F4 has alpha_1, alpha_2 long; G2 has alpha_1 short.
std::vector<std::vector<int>> cartan_matrix(char type, int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto chain = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      a[n - 2][n - 1] = -1;
      a[n - 1][n - 2] = -2;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      a[n - 2][n - 1] = -2;
      a[n - 1][n - 2] = -1;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      chain(n - 3, n - 1);
      break;
    case 'E':
      // Bourbaki: 1-3-4-5-6(-7)(-8), 2 attached to 4.
      chain(0, 2);
      chain(1, 3);
      chain(2, 3);
      for (int i = 3; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case 'F':
      chain(0, 1);
      chain(2, 3);
      a[1][2] = -1;
      a[2][1] = -2;
      break;
    case 'G':
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

bool supported(char type, int rank) {
  switch (type) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

// Half squared lengths d_i with short roots normalized to d = 1, computed by
// symmetrizing the Cartan matrix: d_i * a[i][j] = d_j * a[j][i].
std::vector<int> symmetrizers(const std::vector<std::vector<int>>& a) {
  int n = int(a.size());
  std::vector<int> d(n, 0);
  d[0] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (a[i][j] == 0 || d[i] == 0 || d[j] != 0) continue;
        // d_j = d_i * a[i][j] / a[j][i]
        int num = d[i] * a[i][j];
        d[j] = num / a[j][i];
        changed = true;
      }
    // Disconnected pieces (not produced by the types above, but be safe).
    for (int i = 0; i < n; ++i)
      if (d[i] == 0) {
        d[i] = 1;
        changed = true;
      }
  }
  int mn = *std::min_element(d.begin(), d.end());
  for (int& x : d) x /= mn;
  return d;
}

}  // namespace

std::shared_ptr<const RootSystem> RootSystem::build(const std::string& label) {
  if (label.size() < 2) throw std::invalid_argument("bad root system label: " + label);
  char t = label[0];
  int r = 0;
  try {
    r = std::stoi(label.substr(1));
  } catch (...) {
    throw std::invalid_argument("bad root system label: " + label);
  }
  return build(t, r);
}

std::shared_ptr<const RootSystem> RootSystem::build(char type, int rank) {
  if (!supported(type, rank))
    throw std::invalid_argument("unsupported root system " + std::string(1, type) +
                                std::to_string(rank));
  auto sys = std::shared_ptr<RootSystem>(new RootSystem());
  sys->type_ = type;
  sys->rank_ = rank;
  sys->cartan_ = cartan_matrix(type, rank);

  auto d = symmetrizers(sys->cartan_);
  sys->pairing_.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) sys->pairing_[i][j] = d[i] * sys->cartan_[i][j];

  // Roots as the closure of the simple roots under simple reflections.
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    all.insert(e);
    queue.push_back(e);
  }
  auto reflect = [&](const std::vector<int>& v, int i) {
    // <v, alpha_i^vee> = sum_j v_j a[i][j]
    int p = 0;
    for (int j = 0; j < rank; ++j) p += v[j] * sys->cartan_[i][j];
    std::vector<int> w = v;
    w[i] -= p;
    return w;
  };
  while (!queue.empty()) {
    auto v = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank; ++i) {
      auto w = reflect(v, i);
      if (all.insert(w).second) queue.push_back(w);
    }
  }

  for (const auto& v : all) {
    Root r{v};
    if (r.sign() > 0) sys->positive_.push_back(r);
  }
  std::sort(sys->positive_.begin(), sys->positive_.end(), [](const Root& x, const Root& y) {
    int hx = x.height(), hy = y.height();
    if (hx != hy) return hx < hy;
    return x.coeffs < y.coeffs;
  });

  int m = int(sys->positive_.size());
  sys->roots_.resize(2 * m);
  sys->heights_.resize(2 * m);
  for (int i = 0; i < m; ++i) {
    sys->roots_[i] = sys->positive_[i];
    std::vector<int> neg(rank);
    for (int j = 0; j < rank; ++j) neg[j] = -sys->positive_[i].coeffs[j];
    sys->roots_[m + i] = Root{neg};
  }
  for (int i = 0; i < 2 * m; ++i) sys->heights_[i] = sys->roots_[i].height();
  for (int i = 0; i < 2 * m; ++i) sys->index_[sys->roots_[i].coeffs] = i;

  sys->simple_index_.resize(rank);
  for (int s = 0; s < rank; ++s) {
    std::vector<int> e(rank, 0);
    e[s] = 1;
    sys->simple_index_[s] = sys->index_of(e);
  }

  int u = 2 * m;
  sys->sum_table_.assign(size_t(u) * u, -1);
  for (int i = 0; i < u; ++i)
    for (int j = 0; j < u; ++j) {
      std::vector<int> v(rank);
      for (int k = 0; k < rank; ++k) v[k] = sys->roots_[i].coeffs[k] + sys->roots_[j].coeffs[k];
      sys->sum_table_[size_t(i) * u + j] = sys->index_of(v);
    }

  sys->simple_perm_.assign(rank, std::vector<int>(u));
  for (int s = 0; s < rank; ++s)
    for (int i = 0; i < u; ++i) {
      auto w = reflect(sys->roots_[i].coeffs, s);
      sys->simple_perm_[s][i] = sys->index_of(w);
    }
  return sys;
}

int RootSystem::index_of(const std::vector<int>& coeffs) const {
  auto it = index_.find(coeffs);
  return it == index_.end() ? -1 : it->second;
}

Rat RootSystem::inner(int i, int j) const {
  long long v = 0;
  for (int a = 0; a < rank_; ++a)
    for (int b = 0; b < rank_; ++b)
      v += (long long)roots_[i].coeffs[a] * roots_[j].coeffs[b] * pairing_[a][b];
  return rat(v);
}

std::optional<Root> root_sum(const RootSystem& sys, const Root& beta, const Root& gamma) {
  int i = sys.index_of(beta), j = sys.index_of(gamma);
  if (i < 0 || j < 0) throw std::invalid_argument("root_sum: inputs must be roots");
  int k = sys.sum_index(i, j);
  if (k < 0) return std::nullopt;
  return sys.root(k);
}

RootSet ray_combinations(const RootSystem& sys, int beta, int gamma) {
  RootSet out = sys.empty_set();
  int n = sys.rank();
  const auto& b = sys.root(beta).coeffs;
  const auto& g = sys.root(gamma).coeffs;
  for (int r = 0; r < sys.universe(); ++r) {
    const auto& t = sys.root(r).coeffs;
    // Solve c0*b + c1*g = t over Q, demanding a solution with c0, c1 > 0.
    // Rank-2 case: pick two independent coordinate equations; rank-1 case:
    // all three vectors are proportional.
    int p = -1, q = -1;
    for (int i = 0; i < n && q < 0; ++i)
      for (int j = i + 1; j < n; ++j) {
        long long det = (long long)b[i] * g[j] - (long long)b[j] * g[i];
        if (det != 0) {
          p = i;
          q = j;
          break;
        }
      }
    if (p >= 0) {
      long long det = (long long)b[p] * g[q] - (long long)b[q] * g[p];
      Rat c0 = rat((long long)t[p] * g[q] - (long long)t[q] * g[p]) / rat(det);
      Rat c1 = rat((long long)b[p] * t[q] - (long long)b[q] * t[p]) / rat(det);
      if (c0 <= 0 || c1 <= 0) continue;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        if (c0 * b[i] + c1 * g[i] != t[i]) ok = false;
      if (ok) out.add(r);
    } else {
      // g = +-b (reduced systems have no other proportional pairs).
      // t must be a multiple of b: t = c*b with c attainable as c0 +- c1.
      int bi = -1;
      for (int i = 0; i < n; ++i)
        if (b[i] != 0) {
          bi = i;
          break;
        }
      if (bi < 0) continue;
      Rat c = rat(t[bi]) / rat(b[bi]);
      bool prop = true;
      for (int i = 0; i < n && prop; ++i)
        if (c * b[i] != t[i]) prop = false;
      if (!prop) continue;
      bool same = sys.root(gamma).coeffs == b;
      if (same) {
        // c0 + c1 = c with both positive: any c > 0 works.
        if (c > 0) out.add(r);
      } else {
        // gamma = -beta: c0 - c1 = c has positive solutions for every c.
        out.add(r);
      }
    }
  }
  return out;
}

// Closure under root addition. (Strictly weaker than closure under positive
// ray combinations: {a12, a1233} in B3 is sum-closed although a123 is the
// half-sum of its members, and the nimble sets of interest rely on that.)
bool is_convex(const RootSystem& sys, const RootSet& s) {
  auto elems = s.elements();
  for (size_t a = 0; a < elems.size(); ++a)
    for (size_t b = a + 1; b < elems.size(); ++b) {
      int sum = sys.sum_index(elems[a], elems[b]);
      if (sum >= 0 && !s.contains(sum)) return false;
    }
  return true;
}

namespace {

bool summing_search(const RootSystem& sys, std::vector<int>& remaining, int current,
                    const std::vector<int>& total, std::vector<int>& out) {
  // current < 0 encodes "nothing placed yet".
  if (current >= 0 && sys.root(current).coeffs == total) {
    // Leftovers must cancel: their sum is total - total = 0 by construction
    // only if the placed prefix already reached the total; remaining roots
    // summing to zero may be deleted.
    std::vector<int> rest(sys.rank(), 0);
    for (int r : remaining)
      if (r >= 0)
        for (int k = 0; k < sys.rank(); ++k) rest[k] += sys.root(r).coeffs[k];
    bool zero = true;
    for (int v : rest) zero &= v == 0;
    if (zero) return true;
  }
  for (size_t i = 0; i < remaining.size(); ++i) {
    int r = remaining[i];
    if (r < 0) continue;
    int next = current < 0 ? r : sys.sum_index(current, r);
    if (current >= 0 && next < 0) continue;
    remaining[i] = -1;
    out.push_back(r);
    if (summing_search(sys, remaining, next, total, out)) return true;
    out.pop_back();
    remaining[i] = r;
  }
  return false;
}

}  // namespace

std::vector<Root> summing_sequence(const RootSystem& sys, const std::vector<Root>& roots,
                                   const std::optional<Root>& start) {
  std::vector<int> idx;
  std::vector<int> total(sys.rank(), 0);
  bool all_positive = true;
  for (const auto& r : roots) {
    int i = sys.index_of(r);
    if (i < 0) throw std::invalid_argument("summing_sequence: input is not a root");
    idx.push_back(i);
    all_positive &= sys.is_positive_index(i);
    for (int k = 0; k < sys.rank(); ++k) total[k] += r.coeffs[k];
  }
  if (sys.index_of(total) < 0)
    throw std::invalid_argument("summing_sequence: total sum is not a root");
  if (start && !all_positive)
    throw std::invalid_argument("summing_sequence: start requires all-positive inputs");

  std::vector<int> out;
  int current = -1;
  if (start) {
    int s = sys.index_of(*start);
    auto it = std::find(idx.begin(), idx.end(), s);
    if (it == idx.end())
      throw std::invalid_argument("summing_sequence: start is not among the inputs");
    *it = -1;
    out.push_back(s);
    current = s;
  }
  if (!summing_search(sys, idx, current, total, out))
    throw std::invalid_argument("summing_sequence: no admissible ordering found");
  std::vector<Root> result;
  for (int i : out) result.push_back(sys.root(i));
  return result;
}

std::string root_name(const RootSystem& sys, int index) {
  const Root& r = sys.root(index);
  std::string s = r.sign() < 0 ? "-a" : "a";
  for (int i = 0; i < sys.rank(); ++i) {
    int c = std::abs(r.coeffs[i]);
    for (int k = 0; k < c; ++k) s += char('1' + i);
  }
  return s;
}

std::string root_set_names(const RootSystem& sys, const RootSet& s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.elements()) {
    if (!first) out += ", ";
    out += root_name(sys, i);
    first = false;
  }
  return out + "}";
}

int parse_root(const RootSystem& sys, const std::string& text) {
  std::string t = text;
  int sign = 1;
  if (!t.empty() && t[0] == '-') {
    sign = -1;
    t = t.substr(1);
  }
  if (!t.empty() && (t[0] == 'a' || t[0] == 'A')) t = t.substr(1);
  std::vector<int> coeffs(sys.rank(), 0);
  for (char c : t) {
    if (c < '1' || c > char('0' + sys.rank()))
      throw std::invalid_argument("bad root name: " + text);
    coeffs[c - '1'] += sign;
  }
  int i = sys.index_of(coeffs);
  if (i < 0) throw std::invalid_argument("not a root: " + text);
  return i;
}

}  // namespace slices
