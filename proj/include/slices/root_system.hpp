#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "slices/rational.hpp"

namespace slices {

// A root as an integer coefficient vector over the simple-root basis.
struct Root {
  std::vector<int> coeffs;

  int height() const {
    int h = 0;
    for (int c : coeffs) h += c;
    return h;
  }
  // +1 for positive, -1 for negative. Coefficients never mix strict signs.
  int sign() const {
    for (int c : coeffs)
      if (c != 0) return c > 0 ? 1 : -1;
    return 0;
  }
  bool operator==(const Root& o) const { return coeffs == o.coeffs; }
};

// Bitmask over the full root index space (positives 0..m-1, negatives m..2m-1).
class RootSet {
 public:
  RootSet() : bits_(0) {}
  explicit RootSet(int universe) : bits_(universe), blocks_((universe + 63) / 64, 0) {}

  int universe() const { return bits_; }
  void add(int i) { blocks_[i >> 6] |= uint64_t(1) << (i & 63); }
  void remove(int i) { blocks_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool contains(int i) const { return (blocks_[i >> 6] >> (i & 63)) & 1; }

  int size() const {
    int n = 0;
    for (uint64_t b : blocks_) n += __builtin_popcountll(b);
    return n;
  }
  bool empty() const {
    for (uint64_t b : blocks_)
      if (b) return false;
    return true;
  }

  RootSet operator|(const RootSet& o) const {
    RootSet r = *this;
    for (size_t k = 0; k < blocks_.size(); ++k) r.blocks_[k] |= o.blocks_[k];
    return r;
  }
  RootSet operator&(const RootSet& o) const {
    RootSet r = *this;
    for (size_t k = 0; k < blocks_.size(); ++k) r.blocks_[k] &= o.blocks_[k];
    return r;
  }
  RootSet operator-(const RootSet& o) const {
    RootSet r = *this;
    for (size_t k = 0; k < blocks_.size(); ++k) r.blocks_[k] &= ~o.blocks_[k];
    return r;
  }
  bool operator==(const RootSet& o) const { return blocks_ == o.blocks_; }
  bool operator!=(const RootSet& o) const { return !(*this == o); }

  bool subset_of(const RootSet& o) const {
    for (size_t k = 0; k < blocks_.size(); ++k)
      if (blocks_[k] & ~o.blocks_[k]) return false;
    return true;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int i = 0; i < bits_; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

 private:
  int bits_;
  std::vector<uint64_t> blocks_;
};

// Immutable context object for a crystallographic root system of type A-G.
// Positive roots are height-sorted with indices 0..count-1; the negative of
// index i is negate(i). All tables are populated at construction.
class RootSystem {
 public:
  // "A3", "B2", ... Throws std::invalid_argument on unsupported pairs.
  static std::shared_ptr<const RootSystem> build(char type, int rank);
  static std::shared_ptr<const RootSystem> build(const std::string& label);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }

  // Cartan matrix a[i][j] = <alpha_j, alpha_i^vee>, 0-based.
  int cartan(int i, int j) const { return cartan_[i][j]; }
  // Symmetrized form (alpha_i, alpha_j); short roots have squared length 2.
  int simple_pairing(int i, int j) const { return pairing_[i][j]; }

  int positive_count() const { return int(positive_.size()); }
  int universe() const { return 2 * positive_count(); }
  bool is_positive_index(int i) const { return i < positive_count(); }
  int negate(int i) const {
    int m = positive_count();
    return i < m ? i + m : i - m;
  }

  const Root& root(int i) const { return roots_[i]; }
  int height(int i) const { return heights_[i]; }
  // Index of a root given by coefficients, or -1 if not a root.
  int index_of(const std::vector<int>& coeffs) const;
  int index_of(const Root& r) const { return index_of(r.coeffs); }

  // Index of the simple root alpha_s (s 1-based).
  int simple_root_index(int s) const { return simple_index_[s - 1]; }
  bool is_simple(int i) const {
    return i < positive_count() && heights_[i] == 1;
  }

  // Index of beta+gamma if it is a root, else -1.
  int sum_index(int i, int j) const { return sum_table_[size_t(i) * universe() + j]; }

  // Simple reflection s (1-based) as a permutation of the root index space.
  int reflect_simple(int s, int i) const { return simple_perm_[s - 1][i]; }

  // (beta, gamma) under the symmetrized form.
  Rat inner(int i, int j) const;

  RootSet empty_set() const { return RootSet(universe()); }
  RootSet full_positive_set() const {
    RootSet s(universe());
    for (int i = 0; i < positive_count(); ++i) s.add(i);
    return s;
  }
  RootSet full_set() const {
    RootSet s(universe());
    for (int i = 0; i < universe(); ++i) s.add(i);
    return s;
  }

 private:
  RootSystem() = default;

  char type_ = 0;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> pairing_;
  std::vector<Root> roots_;        // indexed over the whole universe
  std::vector<int> heights_;
  std::vector<Root> positive_;     // height-sorted
  std::vector<int> simple_index_;  // index of alpha_s, 0-based slot s-1
  std::vector<int> sum_table_;
  std::vector<std::vector<int>> simple_perm_;
  std::map<std::vector<int>, int> index_;
};

// The root beta+gamma if it lies in the system.
std::optional<Root> root_sum(const RootSystem& sys, const Root& beta, const Root& gamma);

// All roots c0*beta + c1*gamma with c0, c1 strictly positive rationals.
RootSet ray_combinations(const RootSystem& sys, int beta, int gamma);

// True iff s is closed under root addition: beta, gamma in s and beta+gamma
// a root imply beta+gamma in s.
bool is_convex(const RootSystem& sys, const RootSet& s);

// A reordering of `roots` (deleting zero-sum leftovers when signs are mixed)
// whose partial sums are all roots, starting with `start` when given.
// Throws std::invalid_argument when the total is not a root or no sequence
// exists under the stated preconditions.
std::vector<Root> summing_sequence(const RootSystem& sys, const std::vector<Root>& roots,
                                   const std::optional<Root>& start = std::nullopt);

// Rendering: digit-multiset notation, e.g. a122 = alpha_1 + 2*alpha_2.
std::string root_name(const RootSystem& sys, int index);
std::string root_set_names(const RootSystem& sys, const RootSet& s);
// Parses "a122", "122", or "-a1"; returns the index. Throws on non-roots.
int parse_root(const RootSystem& sys, const std::string& text);

}  // namespace slices
