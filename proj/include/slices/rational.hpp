#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace slices {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Parses "3", "-7/2".
inline Rat parse_rat(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

// Small random rationals for seeded sample batches.
inline Rat random_rat(std::mt19937_64& rng, long max_abs_num = 9, long max_den = 3) {
  std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return rat(num(rng), den(rng));
}

inline Rat random_nonzero_rat(std::mt19937_64& rng, long max_abs_num = 9, long max_den = 3) {
  for (;;) {
    Rat q = random_rat(rng, max_abs_num, max_den);
    if (q != 0) return q;
  }
}

}  // namespace slices
