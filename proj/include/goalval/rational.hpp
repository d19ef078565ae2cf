#pragma once

#include <gmpxx.h>

#include <string>

namespace goalval {

using Rat = mpq_class;
using Int = mpz_class;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Rat rat_of(long long num, long long den = 1) {
  Rat q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

// Fixed-point decimal rendering, round toward zero.
inline std::string rat_to_decimal(const Rat& q, int digits = 6) {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int scaled = (q.get_num() * scale) / q.get_den();
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string s = scaled.get_str();
  while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
  s.insert(s.end() - digits, '.');
  if (neg) s.insert(s.begin(), '-');
  return s;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

}  // namespace goalval
