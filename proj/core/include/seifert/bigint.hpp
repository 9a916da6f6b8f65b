#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace seifert {

using BigInt = mpz_class;
using IntVector = std::vector<BigInt>;

inline IntVector to_int_vector(std::initializer_list<long> values) {
  IntVector out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// Euclidean residue in [0, m).
inline long mod_nonneg(const BigInt& v, long m) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(m));
  return r.get_si();
}

inline bool is_even(const BigInt& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

}  // namespace seifert
