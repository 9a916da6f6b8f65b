#pragma once

// Brute-force verifiers, independent of the algorithms in lattice.cpp and realize.cpp.

#include <cstddef>
#include <optional>
#include <vector>

#include "seifert/bigint.hpp"
#include "seifert/lattice.hpp"

namespace seifert::oracle {

struct EnumerationSpec {
  std::size_t rank = 1;
  long entry_bound = 1;
  bool unimodular_only = true;
};

/// Walks every symmetric matrix of the given rank with entries in
/// [-bound, bound], upper triangle in row-major lexicographic order.
class LatticeEnumerator {
 public:
  /// Throws Error{kSearchSpaceTooLarge} unless 1 <= rank <= 4 and 0 <= bound <= 2.
  explicit LatticeEnumerator(EnumerationSpec spec);

  /// Next matching lattice, or nullopt when exhausted.
  std::optional<IntegralLattice> next();

 private:
  bool advance();

  EnumerationSpec spec_;
  std::vector<long> upper_;  // upper-triangle entries, row-major
  bool started_ = false;
  bool done_ = false;
};

LatticeEnumerator enumerate_lattices(const EnumerationSpec& spec);

/// Convenience: drains enumerate_lattices into a vector.
std::vector<IntegralLattice> all_lattices(const EnumerationSpec& spec);

/// Signature by rational congruence diagonalization, using 2x2 block pivots
/// when the remaining diagonal is zero. Throws Error{kSingularForm}.
long signature_by_diagonalization(const IntegralLattice& lattice);

/// Every characteristic vector in [-bound, bound]^rank, lexicographic order.
/// Throws Error{kSearchSpaceTooLarge} past 10^7 candidates.
std::vector<IntVector> characteristic_exhaustive(const IntegralLattice& lattice, long bound);

}  // namespace seifert::oracle
