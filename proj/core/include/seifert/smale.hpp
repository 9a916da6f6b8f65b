#pragma once

// Smale invariants of immersions S^3 -> R^5 read off from (singular) Seifert data.

#include "seifert/bigint.hpp"
#include "seifert/surface.hpp"

namespace seifert {

struct SingularSeifertData {
  BigInt sigma;   // signature of the domain 4-manifold
  BigInt cusps;   // algebraic number of cusp points, equivalently e[xi]
};

/// (3 sigma + cusps) / 2. Throws Error{kParityViolation} if 3 sigma + cusps is odd.
BigInt smale_from_singular(const SingularSeifertData& data);

/// Smale invariant of p o F for the boundary of `surface` composed with R^6 -> R^5:
/// (3 sigma + e.e) / 2.
BigInt smale_of_projection(const SeifertSurfaceModel& surface);

/// An immersion lifts to an embedding in R^6 exactly when its Smale invariant is even.
bool is_liftable_parity(const BigInt& omega);

}  // namespace seifert
