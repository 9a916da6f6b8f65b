#pragma once

// Procedures that build Seifert surfaces with prescribed invariants.

#include <cstddef>
#include <optional>

#include "seifert/bigint.hpp"
#include "seifert/lattice.hpp"
#include "seifert/surface.hpp"

namespace seifert {

/// Solution of -(A - B)/8 = Omega, (3A + B)/2 = omega.
struct CompressionData {
  BigInt a;  // signature of the Seifert surface
  BigInt b;  // e.e = -H
};

/// result = base ♮ P^p_count ♮ Q^q_count, materialized.
struct RealizationPlan {
  SeifertSurfaceModel base;
  std::size_t p_count = 0;
  std::size_t q_count = 0;
  SeifertSurfaceModel result;
};

/// Boundary-sums P (H -1, sigma +1) or Q (H +1, sigma -1) onto `base` until the
/// Hopf invariant equals `target_hopf`. Omega is unchanged.
RealizationPlan realize_hopf(const SeifertSurfaceModel& base, const BigInt& target_hopf);

/// Same procedure steered by the signature.
RealizationPlan realize_signature(const SeifertSurfaceModel& base, const BigInt& target_sigma);

/// Throws Error{kOddSmaleInvariant} when smale_target is odd.
CompressionData solve_compression(const BigInt& omega_target, const BigInt& smale_target);

/// Surface with sigma = A, H = -B built from s2xs2(omega_target, 1).
SeifertSurfaceModel realize_compression(const BigInt& omega_target, const BigInt& smale_target);

/// Searches characteristic vectors e of `form` with max |e_i| <= bound and
/// e.e = sigma + 8 * omega_target. Candidates are ordered by sup-norm, then
/// lexicographically with each coordinate ranked 0, 1, -1, 2, -2, ...; the first
/// hit is returned. nullopt when the box is exhausted.
/// Throws Error{kNonUnimodular}.
std::optional<CharVector> realize_form(const IntegralLattice& form, const BigInt& omega_target,
                                       unsigned long bound);

}  // namespace seifert
