#pragma once

// Seifert surfaces for knots S^3 -> S^6, modeled by the intersection form of the
// closed-up 4-manifold together with the normal Euler class of the embedding.

#include <string>

#include "seifert/bigint.hpp"
#include "seifert/lattice.hpp"

namespace seifert {

class SeifertSurfaceModel {
 public:
  const IntegralLattice& form() const noexcept { return euler_.lattice(); }
  const CharVector& euler() const noexcept { return euler_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t rank() const noexcept { return euler_.size(); }

 private:
  friend SeifertSurfaceModel make_surface(const IntegralLattice&, IntVector, std::string);
  friend SeifertSurfaceModel boundary_connected_sum(const SeifertSurfaceModel&, const SeifertSurfaceModel&);
  SeifertSurfaceModel(CharVector euler, std::string label)
      : euler_(std::move(euler)), label_(std::move(label)) {}

  CharVector euler_;
  std::string label_;
};

/// Throws Error{kNonUnimodular | kDimensionMismatch} or NotCharacteristicError.
SeifertSurfaceModel make_surface(const IntegralLattice& form, IntVector euler, std::string label = {});

long signature(const SeifertSurfaceModel& surface);

/// H = -e.e, the Hopf invariant of the boundary normal field.
BigInt hopf_invariant(const SeifertSurfaceModel& surface);

/// Omega = -(sigma + H) / 8. The division is exact for characteristic Euler classes;
/// a remainder raises Error{kInternalCongruenceViolation}.
BigInt haefliger_invariant(const SeifertSurfaceModel& surface);

/// Block sum of forms and concatenation of Euler classes.
SeifertSurfaceModel boundary_connected_sum(const SeifertSurfaceModel& a, const SeifertSurfaceModel& b);

/// Gram matrix negated, Euler class kept.
SeifertSurfaceModel reversed(const SeifertSurfaceModel& surface);

/// Empty surface (rank 0); neutral for boundary_connected_sum.
SeifertSurfaceModel disk_surface();

// Named constructions.
SeifertSurfaceModel s2xs2(const BigInt& a, const BigInt& b);  // (H, (2a, 2b))
SeifertSurfaceModel cp2(const BigInt& k);                     // (<1>, (2k+1))
SeifertSurfaceModel cp2bar(const BigInt& k);                  // (<-1>, (2k+1))
SeifertSurfaceModel kummer(const BigInt& a, const BigInt& b); // (2E8(-) + 3H, (0,...,0,2a,2b))
SeifertSurfaceModel p_block();                                // cp2(0): sigma 1, H -1
SeifertSurfaceModel q_block();                                // cp2bar(0): sigma -1, H 1

}  // namespace seifert
