#pragma once

// Integral symmetric bilinear forms and their characteristic vectors.

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "seifert/bigint.hpp"

namespace seifert {

enum class Sign : int { kPositive = 1, kNegative = -1 };

/// Symmetric integer Gram matrix of rank n >= 0. Immutable; copies share storage.
class IntegralLattice {
 public:
  /// The rank-0 lattice.
  IntegralLattice();

  std::size_t rank() const noexcept { return rank_; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return (*gram_)[i * rank_ + j]; }
  std::span<const BigInt> row(std::size_t i) const {
    return {gram_->data() + i * rank_, rank_};
  }
  std::vector<std::vector<BigInt>> rows() const;

  /// Same lattice with the opposite orientation (Gram matrix negated).
  IntegralLattice negated() const;

  friend bool operator==(const IntegralLattice& a, const IntegralLattice& b);

 private:
  friend IntegralLattice make_lattice(const std::vector<std::vector<BigInt>>& gram);
  IntegralLattice(std::size_t rank, std::vector<BigInt> entries);

  std::size_t rank_;
  std::shared_ptr<const std::vector<BigInt>> gram_;
};

/// Validates squareness and symmetry. Throws Error{kNotSquare | kNotSymmetric}.
IntegralLattice make_lattice(const std::vector<std::vector<BigInt>>& gram);
IntegralLattice make_lattice(std::initializer_list<std::initializer_list<long>> gram);

IntegralLattice one(Sign sign);
IntegralLattice hyperbolic();
/// E8 with the Dynkin convention: diagonal 2, -1 on the edges of the E8 diagram
/// (chain 0-1-2-3-4-5-6 plus the branch node 7 attached to node 4), globally
/// multiplied by `sign`.
IntegralLattice e8(Sign sign);

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b);
IntegralLattice direct_sum(std::initializer_list<IntegralLattice> parts);

/// Index sets of the orthogonal summands (connected components of the nonzero
/// off-diagonal pattern), each sorted, in order of smallest index.
std::vector<std::vector<std::size_t>> orthogonal_components(const IntegralLattice& lattice);

/// Gram matrix restricted to the given basis indices.
IntegralLattice restrict_to(const IntegralLattice& lattice, std::span<const std::size_t> indices);

BigInt determinant(const IntegralLattice& lattice);
bool is_unimodular(const IntegralLattice& lattice);
bool is_even(const IntegralLattice& lattice);

/// Coefficients of det(xI - G), highest degree first (leading coefficient 1).
std::vector<BigInt> characteristic_polynomial(const IntegralLattice& lattice);

/// Exact signature from the characteristic polynomial and Descartes' rule of signs.
/// Throws Error{kSingularForm} when det = 0.
long signature(const IntegralLattice& lattice);

/// x^T G y. Throws Error{kDimensionMismatch}.
BigInt pairing(const IntegralLattice& lattice, std::span<const BigInt> x, std::span<const BigInt> y);

/// True iff <x, g_i> == <g_i, g_i> (mod 2) for every Gram row g_i.
bool is_characteristic(const IntegralLattice& lattice, std::span<const BigInt> x);

/// Index of the first Gram row violating the characteristic condition, or rank() if none.
std::size_t first_characteristic_violation(const IntegralLattice& lattice, std::span<const BigInt> x);

/// An integer vector known to be characteristic in its lattice.
class CharVector {
 public:
  /// Throws Error{kDimensionMismatch} or NotCharacteristicError.
  CharVector(IntegralLattice lattice, IntVector coords);

  const IntegralLattice& lattice() const noexcept { return lattice_; }
  const IntVector& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }

 private:
  IntegralLattice lattice_;
  IntVector coords_;
};

/// e^T G e.
BigInt cup_square(const CharVector& e);

/// A mod-2 vector, entries 0 or 1.
using Mod2Vector = std::vector<unsigned char>;

struct CharacteristicBasis {
  CharVector particular;               // coordinates in {0, 1}
  std::vector<Mod2Vector> kernel;      // basis of {x : Gx == 0 (mod 2)}
};

/// Solves Gx == diag(G) (mod 2). Every characteristic vector is
/// particular + (F2-span of kernel) + 2 Z^n. Throws Error{kNonUnimodular}.
CharacteristicBasis characteristic_basis(const IntegralLattice& lattice);

}  // namespace seifert
