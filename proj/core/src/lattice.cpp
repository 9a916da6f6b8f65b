#include "seifert/lattice.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "seifert/error.hpp"

namespace seifert {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kSingularForm: return "SingularForm";
    case ErrorCode::kNonUnimodular: return "NonUnimodular";
    case ErrorCode::kNotCharacteristic: return "NotCharacteristic";
    case ErrorCode::kInternalCongruenceViolation: return "InternalCongruenceViolation";
    case ErrorCode::kParityViolation: return "ParityViolation";
    case ErrorCode::kOddSmaleInvariant: return "OddSmaleInvariant";
    case ErrorCode::kSearchSpaceTooLarge: return "SearchSpaceTooLarge";
  }
  return "Unknown";
}

IntegralLattice::IntegralLattice()
    : rank_(0), gram_(std::make_shared<const std::vector<BigInt>>()) {}

IntegralLattice::IntegralLattice(std::size_t rank, std::vector<BigInt> entries)
    : rank_(rank), gram_(std::make_shared<const std::vector<BigInt>>(std::move(entries))) {}

std::vector<std::vector<BigInt>> IntegralLattice::rows() const {
  std::vector<std::vector<BigInt>> out(rank_);
  for (std::size_t i = 0; i < rank_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

IntegralLattice IntegralLattice::negated() const {
  std::vector<BigInt> entries(gram_->size());
  std::transform(gram_->begin(), gram_->end(), entries.begin(),
                 [](const BigInt& v) { return BigInt(-v); });
  return IntegralLattice(rank_, std::move(entries));
}

bool operator==(const IntegralLattice& a, const IntegralLattice& b) {
  return a.rank_ == b.rank_ && *a.gram_ == *b.gram_;
}

IntegralLattice make_lattice(const std::vector<std::vector<BigInt>>& gram) {
  const std::size_t n = gram.size();
  std::vector<BigInt> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n) {
      throw Error(ErrorCode::kNotSquare, "row " + std::to_string(i) + " has " +
                                             std::to_string(gram[i].size()) + " entries, expected " +
                                             std::to_string(n));
    }
    entries.insert(entries.end(), gram[i].begin(), gram[i].end());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gram[i][j] != gram[j][i]) {
        throw Error(ErrorCode::kNotSymmetric, "gram[" + std::to_string(i) + "][" + std::to_string(j) +
                                                  "] != gram[" + std::to_string(j) + "][" +
                                                  std::to_string(i) + "]");
      }
    }
  }
  return IntegralLattice(n, std::move(entries));
}

IntegralLattice make_lattice(std::initializer_list<std::initializer_list<long>> gram) {
  std::vector<std::vector<BigInt>> rows;
  for (const auto& r : gram) {
    rows.emplace_back();
    for (long v : r) rows.back().emplace_back(v);
  }
  return make_lattice(rows);
}

IntegralLattice one(Sign sign) { return make_lattice({{static_cast<long>(sign)}}); }

IntegralLattice hyperbolic() { return make_lattice({{0, 1}, {1, 0}}); }

IntegralLattice e8(Sign sign) {
  const long s = static_cast<long>(sign);
  std::vector<std::vector<BigInt>> g(8, std::vector<BigInt>(8, 0));
  for (int i = 0; i < 8; ++i) g[i][i] = 2 * s;
  constexpr std::pair<int, int> kEdges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
  for (auto [a, b] : kEdges) g[a][b] = g[b][a] = -s;
  return make_lattice(g);
}

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b) {
  const std::size_t n = a.rank() + b.rank();
  std::vector<std::vector<BigInt>> g(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) g[i][j] = a(i, j);
  const std::size_t off = a.rank();
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) g[off + i][off + j] = b(i, j);
  return make_lattice(g);
}

IntegralLattice direct_sum(std::initializer_list<IntegralLattice> parts) {
  IntegralLattice acc;
  for (const auto& p : parts) acc = direct_sum(acc, p);
  return acc;
}

std::vector<std::vector<std::size_t>> orthogonal_components(const IntegralLattice& lattice) {
  const std::size_t n = lattice.rank();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (lattice(i, j) != 0) parent[find(j)] = find(i);

  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    if (slot[root] == n) {
      slot[root] = components.size();
      components.emplace_back();
    }
    components[slot[root]].push_back(i);
  }
  return components;
}

IntegralLattice restrict_to(const IntegralLattice& lattice, std::span<const std::size_t> indices) {
  std::vector<std::vector<BigInt>> g(indices.size(), std::vector<BigInt>(indices.size()));
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j) g[i][j] = lattice(indices[i], indices[j]);
  return make_lattice(g);
}

namespace {

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  // Fraction-free elimination with row swaps on zero pivots.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

BigInt determinant(const IntegralLattice& lattice) {
  BigInt det = 1;
  for (const auto& comp : orthogonal_components(lattice)) {
    if (comp.size() == 1) {
      det *= lattice(comp[0], comp[0]);
    } else {
      det *= bareiss_determinant(restrict_to(lattice, comp).rows());
    }
    if (det == 0) break;
  }
  return det;
}

bool is_unimodular(const IntegralLattice& lattice) { return abs(determinant(lattice)) == 1; }

bool is_even(const IntegralLattice& lattice) {
  for (std::size_t i = 0; i < lattice.rank(); ++i)
    if (!is_even(lattice(i, i))) return false;
  return true;
}

BigInt pairing(const IntegralLattice& lattice, std::span<const BigInt> x, std::span<const BigInt> y) {
  const std::size_t n = lattice.rank();
  if (x.size() != n || y.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "vector lengths " + std::to_string(x.size()) + ", " +
                                                   std::to_string(y.size()) + " vs rank " +
                                                   std::to_string(n));
  }
  BigInt total = 0;
  BigInt row_dot;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    row_dot = 0;
    for (std::size_t j = 0; j < n; ++j) row_dot += lattice(i, j) * y[j];
    total += x[i] * row_dot;
  }
  return total;
}

std::size_t first_characteristic_violation(const IntegralLattice& lattice, std::span<const BigInt> x) {
  const std::size_t n = lattice.rank();
  if (x.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector length " + std::to_string(x.size()) + " vs rank " + std::to_string(n));
  }
  BigInt acc;
  for (std::size_t i = 0; i < n; ++i) {
    acc = -lattice(i, i);
    for (std::size_t j = 0; j < n; ++j) acc += lattice(i, j) * x[j];
    if (!is_even(acc)) return i;
  }
  return n;
}

bool is_characteristic(const IntegralLattice& lattice, std::span<const BigInt> x) {
  return first_characteristic_violation(lattice, x) == lattice.rank();
}

CharVector::CharVector(IntegralLattice lattice, IntVector coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  const std::size_t bad = first_characteristic_violation(lattice_, coords_);
  if (bad != lattice_.rank()) {
    throw NotCharacteristicError(bad, "<e, g_" + std::to_string(bad) + "> != <g_" + std::to_string(bad) +
                                          ", g_" + std::to_string(bad) + "> (mod 2)");
  }
}

BigInt cup_square(const CharVector& e) { return pairing(e.lattice(), e.coords(), e.coords()); }

CharacteristicBasis characteristic_basis(const IntegralLattice& lattice) {
  if (!is_unimodular(lattice)) {
    throw Error(ErrorCode::kNonUnimodular, "characteristic vectors are only computed for |det| = 1");
  }
  const std::size_t n = lattice.rank();
  // Augmented system [G mod 2 | diag(G) mod 2], reduced to row echelon form over F2.
  std::vector<Mod2Vector> m(n, Mod2Vector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<unsigned char>(mod_nonneg(lattice(i, j), 2));
    m[i][n] = static_cast<unsigned char>(mod_nonneg(lattice(i, i), 2));
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != r && m[i][c] != 0) {
        for (std::size_t j = c; j <= n; ++j) m[i][j] ^= m[r][j];
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  // Unimodular => G is invertible mod 2, so the system is consistent; kept general anyway.
  IntVector particular(n, 0);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) particular[pivot_cols[i]] = m[i][n];

  std::vector<Mod2Vector> kernel;
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Mod2Vector v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = m[i][free];
    kernel.push_back(std::move(v));
  }
  return {CharVector(lattice, std::move(particular)), std::move(kernel)};
}

}  // namespace seifert
