#include "seifert/oracle.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "seifert/error.hpp"

namespace seifert::oracle {

LatticeEnumerator::LatticeEnumerator(EnumerationSpec spec) : spec_(spec) {
  if (spec_.rank < 1 || spec_.rank > 4 || spec_.entry_bound < 0 || spec_.entry_bound > 2) {
    throw Error(ErrorCode::kSearchSpaceTooLarge,
                "exhaustive enumeration needs 1 <= rank <= 4 and 0 <= entry_bound <= 2 (got rank " +
                    std::to_string(spec_.rank) + ", bound " + std::to_string(spec_.entry_bound) + ")");
  }
  upper_.assign(spec_.rank * (spec_.rank + 1) / 2, -spec_.entry_bound);
}

bool LatticeEnumerator::advance() {
  if (!started_) {
    started_ = true;
    return true;
  }
  // Odometer with the last upper-triangle entry varying fastest.
  for (std::size_t i = upper_.size(); i-- > 0;) {
    if (upper_[i] < spec_.entry_bound) {
      ++upper_[i];
      return true;
    }
    upper_[i] = -spec_.entry_bound;
  }
  return false;
}

std::optional<IntegralLattice> LatticeEnumerator::next() {
  const std::size_t n = spec_.rank;
  while (!done_) {
    if (!advance()) {
      done_ = true;
      break;
    }
    std::vector<std::vector<BigInt>> g(n, std::vector<BigInt>(n));
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) g[i][j] = g[j][i] = upper_[idx++];
    auto lattice = make_lattice(g);
    if (!spec_.unimodular_only || is_unimodular(lattice)) return lattice;
  }
  return std::nullopt;
}

LatticeEnumerator enumerate_lattices(const EnumerationSpec& spec) { return LatticeEnumerator(spec); }

std::vector<IntegralLattice> all_lattices(const EnumerationSpec& spec) {
  std::vector<IntegralLattice> out;
  auto stream = enumerate_lattices(spec);
  while (auto l = stream.next()) out.push_back(std::move(*l));
  return out;
}

long signature_by_diagonalization(const IntegralLattice& lattice) {
  const std::size_t n = lattice.rank();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = lattice(i, j);

  // Active indices; congruence operations only ever touch the active block.
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  long sig = 0;

  while (!active.empty()) {
    std::size_t pivot = active.size();
    for (std::size_t t = 0; t < active.size(); ++t) {
      if (a[active[t]][active[t]] != 0) {
        pivot = t;
        break;
      }
    }
    if (pivot < active.size()) {
      const std::size_t p = active[pivot];
      const mpq_class d = a[p][p];
      sig += sgn(d);
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot));
      for (std::size_t i : active) {
        if (a[i][p] == 0) continue;
        const mpq_class f = a[i][p] / d;
        for (std::size_t j : active) a[i][j] -= f * a[p][j];
      }
      continue;
    }

    // Zero diagonal: pivot on a 2x2 block [[0, c], [c, 0]], which has signature 0.
    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t s = 0; s < active.size() && !found; ++s)
      for (std::size_t t = s + 1; t < active.size() && !found; ++t)
        if (a[active[s]][active[t]] != 0) {
          bi = active[s];
          bj = active[t];
          found = true;
        }
    if (!found) throw Error(ErrorCode::kSingularForm, "form is degenerate");

    const mpq_class c = a[bi][bj];
    std::erase(active, bi);
    std::erase(active, bj);
    // Schur complement: A_rest -= C B^{-1} C^T with B^{-1} = [[0, 1/c], [1/c, 0]].
    for (std::size_t i : active) {
      for (std::size_t j : active) {
        a[i][j] -= (a[i][bi] * a[bj][j] + a[i][bj] * a[bi][j]) / c;
      }
    }
  }
  return sig;
}

std::vector<IntVector> characteristic_exhaustive(const IntegralLattice& lattice, long bound) {
  const std::size_t n = lattice.rank();
  const double candidates = std::pow(2.0 * static_cast<double>(bound) + 1.0, static_cast<double>(n));
  if (bound < 0 || candidates > 1e7) {
    throw Error(ErrorCode::kSearchSpaceTooLarge,
                "(2*" + std::to_string(bound) + "+1)^" + std::to_string(n) + " candidates");
  }
  std::vector<IntVector> out;
  IntVector x(n, -bound);
  while (true) {
    if (is_characteristic(lattice, x)) out.push_back(x);
    std::size_t i = n;
    while (i-- > 0) {
      if (x[i] < bound) {
        ++x[i];
        break;
      }
      x[i] = -bound;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

}  // namespace seifert::oracle
