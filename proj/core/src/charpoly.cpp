#include <cassert>
#include <string>

#include "seifert/error.hpp"
#include "seifert/lattice.hpp"

namespace seifert {

std::vector<BigInt> characteristic_polynomial(const IntegralLattice& lattice) {
  // Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(G M_k) / k, M_{k+1} = G M_k + c_{n-k} I.
  // Each division by k is exact over Z.
  const std::size_t n = lattice.rank();
  std::vector<BigInt> coeffs(n + 1);  // coeffs[i] multiplies x^{n-i}
  coeffs[0] = 1;
  if (n == 0) return coeffs;

  std::vector<BigInt> m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  std::vector<BigInt> gm(n * n);
  BigInt acc;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        acc = 0;
        for (std::size_t l = 0; l < n; ++l) {
          if (lattice(i, l) != 0) acc += lattice(i, l) * m[l * n + j];
        }
        gm[i * n + j] = acc;
      }
    }
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += gm[i * n + i];
    BigInt ck;
    mpz_divexact_ui(ck.get_mpz_t(), trace.get_mpz_t(), k);
    ck = -ck;
    coeffs[k] = ck;
    if (k < n) {
      m.swap(gm);
      for (std::size_t i = 0; i < n; ++i) m[i * n + i] += ck;
    }
  }
  return coeffs;
}

namespace {

int sign_changes(const std::vector<BigInt>& seq) {
  int changes = 0;
  int last = 0;
  for (const auto& c : seq) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

namespace {

long connected_signature(const IntegralLattice& lattice) {
  const std::size_t n = lattice.rank();
  if (n == 1) {
    if (lattice(0, 0) == 0) throw Error(ErrorCode::kSingularForm, "determinant is zero");
    return sgn(lattice(0, 0));
  }
  auto coeffs = characteristic_polynomial(lattice);
  if (coeffs[n] == 0) throw Error(ErrorCode::kSingularForm, "determinant is zero");

  // Real-rooted, so Descartes' bound is attained for both x and -x.
  const int positive = sign_changes(coeffs);
  for (std::size_t i = 0; i <= n; ++i) {
    if ((n - i) % 2 == 1) coeffs[i] = -coeffs[i];
  }
  const int negative = sign_changes(coeffs);
  assert(static_cast<std::size_t>(positive + negative) == n);
  return static_cast<long>(positive) - static_cast<long>(negative);
}

}  // namespace

long signature(const IntegralLattice& lattice) {
  long total = 0;
  for (const auto& comp : orthogonal_components(lattice)) {
    total += comp.size() == lattice.rank() ? connected_signature(lattice)
                                           : connected_signature(restrict_to(lattice, comp));
  }
  return total;
}

}  // namespace seifert
