#include "seifert/realize.hpp"

#include <cstdlib>
#include <limits>
#include <utility>
#include <vector>

#include "seifert/error.hpp"

namespace seifert {
namespace {

std::size_t to_count(const BigInt& v) {
  if (!v.fits_ulong_p()) throw std::length_error("block count " + v.get_str() + " out of range");
  return v.get_ui();
}

SeifertSurfaceModel pq_blocks(std::size_t p_count, std::size_t q_count) {
  const std::size_t n = p_count + q_count;
  std::vector<std::vector<BigInt>> g(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = i < p_count ? 1 : -1;
  std::string label;
  if (p_count > 0) label += "P^" + std::to_string(p_count);
  if (q_count > 0) label += (label.empty() ? "" : "♮") + std::string("Q^") + std::to_string(q_count);
  return make_surface(make_lattice(g), IntVector(n, 1), label);
}

RealizationPlan make_plan(const SeifertSurfaceModel& base, std::size_t p_count, std::size_t q_count) {
  if (p_count == 0 && q_count == 0) return {base, 0, 0, base};
  return {base, p_count, q_count, boundary_connected_sum(base, pq_blocks(p_count, q_count))};
}

}  // namespace

RealizationPlan realize_hopf(const SeifertSurfaceModel& base, const BigInt& target_hopf) {
  const BigInt diff = target_hopf - hopf_invariant(base);
  if (diff > 0) return make_plan(base, 0, to_count(diff));
  return make_plan(base, to_count(-diff), 0);
}

RealizationPlan realize_signature(const SeifertSurfaceModel& base, const BigInt& target_sigma) {
  const BigInt diff = target_sigma - signature(base);
  if (diff > 0) return make_plan(base, to_count(diff), 0);
  return make_plan(base, 0, to_count(-diff));
}

CompressionData solve_compression(const BigInt& omega_target, const BigInt& smale_target) {
  if (!is_even(smale_target)) {
    throw Error(ErrorCode::kOddSmaleInvariant,
                "Smale invariant " + smale_target.get_str() +
                    " is odd; such an immersion is not the projection of any embedding");
  }
  BigInt twice_a = smale_target - 4 * omega_target;
  BigInt a;
  mpz_divexact_ui(a.get_mpz_t(), twice_a.get_mpz_t(), 2);
  return {a, a + 8 * omega_target};
}

SeifertSurfaceModel realize_compression(const BigInt& omega_target, const BigInt& smale_target) {
  const auto data = solve_compression(omega_target, smale_target);
  auto by_sigma = realize_signature(s2xs2(omega_target, 1), data.a);
  // Omega is fixed, so sigma = A already forces H = -B and this step is a no-op.
  return realize_hopf(by_sigma.result, -data.b).result;
}

namespace {

// Orthogonal summands of the form: owning component per index, the smallest
// index of each component, and each component's definiteness (+1, -1, or 0).
struct ComponentInfo {
  std::vector<std::size_t> component_of;
  std::vector<std::size_t> first_index;
  std::vector<int> definite;
};

// Depth-first search over one sup-norm shell in lexicographic order.
template <typename Int>
class ShellSearch {
 public:
  ShellSearch(const std::vector<std::vector<Int>>& gram, const std::vector<int>& parity, Int target,
              const ComponentInfo& components)
      : g_(gram), parity_(parity), target_(std::move(target)), n_(gram.size()) {
    // Bounds on the not-yet-assigned part of x^T G x, in units of shell^2.
    // "open" indices belong to a component already entered by the prefix; whole
    // components past the prefix are "closed" and bounded via their definiteness.
    const auto& comp = components.component_of;
    const std::size_t ncomp = components.first_index.size();
    std::vector<Int> comp_hi(ncomp, Int(0)), comp_lo(ncomp, Int(0));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (comp[i] != comp[j]) continue;
        if (i == j) {
          if (g_[i][i] > 0) comp_hi[comp[i]] += g_[i][i];
          else comp_lo[comp[i]] += g_[i][i];
        } else {
          comp_hi[comp[i]] += abs_of(g_[i][j]);
          comp_lo[comp[i]] -= abs_of(g_[i][j]);
        }
      }
    }
    for (std::size_t c = 0; c < ncomp; ++c) {
      if (components.definite[c] < 0) comp_hi[c] = 0;
      if (components.definite[c] > 0) comp_lo[c] = 0;
    }
    hi_.assign(n_ + 1, Int(0));
    lo_.assign(n_ + 1, Int(0));
    for (std::size_t k = 0; k < n_; ++k) {
      for (std::size_t c = 0; c < ncomp; ++c) {
        if (components.first_index[c] >= k) {
          hi_[k] += comp_hi[c];
          lo_[k] += comp_lo[c];
        }
      }
      for (std::size_t i = k; i < n_; ++i) {
        if (components.first_index[comp[i]] >= k) continue;
        for (std::size_t j = k; j < n_; ++j) {
          if (comp[j] != comp[i]) continue;
          if (i == j) {
            if (g_[i][i] > 0) hi_[k] += g_[i][i];
            else lo_[k] += g_[i][i];
          } else {
            hi_[k] += abs_of(g_[i][j]);
            lo_[k] -= abs_of(g_[i][j]);
          }
        }
      }
    }
  }

  std::optional<std::vector<long>> run(long shell) {
    shell_ = shell;
    can_hit_.assign(n_ + 1, false);
    for (std::size_t k = n_; k-- > 0;) can_hit_[k] = can_hit_[k + 1] || (parity_[k] == (shell & 1));
    if (n_ == 0) {
      if (shell == 0 && target_ == 0) return std::vector<long>{};
      return std::nullopt;
    }
    if (!can_hit_[0]) return std::nullopt;
    x_.assign(n_, 0);
    lin_.assign(n_ + 1, std::vector<Int>(n_, Int(0)));
    if (descend(0, Int(0), false)) return x_;
    return std::nullopt;
  }

 private:
  static Int abs_of(const Int& v) { return v < 0 ? Int(-v) : v; }

  bool descend(std::size_t k, const Int& partial, bool hit) {
    if (k == n_) return hit && partial == target_;
    if (!hit && !can_hit_[k]) return false;

    // remaining = 2 <lin, x_R> + x_R^T G_RR x_R must equal target - partial.
    const Int s(shell_);
    Int lin_abs = 0;
    for (std::size_t j = k; j < n_; ++j) lin_abs += abs_of(lin_[k][j]);
    const Int need = target_ - partial;
    if (need > s * s * hi_[k] + 2 * s * lin_abs) return false;
    if (need < s * s * lo_[k] - 2 * s * lin_abs) return false;

    // Coordinate order 0, 1, -1, 2, -2, ... restricted to the parity class.
    for (long mag = parity_[k]; mag <= shell_; mag += 2) {
      if (try_value(k, mag, partial, hit)) return true;
      if (mag != 0 && try_value(k, -mag, partial, hit)) return true;
    }
    return false;
  }

  bool try_value(std::size_t k, long v, const Int& partial, bool hit) {
    x_[k] = v;
    const Int iv(v);
    Int next = partial + 2 * iv * lin_[k][k] + g_[k][k] * iv * iv;
    auto& lin_next = lin_[k + 1];
    for (std::size_t j = k + 1; j < n_; ++j) lin_next[j] = lin_[k][j] + g_[j][k] * iv;
    return descend(k + 1, next, hit || std::labs(v) == shell_);
  }

  const std::vector<std::vector<Int>>& g_;
  const std::vector<int>& parity_;
  Int target_;
  std::size_t n_;
  long shell_ = 0;
  std::vector<Int> hi_, lo_;
  std::vector<bool> can_hit_;
  std::vector<long> x_;
  std::vector<std::vector<Int>> lin_;  // lin_[k][j] = sum_{i<k} G_ji x_i
};

template <typename Int>
std::optional<std::vector<long>> search_shells(const std::vector<std::vector<Int>>& gram,
                                               const std::vector<int>& parity, const Int& target,
                                               const ComponentInfo& components, unsigned long bound) {
  ShellSearch<Int> search(gram, parity, target, components);
  for (unsigned long s = 0; s <= bound; ++s) {
    if (auto hit = search.run(static_cast<long>(s))) return hit;
  }
  return std::nullopt;
}

}  // namespace

std::optional<CharVector> realize_form(const IntegralLattice& form, const BigInt& omega_target,
                                       unsigned long bound) {
  const auto basis = characteristic_basis(form);  // throws NonUnimodular
  const std::size_t n = form.rank();
  // Unimodular => G is invertible mod 2, so the parity of every coordinate is fixed.
  if (!basis.kernel.empty()) {
    throw Error(ErrorCode::kInternalCongruenceViolation, "nontrivial mod-2 kernel for a unimodular form");
  }
  std::vector<int> parity(n);
  for (std::size_t i = 0; i < n; ++i) parity[i] = basis.particular.coords()[i] == 0 ? 0 : 1;
  if (bound > static_cast<unsigned long>(std::numeric_limits<long>::max() / 4)) {
    throw Error(ErrorCode::kSearchSpaceTooLarge, "bound " + std::to_string(bound) + " too large");
  }

  const BigInt target = BigInt(signature(form)) + 8 * omega_target;

  ComponentInfo components;
  components.component_of.resize(n);
  for (const auto& idx : orthogonal_components(form)) {
    const std::size_t c = components.first_index.size();
    for (std::size_t i : idx) components.component_of[i] = c;
    components.first_index.push_back(idx.front());
    const long sig = signature(restrict_to(form, idx));
    const long r = static_cast<long>(idx.size());
    components.definite.push_back(sig == r ? 1 : sig == -r ? -1 : 0);
  }

  // Fast path when every intermediate value provably fits in 64 bits.
  BigInt max_entry = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) if (abs(form(i, j)) > max_entry) max_entry = abs(form(i, j));
  const BigInt worst = BigInt(8) * BigInt(n + 1) * BigInt(n + 1) * max_entry * BigInt(bound + 1) *
                       BigInt(bound + 1);
  std::optional<std::vector<long>> found;
  if (worst.fits_slong_p() && BigInt(abs(target)) < worst) {
    std::vector<std::vector<long long>> g(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g[i][j] = form(i, j).get_si();
    found = search_shells<long long>(g, parity, target.get_si(), components, bound);
  } else if (!worst.fits_slong_p()) {
    found = search_shells<BigInt>(form.rows(), parity, target, components, bound);
  }
  // Otherwise |target| exceeds every reachable |e.e| in the box.
  if (!found) return std::nullopt;
  IntVector coords(found->begin(), found->end());
  return CharVector(form, std::move(coords));
}

}  // namespace seifert
