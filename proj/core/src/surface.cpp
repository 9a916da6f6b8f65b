#include "seifert/surface.hpp"

#include <utility>

#include "seifert/error.hpp"

namespace seifert {

SeifertSurfaceModel make_surface(const IntegralLattice& form, IntVector euler, std::string label) {
  if (euler.size() != form.rank()) {
    throw Error(ErrorCode::kDimensionMismatch, "euler vector has length " + std::to_string(euler.size()) +
                                                   " but the form has rank " + std::to_string(form.rank()));
  }
  if (!is_unimodular(form)) {
    throw Error(ErrorCode::kNonUnimodular,
                "intersection form has determinant " + determinant(form).get_str() + ", expected +-1");
  }
  return SeifertSurfaceModel(CharVector(form, std::move(euler)), std::move(label));
}

long signature(const SeifertSurfaceModel& surface) { return signature(surface.form()); }

BigInt hopf_invariant(const SeifertSurfaceModel& surface) { return -cup_square(surface.euler()); }

BigInt haefliger_invariant(const SeifertSurfaceModel& surface) {
  BigInt numerator = BigInt(signature(surface)) + hopf_invariant(surface);
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), 8)) {
    throw Error(ErrorCode::kInternalCongruenceViolation,
                "sigma + H = " + numerator.get_str() + " is not divisible by 8");
  }
  BigInt omega;
  mpz_divexact_ui(omega.get_mpz_t(), numerator.get_mpz_t(), 8);
  return -omega;
}

SeifertSurfaceModel boundary_connected_sum(const SeifertSurfaceModel& a, const SeifertSurfaceModel& b) {
  IntVector euler = a.euler().coords();
  euler.insert(euler.end(), b.euler().coords().begin(), b.euler().coords().end());
  std::string label = a.label().empty() ? b.label()
                      : b.label().empty() ? a.label()
                                          : a.label() + "♮" + b.label();
  // Block sums of unimodular forms stay unimodular; only the characteristic check reruns.
  return SeifertSurfaceModel(CharVector(direct_sum(a.form(), b.form()), std::move(euler)), std::move(label));
}

SeifertSurfaceModel reversed(const SeifertSurfaceModel& surface) {
  return make_surface(surface.form().negated(), surface.euler().coords(), "-(" + surface.label() + ")");
}

SeifertSurfaceModel disk_surface() { return make_surface(IntegralLattice(), {}, ""); }

SeifertSurfaceModel s2xs2(const BigInt& a, const BigInt& b) {
  return make_surface(hyperbolic(), {BigInt(2 * a), BigInt(2 * b)},
                      "s2xs2(" + a.get_str() + "," + b.get_str() + ")");
}

SeifertSurfaceModel cp2(const BigInt& k) {
  return make_surface(one(Sign::kPositive), {BigInt(2 * k + 1)}, "cp2(" + k.get_str() + ")");
}

SeifertSurfaceModel cp2bar(const BigInt& k) {
  return make_surface(one(Sign::kNegative), {BigInt(2 * k + 1)}, "cp2bar(" + k.get_str() + ")");
}

SeifertSurfaceModel kummer(const BigInt& a, const BigInt& b) {
  const auto form = direct_sum({e8(Sign::kNegative), e8(Sign::kNegative), hyperbolic(), hyperbolic(), hyperbolic()});
  IntVector euler(form.rank(), 0);
  euler[form.rank() - 2] = 2 * a;
  euler[form.rank() - 1] = 2 * b;
  return make_surface(form, std::move(euler), "kummer(" + a.get_str() + "," + b.get_str() + ")");
}

SeifertSurfaceModel p_block() {
  auto s = cp2(0);
  return make_surface(s.form(), s.euler().coords(), "P");
}

SeifertSurfaceModel q_block() {
  auto s = cp2bar(0);
  return make_surface(s.form(), s.euler().coords(), "Q");
}

}  // namespace seifert
