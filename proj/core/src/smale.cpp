#include "seifert/smale.hpp"

#include "seifert/error.hpp"

namespace seifert {

BigInt smale_from_singular(const SingularSeifertData& data) {
  BigInt twice = 3 * data.sigma + data.cusps;
  if (!is_even(twice)) {
    throw Error(ErrorCode::kParityViolation,
                "3*sigma + cusps = " + twice.get_str() + " is odd; no immersion of S^3 has this data");
  }
  BigInt omega;
  mpz_divexact_ui(omega.get_mpz_t(), twice.get_mpz_t(), 2);
  return omega;
}

BigInt smale_of_projection(const SeifertSurfaceModel& surface) {
  try {
    return smale_from_singular({BigInt(signature(surface)), cup_square(surface.euler())});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kParityViolation) throw;
    throw Error(ErrorCode::kInternalCongruenceViolation,
                "3*sigma + e.e is odd for a characteristic Euler class");
  }
}

bool is_liftable_parity(const BigInt& omega) { return is_even(omega); }

}  // namespace seifert
