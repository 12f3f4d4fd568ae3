#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crankforge {

/// Exact Laurent polynomial in ζ with arbitrary-precision integer coefficients.
///
/// Storage is dense: `coeffs_[i]` holds the coefficient of ζ^(low_ + i). The
/// representation is canonical: either empty (the zero polynomial) or both
/// the first and last stored coefficients are nonzero. Values are immutable
/// from the caller's point of view except through the compound operators.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(const mpz_class& c);
  static LaurentPoly monomial(const mpz_class& c, int exponent);
  /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
  static LaurentPoly from_terms(const std::map<int, mpz_class>& terms);
  static LaurentPoly of(std::initializer_list<std::pair<int, long>> terms);

  /// Parses the dump notation: space-separated `coeff*z^exp` monomials, or
  /// `0`. Fractional or otherwise non-integral exponents are rejected.
  static LaurentPoly parse(std::string_view text);

  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Lowest/highest exponent with nonzero coefficient. Zero polynomial: 0.
  [[nodiscard]] int min_exponent() const noexcept { return low_; }
  [[nodiscard]] int max_exponent() const noexcept {
    return coeffs_.empty() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1;
  }
  [[nodiscard]] mpz_class coeff(int exponent) const;
  /// Nonzero terms in ascending exponent order.
  [[nodiscard]] std::vector<std::pair<int, mpz_class>> terms() const;
  [[nodiscard]] std::size_t term_count() const;

  /// Value at ζ = 1, i.e. the sum of all coefficients.
  [[nodiscard]] mpz_class sum_coefficients() const;

  /// `*this += sign * ζ^shift * other`, with sign in {+1, -1}.
  /// This is the inner loop of every product expansion.
  void add_shifted(const LaurentPoly& other, int shift, int sign);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const mpz_class& scalar);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  /// Dump notation, ascending exponents, e.g. `1*z^-1 -1*z^0 1*z^1`.
  /// The zero polynomial prints as `0`.
  [[nodiscard]] std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<mpz_class> coeffs_;
};

/// Sum of all coefficients (the specialization ζ = 1).
mpz_class eval_at_one(const LaurentPoly& p);

}  // namespace crankforge
