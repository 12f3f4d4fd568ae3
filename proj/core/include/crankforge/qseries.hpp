#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <set>
#include <vector>

#include "crankforge/cyclotomic.hpp"
#include "crankforge/laurent.hpp"

namespace crankforge {

/// Truncated power series in q with coefficients in ℤ[ζ, ζ^-1]. Holds the
/// coefficients of q^0 … q^N, where N is the truncation.
class QSeries {
 public:
  /// Zero series truncated at `truncation`.
  explicit QSeries(int truncation);
  explicit QSeries(std::vector<LaurentPoly> coeffs);

  static QSeries one(int truncation);
  /// Series with integer (ζ-free) coefficients; missing tail entries are 0.
  static QSeries from_integers(const std::vector<long>& values, int truncation);

  [[nodiscard]] int truncation() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const LaurentPoly& operator[](int d) const { return coeffs_.at(d); }
  [[nodiscard]] const std::vector<LaurentPoly>& coeffs() const noexcept { return coeffs_; }
  void set(int d, LaurentPoly value) { coeffs_.at(d) = std::move(value); }

  /// Re-truncates to a smaller depth.
  [[nodiscard]] QSeries truncated(int depth) const;
  [[nodiscard]] QSeries inverse() const;

  /// In place: *this *= (1 + sign·ζ^zeta_exp·q^stride).
  void mul_binomial(int sign, int zeta_exp, int stride);
  /// In place: *this /= (1 + sign·ζ^zeta_exp·q^stride).
  void div_binomial(int sign, int zeta_exp, int stride);

  QSeries& operator+=(const QSeries& rhs);
  QSeries& operator-=(const QSeries& rhs);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  /// Cauchy product; both operands must share the truncation.
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b) = default;

 private:
  std::vector<LaurentPoly> coeffs_;
};

QSeries series_mul(const QSeries& a, const QSeries& b);
/// Requires constant term exactly 1; b_d = -Σ_{i=1..d} a_i b_{d-i}.
QSeries series_inverse(const QSeries& a);

/// {d ≤ N : [q^d] s ≠ 0}.
std::set<int> support_exponents(const QSeries& s);
/// ζ = 1 applied to every coefficient.
std::vector<mpz_class> specialize_one(const QSeries& s);
/// ζ = ζ_ℓ applied to every coefficient (exact, via reduction mod Φ_ℓ).
std::vector<CyclotomicElement> specialize_zeta(const QSeries& s, int ell);

/// Series dump: one line per coefficient, `d<TAB>polynomial`.
void write_series_dump(std::ostream& out, const QSeries& s);
QSeries read_series_dump(std::istream& in);

}  // namespace crankforge
