#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "crankforge/laurent.hpp"

namespace crankforge {

/// Trial-division primality test; adequate for the small moduli used here.
bool is_prime(long n) noexcept;

/// Throws DomainError naming `what` unless `ell` is prime.
void require_prime(long ell, const char* what);

/// Element of ℤ[ζ]/(Φ_ℓ) for prime ℓ, stored in the basis 1, ζ, …, ζ^(ℓ-2).
/// The basis is free, so two elements are equal iff their coordinates are.
class CyclotomicElement {
 public:
  /// Zero element of ℤ[ζ]/(Φ_ℓ).
  explicit CyclotomicElement(int prime);
  CyclotomicElement(int prime, std::vector<mpz_class> coords);

  /// Reduces an element of ℤ[ζ]/(ζ^ℓ - 1), given by ℓ residue buckets
  /// (bucket r holds the coefficient of ζ^r), into the Φ_ℓ quotient.
  static CyclotomicElement from_buckets(int prime, std::span<const mpz_class> buckets);

  [[nodiscard]] int prime() const noexcept { return prime_; }
  [[nodiscard]] const std::vector<mpz_class>& coords() const noexcept { return coords_; }
  [[nodiscard]] bool is_zero() const;

  CyclotomicElement& operator+=(const CyclotomicElement& rhs);
  friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) {
    return a += b;
  }
  /// Schoolbook product followed by reduction.
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) = default;

 private:
  int prime_;
  std::vector<mpz_class> coords_;
};

/// 1 + ζ + … + ζ^(ℓ-1), the ℓ-th cyclotomic polynomial for prime ℓ.
LaurentPoly phi_poly(int ell);

/// Folds exponents mod ℓ (ζ^ℓ = 1), then rewrites ζ^(ℓ-1) = -(1 + … + ζ^(ℓ-2)).
CyclotomicElement reduce_mod_phi(const LaurentPoly& p, int ell);

/// True iff Φ_ℓ divides p in ℤ[ζ, ζ^-1], i.e. p vanishes at every primitive
/// ℓ-th root of unity.
bool is_divisible_by_phi(const LaurentPoly& p, int ell);

}  // namespace crankforge
