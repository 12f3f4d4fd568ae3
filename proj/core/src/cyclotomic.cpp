#include "crankforge/cyclotomic.hpp"

#include <algorithm>
#include <string>

#include "crankforge/error.hpp"

namespace crankforge {

bool is_prime(long n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime(long ell, const char* what) {
  if (!is_prime(ell)) {
    throw DomainError(std::string(what) + ": modulus " + std::to_string(ell) + " is not prime");
  }
}

CyclotomicElement::CyclotomicElement(int prime) : prime_(prime) {
  require_prime(prime, "CyclotomicElement");
  coords_.resize(static_cast<std::size_t>(prime - 1));
}

CyclotomicElement::CyclotomicElement(int prime, std::vector<mpz_class> coords)
    : prime_(prime), coords_(std::move(coords)) {
  require_prime(prime, "CyclotomicElement");
  if (coords_.size() != static_cast<std::size_t>(prime - 1)) {
    throw DomainError("CyclotomicElement: expected " + std::to_string(prime - 1) + " coordinates");
  }
}

CyclotomicElement CyclotomicElement::from_buckets(int prime, std::span<const mpz_class> buckets) {
  if (buckets.size() != static_cast<std::size_t>(prime)) {
    throw DomainError("CyclotomicElement: expected " + std::to_string(prime) + " residue buckets");
  }
  CyclotomicElement out(prime);
  const mpz_class& top = buckets[prime - 1];
  for (int r = 0; r + 1 < prime; ++r) out.coords_[r] = buckets[r] - top;
  return out;
}

bool CyclotomicElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const mpz_class& c) { return c == 0; });
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& rhs) {
  if (rhs.prime_ != prime_) throw DomainError("CyclotomicElement: mismatched primes");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.prime_ != b.prime_) throw DomainError("CyclotomicElement: mismatched primes");
  const int ell = a.prime_;
  // Product in ℤ[ζ]/(ζ^ℓ - 1) first, then the Φ_ℓ reduction.
  std::vector<mpz_class> buckets(static_cast<std::size_t>(ell));
  for (int i = 0; i + 1 < ell; ++i) {
    if (a.coords_[i] == 0) continue;
    for (int k = 0; k + 1 < ell; ++k) {
      mpz_addmul(buckets[(i + k) % ell].get_mpz_t(), a.coords_[i].get_mpz_t(), b.coords_[k].get_mpz_t());
    }
  }
  return CyclotomicElement::from_buckets(ell, buckets);
}

LaurentPoly phi_poly(int ell) {
  require_prime(ell, "phi_poly");
  std::map<int, mpz_class> terms;
  for (int e = 0; e < ell; ++e) terms[e] = 1;
  return LaurentPoly::from_terms(terms);
}

CyclotomicElement reduce_mod_phi(const LaurentPoly& p, int ell) {
  require_prime(ell, "reduce_mod_phi");
  std::vector<mpz_class> buckets(static_cast<std::size_t>(ell));
  for (const auto& [e, c] : p.terms()) {
    const int r = ((e % ell) + ell) % ell;
    buckets[r] += c;
  }
  return CyclotomicElement::from_buckets(ell, buckets);
}

bool is_divisible_by_phi(const LaurentPoly& p, int ell) { return reduce_mod_phi(p, ell).is_zero(); }

}  // namespace crankforge
