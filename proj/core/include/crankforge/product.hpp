#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crankforge/cyclotomic.hpp"
#include "crankforge/qseries.hpp"

namespace crankforge {

/// One factor family ∏_{n≥1} (1 + sign·ζ^zeta_exp·q^(stride·n))^power.
/// A negative power places the factor in the denominator.
struct FactorSpec {
  int sign = -1;
  int zeta_exp = 0;
  int stride = 1;
  int power = 1;

  friend bool operator==(const FactorSpec&, const FactorSpec&) = default;
};

/// Optional (k, j, ℓ, m) annotation carried by theorem-built products.
struct ProductMetadata {
  int k = 0;
  int j = 0;
  int ell = 0;
  int m = 0;
  friend bool operator==(const ProductMetadata&, const ProductMetadata&) = default;
};

/// Symbolic infinite product. Every factor has constant term 1, so the
/// expansion is a well-defined power series in q.
class ProductSpec {
 public:
  ProductSpec() = default;
  explicit ProductSpec(std::vector<FactorSpec> factors);

  /// Appends one factor family; validates stride ≥ 1, power ≠ 0, sign = ±1.
  ProductSpec& add(FactorSpec f);
  /// Appends (1 + sign·ζ^a q^(cn))^e, and for a ≠ 0 also the ζ^-a partner:
  /// the paper-style shorthand (1 ± ζ^{±a} q^n).
  ProductSpec& add_pair(int sign, int a, int power, int stride = 1);
  /// Concatenation of factor lists.
  ProductSpec& append(const ProductSpec& other);

  [[nodiscard]] const std::vector<FactorSpec>& factors() const noexcept { return factors_; }

  /// Net exponent of (1 - q^n) and (1 + q^n) after setting ζ = 1, for
  /// stride-1 factors. Used to confirm a product specializes to
  /// ∏ (1+q^n)^j / (1-q^n)^k.
  [[nodiscard]] int net_minus_power_at_one() const;
  [[nodiscard]] int net_plus_power_at_one() const;

  std::optional<ProductMetadata> metadata;

 private:
  std::vector<FactorSpec> factors_;
};

/// Expansion of the infinite product through q^N. Factors are applied one
/// binomial at a time with early truncation.
QSeries expand_product(const ProductSpec& spec, int depth);

/// Same expansion performed directly in ℤ[ζ]/(Φ_ℓ). Because ζ ↦ ζ_ℓ is a ring
/// morphism this equals specialize_zeta(expand_product(spec, N), ℓ); it is
/// a much cheaper route when only the specialization is needed.
std::vector<CyclotomicElement> expand_product_mod_phi(const ProductSpec& spec, int ell, int depth);

/// ∏ (1 - q^n)^{-1}.
ProductSpec partition_product();
/// ∏ (1 - q^n), the tilde-normalized eta function.
ProductSpec eta_product();
/// ∏ (1 + q^n)^j / (1 - q^n)^k.
ProductSpec pkj_product(int k, int j);
/// ∏ (1 - q^n) / ((1 - ζq^n)(1 - ζ^-1 q^n)), the Andrews–Garvan crank.
ProductSpec crank_product();
/// Crank for k-colored partitions, C(0)^{⌊k/2⌋} ∏ C(a_i z): numerator
/// (1-q^n) iff k is odd, one (1 - ζ^{±a_i} q^n) pair in the denominator per
/// entry of `a`. Requires |a| = ⌊(k+1)/2⌋.
ProductSpec colored_crank_product(int k, const std::vector<int>& a);

/// ∏ (1 - q^n)(1 - ζ^a q^n)(1 - ζ^-a q^n).
ProductSpec theta_tilde_product(int a, int stride = 1);
/// ∏ (1 - q^n)(1 + ζ^a q^n)(1 + ζ^-a q^n), the half-period shifted theta.
ProductSpec theta01_tilde_product(int a, int stride = 1);

QSeries theta_tilde_expansion(int a, int depth);
QSeries theta01_tilde_expansion(int a, int depth);

/// Product side ∏(1-q^n)(1-ζq^n)(1-ζ^{-1}q^{n-1}) of the triple product
/// identity, through q^N.
QSeries jacobi_product_side(int depth);
/// Sum side Σ_k (-1)^k ζ^k q^{k(k+1)/2}, through q^N.
QSeries jacobi_sum_side(int depth);
/// True iff both sides agree coefficient by coefficient through q^N.
bool jacobi_triple_product_check(int depth);

}  // namespace crankforge
