#include "crankforge/product.hpp"

#include <string>

#include "crankforge/error.hpp"

namespace crankforge {

ProductSpec::ProductSpec(std::vector<FactorSpec> factors) {
  for (const auto& f : factors) add(f);
}

ProductSpec& ProductSpec::add(FactorSpec f) {
  if (f.sign != 1 && f.sign != -1) throw DomainError("FactorSpec: sign must be +1 or -1");
  if (f.stride < 1) throw DomainError("FactorSpec: stride must be at least 1");
  if (f.power == 0) throw DomainError("FactorSpec: power must be nonzero");
  factors_.push_back(f);
  return *this;
}

ProductSpec& ProductSpec::add_pair(int sign, int a, int power, int stride) {
  add({sign, a, stride, power});
  add({sign, -a, stride, power});
  return *this;
}

ProductSpec& ProductSpec::append(const ProductSpec& other) {
  for (const auto& f : other.factors_) add(f);
  return *this;
}

int ProductSpec::net_minus_power_at_one() const {
  int total = 0;
  for (const auto& f : factors_) {
    if (f.stride == 1 && f.sign == -1) total += f.power;
  }
  return total;
}

int ProductSpec::net_plus_power_at_one() const {
  int total = 0;
  for (const auto& f : factors_) {
    if (f.stride == 1 && f.sign == 1) total += f.power;
  }
  return total;
}

QSeries expand_product(const ProductSpec& spec, int depth) {
  if (depth < 0) throw DomainError("expand_product: negative depth");
  QSeries s = QSeries::one(depth);
  for (const auto& f : spec.factors()) {
    for (int n = 1; f.stride * n <= depth; ++n) {
      const int step = f.stride * n;
      if (f.power > 0) {
        for (int e = 0; e < f.power; ++e) s.mul_binomial(f.sign, f.zeta_exp, step);
      } else {
        for (int e = 0; e < -f.power; ++e) s.div_binomial(f.sign, f.zeta_exp, step);
      }
    }
  }
  return s;
}

namespace {

/// Series over ℤ[ζ]/(ζ^ℓ - 1): row d holds ℓ residue buckets for q^d.
class BucketSeries {
 public:
  BucketSeries(int ell, int depth)
      : ell_(ell), depth_(depth), cells_(static_cast<std::size_t>(ell) * (depth + 1)) {
    cells_[0] = 1;
  }

  void mul_binomial(int sign, int shift, int stride) {
    for (int d = depth_; d >= stride; --d) accumulate(d, d - stride, shift, sign);
  }

  void div_binomial(int sign, int shift, int stride) {
    for (int d = stride; d <= depth_; ++d) accumulate(d, d - stride, shift, -sign);
  }

  [[nodiscard]] std::span<const mpz_class> row(int d) const {
    return {cells_.data() + static_cast<std::size_t>(d) * ell_, static_cast<std::size_t>(ell_)};
  }

 private:
  void accumulate(int dst_row, int src_row, int shift, int sign) {
    mpz_class* dst = cells_.data() + static_cast<std::size_t>(dst_row) * ell_;
    const mpz_class* src = cells_.data() + static_cast<std::size_t>(src_row) * ell_;
    const int r0 = ((shift % ell_) + ell_) % ell_;
    for (int r = 0; r < ell_; ++r) {
      const int t = (r + r0) % ell_;
      if (sign > 0) {
        mpz_add(dst[t].get_mpz_t(), dst[t].get_mpz_t(), src[r].get_mpz_t());
      } else {
        mpz_sub(dst[t].get_mpz_t(), dst[t].get_mpz_t(), src[r].get_mpz_t());
      }
    }
  }

  int ell_;
  int depth_;
  std::vector<mpz_class> cells_;
};

}  // namespace

std::vector<CyclotomicElement> expand_product_mod_phi(const ProductSpec& spec, int ell, int depth) {
  require_prime(ell, "expand_product_mod_phi");
  if (depth < 0) throw DomainError("expand_product_mod_phi: negative depth");
  BucketSeries s(ell, depth);
  for (const auto& f : spec.factors()) {
    for (int n = 1; f.stride * n <= depth; ++n) {
      const int step = f.stride * n;
      if (f.power > 0) {
        for (int e = 0; e < f.power; ++e) s.mul_binomial(f.sign, f.zeta_exp, step);
      } else {
        for (int e = 0; e < -f.power; ++e) s.div_binomial(f.sign, f.zeta_exp, step);
      }
    }
  }
  std::vector<CyclotomicElement> out;
  out.reserve(static_cast<std::size_t>(depth) + 1);
  for (int d = 0; d <= depth; ++d) out.push_back(CyclotomicElement::from_buckets(ell, s.row(d)));
  return out;
}

ProductSpec partition_product() { return ProductSpec({{-1, 0, 1, -1}}); }

ProductSpec eta_product() { return ProductSpec({{-1, 0, 1, 1}}); }

ProductSpec pkj_product(int k, int j) {
  if (k < 0 || j < 0) throw DomainError("pkj_product: k and j must be nonnegative");
  ProductSpec p;
  if (j > 0) p.add({+1, 0, 1, j});
  if (k > 0) p.add({-1, 0, 1, -k});
  return p;
}

ProductSpec crank_product() {
  ProductSpec p;
  p.add({-1, 0, 1, 1});
  p.add_pair(-1, 1, -1);
  return p;
}

ProductSpec colored_crank_product(int k, const std::vector<int>& a) {
  if (k < 1) throw DomainError("colored_crank_product: k must be positive");
  if (static_cast<int>(a.size()) != (k + 1) / 2) {
    throw DomainError("colored_crank_product: need floor((k+1)/2) = " + std::to_string((k + 1) / 2) +
                      " exponents");
  }
  // C(0)^{⌊k/2⌋} contributes 1/(1-q^n) per copy, which cancels all but
  // k mod 2 of the (1-q^n) numerators coming from the C(a_i z) factors.
  ProductSpec p;
  if (k % 2 == 1) p.add({-1, 0, 1, 1});
  for (int ai : a) p.add_pair(-1, ai, -1);
  return p;
}

ProductSpec theta_tilde_product(int a, int stride) {
  ProductSpec p;
  p.add({-1, 0, stride, 1});
  p.add_pair(-1, a, 1, stride);
  return p;
}

ProductSpec theta01_tilde_product(int a, int stride) {
  ProductSpec p;
  p.add({-1, 0, stride, 1});
  p.add_pair(+1, a, 1, stride);
  return p;
}

QSeries theta_tilde_expansion(int a, int depth) { return expand_product(theta_tilde_product(a), depth); }

QSeries theta01_tilde_expansion(int a, int depth) {
  return expand_product(theta01_tilde_product(a), depth);
}

QSeries jacobi_product_side(int depth) {
  QSeries s = expand_product(theta_tilde_product(1), depth);
  // The n = 1 factor of (1 - ζ^{-1} q^{n-1}) is the constant (1 - ζ^{-1}).
  QSeries out(depth);
  for (int d = 0; d <= depth; ++d) {
    LaurentPoly c = s[d];
    c.add_shifted(s[d], -1, -1);
    out.set(d, std::move(c));
  }
  return out;
}

QSeries jacobi_sum_side(int depth) {
  if (depth < 0) throw DomainError("jacobi_sum_side: negative depth");
  std::vector<std::map<int, mpz_class>> terms(static_cast<std::size_t>(depth) + 1);
  for (long k = 0; k * (k + 1) / 2 <= depth; ++k) {
    for (const long kk : {k, -k - 1}) {
      const long d = kk * (kk + 1) / 2;
      terms[d][static_cast<int>(kk)] += (kk % 2 == 0) ? 1 : -1;
    }
  }
  std::vector<LaurentPoly> coeffs;
  coeffs.reserve(terms.size());
  for (const auto& t : terms) coeffs.push_back(LaurentPoly::from_terms(t));
  return QSeries(std::move(coeffs));
}

bool jacobi_triple_product_check(int depth) { return jacobi_product_side(depth) == jacobi_sum_side(depth); }

}  // namespace crankforge
