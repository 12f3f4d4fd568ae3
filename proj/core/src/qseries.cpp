#include "crankforge/qseries.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "crankforge/error.hpp"

namespace crankforge {

QSeries::QSeries(int truncation) {
  if (truncation < 0) throw DomainError("QSeries: negative truncation");
  coeffs_.resize(static_cast<std::size_t>(truncation) + 1);
}

QSeries::QSeries(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("QSeries: needs at least the q^0 coefficient");
}

QSeries QSeries::one(int truncation) {
  QSeries s(truncation);
  s.coeffs_[0] = LaurentPoly::constant(1);
  return s;
}

QSeries QSeries::from_integers(const std::vector<long>& values, int truncation) {
  QSeries s(truncation);
  for (std::size_t d = 0; d < values.size() && d <= static_cast<std::size_t>(truncation); ++d) {
    s.coeffs_[d] = LaurentPoly::constant(values[d]);
  }
  return s;
}

QSeries QSeries::truncated(int depth) const {
  if (depth < 0 || depth > truncation()) throw DomainError("QSeries::truncated: depth out of range");
  return QSeries(std::vector<LaurentPoly>(coeffs_.begin(), coeffs_.begin() + depth + 1));
}

void QSeries::mul_binomial(int sign, int zeta_exp, int stride) {
  if (stride < 1) throw DomainError("mul_binomial: stride must be positive");
  // Descending so each source coefficient is read before it is updated.
  for (int d = truncation(); d >= stride; --d) {
    coeffs_[d].add_shifted(coeffs_[d - stride], zeta_exp, sign);
  }
}

void QSeries::div_binomial(int sign, int zeta_exp, int stride) {
  if (stride < 1) throw DomainError("div_binomial: stride must be positive");
  // b_d = a_d - sign·ζ^a·b_{d-stride}, ascending.
  for (int d = stride; d <= truncation(); ++d) {
    coeffs_[d].add_shifted(coeffs_[d - stride], zeta_exp, -sign);
  }
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
  if (rhs.truncation() != truncation()) throw DomainError("QSeries: mismatched truncations");
  for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] += rhs.coeffs_[d];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
  if (rhs.truncation() != truncation()) throw DomainError("QSeries: mismatched truncations");
  for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] -= rhs.coeffs_[d];
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  if (a.truncation() != b.truncation()) throw DomainError("series_mul: mismatched truncations");
  const int n = a.truncation();
  QSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int k = 0; i + k <= n; ++k) {
      if (b.coeffs_[k].is_zero()) continue;
      out.coeffs_[i + k] += a.coeffs_[i] * b.coeffs_[k];
    }
  }
  return out;
}

QSeries QSeries::inverse() const {
  if (!(coeffs_[0] == LaurentPoly::constant(1))) {
    throw DomainError("series_inverse: constant term must be 1");
  }
  const int n = truncation();
  QSeries b(n);
  b.coeffs_[0] = LaurentPoly::constant(1);
  for (int d = 1; d <= n; ++d) {
    LaurentPoly acc;
    for (int i = 1; i <= d; ++i) {
      if (coeffs_[i].is_zero() || b.coeffs_[d - i].is_zero()) continue;
      acc -= coeffs_[i] * b.coeffs_[d - i];
    }
    b.coeffs_[d] = std::move(acc);
  }
  return b;
}

QSeries series_mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries series_inverse(const QSeries& a) { return a.inverse(); }

std::set<int> support_exponents(const QSeries& s) {
  std::set<int> out;
  for (int d = 0; d <= s.truncation(); ++d) {
    if (!s[d].is_zero()) out.insert(d);
  }
  return out;
}

std::vector<mpz_class> specialize_one(const QSeries& s) {
  std::vector<mpz_class> out;
  out.reserve(s.coeffs().size());
  for (const auto& c : s.coeffs()) out.push_back(eval_at_one(c));
  return out;
}

std::vector<CyclotomicElement> specialize_zeta(const QSeries& s, int ell) {
  require_prime(ell, "specialize_zeta");
  std::vector<CyclotomicElement> out;
  out.reserve(s.coeffs().size());
  for (const auto& c : s.coeffs()) out.push_back(reduce_mod_phi(c, ell));
  return out;
}

void write_series_dump(std::ostream& out, const QSeries& s) {
  for (int d = 0; d <= s.truncation(); ++d) out << d << '\t' << s[d].to_string() << '\n';
}

QSeries read_series_dump(std::istream& in) {
  std::vector<LaurentPoly> coeffs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw DomainError("series dump: missing tab in '" + line + "'");
    if (std::stoi(line.substr(0, tab)) != static_cast<int>(coeffs.size())) {
      throw DomainError("series dump: indices must run 0, 1, 2, ...");
    }
    coeffs.push_back(LaurentPoly::parse(std::string_view(line).substr(tab + 1)));
  }
  return QSeries(std::move(coeffs));
}

}  // namespace crankforge
