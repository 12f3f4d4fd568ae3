#include "crankforge/laurent.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "crankforge/error.hpp"

namespace crankforge {

LaurentPoly LaurentPoly::constant(const mpz_class& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const mpz_class& c, int exponent) {
  LaurentPoly p;
  if (c != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, mpz_class>& terms) {
  LaurentPoly p;
  if (terms.empty()) return p;
  const int lo = terms.begin()->first;
  const int hi = terms.rbegin()->first;
  p.low_ = lo;
  p.coeffs_.resize(static_cast<std::size_t>(hi - lo) + 1);
  for (const auto& [e, c] : terms) p.coeffs_[e - lo] += c;
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::of(std::initializer_list<std::pair<int, long>> terms) {
  std::map<int, mpz_class> m;
  for (const auto& [e, c] : terms) m[e] += c;
  return from_terms(m);
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw DomainError("invalid exponent in monomial '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::map<int, mpz_class> terms;
  std::istringstream in{std::string(text)};
  std::string token;
  bool any = false;
  while (in >> token) {
    any = true;
    if (token == "0") continue;
    const auto star = token.find('*');
    if (star == std::string::npos) throw DomainError("expected coeff*z^exp, got '" + token + "'");
    const std::string coeff_text = token.substr(0, star);
    const std::string_view rest = std::string_view(token).substr(star + 1);
    if (rest.substr(0, 2) != "z^") throw DomainError("expected coeff*z^exp, got '" + token + "'");
    const int exponent = parse_int(rest.substr(2), token);
    mpz_class c;
    const char* digits = coeff_text.c_str();
    if (*digits == '+') ++digits;
    if (coeff_text.empty() || c.set_str(digits, 10) != 0) {
      throw DomainError("invalid coefficient in monomial '" + token + "'");
    }
    terms[exponent] += c;
  }
  if (!any) throw DomainError("empty polynomial text");
  return from_terms(terms);
}

mpz_class LaurentPoly::coeff(int exponent) const {
  if (coeffs_.empty() || exponent < low_ || exponent > max_exponent()) return 0;
  return coeffs_[exponent - low_];
}

std::vector<std::pair<int, mpz_class>> LaurentPoly::terms() const {
  std::vector<std::pair<int, mpz_class>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c != 0; }));
}

mpz_class LaurentPoly::sum_coefficients() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

void LaurentPoly::trim() {
  std::size_t front = 0;
  while (front < coeffs_.size() && coeffs_[front] == 0) ++front;
  if (front == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t back = coeffs_.size();
  while (coeffs_[back - 1] == 0) --back;
  coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(back), coeffs_.end());
  if (front > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(front));
    low_ += static_cast<int>(front);
  }
}

void LaurentPoly::add_shifted(const LaurentPoly& other, int shift, int sign) {
  if (other.coeffs_.empty()) return;
  const int olo = other.low_ + shift;
  const int ohi = other.max_exponent() + shift;
  if (coeffs_.empty()) {
    low_ = olo;
    coeffs_.resize(other.coeffs_.size());
  } else {
    const int lo = std::min(low_, olo);
    const int hi = std::max(max_exponent(), ohi);
    if (lo < low_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), mpz_class());
      low_ = lo;
    }
    if (static_cast<int>(coeffs_.size()) < hi - low_ + 1) {
      coeffs_.resize(static_cast<std::size_t>(hi - low_) + 1);
    }
  }
  mpz_class* dst = coeffs_.data() + (olo - low_);
  const std::size_t count = other.coeffs_.size();
  if (sign > 0) {
    for (std::size_t i = 0; i < count; ++i) mpz_add(dst[i].get_mpz_t(), dst[i].get_mpz_t(), other.coeffs_[i].get_mpz_t());
  } else {
    for (std::size_t i = 0; i < count; ++i) mpz_sub(dst[i].get_mpz_t(), dst[i].get_mpz_t(), other.coeffs_[i].get_mpz_t());
  }
  // Cancellation can only expose zeros at the ends of the touched window.
  if (coeffs_.front() == 0 || coeffs_.back() == 0) trim();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  add_shifted(rhs, 0, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  add_shifted(rhs, 0, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.low_ = a.low_ + b.low_;
  out.coeffs_.resize(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
      mpz_addmul(out.coeffs_[i + k].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[k].get_mpz_t());
    }
  }
  out.trim();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += coeffs_[i].get_str();
    out += "*z^";
    out += std::to_string(low_ + static_cast<int>(i));
  }
  return out;
}

mpz_class eval_at_one(const LaurentPoly& p) { return p.sum_coefficients(); }

}  // namespace crankforge
