#include "crankforge/congruence.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <string>

#include "crankforge/error.hpp"
#include "crankforge/partitions.hpp"
#include "json.hpp"

namespace crankforge {

namespace {

int mod(long a, int ell) { return static_cast<int>(((a % ell) + ell) % ell); }

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<int> odd_exponents(int last) {
  std::vector<int> out;
  for (int a = 1; a <= last; a += 2) out.push_back(a);
  return out;
}

std::vector<int> with_negatives_and_zero(const std::vector<int>& exps) {
  std::vector<int> all{0};
  for (int a : exps) {
    all.push_back(a);
    all.push_back(-a);
  }
  return all;
}

void require_counts(const CrankSpec& spec, const char* who) {
  const int k = -spec.product.net_minus_power_at_one();
  const int j = spec.product.net_plus_power_at_one();
  if (k != spec.k || j != spec.j) {
    throw DomainError(std::string(who) + ": product specializes to k=" + std::to_string(k) + ", j=" +
                      std::to_string(j) + " at zeta=1, expected k=" + std::to_string(spec.k) +
                      ", j=" + std::to_string(spec.j));
  }
}

void require_delta(int delta, int ell) {
  if (delta < 0 || delta >= ell) {
    throw DomainError("delta " + std::to_string(delta) + " outside [0, " + std::to_string(ell - 1) + "]");
  }
}

ProductMetadata metadata_of(const CrankSpec& s) { return {s.k, s.j, s.ell, s.m}; }

/// Denominator shared by the j = 3 and j = ℓ families.
void add_j3_denominator(ProductSpec& p, int ell, int m) {
  if (m > 0) {
    p.add({-1, 0, 1, -m});
    p.add_pair(-1, ell - 2, -m);
  }
  for (int a : odd_exponents(ell - 4)) p.add_pair(-1, a, -(m + 1));
}

}  // namespace

// ---------------------------------------------------------------------------

const char* to_string(QrClass c) {
  switch (c) {
    case QrClass::zero: return "zero";
    case QrClass::residue: return "residue";
    case QrClass::nonresidue: return "nonresidue";
  }
  return "?";
}

QrClass qr_class(long a, int ell) {
  require_prime(ell, "qr_class");
  const int r = mod(a, ell);
  if (r == 0) return QrClass::zero;
  for (long x = 1; x < ell; ++x) {
    if ((x * x) % ell == r) return QrClass::residue;
  }
  return QrClass::nonresidue;
}

std::set<int> admissible_deltas(int ell, int multiplier) {
  require_prime(ell, "admissible_deltas");
  std::set<int> out;
  for (int delta = 0; delta < ell; ++delta) {
    if (qr_class(static_cast<long>(multiplier) * delta + 1, ell) == QrClass::nonresidue) out.insert(delta);
  }
  return out;
}

bool triangle_free_bruteforce(int ell, int delta, long n_max) {
  if (ell < 2) throw DomainError("triangle_free_bruteforce: modulus must be at least 2");
  require_delta(delta, ell);
  const long limit = static_cast<long>(ell) * n_max + delta;
  for (long t = 0; t * (t + 1) / 2 <= limit; ++t) {
    const long tri = t * (t + 1) / 2;
    if (tri >= delta && (tri - delta) % ell == 0) return false;
  }
  return true;
}

bool validate_complete_residues(const std::vector<int>& exps, int ell) {
  require_prime(ell, "validate_complete_residues");
  if (exps.size() != static_cast<std::size_t>(ell)) return false;
  std::vector<bool> hit(static_cast<std::size_t>(ell), false);
  for (int e : exps) {
    const int r = mod(e, ell);
    if (hit[r]) return false;
    hit[r] = true;
  }
  return true;
}

bool is_triangular(long x) {
  if (x < 0) return false;
  const long t = static_cast<long>(std::floor((std::sqrt(8.0 * static_cast<double>(x) + 1.0) - 1.0) / 2.0));
  for (long c = std::max(0L, t - 1); c <= t + 1; ++c) {
    if (c * (c + 1) / 2 == x) return true;
  }
  return false;
}

bool is_pronic(long x) { return x >= 0 && x % 2 == 0 && is_triangular(x / 2); }

bool is_square(long x) {
  if (x < 0) return false;
  const long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(x))));
  for (long c = std::max(0L, r - 1); c <= r + 1; ++c) {
    if (c * c == x) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------

const char* to_string(CrankSource s) {
  switch (s) {
    case CrankSource::j2: return "j2";
    case CrankSource::j3: return "j3";
    case CrankSource::jl: return "jl";
    case CrankSource::conjecture: return "conjecture";
    case CrankSource::custom: return "custom";
  }
  return "?";
}

CrankSource parse_crank_source(const std::string& name) {
  if (name == "j2") return CrankSource::j2;
  if (name == "j3") return CrankSource::j3;
  if (name == "jl") return CrankSource::jl;
  if (name == "conjecture") return CrankSource::conjecture;
  throw DomainError("unknown crank family '" + name + "' (expected j2, j3, jl or conjecture)");
}

CrankSpec build_crank_spec_j2(int ell, int m, std::optional<std::vector<int>> denominator_exps) {
  require_prime(ell, "build_crank_spec_j2");
  if (ell < 5) throw DomainError("build_crank_spec_j2: requires prime l >= 5");
  if (m < 0) throw DomainError("build_crank_spec_j2: m must be nonnegative");
  const std::vector<int> exps = denominator_exps.value_or(odd_exponents(ell - 2));
  if (!validate_complete_residues(with_negatives_and_zero(exps), ell)) {
    throw DomainError("build_crank_spec_j2: {0, +-a} is not a complete residue system mod " +
                      std::to_string(ell));
  }
  CrankSpec spec;
  spec.k = ell * m + ell - 1;
  spec.j = 2;
  spec.ell = ell;
  spec.m = m;
  spec.source = CrankSource::j2;
  spec.product.add_pair(+1, 2, 1);
  if (m > 0) spec.product.add({-1, 0, 1, -m});
  for (int a : exps) spec.product.add_pair(-1, a, -(m + 1));
  spec.product.metadata = metadata_of(spec);
  require_counts(spec, "build_crank_spec_j2");
  return spec;
}

CrankSpec build_crank_spec_j3(int ell, int m) {
  require_prime(ell, "build_crank_spec_j3");
  if (ell < 7) throw DomainError("build_crank_spec_j3: requires prime l >= 7");
  if (m < 0) throw DomainError("build_crank_spec_j3: m must be nonnegative");
  CrankSpec spec;
  spec.k = ell * m + ell - 3;
  spec.j = 3;
  spec.ell = ell;
  spec.m = m;
  spec.source = CrankSource::j3;
  spec.product.add({+1, 0, 1, 1});
  spec.product.add_pair(+1, ell - 2, 1);
  add_j3_denominator(spec.product, ell, m);
  spec.product.metadata = metadata_of(spec);
  auto denominator = odd_exponents(ell - 4);
  denominator.push_back(ell - 2);
  if (!validate_complete_residues(with_negatives_and_zero(denominator), ell)) {
    throw DomainError("build_crank_spec_j3: denominator exponents are not a complete residue system");
  }
  require_counts(spec, "build_crank_spec_j3");
  return spec;
}

CrankSpec build_crank_spec_jl(int ell, int m) {
  require_prime(ell, "build_crank_spec_jl");
  if (ell < 5) throw DomainError("build_crank_spec_jl: requires prime l >= 5");
  if (m < 0) throw DomainError("build_crank_spec_jl: m must be nonnegative");
  CrankSpec spec;
  spec.k = ell * m + ell - 3;
  spec.j = ell;
  spec.ell = ell;
  spec.m = m;
  spec.source = CrankSource::jl;
  spec.product.add({+1, 0, 1, 1});
  for (int e = 2; e <= ell - 1; e += 2) spec.product.add_pair(+1, e, 1);
  add_j3_denominator(spec.product, ell, m);
  spec.product.metadata = metadata_of(spec);
  require_counts(spec, "build_crank_spec_jl");
  return spec;
}

CrankSpec build_conjecture_spec(int k, int j) {
  if (k < 1 || j < 1) throw DomainError("build_conjecture_spec: k and j must be positive");
  CrankSpec spec;
  spec.k = k;
  spec.j = j;
  spec.source = CrankSource::conjecture;
  if (k % 2 == 1) spec.product.add({-1, 0, 1, 1});
  if (j % 2 == 1) spec.product.add({+1, 0, 1, 1});
  const int numerator_pairs = (j % 2 == 1) ? (j - 1) / 2 : j / 2;
  for (int i = 1; i <= numerator_pairs; ++i) spec.product.add_pair(+1, 2 * i, 1);
  const int denominator_pairs = (k % 2 == 1) ? (k + 1) / 2 : k / 2;
  for (int i = 1; i <= denominator_pairs; ++i) spec.product.add_pair(-1, 2 * i - 1, -1);
  spec.product.metadata = metadata_of(spec);
  require_counts(spec, "build_conjecture_spec");
  return spec;
}

bool validate_counts(const CrankSpec& spec, const QSeries& expansion) {
  const auto at_one = specialize_one(expansion);
  const auto expected = pkj_counts(spec.k, spec.j, expansion.truncation());
  return at_one == expected;
}

bool validate_counts(const CrankSpec& spec, int depth) {
  return validate_counts(spec, expand_product(spec.product, depth));
}

// ---------------------------------------------------------------------------

const char* to_string(Method m) { return m == Method::cyclotomic ? "cyclotomic" : "brute-force"; }

const char* to_string(Verdict v) { return v == Verdict::verified_to_depth ? "verified-to-depth" : "refuted"; }

std::string CongruenceReport::to_json_line(bool with_timing) const {
  nlohmann::ordered_json rec;
  rec["k"] = claim.k;
  rec["j"] = claim.j;
  rec["ell"] = claim.ell;
  rec["delta"] = claim.delta;
  rec["m"] = m;
  rec["method"] = to_string(method);
  rec["depth"] = claim.depth;
  rec["verdict"] = to_string(verdict());
  rec["checked"] = checked_indices.size();
  rec["failure_indices"] = failures;
  rec["wall_time_ms"] = with_timing ? std::round(wall_time_ms * 1000.0) / 1000.0 : 0.0;
  return rec.dump();
}

namespace {

CongruenceReport report_skeleton(const CrankSpec& spec, int delta, int depth) {
  require_prime(spec.ell, "verify_congruence");
  require_delta(delta, spec.ell);
  CongruenceReport r;
  r.claim = {spec.k, spec.j, spec.ell, delta, depth};
  r.m = spec.m;
  r.method = Method::cyclotomic;
  return r;
}

}  // namespace

CongruenceReport verify_congruence(const CrankSpec& spec, int delta, const QSeries& expansion) {
  const auto start = Clock::now();
  CongruenceReport r = report_skeleton(spec, delta, expansion.truncation());
  for (int d = delta; d <= expansion.truncation(); d += spec.ell) {
    r.checked_indices.push_back(d);
    if (!is_divisible_by_phi(expansion[d], spec.ell)) r.failures.push_back(d);
  }
  r.wall_time_ms = elapsed_ms(start);
  return r;
}

CongruenceReport verify_congruence(const CrankSpec& spec, int delta,
                                   const std::vector<CyclotomicElement>& reduced) {
  const auto start = Clock::now();
  if (reduced.empty()) throw DomainError("verify_congruence: empty coefficient list");
  CongruenceReport r = report_skeleton(spec, delta, static_cast<int>(reduced.size()) - 1);
  for (std::size_t d = delta; d < reduced.size(); d += spec.ell) {
    r.checked_indices.push_back(static_cast<int>(d));
    if (!reduced[d].is_zero()) r.failures.push_back(static_cast<int>(d));
  }
  r.wall_time_ms = elapsed_ms(start);
  return r;
}

CongruenceReport verify_congruence(const CrankSpec& spec, int delta, int depth) {
  require_prime(spec.ell, "verify_congruence");
  require_delta(delta, spec.ell);
  const auto start = Clock::now();
  CongruenceReport r = verify_congruence(spec, delta, expand_product(spec.product, depth));
  r.wall_time_ms = elapsed_ms(start);
  return r;
}

CongruenceReport verify_congruence_bruteforce(const CongruenceClaim& claim,
                                              const std::vector<mpz_class>& counts) {
  const auto start = Clock::now();
  if (claim.ell < 2) throw DomainError("verify_congruence_bruteforce: modulus must be at least 2");
  require_delta(claim.delta, claim.ell);
  if (counts.size() <= static_cast<std::size_t>(claim.depth)) {
    throw DomainError("verify_congruence_bruteforce: counts shorter than depth");
  }
  CongruenceReport r;
  r.claim = claim;
  r.method = Method::brute_force;
  for (int d = claim.delta; d <= claim.depth; d += claim.ell) {
    r.checked_indices.push_back(d);
    if (mpz_divisible_ui_p(counts[d].get_mpz_t(), static_cast<unsigned long>(claim.ell)) == 0) {
      r.failures.push_back(d);
    }
  }
  r.wall_time_ms = elapsed_ms(start);
  return r;
}

CongruenceReport verify_congruence_bruteforce(const CongruenceClaim& claim) {
  const auto start = Clock::now();
  CongruenceReport r = verify_congruence_bruteforce(claim, pkj_counts(claim.k, claim.j, claim.depth));
  r.wall_time_ms = elapsed_ms(start);
  return r;
}

// ---------------------------------------------------------------------------

ProductSpec proof_numerator(const CrankSpec& spec) {
  switch (spec.source) {
    case CrankSource::j2: return theta01_tilde_product(2);
    case CrankSource::jl: return theta_tilde_product(spec.ell - 2);
    case CrankSource::j3: return theta_tilde_product(2 * (spec.ell - 2), 2);
    default: break;
  }
  throw DomainError(std::string("proof_numerator: no proof structure for source ") + to_string(spec.source));
}

bool check_numerator_support(const CrankSpec& spec, const std::function<bool(int)>& allowed, int depth) {
  const auto support = support_exponents(expand_product(proof_numerator(spec), depth));
  return std::all_of(support.begin(), support.end(), allowed);
}

bool check_cofactor_collapse(const CrankSpec& spec, int depth) {
  ProductSpec cofactor = spec.product;
  const ProductSpec numerator = proof_numerator(spec);
  for (auto f : numerator.factors()) {
    f.power = -f.power;
    cofactor.add(f);
  }
  const auto reduced = expand_product_mod_phi(cofactor, spec.ell, depth);
  for (int d = 0; d <= depth; ++d) {
    if (d % spec.ell != 0 && !reduced[d].is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

bool progression_vanishes_mod(const std::vector<mpz_class>& s, int ell, int delta, int depth) {
  for (int d = delta; d <= depth; d += ell) {
    if (mpz_divisible_ui_p(s[d].get_mpz_t(), static_cast<unsigned long>(ell)) == 0) return false;
  }
  return true;
}

}  // namespace

bool preserves_congruence(const std::vector<mpz_class>& base, const std::vector<long>& b, int ell,
                          int delta, int depth) {
  require_prime(ell, "preserves_congruence");
  require_delta(delta, ell);
  if (base.size() <= static_cast<std::size_t>(depth)) throw DomainError("preserves_congruence: base too short");
  const auto size = static_cast<std::size_t>(depth) + 1;

  std::vector<mpz_class> mult(size);
  mult[0] = 1;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const std::size_t d = static_cast<std::size_t>(ell) * (i + 1);
    if (d < size) mult[d] = b[i];
  }
  // Inverse of the q^ℓ-series by the unit-constant-term recurrence.
  std::vector<mpz_class> inv(size);
  inv[0] = 1;
  for (std::size_t d = 1; d < size; ++d) {
    for (std::size_t i = ell; i <= d; i += ell) inv[d] -= mult[i] * inv[d - i];
  }
  auto times = [&](const std::vector<mpz_class>& factor) {
    std::vector<mpz_class> out(size);
    for (std::size_t i = 0; i < size; i += ell) {
      if (factor[i] == 0) continue;
      for (std::size_t d = i; d < size; ++d) out[d] += base[d - i] * factor[i];
    }
    return out;
  };
  return progression_vanishes_mod(times(mult), ell, delta, depth) &&
         progression_vanishes_mod(times(inv), ell, delta, depth);
}

bool congruence_preserved_under_multipliers(const std::vector<mpz_class>& base, int ell, int delta,
                                            int depth, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coefficient(-9, 9);
  bool all = true;
  for (int t = 0; t < trials; ++t) {
    std::vector<long> b(static_cast<std::size_t>(depth / ell));
    for (auto& x : b) x = coefficient(rng);
    all = preserves_congruence(base, b, ell, delta, depth) && all;
  }
  return all;
}

bool lemma_congprod_check(int ell, int delta, int depth, int trials, std::uint64_t seed) {
  return congruence_preserved_under_multipliers(pkj_counts(1, 0, depth), ell, delta, depth, trials, seed);
}

// ---------------------------------------------------------------------------

std::vector<ScanCandidate> scan_congruences(int k, int j, int ell_max, int depth) {
  if (ell_max < 2) throw DomainError("scan_congruences: l_max must be at least 2");
  if (depth < 3 * ell_max) {
    throw DomainError("scan_congruences: depth " + std::to_string(depth) + " gives fewer than 3 witnesses; need depth >= " +
                      std::to_string(3 * ell_max));
  }
  const auto counts = pkj_counts(k, j, depth);
  std::vector<ScanCandidate> out;
  for (int ell = 2; ell <= ell_max; ++ell) {
    if (!is_prime(ell)) continue;
    for (int delta = 0; delta < ell; ++delta) {
      if (!progression_vanishes_mod(counts, ell, delta, depth)) continue;
      out.push_back({{k, j, ell, delta, depth}, (depth - delta) / ell + 1});
    }
  }
  return out;
}

}  // namespace crankforge
