#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crankforge/cyclotomic.hpp"
#include "crankforge/product.hpp"

namespace crankforge {

// ---------------------------------------------------------------------------
// Number-theoretic predicates

enum class QrClass { zero, residue, nonresidue };

const char* to_string(QrClass c);

/// Classifies a mod ℓ by exhaustive squaring of 0 … ℓ-1.
QrClass qr_class(long a, int ell);

/// {δ ∈ [0, ℓ-1] : multiplier·δ + 1 is a quadratic nonresidue mod ℓ}.
/// Multiplier 8 governs the j = 2 and j = ℓ families, 4 governs j = 3.
std::set<int> admissible_deltas(int ell, int multiplier);

/// True iff no ℓn + δ with 0 ≤ n ≤ n_max is a triangular number t(t+1)/2.
bool triangle_free_bruteforce(int ell, int delta, long n_max);

/// True iff the exponents reduced mod ℓ hit every class exactly once.
bool validate_complete_residues(const std::vector<int>& exps, int ell);

// ---------------------------------------------------------------------------
// Crank generating functions

enum class CrankSource { j2, j3, jl, conjecture, custom };

const char* to_string(CrankSource s);
CrankSource parse_crank_source(const std::string& name);

/// A crank generating function for p_{k,j} together with the parameters of
/// the family that produced it.
struct CrankSpec {
  ProductSpec product;
  int k = 0;
  int j = 0;
  int ell = 0;
  int m = 0;
  CrankSource source = CrankSource::custom;
};

/// j = 2, k = ℓm + ℓ - 1:
///   (1 + ζ^{±2}q^n) / ((1-q^n)^m [∏_{a odd, 1 ≤ a ≤ ℓ-2} (1 - ζ^{±a}q^n)]^{m+1}).
/// `denominator_exps` overrides the odd list (any set whose ± completion
/// with 0 is a complete residue system mod ℓ).
CrankSpec build_crank_spec_j2(int ell, int m, std::optional<std::vector<int>> denominator_exps = std::nullopt);

/// j = 3, k = ℓm + ℓ - 3, ℓ ≥ 7:
///   (1+q^n)(1 + ζ^{±(ℓ-2)}q^n) / ([(1-q^n)(1 - ζ^{±(ℓ-2)}q^n)]^m
///                                 [∏_{a odd, 1 ≤ a ≤ ℓ-4} (1 - ζ^{±a}q^n)]^{m+1}).
CrankSpec build_crank_spec_j3(int ell, int m);

/// j = ℓ, k = ℓm + ℓ - 3:
///   (1+q^n) ∏_{e even, 2 ≤ e ≤ ℓ-1} (1 + ζ^{±e}q^n)
///   / ([(1-q^n)(1 - ζ^{±(ℓ-2)}q^n)]^m [∏_{a odd, 1 ≤ a ≤ ℓ-4} (1 - ζ^{±a}q^n)]^{m+1}).
CrankSpec build_crank_spec_jl(int ell, int m);

/// Conjectural crank for arbitrary k, j ≥ 1 with a_i = 2i, b_i = 2i - 1.
/// Even k drops the (1-q^n) numerator factor; even j drops (1+q^n) and uses
/// a_i for i = 1 … j/2.
CrankSpec build_conjecture_spec(int k, int j);

/// ζ = 1 specialization of the expansion equals p_{k,j}(n) for all n ≤ N.
bool validate_counts(const CrankSpec& spec, int depth);
/// Same check against an already computed expansion.
bool validate_counts(const CrankSpec& spec, const QSeries& expansion);

// ---------------------------------------------------------------------------
// Verification

struct CongruenceClaim {
  int k = 0;
  int j = 0;
  int ell = 0;
  int delta = 0;
  int depth = 0;

  friend bool operator==(const CongruenceClaim&, const CongruenceClaim&) = default;
  friend auto operator<=>(const CongruenceClaim&, const CongruenceClaim&) = default;
};

enum class Method { cyclotomic, brute_force };
enum class Verdict { verified_to_depth, refuted };

const char* to_string(Method m);
const char* to_string(Verdict v);

struct CongruenceReport {
  CongruenceClaim claim;
  int m = 0;
  Method method = Method::cyclotomic;
  std::vector<int> checked_indices;
  std::vector<int> failures;
  double wall_time_ms = 0.0;

  [[nodiscard]] Verdict verdict() const noexcept {
    return failures.empty() ? Verdict::verified_to_depth : Verdict::refuted;
  }
  [[nodiscard]] bool verified() const noexcept { return failures.empty(); }

  /// One self-contained JSON object, no trailing newline.
  [[nodiscard]] std::string to_json_line(bool with_timing = true) const;
};

/// Expands the spec exactly and tests Φ_ℓ | [q^{ℓn+δ}] for every ℓn+δ ≤ N.
CongruenceReport verify_congruence(const CrankSpec& spec, int delta, int depth);
/// Same test against an expansion shared between several δ.
CongruenceReport verify_congruence(const CrankSpec& spec, int delta, const QSeries& expansion);
/// Same test against coefficients already reduced mod Φ_ℓ.
CongruenceReport verify_congruence(const CrankSpec& spec, int delta,
                                   const std::vector<CyclotomicElement>& reduced);

/// Checks p_{k,j}(ℓn+δ) ≡ 0 (mod ℓ) for every ℓn+δ ≤ depth.
CongruenceReport verify_congruence_bruteforce(const CongruenceClaim& claim);
/// Same check against precomputed counts p_{k,j}(0..N).
CongruenceReport verify_congruence_bruteforce(const CongruenceClaim& claim,
                                              const std::vector<mpz_class>& counts);

// ---------------------------------------------------------------------------
// Proof-structure checks

/// The theta-type factor the crank is split into once numerator and
/// denominator are multiplied by the same completing product:
///   j2: θ̃01(2z, τ)           support on triangular numbers
///   jl: θ̃((ℓ-2)z, τ)         support on triangular numbers
///   j3: θ̃(2(ℓ-2)z, 2τ)       support on pronic numbers t(t+1)
/// Conjecture and custom specs are rejected.
ProductSpec proof_numerator(const CrankSpec& spec);

/// support(proof_numerator(spec) through q^N) ⊆ allowed.
bool check_numerator_support(const CrankSpec& spec, const std::function<bool(int)>& allowed, int depth);

/// spec / proof_numerator(spec), specialized at ζ_ℓ, is a power series in
/// q^ℓ through q^N: the crank is the theta numerator times a q^ℓ-series.
bool check_cofactor_collapse(const CrankSpec& spec, int depth);

bool is_triangular(long x);
bool is_pronic(long x);
bool is_square(long x);

// ---------------------------------------------------------------------------
// Multiplier lemma

/// True iff base·B and base·B^{-1} both vanish mod ℓ at every ℓn+δ ≤ N,
/// where B is the q^ℓ-series 1 + Σ b_n q^{ℓn} given by `b` (b[0] is b(ℓ)).
bool preserves_congruence(const std::vector<mpz_class>& base, const std::vector<long>& b, int ell,
                          int delta, int depth);

/// Runs `trials` random multipliers B (coefficients in [-9, 9]) against
/// `base`; returns the conjunction.
bool congruence_preserved_under_multipliers(const std::vector<mpz_class>& base, int ell, int delta,
                                            int depth, int trials, std::uint64_t seed);

/// Multiplier lemma with base series ∏(1-q^n)^{-1}.
bool lemma_congprod_check(int ell, int delta, int depth, int trials, std::uint64_t seed = 20240501);

// ---------------------------------------------------------------------------
// Empirical scan

struct ScanCandidate {
  CongruenceClaim claim;
  int witnesses = 0;  ///< number of indices ℓn+δ ≤ N that were checked
};

/// All (ℓ prime ≤ ℓ_max, δ < ℓ) with p_{k,j}(ℓn+δ) ≡ 0 (mod ℓ) for every
/// ℓn+δ ≤ N, sorted by (ℓ, δ). Requires N ≥ 3·ℓ_max. Results are empirical.
std::vector<ScanCandidate> scan_congruences(int k, int j, int ell_max, int depth);

}  // namespace crankforge
