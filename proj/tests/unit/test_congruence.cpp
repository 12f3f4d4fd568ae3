#include <set>

#include "crankforge/congruence.hpp"
#include "crankforge/error.hpp"
#include "crankforge/partitions.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace crankforge;

namespace {

std::vector<int> net_exponents(const ProductSpec& p, int sign) {
  std::vector<int> out;
  for (const auto& f : p.factors()) {
    if (f.sign == sign && f.stride == 1) out.push_back(f.zeta_exp);
  }
  return out;
}

bool has_factor(const ProductSpec& p, FactorSpec f) {
  for (const auto& g : p.factors()) {
    if (g == f) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("qr_class") {
  CHECK(qr_class(17, 5) == QrClass::nonresidue);
  CHECK(qr_class(0, 7) == QrClass::zero);
  CHECK(qr_class(4, 7) == QrClass::residue);
  CHECK(qr_class(-1, 5) == QrClass::residue);
  CHECK_THROWS_AS(qr_class(3, 9), DomainError);
}

TEST_CASE("admissible_deltas") {
  CHECK(admissible_deltas(5, 8) == std::set<int>{2, 4});
  CHECK(admissible_deltas(7, 8) == std::set<int>{2, 4, 5});
  CHECK(admissible_deltas(7, 4) == std::set<int>{1, 3, 4});
}

TEST_CASE("triangle_free_bruteforce") {
  CHECK(triangle_free_bruteforce(5, 2, 10000));
  CHECK_FALSE(triangle_free_bruteforce(5, 1, 10000));
  CHECK_FALSE(triangle_free_bruteforce(5, 0, 0));
  CHECK_THROWS_AS(triangle_free_bruteforce(5, 5, 10), DomainError);
}

TEST_CASE("triangle-free progressions are exactly the 8δ+1 nonresidues") {
  for (int ell = 3; ell <= 31; ++ell) {
    if (!is_prime(ell)) continue;
    for (int delta = 0; delta < ell; ++delta) {
      CHECK(triangle_free_bruteforce(ell, delta, 10000) ==
            (qr_class(8L * delta + 1, ell) == QrClass::nonresidue));
    }
  }
}

TEST_CASE("pronic-free progressions are exactly the 4δ+1 nonresidues") {
  for (int ell = 3; ell <= 31; ++ell) {
    if (!is_prime(ell)) continue;
    for (int delta = 0; delta < ell; ++delta) {
      bool pronic_free = true;
      for (long t = 0; t * (t + 1) <= 10000L * ell; ++t) {
        if ((t * (t + 1) - delta) % ell == 0 && t * (t + 1) >= delta) pronic_free = false;
      }
      CHECK(pronic_free == (qr_class(4L * delta + 1, ell) == QrClass::nonresidue));
    }
  }
}

TEST_CASE("shape predicates") {
  for (long x : {0L, 1L, 3L, 6L, 10L, 45L, 5050L}) CHECK(is_triangular(x));
  for (long x : {2L, 4L, 5L, 7L, 44L}) CHECK_FALSE(is_triangular(x));
  for (long x : {0L, 2L, 6L, 12L, 20L}) CHECK(is_pronic(x));
  CHECK_FALSE(is_pronic(3));
  CHECK(is_square(49));
  CHECK_FALSE(is_square(3));
}

TEST_CASE("validate_complete_residues") {
  CHECK(validate_complete_residues({0, 1, -1, 3, -3}, 5));
  CHECK(validate_complete_residues({0, 1, -1, 2, -2}, 5));
  CHECK_FALSE(validate_complete_residues({0, 1, -1, 2, -2}, 7));
  CHECK_FALSE(validate_complete_residues({0, 1, 6, 2, -2}, 5));
}

TEST_CASE("build_crank_spec_j2") {
  const auto s = build_crank_spec_j2(5, 0);
  CHECK(s.k == 4);
  CHECK(s.j == 2);
  CHECK(s.source == CrankSource::j2);
  const auto denominators = net_exponents(s.product, -1);
  CHECK(std::multiset<int>(denominators.begin(), denominators.end()) == std::multiset<int>{-3, -1, 1, 3});
  CHECK(specialize_one(expand_product(s.product, 30)) == pkj_counts(4, 2, 30));

  const auto s71 = build_crank_spec_j2(7, 1);
  CHECK(s71.k == 13);
  CHECK(has_factor(s71.product, {-1, 0, 1, -1}));
  for (int a : {1, 3, 5}) {
    CHECK(has_factor(s71.product, {-1, a, 1, -2}));
    CHECK(has_factor(s71.product, {-1, -a, 1, -2}));
  }

  CHECK_THROWS_AS(build_crank_spec_j2(3, 0), DomainError);
  CHECK_THROWS_AS(build_crank_spec_j2(9, 0), DomainError);
  CHECK_THROWS_AS(build_crank_spec_j2(7, 0, std::vector<int>{1, 2, 6}), DomainError);
  CHECK_NOTHROW(build_crank_spec_j2(5, 0, std::vector<int>{1, 2}));
}

TEST_CASE("build_crank_spec_j3") {
  const auto s = build_crank_spec_j3(7, 0);
  CHECK(s.k == 4);
  CHECK(s.j == 3);
  CHECK(has_factor(s.product, {+1, 0, 1, 1}));
  CHECK(has_factor(s.product, {+1, 5, 1, 1}));
  CHECK(has_factor(s.product, {+1, -5, 1, 1}));
  for (int a : {1, 3}) CHECK(has_factor(s.product, {-1, a, 1, -1}));
  CHECK(specialize_one(expand_product(s.product, 30)) == pkj_counts(4, 3, 30));

  const auto s71 = build_crank_spec_j3(7, 1);
  CHECK(s71.k == 11);
  CHECK(has_factor(s71.product, {-1, 0, 1, -1}));
  CHECK(has_factor(s71.product, {-1, 5, 1, -1}));
  CHECK(has_factor(s71.product, {-1, 3, 1, -2}));

  CHECK_THROWS_AS(build_crank_spec_j3(5, 0), DomainError);
}

TEST_CASE("build_crank_spec_jl") {
  const auto s = build_crank_spec_jl(5, 0);
  CHECK(s.k == 2);
  CHECK(s.j == 5);
  const auto num = net_exponents(s.product, +1);
  CHECK(std::multiset<int>(num.begin(), num.end()) == std::multiset<int>{-4, -2, 0, 2, 4});
  const auto den = net_exponents(s.product, -1);
  CHECK(std::multiset<int>(den.begin(), den.end()) == std::multiset<int>{-1, 1});
  CHECK(specialize_one(expand_product(s.product, 30)) == pkj_counts(2, 5, 30));

  const auto s7 = build_crank_spec_jl(7, 0);
  CHECK(s7.k == 4);
  CHECK(s7.j == 7);
  const auto num7 = net_exponents(s7.product, +1);
  CHECK(std::multiset<int>(num7.begin(), num7.end()) == std::multiset<int>{-6, -4, -2, 0, 2, 4, 6});
}

TEST_CASE("build_conjecture_spec") {
  const auto s11 = build_conjecture_spec(1, 1);
  CHECK(s11.product.factors().size() == 4);
  CHECK(has_factor(s11.product, {-1, 0, 1, 1}));
  CHECK(has_factor(s11.product, {+1, 0, 1, 1}));
  CHECK(has_factor(s11.product, {-1, 1, 1, -1}));

  const auto s22 = build_conjecture_spec(2, 2);
  CHECK(s22.product.factors() ==
        ProductSpec().add_pair(+1, 2, 1).add_pair(-1, 1, -1).factors());

  for (int k = 1; k <= 4; ++k) {
    for (int j = 1; j <= 4; ++j) CHECK(validate_counts(build_conjecture_spec(k, j), 30));
  }
  CHECK_THROWS_AS(build_conjecture_spec(0, 1), DomainError);
}

TEST_CASE("validate_counts") {
  CHECK(validate_counts(build_crank_spec_j2(5, 0), 60));
  CHECK(validate_counts(build_conjecture_spec(1, 1), 40));
  CHECK(validate_counts(build_conjecture_spec(3, 3), 40));

  auto corrupted = build_crank_spec_j2(5, 0);
  auto factors = corrupted.product.factors();
  factors.back().power = -2;
  corrupted.product = ProductSpec(factors);
  CHECK_FALSE(validate_counts(corrupted, 20));
}

TEST_CASE("verify_congruence") {
  const auto spec = build_crank_spec_j2(5, 0);
  const auto expansion = expand_product(spec.product, 120);
  const auto good = verify_congruence(spec, 2, expansion);
  CHECK(good.verified());
  CHECK(good.checked_indices.size() == 24);
  CHECK(good.method == Method::cyclotomic);

  const auto bad = verify_congruence(spec, 1, expansion);
  CHECK_FALSE(bad.failures.empty());
  CHECK(bad.verdict() == Verdict::refuted);

  const auto fast = expand_product_mod_phi(spec.product, 5, 120);
  CHECK(verify_congruence(spec, 1, fast).failures == bad.failures);
  CHECK(verify_congruence(spec, 4, fast).verified());

  CHECK_THROWS_AS(verify_congruence(spec, 5, 20), DomainError);
  CHECK_THROWS_AS(verify_congruence(spec, -1, 20), DomainError);
}

TEST_CASE("verify_congruence_bruteforce") {
  CHECK(verify_congruence_bruteforce({4, 2, 5, 4, 60}).verified());
  CHECK(verify_congruence_bruteforce({1, 0, 5, 4, 100}).verified());
  const auto refuted = verify_congruence_bruteforce({1, 0, 5, 3, 100});
  CHECK(refuted.verdict() == Verdict::refuted);
  CHECK(refuted.failures.front() == 3);
  CHECK(refuted.method == Method::brute_force);
}

TEST_CASE("report records") {
  const auto r = verify_congruence_bruteforce({1, 0, 5, 3, 20});
  const auto rec = nlohmann::json::parse(r.to_json_line(false));
  CHECK(rec["k"] == 1);
  CHECK(rec["ell"] == 5);
  CHECK(rec["delta"] == 3);
  CHECK(rec["method"] == "brute-force");
  CHECK(rec["verdict"] == "refuted");
  CHECK(rec["failure_indices"].front() == 3);
  CHECK(rec["wall_time_ms"] == 0.0);
  CHECK(r.to_json_line(false).find('\n') == std::string::npos);
}

TEST_CASE("check_numerator_support") {
  const auto j2 = build_crank_spec_j2(5, 0);
  CHECK(check_numerator_support(j2, [](int d) { return is_triangular(d); }, 50));
  CHECK_FALSE(check_numerator_support(j2, [](int d) { return is_square(d); }, 50));
  for (int ell : {5, 7, 11}) {
    CHECK(check_numerator_support(build_crank_spec_jl(ell, 0), [](int d) { return is_triangular(d); }, 50));
  }
  for (int ell : {7, 11, 13}) {
    CHECK(check_numerator_support(build_crank_spec_j3(ell, 0), [](int d) { return is_pronic(d); }, 60));
  }
  CHECK_THROWS_AS(check_numerator_support(build_conjecture_spec(1, 1), [](int) { return true; }, 10),
                  DomainError);
}

TEST_CASE("denominator collapses to a q^l series at zeta_l") {
  CHECK(check_cofactor_collapse(build_crank_spec_j2(5, 0), 60));
  CHECK(check_cofactor_collapse(build_crank_spec_j2(7, 1), 60));
  CHECK(check_cofactor_collapse(build_crank_spec_j3(7, 0), 60));
  CHECK(check_cofactor_collapse(build_crank_spec_j3(11, 1), 60));
  CHECK(check_cofactor_collapse(build_crank_spec_jl(5, 0), 60));
  CHECK(check_cofactor_collapse(build_crank_spec_jl(7, 1), 60));
  CHECK(check_cofactor_collapse(build_crank_spec_j2(5, 0, std::vector<int>{1, 2}), 60));
}

TEST_CASE("multiplier lemma") {
  CHECK(lemma_congprod_check(5, 4, 100, 20));
  const auto base = pkj_counts(1, 0, 60);
  CHECK(preserves_congruence(base, {}, 5, 4, 60));

  auto perturbed = base;
  perturbed[14] += 1;
  CHECK_FALSE(preserves_congruence(perturbed, {}, 5, 4, 60));
  CHECK_FALSE(congruence_preserved_under_multipliers(perturbed, 5, 4, 60, 5, 1));
}

TEST_CASE("scan_congruences") {
  const auto claims = scan_congruences(1, 0, 11, 500);
  std::set<std::pair<int, int>> found;
  for (const auto& c : claims) {
    if (c.claim.ell >= 5) found.insert({c.claim.ell, c.claim.delta});
    CHECK(c.witnesses >= 3);
    CHECK(verify_congruence_bruteforce(c.claim).verified());
  }
  CHECK(found == std::set<std::pair<int, int>>{{5, 4}, {7, 5}, {11, 6}});

  const auto p42 = scan_congruences(4, 2, 5, 200);
  std::set<std::pair<int, int>> found42;
  for (const auto& c : p42) found42.insert({c.claim.ell, c.claim.delta});
  CHECK(found42.count({5, 2}) == 1);
  CHECK(found42.count({5, 4}) == 1);

  CHECK_THROWS_AS(scan_congruences(1, 0, 11, 20), DomainError);
}
