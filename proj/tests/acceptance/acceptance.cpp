// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. All checks are exact; the only
// tolerances are the wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "crankforge/congruence.hpp"
#include "crankforge/partitions.hpp"
#include "crankforge/product.hpp"

using namespace crankforge;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double time_limit_s;  // 0: no limit stated
  std::function<void(Outcome&)> body;
};

bool all_verified(const CrankSpec& spec, const std::set<int>& deltas, const QSeries& expansion, Outcome& o) {
  bool ok = true;
  for (int delta : deltas) {
    const auto r = verify_congruence(spec, delta, expansion);
    if (!r.verified()) {
      ok = false;
      o.require(false, "delta " + std::to_string(delta) + " fails at q^" + std::to_string(r.failures.front()));
    }
  }
  return ok;
}

std::set<Partition> as_set(const std::vector<std::vector<int>>& lists) {
  std::set<Partition> out;
  for (const auto& l : lists) out.insert(Partition(l));
  return out;
}

void ramanujan_baseline(Outcome& o) {
  std::set<std::pair<int, int>> found;
  for (const auto& c : scan_congruences(1, 0, 11, 500)) {
    if (c.claim.ell == 5 || c.claim.ell == 7 || c.claim.ell == 11) found.insert({c.claim.ell, c.claim.delta});
  }
  o.require(found == std::set<std::pair<int, int>>{{5, 4}, {7, 5}, {11, 6}},
            "scan did not return exactly (5,4), (7,5), (11,6)");
}

void theorem_j2_l5(Outcome& o) {
  const auto spec = build_crank_spec_j2(5, 0);
  o.require(spec.k == 4 && spec.j == 2, "parameters");
  o.require(validate_counts(spec, 60), "zeta=1 specialization differs from p_{4,2} through q^60");
  o.require(admissible_deltas(5, 8) == std::set<int>{2, 4}, "admissible set for l=5 is not {2,4}");
  all_verified(spec, {2, 4}, expand_product(spec.product, 200), o);
}

void theorem_j2_l7(Outcome& o) {
  const auto spec = build_crank_spec_j2(7, 0);
  o.require(spec.k == 6 && spec.j == 2, "parameters");
  const auto deltas = admissible_deltas(7, 8);
  o.require(deltas == std::set<int>{2, 4, 5}, "admissible set for l=7 is not {2,4,5}");
  const auto expansion = expand_product(spec.product, 200);
  o.require(validate_counts(spec, expansion), "zeta=1 specialization differs from p_{6,2}");
  all_verified(spec, deltas, expansion, o);
  o.require(!verify_congruence(spec, 1, expansion).failures.empty(), "negative control delta=1 produced no failure");
}

void theorem_j3_l7(Outcome& o) {
  const auto spec = build_crank_spec_j3(7, 0);
  o.require(spec.k == 4 && spec.j == 3, "parameters");
  const auto deltas = admissible_deltas(7, 4);
  o.require(deltas == std::set<int>{1, 3, 4}, "admissible set (4 delta + 1) for l=7 is not {1,3,4}");
  const auto expansion = expand_product(spec.product, 200);
  o.require(validate_counts(spec, expansion), "zeta=1 specialization differs from p_{4,3}");
  all_verified(spec, deltas, expansion, o);
  const auto counts = pkj_counts(4, 3, 60);
  for (int delta : deltas) {
    o.require(verify_congruence_bruteforce({4, 3, 7, delta, 60}, counts).verified(),
              "brute force fails for delta " + std::to_string(delta));
  }
}

void theorem_jl_l5(Outcome& o) {
  const auto spec = build_crank_spec_jl(5, 0);
  o.require(spec.k == 2 && spec.j == 5, "parameters");
  o.require(validate_counts(spec, 60), "zeta=1 specialization differs from prod (1+q^n)^5/(1-q^n)^2");
  o.require(specialize_one(expand_product(spec.product, 60)) ==
                specialize_one(expand_product(pkj_product(2, 5), 60)),
            "zeta=1 specialization differs from the series of prod (1+q^n)^5/(1-q^n)^2");
  all_verified(spec, {2, 4}, expand_product(spec.product, 200), o);
}

void triangle_lemma(Outcome& o) {
  for (int ell = 2; ell <= 31; ++ell) {
    if (!is_prime(ell)) continue;
    for (int delta = 0; delta < ell; ++delta) {
      const bool brute = triangle_free_bruteforce(ell, delta, 10000);
      const bool predicate = qr_class(8L * delta + 1, ell) == QrClass::nonresidue;
      o.require(brute == predicate, "disagreement at l=" + std::to_string(ell) + ", delta=" + std::to_string(delta));
    }
  }
}

void multiplier_lemma(Outcome& o) {
  const auto base = pkj_counts(1, 0, 150);
  for (const auto& [ell, delta] : std::vector<std::pair<int, int>>{{5, 4}, {7, 5}, {11, 6}}) {
    o.require(lemma_congprod_check(ell, delta, 150, 20),
              "random multipliers break (" + std::to_string(ell) + "," + std::to_string(delta) + ")");
    auto perturbed = base;
    perturbed[ell + delta] += 1;
    o.require(!congruence_preserved_under_multipliers(perturbed, ell, delta, 150, 20, 7),
              "perturbed base not flagged for l=" + std::to_string(ell));
  }
}

void triple_product(Outcome& o) { o.require(jacobi_triple_product_check(300), "sides differ below q^300"); }

void table_one(Outcome& o) {
  const std::vector<std::set<Partition>> table1{
      as_set({{2, 2, 1, 1, 1, 1, 1}, {3, 3, 3}, {4, 2, 2, 1}, {4, 3, 1, 1}, {5, 1, 1, 1, 1}, {7, 2}}),
      as_set({{2, 2, 2, 1, 1, 1}, {3, 1, 1, 1, 1, 1, 1}, {4, 3, 2}, {4, 4, 1}, {5, 2, 1, 1}, {8, 1}}),
      as_set({{1, 1, 1, 1, 1, 1, 1, 1, 1}, {2, 2, 2, 2, 1}, {3, 2, 1, 1, 1, 1}, {5, 2, 2}, {5, 3, 1}, {6, 1, 1, 1}}),
      as_set({{3, 2, 2, 1, 1}, {4, 1, 1, 1, 1, 1}, {3, 3, 1, 1, 1}, {5, 4}, {6, 2, 1}, {9}}),
      as_set({{2, 1, 1, 1, 1, 1, 1, 1}, {3, 2, 2, 2}, {3, 3, 2, 1}, {4, 2, 1, 1, 1}, {6, 3}, {7, 1, 1}}),
  };
  const auto t = residue_distribution(9, 5, Statistic::rank);
  o.require(t.counts() == std::vector<long>(5, 6), "class sizes are not five sixes");
  for (int r = 0; r < 5; ++r) {
    o.require(std::set<Partition>(t.classes[r].begin(), t.classes[r].end()) == table1[r],
              "membership differs in class " + std::to_string(r));
  }
  o.require(residue_distribution(14, 5, Statistic::rank).equinumerous(), "rank not equinumerous for (5, 14)");
  o.require(residue_distribution(12, 7, Statistic::rank).equinumerous(), "rank not equinumerous for (7, 12)");
  o.require(!residue_distribution(6, 11, Statistic::rank).equinumerous(), "rank unexpectedly equinumerous for (11, 6)");
}

void crank_equidistribution(Outcome& o) {
  for (const auto& [ell, ns] : std::vector<std::pair<int, std::vector<int>>>{
           {5, {4, 9, 14, 19}}, {7, {5, 12, 19}}, {11, {6}}}) {
    for (int n : ns) {
      o.require(residue_distribution(n, ell, Statistic::crank).equinumerous(),
                "crank classes unequal for n=" + std::to_string(n) + " mod " + std::to_string(ell));
    }
  }
  const auto c = expand_product(crank_product(), 25);
  for (int n = 2; n <= 25; ++n) {
    std::map<int, mpz_class> terms;
    for (const auto& [m, count] : crank_counts(n)) terms[m] = count;
    o.require(c[n] == LaurentPoly::from_terms(terms), "q^" + std::to_string(n) + " coefficient differs from M(m,n)");
  }
  o.require(c[1] == LaurentPoly::of({{-1, 1}, {0, -1}, {1, 1}}), "q^1 coefficient is not z^-1 - 1 + z");
}

void numerator_support(Outcome& o) {
  const auto triangular = [](int d) { return is_triangular(d); };
  o.require(check_numerator_support(build_crank_spec_j2(5, 0), triangular, 50), "j=2 numerator off triangular numbers");
  for (int ell : {5, 7}) {
    o.require(check_numerator_support(build_crank_spec_jl(ell, 0), triangular, 50),
              "j=l numerator off triangular numbers for l=" + std::to_string(ell));
  }
}

void residue_substitution(Outcome& o) {
  const auto spec = build_crank_spec_j2(5, 0, std::vector<int>{1, 2});
  o.require(spec.k == 4, "substituted spec changed k");
  o.require(validate_counts(spec, 60), "substituted spec fails validate_counts at N=60");
  all_verified(spec, {2, 4}, expand_product(spec.product, 150), o);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC01", "Ramanujan baseline scan (k=1, j=0, lmax=11, N=500)", 10, ramanujan_baseline},
      {"AC02", "j=2 crank, l=5, m=0: counts to 60, delta {2,4} to 200", 60, theorem_j2_l5},
      {"AC03", "j=2 crank, l=7, m=0: delta {2,4,5} to 200, delta=1 refuted", 60, theorem_j2_l7},
      {"AC04", "j=3 crank, l=7, m=0: delta {1,3,4} cyclotomic to 200, brute force to 60", 0, theorem_j3_l7},
      {"AC05", "j=l crank, l=5, m=0: delta {2,4} to 200, counts to 60", 0, theorem_jl_l5},
      {"AC06", "triangle-free progressions == 8 delta + 1 nonresidue, l <= 31", 5, triangle_lemma},
      {"AC07", "q^l multiplier lemma, 20 trials, N=150, with negative control", 0, multiplier_lemma},
      {"AC08", "Jacobi triple product through q^300", 30, triple_product},
      {"AC09", "Table 1 and rank equidistribution (5,14), (7,12); failure at (11,6)", 0, table_one},
      {"AC10", "crank equidistribution and C(z,q) = sum M(m,n) z^m q^n for 2 <= n <= 25", 0, crank_equidistribution},
      {"AC11", "proof numerators supported on triangular numbers through q^50", 0, numerator_support},
      {"AC12", "j=2, l=5 with denominator exponents {+-1,+-2}", 0, residue_substitution},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      o.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit_s) + " s");
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %s %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
