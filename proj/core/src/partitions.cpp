#include "crankforge/partitions.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "crankforge/error.hpp"

namespace crankforge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  for (int p : parts_) {
    if (p < 1) throw DomainError("Partition: parts must be positive");
    n_ += p;
  }
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw DomainError("enumerate_partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

CrankData crank_data(const Partition& p) {
  CrankData d;
  d.largest = p.largest();
  d.ones = static_cast<int>(std::count(p.parts().begin(), p.parts().end(), 1));
  d.mu = static_cast<int>(
      std::count_if(p.parts().begin(), p.parts().end(), [&](int part) { return part > d.ones; }));
  return d;
}

int rank(const Partition& p) {
  if (p.empty()) throw DomainError("rank: undefined for the empty partition");
  return p.largest() - p.length();
}

int crank(const Partition& p) {
  if (p.empty()) throw DomainError("crank: undefined for the empty partition");
  const CrankData d = crank_data(p);
  return d.ones == 0 ? d.largest : d.mu - d.ones;
}

std::map<int, long> crank_counts(int n) {
  if (n < 1) throw DomainError("crank_counts: n must be at least 1");
  std::map<int, long> counts;
  for (const auto& p : enumerate_partitions(n)) ++counts[crank(p)];
  return counts;
}

std::vector<mpz_class> pkj_counts(int k, int j, int max_n) {
  if (k < 0 || j < 0 || k + j < 1) throw DomainError("pkj_counts: need k, j >= 0 and k + j >= 1");
  if (max_n < 0) throw DomainError("pkj_counts: max_n must be nonnegative");
  const auto size = static_cast<std::size_t>(max_n) + 1;

  // weight[r]: ways to give total multiplicity r to one part size, split
  // over k unrestricted colors (C(t+k-1, t) each) and j distinct colors
  // (at most one copy per color, C(j, u)).
  std::vector<mpz_class> weight(size);
  for (std::size_t r = 0; r < size; ++r) {
    for (unsigned long u = 0; u <= std::min<unsigned long>(r, j); ++u) {
      const unsigned long t = r - u;
      mpz_class free_ways;
      if (k == 0) {
        free_ways = (t == 0) ? 1 : 0;
      } else {
        mpz_bin_uiui(free_ways.get_mpz_t(), t + static_cast<unsigned long>(k) - 1, t);
      }
      mpz_class distinct_ways;
      mpz_bin_uiui(distinct_ways.get_mpz_t(), static_cast<unsigned long>(j), u);
      weight[r] += free_ways * distinct_ways;
    }
  }

  std::vector<mpz_class> dp(size);
  dp[0] = 1;
  for (int s = 1; s <= max_n; ++s) {
    for (int x = max_n; x >= s; --x) {
      mpz_class acc = 0;
      for (int r = 1; r * s <= x; ++r) mpz_addmul(acc.get_mpz_t(), dp[x - r * s].get_mpz_t(), weight[r].get_mpz_t());
      dp[x] += acc;
    }
  }
  return dp;
}

mpz_class count_pkj(int k, int j, int n) {
  if (n < 0) throw DomainError("count_pkj: n must be nonnegative");
  return pkj_counts(k, j, n)[static_cast<std::size_t>(n)];
}

const char* to_string(Statistic s) { return s == Statistic::rank ? "rank" : "crank"; }

Statistic parse_statistic(const std::string& name) {
  if (name == "rank") return Statistic::rank;
  if (name == "crank") return Statistic::crank;
  throw DomainError("unknown statistic '" + name + "' (expected rank or crank)");
}

std::vector<long> DistributionTable::counts() const {
  std::vector<long> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(static_cast<long>(c.size()));
  return out;
}

bool DistributionTable::equinumerous() const {
  const auto c = counts();
  return std::adjacent_find(c.begin(), c.end(), std::not_equal_to<>()) == c.end();
}

DistributionTable residue_distribution(int n, int ell, Statistic stat) {
  if (n < 1) throw DomainError("residue_distribution: n must be at least 1");
  if (ell < 2) throw DomainError("residue_distribution: modulus must be at least 2");
  DistributionTable table{n, ell, stat, std::vector<std::vector<Partition>>(static_cast<std::size_t>(ell))};
  for (auto& p : enumerate_partitions(n)) {
    const int value = stat == Statistic::rank ? rank(p) : crank(p);
    const int residue = ((value % ell) + ell) % ell;
    table.classes[residue].push_back(std::move(p));
  }
  return table;
}

void write_distribution_csv(std::ostream& out, const DistributionTable& table, bool with_members) {
  out << (with_members ? "residue,count,members\n" : "residue,count\n");
  for (std::size_t r = 0; r < table.classes.size(); ++r) {
    out << r << ',' << table.classes[r].size();
    if (with_members) {
      out << ",\"";
      for (std::size_t i = 0; i < table.classes[r].size(); ++i) {
        if (i) out << ';';
        out << table.classes[r][i].to_string();
      }
      out << '"';
    }
    out << '\n';
  }
}

}  // namespace crankforge
