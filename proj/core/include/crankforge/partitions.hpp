#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace crankforge {

/// Integer partition: parts stored in weakly decreasing order, all ≥ 1.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts descending; rejects parts < 1.
  explicit Partition(std::vector<int> parts);

  [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
  [[nodiscard]] int size() const noexcept { return n_; }
  [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
  [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
  [[nodiscard]] int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  /// Parts joined by commas, e.g. `5,2,2`.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// The quantities entering the crank: largest part l, number of ones ω, and
/// number μ of parts strictly larger than ω.
struct CrankData {
  int largest = 0;
  int ones = 0;
  int mu = 0;
};

/// All partitions of n, in reverse lexicographic order ({n} first, 1^n last).
std::vector<Partition> enumerate_partitions(int n);

CrankData crank_data(const Partition& p);
/// Dyson rank: largest part minus number of parts. Rejects the empty partition.
int rank(const Partition& p);
/// Andrews–Garvan crank: l if ω = 0, else μ - ω. Rejects the empty partition.
int crank(const Partition& p);

/// M(m, n) for fixed n ≥ 1, as crank value ↦ count.
std::map<int, long> crank_counts(int n);

/// p_{k,j}(0..N): (k+j)-colored partitions with j colors restricted to
/// distinct parts. Dynamic programming over part sizes, independent of the
/// q-series engine.
std::vector<mpz_class> pkj_counts(int k, int j, int max_n);
mpz_class count_pkj(int k, int j, int n);

enum class Statistic { rank, crank };

const char* to_string(Statistic s);
Statistic parse_statistic(const std::string& name);

/// Partitions of n bucketed by statistic mod ℓ (residues 0 … ℓ-1).
struct DistributionTable {
  int n = 0;
  int modulus = 0;
  Statistic statistic = Statistic::rank;
  std::vector<std::vector<Partition>> classes;

  [[nodiscard]] std::vector<long> counts() const;
  [[nodiscard]] bool equinumerous() const;
};

DistributionTable residue_distribution(int n, int ell, Statistic stat);

/// CSV with header `residue,count,members`; members is a quoted,
/// semicolon-separated list of comma-joined partitions.
void write_distribution_csv(std::ostream& out, const DistributionTable& table, bool with_members = true);

}  // namespace crankforge
