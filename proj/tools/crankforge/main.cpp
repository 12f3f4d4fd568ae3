// crankforge: expansion, verification, scanning and table generation for
// crank generating functions of (k+j)-colored partitions.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "crankforge/congruence.hpp"
#include "crankforge/error.hpp"
#include "crankforge/partitions.hpp"
#include "crankforge/product.hpp"
#include "jobs.hpp"

namespace cf = crankforge;
using cf::cli::kOk;
using cf::cli::kRefuted;
using cf::cli::kUsage;

namespace {

/// Writes to the named file, or stdout for "" and "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw cf::DomainError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void write_lines(const std::string& path, const std::vector<cf::cli::JobResult>& results) {
  Output out(path);
  for (const auto& r : results) {
    for (const auto& line : r.lines) out.stream() << line << '\n';
  }
}

int combined_exit(const std::vector<cf::cli::JobResult>& results) {
  int code = kOk;
  for (const auto& r : results) code = std::max(code, r.exit_code);
  return code;
}

cf::FactorSpec parse_factor(const std::string& text) {
  cf::FactorSpec f;
  char c1 = 0, c2 = 0, c3 = 0;
  std::istringstream in(text);
  if (!(in >> f.sign >> c1 >> f.zeta_exp >> c2 >> f.stride >> c3 >> f.power) || c1 != ',' || c2 != ',' ||
      c3 != ',' || !in.eof()) {
    throw cf::DomainError("--factor expects sign,zeta_exp,stride,power; got '" + text + "'");
  }
  return f;
}

struct ExpandOptions {
  std::string gen;
  std::vector<std::string> factors;
  int depth = -1;
  int ell = 5;
  int m = 0;
  int k = 1;
  int j = 0;
  std::vector<int> a{1};
  std::string output;
};

cf::ProductSpec selected_product(const ExpandOptions& o) {
  if (!o.factors.empty()) {
    if (!o.gen.empty()) throw cf::DomainError("use either --gen or --factor, not both");
    cf::ProductSpec p;
    for (const auto& f : o.factors) p.add(parse_factor(f));
    return p;
  }
  const int a = o.a.empty() ? 1 : o.a.front();
  if (o.gen == "partitions") return cf::partition_product();
  if (o.gen == "eta") return cf::eta_product();
  if (o.gen == "crank") return cf::crank_product();
  if (o.gen == "pkj") return cf::pkj_product(o.k, o.j);
  if (o.gen == "theta") return cf::theta_tilde_product(a);
  if (o.gen == "theta01") return cf::theta01_tilde_product(a);
  if (o.gen == "colored-crank") return cf::colored_crank_product(o.k, o.a);
  if (o.gen == "crank-j2") return cf::build_crank_spec_j2(o.ell, o.m).product;
  if (o.gen == "crank-j3") return cf::build_crank_spec_j3(o.ell, o.m).product;
  if (o.gen == "crank-jl") return cf::build_crank_spec_jl(o.ell, o.m).product;
  if (o.gen == "conjecture") return cf::build_conjecture_spec(o.k, o.j).product;
  throw cf::DomainError(o.gen.empty() ? "expand: give --gen or --factor"
                                      : "expand: unknown generator '" + o.gen + "'");
}

int cmd_expand(const ExpandOptions& o) {
  if (o.depth < 0) throw cf::DomainError("expand: --depth must be given and nonnegative");
  cf::cli::require_depth(o.depth);
  const cf::QSeries s = cf::expand_product(selected_product(o), o.depth);
  Output out(o.output);
  cf::write_series_dump(out.stream(), s);
  return kOk;
}

struct VerifyOptions {
  std::string thm;
  cf::cli::VerifyJob job;
  std::string output;
  bool no_timing = false;
};

int cmd_verify(VerifyOptions o) {
  o.job.family = cf::parse_crank_source(o.thm);
  o.job.timing = !o.no_timing;
  cf::cli::validate(cf::cli::Job{o.job});
  const auto result = cf::cli::run(o.job);
  write_lines(o.output, {result});
  if (!result.lines.empty() && result.lines.front().find("\"check\"") != std::string::npos) {
    std::cerr << "crankforge: zeta=1 specialization does not match p_{k,j}; not a crank for these counts\n";
  }
  return result.exit_code;
}

int cmd_scan(const cf::cli::ScanJob& job, const std::string& output) {
  cf::cli::validate(cf::cli::Job{job});
  const auto result = cf::cli::run(job);
  write_lines(output, {result});
  return result.exit_code;
}

struct TableOptions {
  int n = 0;
  int modulus = 0;
  std::string stat = "rank";
  std::string output;
  bool counts_only = false;
};

int cmd_table(const TableOptions& o) {
  const auto table = cf::residue_distribution(o.n, o.modulus, cf::parse_statistic(o.stat));
  Output out(o.output);
  cf::write_distribution_csv(out.stream(), table, !o.counts_only);
  return kOk;
}

int cmd_campaign(const std::string& config_path, const std::string& output_override, int parallelism) {
  std::ifstream in(config_path);
  if (!in) throw cf::DomainError("cannot read campaign file '" + config_path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto campaign = cf::cli::parse_campaign(buffer.str());
  if (!output_override.empty()) campaign.output = output_override;
  if (parallelism > 0) campaign.parallelism = parallelism;
  const auto results = cf::cli::run_all(campaign.jobs, campaign.parallelism);
  write_lines(campaign.output, results);
  return combined_exit(results);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crankforge: crank generating functions and partition congruences"};
  app.require_subcommand(1);

  ExpandOptions ex;
  auto* expand = app.add_subcommand("expand", "Expand an infinite product as a q-series (series dump format)");
  expand->add_option("--gen", ex.gen,
                     "Builtin product: partitions, eta, crank, pkj, theta, theta01, colored-crank, crank-j2, "
                     "crank-j3, crank-jl, conjecture");
  expand->add_option("--factor", ex.factors, "Explicit factor family sign,zeta_exp,stride,power (repeatable)");
  expand->add_option("--depth", ex.depth, "Truncation N (coefficients q^0..q^N)");
  expand->add_option("--l", ex.ell, "Prime l for the theorem families");
  expand->add_option("--m", ex.m, "Family parameter m >= 0");
  expand->add_option("--k", ex.k, "Unrestricted colors k");
  expand->add_option("--j", ex.j, "Distinct-part colors j");
  expand->add_option("--a", ex.a, "zeta exponent(s) for theta / colored-crank");
  expand->add_option("--output", ex.output, "Output file (default stdout)");

  VerifyOptions vo;
  std::vector<int> verify_deltas;
  auto* verify = app.add_subcommand("verify", "Verify that a crank explains its congruences");
  verify->add_option("--thm", vo.thm, "Family: j2, j3, jl or conjecture")->required();
  verify->add_option("--l", vo.job.ell, "Prime modulus l")->required();
  verify->add_option("--m", vo.job.m, "Family parameter m >= 0");
  verify->add_option("--k", vo.job.k, "k for --thm conjecture");
  verify->add_option("--j", vo.job.j, "j for --thm conjecture");
  verify->add_option("--delta", vo.job.deltas, "Residue(s) to test (default: the admissible set)");
  verify->add_option("--depth", vo.job.depth, "Truncation N")->capture_default_str();
  verify->add_option("--output", vo.output, "Output file (default stdout)");
  verify->add_flag("--no-timing", vo.no_timing, "Write wall_time_ms as 0 for byte-reproducible output");

  cf::cli::ScanJob sj;
  std::string scan_output;
  auto* scan = app.add_subcommand("scan", "Empirically scan p_{k,j} for congruences mod small primes");
  scan->add_option("--k", sj.k, "Unrestricted colors k")->required();
  scan->add_option("--j", sj.j, "Distinct-part colors j")->required();
  scan->add_option("--lmax", sj.ell_max, "Largest prime modulus")->required();
  scan->add_option("--depth", sj.depth, "Largest index checked")->required();
  scan->add_flag("--conjecture", sj.check_conjecture, "Also report whether the conjectural crank explains each hit");
  scan->add_option("--output", scan_output, "Output file (default stdout)");

  TableOptions to;
  auto* table = app.add_subcommand("table", "Distribution of partitions of n by rank or crank mod l (CSV)");
  table->add_option("--n", to.n, "Partitions of n")->required();
  table->add_option("--mod", to.modulus, "Modulus")->required();
  table->add_option("--stat", to.stat, "rank or crank")->capture_default_str();
  table->add_flag("--counts-only", to.counts_only, "Omit the member lists");
  table->add_option("--output", to.output, "Output file (default stdout)");

  std::string campaign_config, campaign_output;
  int campaign_parallelism = 0;
  auto* campaign = app.add_subcommand("campaign", "Run verify/scan jobs from a JSON campaign file");
  campaign->add_option("--config", campaign_config, "Campaign JSON file")->required();
  campaign->add_option("--output", campaign_output, "Override the campaign's output path");
  campaign->add_option("--parallelism", campaign_parallelism, "Override the campaign's parallelism");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*expand) return cmd_expand(ex);
    if (*verify) return cmd_verify(vo);
    if (*scan) return cmd_scan(sj, scan_output);
    if (*table) return cmd_table(to);
    if (*campaign) return cmd_campaign(campaign_config, campaign_output, campaign_parallelism);
  } catch (const cf::DomainError& e) {
    std::cerr << "crankforge: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
