#include "jobs.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include "crankforge/error.hpp"
#include "json.hpp"

namespace crankforge::cli {

int depth_limit() {
  const char* env = std::getenv("CRANKFORGE_DEPTH_LIMIT");
  if (env == nullptr || *env == '\0') return 1'000'000;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0) throw DomainError("CRANKFORGE_DEPTH_LIMIT must be a nonnegative integer");
  return static_cast<int>(std::min<long>(v, 1'000'000'000L));
}

void require_depth(int depth) {
  if (depth < 0) throw DomainError("depth must be nonnegative");
  if (depth > depth_limit()) {
    throw DomainError("depth " + std::to_string(depth) + " exceeds CRANKFORGE_DEPTH_LIMIT (" +
                      std::to_string(depth_limit()) + ")");
  }
}

CrankSpec spec_for(const VerifyJob& job) {
  switch (job.family) {
    case CrankSource::j2: return build_crank_spec_j2(job.ell, job.m);
    case CrankSource::j3: return build_crank_spec_j3(job.ell, job.m);
    case CrankSource::jl: return build_crank_spec_jl(job.ell, job.m);
    case CrankSource::conjecture: {
      require_prime(job.ell, "verify --thm conjecture");
      CrankSpec spec = build_conjecture_spec(job.k, job.j);
      spec.ell = job.ell;
      return spec;
    }
    case CrankSource::custom: break;
  }
  throw DomainError("verify: unsupported crank family");
}

namespace {

int multiplier_for(CrankSource family) { return family == CrankSource::j3 ? 4 : 8; }

std::vector<int> deltas_for(const VerifyJob& job, const CrankSpec& spec) {
  if (!job.deltas.empty()) return job.deltas;
  if (job.family != CrankSource::conjecture) {
    const auto admissible = admissible_deltas(spec.ell, multiplier_for(job.family));
    return {admissible.begin(), admissible.end()};
  }
  // The conjecture carries no δ predicate: test the empirically observed ones.
  std::vector<int> out;
  for (const auto& c : scan_congruences(spec.k, spec.j, spec.ell, std::max(job.depth, 3 * spec.ell))) {
    if (c.claim.ell == spec.ell) out.push_back(c.claim.delta);
  }
  return out;
}

}  // namespace

void validate(const Job& job) {
  if (const auto* v = std::get_if<VerifyJob>(&job)) {
    require_depth(v->depth);
    const CrankSpec spec = spec_for(*v);
    for (int delta : v->deltas) {
      if (delta < 0 || delta >= spec.ell) {
        throw DomainError("delta " + std::to_string(delta) + " outside [0, " + std::to_string(spec.ell - 1) + "]");
      }
    }
    return;
  }
  const auto& s = std::get<ScanJob>(job);
  require_depth(s.depth);
  if (s.k < 0 || s.j < 0 || s.k + s.j < 1) throw DomainError("scan: need k, j >= 0 and k + j >= 1");
  if (s.ell_max < 2) throw DomainError("scan: lmax must be at least 2");
  if (s.depth < 3 * s.ell_max) {
    throw DomainError("scan: depth " + std::to_string(s.depth) + " gives fewer than 3 witnesses; need depth >= " +
                      std::to_string(3 * s.ell_max));
  }
  if (s.check_conjecture && (s.k < 1 || s.j < 1)) throw DomainError("scan --conjecture needs k, j >= 1");
}

JobResult run(const VerifyJob& job) {
  validate(Job{job});
  JobResult result;
  const CrankSpec spec = spec_for(job);
  const QSeries expansion = expand_product(spec.product, job.depth);
  if (!validate_counts(spec, expansion)) {
    nlohmann::ordered_json rec;
    rec["check"] = "validate_counts";
    rec["k"] = spec.k;
    rec["j"] = spec.j;
    rec["ell"] = spec.ell;
    rec["m"] = spec.m;
    rec["depth"] = job.depth;
    rec["verdict"] = "refuted";
    result.lines.push_back(rec.dump());
    result.exit_code = kRefuted;
    return result;
  }
  for (int delta : deltas_for(job, spec)) {
    const auto report = verify_congruence(spec, delta, expansion);
    result.lines.push_back(report.to_json_line(job.timing));
    if (!report.verified()) result.exit_code = kRefuted;
  }
  return result;
}

JobResult run(const ScanJob& job) {
  validate(Job{job});
  JobResult result;
  const auto candidates = scan_congruences(job.k, job.j, job.ell_max, job.depth);
  std::optional<QSeries> conjecture;
  if (job.check_conjecture) conjecture = expand_product(build_conjecture_spec(job.k, job.j).product, job.depth);
  for (const auto& c : candidates) {
    nlohmann::ordered_json rec;
    rec["k"] = c.claim.k;
    rec["j"] = c.claim.j;
    rec["ell"] = c.claim.ell;
    rec["delta"] = c.claim.delta;
    rec["depth"] = c.claim.depth;
    rec["witnesses"] = c.witnesses;
    rec["status"] = "empirical";
    if (conjecture) {
      CrankSpec spec = build_conjecture_spec(job.k, job.j);
      spec.ell = c.claim.ell;
      rec["explained_by_conjecture"] = verify_congruence(spec, c.claim.delta, *conjecture).verified();
    }
    result.lines.push_back(rec.dump());
  }
  return result;
}

JobResult run(const Job& job) {
  return std::visit([](const auto& j) { return run(j); }, job);
}

std::vector<JobResult> run_all(const std::vector<Job>& jobs, int parallelism) {
  std::vector<JobResult> results(jobs.size());
  const int workers = std::max(1, std::min<int>(parallelism, static_cast<int>(jobs.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = run(jobs[i]);
  };
  if (workers == 1) {
    worker();
    return results;
  }
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  pool.clear();
  return results;
}

Campaign parse_campaign(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("campaign: ") + e.what());
  }
  Campaign c;
  try {
    c.parallelism = doc.value("parallelism", 1);
    c.output = doc.value("output", std::string());
    if (c.parallelism < 1) throw DomainError("campaign: parallelism must be at least 1");
    for (const auto& j : doc.at("jobs")) {
      const std::string kind = j.at("kind");
      if (kind == "verify") {
        VerifyJob v;
        v.family = parse_crank_source(j.at("thm").get<std::string>());
        v.ell = j.at("l");
        v.m = j.value("m", 0);
        v.k = j.value("k", 0);
        v.j = j.value("j", 0);
        v.depth = j.value("depth", 200);
        v.timing = j.value("timing", true);
        if (j.contains("deltas") && j["deltas"].is_array()) v.deltas = j["deltas"].get<std::vector<int>>();
        c.jobs.emplace_back(v);
      } else if (kind == "scan") {
        ScanJob s;
        s.k = j.at("k");
        s.j = j.at("j");
        s.ell_max = j.at("lmax");
        s.depth = j.value("depth", 500);
        s.check_conjecture = j.value("conjecture", false);
        c.jobs.emplace_back(s);
      } else {
        throw DomainError("campaign: unknown job kind '" + kind + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("campaign: ") + e.what());
  }
  for (const auto& job : c.jobs) validate(job);
  return c;
}

}  // namespace crankforge::cli
