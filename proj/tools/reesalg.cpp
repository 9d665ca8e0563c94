// reesalg: Gorenstein / quasi-Gorenstein / Cohen-Macaulay checks for extended
// Rees algebras of monomial ideals.
//
// Exit codes: 0 ok, 1 usage or input error, 2 criterion inapplicable,
// 3 internal invariant violation.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "reesalg/corpus.hpp"
#include "reesalg/report.hpp"

namespace {

using namespace reesalg;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInapplicable = 2;
constexpr int kExitInvariant = 3;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw JobError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

Json error_doc(const std::string& kind, const std::string& message) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["error"] = Json{{"kind", kind}, {"message", message}};
  return out;
}

struct CorpusOutcome {
  Json summary;
  std::vector<std::string> violations;
};

/// Full report on one random ideal plus the meta-theorem properties.
CorpusOutcome corpus_job(std::size_t index, const MonomialIdeal& I) {
  static const std::vector<std::string> names{"x", "y", "z", "w"};
  JobSpec job;
  job.variables.assign(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(I.dim()));
  job.ideal = I;
  CorpusOutcome out;
  out.summary["index"] = index;
  out.summary["ideal"] = to_json(I);
  try {
    const auto doc = run_command(Command::report, job);
    const auto& gor = doc["gorenstein"];
    const auto& qg = doc["quasi_gorenstein"];
    const auto& cm = doc["cohen_macaulay"];
    out.summary["gorenstein_normalization"] = gor["gorenstein_normalization"];
    out.summary["q"] = gor["q"];
    out.summary["a_normalization"] = gor["a_normalization"];
    const bool applicable = qg["status"] == "ok";
    out.summary["criterion_applicable"] = applicable;
    if (applicable) {
      out.summary["quasi_gorenstein"] = qg["quasi_gorenstein"];
      if (qg["quasi_gorenstein"].get<bool>()) {
        if (!cm["valabrega_valla"].get<bool>()) out.violations.push_back("quasi-Gorenstein but Valabrega-Valla fails");
        if (qg["s"] == qg["r"] && !cm["two_standard"].get<bool>())
          out.violations.push_back("quasi-Gorenstein with s = r but not 2-standard");
      }
    }
    for (const auto& c : doc["consistency"]["checks"])
      if (!c.value("passed", true)) out.violations.push_back(c["name"].get<std::string>() + ": " + c["detail"].get<std::string>());
  } catch (const InvariantViolation& e) {
    out.violations.push_back(std::string("invariant violation: ") + e.what());
  }
  out.summary["violations"] = out.violations;
  return out;
}

int run_corpus(std::size_t count, std::uint64_t seed, bool json) {
  IdealSampler sampler(seed);
  std::vector<MonomialIdeal> ideals;
  for (std::size_t k = 0; k < count; ++k) ideals.push_back(sampler.m_primary());

  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<CorpusOutcome> results(count);
  std::vector<std::future<void>> pool;
  std::atomic<std::size_t> next{0};
  for (std::size_t w = 0; w < workers; ++w)
    pool.push_back(std::async(std::launch::async, [&] {
      for (std::size_t k = next++; k < count; k = next++) results[k] = corpus_job(k, ideals[k]);
    }));
  for (auto& f : pool) f.get();

  std::size_t bad = 0;
  Json all = Json::array();
  for (const auto& r : results) {
    bad += !r.violations.empty();
    all.push_back(r.summary);
  }
  if (json) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "corpus";
    doc["seed"] = seed;
    doc["jobs"] = all;
    doc["jobs_with_violations"] = bad;
    std::cout << dump_json(doc);
  } else {
    for (const auto& s : all) {
      std::cout << "job " << s["index"] << " " << s["ideal"].dump() << " gorenstein=" << s["gorenstein_normalization"].dump();
      if (s.contains("quasi_gorenstein")) std::cout << " quasi_gorenstein=" << s["quasi_gorenstein"].dump();
      std::cout << (s["violations"].empty() ? " ok" : " VIOLATION") << "\n";
      for (const auto& v : s["violations"]) std::cout << "  " << v.get<std::string>() << "\n";
    }
    std::cout << count << " jobs, " << bad << " with violations (seed " << seed << ")\n";
  }
  return bad ? kExitInvariant : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gorenstein and Cohen-Macaulay checks for extended Rees algebras of monomial ideals"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  bool json = false, pretty = false;
  std::uint64_t seed = 1;
  std::size_t corpus = 0;
  app.add_flag("--json", json, "emit the JSON report");
  app.add_flag("--pretty", pretty, "emit the human-readable report (default)");
  app.add_option("--seed", seed, "seed for --corpus");
  app.add_option("--corpus", corpus, "run the property checks on this many random m-primary ideals");

  struct Sub {
    Command cmd;
    const char* help;
    CLI::App* app = nullptr;
    std::string job;
  };
  std::vector<Sub> subs{{Command::np, "Newton polyhedron facets", nullptr, {}},
                        {Command::iclosure, "integral closure generators", nullptr, {}},
                        {Command::cone, "lifted half-space matrix of the Rees cone", nullptr, {}},
                        {Command::gorenstein, "Gorenstein test of the normalized extended Rees algebra", nullptr, {}},
                        {Command::qgor, "quasi-Gorenstein colon criterion", nullptr, {}},
                        {Command::cm, "Valabrega-Valla and 2-standard tests", nullptr, {}},
                        {Command::core, "core of powers via the stabilized colon formula", nullptr, {}},
                        {Command::report, "full analysis report", nullptr, {}}};
  bool fast = false;
  std::vector<Exponent> core_u;
  for (auto& s : subs) {
    s.app = app.add_subcommand(command_name(s.cmd), s.help);
    s.app->add_option("job", s.job, "job file (JSON), or - for stdin")->required();
    if (s.cmd == Command::gorenstein) s.app->add_flag("--fast", fast, "also run the pure-power arithmetic test");
    if (s.cmd == Command::core) s.app->add_option("--u", core_u, "exponents u for core(I^u)")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }
  if (json && pretty) {
    std::cerr << "--json and --pretty are exclusive\n";
    return kExitUsage;
  }

  if (corpus > 0) {
    try {
      return run_corpus(corpus, seed, json);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  const auto chosen = std::find_if(subs.begin(), subs.end(), [](const Sub& s) { return s.app->parsed(); });
  if (chosen == subs.end()) {
    std::cerr << app.help();
    return kExitUsage;
  }

  auto emit_error = [&](const std::string& kind, const std::string& msg, int code) {
    if (json)
      std::cout << dump_json(error_doc(kind, msg));
    else
      std::cerr << kind << ": " << msg << "\n";
    return code;
  };

  try {
    const auto job = parse_job_text(read_input(chosen->job));
    RunOptions opt;
    opt.fast = fast;
    opt.core_u = core_u;
    const auto doc = run_command(chosen->cmd, job, opt);
    std::cout << (json ? dump_json(doc) : render_pretty(doc));
    return has_inapplicable(doc) ? kExitInapplicable : kExitOk;
  } catch (const JobError& e) {
    return emit_error("input", e.what(), kExitUsage);
  } catch (const DimensionMismatch& e) {
    return emit_error("dimension_mismatch", e.what(), kExitUsage);
  } catch (const Inapplicable& e) {
    return emit_error("inapplicable", e.what(), kExitInapplicable);
  } catch (const InvariantViolation& e) {
    return emit_error("invariant_violation", e.what(), kExitInvariant);
  } catch (const BudgetExceeded& e) {
    return emit_error("budget_exceeded", e.what(), kExitUsage);
  } catch (const std::exception& e) {
    return emit_error("error", e.what(), kExitUsage);
  }
}
