// lnd: run session files and the shipped corpus.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lnd/lnd.hpp"

#ifndef LND_CORPUS_DIR
#define LND_CORPUS_DIR "corpus"
#endif

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

// --seed, then LND_SEED, then 0.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("LND_SEED")) {
    std::size_t used = 0;
    const std::string s(env);
    std::uint64_t v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw std::runtime_error("LND_SEED is not a number: " + s);
    return v;
  }
  return 0;
}

struct Options {
  std::optional<std::uint64_t> seed;
  std::size_t pair_budget = lnd::Limits{}.pair_budget;
  std::size_t dim_budget = lnd::Limits{}.dim_budget;
  bool no_timing = false;

  lnd::RunConfig config() const {
    lnd::RunConfig c;
    c.seed = resolve_seed(seed);
    c.limits.pair_budget = pair_budget;
    c.limits.dim_budget = dim_budget;
    c.timing = !no_timing;
    return c;
  }
};

void add_common(CLI::App* app, Options& o) {
  app->add_option("--seed", o.seed, "random seed for the grade search (default: LND_SEED or 0)");
  app->add_option("--pair-budget", o.pair_budget, "maximum S-pairs per Groebner basis");
  app->add_option("--dim-budget", o.dim_budget, "maximum dimension of a linear system");
}

int run_file(const std::string& file, const std::string& json_out, const Options& o) {
  nlohmann::ordered_json report;
  try {
    const lnd::Session s = lnd::parse_session(read_file(file));
    report = lnd::run_session(s, o.config());
  } catch (const lnd::ParseError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "lnd: " << e.what() << "\n";
    return 1;
  }
  const std::string text = report.dump(2) + "\n";
  if (json_out.empty()) {
    std::cout << text;
  } else {
    try {
      write_file(json_out, text);
    } catch (const std::exception& e) {
      std::cerr << "lnd: " << e.what() << "\n";
      return 1;
    }
    for (const auto& r : report["results"]) {
      std::cout << r["status"].get<std::string>() << "  " << r["command"].get<std::string>();
      if (!r["value"].is_null() && !r["value"].is_object()) std::cout << "  => " << r["value"].dump();
      std::cout << "\n";
    }
  }
  return lnd::report_exit_code(report);
}

struct CorpusOutcome {
  std::string name;
  bool ok = false;
  std::string message;
};

int run_corpus(const std::string& dir, const std::string& out_dir, bool update, const Options& o) {
  std::vector<fs::path> files;
  try {
    for (const auto& e : fs::directory_iterator(dir))
      if (e.path().extension() == ".lnd") files.push_back(e.path());
  } catch (const std::exception& e) {
    std::cerr << "lnd: " << e.what() << "\n";
    return 1;
  }
  std::sort(files.begin(), files.end());
  lnd::RunConfig cfg;
  try {
    cfg = o.config();
  } catch (const std::exception& e) {
    std::cerr << "lnd: " << e.what() << "\n";
    return 1;
  }
  cfg.timing = false;

  // Session files are independent; run them concurrently.
  std::vector<std::future<CorpusOutcome>> jobs;
  for (const fs::path& f : files) {
    jobs.push_back(std::async(std::launch::async, [f, cfg, out_dir, update]() {
      CorpusOutcome oc{f.stem().string()};
      try {
        const auto report = lnd::strip_timing(lnd::run_session(lnd::parse_session(read_file(f)), cfg));
        const std::string text = report.dump(2) + "\n";
        if (!out_dir.empty()) write_file(fs::path(out_dir) / (oc.name + ".json"), text);
        fs::path golden = f;
        golden.replace_extension(".golden.json");
        if (update) {
          write_file(golden, text);
          oc.ok = true;
          oc.message = "golden updated";
        } else if (!fs::exists(golden)) {
          oc.message = "missing " + golden.filename().string();
        } else if (read_file(golden) == text) {
          oc.ok = true;
        } else {
          oc.message = "report differs from " + golden.filename().string();
        }
      } catch (const std::exception& e) {
        oc.message = e.what();
      }
      return oc;
    }));
  }
  bool all = true;
  for (auto& j : jobs) {
    const CorpusOutcome oc = j.get();
    all = all && oc.ok;
    std::cout << (oc.ok ? "PASS " : "FAIL ") << oc.name << (oc.message.empty() ? "" : "  (" + oc.message + ")")
              << "\n";
  }
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locally nilpotent derivation toolkit"};
  app.require_subcommand(1);

  Options run_opts;
  std::string file, json_out;
  CLI::App* run = app.add_subcommand("run", "run a session file and emit a JSON report");
  run->add_option("file", file, "session file")->required();
  run->add_option("--json", json_out, "write the report here instead of stdout");
  add_common(run, run_opts);
  run->add_flag("--no-timing", run_opts.no_timing, "omit timing fields");

  Options corpus_opts;
  std::string dir = LND_CORPUS_DIR, out_dir;
  bool update = false;
  CLI::App* corpus = app.add_subcommand("corpus", "run the shipped corpus against its golden reports");
  corpus->add_option("--dir", dir, "corpus directory");
  corpus->add_option("--out", out_dir, "also write each report (timing excluded) into this directory");
  corpus->add_flag("--update", update, "rewrite the golden reports");
  add_common(corpus, corpus_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (*run) return run_file(file, json_out, run_opts);
  return run_corpus(dir, out_dir, update, corpus_opts);
}
