// Command-line front door for the open-chain workbench. Four subcommands
// cover the pipeline: `verify` runs the identity suites, `spectrum`
// diagonalizes and compares against the predicted decomposition, `bethe`
// solves root configurations (or replays the embedded reference tables),
// and `completeness` sweeps whole (n, N, set) cells end to end.
//
// JSON goes to stdout (or --out), human-readable tables to stderr, so
// stdout stays machine-parseable. Identical configurations and seeds
// produce byte-identical JSON.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "a2n2/report.hpp"

using namespace a2n2;

namespace {

struct Range {
  int lo = 0, hi = 0;
};

// "a..b" or a single "a"
Range parse_range(const std::string& s) {
  const auto pos = s.find("..");
  auto to_int = [&](const std::string& part) {
    try {
      size_t used = 0;
      const int v = std::stoi(part, &used);
      if (used != part.size()) throw ConfigError("malformed range: " + s);
      return v;
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError("malformed range: " + s);
    }
  };
  if (pos == std::string::npos) {
    const int v = to_int(s);
    return {v, v};
  }
  return {to_int(s.substr(0, pos)), to_int(s.substr(pos + 2))};
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw ConfigError("malformed list: " + s);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError("malformed list: " + s);
    }
  }
  if (out.empty()) throw ConfigError("malformed list: " + s);
  return out;
}

int emit(const CommandResult& res, const RunConfig& cfg) {
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    if (!f) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return kExitConfig;
    }
    f << render_json(res.report);
    std::cout << res.table;
  } else {
    std::cout << render_json(res.report);
    std::cerr << res.table;
  }
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical workbench for the open A2n(2) quantum spin chain"};
  app.require_subcommand(1);

  std::string eta_s, probe_s, set_s, m_s, config_path, out_path, csv_path;
  std::string n_s, sites_s;
  int starts = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  bool all = false, check_tables = false;

  std::vector<CLI::Option*> common;
  auto add_common = [&](CLI::App* sub, bool ranged) {
    common.clear();
    const char* n_help = ranged ? "rank n, or a range a..b" : "rank n";
    const char* s_help =
        ranged ? "number of chain sites, or a range a..b" : "number of chain sites";
    common.push_back(sub->add_option("--n", n_s, n_help));
    common.push_back(sub->add_option("--sites", sites_s, s_help));
    common.push_back(sub->add_option("--eta", eta_s, "anisotropy as re,im"));
    common.push_back(sub->add_option("--set", set_s, "boundary set, I or II"));
    common.push_back(sub->add_option("--seed", seed, "random seed"));
    common.push_back(
        sub->add_option("--starts", starts, "multi-start budget per sector"));
    common.push_back(sub->add_option("--tol", tol, "Newton tolerance"));
    common.push_back(
        sub->add_option("--probe", probe_s, "spectral probe as re,im"));
    common.push_back(
        sub->add_option("--config", config_path, "JSON configuration file"));
    common.push_back(
        sub->add_option("--out", out_path, "write the JSON report here"));
  };

  CLI::App* verify = app.add_subcommand("verify", "run the identity suites");
  add_common(verify, false);
  auto verify_common = common;

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "diagonalize and compare decompositions");
  add_common(spectrum, false);
  auto spectrum_common = common;

  CLI::App* bethe = app.add_subcommand("bethe", "solve root configurations");
  add_common(bethe, false);
  auto bethe_common = common;
  CLI::Option* om = bethe->add_option("--m", m_s, "cardinalities m1,...,mn");
  bethe->add_flag("--all", all, "every admissible cardinality tuple");
  bethe->add_flag("--check-tables", check_tables,
                  "replay the embedded reference tables");
  CLI::Option* ocsv =
      bethe->add_option("--csv", csv_path, "also write a CSV solution table");

  CLI::App* completeness =
      app.add_subcommand("completeness", "sweep (n, sites, set) cells");
  add_common(completeness, true);
  auto completeness_common = common;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    CLI::App* active = verify->parsed()       ? verify
                       : spectrum->parsed()   ? spectrum
                       : bethe->parsed()      ? bethe
                                              : completeness;
    const auto& opts = verify->parsed()       ? verify_common
                       : spectrum->parsed()   ? spectrum_common
                       : bethe->parsed()      ? bethe_common
                                              : completeness_common;

    RunConfig cfg;
    if (opts[8]->count()) {
      std::ifstream f(config_path);
      if (!f) throw ConfigError("cannot read configuration file " + config_path);
      nlohmann::json j;
      try {
        f >> j;
      } catch (const nlohmann::json::exception&) {
        throw ConfigError("configuration file is not valid JSON");
      }
      apply_config_json(cfg, j);
    }
    SweepRange range;  // completeness only
    if (active == completeness) {
      range.n_lo = range.n_hi = cfg.n;
      range.N_lo = range.N_hi = cfg.N;
      if (opts[3]->count()) range.sets = {boundary_set_from_string(set_s)};
    }
    // flags override configuration-file values
    if (opts[0]->count()) {
      const Range r = parse_range(n_s);
      cfg.n = r.lo;
      range.n_lo = r.lo;
      range.n_hi = r.hi;
      if (active != completeness && r.hi != r.lo)
        throw ConfigError("--n takes a range only under `completeness`");
    }
    if (opts[1]->count()) {
      const Range r = parse_range(sites_s);
      cfg.N = r.lo;
      range.N_lo = r.lo;
      range.N_hi = r.hi;
      if (active != completeness && r.hi != r.lo)
        throw ConfigError("--sites takes a range only under `completeness`");
    }
    if (opts[2]->count()) cfg.eta = parse_complex_pair(eta_s);
    if (opts[3]->count()) cfg.set = boundary_set_from_string(set_s);
    if (opts[4]->count()) cfg.seed = seed;
    if (opts[5]->count()) cfg.starts = starts;
    if (opts[6]->count()) cfg.tol = tol;
    if (opts[7]->count()) cfg.probe = parse_complex_pair(probe_s);
    if (opts[9]->count()) cfg.out = out_path;

    CommandResult res;
    if (active == verify) {
      res = cmd_verify(cfg);
    } else if (active == spectrum) {
      res = cmd_spectrum(cfg);
    } else if (active == bethe) {
      if (om->count()) cfg.m = parse_int_list(m_s);
      cfg.all = cfg.all || all;
      cfg.check_tables = cfg.check_tables || check_tables;
      if (ocsv->count()) cfg.csv = csv_path;
      const int modes = (cfg.m.empty() ? 0 : 1) + (cfg.all ? 1 : 0) +
                        (cfg.check_tables ? 1 : 0);
      if (modes != 1)
        throw ConfigError(
            "bethe: pass exactly one of --m, --all, --check-tables");
      res = cmd_bethe(cfg);
    } else {
      res = cmd_completeness(cfg, range);
    }
    return emit(res, cfg);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ResourceCapError& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
