// heckd: command-line surface over the Hecke algebra engine.
//
// Subcommands: mult, factor, length, bruhat, kl, check, compositions, cache.
// Exit codes: 0 success, 2 parse/config error, 3 invariant violation,
// 4 verification failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "heckd/error.hpp"
#include "heckd/hecke.hpp"
#include "heckd/io.hpp"
#include "heckd/kl.hpp"
#include "heckd/oracle.hpp"
#include "heckd/weyl.hpp"

namespace {

using namespace heckd;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitVerification = 4;

struct MachineMode {
  bool on = false;
};

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::Parse:
      return kExitConfig;
    default:
      return kExitInvariant;
  }
}

void emit_error(bool machine, const Error& e, int exit_code) {
  if (machine) {
    Json j;
    Json inner;
    inner["kind"] = e.kind();
    inner["message"] = e.what();
    if (e.index() >= 0) inner["index"] = e.index();
    inner["exit"] = exit_code;
    j["error"] = std::move(inner);
    std::cout << j.dump() << "\n";
  } else {
    std::cerr << "error: " << e.what() << "\n";
  }
}

std::string word_str(const ReducedWord& rw) {
  std::ostringstream os;
  bool first = true;
  if (rw.rho_prefix) {
    os << "Trho";
    first = false;
  }
  for (GenLabel g : rw.letters) {
    if (!first) os << " * ";
    os << "T" << g;
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

AffinePerm perm_from_flag(int d, const std::string& csv) {
  return AffinePerm::from_window(d, parse_window_csv(csv));
}

std::string default_cache_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("HECKD_CACHE")) return env;
  return {};
}

int cmd_mult(int d, const std::string& expr, bool machine) {
  const HeckeElt value = parse_element_expr(d, expr);
  if (machine)
    std::cout << hecke_to_json(value).dump() << "\n";
  else
    std::cout << value.str() << "\n";
  return kExitOk;
}

int cmd_factor(int d, const std::string& wcsv, bool replay, bool machine) {
  const AffinePerm w = perm_from_flag(d, wcsv);
  const ReducedWord rw = w.reduced_word();
  if (replay) {
    HeckeElt acc = HeckeElt::basis(AffinePerm::identity(d));
    if (rw.rho_prefix) acc = mult_gen(kRho, acc);
    for (GenLabel g : rw.letters) acc = mult_gen(g, acc);
    if (acc != HeckeElt::basis(w)) {
      if (!machine)
        std::cerr << "replay mismatch: word does not reproduce [w]\n";
      return kExitVerification;
    }
  }
  if (machine) {
    Json j;
    j["d"] = d;
    j["w"] = window_to_json(w);
    j["rho_prefix"] = rw.rho_prefix;
    j["word"] = rw.letters;
    if (replay) j["replay"] = "ok";
    std::cout << j.dump() << "\n";
  } else {
    std::cout << word_str(rw) << "\n";
  }
  return kExitOk;
}

int cmd_length(int d, const std::string& wcsv, bool machine) {
  const AffinePerm w = perm_from_flag(d, wcsv);
  const long long len = w.length();
  if (machine) {
    Json j;
    j["d"] = d;
    j["w"] = window_to_json(w);
    j["length"] = len;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << len << "\n";
  }
  return kExitOk;
}

int cmd_bruhat(int d, const std::string& ycsv, const std::string& wcsv,
               bool machine) {
  const AffinePerm y = perm_from_flag(d, ycsv);
  const AffinePerm w = perm_from_flag(d, wcsv);
  const bool leq = y.bruhat_leq(w);
  if (machine) {
    Json j;
    j["d"] = d;
    j["y"] = window_to_json(y);
    j["w"] = window_to_json(w);
    j["leq"] = leq;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (leq ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int cmd_kl(int d, long long upto, const std::string& cache_flag,
           bool machine) {
  const std::string cache = default_cache_path(cache_flag);
  KLTable table(d);
  if (!cache.empty()) {
    std::ifstream probe(cache);
    if (probe.good()) {
      KLTable loaded = kl_cache_load_file(cache);
      if (loaded.rank() != d)
        throw Error(Errc::MergeRankMismatch,
                    "cache file has rank " + std::to_string(loaded.rank()) +
                        ", requested rank " + std::to_string(d));
      kl_cache_merge(table, loaded);
    }
  }
  for (const AffinePerm& w : enumerate_up_to_length(d, upto))
    kl_canonical(w, table);
  if (machine) {
    kl_cache_save(table, std::cout);
  } else {
    for (const auto& [key, p] : table.entries())
      std::cout << "P[" << key.first.str() << " | " << key.second.str()
                << "] = " << p.str() << "\n";
  }
  if (!cache.empty()) kl_cache_save_file(table, cache);
  return kExitOk;
}

int cmd_check(int d, bool verify, long long upto, bool machine) {
  const RelationReport report = verify_relations(d);
  Json checks = Json::array();
  bool all_ok = report.all_ok();
  for (const auto& c : report.checks) {
    if (machine) {
      Json j;
      j["relation"] = c.name;
      j["ok"] = c.ok;
      checks.push_back(std::move(j));
    } else {
      std::cout << (c.ok ? "[ok]   " : "[FAIL] ") << c.name << "\n";
    }
  }

  Json oracle_json = Json::array();
  if (verify) {
    struct Suite {
      std::string name;
      bool ok;
    };
    std::vector<Suite> suites;
    const auto pool = enumerate_up_to_length(d, upto);

    bool ok_len = true;
    for (const AffinePerm& w : pool)
      if (w.length() != oracle::oracle_length(w)) ok_len = false;
    suites.push_back({"length vs oracle (l <= " + std::to_string(upto) + ")",
                      ok_len});

    bool ok_bruhat = true;
    for (const AffinePerm& y : pool)
      for (const AffinePerm& w : pool)
        if (y.bruhat_leq(w) != oracle::oracle_bruhat(y, w)) ok_bruhat = false;
    suites.push_back({"bruhat vs subword oracle (l <= " +
                          std::to_string(upto) + ")",
                      ok_bruhat});

    bool ok_mult = true;
    for (const AffinePerm& x : pool)
      for (const AffinePerm& y : pool) {
        const HeckeElt a = HeckeElt::basis(x);
        const HeckeElt b = HeckeElt::basis(y);
        if (mult(a, b) != oracle::oracle_mult(a, b)) ok_mult = false;
      }
    suites.push_back({"mult vs oracle (l <= " + std::to_string(upto) + ")",
                      ok_mult});

    bool ok_canon = true;
    KLTable table(d);
    oracle::CanonicalSolver solver(d);
    for (const AffinePerm& w : pool)
      if (kl_canonical(w, table) != solver.canonical(w)) ok_canon = false;
    suites.push_back({"canonical vs bar-fixpoint oracle (l <= " +
                          std::to_string(upto) + ")",
                      ok_canon});

    for (const auto& s : suites) {
      all_ok = all_ok && s.ok;
      if (machine) {
        Json j;
        j["suite"] = s.name;
        j["ok"] = s.ok;
        oracle_json.push_back(std::move(j));
      } else {
        std::cout << (s.ok ? "[ok]   " : "[FAIL] ") << s.name << "\n";
      }
    }
  }

  if (machine) {
    Json j;
    j["d"] = d;
    j["relations"] = std::move(checks);
    if (verify) j["oracles"] = std::move(oracle_json);
    j["ok"] = all_ok;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (all_ok ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return all_ok ? kExitOk : kExitVerification;
}

int cmd_compositions(int n, int d, bool machine) {
  const auto rows = enumerate_compositions(n, d);
  if (machine) {
    Json j;
    j["n"] = n;
    j["d"] = d;
    Json arr = Json::array();
    for (const auto& c : rows) arr.push_back(c.lambda);
    j["compositions"] = std::move(arr);
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& c : rows) {
      for (size_t i = 0; i < c.lambda.size(); ++i)
        std::cout << (i ? "," : "") << c.lambda[i];
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_cache(const std::vector<std::string>& files, const std::string& out,
              bool machine) {
  if (files.empty())
    throw Error(Errc::Parse, "cache command needs at least one file");
  Json report = Json::array();
  KLTable merged(3);
  bool have_merged = false;
  for (const std::string& path : files) {
    KLTable t = kl_cache_load_file(path);
    if (!have_merged) {
      merged = std::move(t);
      have_merged = true;
    } else {
      kl_cache_merge(merged, t);
    }
    if (machine) {
      Json j;
      j["file"] = path;
      j["ok"] = true;
      report.push_back(std::move(j));
    } else {
      std::cout << path << ": ok\n";
    }
  }
  if (!out.empty()) kl_cache_save_file(merged, out);
  if (machine) {
    Json j;
    j["files"] = std::move(report);
    j["entries"] = merged.entries().size();
    if (!out.empty()) j["merged_into"] = out;
    j["ok"] = true;
    std::cout << j.dump() << "\n";
  } else if (!out.empty()) {
    std::cout << "merged " << merged.entries().size() << " entries into "
              << out << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for the extended affine Hecke algebra of type D"};
  app.require_subcommand(1);

  bool machine = false;
  app.add_flag("--machine", machine, "machine-readable output");

  int d = 3;
  std::string expr, wcsv, ycsv, cache_flag, out_flag;
  long long upto = 3;
  int n = 4;
  bool replay = false, verify = false;
  std::vector<std::string> cache_files;

  auto* mult_cmd = app.add_subcommand("mult", "evaluate an element expression");
  mult_cmd->add_option("--d", d, "rank (>= 3)")->required();
  mult_cmd->add_option("expr", expr, "product expression")->required();

  auto* factor_cmd =
      app.add_subcommand("factor", "reduced word of a window");
  factor_cmd->add_option("--d", d, "rank (>= 3)")->required();
  factor_cmd->add_option("--w", wcsv, "window values a1,...,aD")->required();
  factor_cmd->add_flag("--replay", replay,
                       "re-multiply the word and assert exact match");

  auto* length_cmd = app.add_subcommand("length", "orbit-dimension length");
  length_cmd->add_option("--d", d, "rank (>= 3)")->required();
  length_cmd->add_option("--w", wcsv, "window values a1,...,aD")->required();

  auto* bruhat_cmd = app.add_subcommand("bruhat", "dominance-order verdict");
  bruhat_cmd->add_option("--d", d, "rank (>= 3)")->required();
  bruhat_cmd->add_option("--y", ycsv, "lower window")->required();
  bruhat_cmd->add_option("--w", wcsv, "upper window")->required();

  auto* kl_cmd = app.add_subcommand("kl", "canonical-basis polynomial table");
  kl_cmd->add_option("--d", d, "rank (>= 3)")->required();
  kl_cmd->add_option("--upto-length", upto, "compute rows for l(w) <= L");
  kl_cmd->add_option("--cache", cache_flag,
                     "cache file to extend (default $HECKD_CACHE)");

  auto* check_cmd = app.add_subcommand("check", "relation and oracle suites");
  check_cmd->add_option("--d", d, "rank (>= 3)")->required();
  check_cmd->add_flag("--verify", verify, "also run the oracle suites");
  check_cmd->add_option("--upto-length", upto, "oracle suite length bound");

  auto* comp_cmd =
      app.add_subcommand("compositions", "palindromic periodic weights");
  comp_cmd->add_option("--n", n, "number of parts (even, >= 2)")->required();
  comp_cmd->add_option("--d", d, "rank (>= 3)")->required();

  auto* cache_cmd = app.add_subcommand("cache", "validate or merge caches");
  cache_cmd->add_option("files", cache_files, "cache files to validate");
  cache_cmd->add_option("--out", out_flag, "write the merged table here");

  // --machine may appear on either side of the subcommand
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (mult_cmd->parsed()) return cmd_mult(d, expr, machine);
    if (factor_cmd->parsed()) return cmd_factor(d, wcsv, replay, machine);
    if (length_cmd->parsed()) return cmd_length(d, wcsv, machine);
    if (bruhat_cmd->parsed()) return cmd_bruhat(d, ycsv, wcsv, machine);
    if (kl_cmd->parsed()) return cmd_kl(d, upto, cache_flag, machine);
    if (check_cmd->parsed()) return cmd_check(d, verify, upto, machine);
    if (comp_cmd->parsed()) return cmd_compositions(n, d, machine);
    if (cache_cmd->parsed()) return cmd_cache(cache_files, out_flag, machine);
  } catch (const Error& e) {
    const int code = exit_code_for(e);
    emit_error(machine, e, code);
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitConfig;
}
