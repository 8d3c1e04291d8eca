// Command-line front end. All computation lives in the core library; this
// file parses flags, manages the database cache, and prints results.
//
// Exit codes: 0 success, 1 verification or runtime failure, 2 usage error.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "indgen/analyze.hpp"
#include "indgen/database_io.hpp"
#include "indgen/search.hpp"
#include "indgen/tables.hpp"
#include "indgen/verify.hpp"

namespace fs = std::filesystem;

namespace {

struct CommonOpts {
  int workers = 0; // 0 = all hardware threads
  std::string strategy = "canonical-path";
  std::string cache_dir; // empty = INDGEN_CACHE_DIR or ./.indgen-cache
  bool compute = false;  // ignore cached databases
};

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

fs::path cache_dir_of(const CommonOpts& o) {
  return o.cache_dir.empty() ? indgen::default_cache_dir()
                             : fs::path(o.cache_dir);
}

// Validates the flags every verb shares; returns the parsed strategy or an
// exit code through `rc`.
std::optional<indgen::Strategy> common_checks(const CommonOpts& o, int& rc) {
  if (o.workers < 0) {
    rc = usage_error("worker count must be >= 0");
    return std::nullopt;
  }
  auto strategy = indgen::strategy_from_string(o.strategy);
  if (!strategy) {
    rc = usage_error("unknown strategy: " + o.strategy +
                     " (expected canonical-path or visited-db)");
    return std::nullopt;
  }
  return strategy;
}

indgen::ClassDatabase load_or_compute(int degree, const CommonOpts& o,
                                      indgen::Strategy strategy) {
  fs::path file = indgen::cache_path(cache_dir_of(o), degree);
  if (!o.compute && fs::exists(file)) {
    indgen::ClassDatabase db = indgen::read_database(file);
    if (db.degree == degree) return db;
  }
  if (degree >= 6) std::cerr << "computing degree " << degree << " ...\n";
  indgen::EnumerateOptions eo;
  eo.strategy = strategy;
  eo.workers = o.workers;
  indgen::ClassDatabase db = indgen::enumerate_classes(degree, eo);
  indgen::write_database(db, file);
  return db;
}

void write_text(const fs::path& file, const std::string& content) {
  if (file.has_parent_path()) fs::create_directories(file.parent_path());
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed while writing " + tmp.string());
  }
  fs::rename(tmp, file);
}

struct EnumerateArgs {
  int n = 0;
  std::string out;
  CommonOpts o;
};

int cmd_enumerate(const EnumerateArgs& a) {
  if (a.n < 1 || a.n > 7) return usage_error("degree out of supported range");
  int rc = 0;
  auto strategy = common_checks(a.o, rc);
  if (!strategy) return rc;
  indgen::ClassDatabase db = load_or_compute(a.n, a.o, *strategy);
  std::cout << "degree " << a.n << ": " << db.class_count() << " classes, "
            << db.total_independent_sets() << " independent sets, "
            << db.generating_class_count() << " generating, "
            << db.dead_end_class_count() << " dead ends\n";
  if (!a.out.empty()) {
    indgen::write_database(db, fs::path(a.out));
    std::cout << "wrote " << a.out << "\n";
  }
  return 0;
}

struct TablesArgs {
  int n_max = 6;
  std::string format = "text";
  std::string out;
  CommonOpts o;
};

int cmd_tables(const TablesArgs& a) {
  if (a.n_max < 1 || a.n_max > 7)
    return usage_error("degree out of supported range");
  auto format = indgen::format_from_string(a.format);
  if (!format)
    return usage_error("unknown format: " + a.format +
                       " (expected text, csv, or json)");
  int rc = 0;
  auto strategy = common_checks(a.o, rc);
  if (!strategy) return rc;
  std::vector<indgen::ClassDatabase> dbs;
  dbs.reserve(static_cast<std::size_t>(a.n_max));
  for (int d = 1; d <= a.n_max; ++d)
    dbs.push_back(load_or_compute(d, a.o, *strategy));
  std::vector<const indgen::ClassDatabase*> by_degree;
  for (const indgen::ClassDatabase& db : dbs) by_degree.push_back(&db);
  std::string rendered = indgen::render_tables(by_degree, *format);
  if (a.out.empty()) {
    std::cout << rendered;
  } else {
    write_text(fs::path(a.out), rendered);
    std::cout << "wrote " << a.out << "\n";
  }
  return 0;
}

struct VerifyArgs {
  int n = 0;
  CommonOpts o;
};

int cmd_verify(const VerifyArgs& a) {
  if (a.n < 1 || a.n > 7) return usage_error("degree out of supported range");
  int rc = 0;
  auto strategy = common_checks(a.o, rc);
  if (!strategy) return rc;
  indgen::VerifyOptions vo;
  vo.workers = a.o.workers;
  std::optional<indgen::ClassDatabase> reference;
  fs::path file = indgen::cache_path(cache_dir_of(a.o), a.n);
  if (fs::exists(file)) {
    try {
      reference = indgen::read_database(file);
      vo.reference = &*reference;
    } catch (const std::exception& e) {
      std::cout << "FAIL reference: " << e.what() << "\n";
      std::cout << "FAIL\n";
      return 1;
    }
  }
  indgen::VerifyReport report = indgen::run_verification(a.n, vo);
  for (const indgen::VerifyCheck& c : report.checks)
    std::cout << (c.ok ? "PASS " : "FAIL ") << c.name << ": " << c.detail
              << "\n";
  std::cout << (report.ok() ? "PASS" : "FAIL") << "\n";
  return report.ok() ? 0 : 1;
}

struct PairsArgs {
  int n = 8;
  CommonOpts o;
};

int cmd_pairs8(const PairsArgs& a) {
  if (a.n < 2 || a.n > 8) return usage_error("degree out of supported range");
  int rc = 0;
  if (!common_checks(a.o, rc)) return rc;
  std::cout << indgen::count_generating_pair_classes(a.n, a.o.workers) << "\n";
  return 0;
}

struct AnalyzeArgs {
  int n = 0;
  std::string out;
  CommonOpts o;
};

int cmd_analyze(const AnalyzeArgs& a) {
  if (a.n < 1 || a.n > 7) return usage_error("degree out of supported range");
  int rc = 0;
  if (!common_checks(a.o, rc)) return rc;
  fs::path file = indgen::cache_path(cache_dir_of(a.o), a.n);
  if (!fs::exists(file)) {
    std::cerr << "error: no cached database for degree " << a.n
              << "; run enumerate first\n";
    return 1;
  }
  indgen::ClassDatabase db = indgen::read_database(file);
  indgen::refresh_analyses(db, a.o.workers);
  indgen::write_database(db, file);
  std::cout << "degree " << a.n << ": analyses refreshed for "
            << db.class_count() << " classes\n";
  if (!a.out.empty()) {
    indgen::write_database(db, fs::path(a.out));
    std::cout << "wrote " << a.out << "\n";
  }
  return 0;
}

void add_common(CLI::App* sub, CommonOpts& o, bool with_strategy = true) {
  sub->add_option("--workers", o.workers, "worker threads (0 = all cores)");
  if (with_strategy)
    sub->add_option("--strategy", o.strategy,
                    "canonical-path or visited-db");
  sub->add_option("--cache-dir", o.cache_dir,
                  "database cache directory (default $INDGEN_CACHE_DIR or "
                  "./.indgen-cache)");
  sub->add_flag("--compute", o.compute, "recompute even when cached");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "classification of the independent subsets of small symmetric groups"};
  app.require_subcommand(1);

  EnumerateArgs ea;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "classify one degree and cache the result");
  enumerate->add_option("--n", ea.n, "degree (1..7)")->required();
  enumerate->add_option("--out", ea.out, "also write the database here");
  add_common(enumerate, ea.o);

  TablesArgs ta;
  CLI::App* tables =
      app.add_subcommand("tables", "render the summary tables");
  tables->add_option("--n-max", ta.n_max, "largest degree to include");
  tables->add_option("--format", ta.format, "text, csv, or json");
  tables->add_option("--out", ta.out, "write the rendering here");
  add_common(tables, ta.o);

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand(
      "verify", "re-derive one degree by independent methods and compare");
  verify->add_option("--n", va.n, "degree (1..7)")->required();
  add_common(verify, va.o);

  PairsArgs pa;
  CLI::App* pairs8 = app.add_subcommand(
      "pairs8", "count generating pair classes (degree 8 by default)");
  pairs8->add_option("--n", pa.n, "degree (2..8)");
  add_common(pairs8, pa.o, /*with_strategy=*/false);

  AnalyzeArgs aa;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "re-run the analyses on a cached database");
  analyze->add_option("--n", aa.n, "degree (1..7)")->required();
  analyze->add_option("--out", aa.out, "also write the database here");
  add_common(analyze, aa.o, /*with_strategy=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(enumerate)) return cmd_enumerate(ea);
    if (app.got_subcommand(tables)) return cmd_tables(ta);
    if (app.got_subcommand(verify)) return cmd_verify(va);
    if (app.got_subcommand(pairs8)) return cmd_pairs8(pa);
    if (app.got_subcommand(analyze)) return cmd_analyze(aa);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
