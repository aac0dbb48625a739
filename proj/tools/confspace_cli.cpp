// Command-line front end: Betti and Hodge tables, purity, series, self-test.

#include <cstdio>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "confspace/lemmas.hpp"
#include "confspace/report.hpp"
#include "confspace/series.hpp"
#include "confspace/specseq.hpp"

using namespace confspace;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string n_text = "0..4";
  int n_min = 0, n_max = 4;
  int t_order = 5;
  std::string format = "table";
  std::string engine = "spectral";
  std::string which = "K";
  int workers = 1;
  bool allow_n6 = false;
  bool modular_prescreen = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void parse_n_range(RunConfig& cfg) {
  static const std::regex single(R"(\s*(\d+)\s*)"), range(R"(\s*(\d+)\s*\.\.\s*(\d+)\s*)");
  std::smatch m;
  if (std::regex_match(cfg.n_text, m, single)) {
    cfg.n_min = cfg.n_max = std::stoi(m[1]);
  } else if (std::regex_match(cfg.n_text, m, range)) {
    cfg.n_min = std::stoi(m[1]);
    cfg.n_max = std::stoi(m[2]);
    if (cfg.n_min > cfg.n_max) throw UsageError("--n range " + cfg.n_text + " is empty");
  } else {
    throw UsageError("--n expects INT or A..B, got '" + cfg.n_text + "'");
  }
}

// The quotient engine is capped at n = 5; n = 6 needs --allow-n6 and a lot of memory.
void check_engine_cap(const RunConfig& cfg, bool uses_engine) {
  if (!uses_engine) return;
  if (cfg.n_max > 6) throw UsageError("the spectral engine supports n <= 6");
  if (cfg.n_max == 6 && !cfg.allow_n6) throw UsageError("n = 6 requires --allow-n6");
  if (cfg.n_max == 6) std::cerr << "warning: n = 6 builds E2 pieces with up to ~6e6 free monomials and needs several GB\n";
}

SpectralOptions spectral_options(const RunConfig& cfg) {
  SpectralOptions o;
  o.workers = cfg.workers;
  o.modular_prescreen = cfg.modular_prescreen;
  return o;
}

std::string join(const std::vector<std::int64_t>& v, const char* sep) {
  std::ostringstream out;
  for (std::size_t k = 0; k < v.size(); ++k) out << (k ? sep : "") << v[k];
  return out.str();
}

void emit_json(const Json& j) { std::cout << j.dump() << '\n' << std::flush; }

// --- betti ------------------------------------------------------------------

int cmd_betti(const RunConfig& cfg) {
  const bool spectral = cfg.engine != "series", series = cfg.engine != "spectral";
  check_engine_cap(cfg, spectral);
  bool ok = true;
  if (cfg.format == "csv") std::cout << "n,i,h_i\n";
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    std::optional<std::vector<std::int64_t>> from_engine, from_series;
    if (spectral) {
      auto report = spectral_report(n, spectral_options(cfg));
      from_engine = report.betti;
    }
    if (series) from_series = series_betti(n);
    std::optional<bool> match;
    if (from_engine && from_series) match = *from_engine == *from_series;
    if (match == false) ok = false;
    const auto& shown = from_engine ? *from_engine : *from_series;

    if (cfg.format == "csv") {
      for (std::size_t i = 0; i < shown.size(); ++i) std::cout << n << ',' << i << ',' << shown[i] << '\n';
      if (match == false) std::cerr << "n=" << n << ": mismatch, series gives " << join(*from_series, ",") << '\n';
      std::cout << std::flush;
    } else if (cfg.format == "json") {
      Json j{{"n", n}};
      if (from_engine) j["spectral"] = *from_engine;
      if (from_series) j["series"] = *from_series;
      if (match) j["match"] = *match;
      emit_json(j);
    } else {
      std::cout << "n=" << n;
      if (from_engine) std::cout << "  spectral h = " << join(*from_engine, ",");
      if (from_series) std::cout << "  series h = " << join(*from_series, ",");
      if (match) std::cout << "  " << (*match ? "match" : "MISMATCH");
      std::cout << '\n' << std::flush;
    }
  }
  return ok ? kExitOk : kExitFailed;
}

// --- hodge ------------------------------------------------------------------

void print_hodge_table(int n, const char* label, const HodgeTable& t) {
  std::cout << "n=" << n << ' ' << label << ':';
  for (const auto& [k, d] : t)
    std::cout << "  h^{" << k.a << ',' << k.b << "}(H^" << k.i << ")=" << d;
  std::cout << '\n';
}

int cmd_hodge(const RunConfig& cfg) {
  const bool spectral = cfg.engine != "series", series = cfg.engine != "spectral";
  check_engine_cap(cfg, spectral);
  bool ok = true;
  if (cfg.format == "csv") std::cout << "n,i,a,b,h\n";
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    std::optional<HodgeTable> from_engine, from_series;
    if (spectral) from_engine = spectral_report(n, spectral_options(cfg)).hodge;
    if (series) from_series = series_hodge(n);
    std::optional<bool> match;
    if (from_engine && from_series) match = *from_engine == *from_series;
    if (match == false) ok = false;
    const auto& shown = from_engine ? *from_engine : *from_series;

    if (cfg.format == "csv") {
      for (const auto& [k, d] : shown) std::cout << n << ',' << k.i << ',' << k.a << ',' << k.b << ',' << d << '\n';
      if (match == false) std::cerr << "n=" << n << ": Hodge tables differ between engines\n";
      std::cout << std::flush;
    } else if (cfg.format == "json") {
      Json j{{"n", n}};
      if (from_engine) j["spectral"] = hodge_json(*from_engine);
      if (from_series) j["series"] = hodge_json(*from_series);
      if (match) j["match"] = *match;
      emit_json(j);
    } else {
      if (from_engine) print_hodge_table(n, "spectral", *from_engine);
      if (from_series) print_hodge_table(n, "series", *from_series);
      if (match) std::cout << "n=" << n << ' ' << (*match ? "match" : "MISMATCH") << '\n';
      std::cout << std::flush;
    }
  }
  return ok ? kExitOk : kExitFailed;
}

// --- purity -----------------------------------------------------------------

int cmd_purity(const RunConfig& cfg) {
  check_engine_cap(cfg, true);
  bool ok = true;
  if (cfg.format == "csv") std::cout << "n,pure,violations\n";
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const auto report = spectral_report(n, spectral_options(cfg));
    ok = ok && report.purity_ok;
    std::ostringstream viol;
    for (std::size_t k = 0; k < report.violations.size(); ++k)
      viol << (k ? " " : "") << '(' << report.violations[k].first << ',' << report.violations[k].second << ')';
    if (cfg.format == "json") {
      emit_json(spectral_report_json(report));
    } else if (cfg.format == "csv") {
      std::cout << n << ',' << (report.purity_ok ? "true" : "false") << ',' << viol.str() << '\n' << std::flush;
    } else {
      std::cout << "n=" << n << "  " << (report.purity_ok ? "pure" : "NOT pure")
                << "  violations: [" << viol.str() << "]\n" << std::flush;
    }
  }
  return ok ? kExitOk : kExitFailed;
}

// --- series -----------------------------------------------------------------

Series series_by_name(const std::string& which, int order) {
  if (which == "K") return expand(punctured_torus_conf_closed_form(), order);
  if (which == "K4") return expand(punctured_torus_conf_hodge_closed_form(), order);
  if (which == "Z") return macdonald_zeta(punctured_torus_compact_betti(), order);
  if (which == "Z4") return cheah_zeta(punctured_torus_compact_hodge(), order);
  if (which == "A1") return expand(genus_zero_conf_closed_form(), order);
  throw UsageError("--which must be one of K, K4, Z, Z4, A1");
}

int cmd_series(const RunConfig& cfg) {
  const Series s = series_by_name(cfg.which, cfg.t_order);
  if (cfg.format == "json") {
    for (std::size_t k = 0; k < s.size(); ++k) emit_json(series_coefficient_json(s[k], static_cast<int>(k)));
  } else if (cfg.format == "csv") {
    std::cout << "t,x,y,u,value\n";
    for (std::size_t k = 0; k < s.size(); ++k)
      for (const auto& [e, c] : s[k].terms())
        std::cout << k << ',' << e.x << ',' << e.y << ',' << e.u << ',' << c.get_str() << '\n';
  } else {
    for (std::size_t k = 0; k < s.size(); ++k) std::cout << "t^" << k << ": " << s[k].to_string() << '\n';
  }
  return kExitOk;
}

// --- selftest ---------------------------------------------------------------

int cmd_selftest(const RunConfig& cfg) {
  check_engine_cap(cfg, true);
  LemmaOptions opts;
  opts.workers = cfg.workers;
  bool ok = true;
  std::vector<LemmaResult> all;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    auto results = run_lemmas(n, opts);
    for (const auto& r : results) {
      ok = ok && r.pass;
      if (cfg.format == "table") {
        std::printf("%s n=%d %-34s %7.2fs%s%s\n", r.pass ? "PASS" : "FAIL", r.n, r.name.c_str(), r.seconds,
                    r.pass ? "" : "  counterexample: ", r.counterexample.c_str());
      } else if (cfg.format == "csv") {
        std::printf("%d,%s,%s\n", r.n, r.name.c_str(), r.pass ? "pass" : "fail");
      }
    }
    std::fflush(stdout);
    all.insert(all.end(), results.begin(), results.end());
  }
  if (cfg.format == "json") emit_json(lemma_summary_json(all));
  else if (cfg.format == "table") std::cout << (ok ? "all properties pass" : "some properties FAIL") << '\n';
  return ok ? kExitOk : kExitFailed;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_n, bool with_engine) {
  if (with_n) sub->add_option("--n", cfg.n_text, "n as INT or A..B")->capture_default_str();
  if (with_engine)
    sub->add_option("--engine", cfg.engine, "spectral, series or both")
        ->check(CLI::IsMember({"spectral", "series", "both"}))
        ->capture_default_str();
  sub->add_option("--format", cfg.format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_flag("--allow-n6", cfg.allow_n6, "permit n = 6 for the spectral engine");
  sub->add_flag("--modular-prescreen", cfg.modular_prescreen, "rank pre-screen modulo a word-size prime");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of unordered configuration spaces of the punctured torus"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* betti = app.add_subcommand("betti", "Betti numbers per n");
  add_common(betti, cfg, true, true);
  auto* hodge = app.add_subcommand("hodge", "mixed Hodge numbers per n");
  add_common(hodge, cfg, true, true);
  auto* purity = app.add_subcommand("purity", "E3 purity check per n");
  add_common(purity, cfg, true, false);
  auto* series = app.add_subcommand("series", "expand a generating function");
  add_common(series, cfg, false, false);
  series->add_option("--which", cfg.which, "K, K4, Z, Z4 or A1")->capture_default_str();
  series->add_option("--t-order", cfg.t_order, "expand through t^order")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  auto* selftest = app.add_subcommand("selftest", "property suite per n");
  add_common(selftest, cfg, true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!series->parsed()) parse_n_range(cfg);
    if (betti->parsed()) return cmd_betti(cfg);
    if (hodge->parsed()) return cmd_hodge(cfg);
    if (purity->parsed()) return cmd_purity(cfg);
    if (series->parsed()) return cmd_series(cfg);
    if (selftest->parsed()) return cmd_selftest(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
