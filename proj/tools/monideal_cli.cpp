// Command-line driver. Talks to the library only through monideal.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "monideal/monideal.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Flags {
  std::string input;
  std::string suite;
  std::optional<unsigned> power;
  bool closure = false;
  unsigned nmax = 3;
  bool json = false;
  bool timing = false;
  std::uint64_t trials = 0;
  std::uint64_t seed = 1;
  std::uint64_t max_exp = 0;
  std::optional<double> budget;
  std::optional<std::string> ideal;
};

struct DocDeleter {
  void operator()(mi_document* d) const { mi_document_destroy(d); }
};
struct OptsDeleter {
  void operator()(mi_options* o) const { mi_options_destroy(o); }
};
struct ReportDeleter {
  void operator()(mi_report* r) const { mi_report_destroy(r); }
};

int status_exit(mi_status s) {
  switch (s) {
  case MI_OK: return 0;
  case MI_ERR_BUDGET:
  case MI_ERR_INTERNAL: return kExitFail;
  default: return kExitUsage;
  }
}

int report_error(const std::string& context, mi_status s) {
  std::cerr << "monideal: " << context << ": " << mi_last_error() << "\n";
  return status_exit(s);
}

std::optional<std::string> read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<double> env_budget() {
  const char* raw = std::getenv("MONIDEAL_BUDGET");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0)) {
    std::cerr << "monideal: ignoring MONIDEAL_BUDGET='" << raw << "'\n";
    return std::nullopt;
  }
  return v;
}

void add_common(CLI::App* sub, Flags& f, bool needs_input) {
  if (needs_input) sub->add_option("input", f.input, "Ideal document (text or JSON), - for stdin")->required();
  sub->add_flag("--json", f.json, "Emit one JSON line instead of a text table");
  sub->add_flag("--timing", f.timing, "Report elapsed time");
  sub->add_option("--budget", f.budget, "Seconds per row before it is marked skipped")->check(CLI::PositiveNumber);
}

int run(const std::string& command, const Flags& f) {
  std::unique_ptr<mi_document, DocDeleter> doc;
  if (command != "verify") {
    const auto text = read_input(f.input);
    if (!text) {
      std::cerr << "monideal: cannot read '" << f.input << "'\n";
      return kExitUsage;
    }
    mi_document* raw = nullptr;
    if (const mi_status s = mi_document_parse(text->c_str(), &raw); s != MI_OK) return report_error(f.input, s);
    doc.reset(raw);
    for (std::size_t i = 0; i < mi_document_warning_count(doc.get()); ++i) {
      char* w = nullptr;
      if (mi_document_warning(doc.get(), i, &w) == MI_OK) {
        std::cerr << "monideal: warning: " << w << "\n";
        mi_string_free(w);
      }
    }
  }

  std::unique_ptr<mi_options, OptsDeleter> opts(mi_options_create());
  if (!opts) return kExitFail;
  if (f.power) mi_options_set_power(opts.get(), *f.power);
  mi_options_set_closure(opts.get(), f.closure);
  mi_options_set_nmax(opts.get(), f.nmax);
  mi_options_set_timing(opts.get(), f.timing);
  mi_options_set_trials(opts.get(), f.trials);
  mi_options_set_seed(opts.get(), f.seed);
  mi_options_set_max_exp(opts.get(), f.max_exp);
  if (const auto b = f.budget ? f.budget : env_budget()) mi_options_set_budget(opts.get(), *b);
  if (f.ideal) mi_options_set_ideal(opts.get(), f.ideal->c_str());
  if (!f.suite.empty()) mi_options_set_suite(opts.get(), f.suite.c_str());

  mi_report* raw = nullptr;
  if (const mi_status s = mi_run(command.c_str(), doc.get(), opts.get(), &raw); s != MI_OK)
    return report_error(command, s);
  std::unique_ptr<mi_report, ReportDeleter> report(raw);
  std::cout << (f.json ? mi_report_json(report.get()) : mi_report_text(report.get()));
  std::cout.flush();
  return mi_report_exit_code(report.get());
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial ideals: integral closures, v-numbers and closed-form checks"};
  app.set_version_flag("--version", std::string(mi_version()));
  app.require_subcommand(1);
  Flags f;

  auto* info = app.add_subcommand("info", "Degrees, height and complete-intersection flag");
  add_common(info, f, true);
  add_common(app.add_subcommand("decompose", "Irredundant irreducible decomposition"), f, true);
  add_common(app.add_subcommand("ass", "Associated primes"), f, true);
  auto* closure = app.add_subcommand("closure", "Minimal generators of the closure of I^n");
  add_common(closure, f, true);
  closure->add_option("--power", f.power, "Power n")->check(CLI::PositiveNumber);
  auto* vnum = app.add_subcommand("vnum", "v-number with a witness at every associated prime");
  add_common(vnum, f, true);
  vnum->add_option("--power", f.power, "Power n")->check(CLI::PositiveNumber);
  vnum->add_flag("--closure", f.closure, "Use the integral closure of I^n");
  auto* table = app.add_subcommand("table", "v(I^n) and v(closure of I^n) against the closed forms");
  add_common(table, f, true);
  table->add_option("--nmax", f.nmax, "Largest n")->check(CLI::PositiveNumber);
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_common(verify, f, false);
  verify->add_option("suite", f.suite,
                     "theorem-ci, gen-k2, threegen, uppbnd-h2, wog, ceil or final-corollary")
      ->required();
  verify->add_option("--trials", f.trials, "Random trials (0 keeps the suite default)");
  verify->add_option("--seed", f.seed, "Random seed");
  verify->add_option("--max-exp", f.max_exp, "Largest random exponent (0 keeps the suite default)");

  for (auto* sub : app.get_subcommands({})) {
    if (sub != verify) sub->add_option("--ideal", f.ideal, "Only the named ideal");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  return run(app.get_subcommands().front()->get_name(), f);
}
