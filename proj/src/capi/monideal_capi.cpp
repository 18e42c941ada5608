#include "monideal/monideal.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "monideal/closure.hpp"
#include "monideal/decompose.hpp"
#include "monideal/document.hpp"
#include "monideal/errors.hpp"
#include "monideal/runner.hpp"
#include "monideal/vnumber.hpp"

struct mi_document {
  monideal::IdealDocument doc;
};

struct mi_ideal {
  monideal::MonomialIdeal ideal;
};

struct mi_options {
  monideal::RunOptions opts;
};

struct mi_report {
  monideal::RunReport report;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_line = 0;
thread_local std::size_t last_column = 0;

mi_status fail(mi_status status, const char* what) {
  last_error = what;
  return status;
}

// Maps the exception in flight to a status; every entry point funnels through here
// so no C++ exception crosses the boundary.
template <class F>
mi_status guarded(F&& body) {
  last_error.clear();
  last_line = 0;
  last_column = 0;
  try {
    body();
    return MI_OK;
  } catch (const monideal::ParseError& e) {
    last_line = e.line();
    last_column = e.column();
    return fail(MI_ERR_PARSE, e.what());
  } catch (const monideal::DomainError& e) {
    return fail(MI_ERR_DOMAIN, e.what());
  } catch (const monideal::StructuralError& e) {
    return fail(MI_ERR_STRUCTURE, e.what());
  } catch (const monideal::UsageError& e) {
    return fail(MI_ERR_ARGUMENT, e.what());
  } catch (const monideal::BudgetExceeded& e) {
    return fail(MI_ERR_BUDGET, e.what());
  } catch (const monideal::OverflowError& e) {
    return fail(MI_ERR_OVERFLOW, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MI_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MI_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MI_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(bool cond, const char* what) {
  if (!cond) throw monideal::UsageError(what);
}

} // namespace

extern "C" {

const char* mi_version(void) { return "0.1.0"; }

const char* mi_last_error(void) { return last_error.c_str(); }

size_t mi_last_error_line(void) { return last_line; }

size_t mi_last_error_column(void) { return last_column; }

void mi_string_free(char* s) { std::free(s); }

mi_status mi_document_parse(const char* text, mi_document** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new mi_document{monideal::parse_document(text)};
  });
}

void mi_document_destroy(mi_document* doc) { delete doc; }

mi_status mi_document_serialize(const mi_document* doc, mi_format format, char** out) {
  return guarded([&] {
    require(doc && out, "null argument");
    require(format == MI_FORMAT_TEXT || format == MI_FORMAT_JSON, "unknown format");
    *out = dup_string(format == MI_FORMAT_JSON ? monideal::serialize_json(doc->doc)
                                               : monideal::serialize_text(doc->doc));
  });
}

size_t mi_document_ideal_count(const mi_document* doc) { return doc ? doc->doc.ideals.size() : 0; }

mi_status mi_document_ideal_name(const mi_document* doc, size_t index, char** out) {
  return guarded([&] {
    require(doc && out, "null argument");
    require(index < doc->doc.ideals.size(), "ideal index out of range");
    *out = dup_string(doc->doc.ideals[index].name);
  });
}

mi_status mi_document_get_ideal(const mi_document* doc, size_t index, mi_ideal** out) {
  return guarded([&] {
    require(doc && out, "null argument");
    require(index < doc->doc.ideals.size(), "ideal index out of range");
    *out = new mi_ideal{doc->doc.ideals[index].ideal};
  });
}

size_t mi_document_warning_count(const mi_document* doc) { return doc ? doc->doc.warnings.size() : 0; }

mi_status mi_document_warning(const mi_document* doc, size_t index, char** out) {
  return guarded([&] {
    require(doc && out, "null argument");
    require(index < doc->doc.warnings.size(), "warning index out of range");
    *out = dup_string(doc->doc.warnings[index]);
  });
}

void mi_ideal_destroy(mi_ideal* ideal) { delete ideal; }

mi_status mi_ideal_to_string(const mi_ideal* ideal, char** out) {
  return guarded([&] {
    require(ideal && out, "null argument");
    *out = dup_string(monideal::to_string(ideal->ideal));
  });
}

size_t mi_ideal_num_gens(const mi_ideal* ideal) { return ideal ? ideal->ideal.num_gens() : 0; }

mi_status mi_ideal_alpha(const mi_ideal* ideal, uint64_t* out) {
  return guarded([&] {
    require(ideal && out, "null argument");
    *out = monideal::alpha(ideal->ideal);
  });
}

mi_status mi_ideal_delta(const mi_ideal* ideal, uint64_t* out) {
  return guarded([&] {
    require(ideal && out, "null argument");
    *out = monideal::delta(ideal->ideal);
  });
}

mi_status mi_ideal_height(const mi_ideal* ideal, size_t* out) {
  return guarded([&] {
    require(ideal && out, "null argument");
    *out = monideal::height(ideal->ideal);
  });
}

mi_status mi_ideal_is_ci(const mi_ideal* ideal, int* out) {
  return guarded([&] {
    require(ideal && out, "null argument");
    *out = monideal::is_complete_intersection(ideal->ideal) ? 1 : 0;
  });
}

mi_status mi_ideal_power(const mi_ideal* ideal, unsigned n, mi_ideal** out) {
  return guarded([&] {
    require(ideal && out, "null argument");
    *out = new mi_ideal{monideal::power(ideal->ideal, n)};
  });
}

mi_status mi_ideal_closure(const mi_ideal* ideal, unsigned n, mi_ideal** out) {
  return guarded([&] {
    require(ideal && out, "null argument");
    *out = new mi_ideal{monideal::closure_power(ideal->ideal, n)};
  });
}

mi_status mi_ideal_contains(const mi_ideal* ideal, const char* term, int* out) {
  return guarded([&] {
    require(ideal && term && out, "null argument");
    const auto m = monideal::parse_monomial(term, *ideal->ideal.ring());
    *out = monideal::contains(ideal->ideal, m) ? 1 : 0;
  });
}

mi_status mi_ideal_v_number(const mi_ideal* ideal, uint64_t* v, char** witness) {
  return guarded([&] {
    require(ideal && v, "null argument");
    const auto rep = monideal::v_number(ideal->ideal);
    for (const auto& l : rep.locals) {
      if (l.value != rep.v) continue;
      if (witness) *witness = dup_string(monideal::to_string(l.witness.monomial(), *ideal->ideal.ring()));
      break;
    }
    *v = rep.v;
  });
}

mi_options* mi_options_create(void) { return new (std::nothrow) mi_options{}; }

void mi_options_destroy(mi_options* opts) { delete opts; }

void mi_options_set_power(mi_options* opts, unsigned n) {
  if (opts) opts->opts.power = n;
}

void mi_options_set_closure(mi_options* opts, int on) {
  if (opts) opts->opts.closure = on != 0;
}

void mi_options_set_nmax(mi_options* opts, unsigned nmax) {
  if (opts) opts->opts.nmax = nmax;
}

void mi_options_set_timing(mi_options* opts, int on) {
  if (opts) opts->opts.timing = on != 0;
}

void mi_options_set_trials(mi_options* opts, uint64_t trials) {
  if (opts) opts->opts.trials = trials;
}

void mi_options_set_seed(mi_options* opts, uint64_t seed) {
  if (opts) opts->opts.seed = seed;
}

void mi_options_set_max_exp(mi_options* opts, uint64_t max_exp) {
  if (opts) opts->opts.max_exp = max_exp;
}

void mi_options_set_budget(mi_options* opts, double seconds) {
  if (!opts) return;
  if (seconds > 0) opts->opts.budget_seconds = seconds;
  else opts->opts.budget_seconds.reset();
}

mi_status mi_options_set_ideal(mi_options* opts, const char* name) {
  return guarded([&] {
    require(opts, "null argument");
    if (name) opts->opts.ideal_name = name;
    else opts->opts.ideal_name.reset();
  });
}

mi_status mi_options_set_suite(mi_options* opts, const char* suite) {
  return guarded([&] {
    require(opts && suite, "null argument");
    opts->opts.suite = suite;
  });
}

mi_status mi_run(const char* command, const mi_document* doc, const mi_options* opts, mi_report** out) {
  return guarded([&] {
    require(command && out, "null argument");
    const monideal::RunOptions defaults;
    *out = new mi_report{monideal::run_command(command, doc ? &doc->doc : nullptr, opts ? opts->opts : defaults)};
  });
}

void mi_report_destroy(mi_report* report) { delete report; }

const char* mi_report_text(const mi_report* report) { return report ? report->report.text.c_str() : ""; }

const char* mi_report_json(const mi_report* report) { return report ? report->report.json.c_str() : ""; }

int mi_report_exit_code(const mi_report* report) { return report ? report->report.exit_code : 2; }

} // extern "C"
