#include "monideal/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

#include <json.hpp>

#include "monideal/closure.hpp"
#include "monideal/deadline.hpp"
#include "monideal/decompose.hpp"
#include "monideal/errors.hpp"
#include "monideal/formulas.hpp"
#include "monideal/verify.hpp"
#include "monideal/vnumber.hpp"

namespace monideal {

namespace {

using json = nlohmann::ordered_json;

class TextTable {
public:
  explicit TextTable(std::vector<std::string> headers) : headers_(std::move(headers)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string render() const {
    std::vector<std::size_t> width(headers_.size(), 0);
    auto measure = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    };
    measure(headers_);
    for (const auto& r : rows_) measure(r);
    std::string out;
    auto emit = [&](const std::vector<std::string>& row) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line + "\n";
    };
    emit(headers_);
    for (const auto& r : rows_) emit(r);
    return out;
  }

private:
  std::vector<std::string> headers_;
  std::vector<std::vector<std::string>> rows_;
};

std::optional<Clock::time_point> deadline_for(const RunOptions& o) {
  if (!o.budget_seconds) return std::nullopt;
  return Clock::now() +
         std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*o.budget_seconds));
}

// Runs body under the per-row budget; false when the budget ran out.
bool within_budget(const RunOptions& o, const std::function<void()>& body) {
  try {
    ScopedDeadline scope(deadline_for(o));
    body();
    return true;
  } catch (const BudgetExceeded&) {
    return false;
  }
}

std::vector<const NamedIdeal*> selected(const IdealDocument& doc, const RunOptions& o) {
  std::vector<const NamedIdeal*> out;
  if (o.ideal_name) {
    const auto* n = doc.find(*o.ideal_name);
    if (!n) throw UsageError("no ideal named '" + *o.ideal_name + "'");
    out.push_back(n);
  } else {
    for (const auto& n : doc.ideals) out.push_back(&n);
  }
  return out;
}

std::vector<std::string> generator_strings(const MonomialIdeal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.gens()) out.push_back(to_string(g, *ideal.ring()));
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string formula_cell(const FormulaResult& f) {
  switch (f.applicability) {
  case Applicability::Exact: return std::to_string(f.value);
  case Applicability::UpperBound: return "<=" + std::to_string(f.value);
  case Applicability::LowerBound: return ">=" + std::to_string(f.value);
  case Applicability::NotApplicable: return "-";
  }
  return "-";
}

json formula_json(const FormulaResult& f, const Ring& ring) {
  json j;
  j["applicability"] = to_string(f.applicability);
  if (f.applicability != Applicability::NotApplicable) j["value"] = f.value;
  if (f.witness) j["witness"] = to_string(*f.witness, ring);
  j["citation"] = f.citation;
  if (!f.notes.empty()) j["notes"] = f.notes;
  return j;
}

// Agreement of a formula with the search value.
bool consistent(const FormulaResult& f, Exponent oracle) {
  switch (f.applicability) {
  case Applicability::Exact: return f.value == oracle;
  case Applicability::UpperBound: return oracle <= f.value;
  case Applicability::LowerBound: return oracle >= f.value;
  case Applicability::NotApplicable: return true;
  }
  return true;
}

unsigned power_of(const IdealDocument& doc, const RunOptions& o) {
  const unsigned n = o.power.value_or(doc.power.value_or(1));
  if (n == 0) throw UsageError("power must be at least 1");
  return n;
}

std::string target_name(const std::string& name, bool closure, unsigned n) {
  std::string base = n == 1 ? name : name + "^" + std::to_string(n);
  return closure ? "closure(" + base + ")" : base;
}

struct Output {
  std::string text;
  json results = json::array();
  int exit_code = 0;
};

Output cmd_info(const IdealDocument& doc, const RunOptions& o) {
  Output out;
  TextTable t({"ideal", "generators", "alpha", "delta", "height", "ci", "equigenerated"});
  for (const auto* n : selected(doc, o)) {
    const auto& I = n->ideal;
    const bool ci = is_complete_intersection(I);
    const bool eq = is_equigenerated(I);
    t.add({n->name, to_string(I), std::to_string(alpha(I)), std::to_string(delta(I)), std::to_string(height(I)),
           yes_no(ci), yes_no(eq)});
    json j;
    j["ideal"] = n->name;
    j["generators"] = generator_strings(I);
    j["alpha"] = alpha(I);
    j["delta"] = delta(I);
    j["height"] = height(I);
    j["complete_intersection"] = ci;
    j["equigenerated"] = eq;
    out.results.push_back(std::move(j));
  }
  out.text = t.render();
  return out;
}

Output cmd_decompose(const IdealDocument& doc, const RunOptions& o) {
  Output out;
  TextTable t({"ideal", "component"});
  for (const auto* n : selected(doc, o)) {
    json comps = json::array();
    for (const auto& c : irreducible_decomposition(n->ideal).components) {
      t.add({n->name, to_string(c)});
      comps.push_back(to_string(c));
    }
    json j;
    j["ideal"] = n->name;
    j["components"] = std::move(comps);
    out.results.push_back(std::move(j));
  }
  out.text = t.render();
  return out;
}

Output cmd_ass(const IdealDocument& doc, const RunOptions& o) {
  Output out;
  TextTable t({"ideal", "prime", "height", "minimal"});
  for (const auto* n : selected(doc, o)) {
    const auto mins = minimal_primes(n->ideal);
    json primes = json::array();
    for (const auto& p : associated_primes(n->ideal)) {
      const bool minimal = std::find(mins.begin(), mins.end(), p) != mins.end();
      t.add({n->name, to_string(p), std::to_string(p.height()), yes_no(minimal)});
      json pj;
      pj["prime"] = to_string(p);
      pj["height"] = p.height();
      pj["minimal"] = minimal;
      primes.push_back(std::move(pj));
    }
    json j;
    j["ideal"] = n->name;
    j["primes"] = std::move(primes);
    out.results.push_back(std::move(j));
  }
  out.text = t.render();
  return out;
}

Output cmd_closure(const IdealDocument& doc, const RunOptions& o) {
  Output out;
  const unsigned pw = power_of(doc, o);
  TextTable t({"ideal", "n", "generators"});
  for (const auto* n : selected(doc, o)) {
    std::optional<MonomialIdeal> c;
    const bool done = within_budget(o, [&] { c = closure_power(n->ideal, pw); });
    json j;
    j["ideal"] = n->name;
    j["power"] = pw;
    if (done) {
      t.add({n->name, std::to_string(pw), to_string(*c)});
      j["generators"] = generator_strings(*c);
      j["alpha"] = alpha(*c);
    } else {
      t.add({n->name, std::to_string(pw), "skipped"});
      j["status"] = "skipped";
    }
    out.results.push_back(std::move(j));
  }
  out.text = t.render();
  return out;
}

Output cmd_vnum(const IdealDocument& doc, const RunOptions& o) {
  Output out;
  const unsigned pw = power_of(doc, o);
  const bool cl = o.closure || doc.closure;
  TextTable t({"ideal", "target", "prime", "v", "witness"});
  for (const auto* n : selected(doc, o)) {
    const std::string target = target_name(n->name, cl, pw);
    std::optional<VNumberReport> rep;
    const bool done = within_budget(o, [&] {
      rep = v_number(cl ? closure_power(n->ideal, pw) : power(n->ideal, pw));
    });
    json j;
    j["ideal"] = n->name;
    j["target"] = target;
    if (!done) {
      t.add({n->name, target, "-", "skipped", "-"});
      j["status"] = "skipped";
      out.results.push_back(std::move(j));
      continue;
    }
    const Ring& ring = *n->ideal.ring();
    json locals = json::array();
    const LocalVNumber* best = nullptr;
    for (const auto& l : rep->locals) {
      const std::string w = to_string(l.witness.monomial(), ring);
      t.add({n->name, target, to_string(l.witness.prime()), std::to_string(l.value), w});
      json lj;
      lj["prime"] = to_string(l.witness.prime());
      lj["value"] = l.value;
      lj["witness"] = w;
      locals.push_back(std::move(lj));
      if (!best && l.value == rep->v) best = &l;
    }
    t.add({n->name, target, "min", std::to_string(rep->v), to_string(best->witness.monomial(), ring)});
    j["v"] = rep->v;
    j["witness"] = to_string(best->witness.monomial(), ring);
    j["locals"] = std::move(locals);
    out.results.push_back(std::move(j));
  }
  out.text = t.render();
  return out;
}

Output cmd_table(const IdealDocument& doc, const RunOptions& o) {
  Output out;
  if (o.nmax == 0) throw UsageError("nmax must be at least 1");
  TextTable t({"ideal", "n", "v(I^n)", "formula", "v(cl I^n)", "formula", "gap", "check"});
  for (const auto* n : selected(doc, o)) {
    const auto& I = n->ideal;
    const Ring& ring = *I.ring();
    for (unsigned k = 1; k <= o.nmax; ++k) {
      const auto fp = predict_power_v(I, k);
      const auto fc = predict_closure_v(I, k);
      Exponent vp = 0, vc = 0;
      const bool done = within_budget(o, [&] {
        vp = v_number(power(I, k)).v;
        vc = v_number(closure_power(I, k)).v;
      });
      json j;
      j["ideal"] = n->name;
      j["n"] = k;
      j["v_power_formula"] = formula_json(fp, ring);
      j["v_closure_formula"] = formula_json(fc, ring);
      if (!done) {
        t.add({n->name, std::to_string(k), "-", formula_cell(fp), "-", formula_cell(fc), "-", "skipped"});
        j["status"] = "skipped";
        out.results.push_back(std::move(j));
        continue;
      }
      const bool ok = consistent(fp, vp) && consistent(fc, vc);
      if (!ok) out.exit_code = 1;
      const auto gap = static_cast<std::int64_t>(vp) - static_cast<std::int64_t>(vc);
      t.add({n->name, std::to_string(k), std::to_string(vp), formula_cell(fp), std::to_string(vc), formula_cell(fc),
             std::to_string(gap), ok ? "ok" : "MISMATCH"});
      j["v_power"] = vp;
      j["v_closure"] = vc;
      j["gap"] = gap;
      j["status"] = ok ? "ok" : "mismatch";
      out.results.push_back(std::move(j));
    }
  }
  out.text = t.render();
  return out;
}

Output cmd_verify(const RunOptions& o) {
  Output out;
  if (o.suite.empty()) throw UsageError("verify needs a suite name");
  SuiteOptions so;
  so.trials = o.trials;
  so.seed = o.seed;
  so.max_exp = o.max_exp;
  so.budget_seconds = o.budget_seconds;
  const auto rep = run_suite(o.suite, so);

  TextTable t({"case", "expected", "observed", "status"});
  json cases = json::array();
  for (const auto& c : rep.cases) {
    t.add({c.label, c.expected, c.observed, to_string(c.status)});
    json cj;
    cj["case"] = c.label;
    cj["expected"] = c.expected;
    cj["observed"] = c.observed;
    cj["status"] = c.status == CaseStatus::Fail ? "fail" : to_string(c.status);
    cases.push_back(std::move(cj));
  }
  out.text = t.render() + rep.suite + ": " + std::to_string(rep.passed) + " passed, " + std::to_string(rep.failed) +
             " failed, " + std::to_string(rep.skipped) + " skipped\n";
  json j;
  j["suite"] = rep.suite;
  j["passed"] = rep.passed;
  j["failed"] = rep.failed;
  j["skipped"] = rep.skipped;
  j["cases"] = std::move(cases);
  out.results.push_back(std::move(j));
  out.exit_code = rep.ok() ? 0 : 1;
  return out;
}

} // namespace

RunReport run_command(const std::string& command, const IdealDocument* doc, const RunOptions& options) {
  const auto start = Clock::now();
  Output out;
  if (command == "verify") {
    out = cmd_verify(options);
  } else {
    using Handler = Output (*)(const IdealDocument&, const RunOptions&);
    Handler h = nullptr;
    if (command == "info") h = cmd_info;
    else if (command == "decompose") h = cmd_decompose;
    else if (command == "ass") h = cmd_ass;
    else if (command == "closure") h = cmd_closure;
    else if (command == "vnum") h = cmd_vnum;
    else if (command == "table") h = cmd_table;
    else throw UsageError("unknown command '" + command + "'");
    if (!doc) throw UsageError(command + " needs an input document");
    out = h(*doc, options);
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();

  RunReport r;
  r.command = command;
  r.exit_code = out.exit_code;
  r.text = std::move(out.text);
  json j;
  j["command"] = command;
  j["seed"] = options.seed;
  j["results"] = std::move(out.results);
  if (options.timing) {
    j["seconds"] = seconds;
    char buf[64];
    std::snprintf(buf, sizeof buf, "elapsed %.3f s\n", seconds);
    r.text += buf;
  }
  r.json = j.dump() + "\n";
  return r;
}

} // namespace monideal
