#include "puiseux/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "puiseux/error.hpp"

namespace puiseux {

using json = nlohmann::ordered_json;

namespace {

json rat_json(const Rat& r) { return r.get_str(); }

json val_json(const Val& v) {
  if (v.is_infinite()) return "inf";
  json a = json::array();
  for (const auto& c : v.coords()) a.push_back(rat_json(c));
  return a;
}

json exp_json(const ExpVec& e) {
  json a = json::array();
  for (const auto& c : e) a.push_back(rat_json(c));
  return a;
}

json trace_json(const std::vector<TraceStep>& trace) {
  json steps = json::array();
  for (std::size_t s = 0; s < trace.size(); ++s) {
    const auto& d = trace[s].set;
    json eta = json::array(), gamma = json::array(), c = json::array();
    for (std::size_t i = 0; i < d.eta.size(); ++i) {
      eta.push_back(val_json(d.eta[i]));
      gamma.push_back(d.gamma[i] ? exp_json(*d.gamma[i]) : json("inf"));
      c.push_back(rat_json(d.c[i]));
    }
    steps.push_back({{"step", s}, {"eta", eta}, {"gamma", gamma}, {"c", c}, {"d_gamma", trace[s].d_gamma}});
  }
  return steps;
}

json coords_json(const ProblemSpec& spec, const std::vector<std::vector<SeriesTerm>>& coords) {
  json out = json::array();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    json terms = json::array();
    for (const auto& t : coords[i])
      terms.push_back({{"coeff", rat_json(t.coeff)}, {"exp", exp_json(t.exp)}, {"step", t.step}});
    out.push_back({{"var", spec.ynames.at(i)}, {"series", series_str(spec, coords[i])}, {"terms", terms}});
  }
  return out;
}

json solution_json(const ProblemSpec& spec, const SeriesSolution& s) {
  return {{"exact", s.exact},
          {"ramification_index", s.ramification_index},
          {"residual_order", val_json(s.residual_order)},
          {"coordinates", coords_json(spec, s.coords)},
          {"trace", trace_json(s.trace)}};
}

json problem_json(const ProblemSpec& spec) {
  json weight = json::array();
  for (const auto& row : spec.weight.data()) weight.push_back(exp_json(row));
  json gens = json::array();
  for (const auto& g : spec.gens) gens.push_back(g.str(spec.xnames, spec.ynames));
  return {{"N", spec.n()},
          {"M", spec.m()},
          {"x_vars", spec.xnames},
          {"y_vars", spec.ynames},
          {"weight", weight},
          {"generators", gens},
          {"options",
           {{"max_terms", spec.options.max_terms},
            {"max_branches", spec.options.max_branches},
            {"positive_only", spec.options.positive_only},
            {"max_groebner_pairs", spec.options.max_groebner_pairs}}}};
}

[[noreturn]] void bad(const std::string& msg) { throw ParseError("solution file: " + msg, 1, 1); }

Rat rat_from(const json& j) {
  if (!j.is_string()) bad("rational must be a string");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const Error&) {
    bad("malformed rational '" + j.get<std::string>() + "'");
  }
}

ExpVec exp_from(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) bad("exponent must be an array of " + std::to_string(n) + " rationals");
  ExpVec e;
  for (const auto& c : j) e.push_back(rat_from(c));
  return e;
}

Val val_from(const json& j, std::size_t d) {
  if (j.is_string() && j.get<std::string>() == "inf") return Val::infinity();
  if (!j.is_array() || j.size() != d) bad("value must be \"inf\" or an array of " + std::to_string(d) + " rationals");
  std::vector<Rat> v;
  for (const auto& c : j) v.push_back(rat_from(c));
  return Val(std::move(v));
}

std::size_t count_from(const json& j, const char* what) {
  if (!j.is_number_unsigned()) bad(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

SeriesSolution solution_from(const ProblemSpec& spec, const json& j) {
  if (!j.is_object() || !j.contains("coordinates")) bad("solution object needs 'coordinates'");
  const std::size_t n = spec.n(), m = spec.m(), d = spec.weight.rows();
  SeriesSolution s;
  s.coords.assign(m, {});
  if (j.contains("exact")) {
    if (!j["exact"].is_boolean()) bad("'exact' must be a boolean");
    s.exact = j["exact"].get<bool>();
  }
  if (j.contains("ramification_index")) {
    s.ramification_index = count_from(j["ramification_index"], "ramification_index");
    if (s.ramification_index == 0) bad("ramification_index must be positive");
  }
  if (j.contains("residual_order")) s.residual_order = val_from(j["residual_order"], d);
  const json& coords = j["coordinates"];
  if (!coords.is_array()) bad("'coordinates' must be an array");
  std::vector<bool> seen(m, false);
  for (const auto& c : coords) {
    if (!c.is_object() || !c.contains("var") || !c["var"].is_string()) bad("coordinate needs a 'var' name");
    auto name = c["var"].get<std::string>();
    auto it = std::find(spec.ynames.begin(), spec.ynames.end(), name);
    if (it == spec.ynames.end()) bad("unknown y variable '" + name + "'");
    std::size_t i = static_cast<std::size_t>(it - spec.ynames.begin());
    if (seen[i]) bad("duplicate coordinate '" + name + "'");
    seen[i] = true;
    if (!c.contains("terms") || !c["terms"].is_array()) bad("coordinate needs a 'terms' array");
    for (const auto& t : c["terms"]) {
      if (!t.is_object() || !t.contains("coeff") || !t.contains("exp")) bad("term needs 'coeff' and 'exp'");
      SeriesTerm st{rat_from(t["coeff"]), exp_from(t["exp"], n),
                    t.contains("step") ? count_from(t["step"], "step") : 0};
      s.coords[i].push_back(std::move(st));
    }
  }
  if (j.contains("trace")) {
    if (!j["trace"].is_array()) bad("'trace' must be an array");
    for (const auto& step : j["trace"]) {
      if (!step.is_object()) bad("trace step must be an object");
      for (const char* key : {"eta", "gamma", "c"})
        if (!step.contains(key) || !step[key].is_array() || step[key].size() != m)
          bad(std::string("trace step needs '") + key + "' with one entry per y variable");
      TraceStep ts;
      for (std::size_t i = 0; i < m; ++i) {
        ts.set.eta.push_back(val_from(step["eta"][i], d));
        const json& g = step["gamma"][i];
        if (g.is_string() && g.get<std::string>() == "inf")
          ts.set.gamma.emplace_back(std::nullopt);
        else
          ts.set.gamma.emplace_back(exp_from(g, n));
        ts.set.c.push_back(rat_from(step["c"][i]));
      }
      validate(ts.set, spec.weight);
      ts.d_gamma = step.contains("d_gamma") ? count_from(step["d_gamma"], "d_gamma") : 1;
      s.trace.push_back(std::move(ts));
    }
  }
  return s;
}

std::string rat_vector_str(const std::vector<Rat>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string trace_plain(const std::vector<TraceStep>& trace) {
  std::ostringstream os;
  for (std::size_t s = 0; s < trace.size(); ++s) {
    const auto& d = trace[s].set;
    os << "    step " << s << ": eta=" << to_string(d.eta) << " gamma=[";
    for (std::size_t i = 0; i < d.gamma.size(); ++i)
      os << (i ? ", " : "") << (d.gamma[i] ? rat_vector_str(*d.gamma[i]) : "inf");
    os << "] c=" << rat_vector_str(d.c) << " dGamma=" << trace[s].d_gamma << '\n';
  }
  return os.str();
}

}  // namespace

std::string series_str(const ProblemSpec& spec, const std::vector<SeriesTerm>& terms) {
  std::vector<Term> ts;
  for (const auto& t : terms) ts.push_back(Term{t.coeff, t.exp, YDeg(spec.m(), 0)});
  // Keep expansion order: print term by term.
  if (ts.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    LPoly one(spec.n(), spec.m(), {ts[k]});
    std::string s = one.str(spec.xnames, spec.ynames);
    if (k == 0)
      out = s;
    else if (s[0] == '-')
      out += " - " + s.substr(1);
    else
      out += " + " + s;
  }
  return out;
}

std::string report_json(const ProblemSpec& spec, const ExpansionResult& result) {
  json doc;
  doc["problem"] = problem_json(spec);
  json sols = json::array();
  for (const auto& s : result.solutions) sols.push_back(solution_json(spec, s));
  doc["solutions"] = sols;
  json dead = json::array();
  for (const auto& d : result.dead)
    dead.push_back({{"reason", d.reason},
                    {"partial", coords_json(spec, d.partial_terms)},
                    {"trace", trace_json(d.trace)}});
  doc["dead_branches"] = dead;
  doc["diagnostics"] = result.diagnostics;
  return doc.dump(2) + "\n";
}

std::string report_plain(const ProblemSpec& spec, const ExpansionResult& result) {
  std::ostringstream os;
  os << "N=" << spec.n() << " M=" << spec.m() << " W=[";
  for (std::size_t r = 0; r < spec.weight.rows(); ++r)
    os << (r ? ", " : "") << rat_vector_str(spec.weight.data()[r]);
  os << "]\n";
  for (const auto& g : spec.gens) os << "  gen " << g.str(spec.xnames, spec.ynames) << '\n';
  os << result.solutions.size() << " solution(s)\n";
  for (std::size_t k = 0; k < result.solutions.size(); ++k) {
    const auto& s = result.solutions[k];
    os << "solution " << k + 1 << ": " << (s.exact ? "exact" : "truncated")
       << ", ramification " << s.ramification_index << ", residual order " << s.residual_order.str() << '\n';
    for (std::size_t i = 0; i < s.coords.size(); ++i)
      os << "  " << spec.ynames[i] << " = " << series_str(spec, s.coords[i]) << '\n';
    os << trace_plain(s.trace);
  }
  for (const auto& d : result.dead) {
    os << "dead branch after " << d.trace.size() << " step(s): " << d.reason << '\n';
    os << trace_plain(d.trace);
  }
  for (const auto& msg : result.diagnostics) os << "note: " << msg << '\n';
  return os.str();
}

std::string solutions_json(const ProblemSpec& spec, const std::vector<SeriesSolution>& sols) {
  json a = json::array();
  for (const auto& s : sols) a.push_back(solution_json(spec, s));
  return a.dump(2) + "\n";
}

std::vector<SeriesSolution> parse_solutions(const ProblemSpec& spec, const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  const json* list = &doc;
  if (doc.is_object() && doc.contains("solutions")) list = &doc["solutions"];
  std::vector<SeriesSolution> out;
  if (list->is_array()) {
    for (const auto& s : *list) out.push_back(solution_from(spec, s));
  } else {
    out.push_back(solution_from(spec, *list));
  }
  return out;
}

std::vector<CheckEntry> check_solutions(const ProblemSpec& spec, const std::vector<SeriesSolution>& sols) {
  std::vector<CheckEntry> out;
  for (const auto& s : sols) out.push_back(CheckEntry{verify(spec.gens, s, spec.weight), s.exact});
  return out;
}

std::string check_report_plain(const std::vector<CheckEntry>& entries) {
  std::ostringstream os;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& e = entries[k];
    os << "solution " << k + 1 << ": residual order "
       << (e.residual_order.is_infinite() ? std::string("infinity") : e.residual_order.str());
    if (e.claimed_exact && e.residual_order.is_finite()) os << " (claimed exact, but residual is nonzero)";
    os << '\n';
  }
  return os.str();
}

std::string check_report_json(const std::vector<CheckEntry>& entries) {
  json a = json::array();
  for (const auto& e : entries)
    a.push_back({{"residual_order", val_json(e.residual_order)}, {"claimed_exact", e.claimed_exact}});
  return a.dump(2) + "\n";
}

}  // namespace puiseux
