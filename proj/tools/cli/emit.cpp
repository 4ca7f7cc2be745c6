#include "emit.hpp"

#include <limits>
#include <sstream>

namespace cuspval::cli {

using nlohmann::json;

std::string generator_name(const LaurentMonomial& m) {
  std::string s = to_string(m);
  if (s == "x" || s == "y" || s == "1") return s;
  return "(" + s + ")";
}

namespace {

std::string power_of(const LaurentMonomial& generator, std::int64_t e) {
  std::string name = generator_name(generator);
  return e == 1 ? name : name + "^" + std::to_string(e);
}

std::string product_of(const ChartState& c, std::int64_t e1, std::int64_t e2) {
  std::string out;
  if (e1 != 0) out = power_of(c.basis.f(), e1);
  if (e2 != 0) out += (out.empty() ? "" : "*") + power_of(c.basis.g(), e2);
  return out.empty() ? "1" : out;
}

const char* proper_type(const ProperTransform& p) {
  return std::holds_alternative<ThroughOrigin>(p) ? "ThroughOrigin" : "MissesOrigin";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string render_exceptional(const ChartState& c) { return product_of(c, c.exc_a, c.exc_b); }

std::string render_proper(const ChartState& c) {
  if (const auto* through = std::get_if<ThroughOrigin>(&c.proper)) {
    return product_of(c, through->s, 0) + " - " + product_of(c, 0, through->t);
  }
  const auto& misses = std::get<MissesOrigin>(c.proper);
  return "1 - " + product_of(c, misses.k, misses.l);
}

json json_integer(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return json(static_cast<std::int64_t>(v));
  }
  return json(v.str());
}

json to_json(const Rational& value, const CFExpansion& cf) {
  json digits = json::array();
  for (const auto& d : cf.digits()) digits.push_back(json_integer(d));
  json alternate = json::array();
  const CFExpansion alt = cf.alternate();
  for (const auto& d : alt.digits()) alternate.push_back(json_integer(d));
  json convergents = json::array();
  for (const auto& c : cf_convergents(cf, cf.size())) convergents.push_back(c.to_string());
  return {{"value", value.to_string()},
          {"digits", digits},
          {"alternate", alternate},
          {"convergents", convergents},
          {"digit_sum", json_integer(cf.digit_sum())}};
}

json to_json(const PositivePath& path) {
  json vertices = json::array();
  for (const auto& v : path.vertices) vertices.push_back({{"f", to_string(v.f())}, {"g", to_string(v.g())}});
  json j = {{"vertices", vertices}, {"status", path.complete() ? "complete" : "truncated"}};
  if (!path.complete()) j["truncated_at"] = path.vertices.size();
  return j;
}

json to_json(const ChartState& c) {
  json descriptor;
  if (const auto* through = std::get_if<ThroughOrigin>(&c.proper)) {
    descriptor = {{"type", proper_type(c.proper)}, {"s", through->s}, {"t", through->t}};
  } else {
    const auto& misses = std::get<MissesOrigin>(c.proper);
    descriptor = {{"type", proper_type(c.proper)}, {"k", misses.k}, {"l", misses.l}};
  }
  return {{"basis", {{"f", to_string(c.basis.f())}, {"g", to_string(c.basis.g())}}},
          {"exc_a", c.exc_a},
          {"exc_b", c.exc_b},
          {"exceptional", render_exceptional(c)},
          {"proper", render_proper(c)},
          {"descriptor", descriptor},
          {"sign", c.sign}};
}

json to_json(const ResolutionTrace& trace) {
  json steps = json::array();
  for (const auto& step : trace.steps) {
    json children = json::array();
    for (const auto& child : step.children) {
      children.push_back({{"chart", to_json(child.chart)}, {"classification", std::string(to_string(child.classification))}});
    }
    steps.push_back({{"chart", to_json(step.center.chart)},
                     {"classification", std::string(to_string(step.center.classification))},
                     {"children", children}});
  }
  return {{"a", trace.a}, {"b", trace.b}, {"blow_ups", steps}, {"count", trace.blow_up_count()}};
}

json to_json(const RingPresentation& pres) {
  return {{"a", pres.a}, {"b", pres.b}, {"u", to_string(pres.u)}, {"v", to_string(pres.v)}, {"p", pres.p}, {"q", pres.q}};
}

json to_json(const MemberReport& report) {
  json j = {{"expression", report.expression}, {"lowered", to_string(report.function)}, {"by_value", report.by_value}};
  if (report.structural) {
    j["structural"] = {{"member", report.structural->member}, {"gap", report.structural->gap}};
  }
  if (report.presentation) j["ring"] = to_json(*report.presentation);
  if (report.union_search) {
    const auto& u = *report.union_search;
    json found = u.found() ? json{{"index", *u.vertex_index},
                                  {"vertex", {{"f", to_string(u.vertex->f())}, {"g", to_string(u.vertex->g())}}},
                                  {"exponents", {u.exponents.first, u.exponents.second}}}
                           : json(nullptr);
    j["union"] = {{"found", found}, {"vertices_searched", u.vertices_searched}};
  }
  return j;
}

json to_json(const VerifyReport& report) {
  json counter = nullptr;
  if (report.first_counterexample) {
    const auto& r = *report.first_counterexample;
    counter = {{"a", r.a},
               {"b", r.b},
               {"theorem", r.theorem},
               {"correspondence", r.correspondence},
               {"count", r.count},
               {"reconstruction", r.reconstruction},
               {"error", r.error}};
  }
  return {{"max", report.max_a},
          {"pairs", report.pairs},
          {"passed", report.pairs - report.failed},
          {"failed", report.failed},
          {"checks",
           {{"theorem", report.theorem_passed},
            {"correspondence", report.correspondence_passed},
            {"count", report.count_passed},
            {"reconstruction", report.reconstruction_passed}}},
          {"first_counterexample", counter}};
}

json to_json(const CFCorrespondence& report) {
  json expected = json::array();
  for (const auto& d : report.expected_lengths) expected.push_back(json_integer(d));
  json digits = json::array();
  for (const auto& d : report.expansion.digits()) digits.push_back(json_integer(d));
  return {{"a", report.a},
          {"b", report.b},
          {"branch_lengths", report.branch_lengths},
          {"digits", digits},
          {"expected_lengths", expected},
          {"match", report.match}};
}

std::string emit_json(const json& j) { return j.dump(2) + "\n"; }

std::string emit_dot(const PositivePath& path) {
  std::ostringstream os;
  os << "digraph positive_path {\n"
     << "  rankdir=LR;\n"
     << "  node [shape=box, fontname=\"Helvetica\"];\n";
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    os << "  v" << i << " [label=\"" << dot_escape(path.vertices[i].to_string()) << "\", style=bold];\n";
  }
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    os << "  v" << i << " -> v" << i + 1 << " [style=bold];\n";
  }
  if (!path.complete()) {
    os << "  truncated [label=\"truncated after " << path.vertices.size() << " vertices\", shape=plaintext];\n";
    if (!path.vertices.empty()) os << "  v" << path.vertices.size() - 1 << " -> truncated [style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

std::string emit_dot(const ResolutionTrace& trace) {
  std::ostringstream os;
  os << "digraph resolution {\n"
     << "  rankdir=LR;\n"
     << "  label=\"x^" << trace.b << " = y^" << trace.a << ", " << trace.blow_up_count() << " blow-ups\";\n"
     << "  node [shape=box, fontname=\"Helvetica\"];\n";
  if (!trace.steps.empty()) {
    os << "  n0 [label=\"" << dot_escape(trace.steps[0].center.chart.vertex().to_string()) << "\", style=bold];\n";
  }
  std::size_t center = 0;
  std::size_t next_id = 1;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    std::size_t next_center = center;
    for (const auto& child : trace.steps[i].children) {
      const std::size_t id = next_id++;
      const bool bad = child.classification != Classification::resolved;
      os << "  n" << id << " [label=\"" << dot_escape(child.chart.vertex().to_string()) << "\""
         << (bad ? ", style=bold" : "") << "];\n";
      os << "  n" << center << " -> n" << id << (bad ? " [style=bold]" : "") << ";\n";
      if (bad) next_center = id;
    }
    center = next_center;
  }
  os << "}\n";
  return os.str();
}

std::string render_text(const Rational& value, const CFExpansion& cf) {
  std::ostringstream os;
  os << value.to_string() << " = " << cf.to_string() << "\n";
  os << "alternate: " << cf.alternate().to_string() << "\n";
  os << "convergents:";
  for (const auto& c : cf_convergents(cf, cf.size())) os << ' ' << c.to_string();
  os << "\ndigit sum: " << cf.digit_sum() << "\n";
  return os.str();
}

std::string render_text(const PositivePath& path) {
  std::ostringstream os;
  for (std::size_t i = 0; i < path.vertices.size(); ++i) os << i << "  " << path.vertices[i].to_string() << "\n";
  if (path.complete()) {
    os << "complete, " << path.vertices.size() << " vertices\n";
  } else {
    os << "truncated after " << path.vertices.size() << " vertices\n";
  }
  if (path.vertices.size() >= 2) {
    os << "branches:";
    for (const auto& br : branch_decomposition(path)) {
      os << " B(" << to_string(br.s) << ", " << to_string(br.t) << ")=" << br.length;
    }
    os << "\n";
  }
  return os.str();
}

std::string render_text(const ResolutionTrace& trace, bool full) {
  std::ostringstream os;
  os << "x^" << trace.b << " - y^" << trace.a << ": " << trace.blow_up_count() << " blow-ups\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    os << i + 1 << ". " << step.center.chart.vertex().to_string() << "  " << to_string(step.center.classification)
       << "\n";
    if (!full) continue;
    for (const auto& child : step.children) {
      os << "     -> " << child.chart.vertex().to_string() << ": V(" << render_exceptional(child.chart) << ") U V("
         << render_proper(child.chart) << ")  " << to_string(child.classification) << "\n";
    }
  }
  return os.str();
}

std::string render_text(const RingPresentation& pres) {
  std::ostringstream os;
  os << "nu(x) = " << pres.a << ", nu(y) = " << pres.b << "\n";
  os << "p = " << pres.p << ", q = " << pres.q << "  (p*a - q*b = 1)\n";
  os << "R = k[" << to_string(pres.u) << ", " << to_string(pres.v) << "] localized at (" << to_string(pres.v) << ")\n";
  return os.str();
}

std::string render_text(const MemberReport& report) {
  std::ostringstream os;
  os << report.expression << "  =  " << to_string(report.function) << "\n";
  os << "by value: " << (report.by_value ? "member" : "not a member") << "\n";
  if (report.structural) {
    os << "structural: " << (report.structural->member ? "member" : "not a member") << ", v-exponent gap "
       << report.structural->gap << "\n";
  }
  if (report.union_search) {
    const auto& u = *report.union_search;
    if (u.found()) {
      os << "union: found at vertex " << *u.vertex_index << " " << u.vertex->to_string() << "\n";
    } else {
      os << "union: not found within " << u.vertices_searched << " vertices\n";
    }
  }
  return os.str();
}

std::string render_text(const VerifyReport& report) {
  std::ostringstream os;
  os << "coprime pairs 1 < b < a <= " << report.max_a << ": " << report.pairs << "\n";
  os << "  path theorem:        " << report.theorem_passed << "/" << report.pairs << "\n";
  os << "  cf correspondence:   " << report.correspondence_passed << "/" << report.pairs << "\n";
  os << "  blow-up count:       " << report.count_passed << "/" << report.pairs << "\n";
  os << "  reconstruction:      " << report.reconstruction_passed << "/" << report.pairs << "\n";
  if (report.first_counterexample) {
    const auto& r = *report.first_counterexample;
    os << "first counterexample: (" << r.a << ", " << r.b << ")" << (r.error.empty() ? "" : " " + r.error) << "\n";
  }
  os << (report.ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace cuspval::cli
