#include "app.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <functional>
#include <numeric>
#include <optional>
#include <string>

#include <CLI/CLI.hpp>

#include "cuspval/errors.hpp"
#include "cuspval/resolution.hpp"
#include "cuspval/valring.hpp"
#include "cuspval/valtree.hpp"
#include "emit.hpp"
#include "expression.hpp"
#include "verify.hpp"

namespace cuspval::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<Integer> parse_digit_list(std::string_view text) {
  std::vector<Integer> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (item.empty()) throw InvalidArgument("stream spec: empty digit");
    const Rational r = Rational::parse(item);
    if (!r.is_integer()) throw InvalidArgument("stream spec: digits must be integers");
    out.push_back(r.numerator());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

struct Options {
  std::string format = "text";
  std::string out_path;
};

const std::vector<std::string> kFormats{"text", "json", "dot"};

void add_common(CLI::App* cmd, Options& opts, bool allow_dot) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember(allow_dot ? kFormats : std::vector<std::string>{"text", "json"}));
  cmd->add_option("--out", opts.out_path, "Write output to this file instead of standard output");
}

}  // namespace

CFStream parse_stream_spec(std::string_view text) {
  const std::string spec = trim(text);
  if (spec == "sqrt2") return CFStream::sqrt2();
  if (spec.size() < 2 || spec.front() != '[' || spec.back() != ']') {
    throw InvalidArgument("stream spec: expected 'sqrt2' or '[d0; d1, ..., (period)]'");
  }
  const std::string body = spec.substr(1, spec.size() - 2);
  const auto open = body.find('(');
  const auto close = body.find(')');
  if (open == std::string::npos || close == std::string::npos || close < open || trim(body.substr(close + 1)) != "") {
    throw InvalidArgument("stream spec: a parenthesized period must close the expansion");
  }
  std::string head = body.substr(0, open);
  std::vector<Integer> period = parse_digit_list(body.substr(open + 1, close - open - 1));

  std::vector<Integer> preperiod;
  const auto semi = head.find(';');
  if (semi == std::string::npos) {
    // "[(p...)]": d0 belongs to the period.
    if (trim(head) != "") throw InvalidArgument("stream spec: missing ';' after d0");
  } else {
    preperiod = parse_digit_list(head.substr(0, semi));
    if (preperiod.size() != 1) throw InvalidArgument("stream spec: exactly one digit before ';'");
    std::string rest = trim(head.substr(semi + 1));
    if (!rest.empty()) {
      if (rest.back() != ',') throw InvalidArgument("stream spec: expected ',' before the period");
      rest.pop_back();
      for (auto& d : parse_digit_list(rest)) preperiod.push_back(d);
    }
  }
  if (preperiod.empty()) {
    // Whole expansion periodic: d0 is the first period digit, repeated as a later digit too.
    preperiod.push_back(period.front());
    std::rotate(period.begin(), period.begin() + 1, period.end());
  }
  return CFStream::periodic(std::move(preperiod), std::move(period));
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continued fractions, monomial valuations and cusp resolution"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cuspval 0.1.0");

  Options opts;

  auto* cf_cmd = app.add_subcommand("cf", "Continued fraction of a rational p/q");
  std::string cf_value_text;
  cf_cmd->add_option("value", cf_value_text, "p/q")->required();
  add_common(cf_cmd, opts, false);

  auto* path_cmd = app.add_subcommand("path", "Positive path of a monomial valuation");
  std::vector<std::int64_t> path_ab;
  std::string stream_text;
  std::size_t max_steps = kDefaultMaxSteps;
  std::size_t max_iters = 256;
  auto* path_ab_opt = path_cmd->add_option("ab", path_ab, "nu(x) nu(y)")->expected(2);
  auto* stream_opt = path_cmd->add_option("--stream", stream_text, "nu(x)/nu(y) as 'sqrt2' or '[d0; ..., (period)]'");
  path_ab_opt->excludes(stream_opt);
  path_cmd->add_option("--max-steps", max_steps, "Vertex cap for irrational ratios")->check(CLI::PositiveNumber);
  path_cmd->add_option("--max-iters", max_iters, "Refinement budget per stream comparison")->check(CLI::PositiveNumber);
  add_common(path_cmd, opts, true);

  auto* ring_cmd = app.add_subcommand("ringgens", "Generators of the valuation ring for coprime a > b");
  std::int64_t ring_a = 0, ring_b = 0;
  ring_cmd->add_option("a", ring_a)->required();
  ring_cmd->add_option("b", ring_b)->required();
  add_common(ring_cmd, opts, false);

  auto* member_cmd = app.add_subcommand("member", "Decide membership of a rational function in the valuation ring");
  std::string member_expr;
  std::int64_t member_a = 0, member_b = 0;
  std::string member_stream;
  member_cmd->add_option("expression", member_expr)->required();
  auto* ma = member_cmd->add_option("--a", member_a, "nu(x)");
  auto* mb = member_cmd->add_option("--b", member_b, "nu(y)");
  auto* ms = member_cmd->add_option("--stream", member_stream, "nu(x)/nu(y) as a stream spec");
  ma->needs(mb);
  mb->needs(ma);
  ms->excludes(ma)->excludes(mb);
  member_cmd->add_option("--max-steps", max_steps, "Vertex cap for the union search")->check(CLI::PositiveNumber);
  member_cmd->add_option("--max-iters", max_iters, "Refinement budget per stream comparison")->check(CLI::PositiveNumber);
  add_common(member_cmd, opts, false);

  auto* resolve_cmd = app.add_subcommand("resolve", "Blow-up resolution of x^b = y^a");
  std::int64_t res_a = 0, res_b = 0;
  bool full_trace = false;
  resolve_cmd->add_option("a", res_a)->required();
  resolve_cmd->add_option("b", res_b)->required();
  resolve_cmd->add_flag("--trace", full_trace, "Show both charts of every blow-up");
  add_common(resolve_cmd, opts, true);

  auto* verify_cmd = app.add_subcommand("verify", "Sweep all coprime 1 < b < a <= N");
  std::int64_t verify_max = 0;
  unsigned threads = 0;
  verify_cmd->add_option("--max", verify_max)->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
  add_common(verify_cmd, opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out, cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? ExitCode::ok : ExitCode::usage_error;
  }

  std::string result;
  int code = ExitCode::ok;
  try {
    const bool json = opts.format == "json";
    const bool dot = opts.format == "dot";
    if (*cf_cmd) {
      const Rational r = Rational::parse(cf_value_text);
      const CFExpansion cf = cf_expand(r);
      result = json ? emit_json(to_json(r, cf)) : render_text(r, cf);
    } else if (*path_cmd) {
      if (path_ab.empty() && stream_text.empty()) throw InvalidArgument("path: give <a> <b> or --stream");
      const MonomialValuation nu = stream_text.empty()
                                       ? MonomialValuation::rational(Rational(path_ab[0]), Rational(path_ab[1]))
                                       : MonomialValuation::stream(parse_stream_spec(stream_text), max_iters);
      const PositivePath path = positive_path(nu, max_steps);
      result = json ? emit_json(to_json(path)) : dot ? emit_dot(path) : render_text(path);
    } else if (*ring_cmd) {
      const RingPresentation pres = ring_generators(ring_a, ring_b);
      result = json ? emit_json(to_json(pres)) : render_text(pres);
    } else if (*member_cmd) {
      if (member_stream.empty() && ma->count() == 0) throw InvalidArgument("member: give --a and --b, or --stream");
      MemberReport report;
      report.expression = member_expr;
      report.function = parse_rational_function(member_expr);
      const MonomialValuation nu = member_stream.empty()
                                       ? MonomialValuation::rational(Rational(member_a), Rational(member_b))
                                       : MonomialValuation::stream(parse_stream_spec(member_stream), max_iters);
      report.by_value = membership_by_value(report.function, nu);
      if (member_stream.empty() && member_a > member_b && member_b >= 1 && std::gcd(member_a, member_b) == 1) {
        report.presentation = ring_generators(member_a, member_b);
        report.structural = membership_structural(report.function, *report.presentation);
      }
      const auto& num = report.function.numerator();
      const auto& den = report.function.denominator();
      if (num.size() == 1 && den.size() == 1) {
        const LaurentMonomial m = num.terms().begin()->first / den.terms().begin()->first;
        report.union_search = membership_union(m, nu, max_steps);
      }
      result = json ? emit_json(to_json(report)) : render_text(report);
    } else if (*resolve_cmd) {
      const ResolutionTrace trace = resolve(res_a, res_b);
      result = json ? emit_json(to_json(trace)) : dot ? emit_dot(trace) : render_text(trace, full_trace);
    } else if (*verify_cmd) {
      const VerifyReport report = run_verify(verify_max, threads);
      result = json ? emit_json(to_json(report)) : render_text(report);
      if (!report.ok()) code = ExitCode::verification_failure;
    }
  } catch (const IndecisiveComparison& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::indecisive;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::usage_error;
  }

  if (opts.out_path.empty()) {
    out << result;
  } else {
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file || !(file << result)) {
      err << "error: cannot write " << opts.out_path << "\n";
      return ExitCode::usage_error;
    }
  }
  return code;
}

}  // namespace cuspval::cli
