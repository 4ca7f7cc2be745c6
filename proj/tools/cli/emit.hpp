#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "cuspval/exactnum.hpp"
#include "cuspval/laurent.hpp"
#include "cuspval/resolution.hpp"
#include "cuspval/valring.hpp"
#include "cuspval/valtree.hpp"
#include "verify.hpp"

namespace cuspval::cli {

/// A generator as a factor: "y", or "(x/y^2)" when it is not a bare variable.
std::string generator_name(const LaurentMonomial& m);
/// c1^excA * c2^excB written in the chart's generators, e.g. "(x/y)^6*(y^3/x^2)^2".
std::string render_exceptional(const ChartState& c);
/// The proper transform in the chart's generators, e.g. "y - (x/y)^2".
std::string render_proper(const ChartState& c);

struct MemberReport {
  std::string expression;
  RationalFunction function;
  bool by_value = false;
  std::optional<StructuralMembership> structural;
  std::optional<RingPresentation> presentation;
  std::optional<UnionMembership> union_search;
};

/// Integers that fit in 64 bits are JSON numbers; larger ones are decimal strings.
nlohmann::json json_integer(const Integer& v);

nlohmann::json to_json(const Rational& value, const CFExpansion& cf);
nlohmann::json to_json(const PositivePath& path);
nlohmann::json to_json(const ChartState& c);
nlohmann::json to_json(const ResolutionTrace& trace);
nlohmann::json to_json(const RingPresentation& pres);
nlohmann::json to_json(const MemberReport& report);
nlohmann::json to_json(const VerifyReport& report);
nlohmann::json to_json(const CFCorrespondence& report);

/// Deterministic, two-space indented, keys sorted, trailing newline.
std::string emit_json(const nlohmann::json& j);

/// Chain of bold "k[f, g]" nodes; a truncated path ends in a dashed marker node.
std::string emit_dot(const PositivePath& path);
/// All charts of the resolution; blown-up charts are bold.
std::string emit_dot(const ResolutionTrace& trace);

std::string render_text(const Rational& value, const CFExpansion& cf);
std::string render_text(const PositivePath& path);
std::string render_text(const ResolutionTrace& trace, bool full);
std::string render_text(const RingPresentation& pres);
std::string render_text(const MemberReport& report);
std::string render_text(const VerifyReport& report);

}  // namespace cuspval::cli
