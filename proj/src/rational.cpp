#include "topocut/rational.hpp"

#include "topocut/error.hpp"

namespace topocut {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DimensionMismatch: return "DIMENSION_MISMATCH";
    case Errc::DegenerateSpan: return "DEGENERATE_SPAN";
    case Errc::NotGeneralPosition: return "NOT_GENERAL_POSITION";
    case Errc::ClassCountMismatch: return "CLASS_COUNT_MISMATCH";
    case Errc::SearchExhausted: return "SEARCH_EXHAUSTED";
    case Errc::PerturbationFailed: return "PERTURBATION_FAILED";
    case Errc::UnequalClassSizes: return "UNEQUAL_CLASS_SIZES";
    case Errc::RecursionFailed: return "RECURSION_FAILED";
    case Errc::OddTypeCount: return "ODD_TYPE_COUNT";
    case Errc::MalformedSplit: return "MALFORMED_SPLIT";
    case Errc::ParameterRange: return "PARAMETER_RANGE";
    case Errc::IncompleteColoring: return "INCOMPLETE_COLORING";
    case Errc::InvalidLabeling: return "INVALID_LABELING";
    case Errc::NotIntersectingFamily: return "NOT_INTERSECTING_FAMILY";
    case Errc::GenerationFailed: return "GENERATION_FAILED";
    case Errc::IoError: return "IO_ERROR";
    case Errc::SchemaError: return "SCHEMA_ERROR";
  }
  return "UNKNOWN";
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) fail(Errc::SchemaError, "empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Integer(std::string(text)));
    }
    const std::string num(text.substr(0, slash));
    const std::string den(text.substr(slash + 1));
    if (num.empty() || den.empty())
      fail(Errc::SchemaError, "malformed rational literal '" + std::string(text) + "'");
    Integer d(den);
    if (d == 0) fail(Errc::SchemaError, "zero denominator in '" + std::string(text) + "'");
    return Rational(Integer(num), d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::SchemaError, "malformed rational literal '" + std::string(text) + "'");
  }
}

std::string rational_to_string(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

}  // namespace topocut
