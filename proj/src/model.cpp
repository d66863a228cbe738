#include "cppgen/model.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "cppgen/errors.hpp"
#include "cppgen/format.hpp"

namespace cppgen {

void ModelParams::validate() const {
  if (n < 2) throw DomainError("invalid parameters: n >= 2 required");
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw DomainError("invalid parameters: p > 0 required");
  }
  if (!(theta >= 0.0) || !std::isfinite(theta)) {
    throw DomainError("invalid parameters: theta >= 0 required");
  }
  if (!(N > 0.0) || !std::isfinite(N)) {
    throw DomainError("invalid parameters: N > 0 required");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("invalid parameters: alpha > 0 required");
  }
}

void ModelParams::validate_for_forward() const {
  validate();
  if (!(p < N)) {
    throw DomainError(
        "invalid parameters: p < N required (sampling probability p/N in "
        "(0,1))");
  }
}

void validate_origin(const OriginCondition& origin, int n) {
  if (const auto* f = std::get_if<FixedTime>(&origin)) {
    if (!(f->t > 0.0) || !std::isfinite(f->t)) {
      throw DomainError("invalid origin: fixed time t > 0 required");
    }
  } else if (const auto* pr = std::get_if<PowerPrior>(&origin)) {
    if (pr->i < 0) throw DomainError("invalid origin: prior index i >= 0");
    if (pr->i >= n) {
      throw DomainError("invalid origin: prior index i < n required");
    }
  }
}

namespace {

double parse_real(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw DomainError("cannot parse " + what + ": '" + s + "'");
  }
  if (pos != s.size()) throw DomainError("cannot parse " + what + ": '" + s + "'");
  return v;
}

int parse_int(const std::string& s, const std::string& what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("cannot parse " + what + ": '" + s + "'");
  }
  return v;
}

}  // namespace

OriginCondition parse_origin(const std::string& text) {
  if (text == "infinite" || text == "inf") return InfiniteTime{};
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw DomainError("origin must be fixed:<t>, infinite or prior:<i>");
  }
  const std::string kind = text.substr(0, colon);
  const std::string arg = text.substr(colon + 1);
  if (kind == "fixed") return FixedTime{parse_real(arg, "origin time")};
  if (kind == "prior") return PowerPrior{parse_int(arg, "prior index")};
  throw DomainError("origin must be fixed:<t>, infinite or prior:<i>");
}

std::string describe(const OriginCondition& origin) {
  if (const auto* f = std::get_if<FixedTime>(&origin)) {
    return "fixed:" + format_double(f->t);
  }
  if (const auto* pr = std::get_if<PowerPrior>(&origin)) {
    return "prior:" + std::to_string(pr->i);
  }
  return "infinite";
}

double Genealogy::branch_length(int j) const {
  if (j == 0) return origin.to_double();
  return depths.at(static_cast<std::size_t>(j - 1));
}

}  // namespace cppgen
