#pragma once

// Stable JSON form of exceptional-set reports (schema "zetagamma/1").
// Integers that fit in int64 are JSON numbers, larger ones are strings;
// rationals are strings "p" or "p/q".

#include <string>

#include "zetagamma/verdict_engine.hpp"

namespace zg {

inline constexpr const char* kReportSchema = "zetagamma/1";

std::string serialize_report(const ExceptionalSetReport& report, int indent = -1);
/// Inverse of serialize_report; throws ParseError on malformed documents.
ExceptionalSetReport parse_report(const std::string& text);

std::string serialize_verdict(std::uint64_t n, const Verdict& v);

}  // namespace zg
