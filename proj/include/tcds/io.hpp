#pragma once

#include <string>

#include <json.hpp>

#include "tcds/conv.hpp"
#include "tcds/system.hpp"
#include "tcds/verify.hpp"

namespace tcds {

// JSON conventions: complex entries as [re, im]; a matrix as row-major nested
// arrays of entries; an algebra element as {"mats": [block, ...]}. Systems:
// {"k", "group": {"order","table"}, "algebra": {"blocks"}, "alpha":
// [{"perm","units"}, ...], "omega": [[element, ...], ...]}. Group identity
// and inverses are always re-derived from the table, never read from a file.

nlohmann::json matrix_to_json(const Mat& m);
Mat matrix_from_json(const nlohmann::json& j, int rows, int cols, const std::string& ctx);

nlohmann::json element_to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const nlohmann::json& j, const AlgebraShape& shape,
                                 const std::string& ctx);

nlohmann::json system_to_json(const TwistedSystem& sys);
// Parses and structurally checks only; run validate_system separately.
TwistedSystem system_from_json(const nlohmann::json& j);

nlohmann::json conv_to_json(const ConvElement& f);
ConvElement conv_from_json(const nlohmann::json& j, const SystemPtr& sys);

nlohmann::json validation_report_to_json(const ValidationReport& rep);
nlohmann::json theorem_report_to_json(const TheoremReport& rep);

std::string format_validation_report(const ValidationReport& rep);
std::string format_theorem_report(const TheoremReport& rep);

nlohmann::json read_json_file(const std::string& path);     // throws parse_error
void write_json_file(const nlohmann::json& j, const std::string& path);

// Parses, re-validates, and rejects (invalid_system, report attached) any
// file that fails the axioms at tol.
SystemPtr load_system(const std::string& path, double tol = 1e-10);
SystemPtr load_system_unchecked(const std::string& path);
void save_system(const TwistedSystem& sys, const std::string& path);

ConvElement load_conv(const std::string& path, const SystemPtr& sys);
void save_conv(const ConvElement& f, const std::string& path);

}  // namespace tcds
