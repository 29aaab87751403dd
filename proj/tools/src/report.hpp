#pragma once

#include <string>

#include "json.hpp"

#include "flagaut/autgroup.hpp"
#include "flagaut/parabolic.hpp"

namespace flagaut::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {schema, input, normal_form, phi, picard_rank, aut, notes}. Throws
/// ParseError or DomainError; callers map them to exit codes.
Json spec_report(const std::string& input);
/// spec_report plus a "classification" block (canonical form, contractions).
Json classify_report(const std::string& input);
Json phi_report(const std::string& input);
Json contract_report(const std::string& input, int root);

Json aut_json(const AutDescriptor& a);
Json error_json(const std::string& input, const std::string& name, const std::string& detail);

/// Indented key: value text for the terminal.
std::string render_text(const Json& j);

}  // namespace flagaut::cli
