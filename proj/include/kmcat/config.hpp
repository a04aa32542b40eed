#pragma once

// Cartan datum config files:
//   { "cartan_matrix": [[2,-1],[-1,2]],
//     "t": [{"i":0,"j":1,"value":"1"}],
//     "s": [{"i":0,"j":1,"p":1,"q":1,"value":"1"}] }
// Indices are 0-based, rationals are strings ("p/q") or integers.

#include "kmcat/klr.hpp"
#include "kmcat/report.hpp"

#include <string>

namespace kmcat {

/// Throws Error(Config) with line and column for syntax errors and with the
/// offending field otherwise; GCM errors propagate from validate_gcm.
KLRParams parse_config(const std::string& text, const std::string& source = "<config>");
KLRParams load_config(const std::string& path);

/// Inverse of parse_config, for echoing inputs in reports.
Json config_json(const KLRParams& params);

}  // namespace kmcat
