#pragma once

#include <string>
#include <vector>

#include "scenario.hpp"

namespace mzio {

inline constexpr const char* kVersion = "1.0.0";

struct Report {
    Json body = Json::object();
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    bool ok = true;
};

const std::vector<std::string>& command_names();

// Params merge scenario keys with command-line flags (flags win).
Report run_command(const std::string& command, const Json& params);

// Version-stamped report text in "json" or "csv".
std::string render(const Report& r, const std::string& command, const Json& params, const std::string& format);

}  // namespace mzio
