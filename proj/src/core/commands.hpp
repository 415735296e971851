#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "report.hpp"

namespace striphardy {

struct CommandOptions {
    double grid_half_width = 16.0;
    std::size_t grid_size = 2048;
    double tol = 1e-5;
    std::uint64_t seed = 42;
    std::string out_dir = ".";
    std::string input_path;                 // extend: optional input vector CSV
    std::string function_spec = "identity"; // extend: g grammar
    std::string approach = "ray:theta=-5";  // profile
    std::vector<int> n_list = {0, 1, 2};    // deficiency: atomic indices
    std::vector<int> k_list = {0};          // deficiency: truncated midline indices
};

// Exit codes: 0 success, 2 audit/residual failure, 3 parse error. Parse errors
// are thrown as Error(parse_error)/Error(io_error) without writing anything.
ReportBundle cmd_analyze(const std::string& spec_path, const CommandOptions& opt);
ReportBundle cmd_deficiency(const std::string& spec_path, const CommandOptions& opt);
ReportBundle cmd_split(const std::string& spec_path, const CommandOptions& opt);
ReportBundle cmd_extend(const std::string& spec_path, const CommandOptions& opt);
ReportBundle cmd_profile(const std::string& spec_path, const CommandOptions& opt);

// Dispatch by name; writes the bundle to opt.out_dir and returns the exit code.
// Parse/IO failures return 3 with the message in *error_message.
int run_command(const std::string& command, const std::string& spec_path,
                const CommandOptions& opt, std::string* error_message);

}  // namespace striphardy
