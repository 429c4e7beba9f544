#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ssice::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Flat `key = value` config merged under the explicit flags. Keys are long
// option names; `jobs` is global, everything else belongs to the subcommand.
std::vector<std::string> merge_config(const std::vector<std::string>& args, const std::string& config_text);

}  // namespace ssice::cli
