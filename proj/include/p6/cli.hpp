#pragma once

#include "p6/pvi_core.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace p6::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Environment variable naming the default suite config file.
inline constexpr const char* kConfigEnv = "P6ST_CONFIG";

// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "re", "re+imj", "re-imj", "imj"; each part may also be p/q.
Complex parse_complex(std::string_view text);
std::vector<std::string> split_list(std::string_view text, char sep = ',');

// Shortest decimal that round-trips, independent of locale.
std::string format_double(double v);
std::string format_complex(Complex z);

}  // namespace p6::cli
