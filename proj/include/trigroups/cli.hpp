#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tg::cli {

// Exit codes: 0 success, 1 invalid input, 2 a verification or internal check failed.
inline constexpr int EXIT_OK = 0;
inline constexpr int EXIT_INPUT = 1;
inline constexpr int EXIT_CHECK = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tg::cli
