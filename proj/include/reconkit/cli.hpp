#ifndef RECONKIT_CLI_HPP
#define RECONKIT_CLI_HPP

#include <iosfwd>

namespace reconkit {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

/// Entry point of the `reconkit` tool. Reads "-" paths from `in`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace reconkit

#endif  // RECONKIT_CLI_HPP
