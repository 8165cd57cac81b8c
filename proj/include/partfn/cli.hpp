#ifndef PARTFN_CLI_HPP
#define PARTFN_CLI_HPP

#include <iosfwd>

namespace partfn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAuditFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `partfn` tool. Subcommands: count, construct, audit,
/// ratio, hr, verify-all. Returns 0 when every requested check passes, 1
/// when some audit fails, 2 on usage or parameter errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace partfn::cli

#endif  // PARTFN_CLI_HPP
