#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mop/face_partition.hpp"

namespace mop {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitParseError = 2;

struct CommandOptions {
  bool json = false;
  std::size_t max_elements = kDefaultMaxElements;
  std::uint64_t seed = 0;
  std::size_t samples = 20;          // random points drawn by oracle-verify
  std::optional<std::string> point;  // "k=v,k=v", required by conditional-dim
};

const std::vector<std::string>& command_names();

/// Parses `document` and runs one command, writing the report to `out` and
/// diagnostics to `err`. Returns kExitOk, kExitDomainError (including a
/// failed oracle-verify check) or kExitParseError.
int run_command(std::string_view name, std::string_view document, const CommandOptions& options,
                std::ostream& out, std::ostream& err);

}  // namespace mop
