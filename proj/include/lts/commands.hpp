#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace lts {

inline constexpr const char* kToolName = "lts";
inline constexpr const char* kToolVersion = "0.1.0";

enum class Command { verify, analyze, embed, decompose };

/// Exit codes: 0 all certificates hold, 1 a certificate failed, 2 bad input.
enum ExitCode : int { kExitPass = 0, kExitCertificateFailure = 1, kExitInputError = 2 };

struct CommandOptions {
  std::uint64_t seed = 0;
  std::size_t random_probes = 16;
};

struct CommandResult {
  int exit_code = kExitPass;
  std::string json;     ///< full report, empty on input errors
  std::string summary;  ///< short human-readable text
  std::string error;    ///< input error message with location
};

/// Runs a command on raw file contents. `source` names the input in error
/// messages only; reports depend on the contents alone.
CommandResult run_command(Command command, const std::string& contents, const std::string& source,
                          const CommandOptions& options = {});
CommandResult run_command_file(Command command, const std::filesystem::path& path, const CommandOptions& options = {});

}  // namespace lts
