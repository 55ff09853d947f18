#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

/// Batch front end: `toric <command> --input <path|-> [--format json|text] [--budget N]`.
namespace toric::cli {

enum class Command { kClassify, kHilbertBasis, kSaturate, kObstruction, kCounterexample, kDecideExtension };
enum class Format { kText, kJson };

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitInternal = 3;

struct JobSpec {
  Command command = Command::kClassify;
  std::string input_path = "-";
  Format format = Format::kText;
  std::optional<std::uint64_t> budget;
};

struct RunResult {
  int status = kExitOk;
  std::string report;      // stdout
  std::string diagnostic;  // stderr
};

std::string_view command_name(Command c);
std::string_view command_summary(Command c);
std::optional<Command> parse_command(std::string_view name);

/// Runs one job. `stdin_stream` backs the input path "-". `budget_env` is the
/// raw TORIC_BUDGET value; an explicit spec.budget takes precedence.
RunResult run(const JobSpec& spec, std::istream& stdin_stream,
              const std::optional<std::string>& budget_env = std::nullopt);

/// Argument parsing plus run(); returns the exit status.
int main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err,
         const std::optional<std::string>& budget_env);

}  // namespace toric::cli
