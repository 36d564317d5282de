#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace quasicalc {

enum class Command { classes, chartab, gnz, lambda_basis, faithful, sfixed, quasi };

struct CliConfig {
  Command command = Command::classes;
  std::string group;
  unsigned n = 1;
  std::optional<std::string> sigma;
  std::optional<std::string> h;
  std::optional<std::string> rep;
  bool json = false;
  unsigned threads = 1;
  std::size_t max_order = 10000;
};

// Either a config, or an exit code with text (help goes to stdout with code 0,
// usage errors to stderr with code 2).
struct ParseResult {
  std::optional<CliConfig> config;
  int exit_code = 0;
  std::string message;
};

ParseResult parse_args(const std::vector<std::string>& args);  // args excludes argv[0]

// 0 on success, 1 on domain errors. Results go to out, diagnostics to err.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace quasicalc
