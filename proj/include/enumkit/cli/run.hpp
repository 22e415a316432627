#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace enumkit::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;

enum class Order { native, lex, discovery };

struct RunConfig {
  std::string subcommand;
  std::string input;  // "-" is stdin
  std::string mode;
  Order order = Order::native;
  std::optional<std::size_t> limit;
  bool stats = false;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> conflict_budget;
};

/// Parses argv (argv[0] is the program name) and runs one subcommand.
/// Solutions go to out one per line, flushed as produced; diagnostics and
/// the --stats JSON go to err.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

/// Result of comparing an engine run against the brute-force path.
struct CrosscheckReport {
  bool equal = false;
  std::size_t duplicates = 0;
  bool order_ok = true;
  bool budget_ok = true;
  std::size_t engine_outputs = 0;
  std::size_t brute_outputs = 0;

  bool ok() const noexcept { return equal && duplicates == 0 && order_ok && budget_ok; }
  std::string summary() const;
};

/// engine: lines in emission order. lex_expected: the engine promises
/// strictly increasing output. gap_calls: oracle calls per gap, checked
/// against budget when one is declared.
CrosscheckReport compare_runs(const std::vector<std::string>& engine, const std::vector<std::string>& brute,
                              bool lex_expected, const std::vector<std::uint64_t>& gap_calls,
                              std::optional<std::uint64_t> budget, bool skip_first_gap = false);

}  // namespace enumkit::cli
