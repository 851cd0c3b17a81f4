#pragma once

// Command-line front end. Exit codes: 0 success with every route in
// agreement, 1 input error, 2 routes disagree.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ogpush/pushforward.hpp"

namespace ogpush::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitDisagreement = 2;

enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
  int n = 2;
  Component component = Component::Plus;
  std::string class_text;                 // expression, or empty when partition is used
  std::optional<std::vector<int>> partition;
  std::vector<Route> routes{Route::Oracle, Route::Short};
  OutputFormat format = OutputFormat::Text;
  int max_n = 4;
};

struct TableConfig {
  int n = 2;
  int bound = 2;
  Component component = Component::Plus;
  OutputFormat format = OutputFormat::Csv;
  int max_n = 4;
};

struct KTheoryConfig {
  int n = 2;
  std::vector<int> partition;
  std::string component = "both";  // plus, minus or both
  OutputFormat format = OutputFormat::Text;
  int max_n = 4;
};

int cmd_push(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_table(const TableConfig& config, std::ostream& out, std::ostream& err);
int cmd_ktheory(const KTheoryConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ogpush::cli
