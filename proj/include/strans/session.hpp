#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "strans/game.hpp"

namespace strans {

enum class RowAction { U = 0, D = 1 };
enum class ColAction { L = 0, R = 1 };

char to_char(RowAction a);
char to_char(ColAction a);

// One row of a session file: what both players did in one round of one pair.
struct RoundRecord {
  std::string pair_id;
  int round = 0;  // 1-based, contiguous within a pair
  RowAction row_action = RowAction::U;
  ColAction col_action = ColAction::L;

  SocialState state() const {
    return {static_cast<int>(col_action), static_cast<int>(row_action)};
  }
  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

struct PairSession {
  std::string pair_id;
  std::vector<RoundRecord> rounds;
};

struct DatasetMeta {
  int pairs = 0;
  int rounds = 0;  // T, identical across pairs
  friend bool operator==(const DatasetMeta&, const DatasetMeta&) = default;
};

// A complete repeated-game treatment: the payoff matrix plus every pair's
// round-by-round play. Immutable once parsed or simulated.
struct SessionDataset {
  PayoffMatrix game;
  std::vector<PairSession> pairs;
  DatasetMeta meta;
};

// Malformed input text (bad column count, unknown action symbol, ...).
struct ParseError : std::runtime_error {
  ParseError(int line_arg, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_arg) + ": " + message),
        line(line_arg) {}
  int line;
};

struct ValidationIssue {
  std::string pair_id;
  int round = 0;  // 0 when not tied to a specific round
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

// Structurally parsed input that violates dataset invariants.
struct ValidationError : std::runtime_error {
  explicit ValidationError(ValidationReport report_arg)
      : std::runtime_error(report_arg.to_string()), report(std::move(report_arg)) {}
  ValidationReport report;
};

// Reads the session CSV format (header `pair_id,round,row_action,col_action`,
// actions U/D/L/R case-insensitive, LF or CRLF, pairs may interleave).
// Throws ParseError on malformed rows only; round contiguity and the other
// cross-record invariants are left to validate_dataset.
SessionDataset parse_sessions_unchecked(std::istream& in, const PayoffMatrix& game);

// parse_sessions_unchecked followed by validate_dataset; throws
// ValidationError when the report is non-empty.
SessionDataset parse_sessions(std::istream& in, const PayoffMatrix& game);
SessionDataset parse_sessions(const std::string& text, const PayoffMatrix& game);

// Writes the same CSV format, pairs in stored order, rounds ascending.
void serialize_sessions(const SessionDataset& d, std::ostream& out);
std::string serialize_sessions(const SessionDataset& d);

// Checks every dataset invariant: rounds contiguous 1..T per pair, equal T
// across pairs, T >= 2, meta consistent with contents, distinct pair ids.
ValidationReport validate_dataset(const SessionDataset& d);

}  // namespace strans
