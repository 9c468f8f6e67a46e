#include "strans/session.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace strans {
namespace {

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(strip(cur));
  return out;
}

RowAction parse_row_action(const std::string& tok, int line) {
  if (tok.size() == 1) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    if (c == 'U') return RowAction::U;
    if (c == 'D') return RowAction::D;
  }
  throw ParseError(line, "unknown row action '" + tok + "' (expected U or D)");
}

ColAction parse_col_action(const std::string& tok, int line) {
  if (tok.size() == 1) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    if (c == 'L') return ColAction::L;
    if (c == 'R') return ColAction::R;
  }
  throw ParseError(line, "unknown col action '" + tok + "' (expected L or R)");
}

}  // namespace

char to_char(RowAction a) { return a == RowAction::U ? 'U' : 'D'; }
char to_char(ColAction a) { return a == ColAction::L ? 'L' : 'R'; }

std::string ValidationReport::to_string() const {
  if (issues.empty()) return "ok";
  std::ostringstream os;
  for (const auto& issue : issues) {
    os << "pair " << (issue.pair_id.empty() ? "<dataset>" : issue.pair_id);
    if (issue.round > 0) os << " round " << issue.round;
    os << ": " << issue.message << '\n';
  }
  return os.str();
}

SessionDataset parse_sessions_unchecked(std::istream& in, const PayoffMatrix& game) {
  SessionDataset d;
  d.game = game;

  std::map<std::string, size_t> pair_slot;  // pair_id -> index in d.pairs
  std::string line;
  int lineno = 0;
  bool saw_header = false;

  while (std::getline(in, line)) {
    ++lineno;
    std::string t = strip(line);
    if (t.empty()) continue;
    if (!saw_header) {
      auto cols = split_csv(t);
      if (cols.size() != 4 || cols[0] != "pair_id" || cols[1] != "round" ||
          cols[2] != "row_action" || cols[3] != "col_action") {
        throw ParseError(lineno,
                         "expected header 'pair_id,round,row_action,col_action'");
      }
      saw_header = true;
      continue;
    }
    auto cols = split_csv(t);
    if (cols.size() != 4) {
      throw ParseError(lineno, "expected 4 columns, got " + std::to_string(cols.size()));
    }
    RoundRecord rec;
    rec.pair_id = cols[0];
    if (rec.pair_id.empty()) throw ParseError(lineno, "empty pair_id");
    try {
      size_t pos = 0;
      rec.round = std::stoi(cols[1], &pos);
      if (pos != cols[1].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError(lineno, "bad round '" + cols[1] + "'");
    }
    if (rec.round < 1) throw ParseError(lineno, "round must be >= 1");
    rec.row_action = parse_row_action(cols[2], lineno);
    rec.col_action = parse_col_action(cols[3], lineno);

    auto it = pair_slot.find(rec.pair_id);
    if (it == pair_slot.end()) {
      it = pair_slot.emplace(rec.pair_id, d.pairs.size()).first;
      d.pairs.push_back(PairSession{rec.pair_id, {}});
    }
    // Gaps, duplicates and disorder are reported by validate_dataset so the
    // lint path can list them all; parsing only rejects malformed text.
    d.pairs[it->second].rounds.push_back(std::move(rec));
  }
  if (!saw_header) throw ParseError(lineno == 0 ? 1 : lineno, "empty input, header missing");

  d.meta.pairs = static_cast<int>(d.pairs.size());
  d.meta.rounds = d.pairs.empty() ? 0 : static_cast<int>(d.pairs.front().rounds.size());
  return d;
}

SessionDataset parse_sessions(std::istream& in, const PayoffMatrix& game) {
  SessionDataset d = parse_sessions_unchecked(in, game);
  ValidationReport report = validate_dataset(d);
  if (!report.ok()) throw ValidationError(std::move(report));
  return d;
}

SessionDataset parse_sessions(const std::string& text, const PayoffMatrix& game) {
  std::istringstream in(text);
  return parse_sessions(in, game);
}

void serialize_sessions(const SessionDataset& d, std::ostream& out) {
  out << "pair_id,round,row_action,col_action\n";
  for (const auto& pair : d.pairs) {
    for (const auto& rec : pair.rounds) {
      out << rec.pair_id << ',' << rec.round << ',' << to_char(rec.row_action)
          << ',' << to_char(rec.col_action) << '\n';
    }
  }
}

std::string serialize_sessions(const SessionDataset& d) {
  std::ostringstream os;
  serialize_sessions(d, os);
  return os.str();
}

ValidationReport validate_dataset(const SessionDataset& d) {
  ValidationReport report;
  auto add = [&report](std::string pair, int round, std::string msg) {
    report.issues.push_back({std::move(pair), round, std::move(msg)});
  };

  if (d.pairs.empty()) {
    add("", 0, "dataset contains no pairs");
    return report;
  }

  std::map<std::string, int> seen;
  for (const auto& pair : d.pairs) {
    if (++seen[pair.pair_id] == 2) {
      add(pair.pair_id, 0, "duplicate pair id");
    }
  }

  const int T = static_cast<int>(d.pairs.front().rounds.size());
  for (const auto& pair : d.pairs) {
    int expect = 1;
    for (const auto& rec : pair.rounds) {
      if (rec.pair_id != pair.pair_id) {
        add(pair.pair_id, rec.round, "record pair_id mismatch");
      }
      if (rec.round != expect) {
        add(pair.pair_id, expect, "expected round " + std::to_string(expect) +
                                      ", got " + std::to_string(rec.round));
        expect = rec.round;  // report only the first break per run
      }
      ++expect;
    }
    const int t = static_cast<int>(pair.rounds.size());
    if (t != T) {
      add(pair.pair_id, 0, "round count " + std::to_string(t) +
                               " differs from first pair's " + std::to_string(T));
    }
  }
  if (T < 2) {
    add("", 0, "T >= 2 required for transitions (got T=" + std::to_string(T) + ")");
  }
  if (d.meta.pairs != static_cast<int>(d.pairs.size())) {
    add("", 0, "meta.pairs=" + std::to_string(d.meta.pairs) + " but dataset has " +
                   std::to_string(d.pairs.size()) + " pairs");
  }
  if (d.meta.rounds != T) {
    add("", 0, "meta.rounds=" + std::to_string(d.meta.rounds) + " but pairs have T=" +
                   std::to_string(T));
  }
  return report;
}

}  // namespace strans
