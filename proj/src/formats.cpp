#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

#include "hornkc/cli_io.hpp"

namespace hornkc {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);

    Line line{number, {}};
    std::size_t k = 0;
    while (k < raw.size()) {
      while (k < raw.size() && std::isspace(static_cast<unsigned char>(raw[k]))) ++k;
      const std::size_t start = k;
      while (k < raw.size() && !std::isspace(static_cast<unsigned char>(raw[k]))) ++k;
      if (k > start) line.tokens.push_back(raw.substr(start, k - start));
    }
    if (line.tokens.empty() || line.tokens.front().front() == 'c') continue;
    out.push_back(std::move(line));
  }
  return out;
}

long parse_int(std::string_view token, std::size_t line) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

int parse_width(std::string_view token, std::size_t line) {
  const long n = parse_int(token, line);
  if (n < 1 || n > kMaxWidth) {
    throw ParseError(line, "variable count must lie in 1.." + std::to_string(kMaxWidth));
  }
  return static_cast<int>(n);
}

struct Header {
  int width;
  std::optional<long> count;
  std::size_t line;
};

// Reads "p <format> n [m]" from the first significant line.
Header read_header(const std::vector<Line>& lines, std::string_view format, bool with_count) {
  const std::string expected = "p " + std::string(format);
  if (lines.empty()) throw ParseError(1, "missing problem line '" + expected + "'");
  const Line& first = lines.front();
  const std::size_t arity = with_count ? 4 : 3;
  if (first.tokens.size() != arity || first.tokens[0] != "p" || first.tokens[1] != format) {
    throw ParseError(first.number, "expected problem line '" + expected +
                                       (with_count ? " <vars> <clauses>'" : " <vars>'"));
  }
  Header h{parse_width(first.tokens[2], first.number), std::nullopt, first.number};
  if (with_count) {
    h.count = parse_int(first.tokens[3], first.number);
    if (*h.count < 0) throw ParseError(first.number, "clause count must be nonnegative");
  }
  return h;
}

struct RawClause {
  std::vector<int> literals;
  std::size_t line;
};

// Zero-terminated integer clauses; a clause may span lines.
std::vector<RawClause> read_clauses(const std::vector<Line>& lines, std::size_t from, int width) {
  std::vector<RawClause> out;
  std::optional<RawClause> open;
  for (std::size_t k = from; k < lines.size(); ++k) {
    for (std::string_view token : lines[k].tokens) {
      const long v = parse_int(token, lines[k].number);
      if (!open) open = RawClause{{}, lines[k].number};
      if (v == 0) {
        out.push_back(std::move(*open));
        open.reset();
        continue;
      }
      if (v < -width || v > width) {
        throw ParseError(lines[k].number, "literal " + std::string(token) + " outside 1.." +
                                              std::to_string(width));
      }
      open->literals.push_back(static_cast<int>(v));
    }
  }
  if (open) throw ParseError(open->line, "clause not terminated by 0");
  return out;
}

void check_count(const Header& h, std::size_t actual) {
  if (h.count && static_cast<std::size_t>(*h.count) != actual) {
    throw ParseError(h.line, "problem line announces " + std::to_string(*h.count) +
                                 " clauses, found " + std::to_string(actual));
  }
}

HornClause to_horn_clause(const RawClause& raw) {
  std::vector<Literal> literals;
  for (int v : raw.literals) literals.push_back(v > 0 ? pos(v) : neg(-v));
  try {
    return HornClause::from_literals(literals);
  } catch (const InvalidArgument& e) {
    throw ParseError(raw.line, e.what());
  }
}

VarSet to_positive_set(const RawClause& raw) {
  VarSet s = 0;
  for (int v : raw.literals) {
    if (v < 0) throw ParseError(raw.line, "monotone clause with negative literal " + std::to_string(v));
    if (s & var_bit(v)) throw ParseError(raw.line, "variable " + std::to_string(v) + " repeated");
    s |= var_bit(v);
  }
  return s;
}

std::string clause_line(const HornClause& d) {
  const std::string body = d.is_empty() ? "" : d.to_string() + " ";
  return body + "0\n";
}

std::string set_line(VarSet s) {
  std::string out;
  for (int v : vars_of(s)) out += std::to_string(v) + " ";
  return out + "0\n";
}

std::string negative_set_line(VarSet s) {
  std::string out;
  for (int v : vars_of(s)) out += "-" + std::to_string(v) + " ";
  return out + "0\n";
}

}  // namespace

bool has_problem_line(std::string_view text, std::string_view format) {
  const auto lines = significant_lines(text);
  return !lines.empty() && lines.front().tokens.size() >= 2 && lines.front().tokens[0] == "p" &&
         lines.front().tokens[1] == format;
}

HornCnf parse_horn(std::string_view text) {
  const auto lines = significant_lines(text);
  const Header h = read_header(lines, "horn", true);
  std::vector<HornClause> clauses;
  for (const auto& raw : read_clauses(lines, 1, h.width)) clauses.push_back(to_horn_clause(raw));
  check_count(h, clauses.size());
  return HornCnf(h.width, std::move(clauses));
}

std::string serialize_horn(const HornCnf& h) {
  std::string out =
      "p horn " + std::to_string(h.width()) + " " + std::to_string(h.size()) + "\n";
  for (const auto& d : h.clauses()) out += clause_line(d);
  return out;
}

ModelSet parse_models(std::string_view text) {
  const auto lines = significant_lines(text);
  std::size_t from = 0;
  std::optional<int> width;
  if (!lines.empty() && lines.front().tokens.front() == "p") {
    width = read_header(lines, "models", false).width;
    from = 1;
  }
  if (!width && lines.empty()) throw ParseError(1, "empty model file needs a 'p models <n>' line");
  std::vector<Assignment> members;
  for (std::size_t k = from; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens.size() != 1) throw ParseError(line.number, "expected one bitstring per line");
    const std::string_view row = line.tokens.front();
    if (row.find_first_not_of("01") != std::string_view::npos) {
      throw ParseError(line.number, "invalid character in '" + std::string(row) + "'");
    }
    if (!width) {
      if (row.size() > static_cast<std::size_t>(kMaxWidth)) throw ParseError(line.number, "row too wide");
      width = static_cast<int>(row.size());
    }
    if (row.size() != static_cast<std::size_t>(*width)) {
      throw ParseError(line.number, "row '" + std::string(row) + "' has length " +
                                        std::to_string(row.size()) + ", expected " +
                                        std::to_string(*width));
    }
    members.push_back(Assignment::from_string(row));
  }
  ModelSet out(*width);
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (!out.insert(members[k])) {
      throw ParseError(lines[from + k].number, "duplicate row " + members[k].to_string());
    }
  }
  return out;
}

std::string serialize_models(const ModelSet& s) {
  std::string out = "p models " + std::to_string(s.width()) + "\n";
  for (const auto& x : s) out += x.to_string() + "\n";
  return out;
}

MonotoneDocument parse_monotone(std::string_view text) {
  const auto lines = significant_lines(text);
  const bool dnf = has_problem_line(text, "mono-dnf");
  const Header h = read_header(lines, dnf ? "mono-dnf" : "mono-cnf", true);
  std::vector<VarSet> sets;
  for (const auto& raw : read_clauses(lines, 1, h.width)) sets.push_back(to_positive_set(raw));
  check_count(h, sets.size());
  if (dnf) return MonotoneDnf(h.width, std::move(sets));
  return MonotoneCnf(h.width, std::move(sets));
}

std::string serialize_monotone(const MonotoneCnf& c) {
  std::string out =
      "p mono-cnf " + std::to_string(c.width()) + " " + std::to_string(c.size()) + "\n";
  for (VarSet s : c.sets()) out += set_line(s);
  return out;
}

std::string serialize_monotone(const MonotoneDnf& d) {
  std::string out =
      "p mono-dnf " + std::to_string(d.width()) + " " + std::to_string(d.size()) + "\n";
  for (VarSet s : d.sets()) out += set_line(s);
  return out;
}

Monotone3SatInstance parse_m3sat(std::string_view text) {
  const auto lines = significant_lines(text);
  const Header h = read_header(lines, "cnf", true);
  std::vector<VarSet> monotone, anti;
  const auto clauses = read_clauses(lines, 1, h.width);
  for (const auto& raw : clauses) {
    if (raw.literals.empty() || raw.literals.size() > 3) {
      throw ParseError(raw.line, "clauses need one to three literals");
    }
    const bool positive = raw.literals.front() > 0;
    VarSet s = 0;
    for (int v : raw.literals) {
      if ((v > 0) != positive) throw ParseError(raw.line, "clause mixes positive and negative literals");
      const VarSet bit = var_bit(v > 0 ? v : -v);
      if (s & bit) throw ParseError(raw.line, "variable repeated in clause");
      s |= bit;
    }
    (positive ? monotone : anti).push_back(s);
  }
  check_count(h, clauses.size());
  return Monotone3SatInstance(h.width, std::move(monotone), std::move(anti));
}

std::string serialize_m3sat(const Monotone3SatInstance& inst) {
  std::string out = "p cnf " + std::to_string(inst.width()) + " " +
                    std::to_string(inst.monotone_clauses().size() + inst.anti_clauses().size()) +
                    "\n";
  for (VarSet s : inst.monotone_clauses()) out += set_line(s);
  for (VarSet s : inst.anti_clauses()) out += negative_set_line(s);
  return out;
}

PiDecomposition parse_pi_listing(std::string_view text) {
  const auto lines = significant_lines(text);
  const Header h = read_header(lines, "horn-pi", false);
  std::vector<std::vector<HornClause>> buckets;
  std::size_t k = 1;
  while (k < lines.size()) {
    const Line& head = lines[k];
    if (head.tokens.size() != 3 || head.tokens[0] != "b") {
      throw ParseError(head.number, "expected 'b <index> <count>'");
    }
    const long index = parse_int(head.tokens[1], head.number);
    const long count = parse_int(head.tokens[2], head.number);
    if (index != static_cast<long>(buckets.size())) {
      throw ParseError(head.number, "expected bucket " + std::to_string(buckets.size()));
    }
    if (count < 0 || k + 1 + static_cast<std::size_t>(count) > lines.size()) {
      throw ParseError(head.number, "bucket announces more clauses than the file holds");
    }
    std::vector<Line> body(lines.begin() + static_cast<long>(k) + 1,
                           lines.begin() + static_cast<long>(k) + 1 + count);
    std::vector<HornClause> bucket;
    for (const auto& line : body) {
      const auto raw = read_clauses({line}, 0, h.width);
      if (raw.size() != 1) throw ParseError(line.number, "expected one clause per line");
      bucket.push_back(to_horn_clause(raw.front()));
      if (!in_bucket(bucket.back(), static_cast<int>(index))) {
        throw ParseError(line.number, "clause is not falsified by basis element " +
                                          std::to_string(index));
      }
    }
    buckets.push_back(std::move(bucket));
    k += 1 + static_cast<std::size_t>(count);
  }
  if (buckets.size() != static_cast<std::size_t>(h.width) + 1) {
    throw ParseError(h.line, "expected " + std::to_string(h.width + 1) + " buckets, found " +
                                 std::to_string(buckets.size()));
  }
  return PiDecomposition(h.width, std::move(buckets));
}

std::string serialize_pi_listing(const PiDecomposition& p) {
  std::string out = "p horn-pi " + std::to_string(p.width()) + "\n";
  for (int i = 0; i <= p.width(); ++i) {
    out += "b " + std::to_string(i) + " " + std::to_string(p.bucket(i).size()) + "\n";
    for (const auto& d : p.bucket(i)) out += clause_line(d);
  }
  return out;
}

}  // namespace hornkc
