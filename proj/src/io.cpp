#include "ckp/io.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "ckp/error.hpp"

namespace ckp {
namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(std::move(w));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void ParseError(const Line& line, const std::string& what) {
  Fail(ErrorKind::kParse, "line " + std::to_string(line.number) + ": " + what);
}

Rational ParseRational(const Line& line, const std::string& token) {
  try {
    return Rational::Parse(token);
  } catch (const Error& e) {
    ParseError(line, e.what());
  }
}

int ParseIndex(const Line& line, const std::string& token) {
  if (token.empty() || token.size() > 9 ||
      token.find_first_not_of("0123456789") != std::string::npos) {
    ParseError(line, "expected a positive index, got '" + token + "'");
  }
  const int value = std::atoi(token.c_str());
  if (value < 1) ParseError(line, "index must be at least 1");
  return value;
}

void ExpectHeader(const std::vector<Line>& lines, const std::string& magic) {
  if (lines.empty()) Fail(ErrorKind::kParse, "empty input, expected '" + magic + " 1'");
  const Line& h = lines.front();
  if (h.tokens.size() != 2 || h.tokens[0] != magic) {
    ParseError(h, "expected header '" + magic + " 1'");
  }
  if (h.tokens[1] != "1") ParseError(h, "unsupported " + magic + " format version " + h.tokens[1]);
}

// Reads `term`/`val` lines into a sparse vector, rejecting duplicates.
SparseVector ParseEntries(const std::vector<Line>& lines, std::size_t from,
                          const std::string& keyword) {
  SparseVector out;
  std::set<VarRef> seen;
  for (std::size_t k = from; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.tokens[0] != keyword || l.tokens.size() != 4) {
      ParseError(l, "expected '" + keyword + " <i> <j> <rational>'");
    }
    const VarRef v{ParseIndex(l, l.tokens[1]), ParseIndex(l, l.tokens[2])};
    if (!seen.insert(v).second) ParseError(l, "duplicate entry for " + v.ToString());
    out.set(v, ParseRational(l, l.tokens[3]));
  }
  return out;
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  const auto lines = Tokenize(text);
  ExpectHeader(lines, "ckp");
  if (lines.size() < 2 || lines[1].tokens[0] != "b" || lines[1].tokens.size() != 2) {
    Fail(ErrorKind::kParse, "expected 'b <rational>' after the header");
  }
  Rational capacity = ParseRational(lines[1], lines[1].tokens[1]);

  std::vector<Group> groups;
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const Line& l = lines[k];
    const auto& t = l.tokens;
    if (t[0] != "group" || t.size() < 2) ParseError(l, "expected 'group <n> a ... c ...'");
    const int n = ParseIndex(l, t[1]);
    if (t.size() != static_cast<std::size_t>(2 * n + 4) || t[2] != "a" ||
        t[static_cast<std::size_t>(n) + 3] != "c") {
      ParseError(l, "group line must be 'group " + std::to_string(n) + " a <" +
                        std::to_string(n) + " values> c <" + std::to_string(n) + " values>'");
    }
    Group g;
    for (int j = 0; j < n; ++j) {
      g.weights.push_back(ParseRational(l, t[3 + static_cast<std::size_t>(j)]));
      g.profits.push_back(ParseRational(l, t[4 + static_cast<std::size_t>(n + j)]));
    }
    groups.push_back(std::move(g));
  }
  return Instance::Create(std::move(groups), std::move(capacity));
}

std::string SerializeInstance(const Instance& instance) {
  std::ostringstream out;
  out << "ckp 1\n";
  out << "b " << instance.capacity() << "\n";
  for (const Group& g : instance.groups()) {
    out << "group " << g.size() << " a";
    for (const auto& w : g.weights) out << ' ' << w;
    out << " c";
    for (const auto& c : g.profits) out << ' ' << c;
    out << "\n";
  }
  return out.str();
}

LinearInequality ParseInequality(std::string_view text) {
  const auto lines = Tokenize(text);
  ExpectHeader(lines, "ineq");
  if (lines.size() < 2 || lines[1].tokens[0] != "rhs" || lines[1].tokens.size() != 2) {
    Fail(ErrorKind::kParse, "expected 'rhs <rational>' after the header");
  }
  LinearInequality q;
  q.rhs = ParseRational(lines[1], lines[1].tokens[1]);
  q.coeffs = ParseEntries(lines, 2, "term");
  return q;
}

std::string SerializeInequality(const LinearInequality& inequality) {
  std::ostringstream out;
  out << "ineq 1\n";
  out << "rhs " << inequality.rhs << "\n";
  for (const auto& [v, coeff] : inequality.coeffs.entries()) {
    out << "term " << v.group << ' ' << v.slot << ' ' << coeff << "\n";
  }
  return out.str();
}

Point ParsePoint(std::string_view text) {
  const auto lines = Tokenize(text);
  ExpectHeader(lines, "point");
  Point p;
  p.values = ParseEntries(lines, 1, "val");
  for (const auto& [v, value] : p.values.entries()) {
    if (value.sign() < 0 || value > Rational(1)) {
      Fail(ErrorKind::kValidation,
           "value of " + v.ToString() + " = " + value.ToString() + " is outside [0, 1]");
    }
  }
  return p;
}

std::string SerializePointValues(const Point& point) {
  std::ostringstream out;
  for (const auto& [v, value] : point.values.entries()) {
    out << "val " << v.group << ' ' << v.slot << ' ' << value << "\n";
  }
  return out.str();
}

std::string SerializePoint(const Point& point) {
  return "point 1\n" + SerializePointValues(point);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kParse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace ckp
