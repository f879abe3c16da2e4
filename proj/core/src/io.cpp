#include "ealab/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "ealab/error.hpp"

namespace ealab {

namespace {

struct Line {
  std::size_t number;
  std::string key;
  std::vector<std::string> args;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    std::istringstream in{std::string(raw)};
    std::string word;
    if (!(in >> word)) continue;
    if (word.back() != ':') {
      throw ParseError(ErrorKind::kParseError, number,
                       "expected '<directive>:', got '" + word + "'");
    }
    Line line{number, word.substr(0, word.size() - 1), {}};
    while (in >> word) line.args.push_back(word);
    out.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return out;
}

void expect_args(const Line& line, std::size_t count) {
  if (line.args.size() != count) {
    throw ParseError(ErrorKind::kParseError, line.number,
                     "'" + line.key + ":' takes " + std::to_string(count) +
                         " argument(s), got " +
                         std::to_string(line.args.size()));
  }
}

// Header shared by all three formats.
class Header {
 public:
  std::optional<std::size_t> elements;
  std::vector<std::string> names;
  std::map<std::string, Element> index;
  std::optional<Element> one;

  // Returns true when the line was a header directive.
  bool consume(const Line& line) {
    if (line.key == "elements") {
      expect_args(line, 1);
      once(elements.has_value(), line);
      std::size_t n = 0;
      const auto& s = line.args[0];
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
      if (ec != std::errc{} || p != s.data() + s.size() || n < 2) {
        throw ParseError(ErrorKind::kParseError, line.number,
                         "element count must be an integer >= 2");
      }
      elements = n;
      return true;
    }
    if (line.key == "names") {
      once(!names.empty(), line);
      if (!elements) {
        throw ParseError(ErrorKind::kParseError, line.number,
                         "'names:' before 'elements:'");
      }
      if (line.args.size() != *elements) {
        throw ParseError(ErrorKind::kParseError, line.number,
                         "expected " + std::to_string(*elements) +
                             " names, got " +
                             std::to_string(line.args.size()));
      }
      for (Element i = 0; i < line.args.size(); ++i) {
        if (!index.emplace(line.args[i], i).second) {
          throw ParseError(ErrorKind::kParseError, line.number,
                           "duplicate name '" + line.args[i] + "'");
        }
      }
      names = line.args;
      return true;
    }
    if (line.key == "one") {
      expect_args(line, 1);
      once(one.has_value(), line);
      one = lookup(line, line.args[0]);
      return true;
    }
    return false;
  }

  Element lookup(const Line& line, const std::string& name) const {
    if (names.empty()) {
      throw ParseError(ErrorKind::kParseError, line.number,
                       "'" + line.key + ":' before 'names:'");
    }
    auto it = index.find(name);
    if (it == index.end()) {
      throw ParseError(ErrorKind::kUnknownName, line.number,
                       "unknown element '" + name + "'");
    }
    return it->second;
  }

  void require_names() const {
    if (!elements) {
      throw ParseError(ErrorKind::kParseError, 0, "missing 'elements:' line");
    }
    if (names.empty()) {
      throw ParseError(ErrorKind::kParseError, 0, "missing 'names:' line");
    }
  }

 private:
  static void once(bool seen, const Line& line) {
    if (seen) {
      throw ParseError(ErrorKind::kParseError, line.number,
                       "duplicate '" + line.key + ":' line");
    }
  }
};

[[noreturn]] void unknown_directive(const Line& line) {
  throw ParseError(ErrorKind::kParseError, line.number,
                   "unknown directive '" + line.key + ":'");
}

std::vector<std::pair<Element, Element>> collect_leq(
    const Header& h, const std::vector<Line>& leq_lines) {
  std::vector<std::pair<Element, Element>> pairs;
  for (const auto& line : leq_lines) {
    expect_args(line, 2);
    pairs.push_back({h.lookup(line, line.args[0]),
                     h.lookup(line, line.args[1])});
  }
  return pairs;
}

}  // namespace

EffectAlgebraTable parse_ea(std::string_view text) {
  Header h;
  std::vector<Line> sums;
  for (auto& line : tokenize(text)) {
    if (h.consume(line)) continue;
    if (line.key != "sum") unknown_directive(line);
    expect_args(line, 3);
    sums.push_back(std::move(line));
  }
  h.require_names();
  if (!h.one) throw ParseError(ErrorKind::kParseError, 0, "missing 'one:' line");
  if (*h.one == kZero) {
    throw ParseError(ErrorKind::kParseError, 0,
                     "the unit must differ from the zero");
  }

  EffectAlgebraTable t(*h.elements, *h.one, h.names);
  for (const auto& line : sums) {
    const auto a = h.lookup(line, line.args[0]);
    const auto b = h.lookup(line, line.args[1]);
    const auto c = h.lookup(line, line.args[2]);
    if (auto prev = t.sum(a, b); prev && *prev != c) {
      throw ParseError(ErrorKind::kContradictorySum, line.number,
                       line.args[0] + " + " + line.args[1] + " is already " +
                           t.name(*prev));
    }
    if ((a == kZero && c != b) || (b == kZero && c != a)) {
      throw ParseError(ErrorKind::kContradictorySum, line.number,
                       "0 + x must be x");
    }
    t.set_sum(a, b, c);
  }
  return t;
}

std::string serialize_ea(const EffectAlgebraTable& t) {
  std::ostringstream out;
  const auto n = static_cast<Element>(t.size());
  out << "elements: " << n << "\nnames:";
  for (const auto& name : t.names()) out << ' ' << name;
  out << "\none: " << t.name(t.one()) << '\n';
  for (Element x = 1; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      if (auto z = t.sum(x, y)) {
        out << "sum: " << t.name(x) << ' ' << t.name(y) << ' ' << t.name(*z)
            << '\n';
      }
    }
  }
  return out.str();
}

Poset parse_poset(std::string_view text) {
  Header h;
  std::vector<Line> leq;
  for (auto& line : tokenize(text)) {
    if (h.consume(line)) continue;
    if (line.key != "leq") unknown_directive(line);
    leq.push_back(std::move(line));
  }
  h.require_names();
  return Poset::from_relation(*h.elements, collect_leq(h, leq), h.names);
}

std::string serialize_poset(const Poset& p) {
  std::ostringstream out;
  out << "elements: " << p.size() << "\nnames:";
  for (const auto& name : p.names()) out << ' ' << name;
  out << '\n';
  for (auto [x, y] : p.covers()) {
    out << "leq: " << p.name(x) << ' ' << p.name(y) << '\n';
  }
  return out.str();
}

OrthoLattice parse_ortholattice(std::string_view text) {
  Header h;
  std::vector<Line> leq, ortho;
  for (auto& line : tokenize(text)) {
    if (h.consume(line)) continue;
    if (line.key == "leq") {
      leq.push_back(std::move(line));
    } else if (line.key == "ortho") {
      expect_args(line, 2);
      ortho.push_back(std::move(line));
    } else {
      unknown_directive(line);
    }
  }
  h.require_names();
  OrthoLattice out{Poset::from_relation(*h.elements, collect_leq(h, leq),
                                        h.names),
                   {}};
  constexpr auto kUnset = static_cast<Element>(-1);
  out.perp.assign(*h.elements, kUnset);
  for (const auto& line : ortho) {
    const auto a = h.lookup(line, line.args[0]);
    const auto b = h.lookup(line, line.args[1]);
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      if (out.perp[x] != kUnset && out.perp[x] != y) {
        throw ParseError(ErrorKind::kParseError, line.number,
                         "conflicting complement for '" + h.names[x] + "'");
      }
      out.perp[x] = y;
    }
  }
  for (Element x = 0; x < *h.elements; ++x) {
    if (out.perp[x] == kUnset) {
      throw ParseError(ErrorKind::kParseError, 0,
                       "no 'ortho:' line for '" + h.names[x] + "'");
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write " + path);
  out << content;
}

}  // namespace ealab
