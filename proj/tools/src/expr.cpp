#include "expr.hpp"

#include <cctype>
#include <charconv>

#include "ealab/constructions.hpp"
#include "ealab/error.hpp"
#include "ealab/io.hpp"

namespace ealab::cli {

namespace {

std::vector<std::string> tokenize(const std::vector<std::string>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) {
    std::string cur;
    for (char c : w) {
      if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) {
        if (!cur.empty()) out.push_back(std::move(cur));
        cur.clear();
        if (c == '(' || c == ')') out.emplace_back(1, c);
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
  }
  return out;
}

class Parser {
 public:
  Parser(std::vector<std::string> tokens, const FileReader& read)
      : tokens_(std::move(tokens)), read_(read) {}

  EffectAlgebraTable parse() {
    auto t = expr();
    if (pos_ != tokens_.size()) fail("unexpected '" + tokens_[pos_] + "'");
    return t;
  }

 private:
  [[noreturn]] static void fail(const std::string& what) {
    throw Error(ErrorKind::kInvalidArgument, "construction: " + what);
  }

  bool at_end() const { return pos_ == tokens_.size(); }
  const std::string& peek() const { return tokens_[pos_]; }
  std::string next() {
    if (at_end()) fail("unexpected end of expression");
    return tokens_[pos_++];
  }

  EffectAlgebraTable expr() {
    if (!at_end() && (peek() == "product" || peek() == "hsum")) {
      const auto op = next();
      std::vector<EffectAlgebraTable> args;
      while (!at_end() && peek() != ")") args.push_back(atom());
      if (args.empty()) fail(op + " needs at least one argument");
      return op == "product" ? direct_product(args) : horizontal_sum(args);
    }
    return atom();
  }

  EffectAlgebraTable atom() {
    const auto tok = next();
    if (tok == "(") {
      auto t = expr();
      if (next() != ")") fail("expected ')'");
      return t;
    }
    if (tok == ")") fail("unexpected ')'");
    if (tok == "chain") {
      const auto k = next();
      std::size_t n = 0;
      auto [p, ec] = std::from_chars(k.data(), k.data() + k.size(), n);
      if (ec != std::errc{} || p != k.data() + k.size()) {
        fail("chain length must be an integer, got '" + k + "'");
      }
      return chain(n);
    }
    if (tok == "from-oml") return oml_to_ea(parse_ortholattice(read_(next())));
    if (tok == "product" || tok == "hsum") {
      fail("nested '" + tok + "' must be parenthesized");
    }
    return parse_ea(read_(tok));
  }

  std::vector<std::string> tokens_;
  const FileReader& read_;
  std::size_t pos_ = 0;
};

}  // namespace

EffectAlgebraTable evaluate_construction(const std::vector<std::string>& words,
                                         const FileReader& read) {
  auto tokens = tokenize(words);
  if (tokens.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "construction: empty expression");
  }
  return Parser(std::move(tokens), read).parse();
}

}  // namespace ealab::cli
