#include <gtest/gtest.h>

#include <filesystem>

#include "ealab/constructions.hpp"
#include "ealab/error.hpp"
#include "ealab/io.hpp"
#include "fixtures.hpp"

using namespace ealab;

namespace {

ParseError parse_failure(const std::string& text) {
  try {
    parse_ea(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed without error:\n" << text;
  return ParseError(ErrorKind::kParseError, 0, "");
}

}  // namespace

TEST(ParseEa, ThreeChain) {
  const auto t = parse_ea(
      "# comment line\n"
      "elements: 3\n"
      "names: 0 a 1   # trailing comment\n"
      "\n"
      "one: 1\n"
      "sum: a a 1\n"
      "sum: a a 1\n");
  EXPECT_TRUE(t.same_structure(chain(3)));
  EXPECT_EQ(t.names(), (std::vector<std::string>{"0", "a", "1"}));
  EXPECT_EQ(t.sum(0, 1), 1u);
}

TEST(ParseEa, OneNeedNotBeLast) {
  const auto t = parse_ea("elements: 3\nnames: 0 u a\none: u\nsum: a a u\n");
  EXPECT_EQ(t.one(), 1u);
  EXPECT_EQ(t.sum(2, 2), 1u);
}

TEST(ParseEa, RoundTrip) {
  for (const auto& t : fixtures::corpus(7)) {
    EXPECT_EQ(parse_ea(serialize_ea(t)), t);
  }
  const auto e12 = fixtures::ea("e12.ea");
  EXPECT_EQ(parse_ea(serialize_ea(e12)), e12);
  EXPECT_EQ(serialize_ea(chain(3)), "elements: 3\nnames: 0 a 1\none: 1\nsum: a a 1\n");
}

TEST(ParseEa, ErrorsCarryLineNumbers) {
  auto e = parse_failure("elements: 3\nnames: 0 a 1\none: 1\nsum: a a\n");
  EXPECT_EQ(e.kind(), ErrorKind::kParseError);
  EXPECT_EQ(e.line(), 4u);

  e = parse_failure("elements: 3\nnames: 0 a 1\none: 1\nsum: a b 1\n");
  EXPECT_EQ(e.kind(), ErrorKind::kUnknownName);
  EXPECT_EQ(e.line(), 4u);

  e = parse_failure("elements: 3\nnames: 0 a 1\none: 1\nsum: a a 1\n\nsum: a a a\n");
  EXPECT_EQ(e.kind(), ErrorKind::kContradictorySum);
  EXPECT_EQ(e.line(), 6u);

  e = parse_failure("elements: 3\nnames: 0 a 1\none: 1\nsum: 0 a 1\n");
  EXPECT_EQ(e.kind(), ErrorKind::kContradictorySum);

  e = parse_failure("elements: 3\nnames: 0 a\none: a\n");
  EXPECT_EQ(e.line(), 2u);

  e = parse_failure("elements: 3\nnames: 0 a a\n");
  EXPECT_EQ(e.line(), 2u);

  e = parse_failure("elements: 3\nnames: 0 a 1\none: 1\nprod: a a 1\n");
  EXPECT_EQ(e.line(), 4u);

  e = parse_failure("elements: 3\nnames: 0 a 1\nsum a a 1\n");
  EXPECT_EQ(e.line(), 3u);

  e = parse_failure("elements: 1\n");
  EXPECT_EQ(e.line(), 1u);

  e = parse_failure("elements: 3\nelements: 3\n");
  EXPECT_EQ(e.line(), 2u);
}

TEST(ParseEa, MissingLines) {
  auto e = parse_failure("elements: 3\nnames: 0 a 1\nsum: a a 1\n");
  EXPECT_EQ(e.line(), 0u);
  EXPECT_NE(std::string(e.what()).find("one"), std::string::npos);
  e = parse_failure("elements: 3\n");
  EXPECT_EQ(e.line(), 0u);
  e = parse_failure("");
  EXPECT_EQ(e.line(), 0u);
  e = parse_failure("elements: 3\nnames: 0 a 1\none: 0\n");
  EXPECT_EQ(e.line(), 0u);
}

TEST(ParseEa, DoesNotCheckAxioms) {
  const auto t = fixtures::ea("broken.ea");
  EXPECT_EQ(t.size(), 3u);
  EXPECT_FALSE(t.sum(1, 1));
}

TEST(ParsePoset, FixturesAndRoundTrip) {
  const auto p = fixtures::poset("pentagon.poset");
  EXPECT_EQ(p.size(), 5u);
  EXPECT_TRUE(p.leq(0, 2));
  EXPECT_FALSE(p.leq(2, 3));
  EXPECT_EQ(parse_poset(serialize_poset(p)), p);
  EXPECT_EQ(parse_poset("elements: 2\nnames: x y\none: y\nleq: x y\n").size(), 2u);

  try {
    parse_poset("elements: 2\nnames: x y\nleq: x y\nleq: y x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotAPoset);
  }
}

TEST(ParseOrtholattice, Hexagon) {
  const auto o = fixtures::oml("o6.oml");
  EXPECT_EQ(o.order.size(), 6u);
  EXPECT_EQ(o.perp, (std::vector<Element>{5, 4, 3, 2, 1, 0}));

  try {
    parse_ortholattice("elements: 2\nnames: 0 1\nleq: 0 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 0u);
  }
  try {
    parse_ortholattice(
        "elements: 3\nnames: 0 a 1\nleq: 0 a\nleq: a 1\northo: 0 1\northo: a 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 6u);
  }
}

TEST(Files, ReadWrite) {
  const auto dir = std::filesystem::temp_directory_path() / "ealab_io_test";
  std::filesystem::create_directories(dir);
  const auto file = (dir / "c3.ea").string();
  write_file(file, serialize_ea(chain(3)));
  EXPECT_EQ(parse_ea(read_file(file)), chain(3));
  std::filesystem::remove_all(dir);
  try {
    read_file(file);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidArgument);
  }
}
