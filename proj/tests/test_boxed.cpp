#include "arena/boxed.hpp"
#include "doctest.h"

using namespace arena;

TEST_SUITE("boxed") {

TEST_CASE("extracts the last boxed span with reasoning in front") {
  const BoxedParse p = parse_boxed("I think it is 2... no wait \\boxed{2} hmm \\boxed{3}");
  CHECK(p.found);
  CHECK(p.boxed == "3");
  CHECK(p.reasoning == "I think it is 2... no wait \\boxed{2} hmm");
}

TEST_CASE("matches nested braces") {
  const BoxedParse p = parse_boxed("x \\boxed{a {nested} span}");
  CHECK(p.found);
  CHECK(p.boxed == "a {nested} span");
}

TEST_CASE("unterminated box is not a match") {
  CHECK_FALSE(parse_boxed("\\boxed{never closed").found);
  CHECK_FALSE(parse_boxed("").found);
  CHECK_FALSE(parse_boxed("no box here").found);
}

TEST_CASE("votes parse player numbers into 0-based seats") {
  SUBCASE("plain integer") {
    const VoteParse v = parse_vote("reasoning steps... \\boxed{3}", 5);
    REQUIRE(v.vote.has_value());
    REQUIRE(v.vote->has_value());
    CHECK(**v.vote == 2);
    CHECK_FALSE(v.parse_error);
    CHECK(v.reasoning == "reasoning steps...");
  }
  SUBCASE("n/a is case-insensitive") {
    for (const char* text : {"\\boxed{N/A}", "\\boxed{n/a}", "\\boxed{ NA }"}) {
      const VoteParse v = parse_vote(text, 5);
      REQUIRE(v.vote.has_value());
      CHECK_FALSE(v.vote->has_value());
      CHECK_FALSE(v.parse_error);
    }
  }
  SUBCASE("player prefix tolerated") {
    const VoteParse v = parse_vote("\\boxed{PLAYER 1}", 5);
    REQUIRE(v.vote.has_value());
    CHECK(**v.vote == 0);
  }
  SUBCASE("missing box flags a parse error") {
    const VoteParse v = parse_vote("no box here", 5);
    CHECK_FALSE(v.vote.has_value());
    CHECK(v.parse_error);
  }
  SUBCASE("out-of-range and junk flag parse errors") {
    CHECK(parse_vote("\\boxed{0}", 5).parse_error);   // players are 1-based
    CHECK(parse_vote("\\boxed{6}", 5).parse_error);
    CHECK(parse_vote("\\boxed{banana}", 5).parse_error);
    CHECK(parse_vote("\\boxed{-1}", 5).parse_error);
  }
}

TEST_CASE("clues take the boxed sentence and keep reasoning private") {
  const ClueParse c =
      parse_clue("the others said cube things...\n\\boxed{The red cube is small.}");
  CHECK_FALSE(c.parse_error);
  CHECK(c.clue_text == "The red cube is small.");
  CHECK(c.reasoning == "the others said cube things...");

  CHECK(parse_clue("nothing boxed").parse_error);
  CHECK(parse_clue("\\boxed{   }").parse_error);
}

TEST_CASE("parser is total over adversarial input") {
  const char* nasty[] = {"\\boxed{", "}}}{{{", "\\boxed{}\\boxed{}", "\\boxed",
                         "pre \\boxed{a}{b} post", "\\boxed{{}}"};
  for (const char* text : nasty) {
    CHECK_NOTHROW(parse_boxed(text));
    CHECK_NOTHROW(parse_vote(text, 5));
    CHECK_NOTHROW(parse_clue(text));
  }
}

}  // TEST_SUITE
