#include "arena/errors.hpp"
#include "arena/jsonio.hpp"
#include "arena/prompts.hpp"
#include "doctest.h"

using namespace arena;

namespace {

std::string golden(const std::string& name) {
  return read_file(std::string(ARENA_GOLDEN_DIR) + "/" + name);
}

}  // namespace

TEST_SUITE("prompts") {

TEST_CASE("spy clue prompt matches the golden file and carries the spy block") {
  const PromptTemplates templates = PromptTemplates::builtin();
  const CluePromptContext ctx{
      3, 2, 5, Role::Spy,
      {ClueLine{1, 1, "The red cube is small."},
       ClueLine{2, 1, "The gray sphere is behind the cyan cylinder."}}};
  const std::string prompt = render_clue_prompt(templates, ctx);
  CHECK(prompt == golden("clue_prompt_spy.txt"));
  CHECK(prompt.find("Your role: SPY") != std::string::npos);
  CHECK(prompt.find("You are the spy with the different picture.") != std::string::npos);
  CHECK(prompt.find("Be strategic!") != std::string::npos);
  CHECK(prompt.find("You are not the spy.") == std::string::npos);
}

TEST_CASE("civilian clue prompt matches the golden file and carries the non-spy block") {
  const PromptTemplates templates = PromptTemplates::builtin();
  const CluePromptContext ctx{1, 1, 5, Role::Civilian, {}};
  const std::string prompt = render_clue_prompt(templates, ctx);
  CHECK(prompt == golden("clue_prompt_civilian.txt"));
  CHECK(prompt.find("Your role: NOT SPY") != std::string::npos);
  CHECK(prompt.find("your picture is the same as most others") != std::string::npos);
  CHECK(prompt.find("You are not the spy.") != std::string::npos);
  CHECK(prompt.find("You are the spy with the different picture.") == std::string::npos);
  CHECK(prompt.find("(none yet)") != std::string::npos);
}

TEST_CASE("decision prompt matches the golden file and allows N/A") {
  const PromptTemplates templates = PromptTemplates::builtin();
  const DecisionPromptContext ctx{
      5,
      {ClueLine{1, 1, "The red cube is small."},
       ClueLine{2, 1, "The gray sphere is behind the cyan cylinder."},
       ClueLine{3, 1, "The large metal object is a sphere."}}};
  const std::string prompt = render_decision_prompt(templates, ctx);
  CHECK(prompt == golden("decision_prompt.txt"));
  CHECK(prompt.find("If you are uncertain, you can answer N/A.") != std::string::npos);
  CHECK(prompt.find("All Clues from the Clue-giving Stage:") != std::string::npos);
  CHECK(prompt.find("PLAYER 3 (ROUND 1): The large metal object is a sphere.") !=
        std::string::npos);
}

TEST_CASE("rendering is byte-stable") {
  const PromptTemplates templates = PromptTemplates::builtin();
  const CluePromptContext ctx{2, 1, 5, Role::Civilian, {ClueLine{1, 1, "A clue."}}};
  CHECK(render_clue_prompt(templates, ctx) == render_clue_prompt(templates, ctx));
}

TEST_CASE("missing placeholder values are reported by name") {
  CHECK_THROWS_WITH_AS(render_template("Hello {player_id}", {}),
                       "prompt template: no value for placeholder 'player_id'", ConfigError);
}

TEST_CASE("literal braces survive substitution") {
  CHECK(render_template("\\boxed{} and \\boxed{The Cube} and {a_b}", {{"a_b", "X"}}) ==
        "\\boxed{} and \\boxed{The Cube} and X");
  CHECK(render_template("\\boxed{1}; \\boxed{N/A}", {}) == "\\boxed{1}; \\boxed{N/A}");
}

TEST_CASE("shipped template files equal the builtin templates") {
  const PromptTemplates files = PromptTemplates::load_dir(ARENA_PROMPTS_DIR);
  const PromptTemplates builtin = PromptTemplates::builtin();
  CHECK(files.clue == builtin.clue);
  CHECK(files.decision == builtin.decision);
}

}  // TEST_SUITE
