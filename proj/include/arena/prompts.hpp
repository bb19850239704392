#pragma once

#include <map>
#include <string>
#include <vector>

#include "arena/types.hpp"

namespace arena {

// One already-public clue, in prompt space (1-based player and round).
struct ClueLine {
  int player_number = 0;
  int round_number = 0;
  std::string text;
};

// Stage prompt templates. Tokens of the form {lowercase_identifier} are
// placeholders; anything else inside braces (\boxed{} examples, boxed
// answers) is literal text. The builtin templates match the files shipped
// under data/prompts/.
struct PromptTemplates {
  std::string clue;
  std::string decision;

  static PromptTemplates builtin();
  static PromptTemplates load_dir(const std::string& dir);
};

// Substitutes placeholders; throws ConfigError naming any placeholder that
// has no binding.
std::string render_template(const std::string& tmpl,
                            const std::map<std::string, std::string>& bindings);

struct CluePromptContext {
  int player_number = 0;  // 1-based
  int round_number = 0;   // 1-based
  int num_players = 0;
  Role role = Role::Civilian;
  std::vector<ClueLine> history;
};

struct DecisionPromptContext {
  int num_players = 0;
  std::vector<ClueLine> clues;
};

std::string render_clue_prompt(const PromptTemplates& templates, const CluePromptContext& ctx);
std::string render_decision_prompt(const PromptTemplates& templates,
                                   const DecisionPromptContext& ctx);

std::string format_clue_lines(const std::vector<ClueLine>& lines);

}  // namespace arena
