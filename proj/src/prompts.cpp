#include "arena/prompts.hpp"

#include "arena/errors.hpp"
#include "arena/jsonio.hpp"

namespace arena {

namespace {

const char* kClueTemplate =
    R"(You are PLAYER {player_id} of the game "Who is the spy?". This is ROUND {round_num}. Your task is to describe your picture in one sentence, which can only be about the features of objects and the relationship between objects.

Your role: {role_line}

Game Instructions:
- There are {num_players} players in total. Only one player sees a different picture, and the pictures seen by all other players are the same.
- Players who are voted as the odd player will be severely punished, so you should convince others that you are not the odd player.
- In the odd player's picture, two objects are replaced with different ones, but they remain in the same positions as in the original image.

{role_block}

What you should do:
1. Compare your picture with all previous clues to understand what others are seeing.
2. If you are NOT the spy: Describe a clear, specific feature of your picture that does not overlap with previous clues. This will help establish what the "normal" picture looks like.
3. If you are the spy: Be strategic! You know your picture is different, so either:
- Describe features that are the same as others (if you can infer what they're seeing)
- Describe features from your different picture in a way that doesn't reveal the differences
- Focus on describing objects or aspects that might still be similar with what others see

Previous clues:
{previous_clues}

Required output format:
First, conduct your private step-by-step reasoning - it may include suspicions, probabilities, deception, etc.
Then, put your one-sentence description of your picture inside \boxed{}.
Example answer: \boxed{The cylinder is to the left of the cube}; \boxed{The yellow object is the largest object}; \boxed{The red object is the smallest object}.
)";

const char* kDecisionTemplate =
    R"(You are analyzing a game of "Who is the Spy?" where {num_players} players have just provided clues about their pictures. Your task is to identify which player is the spy (the one with the different picture) based on their clues.

Game Setup:
- There are {num_players} players in total. Only one player sees a different picture (the spy), and the pictures seen by all other players are the same.
- In the spy's picture, two objects are replaced with different ones, but they remain in the same positions as in the original image.
- Each player provided a clue trying to describe their picture while avoiding suspicion.
- The spy tries to blend in by giving clues that seem consistent with what others see.
- Non-spy players try to give distinctive clues that help identify the spy.

Your Task:
Analyze all the clues and determine which player is most likely the spy. Look for:
1. Clues that seem inconsistent with the majority
2. Clues that are deliberately vague or generic
3. Clues that might be trying to mislead others
4. Patterns that suggest deception or uncertainty
The image you see shows the ORIGINAL picture (what non-spy players see). Compare the clues against this reference.

Required Output Format:
First, conduct your private step-by-step reasoning - it may include suspicions, probabilities, deception, etc.
Then, put your final answer (PLAYER_NUMBER or N/A) inside \boxed{}. If you are uncertain, you can answer N/A.
Example answer: \boxed{1}; \boxed{2}; \boxed{3}; \boxed{N/A}.

All Clues from the Clue-giving Stage:
{clues}
)";

const char* kSpyRoleLine = "SPY (you have the different picture)";
const char* kCivilianRoleLine = "NOT SPY (you have the same picture as most others)";

const char* kSpyRoleBlock =
    "You are the spy with the different picture. Two objects in your picture are different "
    "from what others see, but they remain in the same positions as in the original image.";
const char* kCivilianRoleBlock =
    "You are not the spy. Your picture is the same as most other players' pictures.";

bool is_placeholder_name(const std::string& name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
  }
  return true;
}

}  // namespace

std::string to_string(Role r) { return r == Role::Spy ? "spy" : "civilian"; }
std::string to_string(Stage s) { return s == Stage::Clue ? "clue" : "decision"; }
std::string to_string(Phase p) { return p == Phase::Clue ? "clue" : "decision"; }

PromptTemplates PromptTemplates::builtin() {
  return PromptTemplates{kClueTemplate, kDecisionTemplate};
}

PromptTemplates PromptTemplates::load_dir(const std::string& dir) {
  return PromptTemplates{read_file(dir + "/clue.txt"), read_file(dir + "/decision.txt")};
}

std::string render_template(const std::string& tmpl,
                            const std::map<std::string, std::string>& bindings) {
  std::string out;
  out.reserve(tmpl.size());
  std::size_t pos = 0;
  while (pos < tmpl.size()) {
    const std::size_t open = tmpl.find('{', pos);
    if (open == std::string::npos) {
      out.append(tmpl, pos, std::string::npos);
      break;
    }
    out.append(tmpl, pos, open - pos);
    const std::size_t close = tmpl.find('}', open + 1);
    if (close == std::string::npos) {
      out.append(tmpl, open, std::string::npos);
      break;
    }
    const std::string name = tmpl.substr(open + 1, close - open - 1);
    if (is_placeholder_name(name)) {
      auto it = bindings.find(name);
      if (it == bindings.end()) {
        throw ConfigError("prompt template: no value for placeholder '" + name + "'");
      }
      out += it->second;
      pos = close + 1;
    } else {
      // Literal braces (\boxed{} and friends).
      out += '{';
      pos = open + 1;
    }
  }
  return out;
}

std::string format_clue_lines(const std::vector<ClueLine>& lines) {
  if (lines.empty()) return "(none yet)";
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) out += '\n';
    out += "PLAYER " + std::to_string(lines[i].player_number) + " (ROUND " +
           std::to_string(lines[i].round_number) + "): " + lines[i].text;
  }
  return out;
}

std::string render_clue_prompt(const PromptTemplates& templates, const CluePromptContext& ctx) {
  const bool spy = ctx.role == Role::Spy;
  return render_template(
      templates.clue,
      {{"player_id", std::to_string(ctx.player_number)},
       {"round_num", std::to_string(ctx.round_number)},
       {"num_players", std::to_string(ctx.num_players)},
       {"role_line", spy ? kSpyRoleLine : kCivilianRoleLine},
       {"role_block", spy ? kSpyRoleBlock : kCivilianRoleBlock},
       {"previous_clues", format_clue_lines(ctx.history)}});
}

std::string render_decision_prompt(const PromptTemplates& templates,
                                   const DecisionPromptContext& ctx) {
  return render_template(templates.decision,
                         {{"num_players", std::to_string(ctx.num_players)},
                          {"clues", format_clue_lines(ctx.clues)}});
}

}  // namespace arena
