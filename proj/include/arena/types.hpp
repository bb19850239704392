#pragma once

#include <string>

namespace arena {

enum class Role { Civilian, Spy };

enum class Stage { Clue, Decision };

// Training phase gate: Decision = 0, Clue = 1. The integer values appear in
// metrics JSONL and follow the gated-loss convention (1 trains the clue
// stage).
enum class Phase : int { Decision = 0, Clue = 1 };

std::string to_string(Role r);
std::string to_string(Stage s);
std::string to_string(Phase p);

}  // namespace arena
