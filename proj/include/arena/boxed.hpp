#pragma once

#include <optional>
#include <string>

namespace arena {

// Result of extracting the last \boxed{...} span from a completion.
// `reasoning` is everything before that span and stays private to the
// emitting player.
struct BoxedParse {
  bool found = false;
  std::string boxed;
  std::string reasoning;
};

// Never throws; total over arbitrary text. Picks the LAST boxed span and
// matches braces with nesting.
BoxedParse parse_boxed(const std::string& text);

// Decision-stage interpretation. Player numbers in text are 1-based
// ("PLAYER 3", "\boxed{3}"); the returned seat is 0-based. NA (case
// insensitive "n/a") gives an engaged result holding nullopt. A missing box,
// a non-vote token, or an out-of-range player number gives parse_error.
struct VoteParse {
  std::optional<std::optional<int>> vote;  // outer: parsed at all; inner: seat or NA
  std::string reasoning;
  bool parse_error = false;
};
VoteParse parse_vote(const std::string& text, int n_players);

// Clue-stage interpretation: the boxed sentence is the public clue.
struct ClueParse {
  std::string clue_text;
  std::string reasoning;
  bool parse_error = false;  // no boxed span found
};
ClueParse parse_clue(const std::string& text);

}  // namespace arena
