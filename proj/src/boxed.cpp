#include "arena/boxed.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace arena {

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

BoxedParse parse_boxed(const std::string& text) {
  static const std::string marker = "\\boxed{";
  BoxedParse result;
  std::size_t search_from = 0;
  while (true) {
    const std::size_t at = text.find(marker, search_from);
    if (at == std::string::npos) break;
    // Match the closing brace with nesting.
    std::size_t i = at + marker.size();
    int depth = 1;
    while (i < text.size() && depth > 0) {
      if (text[i] == '{') ++depth;
      else if (text[i] == '}') --depth;
      ++i;
    }
    if (depth == 0) {
      result.found = true;
      result.boxed = text.substr(at + marker.size(), i - 1 - (at + marker.size()));
      result.reasoning = trim(text.substr(0, at));
    }
    search_from = at + marker.size();
  }
  if (!result.found) {
    result.reasoning = trim(text);
  }
  return result;
}

VoteParse parse_vote(const std::string& text, int n_players) {
  const BoxedParse boxed = parse_boxed(text);
  VoteParse result;
  result.reasoning = boxed.reasoning;
  if (!boxed.found) {
    result.parse_error = true;
    return result;
  }
  std::string answer = lower(trim(boxed.boxed));
  if (answer == "n/a" || answer == "na") {
    result.vote = std::optional<int>{};
    return result;
  }
  // Tolerate a "player" prefix: "player 3".
  if (answer.rfind("player", 0) == 0) {
    answer = trim(answer.substr(6));
  }
  if (answer.empty() || !std::all_of(answer.begin(), answer.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
      })) {
    result.parse_error = true;
    return result;
  }
  const long number = std::strtol(answer.c_str(), nullptr, 10);
  if (number < 1 || number > n_players) {
    result.parse_error = true;
    return result;
  }
  result.vote = std::optional<int>{static_cast<int>(number - 1)};
  return result;
}

ClueParse parse_clue(const std::string& text) {
  const BoxedParse boxed = parse_boxed(text);
  ClueParse result;
  result.reasoning = boxed.reasoning;
  if (!boxed.found || trim(boxed.boxed).empty()) {
    result.parse_error = true;
    return result;
  }
  result.clue_text = trim(boxed.boxed);
  return result;
}

}  // namespace arena
