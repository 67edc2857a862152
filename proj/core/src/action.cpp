#include "ccslc/action.hpp"

namespace ccslc {

std::vector<Action> visible_actions(const Alphabet& alphabet) {
  std::vector<Action> out;
  out.reserve(alphabet.size() * 2);
  for (const auto& n : alphabet) {
    out.push_back(Action::name(n));
    out.push_back(Action::coname(n));
  }
  return out;
}

std::vector<Action> all_actions(const Alphabet& alphabet) {
  std::vector<Action> out;
  out.reserve(alphabet.size() * 2 + 1);
  out.push_back(Action::tau());
  for (const auto& n : alphabet) {
    out.push_back(Action::name(n));
    out.push_back(Action::coname(n));
  }
  return out;
}

}  // namespace ccslc
