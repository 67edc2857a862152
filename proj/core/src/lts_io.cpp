#include "ccslc/lts_io.hpp"

#include <sstream>

#include "ccslc/parser.hpp"
#include "json.hpp"

namespace ccslc {

std::string lts_to_text(const Lts& lts) {
  std::ostringstream os;
  os << "states " << lts.num_states() << "\n";
  os << "transitions " << lts.num_edges() << "\n";
  os << "root " << lts.root << "\n";
  for (int s = 0; s < lts.num_states(); ++s)
    os << "state " << s << " " << pretty(lts.states[s]) << "\n";
  for (int s = 0; s < lts.num_states(); ++s)
    for (const auto& e : lts.out[s])
      os << "trans " << s << " " << e.label.str() << " " << e.target << "\n";
  return os.str();
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string lts_to_dot(const Lts& lts) {
  std::ostringstream os;
  os << "digraph lts {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle, fontsize=10];\n";
  for (int s = 0; s < lts.num_states(); ++s) {
    os << "  n" << s << " [label=\"" << dot_escape(pretty(lts.states[s])) << "\"";
    if (s == lts.root) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (int s = 0; s < lts.num_states(); ++s)
    for (const auto& e : lts.out[s])
      os << "  n" << s << " -> n" << e.target << " [label=\"" << dot_escape(e.label.str())
         << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string lts_to_json(const Lts& lts) {
  nlohmann::json j;
  j["schema"] = 1;
  j["root"] = lts.root;
  j["num_states"] = lts.num_states();
  j["num_transitions"] = lts.num_edges();
  auto& states = j["states"] = nlohmann::json::array();
  for (int s = 0; s < lts.num_states(); ++s)
    states.push_back({{"id", s}, {"config", pretty(lts.states[s])}});
  auto& trans = j["transitions"] = nlohmann::json::array();
  for (int s = 0; s < lts.num_states(); ++s)
    for (const auto& e : lts.out[s])
      trans.push_back({{"from", s}, {"label", e.label.str()}, {"to", e.target}});
  return j.dump(2) + "\n";
}

}  // namespace ccslc
