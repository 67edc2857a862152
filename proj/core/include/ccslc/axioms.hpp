// Equational axiom systems over a finite alphabet.
//
// The ground system axiomatizes strong bisimilarity of closed terms; the
// rooted-branching system extends it with the branching law TB and the
// left-merge absorption law TL. Axioms whose statement mentions concrete
// actions (the prefix interchange law L1, the synchronization laws C4/C5,
// and TB) are schemata: one instance per action, or per ordered pair of
// visible actions, drawn from the alphabet. Instances carry the actions in
// their name, e.g. `L1[tau]`, `C4[a,~a]`, `C5[a,a]`, `TB[~b]`.
//
// A proof step may reference any axiom by name, or its mirror image by
// appending `_sym` (which swaps the two sides).

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccslc/action.hpp"
#include "ccslc/parser.hpp"
#include "ccslc/term.hpp"

namespace ccslc {

struct Axiom {
  std::string name;
  TermPtr lhs, rhs;
};

enum class SystemId : std::uint8_t {
  GroundBisim,      // E_B: sound and ground-complete for strong bisimilarity
  RootedBranching,  // E_RBB: E_B plus TB and TL
  ChoiceTB,         // E0_TB: the choice laws A0-A3 plus TB
};

std::string to_string(SystemId id);
std::optional<SystemId> system_from_string(std::string_view s);

class AxiomSystem {
 public:
  static AxiomSystem builtin(SystemId id, const Alphabet& alphabet);

  // A user-supplied system; the alphabet defaults to the names occurring in
  // the declarations when the file does not pin one.
  static AxiomSystem from_contents(const AxiomFileContents& contents,
                                   std::string name = "user");

  const std::string& name() const { return name_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Axiom>& axioms() const { return axioms_; }
  std::size_t size() const { return axioms_.size(); }

  const Axiom* find(std::string_view name) const;

  // Resolve `NAME` or `NAME_sym` to an equation (mirrored for `_sym`).
  std::optional<Equation> resolve(std::string_view ref) const;

 private:
  std::string name_;
  Alphabet alphabet_;
  std::vector<Axiom> axioms_;
};

}  // namespace ccslc
