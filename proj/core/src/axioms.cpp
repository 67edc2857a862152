#include "ccslc/axioms.hpp"

namespace ccslc {

std::string to_string(SystemId id) {
  switch (id) {
    case SystemId::GroundBisim: return "E_B";
    case SystemId::RootedBranching: return "E_RBB";
    case SystemId::ChoiceTB: return "E0_TB";
  }
  return {};
}

std::optional<SystemId> system_from_string(std::string_view s) {
  if (s == "E_B" || s == "eb") return SystemId::GroundBisim;
  if (s == "E_RBB" || s == "erbb") return SystemId::RootedBranching;
  if (s == "E0_TB" || s == "e0tb") return SystemId::ChoiceTB;
  return std::nullopt;
}

namespace {

struct Builder {
  std::vector<Axiom> out;
  TermPtr x = Term::var("x");
  TermPtr y = Term::var("y");
  TermPtr z = Term::var("z");

  void add(std::string name, TermPtr lhs, TermPtr rhs) {
    out.push_back({std::move(name), std::move(lhs), std::move(rhs)});
  }

  void choice_laws() {
    add("A0", Term::choice(x, Term::nil()), x);
    add("A1", Term::choice(x, y), Term::choice(y, x));
    add("A2", Term::choice(Term::choice(x, y), z), Term::choice(x, Term::choice(y, z)));
    add("A3", Term::choice(x, x), x);
  }

  void tb_schema(const std::vector<Action>& actions) {
    for (const Action& mu : actions) {
      // mu.(tau.(x + y) + y) = mu.(x + y)
      add("TB[" + mu.str() + "]",
          Term::prefix(mu, Term::choice(Term::prefix(Action::tau(), Term::choice(x, y)), y)),
          Term::prefix(mu, Term::choice(x, y)));
    }
  }

  void ground_laws(const std::vector<Action>& actions) {
    // Left merge.
    add("L0", Term::left_merge(Term::nil(), x), Term::nil());
    for (const Action& mu : actions) {
      // mu.x |> y = mu.(x || y)
      add("L1[" + mu.str() + "]",
          Term::left_merge(Term::prefix(mu, x), y),
          Term::prefix(mu, Term::parallel(x, y)));
    }
    add("L2", Term::left_merge(Term::left_merge(x, y), z),
        Term::left_merge(x, Term::parallel(y, z)));
    add("L3", Term::left_merge(x, Term::nil()), x);
    add("L4", Term::left_merge(Term::choice(x, y), z),
        Term::choice(Term::left_merge(x, z), Term::left_merge(y, z)));
    // Communication merge.
    add("C0", Term::comm_merge(Term::nil(), x), Term::nil());
    add("C1", Term::comm_merge(x, y), Term::comm_merge(y, x));
    add("C2", Term::comm_merge(Term::comm_merge(x, y), z),
        Term::comm_merge(x, Term::comm_merge(y, z)));
    add("C3", Term::comm_merge(Term::choice(x, y), z),
        Term::choice(Term::comm_merge(x, z), Term::comm_merge(y, z)));
    for (const Action& a : actions) {
      if (!a.is_visible()) continue;
      for (const Action& b : actions) {
        if (!b.is_visible()) continue;
        const TermPtr lhs = Term::comm_merge(Term::prefix(a, x), Term::prefix(b, y));
        if (b == a.complement()) {
          // alpha.x | ~alpha.y = tau.(x || y)
          add("C4[" + a.str() + "," + b.str() + "]", lhs,
              Term::prefix(Action::tau(), Term::parallel(x, y)));
        } else {
          // alpha.x | beta.y = 0 when beta is not the complement of alpha
          add("C5[" + a.str() + "," + b.str() + "]", lhs, Term::nil());
        }
      }
    }
    add("C6", Term::comm_merge(Term::left_merge(x, y), z),
        Term::left_merge(Term::comm_merge(x, z), y));
    add("C7", Term::comm_merge(Term::comm_merge(x, y), z), Term::nil());
    // Expansion of the merge.
    add("P", Term::parallel(x, y),
        Term::choice(Term::choice(Term::left_merge(x, y), Term::left_merge(y, x)),
                     Term::comm_merge(x, y)));
  }
};

}  // namespace

AxiomSystem AxiomSystem::builtin(SystemId id, const Alphabet& alphabet) {
  AxiomSystem sys;
  sys.name_ = to_string(id);
  sys.alphabet_ = alphabet;
  const auto actions = all_actions(alphabet);
  Builder b;
  switch (id) {
    case SystemId::GroundBisim:
      b.choice_laws();
      b.ground_laws(actions);
      break;
    case SystemId::RootedBranching:
      b.choice_laws();
      b.ground_laws(actions);
      b.tb_schema(actions);
      b.add("TL", Term::left_merge(b.x, Term::prefix(Action::tau(), b.y)),
            Term::left_merge(b.x, b.y));
      break;
    case SystemId::ChoiceTB:
      b.choice_laws();
      b.tb_schema(actions);
      break;
  }
  sys.axioms_ = std::move(b.out);
  return sys;
}

AxiomSystem AxiomSystem::from_contents(const AxiomFileContents& contents, std::string name) {
  AxiomSystem sys;
  sys.name_ = std::move(name);
  if (contents.alphabet) {
    sys.alphabet_ = *contents.alphabet;
  } else {
    for (const auto& d : contents.decls) {
      for (const auto& n : action_names(d.lhs)) sys.alphabet_.insert(n);
      for (const auto& n : action_names(d.rhs)) sys.alphabet_.insert(n);
    }
  }
  for (const auto& d : contents.decls) sys.axioms_.push_back({d.name, d.lhs, d.rhs});
  return sys;
}

const Axiom* AxiomSystem::find(std::string_view name) const {
  for (const auto& a : axioms_)
    if (a.name == name) return &a;
  return nullptr;
}

std::optional<Equation> AxiomSystem::resolve(std::string_view ref) const {
  bool sym = false;
  std::string_view name = ref;
  if (name.size() > 4 && name.substr(name.size() - 4) == "_sym") {
    sym = true;
    name = name.substr(0, name.size() - 4);
  }
  const Axiom* ax = find(name);
  if (!ax) return std::nullopt;
  return sym ? Equation{ax->rhs, ax->lhs} : Equation{ax->lhs, ax->rhs};
}

}  // namespace ccslc
