// Equational proof traces: serializable step lists that an independent
// checker validates against an axiom system.
//
// A step proves one equation between (possibly open) terms:
//
//   STEP k = REFL t                    t = t
//   STEP k = AXIOM name WITH $x := u   an axiom instance (WITH optional);
//                                      `name_sym` uses the mirrored axiom
//   STEP k = TRANS i j                 join steps i and j; the right side of
//                                      i and left side of j must agree
//                                      modulo AC of + and ||
//   STEP k = CONG prefix:mu i          congruence under a prefix
//   STEP k = CONG choice i j           ... and under the binary operators
//   STEP k = CONG par i j
//   STEP k = CONG lmerge i j
//   STEP k = CONG cmerge i j
//   QED lhs = rhs                      conclusion; must match the final
//                                      step's equation modulo AC
//
// Steps are numbered consecutively from 1 and may only reference earlier
// steps. '#' starts a line comment.
//
// The Pf class builds proofs programmatically with the same primitives; it
// checks composition eagerly (a bad trans throws), stores the derivation as
// a shared DAG so combinators stay cheap, and linearizes to a ProofTrace on
// demand. `reversed()` mirrors a whole derivation by swapping trans chains
// and toggling `_sym` on axiom references.

#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccslc/axioms.hpp"
#include "ccslc/term.hpp"

namespace ccslc {

struct ProofStep {
  enum class Kind : std::uint8_t {
    Refl, Axiom, Trans, CongPrefix, CongChoice, CongPar, CongLMerge, CongCMerge,
  };

  Kind kind = Kind::Refl;
  TermPtr term;                                         // Refl
  std::string axiom;                                    // Axiom (may end in _sym)
  std::vector<std::pair<std::string, TermPtr>> subst;   // Axiom, sorted by variable
  int i = 0, j = 0;                                     // 1-based step references
  Action act;                                           // CongPrefix
};

struct ProofTrace {
  std::vector<ProofStep> steps;
  TermPtr lhs, rhs;  // the QED line
};

struct CheckResult {
  bool ok = false;
  std::string error;  // empty when ok
  int step = 0;       // 1-based step at fault; 0 when not step-specific

  explicit operator bool() const { return ok; }
};

// Validate every step and the conclusion against the axiom system.
CheckResult check_proof(const ProofTrace& trace, const AxiomSystem& system);

std::string write_trace(const ProofTrace& trace);
ProofTrace parse_trace(std::string_view text);  // throws ParseError

// ── programmatic proofs ───────────────────────────────────────────────────

class Pf {
 public:
  // t = t
  static Pf refl(TermPtr t);

  // An instance of system axiom `name` (or `name_sym`) under `subst`.
  static Pf axiom(const AxiomSystem& system, const std::string& name,
                  std::vector<std::pair<std::string, TermPtr>> subst);

  // this ; next   (rhs of this and lhs of next must agree modulo AC)
  Pf then(const Pf& next) const;

  static Pf cong_prefix(Action mu, const Pf& body);
  static Pf cong(TermKind op, const Pf& l, const Pf& r);  // Choice/Parallel/LeftMerge/CommMerge

  // The mirrored proof of rhs = lhs.
  Pf reversed() const;

  const TermPtr& lhs() const;
  const TermPtr& rhs() const;

  ProofTrace to_trace() const;

 private:
  struct Node;
  explicit Pf(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace ccslc
