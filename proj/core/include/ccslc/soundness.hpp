// Randomized soundness checking of an axiom system against a behavioural
// equivalence: every axiom, under many random closed substitutions, must
// relate its two sides.
//
// Axioms are distributed over a small worker pool; each axiom draws from a
// generator seeded by the global seed and the axiom's name, so reports are
// reproducible and independent of scheduling. A sound system yields an
// empty counterexample list; an unsound one is refuted with the axiom name
// and the offending closed assignment.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ccslc/axioms.hpp"
#include "ccslc/equiv.hpp"
#include "ccslc/gen.hpp"

namespace ccslc {

struct SoundnessParams {
  int substitutions_per_axiom = 200;
  std::uint64_t seed = 1;
  GenParams gen;    // image generator; its alphabet is overridden by the system's
  int workers = 0;  // 0 picks the hardware concurrency
};

struct SoundnessCounterexample {
  std::string axiom;
  std::vector<std::pair<std::string, std::string>> assignment;  // var -> image
};

struct SoundnessReport {
  std::string system;
  Relation relation{};
  int axioms = 0;
  long long instances = 0;
  std::vector<SoundnessCounterexample> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

SoundnessReport check_soundness(const AxiomSystem& system, Relation relation,
                                const SoundnessParams& params);

std::string to_json(const SoundnessReport& report);

}  // namespace ccslc
