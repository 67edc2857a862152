// Seeded random generation of terms, configurations, and closed
// substitutions.
//
// All draws go through an explicit mt19937_64 so a seed pins the whole
// stream; modular reduction is used instead of std::uniform_int_distribution
// to keep the sequence identical across standard library implementations.
// Sizes are counted like Term::size(): 0 costs one, a variable is free,
// every prefix and binary operator costs one plus its arguments, so a
// budget of n never produces a term larger than n.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "ccslc/action.hpp"
#include "ccslc/config.hpp"
#include "ccslc/term.hpp"

namespace ccslc {

using Rng = std::mt19937_64;

struct GenParams {
  Alphabet alphabet{"a", "b"};
  int max_size = 10;
  int max_vars = 0;     // 0 generates closed terms
  bool merges = true;   // allow left merge and communication merge
  int max_depth = 0;    // bound on the longest visible run; 0 = unbounded
                        // (enforced by redrawing, closed terms only)
};

// The variable pool generated terms draw from: x, y, z, w, v, u, ...
const std::vector<std::string>& gen_var_pool();

TermPtr random_term(Rng& rng, const GenParams& params);
TermPtr random_closed_term(Rng& rng, const GenParams& params);

// A configuration: up to max_indexed indexed variables next to a term.
CanonConfig random_config(Rng& rng, const GenParams& params, int max_indexed);

// A closed image for each of the given variables.
Substitution random_closed_substitution(Rng& rng,
                                        const std::vector<std::string>& vars,
                                        const GenParams& params);

}  // namespace ccslc
