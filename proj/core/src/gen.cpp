#include "ccslc/gen.hpp"

#include <cassert>

#include "ccslc/equiv.hpp"

namespace ccslc {

namespace {

std::uint64_t draw(Rng& rng, std::uint64_t n) {
  assert(n > 0);
  return rng() % n;
}

Action random_action(Rng& rng, const Alphabet& alphabet) {
  std::vector<Action> all = all_actions(alphabet);
  return all[draw(rng, all.size())];
}

TermPtr gen_term(Rng& rng, const GenParams& p, int budget) {
  int vars = std::min<int>(p.max_vars, static_cast<int>(gen_var_pool().size()));
  if (budget <= 1) {
    if (vars > 0 && draw(rng, 2) == 0)
      return Term::var(gen_var_pool()[draw(rng, static_cast<std::uint64_t>(vars))]);
    return Term::nil();
  }
  // Binary nodes need one unit per operator and one per argument.
  bool binary_ok = budget >= 3;
  std::uint64_t roll = draw(rng, 100);
  if (roll < 35 || !binary_ok)
    return Term::prefix(random_action(rng, p.alphabet),
                        gen_term(rng, p, budget - 1));
  int left = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(budget - 2)));
  int right = budget - 1 - left;
  TermPtr l = gen_term(rng, p, left);
  TermPtr r = gen_term(rng, p, right);
  if (roll < 60) return Term::choice(l, r);
  if (roll < 80 || !p.merges) return Term::parallel(l, r);
  if (roll < 90) return Term::left_merge(l, r);
  return Term::comm_merge(l, r);
}

}  // namespace

const std::vector<std::string>& gen_var_pool() {
  static const std::vector<std::string> pool{"x", "y", "z", "w", "v", "u"};
  return pool;
}

TermPtr random_term(Rng& rng, const GenParams& params) {
  int budget = std::max(1, params.max_size);
  if (params.max_depth <= 0 || params.max_vars > 0)
    return gen_term(rng, params, budget);
  // Depth is only defined for closed terms; redraw until the bound holds.
  // Shrinking the budget on each failure guarantees termination (a budget
  // of 1 yields 0, whose depth is 0).
  for (int b = budget; b >= 1; --b) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      TermPtr t = gen_term(rng, params, b);
      if (depth(t) <= params.max_depth) return t;
    }
  }
  return Term::nil();
}

TermPtr random_closed_term(Rng& rng, const GenParams& params) {
  GenParams closed = params;
  closed.max_vars = 0;
  return random_term(rng, closed);
}

CanonConfig random_config(Rng& rng, const GenParams& params, int max_indexed) {
  ConfigPtr c = Config::leaf(random_term(rng, params));
  int vars = std::max(1, std::min<int>(params.max_vars,
                                       static_cast<int>(gen_var_pool().size())));
  std::uint64_t k = draw(rng, static_cast<std::uint64_t>(max_indexed) + 1);
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::string& x = gen_var_pool()[draw(rng, static_cast<std::uint64_t>(vars))];
    c = Config::par(c, Config::indexed(x, random_action(rng, params.alphabet)));
  }
  return canonize(c);
}

Substitution random_closed_substitution(Rng& rng,
                                        const std::vector<std::string>& vars,
                                        const GenParams& params) {
  Substitution sigma;
  for (const std::string& x : vars)
    sigma.plain[x] = random_closed_term(rng, params);
  return sigma;
}

}  // namespace ccslc
