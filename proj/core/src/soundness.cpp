#include "ccslc/soundness.hpp"

#include <atomic>
#include <future>
#include <set>
#include <thread>

#include "json.hpp"

namespace ccslc {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::string> sorted_free_vars(const Axiom& ax) {
  std::set<std::string> vars = free_vars(ax.lhs);
  std::set<std::string> rhs = free_vars(ax.rhs);
  vars.insert(rhs.begin(), rhs.end());
  return {vars.begin(), vars.end()};
}

}  // namespace

SoundnessReport check_soundness(const AxiomSystem& system, Relation relation,
                                const SoundnessParams& params) {
  GenParams gen = params.gen;
  gen.alphabet = system.alphabet();
  gen.max_vars = 0;

  const std::vector<Axiom>& axioms = system.axioms();
  std::vector<std::vector<SoundnessCounterexample>> found(axioms.size());
  std::vector<long long> counts(axioms.size(), 0);

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    EquivChecker chk;
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= axioms.size()) return;
      const Axiom& ax = axioms[i];
      std::vector<std::string> vars = sorted_free_vars(ax);
      Rng rng(params.seed ^ fnv1a(ax.name));
      for (int s = 0; s < params.substitutions_per_axiom; ++s) {
        Substitution sigma = random_closed_substitution(rng, vars, gen);
        TermPtr lhs = apply_substitution(ax.lhs, sigma);
        TermPtr rhs = apply_substitution(ax.rhs, sigma);
        ++counts[i];
        if (!chk.equivalent(relation, lhs, rhs)) {
          SoundnessCounterexample ce;
          ce.axiom = ax.name;
          for (const std::string& x : vars)
            ce.assignment.emplace_back(x, pretty(sigma.plain.at(x)));
          found[i].push_back(std::move(ce));
          if (found[i].size() >= 3) break;  // enough to refute this axiom
        }
      }
    }
  };

  unsigned hw = std::thread::hardware_concurrency();
  std::size_t workers = params.workers > 0 ? static_cast<std::size_t>(params.workers)
                                           : std::max(1u, hw);
  workers = std::min(workers, axioms.size() ? axioms.size() : std::size_t{1});
  std::vector<std::future<void>> pool;
  for (std::size_t w = 1; w < workers; ++w)
    pool.push_back(std::async(std::launch::async, work));
  work();
  for (std::future<void>& f : pool) f.get();

  SoundnessReport report;
  report.system = system.name();
  report.relation = relation;
  report.axioms = static_cast<int>(axioms.size());
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    report.instances += counts[i];
    for (SoundnessCounterexample& ce : found[i])
      report.counterexamples.push_back(std::move(ce));
  }
  return report;
}

std::string to_json(const SoundnessReport& report) {
  nlohmann::json j;
  j["schema"] = 1;
  j["system"] = report.system;
  j["relation"] = to_string(report.relation);
  j["axioms"] = report.axioms;
  j["instances"] = report.instances;
  j["sound"] = report.ok();
  nlohmann::json ces = nlohmann::json::array();
  for (const SoundnessCounterexample& ce : report.counterexamples) {
    nlohmann::json c;
    c["axiom"] = ce.axiom;
    nlohmann::json a = nlohmann::json::object();
    for (const auto& [var, image] : ce.assignment) a[var] = image;
    c["assignment"] = a;
    ces.push_back(c);
  }
  j["counterexamples"] = ces;
  return j.dump(2) + "\n";
}

}  // namespace ccslc
