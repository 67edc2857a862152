#include "ccslc/family.hpp"

#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "ccslc/equiv.hpp"
#include "ccslc/parser.hpp"

namespace ccslc {

namespace {

TermPtr chain(const Action& a, int k) {
  TermPtr t = Term::nil();
  for (int j = 0; j < k; ++j) t = Term::prefix(a, t);
  return t;
}

}  // namespace

TermPtr build_a_leq(int i, const std::string& name) {
  if (i < 1) throw std::invalid_argument("build_a_leq: i must be at least 1");
  Action a = Action::name(name);
  std::vector<TermPtr> parts;
  for (int j = 1; j <= i; ++j) parts.push_back(chain(a, j));
  return make_choice(parts);
}

TermPtr build_p_n(int n, const std::string& name) {
  if (n < 2) throw std::invalid_argument("build_p_n: n must be at least 2");
  Action a = Action::name(name);
  std::vector<TermPtr> parts;
  for (int i = 2; i <= n; ++i)
    parts.push_back(Term::prefix(a, build_a_leq(i, name)));
  return make_choice(parts);
}

Equation build_e_n(int n, const std::string& name) {
  if (n < 2) throw std::invalid_argument("build_e_n: n must be at least 2");
  Action a = Action::name(name);
  TermPtr a0 = Term::prefix(a, Term::nil());
  TermPtr pn = build_p_n(n, name);
  std::vector<TermPtr> parts{Term::prefix(a, pn)};
  for (int i = 2; i <= n; ++i)
    parts.push_back(
        Term::prefix(a, Term::parallel(a0, build_a_leq(i, name))));
  return {Term::parallel(a0, pn), make_choice(parts)};
}

bool has_summand_equivalent(const TermPtr& t, const TermPtr& target) {
  EquivChecker chk;
  for (const TermPtr& s : summands(t))
    if (chk.rooted_branching(canonical(s), canonical(target))) return true;
  return false;
}

FamilyReport run_family_experiment(int n, const std::string& name) {
  Equation e = build_e_n(n, name);
  TermPtr pn = build_p_n(n, name);
  TermPtr aleq = build_a_leq(n, name);

  FamilyReport r;
  r.n = n;
  r.lhs = e.lhs;
  r.rhs = e.rhs;
  EquivChecker chk;
  r.e_n_rbb = chk.rooted_branching(canonical(e.lhs), canonical(e.rhs));
  r.depth_lhs = chk.depth(e.lhs);
  r.rdepth_p_n = chk.rdepth(pn);
  r.depth_a_leq_n = chk.depth(aleq);
  r.formulas_hold = r.depth_lhs == n + 2 && r.rdepth_p_n == n + 1 &&
                    r.depth_a_leq_n == n;
  r.lhs_has_property = has_summand_equivalent(e.lhs, e.lhs);
  r.rhs_has_property = has_summand_equivalent(e.rhs, e.lhs);
  r.rhs_summands = static_cast<int>(summands(e.rhs).size());
  return r;
}

std::string to_json(const FamilyReport& report) {
  nlohmann::json j;
  j["schema"] = 1;
  j["n"] = report.n;
  j["lhs"] = pretty(report.lhs);
  j["rhs"] = pretty(report.rhs);
  j["e_n_rbb"] = report.e_n_rbb;
  j["depth_lhs"] = report.depth_lhs;
  j["rdepth_p_n"] = report.rdepth_p_n;
  j["depth_a_leq_n"] = report.depth_a_leq_n;
  j["formulas_hold"] = report.formulas_hold;
  j["lhs_has_property"] = report.lhs_has_property;
  j["rhs_has_property"] = report.rhs_has_property;
  j["rhs_summands"] = report.rhs_summands;
  return j.dump(2) + "\n";
}

}  // namespace ccslc
