#include "ccslc/config.hpp"

#include <algorithm>
#include <cassert>

namespace ccslc {

ConfigPtr Config::indexed(std::string var, Action act) {
  return ConfigPtr(new Config(ConfigKind::IndexedVar, std::move(var), std::move(act),
                              nullptr, nullptr, nullptr));
}

ConfigPtr Config::leaf(TermPtr term) {
  assert(term);
  return ConfigPtr(new Config(ConfigKind::TermLeaf, {}, Action::tau(),
                              std::move(term), nullptr, nullptr));
}

ConfigPtr Config::par(ConfigPtr l, ConfigPtr r) {
  assert(l && r);
  return ConfigPtr(new Config(ConfigKind::Par, {}, Action::tau(),
                              nullptr, std::move(l), std::move(r)));
}

std::size_t CanonConfig::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& [v, a] : ivars) {
    h = (h ^ std::hash<std::string>{}(v)) * 1099511628211ull;
    h = (h ^ a.hash()) * 1099511628211ull;
  }
  if (term) h = (h ^ term->hash()) * 1099511628211ull;
  return h;
}

bool operator==(const CanonConfig& a, const CanonConfig& b) {
  return compare(a, b) == 0;
}

int compare(const CanonConfig& a, const CanonConfig& b) {
  if (a.ivars.size() != b.ivars.size())
    return a.ivars.size() < b.ivars.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.ivars.size(); ++i) {
    if (int c = a.ivars[i].first.compare(b.ivars[i].first); c != 0) return c;
    if (a.ivars[i].second != b.ivars[i].second)
      return a.ivars[i].second < b.ivars[i].second ? -1 : 1;
  }
  if (!a.term || !b.term) {
    if (a.term == b.term) return 0;  // both null
    return a.term ? 1 : -1;
  }
  return structural_compare(a.term, b.term);
}

namespace {

void collect(const ConfigPtr& c, std::vector<IndexedVar>& ivars, std::vector<TermPtr>& terms) {
  switch (c->kind()) {
    case ConfigKind::IndexedVar:
      ivars.emplace_back(c->var_name(), c->act());
      return;
    case ConfigKind::TermLeaf:
      terms.push_back(c->term());
      return;
    case ConfigKind::Par:
      collect(c->left(), ivars, terms);
      collect(c->right(), ivars, terms);
      return;
  }
}

CanonConfig finish(std::vector<IndexedVar> ivars, std::vector<TermPtr> terms) {
  std::sort(ivars.begin(), ivars.end());
  CanonConfig out;
  out.ivars = std::move(ivars);
  if (!terms.empty()) out.term = canonical(make_parallel(terms));
  return out;
}

}  // namespace

CanonConfig canonize(const ConfigPtr& c) {
  std::vector<IndexedVar> ivars;
  std::vector<TermPtr> terms;
  collect(c, ivars, terms);
  return finish(std::move(ivars), std::move(terms));
}

CanonConfig config_of_term(const TermPtr& t) {
  CanonConfig out;
  out.term = canonical(t);
  return out;
}

CanonConfig config_par(const CanonConfig& a, const CanonConfig& b) {
  std::vector<IndexedVar> ivars = a.ivars;
  ivars.insert(ivars.end(), b.ivars.begin(), b.ivars.end());
  std::vector<TermPtr> terms;
  if (a.term) terms.push_back(a.term);
  if (b.term) terms.push_back(b.term);
  return finish(std::move(ivars), std::move(terms));
}

CanonConfig config_par(const CanonConfig& a, const TermPtr& t) {
  std::vector<TermPtr> terms;
  if (a.term) terms.push_back(a.term);
  terms.push_back(t);
  return finish(a.ivars, std::move(terms));
}

ConfigPtr to_config_tree(const CanonConfig& c) {
  assert(!c.ivars.empty() || c.term);
  ConfigPtr acc;
  for (const auto& [v, a] : c.ivars) {
    auto leaf = Config::indexed(v, a);
    acc = acc ? Config::par(acc, leaf) : leaf;
  }
  if (c.term) {
    auto leaf = Config::leaf(c.term);
    acc = acc ? Config::par(acc, leaf) : leaf;
  }
  return acc;
}

std::set<std::string> config_free_vars(const CanonConfig& c) {
  return c.term ? free_vars(c.term) : std::set<std::string>{};
}

std::set<std::string> config_action_names(const CanonConfig& c) {
  std::set<std::string> out = c.term ? action_names(c.term) : std::set<std::string>{};
  for (const auto& [_, a] : c.ivars)
    if (a.is_visible()) out.insert(a.base());
  return out;
}

CanonConfig apply_substitution(const CanonConfig& c, const Substitution& sigma) {
  std::vector<IndexedVar> rest;
  std::vector<TermPtr> terms;
  for (const auto& iv : c.ivars) {
    auto it = sigma.indexed.find(iv);
    if (it == sigma.indexed.end()) {
      rest.push_back(iv);
    } else {
      terms.push_back(it->second);
    }
  }
  if (c.term) terms.push_back(apply_substitution(c.term, sigma));
  return finish(std::move(rest), std::move(terms));
}

}  // namespace ccslc
