#include "ccslc/term.hpp"

#include <algorithm>
#include <cassert>

namespace ccslc {

namespace {

constexpr std::size_t kFnvPrime = 1099511628211ull;

std::size_t mix(std::size_t h, std::size_t v) { return (h ^ v) * kFnvPrime; }

// Rightmost part of a canonical left-nested +/|| tree; for a non-compound
// node this is the node itself. In a canonical tree it is the maximal part.
const TermPtr& last_part(const TermPtr& t, TermKind k) {
  return t->kind() == k ? t->right() : t;
}

}  // namespace

Term::Term(TermKind k, Action a, std::string v, TermPtr l, TermPtr r)
    : kind_(k), act_(std::move(a)), var_(std::move(v)),
      left_(std::move(l)), right_(std::move(r)) {
  std::size_t h = mix(0xcbf29ce484222325ull, static_cast<std::size_t>(kind_));
  switch (kind_) {
    case TermKind::Nil:
      size_ = 1;
      break;
    case TermKind::Var:
      size_ = 0;
      closed_ = false;
      h = mix(h, std::hash<std::string>{}(var_));
      break;
    case TermKind::Prefix:
      size_ = 1 + left_->size();
      closed_ = left_->closed();
      canonical_ = left_->is_canonical();
      h = mix(h, act_.hash());
      h = mix(h, left_->hash());
      break;
    default: {  // binary operators
      size_ = 1 + left_->size() + right_->size();
      closed_ = left_->closed() && right_->closed();
      h = mix(h, left_->hash());
      h = mix(h, right_->hash());
      if (kind_ == TermKind::Choice || kind_ == TermKind::Parallel) {
        // Canonical iff left-nested, parts canonical, and sorted.
        canonical_ = left_->is_canonical() && right_->is_canonical() &&
                     right_->kind() != kind_ &&
                     structural_compare(last_part(left_, kind_), right_) <= 0;
      } else {
        canonical_ = left_->is_canonical() && right_->is_canonical();
      }
      break;
    }
  }
  hash_ = h;
}

TermPtr Term::nil() {
  static const TermPtr instance(new Term(TermKind::Nil, Action::tau(), {}, nullptr, nullptr));
  return instance;
}

TermPtr Term::var(std::string name) {
  return TermPtr(new Term(TermKind::Var, Action::tau(), std::move(name), nullptr, nullptr));
}

TermPtr Term::prefix(Action act, TermPtr body) {
  assert(body);
  return TermPtr(new Term(TermKind::Prefix, std::move(act), {}, std::move(body), nullptr));
}

TermPtr Term::choice(TermPtr l, TermPtr r) {
  assert(l && r);
  return TermPtr(new Term(TermKind::Choice, Action::tau(), {}, std::move(l), std::move(r)));
}

TermPtr Term::parallel(TermPtr l, TermPtr r) {
  assert(l && r);
  return TermPtr(new Term(TermKind::Parallel, Action::tau(), {}, std::move(l), std::move(r)));
}

TermPtr Term::left_merge(TermPtr l, TermPtr r) {
  assert(l && r);
  return TermPtr(new Term(TermKind::LeftMerge, Action::tau(), {}, std::move(l), std::move(r)));
}

TermPtr Term::comm_merge(TermPtr l, TermPtr r) {
  assert(l && r);
  return TermPtr(new Term(TermKind::CommMerge, Action::tau(), {}, std::move(l), std::move(r)));
}

// ── ordering and equality ─────────────────────────────────────────────────

int structural_compare(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->size() != b->size()) return a->size() < b->size() ? -1 : 1;
  if (a->kind() != b->kind())
    return static_cast<int>(a->kind()) < static_cast<int>(b->kind()) ? -1 : 1;
  switch (a->kind()) {
    case TermKind::Nil:
      return 0;
    case TermKind::Var:
      return a->var_name().compare(b->var_name());
    case TermKind::Prefix: {
      if (a->act() != b->act()) return a->act() < b->act() ? -1 : 1;
      return structural_compare(a->body(), b->body());
    }
    default: {
      if (int c = structural_compare(a->left(), b->left()); c != 0) return c;
      return structural_compare(a->right(), b->right());
    }
  }
}

bool structural_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash() != b->hash() || a->size() != b->size() || a->kind() != b->kind())
    return false;
  return structural_compare(a, b) == 0;
}

TermPtr canonical(const TermPtr& t) {
  if (t->is_canonical()) return t;
  switch (t->kind()) {
    case TermKind::Nil:
    case TermKind::Var:
      return t;
    case TermKind::Prefix:
      return Term::prefix(t->act(), canonical(t->body()));
    case TermKind::LeftMerge:
      return Term::left_merge(canonical(t->left()), canonical(t->right()));
    case TermKind::CommMerge:
      return Term::comm_merge(canonical(t->left()), canonical(t->right()));
    case TermKind::Choice:
    case TermKind::Parallel: {
      auto parts = t->kind() == TermKind::Choice ? summands(t) : parallel_factors(t);
      for (auto& p : parts) p = canonical(p);
      std::sort(parts.begin(), parts.end(),
                [](const TermPtr& x, const TermPtr& y) { return structural_compare(x, y) < 0; });
      return t->kind() == TermKind::Choice ? make_choice(parts) : make_parallel(parts);
    }
  }
  return t;
}

bool ac_equal(const TermPtr& a, const TermPtr& b) {
  return structural_equal(canonical(a), canonical(b));
}

// ── structural helpers ────────────────────────────────────────────────────

namespace {

void collect_parts(const TermPtr& t, TermKind k, std::vector<TermPtr>& out) {
  if (t->kind() == k) {
    collect_parts(t->left(), k, out);
    collect_parts(t->right(), k, out);
  } else {
    out.push_back(t);
  }
}

}  // namespace

std::vector<TermPtr> summands(const TermPtr& t) {
  std::vector<TermPtr> out;
  collect_parts(t, TermKind::Choice, out);
  return out;
}

std::vector<TermPtr> parallel_factors(const TermPtr& t) {
  std::vector<TermPtr> out;
  collect_parts(t, TermKind::Parallel, out);
  return out;
}

TermPtr make_choice(const std::vector<TermPtr>& ts) {
  if (ts.empty()) return Term::nil();
  TermPtr acc = ts.front();
  for (std::size_t i = 1; i < ts.size(); ++i) acc = Term::choice(acc, ts[i]);
  return acc;
}

TermPtr make_parallel(const std::vector<TermPtr>& ts) {
  if (ts.empty()) return Term::nil();
  TermPtr acc = ts.front();
  for (std::size_t i = 1; i < ts.size(); ++i) acc = Term::parallel(acc, ts[i]);
  return acc;
}

TermPtr strip_zeros(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Nil:
    case TermKind::Var:
      return t;
    case TermKind::Prefix:
      return Term::prefix(t->act(), strip_zeros(t->body()));
    case TermKind::LeftMerge:
      return Term::left_merge(strip_zeros(t->left()), strip_zeros(t->right()));
    case TermKind::CommMerge:
      return Term::comm_merge(strip_zeros(t->left()), strip_zeros(t->right()));
    case TermKind::Choice:
    case TermKind::Parallel: {
      auto parts = t->kind() == TermKind::Choice ? summands(t) : parallel_factors(t);
      std::vector<TermPtr> kept;
      for (const auto& p : parts) {
        auto s = strip_zeros(p);
        if (!s->is_nil()) kept.push_back(s);
      }
      return t->kind() == TermKind::Choice ? make_choice(kept) : make_parallel(kept);
    }
  }
  return t;
}

namespace {

void collect_free_vars(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind()) {
    case TermKind::Nil:
      return;
    case TermKind::Var:
      out.insert(t->var_name());
      return;
    case TermKind::Prefix:
      collect_free_vars(t->body(), out);
      return;
    default:
      collect_free_vars(t->left(), out);
      collect_free_vars(t->right(), out);
      return;
  }
}

void collect_action_names(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind()) {
    case TermKind::Nil:
    case TermKind::Var:
      return;
    case TermKind::Prefix:
      if (t->act().is_visible()) out.insert(t->act().base());
      collect_action_names(t->body(), out);
      return;
    default:
      collect_action_names(t->left(), out);
      collect_action_names(t->right(), out);
      return;
  }
}

}  // namespace

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> out;
  collect_free_vars(t, out);
  return out;
}

std::set<std::string> action_names(const TermPtr& t) {
  std::set<std::string> out;
  collect_action_names(t, out);
  return out;
}

// ── substitution ──────────────────────────────────────────────────────────

bool Substitution::closed() const {
  for (const auto& [_, v] : plain)
    if (!v->closed()) return false;
  for (const auto& [_, v] : indexed)
    if (!v->closed()) return false;
  return true;
}

TermPtr apply_substitution(const TermPtr& t, const Substitution& sigma) {
  if (t->closed() || sigma.plain.empty()) return t;
  switch (t->kind()) {
    case TermKind::Nil:
      return t;
    case TermKind::Var: {
      auto it = sigma.plain.find(t->var_name());
      return it == sigma.plain.end() ? t : it->second;
    }
    case TermKind::Prefix:
      return Term::prefix(t->act(), apply_substitution(t->body(), sigma));
    case TermKind::Choice:
      return Term::choice(apply_substitution(t->left(), sigma),
                          apply_substitution(t->right(), sigma));
    case TermKind::Parallel:
      return Term::parallel(apply_substitution(t->left(), sigma),
                            apply_substitution(t->right(), sigma));
    case TermKind::LeftMerge:
      return Term::left_merge(apply_substitution(t->left(), sigma),
                              apply_substitution(t->right(), sigma));
    case TermKind::CommMerge:
      return Term::comm_merge(apply_substitution(t->left(), sigma),
                              apply_substitution(t->right(), sigma));
  }
  return t;
}

}  // namespace ccslc
