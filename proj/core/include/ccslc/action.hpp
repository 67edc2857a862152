// Actions of the calculus: names `a`, conames `~a`, and the silent step `tau`.
//
// Design notes.
//  * An action is a small value type; the coname of `a` is written `~a` and
//    complementation is an involution on visible actions (`tau` has no
//    complement).
//  * Actions are totally ordered so that every container of actions has a
//    single canonical iteration order: `tau` first, then names grouped
//    alphabetically with the plain name before its coname.
//  * An Alphabet is a finite set of *names*; it induces the visible actions
//    {a, ~a | a in the alphabet} and the full action set adds `tau`.

#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace ccslc {

enum class ActKind : std::uint8_t {
  Tau,     // the silent action
  Name,    // a visible name, e.g. `a`
  Coname,  // the complement of a name, e.g. `~a`
};

class Action {
 public:
  Action() : kind_(ActKind::Tau) {}

  static Action tau() { return Action(); }
  static Action name(std::string n) { return Action(ActKind::Name, std::move(n)); }
  static Action coname(std::string n) { return Action(ActKind::Coname, std::move(n)); }

  ActKind kind() const { return kind_; }
  bool is_tau() const { return kind_ == ActKind::Tau; }
  bool is_visible() const { return kind_ != ActKind::Tau; }

  // The underlying name; empty for tau.
  const std::string& base() const { return name_; }

  // Complement of a visible action; complement(complement(x)) == x.
  Action complement() const {
    assert(is_visible() && "tau has no complement");
    return Action(kind_ == ActKind::Name ? ActKind::Coname : ActKind::Name, name_);
  }

  std::string str() const {
    switch (kind_) {
      case ActKind::Tau: return "tau";
      case ActKind::Name: return name_;
      case ActKind::Coname: return "~" + name_;
    }
    return {};
  }

  friend bool operator==(const Action& a, const Action& b) {
    return a.kind_ == b.kind_ && a.name_ == b.name_;
  }
  friend std::strong_ordering operator<=>(const Action& a, const Action& b) {
    // tau < a < ~a < b < ~b < ...
    const bool at = a.is_tau(), bt = b.is_tau();
    if (at != bt) return at ? std::strong_ordering::less : std::strong_ordering::greater;
    if (at && bt) return std::strong_ordering::equal;
    if (auto c = a.name_ <=> b.name_; c != 0) return c;
    return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::string>{}(name_);
    return h * 3u + static_cast<std::size_t>(kind_);
  }

 private:
  Action(ActKind k, std::string n) : kind_(k), name_(std::move(n)) {}

  ActKind kind_;
  std::string name_;
};

// A finite set of action names (not including complements or tau).
using Alphabet = std::set<std::string>;

// All visible actions over the alphabet, in canonical order.
std::vector<Action> visible_actions(const Alphabet& alphabet);

// tau plus all visible actions over the alphabet, in canonical order.
std::vector<Action> all_actions(const Alphabet& alphabet);

}  // namespace ccslc

template <>
struct std::hash<ccslc::Action> {
  std::size_t operator()(const ccslc::Action& a) const { return a.hash(); }
};
