#include "ccslc/proof.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ccslc/parser.hpp"

namespace ccslc {

// ── checking ──────────────────────────────────────────────────────────────

namespace {

Substitution to_substitution(const std::vector<std::pair<std::string, TermPtr>>& subst) {
  Substitution sigma;
  for (const auto& [v, t] : subst) sigma.plain[v] = t;
  return sigma;
}

std::string op_name(ProofStep::Kind k) {
  switch (k) {
    case ProofStep::Kind::CongChoice: return "choice";
    case ProofStep::Kind::CongPar: return "par";
    case ProofStep::Kind::CongLMerge: return "lmerge";
    case ProofStep::Kind::CongCMerge: return "cmerge";
    default: return {};
  }
}

TermPtr apply_op(ProofStep::Kind k, const TermPtr& l, const TermPtr& r) {
  switch (k) {
    case ProofStep::Kind::CongChoice: return Term::choice(l, r);
    case ProofStep::Kind::CongPar: return Term::parallel(l, r);
    case ProofStep::Kind::CongLMerge: return Term::left_merge(l, r);
    case ProofStep::Kind::CongCMerge: return Term::comm_merge(l, r);
    default: throw std::logic_error("not a binary congruence");
  }
}

}  // namespace

CheckResult check_proof(const ProofTrace& trace, const AxiomSystem& system) {
  if (trace.steps.empty()) return {false, "the proof has no steps", 0};
  if (!trace.lhs || !trace.rhs) return {false, "the proof has no QED line", 0};

  std::vector<Equation> proved;
  proved.reserve(trace.steps.size());

  for (std::size_t idx = 0; idx < trace.steps.size(); ++idx) {
    const ProofStep& s = trace.steps[idx];
    const int k = static_cast<int>(idx) + 1;
    auto ref = [&](int r) -> const Equation* {
      if (r < 1 || r > static_cast<int>(idx)) return nullptr;
      return &proved[r - 1];
    };
    switch (s.kind) {
      case ProofStep::Kind::Refl:
        proved.push_back({s.term, s.term});
        break;
      case ProofStep::Kind::Axiom: {
        auto eq = system.resolve(s.axiom);
        if (!eq)
          return {false, "unknown axiom '" + s.axiom + "' in system " + system.name(), k};
        const Substitution sigma = to_substitution(s.subst);
        proved.push_back({apply_substitution(eq->lhs, sigma), apply_substitution(eq->rhs, sigma)});
        break;
      }
      case ProofStep::Kind::Trans: {
        const Equation* a = ref(s.i);
        const Equation* b = ref(s.j);
        if (!a || !b) return {false, "step reference out of range", k};
        if (!ac_equal(a->rhs, b->lhs))
          return {false,
                  "the sides do not meet: step " + std::to_string(s.i) + " ends with  " +
                      pretty(a->rhs) + "  but step " + std::to_string(s.j) + " starts with  " +
                      pretty(b->lhs),
                  k};
        proved.push_back({a->lhs, b->rhs});
        break;
      }
      case ProofStep::Kind::CongPrefix: {
        const Equation* a = ref(s.i);
        if (!a) return {false, "step reference out of range", k};
        proved.push_back({Term::prefix(s.act, a->lhs), Term::prefix(s.act, a->rhs)});
        break;
      }
      default: {
        const Equation* a = ref(s.i);
        const Equation* b = ref(s.j);
        if (!a || !b) return {false, "step reference out of range", k};
        proved.push_back({apply_op(s.kind, a->lhs, b->lhs), apply_op(s.kind, a->rhs, b->rhs)});
        break;
      }
    }
  }

  const Equation& last = proved.back();
  if (!ac_equal(last.lhs, trace.lhs) || !ac_equal(last.rhs, trace.rhs))
    return {false,
            "the conclusion does not match the final step: proved  " + pretty(last.lhs) +
                " = " + pretty(last.rhs),
            static_cast<int>(trace.steps.size())};
  return {true, {}, 0};
}

// ── serialization ─────────────────────────────────────────────────────────

std::string write_trace(const ProofTrace& trace) {
  std::ostringstream os;
  for (std::size_t idx = 0; idx < trace.steps.size(); ++idx) {
    const ProofStep& s = trace.steps[idx];
    os << "STEP " << idx + 1 << " = ";
    switch (s.kind) {
      case ProofStep::Kind::Refl:
        os << "REFL " << pretty(s.term);
        break;
      case ProofStep::Kind::Axiom: {
        os << "AXIOM " << s.axiom;
        if (!s.subst.empty()) {
          os << " WITH ";
          for (std::size_t i = 0; i < s.subst.size(); ++i) {
            if (i) os << ", ";
            os << "$" << s.subst[i].first << " := " << pretty(s.subst[i].second);
          }
        }
        break;
      }
      case ProofStep::Kind::Trans:
        os << "TRANS " << s.i << " " << s.j;
        break;
      case ProofStep::Kind::CongPrefix:
        os << "CONG prefix:" << s.act.str() << " " << s.i;
        break;
      default:
        os << "CONG " << op_name(s.kind) << " " << s.i << " " << s.j;
        break;
    }
    os << "\n";
  }
  os << "QED " << pretty(trace.lhs) << " = " << pretty(trace.rhs) << "\n";
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Split off the first whitespace-delimited word.
std::pair<std::string_view, std::string_view> word(std::string_view s) {
  s = trim(s);
  std::size_t i = 0;
  while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return {s.substr(0, i), trim(s.substr(i))};
}

[[noreturn]] void fail(const std::string& msg, int line) {
  throw ParseError(msg, SourceSpan{line, 1, 0});
}

int parse_ref(std::string_view s, int line) {
  int v = 0;
  if (s.empty()) fail("expected a step number", line);
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected a step number", line);
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

ProofTrace parse_trace(std::string_view text) {
  ProofTrace trace;
  int lineno = 0;
  std::size_t pos = 0;
  bool saw_qed = false;

  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                          : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    if (saw_qed) fail("content after the QED line", lineno);

    auto [head, rest] = word(line);
    if (head == "QED") {
      std::size_t eq = rest.find('=');
      if (eq == std::string_view::npos) fail("QED needs the form  lhs = rhs", lineno);
      trace.lhs = parse_term(rest.substr(0, eq));
      trace.rhs = parse_term(rest.substr(eq + 1));
      saw_qed = true;
      continue;
    }
    if (head != "STEP") fail("expected STEP or QED", lineno);

    auto [num, afternum] = word(rest);
    const int k = parse_ref(num, lineno);
    if (k != static_cast<int>(trace.steps.size()) + 1)
      fail("steps must be numbered consecutively from 1 (got " + std::string(num) + ")", lineno);
    if (afternum.empty() || afternum.front() != '=') fail("expected '=' after the step number", lineno);
    afternum.remove_prefix(1);

    auto [kw, body] = word(afternum);
    ProofStep s;
    if (kw == "REFL") {
      s.kind = ProofStep::Kind::Refl;
      s.term = parse_term(body);
    } else if (kw == "AXIOM") {
      s.kind = ProofStep::Kind::Axiom;
      auto [name, after] = word(body);
      if (name.empty()) fail("expected an axiom name", lineno);
      s.axiom = std::string(name);
      // Bracketed action lists may be written with spaces: C4[a, ~a].
      while (s.axiom.find('[') != std::string::npos &&
             s.axiom.find(']') == std::string::npos && !after.empty()) {
        auto [more, rest2] = word(after);
        s.axiom += std::string(more);
        after = rest2;
      }
      if (!after.empty()) {
        auto [with, assigns] = word(after);
        if (with != "WITH") fail("expected WITH after the axiom name", lineno);
        // Terms contain no commas, so splitting on ',' is safe.
        std::string_view remaining = assigns;
        while (!remaining.empty()) {
          std::size_t comma = remaining.find(',');
          std::string_view item = trim(remaining.substr(0, comma));
          remaining = comma == std::string_view::npos ? std::string_view{}
                                                      : trim(remaining.substr(comma + 1));
          std::size_t arrow = item.find(":=");
          if (arrow == std::string_view::npos) fail("expected  $var := term", lineno);
          std::string_view v = trim(item.substr(0, arrow));
          if (v.empty() || v.front() != '$') fail("substituted variables are written $var", lineno);
          v.remove_prefix(1);
          s.subst.emplace_back(std::string(v), parse_term(item.substr(arrow + 2)));
        }
        std::sort(s.subst.begin(), s.subst.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < s.subst.size(); ++i)
          if (s.subst[i].first == s.subst[i - 1].first)
            fail("variable $" + s.subst[i].first + " is substituted twice", lineno);
      }
    } else if (kw == "TRANS") {
      s.kind = ProofStep::Kind::Trans;
      auto [a, after] = word(body);
      auto [b, tail] = word(after);
      if (!tail.empty()) fail("TRANS takes exactly two step numbers", lineno);
      s.i = parse_ref(a, lineno);
      s.j = parse_ref(b, lineno);
    } else if (kw == "CONG") {
      auto [op, after] = word(body);
      if (op.rfind("prefix:", 0) == 0) {
        s.kind = ProofStep::Kind::CongPrefix;
        s.act = parse_action(op.substr(7));
        auto [a, tail] = word(after);
        if (!tail.empty()) fail("CONG prefix takes one step number", lineno);
        s.i = parse_ref(a, lineno);
      } else {
        if (op == "choice") s.kind = ProofStep::Kind::CongChoice;
        else if (op == "par") s.kind = ProofStep::Kind::CongPar;
        else if (op == "lmerge") s.kind = ProofStep::Kind::CongLMerge;
        else if (op == "cmerge") s.kind = ProofStep::Kind::CongCMerge;
        else fail("unknown congruence '" + std::string(op) + "'", lineno);
        auto [a, after2] = word(after);
        auto [b, tail] = word(after2);
        if (!tail.empty()) fail("CONG takes two step numbers", lineno);
        s.i = parse_ref(a, lineno);
        s.j = parse_ref(b, lineno);
      }
    } else {
      fail("unknown step kind '" + std::string(kw) + "'", lineno);
    }
    trace.steps.push_back(std::move(s));
  }

  if (!saw_qed) fail("missing QED line", lineno);
  return trace;
}

// ── programmatic proofs ───────────────────────────────────────────────────

struct Pf::Node {
  ProofStep::Kind kind;
  TermPtr lhs, rhs;
  TermPtr term;                                        // Refl
  std::string axiom;                                   // Axiom
  std::vector<std::pair<std::string, TermPtr>> subst;  // Axiom
  Action act;                                          // CongPrefix
  std::shared_ptr<const Node> a, b;
};

Pf Pf::refl(TermPtr t) {
  auto n = std::make_shared<Node>();
  n->kind = ProofStep::Kind::Refl;
  n->term = t;
  n->lhs = n->rhs = t;
  return Pf(std::move(n));
}

Pf Pf::axiom(const AxiomSystem& system, const std::string& name,
             std::vector<std::pair<std::string, TermPtr>> subst) {
  auto eq = system.resolve(name);
  if (!eq) throw std::logic_error("axiom '" + name + "' is not in system " + system.name());
  std::sort(subst.begin(), subst.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  auto n = std::make_shared<Node>();
  n->kind = ProofStep::Kind::Axiom;
  n->axiom = name;
  n->subst = std::move(subst);
  const Substitution sigma = to_substitution(n->subst);
  n->lhs = apply_substitution(eq->lhs, sigma);
  n->rhs = apply_substitution(eq->rhs, sigma);
  return Pf(std::move(n));
}

Pf Pf::then(const Pf& next) const {
  // Skip no-op compositions so traces stay lean.
  if (node_->kind == ProofStep::Kind::Refl && structural_equal(node_->rhs, next.node_->lhs))
    return next;
  if (next.node_->kind == ProofStep::Kind::Refl && structural_equal(node_->rhs, next.node_->lhs))
    return *this;
  if (!ac_equal(node_->rhs, next.node_->lhs))
    throw std::logic_error("proof composition does not meet:\n  " + pretty(node_->rhs) +
                           "\nvs\n  " + pretty(next.node_->lhs));
  auto n = std::make_shared<Node>();
  n->kind = ProofStep::Kind::Trans;
  n->a = node_;
  n->b = next.node_;
  n->lhs = node_->lhs;
  n->rhs = next.node_->rhs;
  return Pf(std::move(n));
}

Pf Pf::cong_prefix(Action mu, const Pf& body) {
  if (body.node_->kind == ProofStep::Kind::Refl)
    return refl(Term::prefix(mu, body.node_->term));
  auto n = std::make_shared<Node>();
  n->kind = ProofStep::Kind::CongPrefix;
  n->act = mu;
  n->a = body.node_;
  n->lhs = Term::prefix(mu, body.lhs());
  n->rhs = Term::prefix(mu, body.rhs());
  return Pf(std::move(n));
}

Pf Pf::cong(TermKind op, const Pf& l, const Pf& r) {
  ProofStep::Kind k;
  switch (op) {
    case TermKind::Choice: k = ProofStep::Kind::CongChoice; break;
    case TermKind::Parallel: k = ProofStep::Kind::CongPar; break;
    case TermKind::LeftMerge: k = ProofStep::Kind::CongLMerge; break;
    case TermKind::CommMerge: k = ProofStep::Kind::CongCMerge; break;
    default: throw std::logic_error("cong expects a binary operator");
  }
  if (l.node_->kind == ProofStep::Kind::Refl && r.node_->kind == ProofStep::Kind::Refl)
    return refl(apply_op(k, l.node_->term, r.node_->term));
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = l.node_;
  n->b = r.node_;
  n->lhs = apply_op(k, l.lhs(), r.lhs());
  n->rhs = apply_op(k, l.rhs(), r.rhs());
  return Pf(std::move(n));
}

namespace {

std::string toggle_sym(const std::string& name) {
  if (name.size() > 4 && name.compare(name.size() - 4, 4, "_sym") == 0)
    return name.substr(0, name.size() - 4);
  return name + "_sym";
}

}  // namespace

Pf Pf::reversed() const {
  std::unordered_map<const Node*, std::shared_ptr<const Node>> memo;
  auto rec = [&](auto&& self, const std::shared_ptr<const Node>& n) -> std::shared_ptr<const Node> {
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    auto out = std::make_shared<Node>();
    out->kind = n->kind;
    out->lhs = n->rhs;
    out->rhs = n->lhs;
    switch (n->kind) {
      case ProofStep::Kind::Refl:
        out->term = n->term;
        break;
      case ProofStep::Kind::Axiom:
        out->axiom = toggle_sym(n->axiom);
        out->subst = n->subst;
        break;
      case ProofStep::Kind::Trans:
        out->a = self(self, n->b);
        out->b = self(self, n->a);
        break;
      case ProofStep::Kind::CongPrefix:
        out->act = n->act;
        out->a = self(self, n->a);
        break;
      default:
        out->a = self(self, n->a);
        out->b = self(self, n->b);
        break;
    }
    memo.emplace(n.get(), out);
    return out;
  };
  return Pf(rec(rec, node_));
}

const TermPtr& Pf::lhs() const { return node_->lhs; }
const TermPtr& Pf::rhs() const { return node_->rhs; }

ProofTrace Pf::to_trace() const {
  ProofTrace trace;
  std::unordered_map<const Node*, int> index;  // node -> 1-based step
  auto rec = [&](auto&& self, const std::shared_ptr<const Node>& n) -> int {
    auto it = index.find(n.get());
    if (it != index.end()) return it->second;
    ProofStep s;
    s.kind = n->kind;
    switch (n->kind) {
      case ProofStep::Kind::Refl:
        s.term = n->term;
        break;
      case ProofStep::Kind::Axiom:
        s.axiom = n->axiom;
        s.subst = n->subst;
        break;
      case ProofStep::Kind::Trans:
        s.i = self(self, n->a);
        s.j = self(self, n->b);
        break;
      case ProofStep::Kind::CongPrefix:
        s.act = n->act;
        s.i = self(self, n->a);
        break;
      default:
        s.i = self(self, n->a);
        s.j = self(self, n->b);
        break;
    }
    trace.steps.push_back(std::move(s));
    const int k = static_cast<int>(trace.steps.size());
    index.emplace(n.get(), k);
    return k;
  };
  rec(rec, node_);
  trace.lhs = node_->lhs;
  trace.rhs = node_->rhs;
  return trace;
}

}  // namespace ccslc
