#include "ccslc/parser.hpp"

#include <cctype>
#include <sstream>

namespace ccslc {

namespace {

enum class Tok : std::uint8_t {
  End, LParen, RParen, Plus, Dot, Tilde, At, Par, LMerge, CMerge, Zero,
  Ident, Colon, Semi, Eq, Comma, LBracket, RBracket,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      SourceSpan span{line_, col_, 1};
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", span});
        return out;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
          advance();
        span.length = static_cast<int>(pos_ - start);
        out.push_back({Tok::Ident, std::string(text_.substr(start, pos_ - start)), span});
        continue;
      }
      switch (c) {
        case '0': advance(); out.push_back({Tok::Zero, "0", span}); break;
        case '(': advance(); out.push_back({Tok::LParen, "(", span}); break;
        case ')': advance(); out.push_back({Tok::RParen, ")", span}); break;
        case '+': advance(); out.push_back({Tok::Plus, "+", span}); break;
        case '.': advance(); out.push_back({Tok::Dot, ".", span}); break;
        case '~': advance(); out.push_back({Tok::Tilde, "~", span}); break;
        case '@': advance(); out.push_back({Tok::At, "@", span}); break;
        case ':': advance(); out.push_back({Tok::Colon, ":", span}); break;
        case ';': advance(); out.push_back({Tok::Semi, ";", span}); break;
        case '=': advance(); out.push_back({Tok::Eq, "=", span}); break;
        case ',': advance(); out.push_back({Tok::Comma, ",", span}); break;
        case '[': advance(); out.push_back({Tok::LBracket, "[", span}); break;
        case ']': advance(); out.push_back({Tok::RBracket, "]", span}); break;
        case '|':
          advance();
          if (pos_ < text_.size() && text_[pos_] == '|') {
            advance();
            span.length = 2;
            out.push_back({Tok::Par, "||", span});
          } else if (pos_ < text_.size() && text_[pos_] == '>') {
            advance();
            span.length = 2;
            out.push_back({Tok::LMerge, "|>", span});
          } else {
            out.push_back({Tok::CMerge, "|", span});
          }
          break;
        default:
          throw ParseError("unexpected character '" + std::string(1, c) + "'", span);
      }
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(Lexer(text).run()) {}

  TermPtr term_all() {
    auto c = sum();
    expect(Tok::End, "end of input");
    return need_term(c, peek().span);
  }

  ConfigPtr config_all() {
    auto c = sum();
    expect(Tok::End, "end of input");
    return c;
  }

  Action action_all() {
    auto a = action();
    expect(Tok::End, "end of input");
    return a;
  }

  AxiomFileContents axiom_file_all() {
    AxiomFileContents out;
    if (peek().kind == Tok::Ident && peek().text == "alphabet" && peek(1).kind == Tok::Ident) {
      next();
      Alphabet al;
      al.insert(name_token());
      while (peek().kind == Tok::Comma) {
        next();
        al.insert(name_token());
      }
      expect(Tok::Semi, "';' after the alphabet declaration");
      out.alphabet = std::move(al);
    }
    while (peek().kind != Tok::End) {
      AxiomDecl d;
      d.name = axiom_name();
      expect(Tok::Colon, "':' after the axiom name");
      d.lhs = need_term(sum(), peek().span);
      expect(Tok::Eq, "'=' between the axiom sides");
      d.rhs = need_term(sum(), peek().span);
      expect(Tok::Semi, "';' after the axiom");
      out.decls.push_back(std::move(d));
    }
    return out;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    std::size_t i = pos_ + k;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  Token expect(Tok k, const char* what) {
    if (peek().kind != k)
      throw ParseError(std::string("expected ") + what, peek().span);
    return next();
  }

  static TermPtr need_term(const ConfigPtr& c, SourceSpan at) {
    if (c->kind() != ConfigKind::TermLeaf)
      throw ParseError("indexed variables may only occur directly under '||'", at);
    return c->term();
  }

  std::string name_token() {
    Token t = expect(Tok::Ident, "a name");
    if (!std::islower(static_cast<unsigned char>(t.text[0])))
      throw ParseError("action names start with a lowercase letter", t.span);
    if (t.text == "tau")
      throw ParseError("'tau' cannot be used as an action name", t.span);
    return t.text;
  }

  Action action() {
    if (peek().kind == Tok::Tilde) {
      Token tilde = next();
      Token t = expect(Tok::Ident, "an action name after '~'");
      if (t.text == "tau") throw ParseError("'tau' has no complement", tilde.span);
      if (!std::islower(static_cast<unsigned char>(t.text[0])))
        throw ParseError("action names start with a lowercase letter", t.span);
      return Action::coname(t.text);
    }
    Token t = expect(Tok::Ident, "an action");
    if (t.text == "tau") return Action::tau();
    if (!std::islower(static_cast<unsigned char>(t.text[0])))
      throw ParseError("action names start with a lowercase letter", t.span);
    return Action::name(t.text);
  }

  std::string axiom_name() {
    Token t = expect(Tok::Ident, "an axiom name");
    std::string name = t.text;
    if (peek().kind == Tok::LBracket) {
      next();
      name += '[';
      name += action().str();
      while (peek().kind == Tok::Comma) {
        next();
        name += ',';
        name += action().str();
      }
      expect(Tok::RBracket, "']' closing the axiom name");
      name += ']';
    }
    return name;
  }

  // sum := par ('+' par)*
  ConfigPtr sum() {
    auto c = par();
    while (peek().kind == Tok::Plus) {
      SourceSpan at = next().span;
      auto r = par();
      c = Config::leaf(Term::choice(need_term(c, at), need_term(r, at)));
    }
    return c;
  }

  // par := lm ('||' lm)*
  ConfigPtr par() {
    auto c = lm();
    while (peek().kind == Tok::Par) {
      next();
      auto r = lm();
      if (c->kind() == ConfigKind::TermLeaf && r->kind() == ConfigKind::TermLeaf) {
        c = Config::leaf(Term::parallel(c->term(), r->term()));
      } else {
        c = Config::par(c, r);
      }
    }
    return c;
  }

  // lm := cm ('|>' cm)*
  ConfigPtr lm() {
    auto c = cm();
    while (peek().kind == Tok::LMerge) {
      SourceSpan at = next().span;
      auto r = cm();
      c = Config::leaf(Term::left_merge(need_term(c, at), need_term(r, at)));
    }
    return c;
  }

  // cm := pre ('|' pre)*
  ConfigPtr cm() {
    auto c = pre();
    while (peek().kind == Tok::CMerge) {
      SourceSpan at = next().span;
      auto r = pre();
      c = Config::leaf(Term::comm_merge(need_term(c, at), need_term(r, at)));
    }
    return c;
  }

  // pre := action '.' pre | atom
  ConfigPtr pre() {
    const bool is_action_start =
        peek().kind == Tok::Tilde ||
        (peek().kind == Tok::Ident &&
         (peek().text == "tau" || peek(1).kind == Tok::Dot));
    if (is_action_start) {
      Action a = action();
      SourceSpan at = peek().span;
      expect(Tok::Dot, "'.' after the action");
      auto body = pre();
      return Config::leaf(Term::prefix(a, need_term(body, at)));
    }
    return atom();
  }

  // atom := '0' | var ('@' action)? | '(' sum ')'
  ConfigPtr atom() {
    switch (peek().kind) {
      case Tok::Zero:
        next();
        return Config::leaf(Term::nil());
      case Tok::Ident: {
        Token t = next();
        if (peek().kind == Tok::At) {
          next();
          return Config::indexed(t.text, action());
        }
        return Config::leaf(Term::var(t.text));
      }
      case Tok::LParen: {
        next();
        auto c = sum();
        expect(Tok::RParen, "')'");
        return c;
      }
      default:
        throw ParseError("expected a term", peek().span);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(std::string_view text) { return Parser(text).term_all(); }
ConfigPtr parse_config(std::string_view text) { return Parser(text).config_all(); }
Action parse_action(std::string_view text) { return Parser(text).action_all(); }
AxiomFileContents parse_axiom_file(std::string_view text) {
  return Parser(text).axiom_file_all();
}

// ── printing ──────────────────────────────────────────────────────────────

namespace {

int level(TermKind k) {
  switch (k) {
    case TermKind::Choice: return 0;
    case TermKind::Parallel: return 1;
    case TermKind::LeftMerge: return 2;
    case TermKind::CommMerge: return 3;
    default: return 4;
  }
}

void print_term(std::string& out, const TermPtr& t, int min_level) {
  const int lv = level(t->kind());
  const bool paren = lv < min_level;
  if (paren) out += '(';
  switch (t->kind()) {
    case TermKind::Nil:
      out += '0';
      break;
    case TermKind::Var:
      out += t->var_name();
      break;
    case TermKind::Prefix:
      out += t->act().str();
      out += '.';
      print_term(out, t->body(), 4);
      break;
    case TermKind::Choice:
      print_term(out, t->left(), 0);
      out += " + ";
      print_term(out, t->right(), 1);
      break;
    case TermKind::Parallel:
      print_term(out, t->left(), 1);
      out += " || ";
      print_term(out, t->right(), 2);
      break;
    case TermKind::LeftMerge:
      print_term(out, t->left(), 2);
      out += " |> ";
      print_term(out, t->right(), 3);
      break;
    case TermKind::CommMerge:
      print_term(out, t->left(), 3);
      out += " | ";
      print_term(out, t->right(), 4);
      break;
  }
  if (paren) out += ')';
}

void collect_components(const ConfigPtr& c, std::vector<ConfigPtr>& out) {
  if (c->kind() == ConfigKind::Par) {
    collect_components(c->left(), out);
    collect_components(c->right(), out);
  } else {
    out.push_back(c);
  }
}

}  // namespace

std::string pretty(const TermPtr& t) {
  std::string out;
  print_term(out, t, 0);
  return out;
}

std::string pretty(const ConfigPtr& c) {
  std::vector<ConfigPtr> parts;
  collect_components(c, parts);
  if (parts.size() == 1 && parts[0]->kind() == ConfigKind::TermLeaf)
    return pretty(parts[0]->term());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " || ";
    if (parts[i]->kind() == ConfigKind::IndexedVar) {
      out += parts[i]->var_name();
      out += '@';
      out += parts[i]->act().str();
    } else {
      // Term components bind looser operators inside parentheses so the
      // printed configuration reparses to the same canonical form.
      print_term(out, parts[i]->term(), 2);
    }
  }
  return out;
}

std::string pretty(const CanonConfig& c) { return pretty(to_config_tree(c)); }

std::string describe(const ParseError& e) {
  std::ostringstream os;
  os << "line " << e.span().line << ", column " << e.span().column << ": " << e.what();
  return os.str();
}

}  // namespace ccslc
