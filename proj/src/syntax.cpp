/* Copyright 2026 The aafl Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "aafl/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace aafl {

struct FormulaNode {
  Op op;
  std::string name;
  std::vector<Formula> kids;
  Action act;
  std::uint64_t id;
  std::size_t hash;  // structural, identical across runs
};

struct ActionNode {
  ActOp op;
  AgentSet agents;
  std::vector<Action> kids;
  Formula test;
  std::uint64_t id;
  std::size_t hash;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  // splitmix-style combine; deterministic, unlike std::hash on some platforms
  v += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  v ^= v >> 30;
  v *= 0xbf58476d1ce4e5b9ULL;
  v ^= v >> 27;
  v *= 0x94d049bb133111ebULL;
  v ^= v >> 31;
  return h ^ v;
}

std::size_t str_hash(std::string_view s) {
  std::size_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

class Interner {
 public:
  static Interner& get() {
    static Interner* in = new Interner();  // intentionally leaked
    return *in;
  }

  const FormulaNode* formula(Op op, std::string_view name, std::vector<Formula> kids, Action act) {
    std::size_t h = mix(static_cast<std::size_t>(op) + 1, str_hash(name));
    for (Formula k : kids) h = mix(h, k.hash());
    if (act.valid()) h = mix(h, act.hash());
    std::lock_guard<std::mutex> lock(mu_);
    auto range = formulas_.equal_range(h);
    for (auto it = range.first; it != range.second; ++it) {
      const FormulaNode* n = it->second.get();
      if (n->op == op && n->name == name && n->kids == kids && n->act == act) return n;
    }
    auto node = std::make_unique<FormulaNode>(
        FormulaNode{op, std::string(name), std::move(kids), act, next_id_++, h});
    const FormulaNode* raw = node.get();
    formulas_.emplace(h, std::move(node));
    return raw;
  }

  const ActionNode* action(ActOp op, AgentSet agents, std::vector<Action> kids, Formula test) {
    std::size_t h = mix(static_cast<std::size_t>(op) + 101, 7);
    for (const auto& a : agents) h = mix(h, str_hash(a));
    for (Action k : kids) h = mix(h, k.hash());
    if (test.valid()) h = mix(h, test.hash());
    std::lock_guard<std::mutex> lock(mu_);
    auto range = actions_.equal_range(h);
    for (auto it = range.first; it != range.second; ++it) {
      const ActionNode* n = it->second.get();
      if (n->op == op && n->agents == agents && n->kids == kids && n->test == test) return n;
    }
    auto node = std::make_unique<ActionNode>(
        ActionNode{op, std::move(agents), std::move(kids), test, next_id_++, h});
    const ActionNode* raw = node.get();
    actions_.emplace(h, std::move(node));
    return raw;
  }

 private:
  std::mutex mu_;
  std::unordered_multimap<std::size_t, std::unique_ptr<FormulaNode>> formulas_;
  std::unordered_multimap<std::size_t, std::unique_ptr<ActionNode>> actions_;
  std::uint64_t next_id_ = 1;
};

Formula make(Op op, std::string_view name, std::vector<Formula> kids, Action act = Action()) {
  return Formula(Interner::get().formula(op, name, std::move(kids), act));
}

Action make_action(ActOp op, AgentSet agents, std::vector<Action> kids, Formula f = Formula()) {
  return Action(Interner::get().action(op, std::move(agents), std::move(kids), f));
}

}  // namespace

Op Formula::op() const { return n_->op; }
const std::string& Formula::name() const { return n_->name; }
const std::vector<Formula>& Formula::kids() const { return n_->kids; }
Action Formula::action() const { return n_->act; }
std::uint64_t Formula::id() const { return n_->id; }
std::size_t Formula::hash() const { return n_->hash; }

ActOp Action::op() const { return n_->op; }
const std::vector<Action>& Action::kids() const { return n_->kids; }
Formula Action::test() const { return n_->test; }
const AgentSet& Action::agents() const { return n_->agents; }
std::uint64_t Action::id() const { return n_->id; }
std::size_t Action::hash() const { return n_->hash; }

int compare(Formula a, Formula b) {
  if (a == b) return 0;
  if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
  if (a.op() == Op::Atom) return a.name() < b.name() ? -1 : 1;
  if (a.hash() != b.hash()) return a.hash() < b.hash() ? -1 : 1;
  if (a.name() != b.name()) return a.name() < b.name() ? -1 : 1;
  if (a.kids().size() != b.kids().size()) return a.kids().size() < b.kids().size() ? -1 : 1;
  for (std::size_t i = 0; i < a.kids().size(); ++i) {
    int c = compare(a.kids()[i], b.kids()[i]);
    if (c != 0) return c;
  }
  return compare(a.action(), b.action());
}

int compare(Action a, Action b) {
  if (a == b) return 0;
  if (!a.valid() || !b.valid()) return a.valid() ? 1 : -1;
  if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
  if (a.hash() != b.hash()) return a.hash() < b.hash() ? -1 : 1;
  if (a.agents() != b.agents()) return a.agents() < b.agents() ? -1 : 1;
  if (a.kids().size() != b.kids().size()) return a.kids().size() < b.kids().size() ? -1 : 1;
  for (std::size_t i = 0; i < a.kids().size(); ++i) {
    int c = compare(a.kids()[i], b.kids()[i]);
    if (c != 0) return c;
  }
  if (a.test().valid() != b.test().valid()) return a.test().valid() ? 1 : -1;
  return a.test().valid() ? compare(a.test(), b.test()) : 0;
}

Formula top() { return make(Op::Top, "", {}); }
Formula bottom() { return make(Op::Bottom, "", {}); }
Formula atom(std::string_view name) { return make(Op::Atom, name, {}); }
Formula neg(Formula f) { return make(Op::Not, "", {f}); }
Formula conj(Formula a, Formula b) { return make(Op::And, "", {a, b}); }
Formula disj(Formula a, Formula b) { return make(Op::Or, "", {a, b}); }
Formula implies(Formula a, Formula b) { return make(Op::Implies, "", {a, b}); }
Formula iff(Formula a, Formula b) { return make(Op::Iff, "", {a, b}); }
Formula box(std::string_view agent, Formula f) { return make(Op::Box, agent, {f}); }
Formula diamond(std::string_view agent, Formula f) { return make(Op::Diamond, agent, {f}); }

Formula cover(std::string_view agent, std::vector<Formula> members) {
  std::sort(members.begin(), members.end(), FormulaLess());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return make(Op::Cover, agent, std::move(members));
}

Formula dyn_box(Action a, Formula f) { return make(Op::DynBox, "", {f}, a); }
Formula dyn_diamond(Action a, Formula f) { return make(Op::DynDiamond, "", {f}, a); }
Formula ref_box(Formula f) { return make(Op::RefBox, "", {f}); }
Formula ref_diamond(Formula f) { return make(Op::RefDiamond, "", {f}); }

Action test(Formula f) { return make_action(ActOp::Test, {}, {}, f); }
Action choice(Action a, Action b) { return make_action(ActOp::Choice, {}, {a, b}); }
Action compose(Action a, Action b) { return make_action(ActOp::Compose, {}, {a, b}); }

Action learn(AgentSet agents, Action a, Action b) {
  if (agents.empty()) throw InputError("learning requires a non-empty agent set");
  return make_action(ActOp::Learn, std::move(agents), {a, b});
}

Formula mk_not(Formula f) {
  if (f.op() == Op::Top) return bottom();
  if (f.op() == Op::Bottom) return top();
  return neg(f);
}

Formula mk_and(Formula a, Formula b) {
  if (a.op() == Op::Bottom || b.op() == Op::Bottom) return bottom();
  if (a.op() == Op::Top) return b;
  if (b.op() == Op::Top) return a;
  return conj(a, b);
}

Formula mk_or(Formula a, Formula b) {
  if (a.op() == Op::Top || b.op() == Op::Top) return top();
  if (a.op() == Op::Bottom) return b;
  if (b.op() == Op::Bottom) return a;
  return disj(a, b);
}

Formula mk_implies(Formula a, Formula b) {
  if (a.op() == Op::Bottom || b.op() == Op::Top) return top();
  if (a.op() == Op::Top) return b;
  if (b.op() == Op::Bottom) return mk_not(a);
  return implies(a, b);
}

Formula mk_iff(Formula a, Formula b) {
  if (a.op() == Op::Top) return b;
  if (b.op() == Op::Top) return a;
  if (a.op() == Op::Bottom) return mk_not(b);
  if (b.op() == Op::Bottom) return mk_not(a);
  return iff(a, b);
}

Formula mk_box(std::string_view agent, Formula f) {
  if (f.op() == Op::Top) return top();
  return box(agent, f);
}

Formula mk_diamond(std::string_view agent, Formula f) {
  if (f.op() == Op::Bottom) return bottom();
  return diamond(agent, f);
}

Formula conj_all(const std::vector<Formula>& fs) {
  Formula acc = top();
  for (Formula f : fs) acc = mk_and(acc, f);
  return acc;
}

Formula disj_all(const std::vector<Formula>& fs) {
  Formula acc = bottom();
  for (Formula f : fs) acc = mk_or(acc, f);
  return acc;
}

Action choice_all(const std::vector<Action>& as) {
  if (as.empty()) throw InputError("empty choice");
  Action acc = as.front();
  for (std::size_t i = 1; i < as.size(); ++i) acc = choice(acc, as[i]);
  return acc;
}

Action compose_all(const std::vector<Action>& as) {
  if (as.empty()) throw InputError("empty composition");
  Action acc = as.front();
  for (std::size_t i = 1; i < as.size(); ++i) acc = compose(acc, as[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// Lexer and parser

namespace {

enum class Tok {
  End,
  Ident,
  True,
  False,
  Not,
  And,
  Or,
  Imp,
  Iff,
  LBrack,
  RBrack,
  Lt,
  Gt,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Semi,
  Plus,
  Quest,
  AllRef,
  SomeRef,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    int l = line, cl = col;
    auto starts = [&](std::string_view p) { return s.substr(i, p.size()) == p; };
    auto emit = [&](Tok k, std::size_t n) {
      out.push_back({k, std::string(s.substr(i, n)), l, cl});
      advance(n);
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string word(s.substr(i, j - i));
      Tok k = word == "true" ? Tok::True : word == "false" ? Tok::False : Tok::Ident;
      emit(k, j - i);
      continue;
    }
    if (starts("<->")) {
      emit(Tok::Iff, 3);
    } else if (starts("<*>")) {
      emit(Tok::SomeRef, 3);
    } else if (starts("[*]")) {
      emit(Tok::AllRef, 3);
    } else if (starts("->")) {
      emit(Tok::Imp, 2);
    } else {
      switch (c) {
        case '~': emit(Tok::Not, 1); break;
        case '&': emit(Tok::And, 1); break;
        case '|': emit(Tok::Or, 1); break;
        case '[': emit(Tok::LBrack, 1); break;
        case ']': emit(Tok::RBrack, 1); break;
        case '<': emit(Tok::Lt, 1); break;
        case '>': emit(Tok::Gt, 1); break;
        case '(': emit(Tok::LParen, 1); break;
        case ')': emit(Tok::RParen, 1); break;
        case '{': emit(Tok::LBrace, 1); break;
        case '}': emit(Tok::RBrace, 1); break;
        case ',': emit(Tok::Comma, 1); break;
        case ';': emit(Tok::Semi, 1); break;
        case '+': emit(Tok::Plus, 1); break;
        case '?': emit(Tok::Quest, 1); break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
      }
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const AgentSet& agents) : toks_(lex(text)), agents_(agents) {}

  Formula whole_formula() {
    Formula f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

  Action whole_action() {
    Action a = action();
    expect(Tok::End, "end of input");
    return a;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }

  [[noreturn]] void fail(const std::string& msg, const Token& t) const {
    throw ParseError(msg, t.line, t.col);
  }

  Token expect(Tok k, const char* what) {
    if (!at(k)) {
      const Token& t = peek();
      fail(std::string("expected ") + what + (t.kind == Tok::End ? " at end of input" : " near '" + t.text + "'"), t);
    }
    return toks_[pos_++];
  }

  std::string agent_name() {
    Token t = expect(Tok::Ident, "agent name");
    if (!agents_.count(t.text)) fail("unknown agent '" + t.text + "'", t);
    return t.text;
  }

  Formula formula() {
    Formula f = imp();
    while (at(Tok::Iff)) {
      ++pos_;
      f = iff(f, imp());
    }
    return f;
  }

  Formula imp() {
    Formula f = disjunction();
    if (at(Tok::Imp)) {
      ++pos_;
      return implies(f, imp());
    }
    return f;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (at(Tok::Or)) {
      ++pos_;
      f = disj(f, conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (at(Tok::And)) {
      ++pos_;
      f = conj(f, unary());
    }
    return f;
  }

  bool is_cover_start() const {
    return at(Tok::Ident) && peek().text == "Cov" && peek(1).kind == Tok::LBrace;
  }
  bool is_learn_start() const {
    return at(Tok::Ident) && peek().text == "L" && peek(1).kind == Tok::LBrace;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not:
        ++pos_;
        return neg(unary());
      case Tok::True:
        ++pos_;
        return top();
      case Tok::False:
        ++pos_;
        return bottom();
      case Tok::AllRef:
        ++pos_;
        return ref_box(unary());
      case Tok::SomeRef:
        ++pos_;
        return ref_diamond(unary());
      case Tok::LParen: {
        ++pos_;
        Formula f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::LBrack:
      case Tok::Lt:
        return modality();
      case Tok::Ident: {
        if (is_cover_start()) return cover_formula();
        if (is_learn_start()) fail("action where a formula was expected", t);
        ++pos_;
        return atom(t.text);
      }
      default:
        fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'", t);
    }
  }

  Formula modality() {
    const bool is_box = at(Tok::LBrack);
    const Tok close = is_box ? Tok::RBrack : Tok::Gt;
    const char* close_text = is_box ? "']'" : "'>'";
    ++pos_;
    const Token& inner = peek();
    if (inner.kind == Tok::Ident && !is_learn_start()) {
      if (peek(1).kind == close && agents_.count(inner.text)) {
        pos_ += 2;
        Formula body = unary();
        return is_box ? box(inner.text, body) : diamond(inner.text, body);
      }
      fail("'" + inner.text + "' is neither a declared agent nor an action", inner);
    }
    Action a = action();
    expect(close, close_text);
    Formula body = unary();
    return is_box ? dyn_box(a, body) : dyn_diamond(a, body);
  }

  Formula cover_formula() {
    pos_ += 2;  // "Cov" "{"
    std::string a = agent_name();
    expect(Tok::RBrace, "'}'");
    expect(Tok::LParen, "'('");
    std::vector<Formula> members;
    if (!at(Tok::RParen)) {
      members.push_back(formula());
      while (at(Tok::Comma)) {
        ++pos_;
        members.push_back(formula());
      }
    }
    expect(Tok::RParen, "')'");
    return cover(a, std::move(members));
  }

  Action action() {
    Action a = seq();
    while (at(Tok::Plus)) {
      ++pos_;
      a = choice(a, seq());
    }
    return a;
  }

  Action seq() {
    Action a = aatom();
    while (at(Tok::Semi)) {
      ++pos_;
      a = compose(a, aatom());
    }
    return a;
  }

  Action aatom() {
    const Token& t = peek();
    if (t.kind == Tok::Quest) {
      ++pos_;
      return test(unary());
    }
    if (is_learn_start()) {
      pos_ += 2;
      AgentSet b;
      b.insert(agent_name());
      while (at(Tok::Comma)) {
        ++pos_;
        b.insert(agent_name());
      }
      expect(Tok::RBrace, "'}'");
      expect(Tok::LParen, "'('");
      Action first = action();
      Action second = first;
      if (at(Tok::Comma)) {
        ++pos_;
        second = action();
      }
      expect(Tok::RParen, "')'");
      return learn(std::move(b), first, second);
    }
    if (t.kind == Tok::LParen) {
      ++pos_;
      Action a = action();
      expect(Tok::RParen, "')'");
      return a;
    }
    fail(t.kind == Tok::End ? "unexpected end of input in action" : "expected an action near '" + t.text + "'", t);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const AgentSet& agents_;
};

// Printer precedence levels: 1 iff, 2 implies, 3 or, 4 and, 5 unary.
int level(Formula f) {
  switch (f.op()) {
    case Op::Iff: return 1;
    case Op::Implies: return 2;
    case Op::Or: return 3;
    case Op::And: return 4;
    default: return 5;
  }
}

void print_f(Formula f, int need, std::string& out);
void print_a(Action a, int need, std::string& out);

void print_f(Formula f, int need, std::string& out) {
  const bool paren = level(f) < need;
  if (paren) out += '(';
  switch (f.op()) {
    case Op::Top: out += "true"; break;
    case Op::Bottom: out += "false"; break;
    case Op::Atom: out += f.name(); break;
    case Op::Not:
      out += '~';
      print_f(f.kid(), 5, out);
      break;
    case Op::And:
      print_f(f.kid(0), 4, out);
      out += " & ";
      print_f(f.kid(1), 5, out);
      break;
    case Op::Or:
      print_f(f.kid(0), 3, out);
      out += " | ";
      print_f(f.kid(1), 4, out);
      break;
    case Op::Implies:
      print_f(f.kid(0), 3, out);
      out += " -> ";
      print_f(f.kid(1), 2, out);
      break;
    case Op::Iff:
      print_f(f.kid(0), 1, out);
      out += " <-> ";
      print_f(f.kid(1), 2, out);
      break;
    case Op::Box:
    case Op::Diamond:
      out += f.op() == Op::Box ? "[" : "<";
      out += f.name();
      out += f.op() == Op::Box ? "] " : "> ";
      print_f(f.kid(), 5, out);
      break;
    case Op::Cover: {
      out += "Cov{" + f.name() + "}(";
      for (std::size_t i = 0; i < f.kids().size(); ++i) {
        if (i) out += ", ";
        print_f(f.kids()[i], 1, out);
      }
      out += ')';
      break;
    }
    case Op::DynBox:
    case Op::DynDiamond:
      out += f.op() == Op::DynBox ? "[" : "<";
      print_a(f.action(), 1, out);
      out += f.op() == Op::DynBox ? "] " : "> ";
      print_f(f.kid(), 5, out);
      break;
    case Op::RefBox:
      out += "[*] ";
      print_f(f.kid(), 5, out);
      break;
    case Op::RefDiamond:
      out += "<*> ";
      print_f(f.kid(), 5, out);
      break;
  }
  if (paren) out += ')';
}

int action_level(Action a) {
  switch (a.op()) {
    case ActOp::Choice: return 1;
    case ActOp::Compose: return 2;
    default: return 3;
  }
}

void print_a(Action a, int need, std::string& out) {
  const bool paren = action_level(a) < need;
  if (paren) out += '(';
  switch (a.op()) {
    case ActOp::Test:
      out += '?';
      print_f(a.test(), 5, out);
      break;
    case ActOp::Choice:
      print_a(a.kid(0), 1, out);
      out += " + ";
      print_a(a.kid(1), 2, out);
      break;
    case ActOp::Compose:
      print_a(a.kid(0), 2, out);
      out += " ; ";
      print_a(a.kid(1), 3, out);
      break;
    case ActOp::Learn: {
      out += "L{";
      bool first = true;
      for (const auto& b : a.agents()) {
        if (!first) out += ',';
        out += b;
        first = false;
      }
      out += "}(";
      print_a(a.kid(0), 1, out);
      if (a.kid(1) != a.kid(0)) {
        out += ", ";
        print_a(a.kid(1), 1, out);
      }
      out += ')';
      break;
    }
  }
  if (paren) out += ')';
}

}  // namespace

Formula parse_formula(std::string_view text, const AgentSet& agents) {
  return Parser(text, agents).whole_formula();
}

Action parse_action(std::string_view text, const AgentSet& agents) {
  return Parser(text, agents).whole_action();
}

std::string print_formula(Formula f) {
  std::string out;
  print_f(f, 1, out);
  return out;
}

std::string print_action(Action a) {
  std::string out;
  print_a(a, 1, out);
  return out;
}

// ---------------------------------------------------------------------------
// Measures

bool is_basic(Formula f) {
  switch (f.op()) {
    case Op::DynBox:
    case Op::DynDiamond:
    case Op::RefBox:
    case Op::RefDiamond:
      return false;
    default:
      for (Formula k : f.kids())
        if (!is_basic(k)) return false;
      return true;
  }
}

bool is_propositional(Formula f) {
  switch (f.op()) {
    case Op::Box:
    case Op::Diamond:
    case Op::Cover:
    case Op::DynBox:
    case Op::DynDiamond:
    case Op::RefBox:
    case Op::RefDiamond:
      return false;
    default:
      for (Formula k : f.kids())
        if (!is_propositional(k)) return false;
      return true;
  }
}

bool is_basic(Action a) {
  if (a.op() == ActOp::Test) return is_basic(a.test());
  for (Action k : a.kids())
    if (!is_basic(k)) return false;
  return true;
}

int modal_depth(Formula f) {
  switch (f.op()) {
    case Op::Top:
    case Op::Bottom:
    case Op::Atom:
      return 0;
    case Op::Box:
    case Op::Diamond:
      return 1 + modal_depth(f.kid());
    case Op::Cover: {
      int d = 0;
      for (Formula k : f.kids()) d = std::max(d, modal_depth(k));
      return 1 + d;
    }
    case Op::DynBox:
    case Op::DynDiamond:
    case Op::RefBox:
    case Op::RefDiamond:
      throw InputError("modal depth is only defined for basic formulae");
    default: {
      int d = 0;
      for (Formula k : f.kids()) d = std::max(d, modal_depth(k));
      return d;
    }
  }
}

Formula expand_cover(std::string_view agent, const std::vector<Formula>& gamma) {
  if (gamma.empty()) return box(agent, bottom());
  Formula any = gamma.front();
  for (std::size_t i = 1; i < gamma.size(); ++i) any = disj(any, gamma[i]);
  Formula out = box(agent, any);
  for (Formula g : gamma) out = conj(out, diamond(agent, g));
  return out;
}

bool is_b_restricted(Formula f, const AgentSet& b) {
  switch (f.op()) {
    case Op::Top:
    case Op::Bottom:
    case Op::Atom:
      return true;
    case Op::Box:
    case Op::Diamond:
    case Op::Cover:
      if (!is_basic(f)) throw InputError("B-restriction is only defined for basic formulae");
      return b.count(f.name()) > 0;
    case Op::DynBox:
    case Op::DynDiamond:
    case Op::RefBox:
    case Op::RefDiamond:
      throw InputError("B-restriction is only defined for basic formulae");
    default:
      for (Formula k : f.kids())
        if (!is_b_restricted(k, b)) return false;
      return true;
  }
}

namespace {
void collect_sub(Formula f, FormulaSet& out) {
  if (!out.insert(f).second) return;
  for (Formula k : f.kids()) collect_sub(k, out);
}
}  // namespace

FormulaSet subformulae(Formula f) {
  if (!is_basic(f)) throw InputError("subformulae is only defined for basic formulae");
  FormulaSet out;
  collect_sub(f, out);
  return out;
}

namespace {
void collect_atoms(Formula f, std::set<std::string>& out);
void collect_atoms(Action a, std::set<std::string>& out) {
  if (a.op() == ActOp::Test) {
    collect_atoms(a.test(), out);
    return;
  }
  for (Action k : a.kids()) collect_atoms(k, out);
}
void collect_atoms(Formula f, std::set<std::string>& out) {
  if (f.op() == Op::Atom) out.insert(f.name());
  for (Formula k : f.kids()) collect_atoms(k, out);
  if (f.action().valid()) collect_atoms(f.action(), out);
}
void collect_agents(Formula f, AgentSet& out);
void collect_agents(Action a, AgentSet& out) {
  out.insert(a.agents().begin(), a.agents().end());
  if (a.op() == ActOp::Test) collect_agents(a.test(), out);
  for (Action k : a.kids()) collect_agents(k, out);
}
void collect_agents(Formula f, AgentSet& out) {
  if (f.op() == Op::Box || f.op() == Op::Diamond || f.op() == Op::Cover) out.insert(f.name());
  for (Formula k : f.kids()) collect_agents(k, out);
  if (f.action().valid()) collect_agents(f.action(), out);
}
}  // namespace

std::set<std::string> atoms_of(Formula f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}
std::set<std::string> atoms_of(Action a) {
  std::set<std::string> out;
  collect_atoms(a, out);
  return out;
}
AgentSet agents_of(Formula f) {
  AgentSet out;
  collect_agents(f, out);
  return out;
}
AgentSet agents_of(Action a) {
  AgentSet out;
  collect_agents(a, out);
  return out;
}

std::size_t size(Formula f) {
  std::size_t n = 1;
  for (Formula k : f.kids()) n += size(k);
  return n;
}

Formula to_core(Formula f) {
  std::unordered_map<const FormulaNode*, Formula> memo;
  std::function<Formula(Formula)> go = [&](Formula g) -> Formula {
    auto it = memo.find(g.node());
    if (it != memo.end()) return it->second;
    Formula r;
    switch (g.op()) {
      case Op::Top:
      case Op::Bottom:
      case Op::Atom:
        r = g;
        break;
      case Op::Not: r = neg(go(g.kid())); break;
      case Op::And: r = conj(go(g.kid(0)), go(g.kid(1))); break;
      case Op::Or: r = neg(conj(neg(go(g.kid(0))), neg(go(g.kid(1))))); break;
      case Op::Implies: r = neg(conj(go(g.kid(0)), neg(go(g.kid(1))))); break;
      case Op::Iff: {
        Formula a = go(g.kid(0)), b = go(g.kid(1));
        r = conj(neg(conj(a, neg(b))), neg(conj(b, neg(a))));
        break;
      }
      case Op::Box: r = box(g.name(), go(g.kid())); break;
      case Op::Diamond: r = neg(box(g.name(), neg(go(g.kid())))); break;
      case Op::Cover: r = go(expand_cover(g.name(), g.kids())); break;
      default:
        throw InputError("to_core expects a basic formula");
    }
    memo.emplace(g.node(), r);
    return r;
  };
  return go(f);
}

ParseError::ParseError(const std::string& msg, int line, int column)
    : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

std::string to_string(FrameClass c) {
  switch (c) {
    case FrameClass::K: return "k";
    case FrameClass::K45: return "k45";
    case FrameClass::S5: return "s5";
  }
  return "?";
}

FrameClass parse_frame_class(std::string_view text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "k") return FrameClass::K;
  if (t == "k45") return FrameClass::K45;
  if (t == "s5") return FrameClass::S5;
  throw InputError("unknown frame class '" + std::string(text) + "' (expected k, k45 or s5)");
}

}  // namespace aafl
