#include "settop/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace settop {

namespace {

FormulaPtr make(FormulaKind k) {
  auto f = std::make_shared<Formula>();
  const_cast<Formula&>(*f).kind = k;
  return f;
}

Formula& mut(FormulaPtr& p) { return const_cast<Formula&>(*p); }

void check_var(int v) {
  if (v < 1) throw std::invalid_argument("formula: variable index must be positive");
}

}  // namespace

FormulaPtr Formula::member(int i, int j) {
  check_var(i);
  check_var(j);
  auto f = make(FormulaKind::Member);
  mut(f).lhs = i;
  mut(f).rhs = j;
  return f;
}

FormulaPtr Formula::equal(int i, int j) {
  check_var(i);
  check_var(j);
  auto f = make(FormulaKind::Equal);
  mut(f).lhs = i;
  mut(f).rhs = j;
  return f;
}

FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
  auto f = make(FormulaKind::And);
  mut(f).left = std::move(a);
  mut(f).right = std::move(b);
  return f;
}

FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) {
  auto f = make(FormulaKind::Or);
  mut(f).left = std::move(a);
  mut(f).right = std::move(b);
  return f;
}

FormulaPtr Formula::exists_in(int bound, int range, FormulaPtr body) {
  check_var(bound);
  check_var(range);
  if (bound == range) throw std::invalid_argument("formula: bound variable equals its range");
  auto f = make(FormulaKind::ExistsIn);
  mut(f).bound = bound;
  mut(f).rhs = range;
  mut(f).left = std::move(body);
  return f;
}

FormulaPtr Formula::forall_in(int bound, int range, FormulaPtr body) {
  check_var(bound);
  check_var(range);
  if (bound == range) throw std::invalid_argument("formula: bound variable equals its range");
  auto f = make(FormulaKind::ForallIn);
  mut(f).bound = bound;
  mut(f).rhs = range;
  mut(f).left = std::move(body);
  return f;
}

FormulaPtr Formula::forall_param(int bound, int param, FormulaPtr body) {
  check_var(bound);
  if (param < 1) throw std::invalid_argument("formula: class parameter index must be positive");
  auto f = make(FormulaKind::ForallParam);
  mut(f).bound = bound;
  mut(f).param = param;
  mut(f).left = std::move(body);
  return f;
}

int Formula::size() const {
  switch (kind) {
    case FormulaKind::Member:
    case FormulaKind::Equal:
      return 3;
    case FormulaKind::And:
    case FormulaKind::Or:
      return 1 + left->size() + right->size();
    default:
      return 3 + left->size();
  }
}

bool Formula::is_bpf() const {
  switch (kind) {
    case FormulaKind::Member:
    case FormulaKind::Equal:
      return true;
    case FormulaKind::And:
    case FormulaKind::Or:
      return left->is_bpf() && right->is_bpf();
    case FormulaKind::ForallParam:
      return false;
    default:
      return left->is_bpf();
  }
}

int Formula::max_variable() const {
  switch (kind) {
    case FormulaKind::Member:
    case FormulaKind::Equal:
      return std::max(lhs, rhs);
    case FormulaKind::And:
    case FormulaKind::Or:
      return std::max(left->max_variable(), right->max_variable());
    case FormulaKind::ForallParam:
      return std::max(bound, left->max_variable());
    default:
      return std::max({bound, rhs, left->max_variable()});
  }
}

int Formula::max_param() const {
  switch (kind) {
    case FormulaKind::Member:
    case FormulaKind::Equal:
      return 0;
    case FormulaKind::And:
    case FormulaKind::Or:
      return std::max(left->max_param(), right->max_param());
    case FormulaKind::ForallParam:
      return std::max(param, left->max_param());
    default:
      return left->max_param();
  }
}

bool Formula::uses_variable(int v) const {
  switch (kind) {
    case FormulaKind::Member:
    case FormulaKind::Equal:
      return lhs == v || rhs == v;
    case FormulaKind::And:
    case FormulaKind::Or:
      return left->uses_variable(v) || right->uses_variable(v);
    case FormulaKind::ForallParam:
      return left->uses_variable(v);
    default:
      return rhs == v || left->uses_variable(v);
  }
}

bool Formula::equals(const Formula& o) const {
  if (kind != o.kind || lhs != o.lhs || rhs != o.rhs || bound != o.bound || param != o.param)
    return false;
  if ((left == nullptr) != (o.left == nullptr)) return false;
  if ((right == nullptr) != (o.right == nullptr)) return false;
  if (left && !left->equals(*o.left)) return false;
  if (right && !right->equals(*o.right)) return false;
  return true;
}

std::string Formula::to_string() const {
  switch (kind) {
    case FormulaKind::Member:
      return "(in x" + std::to_string(lhs) + " x" + std::to_string(rhs) + ")";
    case FormulaKind::Equal:
      return "(= x" + std::to_string(lhs) + " x" + std::to_string(rhs) + ")";
    case FormulaKind::And:
      return "(and " + left->to_string() + " " + right->to_string() + ")";
    case FormulaKind::Or:
      return "(or " + left->to_string() + " " + right->to_string() + ")";
    case FormulaKind::ExistsIn:
      return "(some x" + std::to_string(bound) + " x" + std::to_string(rhs) + " " +
             left->to_string() + ")";
    case FormulaKind::ForallIn:
      return "(all x" + std::to_string(bound) + " x" + std::to_string(rhs) + " " +
             left->to_string() + ")";
    case FormulaKind::ForallParam:
      return "(allp x" + std::to_string(bound) + " B" + std::to_string(param) + " " +
             left->to_string() + ")";
  }
  return "";
}

namespace {

struct Token {
  enum Kind { LParen, RParen, Symbol, End } kind;
  std::string text;
  std::size_t pos;
};

// Bound variables are parsed to placeholder indices above this base, then
// renumbered to sit directly above the largest free variable.
constexpr int kBoundBase = 1 << 20;

struct FormulaParser {
  const std::string& text;
  std::size_t pos = 0;
  std::map<std::string, int> scope;  // bound variable names -> placeholders
  int next_placeholder = kBoundBase;
  int max_free = 0;

  explicit FormulaParser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(std::size_t at, const std::string& why) const {
    throw std::invalid_argument("formula parse error at " + std::to_string(at) + ": " + why);
  }

  Token next_token() {
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      } else if (text[pos] == ';') {  // comment to end of line
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
    if (pos >= text.size()) return {Token::End, "", pos};
    const std::size_t at = pos;
    const char c = text[pos];
    if (c == '(') {
      ++pos;
      return {Token::LParen, "(", at};
    }
    if (c == ')') {
      ++pos;
      return {Token::RParen, ")", at};
    }
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')' && text[pos] != ';')
      ++pos;
    return {Token::Symbol, text.substr(start, pos - start), at};
  }

  Token expect(Token::Kind k, const std::string& what) {
    Token t = next_token();
    if (t.kind != k) fail(t.pos, "expected " + what);
    return t;
  }

  int resolve_variable(const Token& t) {
    auto it = scope.find(t.text);
    if (it != scope.end()) return it->second;
    if (t.text.size() < 2 || t.text[0] != 'x') fail(t.pos, "expected a variable like x1");
    for (std::size_t i = 1; i < t.text.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t.text[i])))
        fail(t.pos, "expected a variable like x1");
    const long idx = std::stol(t.text.substr(1));
    if (idx < 1 || idx >= kBoundBase) fail(t.pos, "free variable index out of range");
    max_free = std::max(max_free, static_cast<int>(idx));
    return static_cast<int>(idx);
  }

  int class_param(const Token& t) {
    if (t.text.size() < 2 || t.text[0] != 'B') fail(t.pos, "expected a class parameter like B1");
    for (std::size_t i = 1; i < t.text.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t.text[i])))
        fail(t.pos, "expected a class parameter like B1");
    const int idx = std::stoi(t.text.substr(1));
    if (idx < 1) fail(t.pos, "class parameter index must be positive");
    return idx;
  }

  FormulaPtr parse_expr() {
    expect(Token::LParen, "'('");
    Token head = expect(Token::Symbol, "an operator");
    FormulaPtr out;
    if (head.text == "in" || head.text == "=") {
      Token a = expect(Token::Symbol, "a variable");
      Token b = expect(Token::Symbol, "a variable");
      const int i = resolve_variable(a), j = resolve_variable(b);
      out = head.text == "in" ? Formula::member(i, j) : Formula::equal(i, j);
    } else if (head.text == "and" || head.text == "or") {
      FormulaPtr l = parse_expr();
      FormulaPtr r = parse_expr();
      out = head.text == "and" ? Formula::conj(l, r) : Formula::disj(l, r);
    } else if (head.text == "some" || head.text == "all") {
      Token var = expect(Token::Symbol, "a bound variable");
      Token range = expect(Token::Symbol, "a range variable");
      if (scope.count(var.text)) fail(var.pos, "bound variable shadows another");
      const int range_idx = resolve_variable(range);
      const int bound_idx = next_placeholder++;
      scope[var.text] = bound_idx;
      FormulaPtr body = parse_expr();
      scope.erase(var.text);
      out = head.text == "some" ? Formula::exists_in(bound_idx, range_idx, body)
                                : Formula::forall_in(bound_idx, range_idx, body);
    } else if (head.text == "allp") {
      Token var = expect(Token::Symbol, "a bound variable");
      Token param = expect(Token::Symbol, "a class parameter");
      if (scope.count(var.text)) fail(var.pos, "bound variable shadows another");
      const int param_idx = class_param(param);
      const int bound_idx = next_placeholder++;
      scope[var.text] = bound_idx;
      FormulaPtr body = parse_expr();
      scope.erase(var.text);
      out = Formula::forall_param(bound_idx, param_idx, body);
    } else {
      fail(head.pos, "unknown head: " + head.text);
    }
    expect(Token::RParen, "')'");
    return out;
  }
};

FormulaPtr renumber_bound(const FormulaPtr& f, const std::map<int, int>& remap) {
  auto lookup = [&](int v) {
    auto it = remap.find(v);
    return it == remap.end() ? v : it->second;
  };
  switch (f->kind) {
    case FormulaKind::Member:
      return Formula::member(lookup(f->lhs), lookup(f->rhs));
    case FormulaKind::Equal:
      return Formula::equal(lookup(f->lhs), lookup(f->rhs));
    case FormulaKind::And:
      return Formula::conj(renumber_bound(f->left, remap), renumber_bound(f->right, remap));
    case FormulaKind::Or:
      return Formula::disj(renumber_bound(f->left, remap), renumber_bound(f->right, remap));
    case FormulaKind::ExistsIn:
      return Formula::exists_in(lookup(f->bound), lookup(f->rhs),
                                renumber_bound(f->left, remap));
    case FormulaKind::ForallIn:
      return Formula::forall_in(lookup(f->bound), lookup(f->rhs),
                                renumber_bound(f->left, remap));
    case FormulaKind::ForallParam:
      return Formula::forall_param(lookup(f->bound), f->param,
                                   renumber_bound(f->left, remap));
  }
  return nullptr;
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  FormulaParser p(text);
  FormulaPtr raw = p.parse_expr();
  Token t = p.next_token();
  if (t.kind != Token::End) p.fail(t.pos, "trailing input");
  std::map<int, int> remap;
  for (int ph = kBoundBase; ph < p.next_placeholder; ++ph)
    remap[ph] = p.max_free + 1 + (ph - kBoundBase);
  return renumber_bound(raw, remap);
}

bool eval_formula(const Formula& f, std::vector<HfObject>& env, const Universe& u) {
  auto var = [&](int i) -> const HfObject& {
    if (i < 1 || static_cast<std::size_t>(i) > env.size())
      throw std::invalid_argument("eval_formula: unassigned variable x" + std::to_string(i));
    return env[static_cast<std::size_t>(i) - 1];
  };
  switch (f.kind) {
    case FormulaKind::Member:
      return var(f.rhs).contains(var(f.lhs));
    case FormulaKind::Equal:
      return var(f.lhs) == var(f.rhs);
    case FormulaKind::And:
      return eval_formula(*f.left, env, u) && eval_formula(*f.right, env, u);
    case FormulaKind::Or:
      return eval_formula(*f.left, env, u) || eval_formula(*f.right, env, u);
    case FormulaKind::ExistsIn: {
      const HfObject range = var(f.rhs);
      if (static_cast<std::size_t>(f.bound) > env.size())
        env.resize(static_cast<std::size_t>(f.bound), HfObject::empty_set());
      for (const auto& e : range.elements()) {
        env[static_cast<std::size_t>(f.bound) - 1] = e;
        if (eval_formula(*f.left, env, u)) return true;
      }
      return false;
    }
    case FormulaKind::ForallIn: {
      const HfObject range = var(f.rhs);
      if (static_cast<std::size_t>(f.bound) > env.size())
        env.resize(static_cast<std::size_t>(f.bound), HfObject::empty_set());
      for (const auto& e : range.elements()) {
        env[static_cast<std::size_t>(f.bound) - 1] = e;
        if (!eval_formula(*f.left, env, u)) return false;
      }
      return true;
    }
    case FormulaKind::ForallParam: {
      if (f.param < 1 || static_cast<std::size_t>(f.param) > u.classes.size())
        throw std::invalid_argument("eval_formula: missing class parameter B" +
                                    std::to_string(f.param));
      if (static_cast<std::size_t>(f.bound) > env.size())
        env.resize(static_cast<std::size_t>(f.bound), HfObject::empty_set());
      for (const auto& e : u.classes[static_cast<std::size_t>(f.param) - 1]) {
        env[static_cast<std::size_t>(f.bound) - 1] = e;
        if (!eval_formula(*f.left, env, u)) return false;
      }
      return true;
    }
  }
  return false;
}

bool eval_formula(const FormulaPtr& f, const std::vector<HfObject>& assignment,
                  const Universe& u) {
  std::vector<HfObject> env = assignment;
  return eval_formula(*f, env, u);
}

namespace {

// visible = indices 1..visible are in scope; the next binder takes
// visible+1.
void gen_formulas(int size, int visible, int max_params,
                  std::vector<FormulaPtr>& out) {
  if (size == 3) {
    for (int i = 1; i <= visible; ++i)
      for (int j = 1; j <= visible; ++j) {
        out.push_back(Formula::member(i, j));
        out.push_back(Formula::equal(i, j));
      }
    return;
  }
  if (size < 3) return;
  // binary connectives
  for (int s1 = 3; s1 <= size - 1 - 3; ++s1) {
    const int s2 = size - 1 - s1;
    std::vector<FormulaPtr> lefts, rights;
    gen_formulas(s1, visible, max_params, lefts);
    gen_formulas(s2, visible, max_params, rights);
    for (const auto& l : lefts)
      for (const auto& r : rights) {
        out.push_back(Formula::conj(l, r));
        out.push_back(Formula::disj(l, r));
      }
  }
  // quantifiers
  std::vector<FormulaPtr> bodies;
  gen_formulas(size - 3, visible + 1, max_params, bodies);
  for (const auto& body : bodies) {
    for (int j = 1; j <= visible; ++j) {
      out.push_back(Formula::exists_in(visible + 1, j, body));
      out.push_back(Formula::forall_in(visible + 1, j, body));
    }
    for (int p = 1; p <= max_params; ++p)
      out.push_back(Formula::forall_param(visible + 1, p, body));
  }
}

}  // namespace

std::vector<FormulaPtr> enumerate_positive_formulas(int max_size, int free_vars,
                                                    int max_params) {
  if (free_vars < 1) throw std::invalid_argument("enumerate_positive_formulas: need a variable");
  std::vector<FormulaPtr> out;
  for (int s = 3; s <= max_size; ++s) gen_formulas(s, free_vars, max_params, out);
  return out;
}

}  // namespace settop
