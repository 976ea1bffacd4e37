#include "corelate/diagram.hpp"

#include <array>
#include <cctype>

namespace corelate {

namespace {

struct SigEntry {
  std::string_view name;
  Arity arity;
  bool scalar;
};

constexpr std::array<SigEntry, 8> kSignature{{
    {"unit", {0, 1}, false},
    {"counit", {1, 0}, false},
    {"mult", {2, 1}, false},
    {"comult", {1, 2}, false},
    {"scalar", {1, 1}, true},
    {"coscalar", {1, 1}, true},
    {"undef", {1, 0}, false},
    {"coundef", {0, 1}, false},
}};

const SigEntry* lookup(std::string_view name) {
  for (const auto& e : kSignature) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  TermPtr run() {
    TermPtr t = term();
    ws();
    if (i_ != s_.size()) throw SyntaxError(i_, "unexpected '" + std::string(1, s_[i_]) + "'");
    return t;
  }

 private:
  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(char c) {
    ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      throw SyntaxError(i_, std::string("expected '") + c + "'" +
                                (i_ < s_.size() ? std::string(", found '") + s_[i_] + "'" : std::string(" at end")));
    }
  }
  std::string ident() {
    ws();
    std::size_t b = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    if (b == i_) {
      throw SyntaxError(i_, i_ < s_.size() ? "unexpected '" + std::string(1, s_[i_]) + "'" : "unexpected end of input");
    }
    return std::string(s_.substr(b, i_ - b));
  }
  std::size_t nat() {
    ws();
    std::size_t b = i_;
    std::size_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + static_cast<std::size_t>(s_[i_] - '0');
      if (v > 10'000) throw SyntaxError(b, "object too large");
      ++i_;
    }
    if (b == i_) throw SyntaxError(i_, "expected a natural number");
    return v;
  }
  std::string scalar_literal() {
    ws();
    std::size_t b = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (digits == i_) throw SyntaxError(i_, "expected a scalar literal");
    if (i_ < s_.size() && s_[i_] == '/') {
      ++i_;
      std::size_t d = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (d == i_) throw SyntaxError(i_, "expected a denominator");
    }
    return std::string(s_.substr(b, i_ - b));
  }

  TermPtr term() {
    TermPtr t = tens();
    while (true) {
      ws();
      std::size_t at = i_;
      if (!accept(';')) return t;
      TermPtr r = tens();
      if (t->cod != r->dom) {
        throw Error(ErrorKind::TypeError, "at " + std::to_string(at) + ": cannot compose " + arity(*t) + " with " +
                                              arity(*r) + " (" + std::to_string(t->cod) + " vs " +
                                              std::to_string(r->dom) + ")");
      }
      t = make_seq(t, r);
    }
  }
  TermPtr tens() {
    TermPtr t = atom();
    while (accept('@')) t = make_tensor(t, atom());
    return t;
  }
  TermPtr atom() {
    if (accept('(')) {
      TermPtr t = term();
      expect(')');
      return t;
    }
    ws();
    std::size_t at = i_;
    std::string word = ident();
    if (word == "id") {
      expect('(');
      std::size_t n = nat();
      expect(')');
      return make_id(n);
    }
    if (word == "sym") {
      expect('(');
      std::size_t n = nat();
      expect(',');
      std::size_t m = nat();
      expect(')');
      return make_sym(n, m);
    }
    std::string color;
    if (accept('.')) {
      if (word != "w" && word != "b") throw SyntaxError(at, "unknown color '" + word + "'");
      color = word;
      at = i_;
      word = ident();
    }
    const SigEntry* sig = lookup(word);
    if (!sig) fail(ErrorKind::UnknownGenerator, "'" + word + "' at " + std::to_string(at));
    std::optional<std::string> scalar;
    if (sig->scalar) {
      expect('(');
      scalar = scalar_literal();
      expect(')');
    }
    return make_gen(color, word, scalar);
  }

  static std::string arity(const Term& t) { return std::to_string(t.dom) + " -> " + std::to_string(t.cod); }

  std::string_view s_;
  std::size_t i_ = 0;
};

enum class Ctx { Top, SeqRight, TensorOperand, TensorRight };

std::string print(const Term& t, Ctx ctx) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, IdNode>) {
          return "id(" + std::to_string(n.n) + ")";
        } else if constexpr (std::is_same_v<N, SymNode>) {
          return "sym(" + std::to_string(n.n) + "," + std::to_string(n.m) + ")";
        } else if constexpr (std::is_same_v<N, GenNode>) {
          std::string s = n.color.empty() ? n.name : n.color + "." + n.name;
          if (n.scalar) s += "(" + *n.scalar + ")";
          return s;
        } else if constexpr (std::is_same_v<N, SeqNode>) {
          std::string s = print(*n.first, Ctx::Top) + " ; " + print(*n.second, Ctx::SeqRight);
          return ctx == Ctx::Top ? s : "(" + s + ")";
        } else {
          std::string s = print(*n.left, Ctx::TensorOperand) + " @ " + print(*n.right, Ctx::TensorRight);
          return ctx == Ctx::TensorRight ? "(" + s + ")" : s;
        }
      },
      t.node);
}

}  // namespace

std::optional<Arity> generator_arity(std::string_view name) {
  const SigEntry* e = lookup(name);
  if (!e) return std::nullopt;
  return e->arity;
}

bool generator_takes_scalar(std::string_view name) {
  const SigEntry* e = lookup(name);
  return e && e->scalar;
}

TermPtr parse_term(std::string_view src) { return Parser(src).run(); }

std::string print_term(const Term& t) { return print(t, Ctx::Top); }

bool same_ast(const Term& a, const Term& b) {
  if (a.node.index() != b.node.index() || a.dom != b.dom || a.cod != b.cod) return false;
  return std::visit(
      [&](const auto& n) -> bool {
        using N = std::decay_t<decltype(n)>;
        const N& o = std::get<N>(b.node);
        if constexpr (std::is_same_v<N, IdNode>) {
          return n.n == o.n;
        } else if constexpr (std::is_same_v<N, SymNode>) {
          return n.n == o.n && n.m == o.m;
        } else if constexpr (std::is_same_v<N, GenNode>) {
          return n.color == o.color && n.name == o.name && n.scalar == o.scalar;
        } else if constexpr (std::is_same_v<N, SeqNode>) {
          return same_ast(*n.first, *o.first) && same_ast(*n.second, *o.second);
        } else {
          return same_ast(*n.left, *o.left) && same_ast(*n.right, *o.right);
        }
      },
      a.node);
}

TermPtr make_id(std::size_t n) { return std::make_shared<Term>(Term{IdNode{n}, n, n}); }

TermPtr make_sym(std::size_t n, std::size_t m) { return std::make_shared<Term>(Term{SymNode{n, m}, n + m, n + m}); }

TermPtr make_gen(std::string color, std::string name, std::optional<std::string> scalar) {
  auto a = generator_arity(name);
  if (!a) fail(ErrorKind::UnknownGenerator, "'" + name + "'");
  return std::make_shared<Term>(Term{GenNode{std::move(color), std::move(name), std::move(scalar)}, a->dom, a->cod});
}

TermPtr make_seq(TermPtr a, TermPtr b) {
  if (a->cod != b->dom) {
    fail(ErrorKind::TypeError, "cannot compose " + std::to_string(a->dom) + " -> " + std::to_string(a->cod) +
                                   " with " + std::to_string(b->dom) + " -> " + std::to_string(b->cod) + " (" +
                                   std::to_string(a->cod) + " vs " + std::to_string(b->dom) + ")");
  }
  std::size_t d = a->dom, c = b->cod;
  return std::make_shared<Term>(Term{SeqNode{std::move(a), std::move(b)}, d, c});
}

TermPtr make_tensor(TermPtr a, TermPtr b) {
  std::size_t d = a->dom + b->dom, c = a->cod + b->cod;
  return std::make_shared<Term>(Term{TensorNode{std::move(a), std::move(b)}, d, c});
}

}  // namespace corelate
