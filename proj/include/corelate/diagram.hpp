#pragma once

// String-diagram terms:
//   term ::= tens (";" tens)*
//   tens ::= atom ("@" atom)*
//   atom ::= "id(" nat ")" | "sym(" nat "," nat ")"
//          | [("w" | "b") "."] name ["(" scalar ")"] | "(" term ")"
// ";" is diagrammatic (left to right) composition, "@" the monoidal product.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "corelate/error.hpp"

namespace corelate {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct IdNode {
  std::size_t n;
};
struct SymNode {
  std::size_t n, m;
};
struct GenNode {
  std::string color;  // "", "w" or "b"
  std::string name;
  std::optional<std::string> scalar;
};
struct SeqNode {
  TermPtr first, second;
};
struct TensorNode {
  TermPtr left, right;
};

struct Term {
  std::variant<IdNode, SymNode, GenNode, SeqNode, TensorNode> node;
  std::size_t dom;
  std::size_t cod;
};

struct Arity {
  std::size_t dom, cod;
};

/// Arity of a generator name in the fixed signature, if it is one.
std::optional<Arity> generator_arity(std::string_view name);
/// Whether the generator takes a scalar argument.
bool generator_takes_scalar(std::string_view name);

/// SyntaxError (with position), TypeError on mismatched arities,
/// UnknownGenerator on names outside the signature.
TermPtr parse_term(std::string_view src);
/// Rendering that reparses to the same tree.
std::string print_term(const Term& t);
bool same_ast(const Term& a, const Term& b);

TermPtr make_id(std::size_t n);
TermPtr make_sym(std::size_t n, std::size_t m);
TermPtr make_gen(std::string color, std::string name, std::optional<std::string> scalar = std::nullopt);
/// TypeError when a.cod != b.dom.
TermPtr make_seq(TermPtr a, TermPtr b);
TermPtr make_tensor(TermPtr a, TermPtr b);

// A semantic prop P supplies Value, identity, symmetry, compose, tensor,
// generator (raising UnknownGenerator for unbound names), equal and format.
template <class P>
typename P::Value eval_term(const P& prop, const Term& t) {
  return std::visit(
      [&](const auto& n) -> typename P::Value {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, IdNode>) {
          return prop.identity(n.n);
        } else if constexpr (std::is_same_v<N, SymNode>) {
          return prop.symmetry(n.n, n.m);
        } else if constexpr (std::is_same_v<N, GenNode>) {
          return prop.generator(n);
        } else if constexpr (std::is_same_v<N, SeqNode>) {
          return prop.compose(eval_term(prop, *n.first), eval_term(prop, *n.second));
        } else {
          return prop.tensor(eval_term(prop, *n.left), eval_term(prop, *n.right));
        }
      },
      t.node);
}

/// TypeMismatch unless the two terms have the same type.
template <class P>
bool term_equal(const P& prop, const Term& a, const Term& b) {
  if (a.dom != b.dom || a.cod != b.cod) {
    fail(ErrorKind::TypeMismatch, "terms of type " + std::to_string(a.dom) + " -> " + std::to_string(a.cod) +
                                      " and " + std::to_string(b.dom) + " -> " + std::to_string(b.cod));
  }
  return prop.equal(eval_term(prop, a), eval_term(prop, b));
}

}  // namespace corelate
