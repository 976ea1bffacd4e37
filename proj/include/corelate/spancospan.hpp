#pragma once

// Span(A) and Cospan(C) over an arbitrary ambient prop. Pullbacks are always
// taken in the ambient, never in A itself.

#include <string>

#include "corelate/ambient.hpp"
#include "corelate/error.hpp"

namespace corelate {

template <class M>
using CospanPair = Cospan<M>;
template <class M>
using SpanPair = Span<M>;

template <Ambient A>
std::size_t apex(const A& amb, const Cospan<typename A::Morphism>& c) {
  return amb.cod(c.left);
}
template <Ambient A>
std::size_t apex(const A& amb, const Span<typename A::Morphism>& s) {
  return amb.dom(s.left);
}

namespace detail {
inline void require_feet(std::size_t a, std::size_t b) {
  if (a != b) {
    fail(ErrorKind::TypeMismatch, "foot " + std::to_string(a) + " does not match foot " + std::to_string(b));
  }
}
}  // namespace detail

template <Ambient A>
Cospan<typename A::Morphism> cospan_compose(const A& amb, const Cospan<typename A::Morphism>& c1,
                                            const Cospan<typename A::Morphism>& c2) {
  detail::require_feet(amb.dom(c1.right), amb.dom(c2.left));
  auto p = amb.pushout(c1.right, c2.left);
  return {amb.compose(c1.left, p.left), amb.compose(c2.right, p.right)};
}

template <Ambient A>
Span<typename A::Morphism> span_compose(const A& amb, const Span<typename A::Morphism>& s1,
                                        const Span<typename A::Morphism>& s2) {
  detail::require_feet(amb.cod(s1.right), amb.cod(s2.left));
  auto p = amb.pullback(s1.right, s2.left);
  return {amb.compose(p.left, s1.left), amb.compose(p.right, s2.right)};
}

template <Ambient A>
Cospan<typename A::Morphism> cospan_tensor(const A& amb, const Cospan<typename A::Morphism>& a,
                                           const Cospan<typename A::Morphism>& b) {
  return {amb.tensor(a.left, b.left), amb.tensor(a.right, b.right)};
}

template <Ambient A>
Span<typename A::Morphism> span_tensor(const A& amb, const Span<typename A::Morphism>& a,
                                       const Span<typename A::Morphism>& b) {
  return {amb.tensor(a.left, b.left), amb.tensor(a.right, b.right)};
}

template <Ambient A>
Cospan<typename A::Morphism> cospan_canonical(const A& amb, const Cospan<typename A::Morphism>& c) {
  return amb.canonical_cospan(c);
}

template <Ambient A>
Span<typename A::Morphism> span_canonical(const A& amb, const Span<typename A::Morphism>& s) {
  return amb.canonical_span(s);
}

template <Ambient A>
bool cospan_iso(const A& amb, const Cospan<typename A::Morphism>& a, const Cospan<typename A::Morphism>& b) {
  return amb.canonical_cospan(a) == amb.canonical_cospan(b);
}

template <Ambient A>
bool span_iso(const A& amb, const Span<typename A::Morphism>& a, const Span<typename A::Morphism>& b) {
  return amb.canonical_span(a) == amb.canonical_span(b);
}

template <Ambient A>
Cospan<typename A::Morphism> identity_cospan(const A& amb, std::size_t n) {
  return {amb.identity(n), amb.identity(n)};
}

template <Ambient A>
Span<typename A::Morphism> identity_span(const A& amb, std::size_t n) {
  return {amb.identity(n), amb.identity(n)};
}

// f : X -> Y read forwards: cospan X -f-> Y <-id- Y, span X <-id- X -f-> Y.
template <Ambient A>
Cospan<typename A::Morphism> embed_fwd_cospan(const A& amb, const typename A::Morphism& f) {
  return {f, amb.identity(amb.cod(f))};
}
template <Ambient A>
Span<typename A::Morphism> embed_fwd_span(const A& amb, const typename A::Morphism& f) {
  return {amb.identity(amb.dom(f)), f};
}

// f : X -> Y read backwards, as an arrow Y -> X.
template <Ambient A>
Cospan<typename A::Morphism> embed_bwd_cospan(const A& amb, const typename A::Morphism& f) {
  return {amb.identity(amb.cod(f)), f};
}
template <Ambient A>
Span<typename A::Morphism> embed_bwd_span(const A& amb, const typename A::Morphism& f) {
  return {f, amb.identity(amb.dom(f))};
}

template <Ambient A>
std::string format_cospan(const A& amb, const Cospan<typename A::Morphism>& c) {
  return "cospan { left = " + amb.format(c.left) + ", right = " + amb.format(c.right) + " }";
}

template <Ambient A>
std::string format_span(const A& amb, const Span<typename A::Morphism>& s) {
  return "span { left = " + amb.format(s.left) + ", right = " + amb.format(s.right) + " }";
}

}  // namespace corelate
