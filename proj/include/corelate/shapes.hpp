#pragma once

namespace corelate {

// X <-left- N -right-> Y. The apex N is the common domain of both legs.
template <class M>
struct Span {
  M left;
  M right;

  friend bool operator==(const Span&, const Span&) = default;
};

// X -left-> N <-right- Y. The apex N is the common codomain of both legs.
template <class M>
struct Cospan {
  M left;
  M right;

  friend bool operator==(const Cospan&, const Cospan&) = default;
};

// f = epi ; mono (diagrammatic order).
template <class M>
struct Factorization {
  M epi;
  M mono;
};

}  // namespace corelate
