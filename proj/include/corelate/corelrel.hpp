#pragma once

// Corelations (jointly-E cospans) and relations (jointly-M spans) in
// canonical form, the quotient Gamma from cospans, and Pi from A-spans.

#include <string>
#include <type_traits>
#include <vector>

#include "corelate/spancospan.hpp"

namespace corelate {

template <Ambient A>
struct Corelation {
  Cospan<typename A::Morphism> rep;

  friend bool operator==(const Corelation&, const Corelation&) = default;
};

// Relations are only formed over matrix ambients whose ring is a field.
struct Relation {
  Span<ExactMatrix> rep;

  friend bool operator==(const Relation&, const Relation&) = default;
};

template <Ambient A>
std::size_t left_foot(const A& amb, const Corelation<A>& c) { return amb.dom(c.rep.left); }
template <Ambient A>
std::size_t right_foot(const A& amb, const Corelation<A>& c) { return amb.dom(c.rep.right); }

template <Ambient A>
Corelation<A> gamma(const A& amb, const Cospan<typename A::Morphism>& c) {
  const std::size_t n = amb.dom(c.left), m = amb.dom(c.right);
  auto fac = amb.factorize(amb.copair(c.left, c.right));
  auto [i1, i2] = amb.injections(n, m);
  return {amb.canonical_cospan({amb.compose(i1, fac.epi), amb.compose(i2, fac.epi)})};
}

/// NotInA unless both legs belong to the chosen subcategory.
template <Ambient A>
Corelation<A> pi(const A& amb, Sub sub, const Span<typename A::Morphism>& s) {
  if (!in_A(amb, sub, s.left) || !in_A(amb, sub, s.right)) {
    fail(ErrorKind::NotInA, "span leg outside " + amb.sub_name(sub) + ": " + format_span(amb, s));
  }
  auto p = amb.pushout(s.left, s.right);
  return gamma(amb, Cospan<typename A::Morphism>{p.left, p.right});
}

template <Ambient A>
Corelation<A> corel_identity(const A& amb, std::size_t n) {
  return gamma(amb, identity_cospan(amb, n));
}

template <Ambient A>
Corelation<A> corel_compose(const A& amb, const Corelation<A>& a, const Corelation<A>& b) {
  return gamma(amb, cospan_compose(amb, a.rep, b.rep));
}

template <Ambient A>
Corelation<A> corel_tensor(const A& amb, const Corelation<A>& a, const Corelation<A>& b) {
  return gamma(amb, cospan_tensor(amb, a.rep, b.rep));
}

template <Ambient A>
bool corel_equal(const A& amb, const Corelation<A>& a, const Corelation<A>& b) {
  detail::require_feet(left_foot(amb, a), left_foot(amb, b));
  detail::require_feet(right_foot(amb, a), right_foot(amb, b));
  return a == b;
}

template <Ambient A>
bool is_corelation_rep(const A& amb, const Cospan<typename A::Morphism>& c) {
  return amb.in_E(amb.copair(c.left, c.right));
}

// ---------------------------------------------------------------------------
// Relations over a field.

/// Reads the span as the subspace spanned by its pairing. NotAbelian over Z.
Relation rel_canonical(const MatrixAmbient& amb, const Span<ExactMatrix>& s);
Relation rel_identity(const MatrixAmbient& amb, std::size_t n);
Relation rel_compose(const MatrixAmbient& amb, const Relation& a, const Relation& b);
Relation rel_tensor(const MatrixAmbient& amb, const Relation& a, const Relation& b);
bool rel_equal(const Relation& a, const Relation& b);
std::size_t left_foot(const Relation& r);
std::size_t right_foot(const Relation& r);

/// The subspace of k^n x k^m as reduced-echelon basis rows.
ExactMatrix subspace_basis(const Relation& r);
/// Relation spanned by the rows of `basis` (vectors in k^(n+m)).
Relation relation_from_rows(const MatrixAmbient& amb, std::size_t n, std::size_t m, const ExactMatrix& basis);
/// `subspace n -> m : [[...]]`
std::string format_relation(const Relation& r);

// The isomorphism Rel(C) = Corel(C) for an abelian C. Any other ambient
// raises NotAbelian.
template <Ambient A>
Corelation<A> relation_to_corelation(const A& amb, const Relation& r) {
  if constexpr (std::is_same_v<A, MatrixAmbient>) {
    if (amb.ring().is_field()) {
      auto p = amb.pushout(r.rep.left, r.rep.right);
      return gamma(amb, Cospan<ExactMatrix>{p.left, p.right});
    }
  }
  fail(ErrorKind::NotAbelian, amb.name() + " is not abelian");
}

template <Ambient A>
Relation corelation_to_relation(const A& amb, const Corelation<A>& c) {
  if constexpr (std::is_same_v<A, MatrixAmbient>) {
    if (amb.ring().is_field()) {
      auto p = amb.pullback(c.rep.left, c.rep.right);
      return rel_canonical(amb, Span<ExactMatrix>{p.left, p.right});
    }
  }
  fail(ErrorKind::NotAbelian, amb.name() + " is not abelian");
}

// ---------------------------------------------------------------------------
// Equivalence relations and partial equivalence relations on n + m. Ground
// element i < n is the left foot point x_i, and n + j is the right foot y_j.

struct PartialPartition {
  std::size_t ground = 0;
  std::vector<std::vector<std::size_t>> blocks;

  friend bool operator==(const PartialPartition&, const PartialPartition&) = default;
};

/// Sorts blocks and checks disjointness; TypeMismatch otherwise.
PartialPartition make_partial_partition(std::size_t ground, std::vector<std::vector<std::size_t>> blocks);

Partition er_from_corelation(const FinAmbient& amb, const Corelation<FinAmbient>& c);
Corelation<FinAmbient> corelation_from_partition(const FinAmbient& amb, std::size_t n, std::size_t m,
                                                 const Partition& p);
PartialPartition per_from_corelation(const ParAmbient& amb, const Corelation<ParAmbient>& c);
Corelation<ParAmbient> corelation_from_partial_partition(const ParAmbient& amb, std::size_t n, std::size_t m,
                                                         const PartialPartition& p);

/// `{{x0,y0},{x1}}`
std::string format_partition(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks);

}  // namespace corelate
