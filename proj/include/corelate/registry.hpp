#pragma once

// Semantic props for the diagram language and the theory registry:
//   er            Corel(F)
//   per           Corel(PF), with undef / coundef
//   gf<p>-subspace, q-subspace   Rel(Mat k), i.e. linear subspaces
//   z-corel       Corel(fmod Z)

#include <string>
#include <string_view>

#include "corelate/corelrel.hpp"
#include "corelate/diagram.hpp"

namespace corelate {

enum class TheoryKind { Er, Per, Linear };

namespace detail {

struct LinearMaps {
  ExactMatrix copy, discard, add, zero;
  explicit LinearMaps(const Ring& r)
      : copy(ExactMatrix::from_ints(r, 2, 1, {1, 1})),
        discard(r, 0, 1),
        add(ExactMatrix::from_ints(r, 1, 2, {1, 1})),
        zero(r, 1, 0) {}
};

// Two colors: b is the copying structure, w the adding one. Scalars are
// uncolored; r read forwards, coscalar(r) backwards.
template <class P>
typename P::Value linear_generator(const P& p, const Ring& ring, const GenNode& g) {
  LinearMaps lm(ring);
  if (g.name == "scalar" || g.name == "coscalar") {
    if (!g.color.empty() || !g.scalar) fail(ErrorKind::UnknownGenerator, "'" + g.color + "." + g.name + "'");
    ExactMatrix r(ring, 1, 1, {ring.parse(*g.scalar)});
    return g.name == "scalar" ? p.fwd(r) : p.bwd(r);
  }
  if (g.color == "b") {
    if (g.name == "comult") return p.fwd(lm.copy);
    if (g.name == "counit") return p.fwd(lm.discard);
    if (g.name == "mult") return p.bwd(lm.copy);
    if (g.name == "unit") return p.bwd(lm.discard);
  } else if (g.color == "w") {
    if (g.name == "mult") return p.fwd(lm.add);
    if (g.name == "unit") return p.fwd(lm.zero);
    if (g.name == "comult") return p.bwd(lm.add);
    if (g.name == "counit") return p.bwd(lm.zero);
  }
  fail(ErrorKind::UnknownGenerator,
       "'" + (g.color.empty() ? g.name : g.color + "." + g.name) + "' in a linear theory (generators need a color)");
}

}  // namespace detail

template <Ambient A>
class CorelProp {
 public:
  using Value = Corelation<A>;

  CorelProp(std::string id, A amb, TheoryKind kind) : id_(std::move(id)), amb_(std::move(amb)), kind_(kind) {}

  const std::string& id() const { return id_; }
  const A& ambient() const { return amb_; }
  TheoryKind kind() const { return kind_; }

  Value identity(std::size_t n) const { return corel_identity(amb_, n); }
  Value symmetry(std::size_t n, std::size_t m) const { return fwd(amb_.symmetry(n, m)); }
  Value compose(const Value& a, const Value& b) const { return corel_compose(amb_, a, b); }
  Value tensor(const Value& a, const Value& b) const { return corel_tensor(amb_, a, b); }
  bool equal(const Value& a, const Value& b) const { return corel_equal(amb_, a, b); }

  Value fwd(const typename A::Morphism& f) const { return gamma(amb_, embed_fwd_cospan(amb_, f)); }
  Value bwd(const typename A::Morphism& f) const { return gamma(amb_, embed_bwd_cospan(amb_, f)); }

  Value generator(const GenNode& g) const {
    if constexpr (std::is_same_v<A, MatrixAmbient>) {
      return detail::linear_generator(*this, amb_.ring(), g);
    } else {
      if (!g.color.empty() || g.scalar) {
        fail(ErrorKind::UnknownGenerator, "'" + g.color + "." + g.name + "' in theory " + id_);
      }
      using M = typename A::Morphism;
      const M fold(1, {0, 0});
      const M point(1, {});
      if (g.name == "unit") return fwd(point);
      if (g.name == "counit") return bwd(point);
      if (g.name == "mult") return fwd(fold);
      if (g.name == "comult") return bwd(fold);
      if constexpr (std::is_same_v<A, ParAmbient>) {
        const ParMap nowhere = ParMap::undefined(1, 0);
        if (g.name == "undef") return fwd(nowhere);
        if (g.name == "coundef") return bwd(nowhere);
      }
      fail(ErrorKind::UnknownGenerator, "'" + g.name + "' in theory " + id_);
    }
  }

  std::string format(const Value& v) const {
    const std::size_t n = left_foot(amb_, v), m = right_foot(amb_, v);
    std::string head = "corelation " + std::to_string(n) + " -> " + std::to_string(m) + " : ";
    if constexpr (std::is_same_v<A, FinAmbient>) {
      return head + format_partition(n, er_from_corelation(amb_, v).blocks());
    } else if constexpr (std::is_same_v<A, ParAmbient>) {
      return head + format_partition(n, per_from_corelation(amb_, v).blocks);
    } else {
      return head + format_cospan(amb_, v.rep);
    }
  }

 private:
  std::string id_;
  A amb_;
  TheoryKind kind_;
};

class RelProp {
 public:
  using Value = Relation;

  RelProp(std::string id, MatrixAmbient amb) : id_(std::move(id)), amb_(std::move(amb)) {}

  const std::string& id() const { return id_; }
  const MatrixAmbient& ambient() const { return amb_; }
  TheoryKind kind() const { return TheoryKind::Linear; }

  Value identity(std::size_t n) const { return rel_identity(amb_, n); }
  Value symmetry(std::size_t n, std::size_t m) const { return fwd(amb_.symmetry(n, m)); }
  Value compose(const Value& a, const Value& b) const { return rel_compose(amb_, a, b); }
  Value tensor(const Value& a, const Value& b) const { return rel_tensor(amb_, a, b); }
  bool equal(const Value& a, const Value& b) const { return rel_equal(a, b); }

  Value fwd(const ExactMatrix& f) const { return rel_canonical(amb_, embed_fwd_span(amb_, f)); }
  Value bwd(const ExactMatrix& f) const { return rel_canonical(amb_, embed_bwd_span(amb_, f)); }

  Value generator(const GenNode& g) const { return detail::linear_generator(*this, amb_.ring(), g); }
  std::string format(const Value& v) const { return format_relation(v); }

 private:
  std::string id_;
  MatrixAmbient amb_;
};

/// Calls f with the semantic prop registered under `id`; UnknownTheory otherwise.
template <class F>
decltype(auto) with_theory(std::string_view id, F&& f) {
  if (id == "er") return f(CorelProp<FinAmbient>("er", FinAmbient{}, TheoryKind::Er));
  if (id == "per") return f(CorelProp<ParAmbient>("per", ParAmbient{}, TheoryKind::Per));
  if (id == "z-corel") return f(CorelProp<MatrixAmbient>("z-corel", MatrixAmbient(Ring::integer()), TheoryKind::Linear));
  if (id == "q-subspace") return f(RelProp("q-subspace", MatrixAmbient(Ring::rational())));
  constexpr std::string_view suffix = "-subspace";
  if (id.size() > 2 + suffix.size() && id.starts_with("gf") && id.ends_with(suffix)) {
    std::string_view digits = id.substr(2, id.size() - 2 - suffix.size());
    bool ok = !digits.empty() && digits.size() < 10;
    unsigned long p = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') ok = false;
      p = p * 10 + static_cast<unsigned long>(c - '0');
    }
    if (ok && is_prime(p)) return f(RelProp(std::string(id), MatrixAmbient(Ring::gf(p))));
  }
  fail(ErrorKind::UnknownTheory, "'" + std::string(id) + "'");
}

}  // namespace corelate
