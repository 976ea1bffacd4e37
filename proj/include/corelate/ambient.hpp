#pragma once

// Ambient props for the span / cospan / corelation engine. Each ambient
// bundles the category operations of one prop together with its (E, M)
// factorisation system and the enumeration hooks the verifier needs.

#include <concepts>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "corelate/finfn.hpp"
#include "corelate/linmap.hpp"
#include "corelate/shapes.hpp"

namespace corelate {

// Which subcategory A of the ambient spans are drawn from.
enum class Sub { All, M };

template <class A>
concept Ambient = requires(const A a, const typename A::Morphism f, std::size_t n, std::mt19937_64& rng) {
  { a.name() } -> std::convertible_to<std::string>;
  { a.sub_name(Sub::M) } -> std::convertible_to<std::string>;
  { a.dom(f) } -> std::convertible_to<std::size_t>;
  { a.cod(f) } -> std::convertible_to<std::size_t>;
  { a.identity(n) } -> std::same_as<typename A::Morphism>;
  { a.compose(f, f) } -> std::same_as<typename A::Morphism>;
  { a.tensor(f, f) } -> std::same_as<typename A::Morphism>;
  { a.symmetry(n, n) } -> std::same_as<typename A::Morphism>;
  { a.copair(f, f) } -> std::same_as<typename A::Morphism>;
  { a.injections(n, n) } -> std::same_as<std::pair<typename A::Morphism, typename A::Morphism>>;
  { a.pullback(f, f) } -> std::same_as<Span<typename A::Morphism>>;
  { a.pushout(f, f) } -> std::same_as<Cospan<typename A::Morphism>>;
  { a.factorize(f) } -> std::same_as<Factorization<typename A::Morphism>>;
  { a.in_E(f) } -> std::same_as<bool>;
  { a.in_M(f) } -> std::same_as<bool>;
  { a.mediate_out(f, f, f, f) } -> std::same_as<typename A::Morphism>;
  { a.mediate_in(f, f, f, f) } -> std::same_as<typename A::Morphism>;
  { a.lift_through(f, f) } -> std::same_as<std::optional<typename A::Morphism>>;
  { a.canonical_cospan(Cospan<typename A::Morphism>{f, f}) } -> std::same_as<Cospan<typename A::Morphism>>;
  { a.canonical_span(Span<typename A::Morphism>{f, f}) } -> std::same_as<Span<typename A::Morphism>>;
  { a.map_count(n, n, n) } -> std::convertible_to<double>;
  { a.all_maps(n, n, n) } -> std::same_as<std::vector<typename A::Morphism>>;
  { a.random_map(n, n, n, rng) } -> std::same_as<typename A::Morphism>;
  { a.format(f) } -> std::convertible_to<std::string>;
};

template <Ambient A>
bool in_A(const A& amb, Sub sub, const typename A::Morphism& f) {
  return sub == Sub::All || amb.in_M(f);
}

// The prop F of functions, with (Surj, Inj).
class FinAmbient {
 public:
  using Morphism = FinMap;

  std::string name() const { return "F"; }
  std::string sub_name(Sub s) const { return s == Sub::M ? "Inj" : "F"; }
  std::size_t dom(const FinMap& f) const { return f.dom(); }
  std::size_t cod(const FinMap& f) const { return f.cod(); }
  FinMap identity(std::size_t n) const { return FinMap::identity(n); }
  FinMap compose(const FinMap& f, const FinMap& g) const { return corelate::compose(f, g); }
  FinMap tensor(const FinMap& f, const FinMap& g) const { return corelate::tensor(f, g); }
  FinMap symmetry(std::size_t n, std::size_t m) const { return FinMap::symmetry(n, m); }
  FinMap copair(const FinMap& f, const FinMap& g) const { return corelate::copair(f, g); }
  std::pair<FinMap, FinMap> injections(std::size_t n, std::size_t m) const;
  Span<FinMap> pullback(const FinMap& f, const FinMap& g) const { return corelate::pullback(f, g); }
  Cospan<FinMap> pushout(const FinMap& f, const FinMap& g) const { return corelate::pushout(f, g); }
  Factorization<FinMap> factorize(const FinMap& f) const { return corelate::factorize(f); }
  bool in_E(const FinMap& f) const { return classify(f).surjective; }
  bool in_M(const FinMap& f) const { return classify(f).injective; }
  /// Map out of the pushout apex of (q1, q2) induced by the cocone (f, g).
  FinMap mediate_out(const FinMap& q1, const FinMap& q2, const FinMap& f, const FinMap& g) const;
  /// Map into the pullback apex of (p1, p2) induced by the cone (f, g).
  FinMap mediate_in(const FinMap& p1, const FinMap& p2, const FinMap& f, const FinMap& g) const;
  /// k with k ; m = h, if any.
  std::optional<FinMap> lift_through(const FinMap& m, const FinMap& h) const;
  Cospan<FinMap> canonical_cospan(const Cospan<FinMap>& c) const;
  Span<FinMap> canonical_span(const Span<FinMap>& s) const;
  double map_count(std::size_t dom, std::size_t cod, std::size_t entry_bound) const;
  std::vector<FinMap> all_maps(std::size_t dom, std::size_t cod, std::size_t entry_bound) const;
  FinMap random_map(std::size_t dom, std::size_t cod, std::size_t entry_bound, std::mt19937_64& rng) const;
  std::string format(const FinMap& f) const { return corelate::format(f); }
};

// The prop PF of partial functions, with (partial surjections, total injections).
class ParAmbient {
 public:
  using Morphism = ParMap;

  std::string name() const { return "PF"; }
  std::string sub_name(Sub s) const { return s == Sub::M ? "Inj" : "PF"; }
  std::size_t dom(const ParMap& f) const { return f.dom(); }
  std::size_t cod(const ParMap& f) const { return f.cod(); }
  ParMap identity(std::size_t n) const { return ParMap::identity(n); }
  ParMap compose(const ParMap& f, const ParMap& g) const { return corelate::compose(f, g); }
  ParMap tensor(const ParMap& f, const ParMap& g) const { return corelate::tensor(f, g); }
  ParMap symmetry(std::size_t n, std::size_t m) const { return ParMap::symmetry(n, m); }
  ParMap copair(const ParMap& f, const ParMap& g) const { return corelate::copair(f, g); }
  std::pair<ParMap, ParMap> injections(std::size_t n, std::size_t m) const;
  Span<ParMap> pullback(const ParMap& f, const ParMap& g) const { return corelate::pullback(f, g); }
  Cospan<ParMap> pushout(const ParMap& f, const ParMap& g) const { return corelate::pushout(f, g); }
  Factorization<ParMap> factorize(const ParMap& f) const { return corelate::factorize(f); }
  bool in_E(const ParMap& f) const { return is_partial_surjection(f); }
  bool in_M(const ParMap& f) const { return is_total_injection(f); }
  ParMap mediate_out(const ParMap& q1, const ParMap& q2, const ParMap& f, const ParMap& g) const;
  ParMap mediate_in(const ParMap& p1, const ParMap& p2, const ParMap& f, const ParMap& g) const;
  std::optional<ParMap> lift_through(const ParMap& m, const ParMap& h) const;
  Cospan<ParMap> canonical_cospan(const Cospan<ParMap>& c) const;
  Span<ParMap> canonical_span(const Span<ParMap>& s) const;
  double map_count(std::size_t dom, std::size_t cod, std::size_t entry_bound) const;
  std::vector<ParMap> all_maps(std::size_t dom, std::size_t cod, std::size_t entry_bound) const;
  ParMap random_map(std::size_t dom, std::size_t cod, std::size_t entry_bound, std::mt19937_64& rng) const;
  std::string format(const ParMap& f) const { return corelate::format(f); }
};

// Mat(k) for a field k, or fmod(Z) with (epi, split mono).
class MatrixAmbient {
 public:
  using Morphism = ExactMatrix;

  explicit MatrixAmbient(Ring ring) : ring_(ring) {}

  const Ring& ring() const { return ring_; }
  std::string name() const;
  std::string sub_name(Sub s) const;
  std::size_t dom(const ExactMatrix& f) const { return f.dom(); }
  std::size_t cod(const ExactMatrix& f) const { return f.cod(); }
  ExactMatrix identity(std::size_t n) const { return ExactMatrix::identity(ring_, n); }
  ExactMatrix compose(const ExactMatrix& f, const ExactMatrix& g) const { return corelate::compose(f, g); }
  ExactMatrix tensor(const ExactMatrix& f, const ExactMatrix& g) const { return corelate::tensor(f, g); }
  ExactMatrix symmetry(std::size_t n, std::size_t m) const { return ExactMatrix::symmetry(ring_, n, m); }
  ExactMatrix copair(const ExactMatrix& f, const ExactMatrix& g) const { return hconcat(f, g); }
  std::pair<ExactMatrix, ExactMatrix> injections(std::size_t n, std::size_t m) const;
  Span<ExactMatrix> pullback(const ExactMatrix& f, const ExactMatrix& g) const { return corelate::pullback(f, g); }
  Cospan<ExactMatrix> pushout(const ExactMatrix& f, const ExactMatrix& g) const { return corelate::pushout(f, g); }
  Factorization<ExactMatrix> factorize(const ExactMatrix& f) const { return corelate::factorize(f); }
  bool in_E(const ExactMatrix& f) const { return is_epi_class(f); }
  bool in_M(const ExactMatrix& f) const { return is_mono_class(f); }
  ExactMatrix mediate_out(const ExactMatrix& q1, const ExactMatrix& q2, const ExactMatrix& f,
                          const ExactMatrix& g) const;
  ExactMatrix mediate_in(const ExactMatrix& p1, const ExactMatrix& p2, const ExactMatrix& f,
                         const ExactMatrix& g) const;
  std::optional<ExactMatrix> lift_through(const ExactMatrix& m, const ExactMatrix& h) const;
  Cospan<ExactMatrix> canonical_cospan(const Cospan<ExactMatrix>& c) const;
  Span<ExactMatrix> canonical_span(const Span<ExactMatrix>& s) const;
  /// Entries range over -e..e, or over all residues for GF(p).
  double map_count(std::size_t dom, std::size_t cod, std::size_t entry_bound) const;
  std::vector<ExactMatrix> all_maps(std::size_t dom, std::size_t cod, std::size_t entry_bound) const;
  ExactMatrix random_map(std::size_t dom, std::size_t cod, std::size_t entry_bound, std::mt19937_64& rng) const;
  std::string format(const ExactMatrix& f) const { return corelate::format(f); }

 private:
  std::vector<long> alphabet(std::size_t entry_bound) const;

  Ring ring_;
};

static_assert(Ambient<FinAmbient>);
static_assert(Ambient<ParAmbient>);
static_assert(Ambient<MatrixAmbient>);

}  // namespace corelate
