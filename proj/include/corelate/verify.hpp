#pragma once

// Bounded verification: the pullback/pushout assumptions, commutation of the
// Gamma/Pi square, functoriality suites, Frobenius laws, and brute-force
// oracles (partition gluing, relational composition, witness closure).

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "corelate/corelrel.hpp"
#include "corelate/literal.hpp"
#include "corelate/registry.hpp"

namespace corelate {

struct Counterexample {
  std::vector<std::string> inputs;
  std::string witness;
};

struct CheckOptions {
  std::size_t bound = 2;
  std::size_t entry_bound = 3;
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  // Exhaustive enumeration is used below this many cases.
  double exhaustive_limit = 1e6;
  std::size_t keep = 20;
  // Witness-closure parameters.
  std::size_t depth = 3;
  std::size_t apex_bound = 3;
};

struct CheckReport {
  std::string name;
  std::string ambient;
  std::string subcategory;
  std::size_t bound = 0;
  std::size_t entry_bound = 0;
  std::uint64_t seed = 0;
  bool exhaustive = true;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<Counterexample> counterexamples;

  bool pass() const { return failures == 0; }
};

std::string report_text(const CheckReport& r);
/// One JSON object, stable key order, no trailing newline.
std::string report_record(const CheckReport& r);

namespace detail {

inline void record(CheckReport& r, const CheckOptions& o, const std::optional<std::string>& witness,
                   const std::function<std::vector<std::string>()>& inputs) {
  ++r.cases;
  if (!witness) return;
  ++r.failures;
  if (r.counterexamples.size() < o.keep) r.counterexamples.push_back({inputs(), *witness});
}

template <Ambient A>
CheckReport start(const A& amb, const std::string& name, const std::string& sub, const CheckOptions& o) {
  CheckReport r;
  r.name = name;
  r.ambient = amb.name();
  r.subcategory = sub;
  r.bound = o.bound;
  r.entry_bound = o.entry_bound;
  r.seed = o.seed;
  return r;
}

}  // namespace detail

// Hom-sets of the ambient restricted to a subcategory, listed when small and
// sampled otherwise.
template <Ambient A>
class MapPool {
 public:
  using M = typename A::Morphism;

  MapPool(const A& amb, Sub sub, std::size_t entry_bound, double list_limit = 2e5)
      : amb_(amb), sub_(sub), entry_bound_(entry_bound), limit_(list_limit) {}

  const A& ambient() const { return amb_; }
  Sub sub() const { return sub_; }

  /// nullptr when the hom-set is too large to list.
  const std::vector<M>* list(std::size_t dom, std::size_t cod) {
    auto key = std::pair(dom, cod);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      std::optional<std::vector<M>> v;
      if (amb_.map_count(dom, cod, entry_bound_) <= limit_) {
        v.emplace();
        for (auto& f : amb_.all_maps(dom, cod, entry_bound_)) {
          if (in_A(amb_, sub_, f)) v->push_back(std::move(f));
        }
      }
      it = cache_.emplace(key, std::move(v)).first;
    }
    return it->second ? &*it->second : nullptr;
  }

  /// Size of the listed hom-set, or the unrestricted map count otherwise.
  double size(std::size_t dom, std::size_t cod) {
    if (const auto* l = list(dom, cod)) return static_cast<double>(l->size());
    return amb_.map_count(dom, cod, entry_bound_);
  }

  std::optional<M> sample(std::size_t dom, std::size_t cod, std::mt19937_64& rng) {
    if (const auto* l = list(dom, cod)) {
      if (l->empty()) return std::nullopt;
      std::uniform_int_distribution<std::size_t> d(0, l->size() - 1);
      return (*l)[d(rng)];
    }
    for (int tries = 0; tries < 4000; ++tries) {
      M f = amb_.random_map(dom, cod, entry_bound_, rng);
      if (in_A(amb_, sub_, f)) return f;
    }
    return std::nullopt;
  }

 private:
  A amb_;
  Sub sub_;
  std::size_t entry_bound_;
  double limit_;
  std::map<std::pair<std::size_t, std::size_t>, std::optional<std::vector<typename A::Morphism>>> cache_;
};

namespace detail {

using Hom = std::pair<std::size_t, std::size_t>;

// Runs `visit` over pairs (f, g) with f in hom1 and g in hom2 for every
// shape produced by `shapes`, exhaustively when the total is small enough
// and otherwise on o.samples seeded draws.
template <Ambient A, class Visit>
void for_map_pairs(MapPool<A>& pool, const std::vector<std::pair<Hom, Hom>>& shapes, const CheckOptions& o,
                   CheckReport& r, std::mt19937_64& rng, Visit&& visit) {
  double total = 0;
  bool listable = true;
  for (const auto& [h1, h2] : shapes) {
    const auto* l1 = pool.list(h1.first, h1.second);
    const auto* l2 = pool.list(h2.first, h2.second);
    if (!l1 || !l2) {
      listable = false;
      break;
    }
    total += static_cast<double>(l1->size()) * static_cast<double>(l2->size());
  }
  if (listable && total < o.exhaustive_limit) {
    for (const auto& [h1, h2] : shapes) {
      const auto& l1 = *pool.list(h1.first, h1.second);
      const auto& l2 = *pool.list(h2.first, h2.second);
      for (const auto& f : l1) {
        for (const auto& g : l2) visit(f, g);
      }
    }
    return;
  }
  r.exhaustive = false;
  if (shapes.empty()) return;
  std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
  std::size_t done = 0;
  for (std::size_t tries = 0; done < o.samples && tries < 50 * o.samples + 100; ++tries) {
    const auto& [h1, h2] = shapes[pick(rng)];
    auto f = pool.sample(h1.first, h1.second, rng);
    if (!f) continue;
    auto g = pool.sample(h2.first, h2.second, rng);
    if (!g) continue;
    visit(*f, *g);
    ++done;
  }
}

inline std::vector<std::array<std::size_t, 3>> triples(std::size_t bound) {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t a = 0; a <= bound; ++a) {
    for (std::size_t b = 0; b <= bound; ++b) {
      for (std::size_t c = 0; c <= bound; ++c) out.push_back({a, b, c});
    }
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Per-case evaluators. Each returns a witness when the case fails; replay
// parses recorded literals and calls the same evaluator.

/// Cospan X -f-> T <-g- Y: the map from the pushout of its pullback to T must be in M.
template <Ambient A>
std::optional<std::string> assumption31_case(const A& amb, const typename A::Morphism& f,
                                             const typename A::Morphism& g) {
  auto pb = amb.pullback(f, g);
  auto po = amb.pushout(pb.left, pb.right);
  auto med = amb.mediate_out(po.left, po.right, f, g);
  if (!(amb.compose(po.left, med) == f) || !(amb.compose(po.right, med) == g)) {
    return "mediator does not commute: " + amb.format(med);
  }
  if (amb.in_M(med)) return std::nullopt;
  return amb.format(med);
}

/// Span X <-f- N -g-> Y: the map from N to the pullback of its pushout must be in E.
template <Ambient A>
std::optional<std::string> assumption33_case(const A& amb, const typename A::Morphism& f,
                                             const typename A::Morphism& g) {
  auto po = amb.pushout(f, g);
  auto pb = amb.pullback(po.left, po.right);
  auto med = amb.mediate_in(pb.left, pb.right, f, g);
  if (!(amb.compose(med, pb.left) == f) || !(amb.compose(med, pb.right) == g)) {
    return "mediator does not commute: " + amb.format(med);
  }
  if (amb.in_E(med)) return std::nullopt;
  return amb.format(med);
}

/// Pi of the span reading of f against Gamma of the cospan reading, both ways.
template <Ambient A>
std::optional<std::string> square_case(const A& amb, Sub sub, const typename A::Morphism& f) {
  auto l1 = pi(amb, sub, embed_fwd_span(amb, f));
  auto r1 = gamma(amb, embed_fwd_cospan(amb, f));
  if (!(l1 == r1)) return "forward: " + format_cospan(amb, l1.rep) + " vs " + format_cospan(amb, r1.rep);
  auto l2 = pi(amb, sub, embed_bwd_span(amb, f));
  auto r2 = gamma(amb, embed_bwd_cospan(amb, f));
  if (!(l2 == r2)) return "backward: " + format_cospan(amb, l2.rep) + " vs " + format_cospan(amb, r2.rep);
  return std::nullopt;
}

/// Pi(s1 ; s2) against Pi(s1) ; Pi(s2).
template <Ambient A>
std::optional<std::string> pi_functorial_case(const A& amb, Sub sub, const Span<typename A::Morphism>& s1,
                                              const Span<typename A::Morphism>& s2) {
  auto composite = span_compose(amb, s1, s2);
  if (!in_A(amb, sub, composite.left) || !in_A(amb, sub, composite.right)) {
    return "composite span leaves " + amb.sub_name(sub) + ": " + format_span(amb, composite);
  }
  auto lhs = pi(amb, sub, composite);
  auto rhs = corel_compose(amb, pi(amb, sub, s1), pi(amb, sub, s2));
  if (lhs == rhs) return std::nullopt;
  return "Pi(s1;s2) = " + format_cospan(amb, lhs.rep) + ", Pi(s1);Pi(s2) = " + format_cospan(amb, rhs.rep);
}

// ---------------------------------------------------------------------------
// Checks.

template <Ambient A>
CheckReport check_assumption31(const A& amb, Sub sub, const CheckOptions& o) {
  CheckReport r = detail::start(amb, "assumption31", amb.sub_name(sub), o);
  MapPool<A> pool(amb, sub, o.entry_bound);
  std::mt19937_64 rng(o.seed);
  std::vector<std::pair<detail::Hom, detail::Hom>> shapes;
  for (auto [t, x, y] : detail::triples(o.bound)) shapes.push_back({{x, t}, {y, t}});
  detail::for_map_pairs(pool, shapes, o, r, rng, [&](const auto& f, const auto& g) {
    detail::record(r, o, assumption31_case(amb, f, g), [&] {
      return std::vector<std::string>{format_cospan(amb, Cospan<typename A::Morphism>{f, g})};
    });
  });
  return r;
}

template <Ambient A>
CheckReport check_assumption33(const A& amb, Sub sub, const CheckOptions& o) {
  CheckReport r = detail::start(amb, "assumption33", amb.sub_name(sub), o);
  MapPool<A> pool(amb, sub, o.entry_bound);
  std::mt19937_64 rng(o.seed);
  std::vector<std::pair<detail::Hom, detail::Hom>> shapes;
  for (auto [n, x, y] : detail::triples(o.bound)) shapes.push_back({{n, x}, {n, y}});
  detail::for_map_pairs(pool, shapes, o, r, rng, [&](const auto& f, const auto& g) {
    detail::record(r, o, assumption33_case(amb, f, g), [&] {
      return std::vector<std::string>{format_span(amb, Span<typename A::Morphism>{f, g})};
    });
  });
  return r;
}

template <Ambient A>
CheckReport check_square_commutes(const A& amb, Sub sub, const CheckOptions& o) {
  CheckReport r = detail::start(amb, "square", amb.sub_name(sub), o);
  MapPool<A> pool(amb, sub, o.entry_bound);
  std::mt19937_64 rng(o.seed);
  std::vector<std::pair<detail::Hom, detail::Hom>> shapes;
  // The second map of each pair is the identity on 0, so this lists A.
  for (std::size_t x = 0; x <= o.bound; ++x) {
    for (std::size_t y = 0; y <= o.bound; ++y) shapes.push_back({{x, y}, {0, 0}});
  }
  detail::for_map_pairs(pool, shapes, o, r, rng, [&](const auto& f, const auto&) {
    detail::record(r, o, square_case(amb, sub, f), [&] { return std::vector<std::string>{amb.format(f)}; });
  });
  return r;
}

/// Generator shapes fwd;fwd, bwd;bwd, bwd;fwd and fwd;bwd (the one that needs
/// the pushout-of-pullback condition),
/// then o.samples random composable pairs of A-spans.
template <Ambient A>
CheckReport check_pi_functorial(const A& amb, Sub sub, const CheckOptions& o) {
  using M = typename A::Morphism;
  CheckReport r = detail::start(amb, "pi-functorial", amb.sub_name(sub), o);
  MapPool<A> pool(amb, sub, o.entry_bound);
  std::mt19937_64 rng(o.seed);
  auto run = [&](const Span<M>& s1, const Span<M>& s2) {
    detail::record(r, o, pi_functorial_case(amb, sub, s1, s2),
                   [&] { return std::vector<std::string>{format_span(amb, s1), format_span(amb, s2)}; });
  };
  std::vector<std::pair<detail::Hom, detail::Hom>> s_i, s_ii, s_iii, s_iv;
  for (auto [a, b, c] : detail::triples(o.bound)) {
    s_i.push_back({{a, b}, {b, c}});
    s_ii.push_back({{b, a}, {c, b}});
    s_iii.push_back({{a, b}, {a, c}});
    s_iv.push_back({{a, c}, {b, c}});
  }
  detail::for_map_pairs(pool, s_i, o, r, rng,
                        [&](const M& f, const M& g) { run(embed_fwd_span(amb, f), embed_fwd_span(amb, g)); });
  detail::for_map_pairs(pool, s_ii, o, r, rng,
                        [&](const M& f, const M& g) { run(embed_bwd_span(amb, f), embed_bwd_span(amb, g)); });
  detail::for_map_pairs(pool, s_iii, o, r, rng,
                        [&](const M& f, const M& g) { run(embed_bwd_span(amb, f), embed_fwd_span(amb, g)); });
  detail::for_map_pairs(pool, s_iv, o, r, rng,
                        [&](const M& f, const M& g) { run(embed_fwd_span(amb, f), embed_bwd_span(amb, g)); });
  std::uniform_int_distribution<std::size_t> dim(0, o.bound);
  std::size_t done = 0;
  for (std::size_t tries = 0; done < o.samples && tries < 50 * o.samples + 100; ++tries) {
    std::size_t n1 = dim(rng), n2 = dim(rng), x = dim(rng), y = dim(rng), z = dim(rng);
    auto a = pool.sample(n1, x, rng), b = pool.sample(n1, y, rng);
    auto c = pool.sample(n2, y, rng), d = pool.sample(n2, z, rng);
    if (!a || !b || !c || !d) continue;
    run({*a, *b}, {*c, *d});
    ++done;
  }
  if (o.samples) r.exhaustive = false;
  return r;
}

namespace detail {

template <Ambient A>
std::optional<typename A::Morphism> random_any(const A& amb, std::size_t dom, std::size_t cod, std::size_t e,
                                               std::mt19937_64& rng) {
  if (amb.map_count(dom, cod, e) < 1) return std::nullopt;
  return amb.random_map(dom, cod, e, rng);
}

template <Ambient A>
Cospan<typename A::Morphism> random_cospan(const A& amb, std::size_t x, std::size_t y, const CheckOptions& o,
                                           std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> dim(0, o.bound);
  while (true) {
    std::size_t n = dim(rng);
    auto f = random_any(amb, x, n, o.entry_bound, rng);
    auto g = random_any(amb, y, n, o.entry_bound, rng);
    if (f && g) return {*f, *g};
  }
}

template <Ambient A>
Span<typename A::Morphism> random_span(MapPool<A>& legs, std::size_t x, std::size_t y, const CheckOptions& o,
                                       std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> dim(0, o.bound);
  while (true) {
    std::size_t n = dim(rng);
    auto f = legs.sample(n, x, rng);
    auto g = legs.sample(n, y, rng);
    if (f && g) return {*f, *g};
  }
}

}  // namespace detail

/// Checks one law instance; `kind` is "cospan", "span" or "corel" and the
/// inputs are the (co)span literals in order.
template <Ambient A>
std::optional<std::string> category_case(const A& amb, const std::string& kind,
                                         const std::vector<std::string>& inputs) {
  using M = typename A::Morphism;
  std::string law = inputs.at(0);
  if (kind == "span") {
    std::vector<Span<M>> s;
    for (std::size_t i = 1; i < inputs.size(); ++i) s.push_back(parse_span(amb, inputs[i]));
    auto comp = [&](const Span<M>& a, const Span<M>& b) { return span_compose(amb, a, b); };
    if (law == "assoc") {
      if (!span_iso(amb, comp(comp(s[0], s[1]), s[2]), comp(s[0], comp(s[1], s[2])))) return "associativity";
    } else if (law == "identity") {
      auto il = identity_span(amb, amb.cod(s[0].left)), ir = identity_span(amb, amb.cod(s[0].right));
      if (!span_iso(amb, comp(il, s[0]), s[0]) || !span_iso(amb, comp(s[0], ir), s[0])) return "identity";
    } else {
      auto lhs = comp(span_tensor(amb, s[0], s[2]), span_tensor(amb, s[1], s[3]));
      auto rhs = span_tensor(amb, comp(s[0], s[1]), comp(s[2], s[3]));
      if (!span_iso(amb, lhs, rhs)) return "interchange";
    }
    return std::nullopt;
  }
  std::vector<Cospan<M>> c;
  for (std::size_t i = 1; i < inputs.size(); ++i) c.push_back(parse_cospan(amb, inputs[i]));
  const bool corel = kind == "corel";
  auto norm = [&](const Cospan<M>& x) {
    return corel ? gamma(amb, x).rep : amb.canonical_cospan(x);
  };
  auto comp = [&](const Cospan<M>& a, const Cospan<M>& b) {
    return corel ? corel_compose(amb, gamma(amb, a), gamma(amb, b)).rep : cospan_compose(amb, a, b);
  };
  auto tens = [&](const Cospan<M>& a, const Cospan<M>& b) {
    return corel ? corel_tensor(amb, gamma(amb, a), gamma(amb, b)).rep : cospan_tensor(amb, a, b);
  };
  if (law == "assoc") {
    if (!(norm(comp(comp(c[0], c[1]), c[2])) == norm(comp(c[0], comp(c[1], c[2]))))) return "associativity";
  } else if (law == "identity") {
    auto il = identity_cospan(amb, amb.dom(c[0].left)), ir = identity_cospan(amb, amb.dom(c[0].right));
    if (!(norm(comp(il, c[0])) == norm(c[0])) || !(norm(comp(c[0], ir)) == norm(c[0]))) return "identity";
  } else {
    auto lhs = comp(tens(c[0], c[2]), tens(c[1], c[3]));
    auto rhs = tens(comp(c[0], c[1]), comp(c[2], c[3]));
    if (!(norm(lhs) == norm(rhs))) return "interchange";
  }
  return std::nullopt;
}

namespace detail {

template <Ambient A>
void run_category_samples(const A& amb, Sub sub, const CheckOptions& o, CheckReport& r, bool interchange) {
  std::mt19937_64 rng(o.seed);
  MapPool<A> legs(amb, sub, o.entry_bound);
  std::uniform_int_distribution<std::size_t> dim(0, o.bound);
  for (std::size_t k = 0; k < o.samples; ++k) {
    for (const std::string kind : {"cospan", "span", "corel"}) {
      const bool span = kind == "span";
      auto lit = [&](std::size_t x, std::size_t y) {
        return span ? format_span(amb, random_span(legs, x, y, o, rng))
                    : format_cospan(amb, random_cospan(amb, x, y, o, rng));
      };
      std::vector<std::vector<std::string>> cases;
      if (interchange) {
        std::size_t a = dim(rng), b = dim(rng), c = dim(rng), a2 = dim(rng), b2 = dim(rng), c2 = dim(rng);
        cases.push_back({"interchange", lit(a, b), lit(b, c), lit(a2, b2), lit(b2, c2)});
      } else {
        std::size_t a = dim(rng), b = dim(rng), c = dim(rng), d = dim(rng);
        cases.push_back({"assoc", lit(a, b), lit(b, c), lit(c, d)});
        cases.push_back({"identity", lit(a, b)});
      }
      for (auto& in : cases) {
        in.insert(in.begin(), kind);
        std::vector<std::string> args(in.begin() + 1, in.end());
        record(r, o, category_case(amb, kind, args), [&] { return in; });
      }
    }
  }
  r.exhaustive = false;
}

}  // namespace detail

/// Associativity and identity laws in Cospan(C), Span(A) and Corel on random
/// triples. Span legs are drawn from `sub`.
template <Ambient A>
CheckReport check_category_laws(const A& amb, Sub sub, const CheckOptions& o) {
  CheckReport r = detail::start(amb, "category", amb.sub_name(sub), o);
  detail::run_category_samples(amb, sub, o, r, false);
  return r;
}

/// (a (x) a') ; (b (x) b') = (a ; b) (x) (a' ; b') in Cospan(C), Span(A) and
/// Corel. Over PF only A = Inj works: pullbacks there do not commute with (+),
/// two undefined legs from different summands still meet in the apex.
template <Ambient A>
CheckReport check_tensor_functorial(const A& amb, Sub sub, const CheckOptions& o) {
  CheckReport r = detail::start(amb, "tensor", amb.sub_name(sub), o);
  detail::run_category_samples(amb, sub, o, r, true);
  return r;
}

// ---------------------------------------------------------------------------
// Zigzags X -> . <- . -> ... Y of A-arrows, read as composites of the
// embedded (co)spans.

template <Ambient A>
struct Zigzag {
  struct Step {
    bool forward;
    typename A::Morphism map;
  };
  std::vector<Step> steps;
};

/// TypeMismatch unless consecutive steps share endpoints. Returns the source
/// and target objects; `source` is used for the empty zigzag.
template <Ambient A>
std::pair<std::size_t, std::size_t> zigzag_endpoints(const A& amb, const Zigzag<A>& z, std::size_t source = 0) {
  if (z.steps.empty()) return {source, source};
  auto src = [&](const auto& s) { return s.forward ? amb.dom(s.map) : amb.cod(s.map); };
  auto tgt = [&](const auto& s) { return s.forward ? amb.cod(s.map) : amb.dom(s.map); };
  for (std::size_t i = 1; i < z.steps.size(); ++i) detail::require_feet(tgt(z.steps[i - 1]), src(z.steps[i]));
  return {src(z.steps.front()), tgt(z.steps.back())};
}

/// Image of a zigzag as a corelation.
template <Ambient A>
Corelation<A> zigzag_corelation(const A& amb, const Zigzag<A>& z, std::size_t source = 0) {
  auto [s, t] = zigzag_endpoints(amb, z, source);
  (void)t;
  Corelation<A> out = corel_identity(amb, s);
  for (const auto& st : z.steps) {
    out = corel_compose(amb, out, gamma(amb, st.forward ? embed_fwd_cospan(amb, st.map) : embed_bwd_cospan(amb, st.map)));
  }
  return out;
}

/// Image of an A-zigzag under Pi; NotInA when a step leaves the subcategory.
template <Ambient A>
Corelation<A> zigzag_pi(const A& amb, Sub sub, const Zigzag<A>& z, std::size_t source = 0) {
  auto [s, t] = zigzag_endpoints(amb, z, source);
  (void)t;
  Span<typename A::Morphism> acc = identity_span(amb, s);
  for (const auto& st : z.steps) {
    if (!in_A(amb, sub, st.map)) fail(ErrorKind::NotInA, "zigzag step " + amb.format(st.map));
    acc = span_compose(amb, acc, st.forward ? embed_fwd_span(amb, st.map) : embed_bwd_span(amb, st.map));
  }
  return pi(amb, sub, acc);
}

// ---------------------------------------------------------------------------
// Witness closure: cospans related by a zigzag of M-witnesses.

/// Canonical forms (as literals) of all cospans reachable from `start` in at
/// most `depth` witness moves with apex <= apex_bound.
template <Ambient A>
std::set<std::string> witness_closure(MapPool<A>& mono_pool, const Cospan<typename A::Morphism>& start,
                                      std::size_t depth, std::size_t apex_bound) {
  using M = typename A::Morphism;
  const A& amb = mono_pool.ambient();
  std::set<std::string> seen;
  std::vector<Cospan<M>> frontier{amb.canonical_cospan(start)};
  seen.insert(format_cospan(amb, frontier[0]));
  for (std::size_t d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<Cospan<M>> next;
    auto visit = [&](const Cospan<M>& c) {
      Cospan<M> k = amb.canonical_cospan(c);
      if (seen.insert(format_cospan(amb, k)).second) next.push_back(std::move(k));
    };
    for (const auto& c : frontier) {
      const std::size_t n = amb.cod(c.left);
      for (std::size_t n2 = 0; n2 <= apex_bound; ++n2) {
        // Forward: (p, q) ~> (p;m, q;m).
        if (const auto* ms = mono_pool.list(n, n2)) {
          for (const auto& m : *ms) visit({amb.compose(c.left, m), amb.compose(c.right, m)});
        }
        // Backward: (p', q') with p';m = p and q';m = q.
        if (const auto* ms = mono_pool.list(n2, n)) {
          for (const auto& m : *ms) {
            auto l = amb.lift_through(m, c.left);
            if (!l) continue;
            auto rr = amb.lift_through(m, c.right);
            if (!rr) continue;
            visit({*l, *rr});
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

template <Ambient A>
bool witness_equal_oracle(const A& amb, const Cospan<typename A::Morphism>& c1,
                          const Cospan<typename A::Morphism>& c2, std::size_t depth, std::size_t apex_bound,
                          std::size_t entry_bound) {
  MapPool<A> pool(amb, Sub::M, entry_bound);
  auto closure = witness_closure(pool, c1, depth, apex_bound);
  return closure.count(format_cospan(amb, amb.canonical_cospan(c2))) > 0;
}

/// Canonical corelation equality against the witness closure, for all pairs
/// of cospans with feet <= o.bound and apex <= o.apex_bound.
template <Ambient A>
CheckReport check_witness(const A& amb, const CheckOptions& o) {
  using M = typename A::Morphism;
  CheckReport r = detail::start(amb, "witness", amb.sub_name(Sub::M), o);
  MapPool<A> any(amb, Sub::All, o.entry_bound);
  MapPool<A> monos(amb, Sub::M, o.entry_bound);
  for (std::size_t n = 0; n <= o.bound; ++n) {
    for (std::size_t m = 0; m <= o.bound; ++m) {
      std::vector<Cospan<M>> cs;
      for (std::size_t a = 0; a <= o.apex_bound; ++a) {
        const auto* l = any.list(n, a);
        const auto* rt = any.list(m, a);
        if (!l || !rt) continue;
        for (const auto& f : *l) {
          for (const auto& g : *rt) cs.push_back({f, g});
        }
      }
      std::vector<std::set<std::string>> closures;
      std::vector<Corelation<A>> corels;
      for (const auto& c : cs) {
        closures.push_back(witness_closure(monos, c, o.depth, o.apex_bound));
        corels.push_back(gamma(amb, c));
      }
      for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = 0; j < cs.size(); ++j) {
          const bool canon = corel_equal(amb, corels[i], corels[j]);
          const bool oracle = closures[i].count(format_cospan(amb, amb.canonical_cospan(cs[j]))) > 0;
          std::optional<std::string> w;
          if (canon != oracle) w = std::string("canonical says ") + (canon ? "equal" : "distinct") + ", witnesses say " +
                                   (oracle ? "equal" : "distinct");
          detail::record(r, o, w, [&] {
            return std::vector<std::string>{format_cospan(amb, cs[i]), format_cospan(amb, cs[j])};
          });
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Brute-force oracles.

/// Partition on n+z glued with a partition on z+m along z, restricted to n+m.
Partition oracle_er_compose(std::size_t n, std::size_t z, std::size_t m, const Partition& p1, const Partition& p2);
/// As above with uncovered points merged into a sink class that is dropped.
PartialPartition oracle_per_compose(std::size_t n, std::size_t z, std::size_t m, const PartialPartition& p1,
                                    const PartialPartition& p2);
/// All partial partitions of a k-element set.
std::vector<PartialPartition> all_partial_partitions(std::size_t k);

using VectorSet = std::set<std::vector<unsigned long>>;
/// Every vector in the row span of `basis` over GF(p).
VectorSet enumerate_span(const ExactMatrix& basis);
/// {(v, w) | exists u: (v, u) in V and (u, w) in W} by enumeration over GF(p).
VectorSet oracle_subspace_compose(std::size_t n, std::size_t z, std::size_t m, const ExactMatrix& V,
                                  const ExactMatrix& W);
/// All subspaces of GF(p)^k as reduced-echelon basis matrices.
std::vector<ExactMatrix> all_subspaces(const Ring& ring, std::size_t k);

/// Invariant factors d_1 | d_2 | ... from gcds of k x k minors.
std::vector<BigInt> invariant_factors_by_minors(const ExactMatrix& a);

CheckReport check_er_oracle(const CheckOptions& o);
CheckReport check_per_oracle(const CheckOptions& o);
/// Exhaustive for n,z,m <= o.bound, then o.samples draws at o.bound + 1.
CheckReport check_subspace_oracle(const Ring& ring, const CheckOptions& o);
CheckReport check_abelian_iso(const Ring& ring, const CheckOptions& o);
/// o.samples integer matrices with dims <= o.bound and entries <= o.entry_bound.
CheckReport check_snf(const CheckOptions& o);
/// Frobenius, (co)unit, (co)associativity, (co)commutativity, special and
/// extra laws; per color and with scalar cancellation for linear theories.
CheckReport check_frobenius(const std::string& theory);

// ---------------------------------------------------------------------------
// Replay of recorded counterexamples. Returns true when the failure recurs.

template <Ambient A>
bool replay(const A& amb, Sub sub, const std::string& check, const Counterexample& cx) {
  const auto& in = cx.inputs;
  if (check == "assumption31") {
    auto c = parse_cospan(amb, in.at(0));
    return assumption31_case(amb, c.left, c.right).has_value();
  }
  if (check == "assumption33") {
    auto s = parse_span(amb, in.at(0));
    return assumption33_case(amb, s.left, s.right).has_value();
  }
  if (check == "square") return square_case(amb, sub, parse_morphism(amb, in.at(0))).has_value();
  if (check == "pi-functorial") {
    return pi_functorial_case(amb, sub, parse_span(amb, in.at(0)), parse_span(amb, in.at(1))).has_value();
  }
  if (check == "category" || check == "tensor") {
    std::vector<std::string> args(in.begin() + 1, in.end());
    return category_case(amb, in.at(0), args).has_value();
  }
  if (check == "witness") {
    auto c1 = parse_cospan(amb, in.at(0)), c2 = parse_cospan(amb, in.at(1));
    const bool canon = gamma(amb, c1) == gamma(amb, c2);
    return canon != witness_equal_oracle(amb, c1, c2, 3, 3, 3);
  }
  fail(ErrorKind::InvalidLiteral, "no replay for check '" + check + "'");
}

/// Replays a frobenius counterexample (inputs are the two terms).
bool replay_frobenius(const std::string& theory, const Counterexample& cx);

}  // namespace corelate
