#include <random>

#include "corelate/corelrel.hpp"
#include "corelate/literal.hpp"
#include "support.hpp"

using namespace corelate;

namespace {

FinMap fn(std::size_t cod, std::vector<std::size_t> t) { return FinMap(cod, std::move(t)); }

ExactMatrix zmat(std::size_t r, std::size_t c, std::vector<long> v) {
  return ExactMatrix::from_ints(Ring::integer(), r, c, v);
}

template <Ambient A>
Cospan<typename A::Morphism> rand_cospan(const A& amb, std::size_t x, std::size_t y, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> d(x + y > 0 ? 1 : 0, 3);
  std::size_t n = d(rng);
  return {amb.random_map(x, n, 2, rng), amb.random_map(y, n, 2, rng)};
}

template <Ambient A>
void corel_laws(const A& amb) {
  INFO(amb.name());
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> d(0, 3);
  for (int i = 0; i < 150; ++i) {
    std::size_t a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    auto x = gamma(amb, rand_cospan(amb, a, b, rng));
    auto y = gamma(amb, rand_cospan(amb, b, c, rng));
    auto z = gamma(amb, rand_cospan(amb, c, e, rng));
    CHECK(corel_compose(amb, corel_compose(amb, x, y), z) == corel_compose(amb, x, corel_compose(amb, y, z)));
    CHECK(corel_compose(amb, corel_identity(amb, a), x) == x);
    CHECK(corel_compose(amb, x, corel_identity(amb, b)) == x);
    // Fullness: gamma fixes canonical representatives.
    CHECK(gamma(amb, x.rep) == x);
    CHECK(is_corelation_rep(amb, x.rep));
    // Tensor does not depend on the representative.
    auto p = rand_cospan(amb, a, b, rng), q = rand_cospan(amb, c, e, rng);
    CHECK(gamma(amb, cospan_tensor(amb, p, q)) == corel_tensor(amb, gamma(amb, p), gamma(amb, q)));
    // Composition does not either.
    auto r = rand_cospan(amb, b, c, rng);
    CHECK(gamma(amb, cospan_compose(amb, p, r)) == corel_compose(amb, gamma(amb, p), gamma(amb, r)));
  }
}

}  // namespace

TEST_CASE("gamma") {
  FinAmbient f;
  auto c = gamma(f, Cospan<FinMap>{fn(1, {}), fn(1, {})});
  CHECK(c == corel_identity(f, 0));
  CHECK(c.rep.left.cod() == 0);
  c = gamma(f, Cospan<FinMap>{fn(2, {0}), fn(2, {0})});
  CHECK(c.rep.left == fn(1, {0}));
  CHECK(c.rep.right == fn(1, {0}));
  auto je = Cospan<FinMap>{fn(2, {1, 0}), fn(2, {1})};
  CHECK(gamma(f, je).rep == cospan_canonical(f, je));
}

TEST_CASE("pi") {
  FinAmbient f;
  CHECK(pi(f, Sub::M, Span<FinMap>{fn(0, {}), fn(0, {})}) == corel_identity(f, 0));
  CHECK(pi(f, Sub::M, Span<FinMap>{fn(0, {}), fn(0, {})}) == gamma(f, Cospan<FinMap>{fn(1, {}), fn(1, {})}));
  CHECK(pi(f, Sub::M, identity_span(f, 2)) == corel_identity(f, 2));
  auto c = pi(f, Sub::M, Span<FinMap>{fn(2, {0}), fn(1, {0})});
  CHECK(c.rep.left == fn(2, {0, 1}));
  CHECK(c.rep.right == fn(2, {0}));
  CHECK_KIND(pi(f, Sub::M, Span<FinMap>{fn(1, {0, 0}), fn(2, {0, 1})}), ErrorKind::NotInA);
  MatrixAmbient z(Ring::integer());
  CHECK_KIND(pi(z, Sub::M, Span<ExactMatrix>{zmat(1, 1, {2}), zmat(1, 1, {1})}), ErrorKind::NotInA);
}

TEST_CASE("corel_compose") {
  FinAmbient f;
  // {{x0,w0},{x1}} ; {{w0,y0,y1}}
  auto a = corelation_from_partition(f, 2, 1, Partition(3, {{0, 2}, {1}}));
  auto b = corelation_from_partition(f, 1, 2, Partition(3, {{0, 1, 2}}));
  auto ab = corel_compose(f, a, b);
  CHECK(er_from_corelation(f, ab) == Partition(4, {{0, 2, 3}, {1}}));
  CHECK(format_partition(2, er_from_corelation(f, ab).blocks()) == "{{x0,y0,y1},{x1}}");
  CHECK(corel_compose(f, a, corel_identity(f, 1)) == a);
  CHECK_KIND(corel_compose(f, a, a), ErrorKind::TypeMismatch);

  MatrixAmbient z(Ring::integer());
  auto two = gamma(z, Cospan<ExactMatrix>{zmat(1, 1, {2}), zmat(1, 1, {2})});
  CHECK(corel_compose(z, two, two) == two);
}

TEST_CASE("corel_equal") {
  MatrixAmbient z(Ring::integer());
  auto one = gamma(z, Cospan<ExactMatrix>{zmat(1, 1, {1}), zmat(1, 1, {1})});
  auto two = gamma(z, Cospan<ExactMatrix>{zmat(1, 1, {2}), zmat(1, 1, {2})});
  CHECK(corel_equal(z, one, one));
  CHECK_FALSE(corel_equal(z, one, two));
  CHECK(one == corel_identity(z, 1));
  CHECK_KIND(corel_equal(z, one, corel_identity(z, 2)), ErrorKind::TypeMismatch);

  FinAmbient f;
  for (const auto& p : f.all_maps(2, 2, 0)) {
    for (const auto& q : f.all_maps(1, 2, 0)) {
      for (const auto& m : f.all_maps(2, 3, 0)) {
        if (!f.in_M(m)) continue;
        CHECK(corel_equal(f, gamma(f, {p, q}), gamma(f, {compose(p, m), compose(q, m)})));
      }
    }
  }
}

TEST_CASE("corelation laws in F, PF and Z") {
  corel_laws(FinAmbient{});
  corel_laws(ParAmbient{});
  corel_laws(MatrixAmbient(Ring::integer()));
  corel_laws(MatrixAmbient(Ring::gf(3)));
}

TEST_CASE("relations") {
  MatrixAmbient g2(Ring::gf(2));
  Ring k = Ring::gf(2);
  auto v = relation_from_rows(g2, 1, 1, ExactMatrix::from_ints(k, 1, 2, {1, 0}));
  auto w = relation_from_rows(g2, 1, 1, ExactMatrix::from_ints(k, 1, 2, {1, 1}));
  CHECK(rel_compose(g2, v, w) == v);
  CHECK(format_relation(rel_compose(g2, v, w)) == "subspace 1 -> 1 : [[1,0]]");
  CHECK(rel_canonical(g2, identity_span(g2, 2)) == rel_identity(g2, 2));
  CHECK_KIND(rel_compose(g2, v, rel_identity(g2, 2)), ErrorKind::TypeMismatch);

  MatrixAmbient q(Ring::rational());
  Ring qq = Ring::rational();
  auto graph2 = relation_from_rows(q, 1, 1, ExactMatrix::from_ints(qq, 1, 2, {1, 2}));
  auto op2 = relation_from_rows(q, 1, 1, ExactMatrix::from_ints(qq, 1, 2, {2, 1}));
  CHECK(rel_compose(q, graph2, op2) == rel_identity(q, 1));
  CHECK(rel_compose(q, graph2, graph2) == relation_from_rows(q, 1, 1, ExactMatrix::from_ints(qq, 1, 2, {1, 4})));

  MatrixAmbient z(Ring::integer());
  CHECK_KIND(rel_canonical(z, identity_span(z, 1)), ErrorKind::NotAbelian);
}

TEST_CASE("spans with the same M-part give the same relation") {
  Ring k = Ring::gf(2);
  MatrixAmbient g2(k);
  for (std::size_t a = 0; a <= 2; ++a) {
    auto lefts = g2.all_maps(a, 1, 0), rights = g2.all_maps(a, 2, 0);
    for (const auto& l : lefts) {
      for (const auto& r : rights) {
        Relation rel = rel_canonical(g2, {l, r});
        // The pairing's image is the subspace.
        ExactMatrix pairing = vconcat(l, r);
        CHECK(subspace_basis(rel) == subspace_basis(relation_from_rows(g2, 1, 2, pairing.transpose())));
        for (const auto& e : g2.all_maps(a, a, 0)) {
          Relation pre = rel_canonical(g2, {compose(e, l), compose(e, r)});
          if (g2.in_E(e)) CHECK(pre == rel);
        }
      }
    }
  }
}

TEST_CASE("Rel and Corel over a field") {
  Ring k = Ring::gf(2);
  MatrixAmbient g2(k);
  CHECK(relation_to_corelation(g2, rel_identity(g2, 2)) == corel_identity(g2, 2));
  CHECK(corelation_to_relation(g2, corel_identity(g2, 2)) == rel_identity(g2, 2));

  auto r = rel_canonical(g2, {ExactMatrix::from_ints(k, 1, 1, {1}), ExactMatrix::from_ints(k, 1, 1, {0})});
  auto c = relation_to_corelation(g2, r);
  CHECK(c.rep.left == ExactMatrix::from_ints(k, 1, 1, {0}));
  CHECK(c.rep.right == ExactMatrix::from_ints(k, 1, 1, {1}));
  CHECK(corelation_to_relation(g2, c) == r);

  // Zero subspace 1 -> 2: the coproduct injections.
  auto zero = rel_canonical(g2, {ExactMatrix(k, 1, 0), ExactMatrix(k, 2, 0)});
  auto zc = relation_to_corelation(g2, zero);
  auto [i1, i2] = g2.injections(1, 2);
  CHECK(zc.rep.left == i1);
  CHECK(zc.rep.right == i2);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto s = Span<ExactMatrix>{g2.random_map(2, 2, 0, rng), g2.random_map(2, 1, 0, rng)};
    auto t = Span<ExactMatrix>{g2.random_map(1, 1, 0, rng), g2.random_map(1, 2, 0, rng)};
    auto rs = rel_canonical(g2, s), rt = rel_canonical(g2, t);
    CHECK(corelation_to_relation(g2, relation_to_corelation(g2, rs)) == rs);
    CHECK(relation_to_corelation(g2, rel_compose(g2, rs, rt)) ==
          corel_compose(g2, relation_to_corelation(g2, rs), relation_to_corelation(g2, rt)));
  }
}

TEST_CASE("NotAbelian") {
  FinAmbient f;
  ParAmbient pf;
  MatrixAmbient z(Ring::integer());
  MatrixAmbient g2(Ring::gf(2));
  Relation r = rel_identity(g2, 1);
  CHECK_KIND(relation_to_corelation(f, r), ErrorKind::NotAbelian);
  CHECK_KIND(relation_to_corelation(pf, r), ErrorKind::NotAbelian);
  CHECK_KIND(relation_to_corelation(z, r), ErrorKind::NotAbelian);
  CHECK_KIND(corelation_to_relation(f, corel_identity(f, 1)), ErrorKind::NotAbelian);
  CHECK_KIND(corelation_to_relation(pf, corel_identity(pf, 1)), ErrorKind::NotAbelian);
  CHECK_KIND(corelation_to_relation(z, corel_identity(z, 1)), ErrorKind::NotAbelian);
}

TEST_CASE("ER corelations") {
  FinAmbient f;
  CHECK(er_from_corelation(f, corel_identity(f, 1)) == Partition(2, {{0, 1}}));
  auto c = gamma(f, Cospan<FinMap>{fn(1, {0, 0}), fn(1, {0})});
  CHECK(format_partition(2, er_from_corelation(f, c).blocks()) == "{{x0,x1,y0}}");
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t m = 0; n + m <= 4; ++m) {
      for (const auto& p : all_partitions(n + m)) {
        auto corel = corelation_from_partition(f, n, m, p);
        CHECK(er_from_corelation(f, corel) == p);
        CHECK(gamma(f, corel.rep) == corel);
      }
    }
  }
  CHECK_KIND(corelation_from_partition(f, 1, 1, Partition(3, {{0, 1, 2}})), ErrorKind::TypeMismatch);
}

TEST_CASE("PER corelations") {
  using E = ParMap::Entry;
  ParAmbient pf;
  auto c = gamma(pf, Cospan<ParMap>{ParMap(1, {E(), E(0)}), ParMap(1, {E(0)})});
  auto p = per_from_corelation(pf, c);
  CHECK(p == make_partial_partition(3, {{1, 2}}));
  CHECK(format_partition(2, p.blocks) == "{{x1,y0}}");
  CHECK(per_from_corelation(pf, corel_identity(pf, 1)) == make_partial_partition(2, {{0, 1}}));
  CHECK_KIND(make_partial_partition(2, {{0, 1}, {1}}), ErrorKind::TypeMismatch);
  for (std::size_t n = 0; n <= 2; ++n) {
    for (std::size_t m = 0; m <= 2; ++m) {
      // Every partial partition of n + m: a partition of n + m + 1 with the
      // block holding the extra point dropped.
      for (const auto& full : all_partitions(n + m + 1)) {
        std::vector<std::vector<std::size_t>> blocks;
        for (const auto& b : full.blocks()) {
          if (b.back() != n + m) blocks.push_back(b);
        }
        auto pp = make_partial_partition(n + m, blocks);
        auto corel = corelation_from_partial_partition(pf, n, m, pp);
        CHECK(per_from_corelation(pf, corel) == pp);
        CHECK(gamma(pf, corel.rep) == corel);
      }
    }
  }
}

TEST_CASE("corelation literal round trip") {
  MatrixAmbient z(Ring::integer());
  auto c = gamma(z, parse_cospan(z, "cospan { left = mat z 1x1 : [[2]], right = mat z 1x1 : [[2]] }"));
  CHECK(gamma(z, parse_cospan(z, format_cospan(z, c.rep))) == c);
}
