#include <random>

#include "corelate/ambient.hpp"
#include "corelate/linmap.hpp"
#include "corelate/literal.hpp"
#include "support.hpp"

using namespace corelate;

namespace {

const Ring Z = Ring::integer();
const Ring Q = Ring::rational();
const Ring G2 = Ring::gf(2);
const Ring G5 = Ring::gf(5);

ExactMatrix M(const Ring& r, std::size_t rows, std::size_t cols, std::vector<long> e) {
  return ExactMatrix::from_ints(r, rows, cols, e);
}

ExactMatrix random_matrix(const Ring& r, std::size_t rows, std::size_t cols, long e, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-e, e);
  std::vector<long> v(rows * cols);
  for (auto& x : v) x = d(rng);
  return M(r, rows, cols, v);
}

bool is_unimodular(const ExactMatrix& u) { return abs(determinant(u).value()) == 1; }

}  // namespace

TEST_CASE("mat_compose") {
  ExactMatrix a = M(Q, 2, 3, {1, 0, 2, 0, 1, -1});
  CHECK(multiply(ExactMatrix::identity(Q, 2), a) == a);
  CHECK(compose(M(G2, 2, 1, {1, 1}), M(G2, 1, 2, {1, 1})) == M(G2, 1, 1, {0}));
  CHECK_KIND(multiply(M(G2, 1, 1, {1}), M(Q, 1, 1, {1})), ErrorKind::RingMismatch);
  CHECK_KIND(compose(M(Q, 2, 2, {1, 0, 0, 1}), M(Q, 1, 1, {1})), ErrorKind::TypeMismatch);
}

TEST_CASE("mat_tensor") {
  ExactMatrix a = M(Z, 2, 1, {1, 2});
  CHECK(tensor(a, ExactMatrix(Z, 0, 0)) == a);
  CHECK(tensor(M(Z, 1, 1, {2}), M(Z, 1, 1, {3})) == M(Z, 2, 2, {2, 0, 0, 3}));
  CHECK(tensor(ExactMatrix::identity(Z, 1), ExactMatrix::identity(Z, 1)) == ExactMatrix::identity(Z, 2));
  CHECK_KIND(tensor(M(Z, 1, 1, {1}), M(Q, 1, 1, {1})), ErrorKind::RingMismatch);
}

TEST_CASE("kernel_basis") {
  ExactMatrix k = kernel_basis(ExactMatrix(Q, 1, 2));
  CHECK(k.cols() == 2);
  CHECK(rank(k) == 2);
  CHECK(kernel_basis(M(G2, 1, 2, {1, 1})) == M(G2, 2, 1, {1, 1}));
  ExactMatrix kz = kernel_basis(M(Z, 1, 2, {2, -2}));
  CHECK(kz.cols() == 1);
  CHECK(multiply(M(Z, 1, 2, {2, -2}), kz).is_zero());
  CHECK(is_split_mono(kz));
}

TEST_CASE("kernel_basis properties") {
  std::mt19937_64 rng(3);
  for (const Ring& r : {G2, G5, Q, Z}) {
    for (int i = 0; i < 200; ++i) {
      std::uniform_int_distribution<std::size_t> d(0, 4);
      ExactMatrix a = random_matrix(r, d(rng), d(rng), 3, rng);
      ExactMatrix k = kernel_basis(a);
      CHECK(multiply(a, k).is_zero());
      CHECK(k.cols() == a.cols() - rank(a));
      CHECK(rank(k) == k.cols());
      if (!r.is_field()) CHECK(is_split_mono(k));
    }
  }
}

TEST_CASE("snf examples") {
  auto s = snf(ExactMatrix::identity(Z, 3));
  CHECK(s.D == ExactMatrix::identity(Z, 3));
  s = snf(ExactMatrix(Z, 2, 3));
  CHECK(s.D.is_zero());
  ExactMatrix a = M(Z, 2, 2, {2, 4, 6, 8});
  s = snf(a);
  CHECK(s.D == M(Z, 2, 2, {2, 0, 0, 4}));
  CHECK(multiply(multiply(s.U, a), s.V) == s.D);
  CHECK(is_unimodular(s.U));
  CHECK(is_unimodular(s.V));
  CHECK_KIND(snf(M(Q, 1, 1, {1})), ErrorKind::RingMismatch);
}

TEST_CASE("snf invariants on random integer matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> d(0, 4);
  for (int i = 0; i < 300; ++i) {
    ExactMatrix a = random_matrix(Z, d(rng), d(rng), 9, rng);
    auto s = snf(a);
    CHECK(multiply(multiply(s.U, a), s.V) == s.D);
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
    const std::size_t k = std::min(a.rows(), a.cols());
    for (std::size_t j = 0; j + 1 < k; ++j) {
      BigInt x = s.D.at(j, j).value().get_num(), y = s.D.at(j + 1, j + 1).value().get_num();
      CHECK(x >= 0);
      if (x == 0) CHECK(y == 0);
      else CHECK(y % x == 0);
    }
  }
}

TEST_CASE("field_factorize") {
  ExactMatrix a = M(Q, 2, 2, {1, 2, 3, 4});
  auto f = field_factorize(a);
  CHECK(compose(f.epi, f.mono) == a);
  CHECK(f.mono.rows() == 2);
  CHECK(f.mono.cols() == 2);
  CHECK(is_epi_class(f.epi));
  auto z = field_factorize(ExactMatrix(Q, 3, 2));
  CHECK(z.epi.rows() == 0);
  CHECK(z.epi.cols() == 2);
  CHECK(z.mono.rows() == 3);
  CHECK(z.mono.cols() == 0);
  auto g = field_factorize(M(G2, 2, 1, {1, 1}));
  CHECK(g.epi == M(G2, 1, 1, {1}));
  CHECK(g.mono == M(G2, 2, 1, {1, 1}));
  CHECK_KIND(field_factorize(M(Z, 1, 1, {1})), ErrorKind::RingMismatch);
}

TEST_CASE("field_factorize properties") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> d(0, 4);
  for (const Ring& r : {G2, G5, Q}) {
    for (int i = 0; i < 150; ++i) {
      ExactMatrix a = random_matrix(r, d(rng), d(rng), 3, rng);
      auto f = field_factorize(a);
      CHECK(compose(f.epi, f.mono) == a);
      CHECK(f.epi.rows() == rank(a));
      CHECK(rank(f.epi) == rank(a));
      CHECK(is_mono_class(f.mono));
      // Precomposing with an invertible G leaves the mono part unchanged.
      ExactMatrix g = random_matrix(r, a.cols(), a.cols(), 3, rng);
      if (rank(g) == a.cols()) CHECK(field_factorize(multiply(a, g)).mono == f.mono);
    }
  }
}

TEST_CASE("pid_factorize") {
  auto f = pid_factorize(M(Z, 1, 1, {2}));
  CHECK(f.epi == M(Z, 1, 1, {2}));
  CHECK(f.mono == M(Z, 1, 1, {1}));
  f = pid_factorize(M(Z, 2, 1, {2, 0}));
  CHECK(f.epi == M(Z, 1, 1, {2}));
  CHECK(f.mono == M(Z, 2, 1, {1, 0}));
  f = pid_factorize(M(Z, 1, 1, {0}));
  CHECK(f.epi.rows() == 0);
  CHECK(f.mono.cols() == 0);
  CHECK_KIND(pid_factorize(M(Q, 1, 1, {1})), ErrorKind::RingMismatch);

  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> d(0, 4);
  for (int i = 0; i < 300; ++i) {
    ExactMatrix a = random_matrix(Z, d(rng), d(rng), 4, rng);
    auto p = pid_factorize(a);
    CHECK(compose(p.epi, p.mono) == a);
    CHECK(is_split_mono(p.mono));
    CHECK(p.mono.cols() == rank(a));
    CHECK(is_epi_class(p.epi));
  }
}

TEST_CASE("is_split_mono") {
  CHECK(is_split_mono(ExactMatrix::identity(Z, 2)));
  CHECK_FALSE(is_split_mono(M(Z, 1, 1, {2})));
  CHECK(is_split_mono(M(Z, 2, 1, {1, 0})));
  CHECK_FALSE(is_split_mono(M(Z, 2, 2, {1, 1, 0, 2})));
  CHECK(is_split_mono(M(Z, 2, 1, {2, 3})));
  CHECK(multiply(left_inverse(M(Z, 2, 1, {2, 3})), M(Z, 2, 1, {2, 3})) == ExactMatrix::identity(Z, 1));
}

TEST_CASE("mat_pullback") {
  auto p = pullback(ExactMatrix::identity(Q, 2), ExactMatrix::identity(Q, 2));
  CHECK(p.left.cols() == 2);
  CHECK(p.left == p.right);
  p = pullback(M(Q, 1, 1, {2}), M(Q, 1, 1, {1}));
  CHECK(p.left.cols() == 1);
  CHECK(multiply(M(Q, 1, 1, {2}), p.left) == p.right);
  MatrixAmbient qa(Q);
  CHECK(qa.canonical_span({p.left, p.right}) == qa.canonical_span({M(Q, 1, 1, {1}), M(Q, 1, 1, {2})}));
  p = pullback(M(Z, 1, 1, {2}), M(Z, 1, 1, {2}));
  CHECK(p.left.cols() == 1);
  CHECK(p.left == p.right);
  CHECK(is_split_mono(p.left));
  CHECK_KIND(pullback(M(Q, 1, 1, {1}), M(Q, 2, 1, {1, 1})), ErrorKind::TypeMismatch);
}

TEST_CASE("mat_pushout") {
  auto q = pushout(ExactMatrix::identity(Q, 2), ExactMatrix::identity(Q, 2));
  CHECK(q.left.rows() == 2);
  CHECK(q.left == q.right);
  q = pushout(M(G2, 1, 1, {1}), M(G2, 1, 1, {0}));
  CHECK(q.left == M(G2, 1, 1, {0}));
  CHECK(q.right == M(G2, 1, 1, {1}));
  q = pushout(M(Z, 1, 1, {2}), M(Z, 1, 1, {2}));
  CHECK(q.left.rows() == 1);
  CHECK(q.left == q.right);
  CHECK(abs(q.left.at(0, 0).value()) == 1);
  CHECK_KIND(pushout(M(Q, 1, 1, {1}), M(Q, 1, 2, {1, 1})), ErrorKind::TypeMismatch);
}

TEST_CASE("pullback and pushout universality over GF(2)") {
  MatrixAmbient amb(G2);
  for (std::size_t a = 0; a <= 2; ++a) {
    for (std::size_t x = 0; x <= 2; ++x) {
      for (std::size_t y = 0; y <= 2; ++y) {
        for (const auto& f : amb.all_maps(x, a, 1)) {
          for (const auto& g : amb.all_maps(y, a, 1)) {
            auto p = pullback(f, g);
            REQUIRE(compose(p.left, f) == compose(p.right, g));
            for (std::size_t w = 0; w <= 2; ++w) {
              auto into = amb.all_maps(w, p.left.dom(), 1);
              for (const auto& u : amb.all_maps(w, x, 1)) {
                for (const auto& v : amb.all_maps(w, y, 1)) {
                  if (!(compose(u, f) == compose(v, g))) continue;
                  int count = 0;
                  for (const auto& k : into) count += compose(k, p.left) == u && compose(k, p.right) == v;
                  CHECK(count == 1);
                }
              }
            }
          }
        }
        for (const auto& f : amb.all_maps(a, x, 1)) {
          for (const auto& g : amb.all_maps(a, y, 1)) {
            auto q = pushout(f, g);
            REQUIRE(compose(f, q.left) == compose(g, q.right));
            for (std::size_t w = 0; w <= 2; ++w) {
              auto out = amb.all_maps(q.left.cod(), w, 1);
              for (const auto& u : amb.all_maps(x, w, 1)) {
                for (const auto& v : amb.all_maps(y, w, 1)) {
                  if (!(compose(f, u) == compose(g, v))) continue;
                  int count = 0;
                  for (const auto& k : out) count += compose(q.left, k) == u && compose(q.right, k) == v;
                  CHECK(count == 1);
                }
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("integer pushouts are torsion-free and self-dual") {
  MatrixAmbient amb(Z);
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> d(0, 3);
  for (int i = 0; i < 300; ++i) {
    std::size_t a = d(rng), x = d(rng), y = d(rng);
    ExactMatrix f = random_matrix(Z, x, a, 3, rng), g = random_matrix(Z, y, a, 3, rng);
    auto q = pushout(f, g);
    CHECK(compose(f, q.left) == compose(g, q.right));
    // The copairing of the legs is onto up to torsion: full row rank.
    CHECK(is_epi_class(hconcat(q.left, q.right)));
    auto p = pullback(f.transpose(), g.transpose());
    Cospan<ExactMatrix> dual{p.left.transpose(), p.right.transpose()};
    CHECK(amb.canonical_cospan(dual) == amb.canonical_cospan(q));
  }
}

TEST_CASE("bistability over fields") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> d(0, 4);
  for (const Ring& r : {G2, G5, Q}) {
    for (int i = 0; i < 150; ++i) {
      std::size_t a = d(rng), x = d(rng), y = d(rng);
      ExactMatrix f = random_matrix(r, a, x, 2, rng), g = random_matrix(r, a, y, 2, rng);
      if (is_epi_class(f)) CHECK(is_epi_class(pullback(f, g).right));
      ExactMatrix h = random_matrix(r, x, a, 2, rng), k = random_matrix(r, y, a, 2, rng);
      if (is_mono_class(h)) CHECK(is_mono_class(pushout(h, k).right));
    }
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(M(Z, 2, 2, {2, 4, 6, 8})).value() == -8);
  CHECK(determinant(M(Z, 3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 10})).value() == -3);
  CHECK(determinant(M(Q, 2, 2, {1, 2, 3, 4})).value() == -2);
  CHECK(determinant(ExactMatrix(Z, 0, 0)).value() == 1);
}

TEST_CASE("matrix literals") {
  ExactMatrix a = parse_matrix("mat Q 2x3 : [[1,0,2],[0,1,-1]]");
  CHECK(a == M(Q, 2, 3, {1, 0, 2, 0, 1, -1}));
  CHECK(format(a) == "mat q 2x3 : [[1,0,2],[0,1,-1]]");
  CHECK(parse_matrix(format(a)) == a);
  CHECK(parse_matrix("mat q 1x1 : [[1/2]]").at(0, 0) == Q.parse("1/2"));
  CHECK(parse_matrix("mat z 0x2 : []").cols() == 2);
  CHECK(parse_matrix("mat gf5 1x2 : [[7,-1]]") == M(G5, 1, 2, {2, 4}));
  CHECK_KIND(parse_matrix("mat z 1x2 : [[1]]"), ErrorKind::InvalidLiteral);
  CHECK_KIND(parse_matrix("mat z 1x1 : [[1/2]]"), ErrorKind::InvalidLiteral);
  CHECK_KIND(parse_matrix("mat gf4 1x1 : [[1]]"), ErrorKind::InvalidLiteral);
  CHECK_KIND(parse_morphism(MatrixAmbient(Z), "mat q 1x1 : [[1]]"), ErrorKind::RingMismatch);
}
