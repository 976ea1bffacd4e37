#include "corelate/linmap.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "corelate/error.hpp"

namespace corelate {

namespace {

void require_same_ring(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.ring() == b.ring())) {
    fail(ErrorKind::RingMismatch, "ring " + a.ring().display_name() + " vs " + b.ring().display_name());
  }
}

std::string dims(const ExactMatrix& a) { return std::to_string(a.rows()) + "x" + std::to_string(a.cols()); }

// Mutable scratch used by the elimination routines.
struct Work {
  Ring ring;
  std::size_t rows, cols;
  std::vector<Scalar> e;

  explicit Work(const ExactMatrix& a) : ring(a.ring()), rows(a.rows()), cols(a.cols()), e(a.entries()) {}

  Scalar& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }

  ExactMatrix freeze() const { return ExactMatrix(ring, rows, cols, e); }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
  }
  // row i += c * row j
  void add_row(std::size_t i, std::size_t j, const Scalar& c) {
    if (c.is_zero()) return;
    for (std::size_t k = 0; k < cols; ++k) at(i, k) = ring.add(at(i, k), ring.mul(c, at(j, k)));
  }
  // col i += c * col j
  void add_col(std::size_t i, std::size_t j, const Scalar& c) {
    if (c.is_zero()) return;
    for (std::size_t k = 0; k < rows; ++k) at(k, i) = ring.add(at(k, i), ring.mul(c, at(k, j)));
  }
  void scale_row(std::size_t i, const Scalar& u) {
    for (std::size_t k = 0; k < cols; ++k) at(i, k) = ring.mul(u, at(i, k));
  }
  void scale_col(std::size_t i, const Scalar& u) {
    for (std::size_t k = 0; k < rows; ++k) at(k, i) = ring.mul(u, at(k, i));
  }
};

// D = U A V, tracking inverses. Row operations act on U from the left and on
// Uinv from the right; column operations dually.
struct Elimination {
  Work D, U, Uinv, V, Vinv;
  const Ring& ring;

  explicit Elimination(const ExactMatrix& a)
      : D(a),
        U(ExactMatrix::identity(a.ring(), a.rows())),
        Uinv(ExactMatrix::identity(a.ring(), a.rows())),
        V(ExactMatrix::identity(a.ring(), a.cols())),
        Vinv(ExactMatrix::identity(a.ring(), a.cols())),
        ring(D.ring) {}

  void swap_rows(std::size_t i, std::size_t j) {
    D.swap_rows(i, j);
    U.swap_rows(i, j);
    Uinv.swap_cols(i, j);
  }
  void add_row(std::size_t i, std::size_t j, const Scalar& c) {
    D.add_row(i, j, c);
    U.add_row(i, j, c);
    Uinv.add_col(j, i, ring.neg(c));
  }
  void scale_row(std::size_t i, const Scalar& u) {
    D.scale_row(i, u);
    U.scale_row(i, u);
    Uinv.scale_col(i, ring.inv(u));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    D.swap_cols(i, j);
    V.swap_cols(i, j);
    Vinv.swap_rows(i, j);
  }
  void add_col(std::size_t i, std::size_t j, const Scalar& c) {
    D.add_col(i, j, c);
    V.add_col(i, j, c);
    Vinv.add_row(j, i, ring.neg(c));
  }
};

// Smallest-norm nonzero entry of the trailing block, row-major.
std::optional<std::pair<std::size_t, std::size_t>> min_entry(Work& d, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  BigInt best_norm;
  for (std::size_t i = t; i < d.rows; ++i) {
    for (std::size_t j = t; j < d.cols; ++j) {
      if (d.at(i, j).is_zero()) continue;
      BigInt n = d.ring.norm(d.at(i, j));
      if (!best || n < best_norm) {
        best = {i, j};
        best_norm = n;
      }
    }
  }
  return best;
}

}  // namespace

ExactMatrix::ExactMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, ring.zero()) {}

ExactMatrix::ExactMatrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : ring_(ring), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    fail(ErrorKind::TypeMismatch, "expected " + std::to_string(rows_ * cols_) + " entries, got " +
                                      std::to_string(entries_.size()));
  }
  for (auto& x : entries_) x = ring_.element(x.value());
}

ExactMatrix ExactMatrix::identity(Ring ring, std::size_t n) {
  ExactMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, ring.one());
  return m;
}

ExactMatrix ExactMatrix::from_ints(Ring ring, std::size_t rows, std::size_t cols, const std::vector<long>& entries) {
  std::vector<Scalar> e;
  e.reserve(entries.size());
  for (long v : entries) e.push_back(ring.from_int(v));
  return ExactMatrix(ring, rows, cols, std::move(e));
}

ExactMatrix ExactMatrix::symmetry(Ring ring, std::size_t n, std::size_t m) {
  ExactMatrix s(ring, n + m, n + m);
  for (std::size_t i = 0; i < n; ++i) s.set(m + i, i, ring.one());
  for (std::size_t i = 0; i < m; ++i) s.set(i, n + i, ring.one());
  return s;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  }
  return t;
}

ExactMatrix ExactMatrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
  if (r0 > r1 || r1 > rows_ || c0 > c1 || c1 > cols_) fail(ErrorKind::Internal, "block out of range");
  ExactMatrix b(ring_, r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i) {
    for (std::size_t j = c0; j < c1; ++j) b.set(i - r0, j - c0, at(i, j));
  }
  return b;
}

ExactMatrix ExactMatrix::negate() const {
  ExactMatrix n(ring_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) n.entries_[k] = ring_.neg(entries_[k]);
  return n;
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_ring(a, b);
  if (a.cols() != b.rows()) {
    fail(ErrorKind::TypeMismatch, "cannot multiply " + dims(a) + " by " + dims(b));
  }
  const Ring& r = a.ring();
  ExactMatrix c(r, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar s = r.zero();
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        s = r.add(s, r.mul(a.at(i, k), b.at(k, j)));
      }
      c.set(i, j, std::move(s));
    }
  }
  return c;
}

ExactMatrix compose(const ExactMatrix& f, const ExactMatrix& g) {
  require_same_ring(f, g);
  if (f.cod() != g.dom()) {
    fail(ErrorKind::TypeMismatch,
         "codomain " + std::to_string(f.cod()) + " does not match domain " + std::to_string(g.dom()));
  }
  return multiply(g, f);
}

ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_ring(a, b);
  ExactMatrix t(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t.set(i, j, a.at(i, j));
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) t.set(a.rows() + i, a.cols() + j, b.at(i, j));
  }
  return t;
}

ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_ring(a, b);
  if (a.rows() != b.rows()) fail(ErrorKind::TypeMismatch, "hconcat of " + dims(a) + " and " + dims(b));
  ExactMatrix t(a.ring(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t.set(i, j, a.at(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) t.set(i, a.cols() + j, b.at(i, j));
  }
  return t;
}

ExactMatrix vconcat(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_ring(a, b);
  if (a.cols() != b.cols()) fail(ErrorKind::TypeMismatch, "vconcat of " + dims(a) + " and " + dims(b));
  std::vector<Scalar> e = a.entries();
  e.insert(e.end(), b.entries().begin(), b.entries().end());
  return ExactMatrix(a.ring(), a.rows() + b.rows(), a.cols(), std::move(e));
}

ExactMatrix add(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_ring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorKind::TypeMismatch, "adding " + dims(a) + " and " + dims(b));
  std::vector<Scalar> e(a.entries().size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.ring().add(a.entries()[k], b.entries()[k]);
  return ExactMatrix(a.ring(), a.rows(), a.cols(), std::move(e));
}

Diagonalization diagonalize(const ExactMatrix& a) {
  Elimination el(a);
  Work& d = el.D;
  const Ring& ring = el.ring;
  std::size_t t = 0;
  const std::size_t lim = std::min(d.rows, d.cols);
  while (t < lim) {
    auto piv = min_entry(d, t);
    if (!piv) break;
    el.swap_rows(t, piv->first);
    el.swap_cols(t, piv->second);
    while (true) {
      // Clear column t below and row t to the right of the pivot.
      bool dirty = false;
      for (std::size_t i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t).is_zero()) continue;
        el.add_row(i, t, ring.neg(ring.quotient(d.at(i, t), d.at(t, t))));
        if (!d.at(i, t).is_zero()) dirty = true;
      }
      for (std::size_t j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j).is_zero()) continue;
        el.add_col(j, t, ring.neg(ring.quotient(d.at(t, j), d.at(t, t))));
        if (!d.at(t, j).is_zero()) dirty = true;
      }
      if (dirty) {
        // A remainder survived: move the smallest one into the pivot.
        std::size_t bi = t, bj = t;
        BigInt bn = ring.norm(d.at(t, t));
        for (std::size_t i = t + 1; i < d.rows; ++i) {
          if (!d.at(i, t).is_zero() && ring.norm(d.at(i, t)) < bn) {
            bn = ring.norm(d.at(i, t));
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < d.cols; ++j) {
          if (!d.at(t, j).is_zero() && ring.norm(d.at(t, j)) < bn) {
            bn = ring.norm(d.at(t, j));
            bi = t;
            bj = j;
          }
        }
        el.swap_rows(t, bi);
        el.swap_cols(t, bj);
        continue;
      }
      if (ring.is_field()) break;
      // Divisibility: fold a row holding a non-multiple into the pivot row.
      std::optional<std::size_t> bad;
      const BigInt& p = d.at(t, t).value().get_num();
      for (std::size_t i = t + 1; i < d.rows && !bad; ++i) {
        for (std::size_t j = t + 1; j < d.cols; ++j) {
          const BigInt& x = d.at(i, j).value().get_num();
          if (x % p != 0) {
            bad = i;
            break;
          }
        }
      }
      if (!bad) break;
      el.add_row(t, *bad, ring.one());
    }
    el.scale_row(t, ring.normalizing_unit(d.at(t, t)));
    ++t;
  }
  return {el.U.freeze(), el.Uinv.freeze(), d.freeze(), el.V.freeze(), el.Vinv.freeze(), t};
}

SmithDecomposition snf(const ExactMatrix& a) {
  if (a.ring().kind() != RingKind::Integer) {
    fail(ErrorKind::RingMismatch, "Smith normal form needs Z, got " + a.ring().display_name());
  }
  Diagonalization dg = diagonalize(a);
  return {dg.U, dg.D, dg.V};
}

std::size_t rank(const ExactMatrix& a) { return diagonalize(a).rank; }

ExactMatrix row_canonical(const ExactMatrix& a) {
  Work w(a);
  const Ring& ring = w.ring;
  std::size_t p = 0;
  for (std::size_t c = 0; c < w.cols && p < w.rows; ++c) {
    // Euclid down column c until a single nonzero remains at row p.
    while (true) {
      std::optional<std::size_t> best;
      BigInt bn;
      for (std::size_t i = p; i < w.rows; ++i) {
        if (w.at(i, c).is_zero()) continue;
        BigInt n = ring.norm(w.at(i, c));
        if (!best || n < bn) {
          best = i;
          bn = n;
        }
      }
      if (!best) break;
      w.swap_rows(p, *best);
      bool rest = false;
      for (std::size_t i = p + 1; i < w.rows; ++i) {
        if (w.at(i, c).is_zero()) continue;
        w.add_row(i, p, ring.neg(ring.quotient(w.at(i, c), w.at(p, c))));
        if (!w.at(i, c).is_zero()) rest = true;
      }
      if (!rest) break;
    }
    if (w.at(p, c).is_zero()) continue;
    w.scale_row(p, ring.normalizing_unit(w.at(p, c)));
    for (std::size_t i = 0; i < p; ++i) {
      if (w.at(i, c).is_zero()) continue;
      w.add_row(i, p, ring.neg(ring.quotient(w.at(i, c), w.at(p, c))));
    }
    ++p;
  }
  return w.freeze();
}

ExactMatrix col_canonical(const ExactMatrix& a) { return row_canonical(a.transpose()).transpose(); }

ExactMatrix row_space_basis(const ExactMatrix& a) {
  ExactMatrix r = row_canonical(a);
  std::size_t k = 0;
  while (k < r.rows()) {
    bool zero = true;
    for (std::size_t j = 0; j < r.cols() && zero; ++j) zero = r.at(k, j).is_zero();
    if (zero) break;
    ++k;
  }
  return r.block(0, k, 0, r.cols());
}

ExactMatrix kernel_basis(const ExactMatrix& a) {
  Diagonalization dg = diagonalize(a);
  return col_canonical(dg.V.block(0, a.cols(), dg.rank, a.cols()));
}

bool is_split_mono(const ExactMatrix& a) {
  if (a.ring().kind() != RingKind::Integer) {
    fail(ErrorKind::RingMismatch, "split-mono test is defined over Z, got " + a.ring().display_name());
  }
  Diagonalization dg = diagonalize(a);
  if (dg.rank != a.cols()) return false;
  for (std::size_t i = 0; i < dg.rank; ++i) {
    if (!(dg.D.at(i, i) == a.ring().one())) return false;
  }
  return true;
}

bool is_mono_class(const ExactMatrix& a) {
  if (a.ring().is_field()) return rank(a) == a.cols();
  return is_split_mono(a);
}

bool is_epi_class(const ExactMatrix& a) { return rank(a) == a.rows(); }

ExactMatrix left_inverse(const ExactMatrix& a) {
  Diagonalization dg = diagonalize(a);
  const std::size_t n = a.cols();
  if (dg.rank != n) fail(ErrorKind::Internal, "left inverse of a non-mono " + dims(a));
  for (std::size_t i = 0; i < n; ++i) {
    if (!(dg.D.at(i, i) == a.ring().one())) fail(ErrorKind::Internal, "left inverse of a non-split mono");
  }
  // a = Uinv [I;0] Vinv, so V [I 0] U is a left inverse.
  return multiply(dg.V, dg.U.block(0, n, 0, a.rows()));
}

ExactMatrix right_inverse(const ExactMatrix& a) {
  Diagonalization dg = diagonalize(a);
  const std::size_t m = a.rows();
  if (dg.rank != m) fail(ErrorKind::Internal, "right inverse of a non-epi " + dims(a));
  for (std::size_t i = 0; i < m; ++i) {
    if (!(dg.D.at(i, i) == a.ring().one())) fail(ErrorKind::Internal, "right inverse of a non-split epi");
  }
  return multiply(dg.V.block(0, a.cols(), 0, m), dg.U);
}

Factorization<ExactMatrix> factorize(const ExactMatrix& a) {
  Diagonalization dg = diagonalize(a);
  ExactMatrix mono = col_canonical(dg.Uinv.block(0, a.rows(), 0, dg.rank));
  ExactMatrix epi = multiply(left_inverse(mono), a);
  return {std::move(epi), std::move(mono)};
}

Factorization<ExactMatrix> field_factorize(const ExactMatrix& a) {
  if (!a.ring().is_field()) fail(ErrorKind::RingMismatch, "field factorisation over " + a.ring().display_name());
  return factorize(a);
}

Factorization<ExactMatrix> pid_factorize(const ExactMatrix& a) {
  if (a.ring().kind() != RingKind::Integer) {
    fail(ErrorKind::RingMismatch, "PID factorisation over " + a.ring().display_name());
  }
  return factorize(a);
}

Span<ExactMatrix> pullback(const ExactMatrix& f, const ExactMatrix& g) {
  require_same_ring(f, g);
  if (f.cod() != g.cod()) {
    fail(ErrorKind::TypeMismatch, "pullback of maps into " + std::to_string(f.cod()) + " and " + std::to_string(g.cod()));
  }
  ExactMatrix k = kernel_basis(hconcat(f, g.negate()));
  return {k.block(0, f.dom(), 0, k.cols()), k.block(f.dom(), k.rows(), 0, k.cols())};
}

Cospan<ExactMatrix> pushout(const ExactMatrix& f, const ExactMatrix& g) {
  require_same_ring(f, g);
  if (f.dom() != g.dom()) {
    fail(ErrorKind::TypeMismatch, "pushout of maps from " + std::to_string(f.dom()) + " and " + std::to_string(g.dom()));
  }
  ExactMatrix s = vconcat(f, g.negate());
  Diagonalization dg = diagonalize(s);
  // Rows rank.. of U annihilate exactly the saturation of the image of s.
  ExactMatrix q = row_canonical(dg.U.block(dg.rank, s.rows(), 0, s.rows()));
  return {q.block(0, q.rows(), 0, f.cod()), q.block(0, q.rows(), f.cod(), q.cols())};
}

Scalar determinant(const ExactMatrix& a) {
  if (a.rows() != a.cols()) fail(ErrorKind::TypeMismatch, "determinant of non-square " + dims(a));
  const std::size_t n = a.rows();
  const Ring& ring = a.ring();
  if (ring.is_field()) {
    Work w(a);
    Scalar det = ring.one();
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && w.at(p, c).is_zero()) ++p;
      if (p == n) return ring.zero();
      if (p != c) {
        w.swap_rows(p, c);
        det = ring.neg(det);
      }
      det = ring.mul(det, w.at(c, c));
      Scalar inv = ring.inv(w.at(c, c));
      for (std::size_t i = c + 1; i < n; ++i) {
        if (!w.at(i, c).is_zero()) w.add_row(i, c, ring.neg(ring.mul(w.at(i, c), inv)));
      }
    }
    return det;
  }
  // Bareiss over Z.
  std::vector<BigInt> m(n * n);
  for (std::size_t k = 0; k < n * n; ++k) m[k] = a.entries()[k].value().get_num();
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * n + j]; };
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && at(p, c) == 0) ++p;
    if (p == n) return ring.zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(p, j), at(c, j));
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(c, c) - at(i, c) * at(c, j)) / prev;
      }
      at(i, c) = 0;
    }
    prev = at(c, c);
  }
  return ring.from_bigint(n == 0 ? BigInt(1) : BigInt(sign * at(n - 1, n - 1)));
}

std::string format(const ExactMatrix& a) {
  std::string s = "mat " + a.ring().tag() + " " + dims(a) + " : [";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) s += ',';
    s += '[';
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) s += ',';
      s += a.ring().format(a.at(i, j));
    }
    s += ']';
  }
  return s + "]";
}

}  // namespace corelate
