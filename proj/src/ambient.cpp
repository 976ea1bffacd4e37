#include "corelate/ambient.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "corelate/error.hpp"

namespace corelate {

namespace {

// Mixed-radix counter over `len` digits in [0, radix).
template <class F>
void for_each_word(std::size_t len, std::size_t radix, F&& visit) {
  if (radix == 0) {
    if (len == 0) visit(std::vector<std::size_t>{});
    return;
  }
  std::vector<std::size_t> w(len, 0);
  while (true) {
    visit(w);
    std::size_t i = 0;
    while (i < len && ++w[i] == radix) w[i++] = 0;
    if (i == len) return;
  }
}

std::vector<std::size_t> first_occurrence_relabel(std::size_t apex, const std::vector<std::optional<std::size_t>>& hits) {
  const std::size_t unset = apex;
  std::vector<std::size_t> relabel(apex, unset);
  std::size_t next = 0;
  for (const auto& h : hits) {
    if (h && relabel[*h] == unset) relabel[*h] = next++;
  }
  for (auto& r : relabel) {
    if (r == unset) r = next++;
  }
  return relabel;
}

}  // namespace

// ---------------------------------------------------------------------------
// F

std::pair<FinMap, FinMap> FinAmbient::injections(std::size_t n, std::size_t m) const {
  return {tensor(identity(n), FinMap::initial(m)), tensor(FinMap::initial(n), identity(m))};
}

FinMap FinAmbient::mediate_out(const FinMap& q1, const FinMap& q2, const FinMap& f, const FinMap& g) const {
  const std::size_t apex = q1.cod();
  std::vector<std::optional<std::size_t>> t(apex);
  for (std::size_t x = 0; x < q1.dom(); ++x) {
    if (!t[q1(x)]) t[q1(x)] = f(x);
  }
  for (std::size_t y = 0; y < q2.dom(); ++y) {
    if (!t[q2(y)]) t[q2(y)] = g(y);
  }
  std::vector<std::size_t> out(apex);
  for (std::size_t p = 0; p < apex; ++p) {
    if (!t[p]) fail(ErrorKind::Internal, "pushout apex element not hit by either leg");
    out[p] = *t[p];
  }
  return FinMap(f.cod(), std::move(out));
}

FinMap FinAmbient::mediate_in(const FinMap& p1, const FinMap& p2, const FinMap& f, const FinMap& g) const {
  std::vector<std::size_t> out(f.dom());
  for (std::size_t w = 0; w < f.dom(); ++w) {
    std::size_t k = 0;
    while (k < p1.dom() && !(p1(k) == f(w) && p2(k) == g(w))) ++k;
    if (k == p1.dom()) fail(ErrorKind::Internal, "cone does not factor through the pullback");
    out[w] = k;
  }
  return FinMap(p1.dom(), std::move(out));
}

std::optional<FinMap> FinAmbient::lift_through(const FinMap& m, const FinMap& h) const {
  if (m.cod() != h.cod()) return std::nullopt;
  std::vector<std::size_t> out(h.dom());
  for (std::size_t x = 0; x < h.dom(); ++x) {
    std::size_t y = 0;
    while (y < m.dom() && m(y) != h(x)) ++y;
    if (y == m.dom()) return std::nullopt;
    out[x] = y;
  }
  return FinMap(m.dom(), std::move(out));
}

Cospan<FinMap> FinAmbient::canonical_cospan(const Cospan<FinMap>& c) const {
  std::vector<std::optional<std::size_t>> hits(c.left.table().begin(), c.left.table().end());
  hits.insert(hits.end(), c.right.table().begin(), c.right.table().end());
  const std::size_t apex = c.left.cod();
  std::vector<std::size_t> r = first_occurrence_relabel(apex, hits);
  FinMap iso(apex, r);
  return {compose(c.left, iso), compose(c.right, iso)};
}

Span<FinMap> FinAmbient::canonical_span(const Span<FinMap>& s) const {
  std::vector<std::size_t> order(s.left.dom());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(s.left(a), s.right(a)) < std::pair(s.left(b), s.right(b));
  });
  std::vector<std::size_t> l, r;
  for (std::size_t k : order) {
    l.push_back(s.left(k));
    r.push_back(s.right(k));
  }
  return {FinMap(s.left.cod(), std::move(l)), FinMap(s.right.cod(), std::move(r))};
}

double FinAmbient::map_count(std::size_t dom, std::size_t cod, std::size_t) const {
  return std::pow(static_cast<double>(cod), static_cast<double>(dom));
}

std::vector<FinMap> FinAmbient::all_maps(std::size_t dom, std::size_t cod, std::size_t) const {
  std::vector<FinMap> out;
  for_each_word(dom, cod, [&](const std::vector<std::size_t>& w) { out.emplace_back(cod, w); });
  return out;
}

FinMap FinAmbient::random_map(std::size_t dom, std::size_t cod, std::size_t, std::mt19937_64& rng) const {
  if (cod == 0) {
    if (dom != 0) fail(ErrorKind::Internal, "no map " + std::to_string(dom) + " -> 0");
    return FinMap(0, {});
  }
  std::uniform_int_distribution<std::size_t> d(0, cod - 1);
  std::vector<std::size_t> t(dom);
  for (auto& v : t) v = d(rng);
  return FinMap(cod, std::move(t));
}

// ---------------------------------------------------------------------------
// PF

std::pair<ParMap, ParMap> ParAmbient::injections(std::size_t n, std::size_t m) const {
  FinAmbient f;
  auto [a, b] = f.injections(n, m);
  return {ParMap(a), ParMap(b)};
}

ParMap ParAmbient::mediate_out(const ParMap& q1, const ParMap& q2, const ParMap& f, const ParMap& g) const {
  const std::size_t apex = q1.cod();
  std::vector<std::optional<ParMap::Entry>> t(apex);
  for (std::size_t x = 0; x < q1.dom(); ++x) {
    if (q1(x) && !t[*q1(x)]) t[*q1(x)] = f(x);
  }
  for (std::size_t y = 0; y < q2.dom(); ++y) {
    if (q2(y) && !t[*q2(y)]) t[*q2(y)] = g(y);
  }
  std::vector<ParMap::Entry> out(apex);
  for (std::size_t p = 0; p < apex; ++p) {
    if (!t[p]) fail(ErrorKind::Internal, "pushout apex element not hit by either leg");
    out[p] = *t[p];
  }
  return ParMap(f.cod(), std::move(out));
}

ParMap ParAmbient::mediate_in(const ParMap& p1, const ParMap& p2, const ParMap& f, const ParMap& g) const {
  std::vector<ParMap::Entry> out(f.dom());
  for (std::size_t w = 0; w < f.dom(); ++w) {
    if (!f(w) && !g(w)) continue;
    std::size_t k = 0;
    while (k < p1.dom() && !(p1(k) == f(w) && p2(k) == g(w))) ++k;
    if (k == p1.dom()) fail(ErrorKind::Internal, "cone does not factor through the pullback");
    out[w] = k;
  }
  return ParMap(p1.dom(), std::move(out));
}

std::optional<ParMap> ParAmbient::lift_through(const ParMap& m, const ParMap& h) const {
  if (m.cod() != h.cod()) return std::nullopt;
  std::vector<ParMap::Entry> out(h.dom());
  for (std::size_t x = 0; x < h.dom(); ++x) {
    if (!h(x)) continue;
    std::size_t y = 0;
    while (y < m.dom() && m(y) != h(x)) ++y;
    if (y == m.dom()) return std::nullopt;
    out[x] = y;
  }
  ParMap k(m.dom(), std::move(out));
  if (!(compose(k, m) == h)) return std::nullopt;
  return k;
}

Cospan<ParMap> ParAmbient::canonical_cospan(const Cospan<ParMap>& c) const {
  std::vector<std::optional<std::size_t>> hits(c.left.table());
  hits.insert(hits.end(), c.right.table().begin(), c.right.table().end());
  const std::size_t apex = c.left.cod();
  ParMap iso(FinMap(apex, first_occurrence_relabel(apex, hits)));
  return {compose(c.left, iso), compose(c.right, iso)};
}

Span<ParMap> ParAmbient::canonical_span(const Span<ParMap>& s) const {
  // Undefined sorts after every defined value.
  auto key = [](const ParMap& f, std::size_t i) { return f(i) ? *f(i) : f.cod(); };
  std::vector<std::size_t> order(s.left.dom());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(key(s.left, a), key(s.right, a)) < std::pair(key(s.left, b), key(s.right, b));
  });
  std::vector<ParMap::Entry> l, r;
  for (std::size_t k : order) {
    l.push_back(s.left(k));
    r.push_back(s.right(k));
  }
  return {ParMap(s.left.cod(), std::move(l)), ParMap(s.right.cod(), std::move(r))};
}

double ParAmbient::map_count(std::size_t dom, std::size_t cod, std::size_t) const {
  return std::pow(static_cast<double>(cod + 1), static_cast<double>(dom));
}

std::vector<ParMap> ParAmbient::all_maps(std::size_t dom, std::size_t cod, std::size_t) const {
  std::vector<ParMap> out;
  for_each_word(dom, cod + 1, [&](const std::vector<std::size_t>& w) {
    std::vector<ParMap::Entry> t(dom);
    for (std::size_t i = 0; i < dom; ++i) {
      if (w[i] < cod) t[i] = w[i];
    }
    out.emplace_back(cod, std::move(t));
  });
  return out;
}

ParMap ParAmbient::random_map(std::size_t dom, std::size_t cod, std::size_t, std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::size_t> d(0, cod);
  std::vector<ParMap::Entry> t(dom);
  for (auto& v : t) {
    std::size_t x = d(rng);
    if (x < cod) v = x;
  }
  return ParMap(cod, std::move(t));
}

// ---------------------------------------------------------------------------
// Matrices

std::string MatrixAmbient::name() const {
  if (ring_.is_field()) return "Mat(" + ring_.display_name() + ")";
  return "fmod(" + ring_.display_name() + ")";
}

std::string MatrixAmbient::sub_name(Sub s) const {
  if (s == Sub::All) return name();
  return ring_.is_field() ? "Mono" : "SplitMono";
}

std::pair<ExactMatrix, ExactMatrix> MatrixAmbient::injections(std::size_t n, std::size_t m) const {
  ExactMatrix zn(ring_, m, 0), zm(ring_, n, 0);
  return {tensor(identity(n), zn), tensor(zm, identity(m))};
}

ExactMatrix MatrixAmbient::mediate_out(const ExactMatrix& q1, const ExactMatrix& q2, const ExactMatrix& f,
                                       const ExactMatrix& g) const {
  return multiply(hconcat(f, g), right_inverse(hconcat(q1, q2)));
}

ExactMatrix MatrixAmbient::mediate_in(const ExactMatrix& p1, const ExactMatrix& p2, const ExactMatrix& f,
                                      const ExactMatrix& g) const {
  return multiply(left_inverse(vconcat(p1, p2)), vconcat(f, g));
}

std::optional<ExactMatrix> MatrixAmbient::lift_through(const ExactMatrix& m, const ExactMatrix& h) const {
  if (m.rows() != h.rows() || !is_mono_class(m)) return std::nullopt;
  ExactMatrix k = multiply(left_inverse(m), h);
  if (!(multiply(m, k) == h)) return std::nullopt;
  return k;
}

Cospan<ExactMatrix> MatrixAmbient::canonical_cospan(const Cospan<ExactMatrix>& c) const {
  ExactMatrix r = row_canonical(hconcat(c.left, c.right));
  return {r.block(0, r.rows(), 0, c.left.cols()), r.block(0, r.rows(), c.left.cols(), r.cols())};
}

Span<ExactMatrix> MatrixAmbient::canonical_span(const Span<ExactMatrix>& s) const {
  ExactMatrix k = col_canonical(vconcat(s.left, s.right));
  return {k.block(0, s.left.rows(), 0, k.cols()), k.block(s.left.rows(), k.rows(), 0, k.cols())};
}

std::vector<long> MatrixAmbient::alphabet(std::size_t entry_bound) const {
  std::vector<long> a;
  if (ring_.kind() == RingKind::PrimeField) {
    for (unsigned long v = 0; v < ring_.characteristic(); ++v) a.push_back(static_cast<long>(v));
  } else {
    const long e = static_cast<long>(entry_bound);
    for (long v = -e; v <= e; ++v) a.push_back(v);
  }
  return a;
}

double MatrixAmbient::map_count(std::size_t dom, std::size_t cod, std::size_t entry_bound) const {
  return std::pow(static_cast<double>(alphabet(entry_bound).size()), static_cast<double>(dom * cod));
}

std::vector<ExactMatrix> MatrixAmbient::all_maps(std::size_t dom, std::size_t cod, std::size_t entry_bound) const {
  const std::vector<long> a = alphabet(entry_bound);
  std::vector<ExactMatrix> out;
  for_each_word(dom * cod, a.size(), [&](const std::vector<std::size_t>& w) {
    std::vector<long> e(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) e[i] = a[w[i]];
    out.push_back(ExactMatrix::from_ints(ring_, cod, dom, e));
  });
  return out;
}

ExactMatrix MatrixAmbient::random_map(std::size_t dom, std::size_t cod, std::size_t entry_bound,
                                      std::mt19937_64& rng) const {
  const std::vector<long> a = alphabet(entry_bound);
  std::uniform_int_distribution<std::size_t> d(0, a.size() - 1);
  std::vector<long> e(dom * cod);
  for (auto& v : e) v = a[d(rng)];
  return ExactMatrix::from_ints(ring_, cod, dom, e);
}

}  // namespace corelate
