#include "corelate/verify.hpp"

#include <json.hpp>

#include <sstream>

#include "corelate/union_find.hpp"

namespace corelate {

std::string report_text(const CheckReport& r) {
  std::ostringstream os;
  os << "check " << r.name << " on " << r.ambient << " [" << r.subcategory << "] bound=" << r.bound
     << " entry-bound=" << r.entry_bound << " seed=" << r.seed << ": " << (r.pass() ? "PASS" : "FAIL") << " ("
     << r.cases << " cases, " << r.failures << " failures, " << (r.exhaustive ? "exhaustive" : "sampled") << ")";
  for (const auto& cx : r.counterexamples) {
    os << "\n  counterexample:";
    for (std::size_t i = 0; i < cx.inputs.size(); ++i) os << (i ? " | " : " ") << cx.inputs[i];
    os << "\n    witness: " << cx.witness;
  }
  if (r.failures > r.counterexamples.size()) {
    os << "\n  (" << r.failures - r.counterexamples.size() << " more not shown)";
  }
  return os.str();
}

std::string report_record(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["record"] = "check";
  j["name"] = r.name;
  j["ambient"] = r.ambient;
  j["subcategory"] = r.subcategory;
  j["bound"] = r.bound;
  j["entry_bound"] = r.entry_bound;
  j["seed"] = r.seed;
  j["exhaustive"] = r.exhaustive;
  j["cases"] = r.cases;
  j["failures"] = r.failures;
  j["verdict"] = r.pass() ? "pass" : "fail";
  auto cxs = nlohmann::ordered_json::array();
  for (const auto& cx : r.counterexamples) {
    nlohmann::ordered_json c;
    c["inputs"] = cx.inputs;
    c["witness"] = cx.witness;
    cxs.push_back(std::move(c));
  }
  j["counterexamples"] = std::move(cxs);
  return j.dump();
}

// ---------------------------------------------------------------------------
// Partition gluing.

namespace {

// Points: x_i -> i, z_j -> n + j, y_k -> n + z + k, and an optional sink.
struct Glue {
  std::size_t n, z, m;
  UnionFind uf;
  Glue(std::size_t n_, std::size_t z_, std::size_t m_) : n(n_), z(z_), m(m_), uf(n_ + z_ + m_ + 1) {}
  std::size_t sink() const { return n + z + m; }
  std::size_t left(std::size_t e) const { return e; }  // element of n + z
  std::size_t right(std::size_t e) const { return n + e; }  // element of z + m
  std::size_t outer(std::size_t e) const { return e < n ? e : n + z + (e - n); }  // element of n + m
};

template <class Blocks>
void glue_blocks(Glue& g, const Blocks& blocks, bool second) {
  for (const auto& b : blocks) {
    for (std::size_t v : b) {
      std::size_t a = second ? g.right(b.front()) : g.left(b.front());
      std::size_t c = second ? g.right(v) : g.left(v);
      g.uf.unite(a, c);
    }
  }
}

std::vector<char> covered(std::size_t ground, const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<char> out(ground, 0);
  for (const auto& b : blocks) {
    for (std::size_t v : b) out[v] = 1;
  }
  return out;
}

}  // namespace

Partition oracle_er_compose(std::size_t n, std::size_t z, std::size_t m, const Partition& p1, const Partition& p2) {
  detail::require_feet(p1.ground(), n + z);
  detail::require_feet(p2.ground(), z + m);
  Glue g(n, z, m);
  glue_blocks(g, p1.blocks(), false);
  glue_blocks(g, p2.blocks(), true);
  std::vector<std::size_t> labels(n + m);
  for (std::size_t e = 0; e < n + m; ++e) labels[e] = g.uf.find(g.outer(e));
  return Partition::from_labels(labels);
}

PartialPartition oracle_per_compose(std::size_t n, std::size_t z, std::size_t m, const PartialPartition& p1,
                                    const PartialPartition& p2) {
  detail::require_feet(p1.ground, n + z);
  detail::require_feet(p2.ground, z + m);
  Glue g(n, z, m);
  glue_blocks(g, p1.blocks, false);
  glue_blocks(g, p2.blocks, true);
  auto c1 = covered(n + z, p1.blocks), c2 = covered(z + m, p2.blocks);
  for (std::size_t e = 0; e < n + z; ++e) {
    if (!c1[e]) g.uf.unite(g.sink(), g.left(e));
  }
  for (std::size_t e = 0; e < z + m; ++e) {
    if (!c2[e]) g.uf.unite(g.sink(), g.right(e));
  }
  std::map<std::size_t, std::vector<std::size_t>> classes;
  const std::size_t sink = g.uf.find(g.sink());
  for (std::size_t e = 0; e < n + m; ++e) {
    std::size_t r = g.uf.find(g.outer(e));
    if (r != sink) classes[r].push_back(e);
  }
  std::vector<std::vector<std::size_t>> blocks;
  for (auto& [_, b] : classes) blocks.push_back(std::move(b));
  return make_partial_partition(n + m, std::move(blocks));
}

std::vector<PartialPartition> all_partial_partitions(std::size_t k) {
  std::vector<PartialPartition> out;
  for (const auto& p : all_partitions(k + 1)) {
    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& b : p.blocks()) {
      if (std::find(b.begin(), b.end(), k) == b.end()) blocks.push_back(b);
    }
    out.push_back(make_partial_partition(k, std::move(blocks)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Vector sets over GF(p).

namespace {

unsigned long residue(const Scalar& s) { return s.value().get_num().get_ui(); }

std::vector<unsigned long> row_residues(const ExactMatrix& a, std::size_t i) {
  std::vector<unsigned long> v(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) v[j] = residue(a.at(i, j));
  return v;
}

void require_prime_field(const Ring& ring) {
  if (ring.kind() != RingKind::PrimeField) {
    fail(ErrorKind::RingMismatch, "vector enumeration needs a prime field, got " + ring.display_name());
  }
}

ExactMatrix random_subspace(const Ring& ring, std::size_t k, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> rows(0, k);
  std::uniform_int_distribution<unsigned long> entry(0, ring.characteristic() - 1);
  std::size_t r = rows(rng);
  std::vector<Scalar> e;
  for (std::size_t i = 0; i < r * k; ++i) e.push_back(ring.from_int(static_cast<long>(entry(rng))));
  return row_space_basis(ExactMatrix(ring, r, k, std::move(e)));
}

}  // namespace

VectorSet enumerate_span(const ExactMatrix& basis) {
  const Ring& ring = basis.ring();
  require_prime_field(ring);
  const unsigned long p = ring.characteristic();
  const std::size_t r = basis.rows(), k = basis.cols();
  std::vector<std::vector<unsigned long>> rows;
  for (std::size_t i = 0; i < r; ++i) rows.push_back(row_residues(basis, i));
  VectorSet out;
  std::vector<unsigned long> coef(r, 0);
  while (true) {
    std::vector<unsigned long> v(k, 0);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < k; ++j) v[j] = (v[j] + coef[i] * rows[i][j]) % p;
    }
    out.insert(std::move(v));
    std::size_t i = 0;
    while (i < r && ++coef[i] == p) coef[i++] = 0;
    if (i == r) break;
  }
  return out;
}

VectorSet oracle_subspace_compose(std::size_t n, std::size_t z, std::size_t m, const ExactMatrix& V,
                                  const ExactMatrix& W) {
  detail::require_feet(V.cols(), n + z);
  detail::require_feet(W.cols(), z + m);
  VectorSet vs = enumerate_span(V), ws = enumerate_span(W);
  // Index W by its z-prefix.
  std::map<std::vector<unsigned long>, std::vector<const std::vector<unsigned long>*>> by_mid;
  for (const auto& w : ws) by_mid[std::vector<unsigned long>(w.begin(), w.begin() + z)].push_back(&w);
  VectorSet out;
  for (const auto& v : vs) {
    std::vector<unsigned long> mid(v.begin() + n, v.end());
    auto it = by_mid.find(mid);
    if (it == by_mid.end()) continue;
    for (const auto* w : it->second) {
      std::vector<unsigned long> u(v.begin(), v.begin() + n);
      u.insert(u.end(), w->begin() + z, w->end());
      out.insert(std::move(u));
    }
  }
  return out;
}

std::vector<ExactMatrix> all_subspaces(const Ring& ring, std::size_t k) {
  require_prime_field(ring);
  const unsigned long p = ring.characteristic();
  std::vector<std::vector<Scalar>> vectors;
  {
    std::vector<unsigned long> c(k, 0);
    while (true) {
      std::vector<Scalar> v;
      for (auto x : c) v.push_back(ring.from_int(static_cast<long>(x)));
      vectors.push_back(std::move(v));
      std::size_t i = 0;
      while (i < k && ++c[i] == p) c[i++] = 0;
      if (i == k) break;
    }
  }
  std::set<std::string> seen;
  std::vector<ExactMatrix> out{ExactMatrix(ring, 0, k)};
  seen.insert(format(out[0]));
  for (std::size_t at = 0; at < out.size(); ++at) {
    const ExactMatrix cur = out[at];
    for (const auto& v : vectors) {
      std::vector<Scalar> e = cur.entries();
      e.insert(e.end(), v.begin(), v.end());
      ExactMatrix next = row_space_basis(ExactMatrix(ring, cur.rows() + 1, k, std::move(e)));
      if (next.rows() == cur.rows()) continue;
      if (seen.insert(format(next)).second) out.push_back(std::move(next));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oracle checks.

namespace {

CheckReport plain_start(const std::string& name, const std::string& ambient, const std::string& sub,
                        const CheckOptions& o) {
  CheckReport r;
  r.name = name;
  r.ambient = ambient;
  r.subcategory = sub;
  r.bound = o.bound;
  r.entry_bound = o.entry_bound;
  r.seed = o.seed;
  return r;
}

std::string part_text(const std::vector<std::vector<std::size_t>>& blocks, std::size_t ground) {
  std::string s = "[" + std::to_string(ground) + "]{";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    s += i ? ",{" : "{";
    for (std::size_t j = 0; j < blocks[i].size(); ++j) s += (j ? "," : "") + std::to_string(blocks[i][j]);
    s += "}";
  }
  return s + "}";
}

}  // namespace

CheckReport check_er_oracle(const CheckOptions& o) {
  FinAmbient amb;
  CheckReport r = plain_start("er-oracle", amb.name(), amb.sub_name(Sub::All), o);
  std::vector<std::vector<Partition>> parts(2 * o.bound + 1);
  for (std::size_t k = 0; k <= 2 * o.bound; ++k) parts[k] = all_partitions(k);
  for (std::size_t n = 0; n <= o.bound; ++n) {
    for (std::size_t z = 0; z <= o.bound; ++z) {
      std::vector<Corelation<FinAmbient>> left;
      for (const auto& p : parts[n + z]) {
        left.push_back(corelation_from_partition(amb, n, z, p));
        std::optional<std::string> w;
        if (!(er_from_corelation(amb, left.back()) == p)) w = "partition does not round-trip";
        detail::record(r, o, w, [&] { return std::vector<std::string>{part_text(p.blocks(), n + z)}; });
      }
      for (std::size_t m = 0; m <= o.bound; ++m) {
        std::vector<Corelation<FinAmbient>> right;
        for (const auto& p : parts[z + m]) right.push_back(corelation_from_partition(amb, z, m, p));
        for (std::size_t i = 0; i < left.size(); ++i) {
          for (std::size_t j = 0; j < right.size(); ++j) {
            Partition got = er_from_corelation(amb, corel_compose(amb, left[i], right[j]));
            Partition want = oracle_er_compose(n, z, m, parts[n + z][i], parts[z + m][j]);
            std::optional<std::string> w;
            if (!(got == want)) {
              w = "composite " + format_partition(n, got.blocks()) + ", oracle " + format_partition(n, want.blocks());
            }
            detail::record(r, o, w, [&] {
              return std::vector<std::string>{"n=" + std::to_string(n) + " z=" + std::to_string(z) +
                                                  " m=" + std::to_string(m),
                                              part_text(parts[n + z][i].blocks(), n + z),
                                              part_text(parts[z + m][j].blocks(), z + m)};
            });
          }
        }
      }
    }
  }
  return r;
}

CheckReport check_per_oracle(const CheckOptions& o) {
  ParAmbient amb;
  CheckReport r = plain_start("per-oracle", amb.name(), amb.sub_name(Sub::All), o);
  std::vector<std::vector<PartialPartition>> parts(2 * o.bound + 1);
  for (std::size_t k = 0; k <= 2 * o.bound; ++k) parts[k] = all_partial_partitions(k);
  for (std::size_t n = 0; n <= o.bound; ++n) {
    for (std::size_t z = 0; z <= o.bound; ++z) {
      std::vector<Corelation<ParAmbient>> left;
      for (const auto& p : parts[n + z]) {
        left.push_back(corelation_from_partial_partition(amb, n, z, p));
        std::optional<std::string> w;
        if (!(per_from_corelation(amb, left.back()) == p)) w = "partial partition does not round-trip";
        detail::record(r, o, w, [&] { return std::vector<std::string>{part_text(p.blocks, n + z)}; });
      }
      for (std::size_t m = 0; m <= o.bound; ++m) {
        std::vector<Corelation<ParAmbient>> right;
        for (const auto& p : parts[z + m]) right.push_back(corelation_from_partial_partition(amb, z, m, p));
        for (std::size_t i = 0; i < left.size(); ++i) {
          for (std::size_t j = 0; j < right.size(); ++j) {
            PartialPartition got = per_from_corelation(amb, corel_compose(amb, left[i], right[j]));
            PartialPartition want = oracle_per_compose(n, z, m, parts[n + z][i], parts[z + m][j]);
            std::optional<std::string> w;
            if (!(got == want)) {
              w = "composite " + format_partition(n, got.blocks) + ", oracle " + format_partition(n, want.blocks);
            }
            detail::record(r, o, w, [&] {
              return std::vector<std::string>{"n=" + std::to_string(n) + " z=" + std::to_string(z) +
                                                  " m=" + std::to_string(m),
                                              part_text(parts[n + z][i].blocks, n + z),
                                              part_text(parts[z + m][j].blocks, z + m)};
            });
          }
        }
      }
    }
  }
  return r;
}

namespace {

template <class Visit>
void subspace_pairs(const Ring& ring, const CheckOptions& o, CheckReport& r, Visit&& visit) {
  std::vector<std::vector<ExactMatrix>> subs(2 * o.bound + 1);
  for (std::size_t k = 0; k <= 2 * o.bound; ++k) subs[k] = all_subspaces(ring, k);
  for (auto [n, z, m] : detail::triples(o.bound)) {
    for (const auto& v : subs[n + z]) {
      for (const auto& w : subs[z + m]) visit(n, z, m, v, w);
    }
  }
  std::mt19937_64 rng(o.seed);
  const std::size_t d = o.bound + 1;
  for (std::size_t s = 0; s < o.samples; ++s) {
    ExactMatrix v = random_subspace(ring, 2 * d, rng);
    ExactMatrix w = random_subspace(ring, 2 * d, rng);
    visit(d, d, d, v, w);
  }
  if (o.samples) r.exhaustive = false;
}

}  // namespace

CheckReport check_subspace_oracle(const Ring& ring, const CheckOptions& o) {
  MatrixAmbient amb(ring);
  CheckReport r = plain_start("subspace-oracle", amb.name(), amb.sub_name(Sub::All), o);
  subspace_pairs(ring, o, r,
                 [&](std::size_t n, std::size_t z, std::size_t m, const ExactMatrix& v, const ExactMatrix& w) {
                   Relation a = relation_from_rows(amb, n, z, v);
                   Relation b = relation_from_rows(amb, z, m, w);
                   Relation c = rel_compose(amb, a, b);
                   VectorSet got = enumerate_span(subspace_basis(c));
                   VectorSet want = oracle_subspace_compose(n, z, m, v, w);
                   std::optional<std::string> wit;
                   if (got != want) {
                     wit = format_relation(c) + " has " + std::to_string(got.size()) + " vectors, oracle " +
                           std::to_string(want.size());
                   }
                   detail::record(r, o, wit, [&] {
                     return std::vector<std::string>{format_relation(a), format_relation(b)};
                   });
                 });
  return r;
}

CheckReport check_abelian_iso(const Ring& ring, const CheckOptions& o) {
  MatrixAmbient amb(ring);
  CheckReport r = plain_start("abelian-iso", amb.name(), amb.sub_name(Sub::All), o);
  auto round_trip = [&](const Relation& a) {
    auto c = relation_to_corelation(amb, a);
    std::optional<std::string> w;
    if (!(corelation_to_relation(amb, c) == a)) {
      w = "relation round trip gives " + format_relation(corelation_to_relation(amb, c));
    } else if (!(relation_to_corelation(amb, corelation_to_relation(amb, c)) == c)) {
      w = "corelation round trip changes " + format_cospan(amb, c.rep);
    }
    detail::record(r, o, w, [&] { return std::vector<std::string>{format_relation(a)}; });
  };
  for (std::size_t n = 0; n <= o.bound; ++n) {
    for (std::size_t m = 0; m <= o.bound; ++m) {
      for (const auto& b : all_subspaces(ring, n + m)) round_trip(relation_from_rows(amb, n, m, b));
    }
    std::optional<std::string> w;
    if (!(relation_to_corelation(amb, rel_identity(amb, n)) == corel_identity(amb, n))) w = "identity not preserved";
    detail::record(r, o, w, [&] { return std::vector<std::string>{"id(" + std::to_string(n) + ")"}; });
  }
  subspace_pairs(ring, o, r,
                 [&](std::size_t n, std::size_t z, std::size_t m, const ExactMatrix& v, const ExactMatrix& w) {
                   Relation a = relation_from_rows(amb, n, z, v);
                   Relation b = relation_from_rows(amb, z, m, w);
                   auto lhs = relation_to_corelation(amb, rel_compose(amb, a, b));
                   auto rhs = corel_compose(amb, relation_to_corelation(amb, a), relation_to_corelation(amb, b));
                   std::optional<std::string> wit;
                   if (!(lhs == rhs)) wit = format_cospan(amb, lhs.rep) + " vs " + format_cospan(amb, rhs.rep);
                   detail::record(r, o, wit, [&] {
                     return std::vector<std::string>{format_relation(a), format_relation(b)};
                   });
                 });
  return r;
}

// ---------------------------------------------------------------------------
// Smith normal form.

namespace {

void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    f(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

BigInt as_int(const Scalar& s) { return s.value().get_num(); }

}  // namespace

std::vector<BigInt> invariant_factors_by_minors(const ExactMatrix& a) {
  std::vector<BigInt> out;
  BigInt prev = 1;
  const Ring& ring = a.ring();
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    BigInt g = 0;
    combinations(a.rows(), k, [&](const std::vector<std::size_t>& rs) {
      combinations(a.cols(), k, [&](const std::vector<std::size_t>& cs) {
        ExactMatrix sub(ring, k, k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) sub.set(i, j, a.at(rs[i], cs[j]));
        }
        BigInt d = as_int(determinant(sub));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

CheckReport check_snf(const CheckOptions& o) {
  const Ring z = Ring::integer();
  CheckReport r = plain_start("snf", "fmod(Z)", "all", o);
  r.exhaustive = false;
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> dim(0, o.bound);
  const long e = static_cast<long>(o.entry_bound);
  std::uniform_int_distribution<long> entry(-e, e);
  for (std::size_t s = 0; s < o.samples; ++s) {
    std::size_t rows = dim(rng), cols = dim(rng);
    std::vector<long> v(rows * cols);
    for (auto& x : v) x = entry(rng);
    ExactMatrix a = ExactMatrix::from_ints(z, rows, cols, v);
    auto d = snf(a);
    std::optional<std::string> w;
    if (!(multiply(multiply(d.U, a), d.V) == d.D)) w = "U*A*V != D";
    auto unimodular = [](const ExactMatrix& u) { return abs(determinant(u).value()) == 1; };
    if (!w && (!unimodular(d.U) || !unimodular(d.V))) w = "transform not unimodular";
    std::vector<BigInt> diag;
    for (std::size_t i = 0; !w && i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (i != j && !d.D.at(i, j).is_zero()) w = "D not diagonal";
      }
    }
    for (std::size_t i = 0; !w && i < std::min(rows, cols); ++i) {
      BigInt x = as_int(d.D.at(i, i));
      if (x < 0) w = "negative invariant factor";
      if (x != 0) diag.push_back(x);
    }
    for (std::size_t i = 0; !w && i < std::min(rows, cols); ++i) {
      BigInt x = as_int(d.D.at(i, i));
      if (i + 1 < std::min(rows, cols)) {
        BigInt y = as_int(d.D.at(i + 1, i + 1));
        bool divides = x == 0 ? y == 0 : y % x == 0;
        if (!divides) w = "divisibility chain broken at " + std::to_string(i);
      }
    }
    if (!w && diag != invariant_factors_by_minors(a)) w = "invariant factors differ from gcd of minors";
    if (w) *w += ": " + format(d.D);
    detail::record(r, o, w, [&] { return std::vector<std::string>{format(a)}; });
  }
  return r;
}

// ---------------------------------------------------------------------------
// Frobenius laws.

namespace {

struct Law {
  std::string name, lhs, rhs;
};

std::vector<Law> frobenius_laws(const std::string& c) {
  auto g = [&](const char* n) { return c + n; };
  const std::string mu = g("mult"), eta = g("unit"), delta = g("comult"), eps = g("counit");
  return {
      {"assoc", "(" + mu + " @ id(1)) ; " + mu, "(id(1) @ " + mu + ") ; " + mu},
      {"unitl", "(" + eta + " @ id(1)) ; " + mu, "id(1)"},
      {"unitr", "(id(1) @ " + eta + ") ; " + mu, "id(1)"},
      {"comm", "sym(1,1) ; " + mu, mu},
      {"coassoc", delta + " ; (" + delta + " @ id(1))", delta + " ; (id(1) @ " + delta + ")"},
      {"counitl", delta + " ; (" + eps + " @ id(1))", "id(1)"},
      {"counitr", delta + " ; (id(1) @ " + eps + ")", "id(1)"},
      {"cocomm", delta + " ; sym(1,1)", delta},
      {"frobl", "(" + delta + " @ id(1)) ; (id(1) @ " + mu + ")", mu + " ; " + delta},
      {"frobr", "(id(1) @ " + delta + ") ; (" + mu + " @ id(1))", mu + " ; " + delta},
      {"special", delta + " ; " + mu, "id(1)"},
      {"extra", eta + " ; " + eps, "id(0)"},
  };
}

template <class P>
bool scalar_representable(const P& prop, const std::string& r) {
  try {
    const Ring& ring = prop.ambient().ring();
    return !ring.parse(r).is_zero();
  } catch (const Error&) {
    return false;
  }
}

template <class P>
std::optional<std::string> law_case(const P& prop, const std::string& lhs, const std::string& rhs) {
  auto a = parse_term(lhs), b = parse_term(rhs);
  auto va = eval_term(prop, *a), vb = eval_term(prop, *b);
  if (prop.equal(va, vb)) return std::nullopt;
  return prop.format(va) + " vs " + prop.format(vb);
}

}  // namespace

CheckReport check_frobenius(const std::string& theory) {
  return with_theory(theory, [&](const auto& prop) {
    CheckOptions o;
    o.bound = 0;
    o.entry_bound = 0;
    CheckReport r = plain_start("frobenius", prop.ambient().name(), theory, o);
    std::vector<Law> laws;
    if (prop.kind() == TheoryKind::Linear) {
      for (const char* c : {"b.", "w."}) {
        for (auto l : frobenius_laws(c)) {
          l.name = std::string(1, c[0]) + "." + l.name;
          laws.push_back(std::move(l));
        }
      }
      if constexpr (requires { prop.ambient().ring(); }) {
        for (const char* s : {"1", "2", "3", "1/2", "-1"}) {
          if (!scalar_representable(prop, s)) continue;
          laws.push_back({std::string("scalar(") + s + ")", std::string("scalar(") + s + ") ; coscalar(" + s + ")",
                          "id(1)"});
        }
      }
    } else {
      laws = frobenius_laws("");
    }
    for (const auto& l : laws) {
      detail::record(r, o, law_case(prop, l.lhs, l.rhs),
                     [&] { return std::vector<std::string>{l.name, l.lhs, l.rhs}; });
    }
    return r;
  });
}

bool replay_frobenius(const std::string& theory, const Counterexample& cx) {
  return with_theory(theory, [&](const auto& prop) {
    return law_case(prop, cx.inputs.at(1), cx.inputs.at(2)).has_value();
  });
}

}  // namespace corelate
