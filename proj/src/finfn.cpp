#include "corelate/finfn.hpp"

#include <algorithm>
#include <map>

#include "corelate/error.hpp"
#include "corelate/union_find.hpp"

namespace corelate {

namespace {

std::string arity(std::size_t dom, std::size_t cod) {
  return std::to_string(dom) + " -> " + std::to_string(cod);
}

void require_composable(std::size_t cod, std::size_t dom) {
  if (cod != dom) {
    fail(ErrorKind::TypeMismatch,
         "codomain " + std::to_string(cod) + " does not match domain " + std::to_string(dom));
  }
}

}  // namespace

FinMap::FinMap(std::size_t cod, std::vector<std::size_t> table) : cod_(cod), table_(std::move(table)) {
  for (std::size_t v : table_) {
    if (v >= cod_) {
      fail(ErrorKind::TypeMismatch, "entry " + std::to_string(v) + " out of range for codomain " +
                                        std::to_string(cod_));
    }
  }
}

FinMap FinMap::identity(std::size_t n) {
  std::vector<std::size_t> t(n);
  std::iota(t.begin(), t.end(), 0);
  return FinMap(n, std::move(t));
}

FinMap FinMap::constant(std::size_t dom, std::size_t cod, std::size_t value) {
  return FinMap(cod, std::vector<std::size_t>(dom, value));
}

FinMap FinMap::symmetry(std::size_t n, std::size_t m) {
  std::vector<std::size_t> t(n + m);
  for (std::size_t i = 0; i < n; ++i) t[i] = m + i;
  for (std::size_t i = 0; i < m; ++i) t[n + i] = i;
  return FinMap(n + m, std::move(t));
}

FinMap compose(const FinMap& f, const FinMap& g) {
  require_composable(f.cod(), g.dom());
  std::vector<std::size_t> t(f.dom());
  for (std::size_t i = 0; i < f.dom(); ++i) t[i] = g(f(i));
  return FinMap(g.cod(), std::move(t));
}

FinMap tensor(const FinMap& f, const FinMap& g) {
  std::vector<std::size_t> t = f.table();
  for (std::size_t v : g.table()) t.push_back(v + f.cod());
  return FinMap(f.cod() + g.cod(), std::move(t));
}

FinMap copair(const FinMap& f, const FinMap& g) {
  require_composable(f.cod(), g.cod());
  std::vector<std::size_t> t = f.table();
  t.insert(t.end(), g.table().begin(), g.table().end());
  return FinMap(f.cod(), std::move(t));
}

Classification classify(const FinMap& f) {
  std::vector<std::size_t> hits(f.cod(), 0);
  for (std::size_t v : f.table()) ++hits[v];
  bool inj = std::all_of(hits.begin(), hits.end(), [](std::size_t h) { return h <= 1; });
  bool sur = std::all_of(hits.begin(), hits.end(), [](std::size_t h) { return h >= 1; });
  return {inj, sur};
}

Factorization<FinMap> factorize(const FinMap& f) {
  std::vector<std::size_t> image = f.table();
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  std::vector<std::size_t> e(f.dom());
  for (std::size_t i = 0; i < f.dom(); ++i) {
    e[i] = static_cast<std::size_t>(std::lower_bound(image.begin(), image.end(), f(i)) - image.begin());
  }
  std::size_t k = image.size();
  return {FinMap(k, std::move(e)), FinMap(f.cod(), std::move(image))};
}

Span<FinMap> pullback(const FinMap& f, const FinMap& g) {
  require_composable(f.cod(), g.cod());
  std::vector<std::size_t> p1, p2;
  for (std::size_t x = 0; x < f.dom(); ++x) {
    for (std::size_t y = 0; y < g.dom(); ++y) {
      if (f(x) == g(y)) {
        p1.push_back(x);
        p2.push_back(y);
      }
    }
  }
  return {FinMap(f.dom(), std::move(p1)), FinMap(g.dom(), std::move(p2))};
}

Cospan<FinMap> pushout(const FinMap& f, const FinMap& g) {
  require_composable(f.dom(), g.dom());
  const std::size_t nx = f.cod(), ny = g.cod();
  UnionFind uf(nx + ny);
  for (std::size_t i = 0; i < f.dom(); ++i) uf.unite(f(i), nx + g(i));
  std::vector<std::size_t> block(nx + ny, nx + ny);
  std::size_t next = 0;
  std::vector<std::size_t> label(nx + ny);
  for (std::size_t e = 0; e < nx + ny; ++e) {
    std::size_t r = uf.find(e);
    if (block[r] == nx + ny) block[r] = next++;
    label[e] = block[r];
  }
  std::vector<std::size_t> q1(label.begin(), label.begin() + static_cast<std::ptrdiff_t>(nx));
  std::vector<std::size_t> q2(label.begin() + static_cast<std::ptrdiff_t>(nx), label.end());
  return {FinMap(next, std::move(q1)), FinMap(next, std::move(q2))};
}

std::string format(const FinMap& f) {
  std::string s = "fn " + arity(f.dom(), f.cod()) + " : [";
  for (std::size_t i = 0; i < f.dom(); ++i) {
    if (i) s += ',';
    s += std::to_string(f(i));
  }
  return s + "]";
}

// ---------------------------------------------------------------------------

ParMap::ParMap(std::size_t cod, std::vector<Entry> table) : cod_(cod), table_(std::move(table)) {
  for (const Entry& v : table_) {
    if (v && *v >= cod_) {
      fail(ErrorKind::TypeMismatch, "entry " + std::to_string(*v) + " out of range for codomain " +
                                        std::to_string(cod_));
    }
  }
}

ParMap::ParMap(const FinMap& total) : cod_(total.cod()), table_(total.table().begin(), total.table().end()) {}

ParMap ParMap::undefined(std::size_t dom, std::size_t cod) {
  return ParMap(cod, std::vector<Entry>(dom));
}

bool ParMap::is_total() const {
  return std::all_of(table_.begin(), table_.end(), [](const Entry& e) { return e.has_value(); });
}

ParMap compose(const ParMap& f, const ParMap& g) {
  require_composable(f.cod(), g.dom());
  std::vector<ParMap::Entry> t(f.dom());
  for (std::size_t i = 0; i < f.dom(); ++i) {
    if (f(i)) t[i] = g(*f(i));
  }
  return ParMap(g.cod(), std::move(t));
}

ParMap tensor(const ParMap& f, const ParMap& g) {
  std::vector<ParMap::Entry> t = f.table();
  for (const auto& v : g.table()) t.push_back(v ? ParMap::Entry(*v + f.cod()) : std::nullopt);
  return ParMap(f.cod() + g.cod(), std::move(t));
}

ParMap copair(const ParMap& f, const ParMap& g) {
  require_composable(f.cod(), g.cod());
  std::vector<ParMap::Entry> t = f.table();
  t.insert(t.end(), g.table().begin(), g.table().end());
  return ParMap(f.cod(), std::move(t));
}

Factorization<ParMap> factorize(const ParMap& f) {
  std::vector<std::size_t> image;
  for (const auto& v : f.table()) {
    if (v) image.push_back(*v);
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  std::vector<ParMap::Entry> e(f.dom());
  for (std::size_t i = 0; i < f.dom(); ++i) {
    if (f(i)) {
      e[i] = static_cast<std::size_t>(std::lower_bound(image.begin(), image.end(), *f(i)) - image.begin());
    }
  }
  std::size_t k = image.size();
  return {ParMap(k, std::move(e)), ParMap(FinMap(f.cod(), std::move(image)))};
}

Span<ParMap> pullback(const ParMap& f, const ParMap& g) {
  require_composable(f.cod(), g.cod());
  // Index dom() stands for the basepoint.
  auto value = [](const ParMap& h, std::size_t i) -> ParMap::Entry {
    return i == h.dom() ? std::nullopt : h(i);
  };
  auto entry = [](const ParMap& h, std::size_t i) -> ParMap::Entry {
    return i == h.dom() ? std::nullopt : ParMap::Entry(i);
  };
  std::vector<ParMap::Entry> p1, p2;
  for (std::size_t x = 0; x <= f.dom(); ++x) {
    for (std::size_t y = 0; y <= g.dom(); ++y) {
      if (x == f.dom() && y == g.dom()) continue;
      if (value(f, x) == value(g, y)) {
        p1.push_back(entry(f, x));
        p2.push_back(entry(g, y));
      }
    }
  }
  return {ParMap(f.dom(), std::move(p1)), ParMap(g.dom(), std::move(p2))};
}

Cospan<ParMap> pushout(const ParMap& f, const ParMap& g) {
  require_composable(f.dom(), g.dom());
  const std::size_t nx = f.cod(), ny = g.cod();
  const std::size_t base = nx + ny;
  UnionFind uf(nx + ny + 1);
  for (std::size_t i = 0; i < f.dom(); ++i) {
    std::size_t a = f(i) ? *f(i) : base;
    std::size_t b = g(i) ? nx + *g(i) : base;
    uf.unite(a, b);
  }
  const std::size_t base_root = uf.find(base);
  std::vector<std::size_t> block(nx + ny + 1, base + 1);
  std::vector<ParMap::Entry> label(nx + ny);
  std::size_t next = 0;
  for (std::size_t e = 0; e < nx + ny; ++e) {
    std::size_t r = uf.find(e);
    if (r == base_root) continue;
    if (block[r] == base + 1) block[r] = next++;
    label[e] = block[r];
  }
  std::vector<ParMap::Entry> q1(label.begin(), label.begin() + static_cast<std::ptrdiff_t>(nx));
  std::vector<ParMap::Entry> q2(label.begin() + static_cast<std::ptrdiff_t>(nx), label.end());
  return {ParMap(next, std::move(q1)), ParMap(next, std::move(q2))};
}

bool is_partial_surjection(const ParMap& f) {
  std::vector<bool> hit(f.cod(), false);
  for (const auto& v : f.table()) {
    if (v) hit[*v] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_total_injection(const ParMap& f) {
  if (!f.is_total()) return false;
  std::vector<bool> hit(f.cod(), false);
  for (const auto& v : f.table()) {
    if (hit[*v]) return false;
    hit[*v] = true;
  }
  return true;
}

std::string format(const ParMap& f) {
  std::string s = "par " + arity(f.dom(), f.cod()) + " : [";
  for (std::size_t i = 0; i < f.dom(); ++i) {
    if (i) s += ',';
    s += f(i) ? std::to_string(*f(i)) : std::string("_");
  }
  return s + "]";
}

// ---------------------------------------------------------------------------

Partition::Partition(std::size_t ground, std::vector<std::vector<std::size_t>> blocks)
    : ground_(ground), blocks_(std::move(blocks)) {
  std::vector<bool> seen(ground_, false);
  for (auto& b : blocks_) {
    if (b.empty()) fail(ErrorKind::TypeMismatch, "empty block");
    std::sort(b.begin(), b.end());
    for (std::size_t v : b) {
      if (v >= ground_ || seen[v]) fail(ErrorKind::TypeMismatch, "blocks must be disjoint and in range");
      seen[v] = true;
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool s) { return s; })) {
    fail(ErrorKind::TypeMismatch, "blocks must cover the ground set");
  }
  std::sort(blocks_.begin(), blocks_.end());
}

Partition Partition::from_labels(const std::vector<std::size_t>& labels) {
  std::map<std::size_t, std::vector<std::size_t>> fibres;
  for (std::size_t i = 0; i < labels.size(); ++i) fibres[labels[i]].push_back(i);
  std::vector<std::vector<std::size_t>> blocks;
  for (auto& [_, b] : fibres) blocks.push_back(std::move(b));
  return Partition(labels.size(), std::move(blocks));
}

std::vector<std::size_t> Partition::labels() const {
  std::vector<std::size_t> out(ground_);
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    for (std::size_t v : blocks_[k]) out[v] = k;
  }
  return out;
}

std::vector<Partition> all_partitions(std::size_t n) {
  // Restricted growth strings a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<Partition> out;
  std::vector<std::size_t> a(n, 0);
  while (true) {
    out.push_back(Partition::from_labels(a));
    std::size_t i = n;
    while (i > 1) {
      --i;
      std::size_t mx = *std::max_element(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
      if (a[i] <= mx) {
        ++a[i];
        std::fill(a.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.end(), 0);
        break;
      }
      if (i == 1) return out;
    }
    if (n <= 1) return out;
  }
}

}  // namespace corelate
