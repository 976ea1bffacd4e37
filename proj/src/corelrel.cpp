#include "corelate/corelrel.hpp"

#include <algorithm>
#include <map>

namespace corelate {

namespace {

void require_field(const MatrixAmbient& amb) {
  if (!amb.ring().is_field()) {
    fail(ErrorKind::NotAbelian, "relations need a field, not " + amb.ring().display_name());
  }
}

std::vector<std::vector<std::size_t>> fibres(const std::vector<std::optional<std::size_t>>& labels) {
  std::map<std::size_t, std::vector<std::size_t>> by_label;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i]) by_label[*labels[i]].push_back(i);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& [_, b] : by_label) out.push_back(std::move(b));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Relation rel_canonical(const MatrixAmbient& amb, const Span<ExactMatrix>& s) {
  require_field(amb);
  const std::size_t n = s.left.rows();
  ExactMatrix mono = amb.factorize(vconcat(s.left, s.right)).mono;
  return {{mono.block(0, n, 0, mono.cols()), mono.block(n, mono.rows(), 0, mono.cols())}};
}

Relation rel_identity(const MatrixAmbient& amb, std::size_t n) {
  return rel_canonical(amb, identity_span(amb, n));
}

Relation rel_compose(const MatrixAmbient& amb, const Relation& a, const Relation& b) {
  return rel_canonical(amb, span_compose(amb, a.rep, b.rep));
}

Relation rel_tensor(const MatrixAmbient& amb, const Relation& a, const Relation& b) {
  return rel_canonical(amb, span_tensor(amb, a.rep, b.rep));
}

bool rel_equal(const Relation& a, const Relation& b) {
  detail::require_feet(left_foot(a), left_foot(b));
  detail::require_feet(right_foot(a), right_foot(b));
  return a == b;
}

std::size_t left_foot(const Relation& r) { return r.rep.left.rows(); }
std::size_t right_foot(const Relation& r) { return r.rep.right.rows(); }

ExactMatrix subspace_basis(const Relation& r) { return vconcat(r.rep.left, r.rep.right).transpose(); }

Relation relation_from_rows(const MatrixAmbient& amb, std::size_t n, std::size_t m, const ExactMatrix& basis) {
  if (basis.cols() != n + m) {
    fail(ErrorKind::TypeMismatch, "basis vectors have length " + std::to_string(basis.cols()) + ", expected " +
                                      std::to_string(n + m));
  }
  ExactMatrix cols = basis.transpose();
  return rel_canonical(amb, {cols.block(0, n, 0, cols.cols()), cols.block(n, n + m, 0, cols.cols())});
}

std::string format_relation(const Relation& r) {
  ExactMatrix b = subspace_basis(r);
  std::string s = "subspace " + std::to_string(left_foot(r)) + " -> " + std::to_string(right_foot(r)) + " : [";
  for (std::size_t i = 0; i < b.rows(); ++i) {
    if (i) s += ',';
    s += '[';
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (j) s += ',';
      s += b.ring().format(b.at(i, j));
    }
    s += ']';
  }
  return s + "]";
}

PartialPartition make_partial_partition(std::size_t ground, std::vector<std::vector<std::size_t>> blocks) {
  std::vector<bool> seen(ground, false);
  for (auto& b : blocks) {
    if (b.empty()) fail(ErrorKind::TypeMismatch, "empty block");
    std::sort(b.begin(), b.end());
    for (std::size_t v : b) {
      if (v >= ground || seen[v]) fail(ErrorKind::TypeMismatch, "blocks must be disjoint and in range");
      seen[v] = true;
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return {ground, std::move(blocks)};
}

Partition er_from_corelation(const FinAmbient& amb, const Corelation<FinAmbient>& c) {
  FinMap all = amb.copair(c.rep.left, c.rep.right);
  return Partition::from_labels(all.table());
}

Corelation<FinAmbient> corelation_from_partition(const FinAmbient& amb, std::size_t n, std::size_t m,
                                                 const Partition& p) {
  if (p.ground() != n + m) fail(ErrorKind::TypeMismatch, "partition ground set does not match feet");
  std::vector<std::size_t> labels = p.labels();
  const std::size_t k = p.blocks().size();
  FinMap left(k, std::vector<std::size_t>(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(n)));
  FinMap right(k, std::vector<std::size_t>(labels.begin() + static_cast<std::ptrdiff_t>(n), labels.end()));
  return gamma(amb, Cospan<FinMap>{left, right});
}

PartialPartition per_from_corelation(const ParAmbient& amb, const Corelation<ParAmbient>& c) {
  ParMap all = amb.copair(c.rep.left, c.rep.right);
  return {all.dom(), fibres(all.table())};
}

Corelation<ParAmbient> corelation_from_partial_partition(const ParAmbient& amb, std::size_t n, std::size_t m,
                                                         const PartialPartition& p) {
  if (p.ground != n + m) fail(ErrorKind::TypeMismatch, "partition ground set does not match feet");
  std::vector<ParMap::Entry> labels(n + m);
  for (std::size_t k = 0; k < p.blocks.size(); ++k) {
    for (std::size_t v : p.blocks[k]) labels[v] = k;
  }
  const std::size_t k = p.blocks.size();
  ParMap left(k, std::vector<ParMap::Entry>(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(n)));
  ParMap right(k, std::vector<ParMap::Entry>(labels.begin() + static_cast<std::ptrdiff_t>(n), labels.end()));
  return gamma(amb, Cospan<ParMap>{left, right});
}

std::string format_partition(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks) {
  std::string s = "{";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) s += ',';
    s += '{';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) s += ',';
      std::size_t v = blocks[b][i];
      s += v < n ? "x" + std::to_string(v) : "y" + std::to_string(v - n);
    }
    s += '}';
  }
  return s + "}";
}

}  // namespace corelate
