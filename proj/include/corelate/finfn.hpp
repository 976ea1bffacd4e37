#pragma once

// Total and partial functions between finite ordinals n = {0, ..., n-1}:
// the props F and PF together with their sub-props Inj and Surj.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "corelate/shapes.hpp"

namespace corelate {

class FinMap {
 public:
  FinMap() = default;
  /// Fails with TypeMismatch if some entry is >= cod.
  FinMap(std::size_t cod, std::vector<std::size_t> table);

  static FinMap identity(std::size_t n);
  /// The unique map 0 -> n.
  static FinMap initial(std::size_t n) { return FinMap(n, {}); }
  /// The unique map n -> 1 (n -> 0 only for n = 0).
  static FinMap constant(std::size_t dom, std::size_t cod, std::size_t value);
  /// n + m -> m + n.
  static FinMap symmetry(std::size_t n, std::size_t m);

  std::size_t dom() const { return table_.size(); }
  std::size_t cod() const { return cod_; }
  std::size_t operator()(std::size_t i) const { return table_[i]; }
  const std::vector<std::size_t>& table() const { return table_; }

  friend bool operator==(const FinMap&, const FinMap&) = default;

 private:
  std::size_t cod_ = 0;
  std::vector<std::size_t> table_;
};

struct Classification {
  bool injective;
  bool surjective;
};

/// f ; g, i.e. x |-> g(f(x)).
FinMap compose(const FinMap& f, const FinMap& g);
FinMap tensor(const FinMap& f, const FinMap& g);
/// Copairing [f, g] : dom f + dom g -> cod; the codomains must agree.
FinMap copair(const FinMap& f, const FinMap& g);
Classification classify(const FinMap& f);
/// e ; m = f with e surjective onto the image and m the sorted image inclusion.
Factorization<FinMap> factorize(const FinMap& f);
/// Apex: pairs (x, y) with f(x) = g(y) in lexicographic order.
Span<FinMap> pullback(const FinMap& f, const FinMap& g);
/// Apex: blocks of the equivalence on cod f + cod g generated by f(x) ~ g(x),
/// numbered by first occurrence.
Cospan<FinMap> pushout(const FinMap& f, const FinMap& g);

std::string format(const FinMap& f);

// Partial functions. An absent entry is undefined.
class ParMap {
 public:
  using Entry = std::optional<std::size_t>;

  ParMap() = default;
  ParMap(std::size_t cod, std::vector<Entry> table);
  explicit ParMap(const FinMap& total);

  static ParMap identity(std::size_t n) { return ParMap(FinMap::identity(n)); }
  static ParMap undefined(std::size_t dom, std::size_t cod);
  static ParMap symmetry(std::size_t n, std::size_t m) { return ParMap(FinMap::symmetry(n, m)); }

  std::size_t dom() const { return table_.size(); }
  std::size_t cod() const { return cod_; }
  const Entry& operator()(std::size_t i) const { return table_[i]; }
  const std::vector<Entry>& table() const { return table_; }
  bool is_total() const;

  friend bool operator==(const ParMap&, const ParMap&) = default;

 private:
  std::size_t cod_ = 0;
  std::vector<Entry> table_;
};

/// Kleene composition: undefined propagates.
ParMap compose(const ParMap& f, const ParMap& g);
ParMap tensor(const ParMap& f, const ParMap& g);
ParMap copair(const ParMap& f, const ParMap& g);
/// (partial surjection onto the defined image, total sorted inclusion).
Factorization<ParMap> factorize(const ParMap& f);
/// Pointed-set pullback; apex elements are the pairs (x, y) != (undef, undef)
/// over X+{undef} and Y+{undef} with f(x) = g(y), lexicographic with undef last.
Span<ParMap> pullback(const ParMap& f, const ParMap& g);
/// Pointed-set pushout; the class of the basepoint is dropped.
Cospan<ParMap> pushout(const ParMap& f, const ParMap& g);
bool is_partial_surjection(const ParMap& f);
bool is_total_injection(const ParMap& f);

std::string format(const ParMap& f);

// Blocks are sorted and ordered by their minimum element.
class Partition {
 public:
  Partition() = default;
  /// Fails with TypeMismatch unless the blocks are nonempty, disjoint and cover [0, ground).
  Partition(std::size_t ground, std::vector<std::vector<std::size_t>> blocks);

  /// Fibres of a function out of the ground set.
  static Partition from_labels(const std::vector<std::size_t>& labels);

  std::size_t ground() const { return ground_; }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  /// Block index per ground element.
  std::vector<std::size_t> labels() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::size_t ground_ = 0;
  std::vector<std::vector<std::size_t>> blocks_;
};

/// All partitions of [0, n) (Bell(n) of them).
std::vector<Partition> all_partitions(std::size_t n);

}  // namespace corelate
