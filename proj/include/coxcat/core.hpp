#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxcat {

/// Rejected input: malformed partitions, wrong ground sets, class violations.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that must hold for every valid input did not.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A block is kept sorted ascending.
using Block = std::vector<int>;

struct Edge {
  int lo = 0;
  int hi = 0;
  auto operator<=>(const Edge&) const = default;
};

/// A partition of [n] = {1,...,n}.
///
/// Always canonical: every block ascending, blocks ordered by their minimum.
/// n = 0 gives the empty partition.
class SetPartition {
 public:
  SetPartition() = default;
  SetPartition(int n, std::vector<Block> blocks);

  static SetPartition singletons(int n);

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  /// Index into blocks() of the block holding x (1 <= x <= n).
  int block_index(int x) const { return owner_.at(static_cast<std::size_t>(x - 1)); }
  const Block& block_of(int x) const { return blocks_[static_cast<std::size_t>(block_index(x))]; }
  bool contains_block(const Block& b) const;

  bool operator==(const SetPartition& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
  auto operator<=>(const SetPartition& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return blocks_ <=> o.blocks_;
  }

 private:
  int n_ = 0;
  std::vector<Block> blocks_;
  std::vector<int> owner_;
};

/// A sequence of distinct integers read as a_1 < a_2 < ... < a_m.
class TotalOrder {
 public:
  explicit TotalOrder(std::vector<int> items);

  static TotalOrder natural(int n);

  const std::vector<int>& items() const { return items_; }
  int position(int x) const;
  bool has(int x) const { return pos_.count(x) != 0; }

 private:
  std::vector<int> items_;
  std::map<int, int> pos_;
};

/// Integer partition stored as weakly decreasing parts.
class TypePartition {
 public:
  TypePartition() = default;
  explicit TypePartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  /// Number of parts equal to i.
  int multiplicity(int i) const;

  /// Multiset union.
  TypePartition operator+(const TypePartition& o) const;
  TypePartition with(int part) const;
  TypePartition without(int part) const;

  bool operator==(const TypePartition&) const = default;
  auto operator<=>(const TypePartition&) const = default;

 private:
  std::vector<int> parts_;
};

enum class Pattern { crossing, nesting };
enum class SpecialKind { nonnested, nonaligned };

std::vector<Edge> edges(const SetPartition& p);

/// Arc test of a labeled partition against a total order: arcs join
/// order-consecutive elements of a block; crossing means two arcs
/// a<c<b<d, nesting means a<c<d<b (positions in the order).
bool pattern_free(std::span<const Block> blocks, const TotalOrder& order, Pattern pattern);
bool pattern_free(const SetPartition& p, const TotalOrder& order, Pattern pattern);

/// Brute-force quadruple form: positions i<j<k<l with a_i,a_k in B and
/// a_j,a_l in B' (crossing) or a_i,a_l in B and a_j,a_k in B' (nesting),
/// B != B'. Agrees with pattern_free on crossing always, and on nesting for
/// noncrossing inputs.
bool pattern_free_by_quadruples(std::span<const Block> blocks, const TotalOrder& order,
                                Pattern pattern);

bool is_noncrossing(const SetPartition& p);
bool is_nonnesting(const SetPartition& p);
/// 1 and n in one block (the empty partition is not connected).
bool is_connected(const SetPartition& p);

/// Blocks sorted by maximum.
std::vector<Block> blocks_by_max(const SetPartition& p);
std::vector<Block> blocks_by_max(std::vector<Block> blocks);

/// Nonnested or nonaligned blocks (natural order), sorted by maximum.
std::vector<Block> special_blocks(const SetPartition& p, SpecialKind kind);
int nn_count(const SetPartition& p);
int na_count(const SetPartition& p);

TypePartition type_of(const SetPartition& p);
TypePartition type_of(std::span<const Block> blocks);

/// p restricted to the elements of [lo, hi], relabelled 1..(hi-lo+1).
/// Only meaningful when no block straddles the interval boundary.
SetPartition restrict_to(const SetPartition& p, int lo, int hi);

/// Blocks of p that are not in `removed`.
std::vector<Block> blocks_except(const SetPartition& p, std::span<const Block> removed);

/// All partitions of [n] (restricted growth strings), each once.
std::vector<SetPartition> set_partitions(int n);
/// NC(n) generated directly (stack of open blocks), sorted.
std::vector<SetPartition> noncrossing_partitions(int n);
/// NN(n) generated directly (arcs with increasing left ends), sorted.
std::vector<SetPartition> nonnesting_partitions(int n);

std::string to_string(const Block& b);
std::string to_string(std::span<const Block> blocks);
std::string to_string(const SetPartition& p);
std::string to_string(const TypePartition& t);
std::ostream& operator<<(std::ostream& os, const SetPartition& p);
std::ostream& operator<<(std::ostream& os, const TypePartition& t);
std::ostream& operator<<(std::ostream& os, const Edge& e);

}  // namespace coxcat
