#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "coxcat/core.hpp"

namespace coxcat {

/// A partition of [+-n] closed under negation with at most one zero block
/// (a block B with B = -B).
///
/// Canonical form: blocks ascending; blocks keyed by their smallest absolute
/// value, the member of a mirror pair holding the positive value first.
class SignedPartition {
 public:
  SignedPartition() = default;
  SignedPartition(int n, std::vector<Block> blocks);

  int size() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::optional<Block> zero_block() const;
  int block_index(int x) const;
  const Block& block_of(int x) const { return blocks_[static_cast<std::size_t>(block_index(x))]; }

  bool operator==(const SignedPartition& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
  bool operator<(const SignedPartition& o) const {
    return n_ != o.n_ ? n_ < o.n_ : blocks_ < o.blocks_;
  }

 private:
  int n_ = 0;
  std::vector<Block> blocks_;
  std::vector<int> owner_;  // index x + n
};

/// Throws ValidationError on a missing mirror, two zero blocks, overlap or
/// incomplete coverage.
SignedPartition validate_signed(int n, std::vector<Block> raw);

Block negate(const Block& b);
Block positive_part(const Block& b);
Block negative_part(const Block& b);  // still negative numbers

/// Unordered pairs of distinct blocks; each pair stored with the smaller
/// maximum first, pairs sorted.
struct BlockMatching {
  std::vector<std::pair<Block, Block>> pairs;

  std::vector<Block> support() const;
  bool operator==(const BlockMatching&) const = default;
};

BlockMatching make_matching(std::vector<std::pair<Block, Block>> pairs);

struct TripleDecomposition {
  SetPartition alpha;
  std::vector<Block> beta;  // sorted by maximum
  BlockMatching gamma;
  /// gamma plus {{0}, A} for the unmatched block A when |beta| is odd.
  BlockMatching gamma0;
};

TripleDecomposition decompose_triple(const SignedPartition& pi);

/// Inverse of decompose_triple. `marked` must be blocks of sigma and
/// `matching` a maximal matching on it (at most one block left over).
SignedPartition compose_triple(const SetPartition& sigma, const std::vector<Block>& marked,
                               const BlockMatching& matching);

/// Perfect matchings when |X| is even, near-perfect ones when odd.
std::vector<BlockMatching> maximal_matchings(const std::vector<Block>& marked);

mpz_class stirling2(int n, int k);
/// Number of involutions of [n].
mpz_class involutions(int n);
/// sum_k S(n,k) t_{k+1}.
mpz_class count_signed(int n);

/// Every element of Pi_B(n) once, sorted canonically.
std::vector<SignedPartition> enumerate_signed(int n);

/// Multiset of sizes over mirror pairs of nonzero blocks.
TypePartition signed_type(const SignedPartition& pi);
int zero_block_size(const SignedPartition& pi);

std::string to_string(const SignedPartition& pi);
std::ostream& operator<<(std::ostream& os, const SignedPartition& pi);

}  // namespace coxcat
