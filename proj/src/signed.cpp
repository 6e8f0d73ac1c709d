#include "coxcat/signed.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <set>

namespace coxcat {

namespace {

std::pair<int, int> canonical_key(const Block& b) {
  int m = std::abs(b.front());
  for (int x : b) m = std::min(m, std::abs(x));
  bool has_pos = std::binary_search(b.begin(), b.end(), m);
  return {m, has_pos ? 0 : 1};
}

}  // namespace

SignedPartition::SignedPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 0) throw ValidationError("signed partition size must be nonnegative");
  owner_.assign(static_cast<std::size_t>(2 * n + 1), -1);
  for (auto& b : blocks_) {
    if (b.empty()) throw ValidationError("empty block");
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw ValidationError("repeated element in block");
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& a, const Block& b) { return canonical_key(a) < canonical_key(b); });
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (int x : blocks_[i]) {
      if (x == 0 || std::abs(x) > n) {
        throw ValidationError("element " + std::to_string(x) + " outside [+-" + std::to_string(n) + "]");
      }
      auto& slot = owner_[static_cast<std::size_t>(x + n)];
      if (slot != -1) throw ValidationError("element " + std::to_string(x) + " in two blocks");
      slot = static_cast<int>(i);
    }
  }
  for (int x = -n; x <= n; ++x) {
    if (x != 0 && owner_[static_cast<std::size_t>(x + n)] == -1) {
      throw ValidationError("element " + std::to_string(x) + " not covered");
    }
  }
  int zeros = 0;
  for (const auto& b : blocks_) {
    auto nb = negate(b);
    if (nb == b) {
      ++zeros;
    } else if (block_of(nb.front()) != nb) {
      throw ValidationError("block " + to_string(b) + " has no mirror block");
    }
  }
  if (zeros > 1) throw ValidationError("more than one zero block");
}

int SignedPartition::block_index(int x) const {
  if (x == 0 || std::abs(x) > n_) throw ValidationError("element " + std::to_string(x) + " out of range");
  return owner_[static_cast<std::size_t>(x + n_)];
}

std::optional<Block> SignedPartition::zero_block() const {
  for (const auto& b : blocks_) {
    if (b.front() == -b.back() && negate(b) == b) return b;
  }
  return std::nullopt;
}

SignedPartition validate_signed(int n, std::vector<Block> raw) { return SignedPartition(n, std::move(raw)); }

Block negate(const Block& b) {
  Block out;
  out.reserve(b.size());
  for (auto it = b.rbegin(); it != b.rend(); ++it) out.push_back(-*it);
  return out;
}

Block positive_part(const Block& b) {
  Block out;
  for (int x : b) {
    if (x > 0) out.push_back(x);
  }
  return out;
}

Block negative_part(const Block& b) {
  Block out;
  for (int x : b) {
    if (x < 0) out.push_back(x);
  }
  return out;
}

std::vector<Block> BlockMatching::support() const {
  std::vector<Block> out;
  for (const auto& [a, b] : pairs) {
    out.push_back(a);
    out.push_back(b);
  }
  return blocks_by_max(std::move(out));
}

BlockMatching make_matching(std::vector<std::pair<Block, Block>> pairs) {
  for (auto& [a, b] : pairs) {
    if (a.back() > b.back()) std::swap(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  return BlockMatching{std::move(pairs)};
}

TripleDecomposition decompose_triple(const SignedPartition& pi) {
  std::vector<Block> alpha;
  std::vector<Block> beta;
  std::vector<std::pair<Block, Block>> pairs;
  std::optional<Block> unmatched;
  for (const auto& b : pi.blocks()) {
    Block pos = positive_part(b);
    if (pos.empty()) continue;
    alpha.push_back(pos);
    Block neg = negative_part(b);
    if (neg.empty()) continue;
    beta.push_back(pos);
    Block partner = negate(neg);
    if (partner == pos) {
      unmatched = pos;
    } else if (pos.back() < partner.back()) {
      pairs.emplace_back(pos, partner);
    }
  }
  TripleDecomposition out{SetPartition(pi.size(), std::move(alpha)), blocks_by_max(std::move(beta)),
                          make_matching(pairs), {}};
  if (unmatched) pairs.emplace_back(Block{0}, *unmatched);
  out.gamma0 = make_matching(std::move(pairs));
  return out;
}

SignedPartition compose_triple(const SetPartition& sigma, const std::vector<Block>& marked,
                               const BlockMatching& matching) {
  std::set<Block> in_x;
  for (const auto& b : marked) {
    if (!sigma.contains_block(b)) throw ValidationError("marked block " + to_string(b) + " not in partition");
    in_x.insert(b);
  }
  std::set<Block> matched;
  std::vector<Block> out;
  for (const auto& [a, b] : matching.pairs) {
    if (!in_x.count(a) || !in_x.count(b)) throw ValidationError("matching uses an unmarked block");
    if (a == b || !matched.insert(a).second || !matched.insert(b).second) {
      throw ValidationError("matching is not a matching");
    }
    Block u = a;
    for (int x : b) u.push_back(-x);
    std::sort(u.begin(), u.end());
    out.push_back(negate(u));
    out.push_back(std::move(u));
  }
  if (in_x.size() - matched.size() > 1) throw ValidationError("matching is not maximal");
  for (const auto& b : sigma.blocks()) {
    if (!in_x.count(b)) {
      out.push_back(b);
      out.push_back(negate(b));
    } else if (!matched.count(b)) {
      Block z = b;
      for (int x : b) z.push_back(-x);
      std::sort(z.begin(), z.end());
      out.push_back(std::move(z));
    }
  }
  return SignedPartition(sigma.size(), std::move(out));
}

std::vector<BlockMatching> maximal_matchings(const std::vector<Block>& marked) {
  std::vector<BlockMatching> out;
  std::vector<std::pair<Block, Block>> cur;
  std::function<void(std::vector<Block>)> perfect = [&](std::vector<Block> rest) {
    if (rest.empty()) {
      out.push_back(make_matching(cur));
      return;
    }
    Block first = rest.front();
    for (std::size_t j = 1; j < rest.size(); ++j) {
      std::vector<Block> next;
      for (std::size_t i = 1; i < rest.size(); ++i) {
        if (i != j) next.push_back(rest[i]);
      }
      cur.emplace_back(first, rest[j]);
      perfect(std::move(next));
      cur.pop_back();
    }
  };
  if (marked.size() % 2 == 0) {
    perfect(marked);
  } else {
    for (std::size_t u = 0; u < marked.size(); ++u) {
      std::vector<Block> rest;
      for (std::size_t i = 0; i < marked.size(); ++i) {
        if (i != u) rest.push_back(marked[i]);
      }
      perfect(std::move(rest));
    }
  }
  return out;
}

mpz_class stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  std::vector<mpz_class> row(static_cast<std::size_t>(k + 1), 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] = j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

mpz_class involutions(int n) {
  if (n < 0) return 0;
  mpz_class prev = 1, cur = 1;  // t_0, t_1
  if (n == 0) return prev;
  for (int i = 2; i <= n; ++i) {
    mpz_class next = cur + (i - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

mpz_class count_signed(int n) {
  if (n < 1) throw ValidationError("count_signed needs n >= 1");
  mpz_class total = 0;
  for (int k = 1; k <= n; ++k) total += stirling2(n, k) * involutions(k + 1);
  return total;
}

std::vector<SignedPartition> enumerate_signed(int n) {
  if (n < 1) throw ValidationError("enumerate_signed needs n >= 1");
  std::vector<SignedPartition> out;
  for (const auto& sigma : set_partitions(n)) {
    const auto& bs = sigma.blocks();
    const std::size_t k = bs.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::vector<Block> x;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1U) x.push_back(bs[i]);
      }
      for (const auto& y : maximal_matchings(x)) out.push_back(compose_triple(sigma, x, y));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TypePartition signed_type(const SignedPartition& pi) {
  std::vector<int> parts;
  for (const auto& b : pi.blocks()) {
    Block nb = negate(b);
    if (nb == b) continue;
    if (b < nb) parts.push_back(static_cast<int>(b.size()));
  }
  return TypePartition(std::move(parts));
}

int zero_block_size(const SignedPartition& pi) {
  auto z = pi.zero_block();
  return z ? static_cast<int>(z->size()) : 0;
}

std::string to_string(const SignedPartition& pi) { return to_string(std::span<const Block>(pi.blocks())); }

std::ostream& operator<<(std::ostream& os, const SignedPartition& pi) { return os << to_string(pi); }

}  // namespace coxcat
