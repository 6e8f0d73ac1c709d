#include "coxcat/core.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

namespace coxcat {

SetPartition::SetPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 0) throw ValidationError("partition size must be nonnegative");
  owner_.assign(static_cast<std::size_t>(n), -1);
  for (auto& b : blocks_) {
    if (b.empty()) throw ValidationError("empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (int x : blocks_[i]) {
      if (x < 1 || x > n) {
        throw ValidationError("element " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
      }
      auto& slot = owner_[static_cast<std::size_t>(x - 1)];
      if (slot != -1) throw ValidationError("element " + std::to_string(x) + " in two blocks");
      slot = static_cast<int>(i);
    }
  }
  for (int x = 1; x <= n; ++x) {
    if (owner_[static_cast<std::size_t>(x - 1)] == -1) {
      throw ValidationError("element " + std::to_string(x) + " not covered");
    }
  }
}

SetPartition SetPartition::singletons(int n) {
  std::vector<Block> bs;
  for (int i = 1; i <= n; ++i) bs.push_back({i});
  return SetPartition(n, std::move(bs));
}

bool SetPartition::contains_block(const Block& b) const {
  if (b.empty() || b.front() < 1 || b.front() > n_) return false;
  return block_of(b.front()) == b;
}

TotalOrder::TotalOrder(std::vector<int> items) : items_(std::move(items)) {
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (!pos_.emplace(items_[i], static_cast<int>(i)).second) {
      throw ValidationError("repeated item " + std::to_string(items_[i]) + " in total order");
    }
  }
}

TotalOrder TotalOrder::natural(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return TotalOrder(std::move(v));
}

int TotalOrder::position(int x) const {
  auto it = pos_.find(x);
  if (it == pos_.end()) throw ValidationError("item " + std::to_string(x) + " not in order");
  return it->second;
}

TypePartition::TypePartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw ValidationError("type parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int TypePartition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int TypePartition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

TypePartition TypePartition::operator+(const TypePartition& o) const {
  auto v = parts_;
  v.insert(v.end(), o.parts_.begin(), o.parts_.end());
  return TypePartition(std::move(v));
}

TypePartition TypePartition::with(int part) const { return *this + TypePartition({part}); }

TypePartition TypePartition::without(int part) const {
  auto v = parts_;
  auto it = std::find(v.begin(), v.end(), part);
  if (it == v.end()) throw ValidationError("part " + std::to_string(part) + " not present");
  v.erase(it);
  return TypePartition(std::move(v));
}

std::vector<Edge> edges(const SetPartition& p) {
  std::vector<Edge> out;
  for (const auto& b : p.blocks()) {
    for (std::size_t i = 1; i < b.size(); ++i) out.push_back({b[i - 1], b[i]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_ground_set(std::span<const Block> blocks, const TotalOrder& order) {
  std::size_t count = 0;
  for (const auto& b : blocks) {
    for (int x : b) {
      if (!order.has(x)) throw ValidationError("element " + std::to_string(x) + " missing from order");
    }
    count += b.size();
  }
  if (count != order.items().size()) throw ValidationError("order does not match the ground set");
}

}  // namespace

bool pattern_free(std::span<const Block> blocks, const TotalOrder& order, Pattern pattern) {
  check_ground_set(blocks, order);
  std::vector<std::pair<int, int>> arcs;
  for (const auto& b : blocks) {
    std::vector<int> pos;
    pos.reserve(b.size());
    for (int x : b) pos.push_back(order.position(x));
    std::sort(pos.begin(), pos.end());
    for (std::size_t i = 1; i < pos.size(); ++i) arcs.emplace_back(pos[i - 1], pos[i]);
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = 0; j < arcs.size(); ++j) {
      auto [a, b] = arcs[i];
      auto [c, d] = arcs[j];
      if (pattern == Pattern::crossing && a < c && c < b && b < d) return false;
      if (pattern == Pattern::nesting && a < c && d < b) return false;
    }
  }
  return true;
}

bool pattern_free(const SetPartition& p, const TotalOrder& order, Pattern pattern) {
  return pattern_free(std::span<const Block>(p.blocks()), order, pattern);
}

bool pattern_free_by_quadruples(std::span<const Block> blocks, const TotalOrder& order,
                                Pattern pattern) {
  check_ground_set(blocks, order);
  const auto& items = order.items();
  std::map<int, std::size_t> owner;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (int x : blocks[i]) owner[x] = i;
  }
  const std::size_t m = items.size();
  std::vector<std::size_t> at(m);
  for (std::size_t i = 0; i < m; ++i) at[i] = owner.at(items[i]);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        for (std::size_t l = k + 1; l < m; ++l) {
          if (pattern == Pattern::crossing) {
            if (at[i] == at[k] && at[j] == at[l] && at[i] != at[j]) return false;
          } else {
            if (at[i] == at[l] && at[j] == at[k] && at[i] != at[j]) return false;
          }
        }
  return true;
}

bool is_noncrossing(const SetPartition& p) {
  return pattern_free(p, TotalOrder::natural(p.size()), Pattern::crossing);
}

bool is_nonnesting(const SetPartition& p) {
  return pattern_free(p, TotalOrder::natural(p.size()), Pattern::nesting);
}

bool is_connected(const SetPartition& p) {
  return p.size() >= 1 && p.block_index(1) == p.block_index(p.size());
}

std::vector<Block> blocks_by_max(std::vector<Block> blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.back() < b.back(); });
  return blocks;
}

std::vector<Block> blocks_by_max(const SetPartition& p) { return blocks_by_max(p.blocks()); }

std::vector<Block> special_blocks(const SetPartition& p, SpecialKind kind) {
  const auto es = edges(p);
  std::vector<Block> out;
  for (const auto& b : p.blocks()) {
    bool ok = true;
    for (const auto& e : es) {
      if (kind == SpecialKind::nonnested ? (e.lo < b.front() && b.back() < e.hi) : (b.back() < e.lo)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(b);
  }
  return blocks_by_max(std::move(out));
}

int nn_count(const SetPartition& p) {
  return static_cast<int>(special_blocks(p, SpecialKind::nonnested).size());
}

int na_count(const SetPartition& p) {
  return static_cast<int>(special_blocks(p, SpecialKind::nonaligned).size());
}

TypePartition type_of(std::span<const Block> blocks) {
  std::vector<int> parts;
  for (const auto& b : blocks) parts.push_back(static_cast<int>(b.size()));
  return TypePartition(std::move(parts));
}

TypePartition type_of(const SetPartition& p) { return type_of(std::span<const Block>(p.blocks())); }

SetPartition restrict_to(const SetPartition& p, int lo, int hi) {
  if (hi < lo) return {};
  std::vector<Block> out;
  for (const auto& b : p.blocks()) {
    Block nb;
    for (int x : b) {
      if (lo <= x && x <= hi) nb.push_back(x - lo + 1);
    }
    if (!nb.empty()) out.push_back(std::move(nb));
  }
  return SetPartition(hi - lo + 1, std::move(out));
}

std::vector<Block> blocks_except(const SetPartition& p, std::span<const Block> removed) {
  std::vector<Block> out;
  for (const auto& b : p.blocks()) {
    if (std::find(removed.begin(), removed.end(), b) == removed.end()) out.push_back(b);
  }
  return out;
}

std::vector<SetPartition> set_partitions(int n) {
  std::vector<SetPartition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      std::vector<Block> bs(static_cast<std::size_t>(blocks));
      for (int x = 0; x < n; ++x) bs[static_cast<std::size_t>(rgs[static_cast<std::size_t>(x)])].push_back(x + 1);
      out.emplace_back(n, std::move(bs));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetPartition> noncrossing_partitions(int n) {
  std::vector<SetPartition> out;
  std::vector<Block> blocks;
  // open: indices of blocks that may still receive elements, innermost last
  std::function<void(int, std::vector<std::size_t>&)> rec = [&](int i, std::vector<std::size_t>& open) {
    if (i > n) {
      out.emplace_back(n, blocks);
      return;
    }
    blocks.push_back({i});
    open.push_back(blocks.size() - 1);
    rec(i + 1, open);
    open.pop_back();
    blocks.pop_back();
    for (std::size_t d = 0; d < open.size(); ++d) {
      std::vector<std::size_t> next(open.begin(), open.begin() + static_cast<std::ptrdiff_t>(d) + 1);
      blocks[open[d]].push_back(i);
      rec(i + 1, next);
      blocks[open[d]].pop_back();
    }
  };
  std::vector<std::size_t> open;
  rec(1, open);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetPartition> nonnesting_partitions(int n) {
  std::vector<SetPartition> out;
  std::vector<Block> blocks;
  // A new arc (l, i) has the largest right end so far, so its left end must
  // exceed every earlier left end.
  std::function<void(int, int)> rec = [&](int i, int max_left) {
    if (i > n) {
      out.emplace_back(n, blocks);
      return;
    }
    blocks.push_back({i});
    rec(i + 1, max_left);
    blocks.pop_back();
    for (auto& b : blocks) {
      if (b.back() > max_left) {
        int l = b.back();
        b.push_back(i);
        rec(i + 1, l);
        b.pop_back();
      }
    }
  };
  rec(1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Block& b) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  os << '}';
  return os.str();
}

std::string to_string(std::span<const Block> blocks) {
  std::string s = "{";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += ',';
    s += to_string(blocks[i]);
  }
  return s + "}";
}

std::string to_string(const SetPartition& p) { return to_string(std::span<const Block>(p.blocks())); }

std::string to_string(const TypePartition& t) { return to_string(Block(t.parts())); }

std::ostream& operator<<(std::ostream& os, const SetPartition& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const TypePartition& t) { return os << to_string(t); }
std::ostream& operator<<(std::ostream& os, const Edge& e) { return os << '(' << e.lo << ',' << e.hi << ')'; }

}  // namespace coxcat
