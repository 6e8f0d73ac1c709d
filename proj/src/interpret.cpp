#include "coxcat/interpret.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace coxcat {

namespace {

using Index = std::vector<std::size_t>;

struct Layout {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::optional<std::size_t> zero;
  // the block(s) that absorb n in the D families
  Index special;
};

// idx[i] with idx[m-1-i]; the middle one is left over when m is odd.
void first_with_last(const Index& idx, Layout& out, bool middle_is_zero) {
  const std::size_t m = idx.size();
  for (std::size_t i = 0; i < m / 2; ++i) out.pairs.emplace_back(idx[i], idx[m - 1 - i]);
  if (m % 2 == 1) {
    if (!middle_is_zero) throw InvariantError("odd leftover where none is allowed");
    out.zero = idx[m / 2];
  }
}

Index range(std::size_t lo, std::size_t hi) {
  Index out;
  for (std::size_t i = lo; i < hi; ++i) out.push_back(i);
  return out;
}

Index without(std::size_t k, const Index& removed) {
  Index out;
  for (std::size_t i = 0; i < k; ++i) {
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) out.push_back(i);
  }
  return out;
}

Layout middle_layout(std::size_t k) {
  Layout l;
  first_with_last(range(0, k), l, true);
  return l;
}

Layout first_zero_layout(std::size_t k) {
  Layout l;
  if (k % 2 == 1) {
    l.zero = 0;
    first_with_last(range(1, k), l, false);
  } else {
    first_with_last(range(0, k), l, false);
  }
  return l;
}

// Blocks n joins when epsilon != 0.
Index nc_d_special(std::size_t k) {
  const std::size_t t = k / 2;
  if (k % 2 == 0) return {t - 1, t};
  return {t};
}

Index nn_d_special(std::size_t k) {
  if (k % 2 == 0) return {0, 1};
  return {0};
}

Layout d_layout(std::size_t k, const Index& special) {
  Layout l;
  l.special = special;
  first_with_last(without(k, special), l, false);
  return l;
}

Block union_with_negated(const Block& pos, const Block& neg) {
  Block u = pos;
  for (int x : neg) u.push_back(-x);
  std::sort(u.begin(), u.end());
  return u;
}

Block scaled(int eps, Block b) {
  for (int& x : b) x *= eps;
  std::sort(b.begin(), b.end());
  return b;
}

void push_mirrored(std::vector<Block>& out, Block b) {
  out.push_back(negate(b));
  out.push_back(std::move(b));
}

// Builds the signed partition on [+-n] from (sigma, X) and a layout. With
// `extra` set, n = |sigma| + 1 is added: to the special blocks when
// epsilon != 0, otherwise to the zero block or as +-{n}.
SignedPartition assemble(const MarkedPair& m, const Layout& l, bool extra, int epsilon) {
  const auto& x = m.marked;
  std::vector<Block> out;
  for (const auto& b : blocks_except(m.sigma, x)) push_mirrored(out, b);
  for (const auto& [i, j] : l.pairs) push_mirrored(out, union_with_negated(x[i], x[j]));
  const int n = m.sigma.size() + (extra ? 1 : 0);
  if (l.zero) {
    Block z = union_with_negated(x[*l.zero], x[*l.zero]);
    if (extra && epsilon == 0) {
      z.push_back(n);
      z.push_back(-n);
      std::sort(z.begin(), z.end());
    }
    out.push_back(std::move(z));
  } else if (extra && epsilon == 0) {
    push_mirrored(out, Block{n});
  }
  if (!l.special.empty()) {
    Block s = l.special.size() == 2 ? union_with_negated(x[l.special[0]], x[l.special[1]]) : x[l.special[0]];
    s = scaled(epsilon, std::move(s));
    s.push_back(n);
    std::sort(s.begin(), s.end());
    push_mirrored(out, std::move(s));
  }
  return SignedPartition(n, std::move(out));
}

// sigma = positive parts without `drop`, X = those properly inside their block.
MarkedPair split(const SignedPartition& pi, int drop) {
  std::vector<Block> sigma;
  std::vector<Block> marked;
  for (const auto& c : pi.blocks()) {
    Block a;
    for (int v : c) {
      if (v > 0 && v != drop) a.push_back(v);
    }
    if (a.empty()) continue;
    if (a.size() != c.size()) marked.push_back(a);
    sigma.push_back(std::move(a));
  }
  return make_marked(SetPartition(pi.size() - (drop ? 1 : 0), std::move(sigma)), std::move(marked));
}

void require_member(const SignedPartition& pi, Family f) {
  if (!is_member(pi, f)) throw ValidationError(to_string(pi) + " is not in " + std::string(family_name(f)));
}

void require_class(const MarkedPair& m, MarkedClass c) {
  if (!validate_marked(m, c)) {
    throw ValidationError("(" + to_string(m.sigma) + ", " + to_string(m.marked) + ") is not in " +
                          std::string(class_name(c)));
  }
}

void require_class(const MarkedTriple& t, MarkedClass c) {
  if (!validate_marked(t, c)) {
    throw ValidationError("(" + to_string(t.pair.sigma) + ", " + to_string(t.pair.marked) + ", " +
                          std::to_string(t.epsilon) + ") is not in " + std::string(class_name(c)));
  }
}

TypePartition pairing_of(const std::vector<Block>& x, const Index& idx) {
  std::vector<Block> sub;
  for (std::size_t i : idx) sub.push_back(x[i]);
  return pairing(sub);
}

TypePartition unmarked_type(const MarkedPair& m) {
  auto rest = blocks_except(m.sigma, m.marked);
  return type_of(std::span<const Block>(rest));
}

TypePartition d_clause(const MarkedTriple& t, const Index& zero_odd, const Index& special) {
  const auto& x = t.pair.marked;
  const std::size_t k = x.size();
  TypePartition out = unmarked_type(t.pair);
  if (t.epsilon == 0) {
    if (k % 2 == 0) return out + pairing(x).with(1);
    return out + pairing_of(x, without(k, zero_odd));
  }
  int extra = 1;
  for (std::size_t i : special) extra += static_cast<int>(x[i].size());
  return out + pairing_of(x, without(k, special)).with(extra);
}

}  // namespace

TypePartition pairing(const std::vector<Block>& sorted_by_max) {
  const std::size_t m = sorted_by_max.size();
  if (m % 2 != 0) throw ValidationError("pairing needs an even number of blocks");
  std::vector<int> parts;
  for (std::size_t i = 0; i < m / 2; ++i) {
    parts.push_back(static_cast<int>(sorted_by_max[i].size() + sorted_by_max[m - 1 - i].size()));
  }
  return TypePartition(std::move(parts));
}

MarkedTriple d_split(const SignedPartition& pi) {
  const int n = pi.size();
  const Block& b = pi.block_of(n);
  if (b.size() == 1 || pi.zero_block()) {
    auto reduced = reduce_d(pi);
    if (!reduced) throw InvariantError("reduction failed on a member");
    MarkedPair m = split(*reduced, 0);
    return MarkedTriple{std::move(m), 0};
  }
  int a_r = 0;
  int b_s = 0;
  for (int v : b) {
    if (v > 0 && v != n) a_r = std::max(a_r, v);
    if (v < 0) b_s = std::max(b_s, -v);
  }
  const int eps = (b_s == 0 || (a_r > 0 && a_r < b_s)) ? 1 : -1;
  return MarkedTriple{split(pi, n), eps};
}

MarkedPair phi_nc_b(const SignedPartition& pi) {
  require_member(pi, Family::nc_b);
  return split(pi, 0);
}

SignedPartition phi_nc_b_inverse(const MarkedPair& m) {
  require_class(m, MarkedClass::nc_nn);
  return assemble(m, middle_layout(m.marked.size()), false, 0);
}

MarkedPair phi_nn_b(const SignedPartition& pi) {
  require_member(pi, Family::nn_b);
  return split(pi, 0);
}

SignedPartition phi_nn_b_inverse(const MarkedPair& m) {
  require_class(m, MarkedClass::nn_na);
  return assemble(m, first_zero_layout(m.marked.size()), false, 0);
}

MarkedPair phi_nn_c(const SignedPartition& pi) {
  require_member(pi, Family::nn_c);
  return split(pi, 0);
}

SignedPartition phi_nn_c_inverse(const MarkedPair& m) {
  require_class(m, MarkedClass::nn_na);
  return assemble(m, middle_layout(m.marked.size()), false, 0);
}

MarkedTriple phi_nc_d(const SignedPartition& pi) {
  require_member(pi, Family::nc_d);
  return d_split(pi);
}

SignedPartition phi_nc_d_inverse(const MarkedTriple& t) {
  require_class(t, MarkedClass::nc_nn_pm);
  const std::size_t k = t.pair.marked.size();
  if (t.epsilon == 0) return assemble(t.pair, middle_layout(k), true, 0);
  return assemble(t.pair, d_layout(k, nc_d_special(k)), true, t.epsilon);
}

MarkedTriple phi_nn_d(const SignedPartition& pi) {
  require_member(pi, Family::nn_d);
  return d_split(pi);
}

SignedPartition phi_nn_d_inverse(const MarkedTriple& t) {
  require_class(t, MarkedClass::nn_na_pm);
  const std::size_t k = t.pair.marked.size();
  if (t.epsilon == 0) return assemble(t.pair, first_zero_layout(k), true, 0);
  return assemble(t.pair, d_layout(k, nn_d_special(k)), true, t.epsilon);
}

TypePartition nc_b_type_clause(const MarkedPair& m) {
  const std::size_t k = m.marked.size();
  TypePartition out = unmarked_type(m);
  if (k % 2 == 0) return out + pairing(m.marked);
  return out + pairing_of(m.marked, without(k, {k / 2}));
}

TypePartition nn_b_type_clause(const MarkedPair& m) {
  const std::size_t k = m.marked.size();
  TypePartition out = unmarked_type(m);
  if (k % 2 == 0) return out + pairing(m.marked);
  return out + pairing_of(m.marked, without(k, {0}));
}

TypePartition nn_c_type_clause(const MarkedPair& m) { return nc_b_type_clause(m); }

TypePartition nc_d_type_clause(const MarkedTriple& t) {
  const std::size_t k = t.pair.marked.size();
  return d_clause(t, {k / 2}, t.epsilon == 0 ? Index{} : nc_d_special(k));
}

TypePartition nn_d_type_clause(const MarkedTriple& t) {
  const std::size_t k = t.pair.marked.size();
  return d_clause(t, {0}, t.epsilon == 0 ? Index{} : nn_d_special(k));
}

}  // namespace coxcat
