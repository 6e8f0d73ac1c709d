#include "coxcat/typemaps.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coxcat/interpret.hpp"

namespace coxcat {

namespace {

void require_noncrossing(const SetPartition& p) {
  if (!is_noncrossing(p)) throw ValidationError(to_string(p) + " is not noncrossing");
}

void require_class(const MarkedPair& m, MarkedClass c) {
  if (!validate_marked(m, c)) {
    throw ValidationError("(" + to_string(m.sigma) + ", " + to_string(m.marked) + ") is not in " +
                          std::string(class_name(c)));
  }
}

std::size_t position_of(const std::vector<Block>& list, const Block& b) {
  auto it = std::find(list.begin(), list.end(), b);
  if (it == list.end()) throw InvariantError("block " + to_string(b) + " not found");
  return static_cast<std::size_t>(it - list.begin());
}

// Marks of `from` (positions in `from_special`) moved to the same positions
// of `to_special`.
std::vector<Block> transfer(const std::vector<Block>& marked, const std::vector<Block>& from_special,
                            const std::vector<Block>& to_special) {
  if (from_special.size() != to_special.size()) {
    throw InvariantError("special block counts differ: " + std::to_string(from_special.size()) + " vs " +
                         std::to_string(to_special.size()));
  }
  std::vector<Block> out;
  for (const auto& b : marked) out.push_back(to_special[position_of(from_special, b)]);
  return out;
}

MarkedPair rho_bar_impl(const MarkedPair& m, const SetPartition& image) {
  std::set<int> maxima;
  for (const auto& b : m.marked) maxima.insert(b.back());
  std::vector<Block> out;
  for (const auto& b : image.blocks()) {
    if (maxima.count(b.back())) out.push_back(b);
  }
  return make_marked(image, std::move(out));
}

// {n} is not a block of p.
SetPartition xi_core(const SetPartition& p) {
  std::vector<SetPartition> sig, sig_tail;
  for (SetPartition cur = p; !cur.empty();) {
    auto d = decompose(cur, 1);
    sig.push_back(std::move(d.connected_part));
    sig_tail.push_back(std::move(d.tail));
    cur = std::move(d.prefix);
  }
  std::vector<SetPartition> tau, tau_pre;
  for (SetPartition cur = p; !cur.empty();) {
    auto d = decompose(cur, 2);
    tau_pre.push_back(std::move(d.prefix));
    tau.push_back(std::move(d.connected_part));
    cur = std::move(d.tail);
  }
  if (static_cast<int>(sig.size()) != nn_count(p) || static_cast<int>(tau.size()) != na_count(p)) {
    throw InvariantError("decomposition lengths disagree with nn/na of " + to_string(p));
  }
  SetPartition inner;
  for (std::size_t i = sig.size(); i-- > 1;) inner = uplus(sig_tail[i], star(sig[i], inner));
  SetPartition tail = star(sig.front(), inner);
  SetPartition head;
  for (std::size_t i = tau.size(); i-- > 1;) head = uplus(head, star(tau[i], tau_pre[i]));
  SetPartition out = uplus(head, tail);
  if (out.size() != p.size()) throw InvariantError("xi changed the size of " + to_string(p));
  return out;
}

std::vector<int> inverse_permutation(const std::vector<int>& p) {
  std::vector<int> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i + 1);
  return q;
}

MarkedTriple rearrange_triple(const MarkedTriple& t, const std::vector<int>& p) {
  if (!validate_marked(t, MarkedClass::nc_nn_pm)) {
    throw ValidationError("(" + to_string(t.pair.sigma) + ", " + to_string(t.pair.marked) + ", " +
                          std::to_string(t.epsilon) + ") is not in nc_nn_pm");
  }
  return MarkedTriple{rearrange(t.pair, p), t.epsilon};
}

}  // namespace

Profile block_profile(const SetPartition& p) {
  Profile out;
  for (const auto& b : blocks_by_max(p)) out.emplace_back(b.back(), static_cast<int>(b.size()));
  return out;
}

SetPartition from_profile(int n, const Profile& profile, Pattern pattern) {
  std::map<int, int> size_at;
  int total = 0;
  for (const auto& [mx, sz] : profile) {
    if (mx < 1 || mx > n || sz < 1 || !size_at.emplace(mx, sz).second) {
      throw ValidationError("malformed profile entry (" + std::to_string(mx) + "," + std::to_string(sz) + ")");
    }
    total += sz;
  }
  if (total != n) throw ValidationError("profile sizes do not sum to n");
  std::vector<Block> blocks;  // built descending
  std::vector<int> need;
  std::vector<std::size_t> open;
  for (int i = n; i >= 1; --i) {
    if (auto it = size_at.find(i); it != size_at.end()) {
      blocks.push_back({i});
      need.push_back(it->second - 1);
      if (need.back() > 0) open.push_back(blocks.size() - 1);
      continue;
    }
    if (open.empty()) throw InvariantError("no open block for element " + std::to_string(i));
    auto pick = std::min_element(open.begin(), open.end(), [&](std::size_t a, std::size_t b) {
      return pattern == Pattern::crossing ? blocks[a].back() < blocks[b].back()
                                          : blocks[a].back() > blocks[b].back();
    });
    const std::size_t j = *pick;
    blocks[j].push_back(i);
    if (--need[j] == 0) open.erase(pick);
  }
  if (!open.empty()) throw InvariantError("profile cannot be filled");
  SetPartition out(n, std::move(blocks));
  const bool ok = pattern == Pattern::crossing ? is_noncrossing(out) : is_nonnesting(out);
  if (!ok || block_profile(out) != profile) throw InvariantError("profile construction failed for n=" + std::to_string(n));
  return out;
}

SetPartition rho(const SetPartition& sigma) {
  require_noncrossing(sigma);
  return from_profile(sigma.size(), block_profile(sigma), Pattern::nesting);
}

SetPartition rho_inverse(const SetPartition& sigma) {
  if (!is_nonnesting(sigma)) throw ValidationError(to_string(sigma) + " is not nonnesting");
  return from_profile(sigma.size(), block_profile(sigma), Pattern::crossing);
}

SetPartition rho_by_search(const SetPartition& sigma) {
  require_noncrossing(sigma);
  const Profile want = block_profile(sigma);
  std::vector<SetPartition> hits;
  for (auto& p : nonnesting_partitions(sigma.size())) {
    if (block_profile(p) == want) hits.push_back(std::move(p));
  }
  if (hits.size() != 1) {
    throw InvariantError(std::to_string(hits.size()) + " nonnesting partitions match " + to_string(sigma));
  }
  return hits.front();
}

MarkedPair rho_bar(const MarkedPair& m) {
  require_class(m, MarkedClass::nc_na);
  return rho_bar_impl(m, rho(m.sigma));
}

MarkedPair rho_bar_inverse(const MarkedPair& m) {
  require_class(m, MarkedClass::nn_na);
  return rho_bar_impl(m, rho_inverse(m.sigma));
}

SetPartition uplus(const SetPartition& a, const SetPartition& b) {
  std::vector<Block> out = a.blocks();
  for (Block blk : b.blocks()) {
    for (int& x : blk) x += a.size();
    out.push_back(std::move(blk));
  }
  return SetPartition(a.size() + b.size(), std::move(out));
}

SetPartition star(const SetPartition& a, const SetPartition& b) {
  const int total = a.size() + b.size() + 1;
  if (a.empty()) {
    std::vector<Block> out = b.blocks();
    out.push_back({total});
    return SetPartition(total, std::move(out));
  }
  if (!is_connected(a)) throw ValidationError(to_string(a) + " is not connected");
  std::vector<Block> out = uplus(a, b).blocks();
  for (auto& blk : out) {
    if (blk.back() == a.size()) blk.push_back(total);
  }
  return SetPartition(total, std::move(out));
}

NcDecomposition decompose(const SetPartition& p, int variant) {
  if (variant != 1 && variant != 2) throw ValidationError("decompose variant must be 1 or 2");
  const int n = p.size();
  if (n < 1) throw ValidationError("decompose needs n >= 1");
  require_noncrossing(p);
  const Block& b = p.block_of(n);
  if (b.size() == 1) {
    SetPartition rest = restrict_to(p, 1, n - 1);
    if (variant == 1) return NcDecomposition{std::move(rest), {}, {}};
    return NcDecomposition{{}, {}, std::move(rest)};
  }
  const int lo = b.front();
  const int second = b[b.size() - 2];
  NcDecomposition d{restrict_to(p, 1, lo - 1), restrict_to(p, lo, second), restrict_to(p, second + 1, n - 1)};
  if (uplus(d.prefix, star(d.connected_part, d.tail)) != p) {
    throw InvariantError("decomposition does not reassemble " + to_string(p));
  }
  return d;
}

SetPartition xi(const SetPartition& sigma) {
  require_noncrossing(sigma);
  const int n = sigma.size();
  int k = n;
  while (k >= 1 && sigma.block_of(k).size() == 1) --k;
  if (k == 0) return sigma;
  std::vector<Block> out = xi_core(restrict_to(sigma, 1, k)).blocks();
  for (int i = k + 1; i <= n; ++i) out.push_back({i});
  return SetPartition(n, std::move(out));
}

MarkedPair xi_bar(const MarkedPair& m) {
  require_class(m, MarkedClass::nc_nn);
  SetPartition image = xi(m.sigma);
  auto moved = transfer(m.marked, special_blocks(m.sigma, SpecialKind::nonnested),
                        special_blocks(image, SpecialKind::nonaligned));
  return make_marked(std::move(image), std::move(moved));
}

MarkedPair xi_bar_inverse(const MarkedPair& m) {
  require_class(m, MarkedClass::nc_na);
  SetPartition image = xi(m.sigma);
  auto moved = transfer(m.marked, special_blocks(m.sigma, SpecialKind::nonaligned),
                        special_blocks(image, SpecialKind::nonnested));
  return make_marked(std::move(image), std::move(moved));
}

std::vector<SetPartition> components(const SetPartition& sigma) {
  require_noncrossing(sigma);
  std::vector<SetPartition> out;
  int next = 1;
  for (const auto& b : special_blocks(sigma, SpecialKind::nonnested)) {
    if (b.front() != next) throw InvariantError("nonnested spans do not tile " + to_string(sigma));
    out.push_back(restrict_to(sigma, b.front(), b.back()));
    next = b.back() + 1;
  }
  if (next != sigma.size() + 1) throw InvariantError("nonnested spans do not tile " + to_string(sigma));
  return out;
}

MarkedPair rearrange(const MarkedPair& m, const std::vector<int>& p) {
  require_class(m, MarkedClass::nc_nn);
  const std::size_t k = m.marked.size();
  std::vector<int> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i + 1)) throw ValidationError("not a permutation");
  }
  if (p.size() != k) throw ValidationError("permutation length differs from |X|");
  const auto nn = special_blocks(m.sigma, SpecialKind::nonnested);
  const auto comps = components(m.sigma);
  std::vector<std::size_t> slots;
  for (const auto& b : m.marked) slots.push_back(position_of(nn, b));
  std::vector<std::size_t> a(comps.size());
  for (std::size_t j = 0; j < a.size(); ++j) a[j] = j;
  for (std::size_t t = 0; t < k; ++t) a[slots[t]] = slots[static_cast<std::size_t>(p[t] - 1)];
  SetPartition out;
  for (std::size_t j : a) out = uplus(out, comps[j]);
  const auto nn_out = special_blocks(out, SpecialKind::nonnested);
  std::vector<Block> marked;
  for (std::size_t s : slots) marked.push_back(nn_out[s]);
  return make_marked(std::move(out), std::move(marked));
}

std::vector<int> iota_b_permutation(int k) {
  std::vector<int> p;
  if (k % 2 == 0) {
    for (int i = 1; i <= k; ++i) p.push_back(i);
    return p;
  }
  const int t = (k - 1) / 2;
  p.push_back(t + 1);
  for (int i = 1; i <= k; ++i) {
    if (i != t + 1) p.push_back(i);
  }
  return p;
}

std::vector<int> iota_d_permutation(int k, int epsilon) {
  if (k % 2 == 1 || epsilon == 0) return iota_b_permutation(k);
  const int t = k / 2;
  std::vector<int> p{t, t + 1};
  for (int i = 1; i <= k; ++i) {
    if (i != t && i != t + 1) p.push_back(i);
  }
  return p;
}

MarkedPair iota_b(const MarkedPair& m) {
  return rearrange(m, iota_b_permutation(static_cast<int>(m.marked.size())));
}

MarkedPair iota_b_inverse(const MarkedPair& m) {
  return rearrange(m, inverse_permutation(iota_b_permutation(static_cast<int>(m.marked.size()))));
}

MarkedTriple iota_d(const MarkedTriple& t) {
  return rearrange_triple(t, iota_d_permutation(static_cast<int>(t.pair.marked.size()), t.epsilon));
}

MarkedTriple iota_d_inverse(const MarkedTriple& t) {
  return rearrange_triple(
      t, inverse_permutation(iota_d_permutation(static_cast<int>(t.pair.marked.size()), t.epsilon)));
}

SignedPartition nc_to_nn(Flavor f, const SignedPartition& pi) {
  switch (f) {
    case Flavor::B:
      return phi_nn_b_inverse(rho_bar(xi_bar(iota_b(phi_nc_b(pi)))));
    case Flavor::C:
      return phi_nn_c_inverse(rho_bar(xi_bar(phi_nc_b(pi))));
    case Flavor::D: {
      MarkedTriple t = iota_d(phi_nc_d(pi));
      return phi_nn_d_inverse(MarkedTriple{rho_bar(xi_bar(t.pair)), t.epsilon});
    }
  }
  throw ValidationError("unknown flavor");
}

SignedPartition nn_to_nc(Flavor f, const SignedPartition& pi) {
  switch (f) {
    case Flavor::B:
      return phi_nc_b_inverse(iota_b_inverse(xi_bar_inverse(rho_bar_inverse(phi_nn_b(pi)))));
    case Flavor::C:
      return phi_nc_b_inverse(xi_bar_inverse(rho_bar_inverse(phi_nn_c(pi))));
    case Flavor::D: {
      MarkedTriple t = phi_nn_d(pi);
      MarkedTriple back{xi_bar_inverse(rho_bar_inverse(t.pair)), t.epsilon};
      return phi_nc_d_inverse(iota_d_inverse(back));
    }
  }
  throw ValidationError("unknown flavor");
}

}  // namespace coxcat
