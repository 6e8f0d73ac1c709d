#include "coxcat/models.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <set>

#include "coxcat/interpret.hpp"

namespace coxcat {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilies{{
    {Family::pi_b, "pi_b"},
    {Family::nc_a, "nc_a"},
    {Family::nn_a, "nn_a"},
    {Family::nc_b, "nc_b"},
    {Family::nc_d, "nc_d"},
    {Family::nn_b, "nn_b"},
    {Family::nn_c, "nn_c"},
    {Family::nn_d, "nn_d"},
}};

bool signed_member(const SignedPartition& pi, Family f);

// Zero block, if any, must strictly contain {n, -n}.
bool d_zero_block_ok(const SignedPartition& pi) {
  auto z = pi.zero_block();
  if (!z) return true;
  return std::binary_search(z->begin(), z->end(), pi.size()) && z->size() > 2;
}

// pi with +-n deleted, no merging.
SignedPartition delete_n(const SignedPartition& pi) {
  const int n = pi.size();
  std::vector<Block> out;
  for (const auto& b : pi.blocks()) {
    Block c;
    for (int x : b) {
      if (std::abs(x) != n) c.push_back(x);
    }
    if (!c.empty()) out.push_back(std::move(c));
  }
  return SignedPartition(n - 1, std::move(out));
}

// The two stated conditions admit partitions whose blocks through n and -n
// cross each other (+-{1,3,4,-2} for n = 4); deleting +-n must also leave a
// member of NC_B(n-1).
bool nc_d_member(const SignedPartition& pi) {
  if (pi.size() < 1 || !d_zero_block_ok(pi)) return false;
  auto reduced = reduce_d(pi);
  return reduced && signed_member(*reduced, Family::nc_b) && signed_member(delete_n(pi), Family::nc_b);
}

// No order-based test reproduces NN(D_n); membership is "the forward split
// lands in NN^NA_{0,+-1}(n-1) and the inverse rebuilds pi".
bool nn_d_member(const SignedPartition& pi) {
  if (pi.size() < 1 || !d_zero_block_ok(pi) || !reduce_d(pi)) return false;
  const MarkedTriple t = d_split(pi);
  return validate_marked(t, MarkedClass::nn_na_pm) && phi_nn_d_inverse(t) == pi;
}

bool signed_member(const SignedPartition& pi, Family f) {
  const int n = pi.size();
  const std::span<const Block> bs(pi.blocks());
  switch (f) {
    case Family::pi_b:
      return true;
    case Family::nc_b:
      return pattern_free(bs, nc_b_order(n), Pattern::crossing);
    case Family::nn_c:
      return pattern_free(bs, nn_c_order(n), Pattern::nesting);
    case Family::nn_b: {
      std::vector<Block> with_zero = pi.blocks();
      bool grown = false;
      for (auto& b : with_zero) {
        if (negate(b) == b) {
          b.push_back(0);
          std::sort(b.begin(), b.end());
          grown = true;
        }
      }
      if (!grown) with_zero.push_back(Block{0});
      return pattern_free(with_zero, nn_b_order(n), Pattern::nesting);
    }
    case Family::nc_d:
      return nc_d_member(pi);
    case Family::nn_d:
      return nn_d_member(pi);
    default:
      throw ValidationError(std::string(family_name(f)) + " is a family of unsigned partitions");
  }
}

mpz_class m_lambda(const TypePartition& lambda) {
  mpz_class out = 1;
  const auto& ps = lambda.parts();
  for (std::size_t i = 0; i < ps.size();) {
    std::size_t j = i;
    while (j < ps.size() && ps[j] == ps[i]) ++j;
    out *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return out;
}

std::vector<Block> sort_blocks(std::vector<Block> bs) {
  for (auto& b : bs) std::sort(b.begin(), b.end());
  return blocks_by_max(std::move(bs));
}

bool marked_base_ok(const MarkedPair& m, MarkedClass c) {
  const bool nc_sigma = c == MarkedClass::nc_nn || c == MarkedClass::nc_na || c == MarkedClass::nc_nn_pm ||
                        c == MarkedClass::nc_na_pm;
  if (nc_sigma ? !is_noncrossing(m.sigma) : !is_nonnesting(m.sigma)) return false;
  const SpecialKind kind =
      (c == MarkedClass::nc_nn || c == MarkedClass::nc_nn_pm) ? SpecialKind::nonnested : SpecialKind::nonaligned;
  auto special = special_blocks(m.sigma, kind);
  std::set<Block> allowed(special.begin(), special.end());
  std::set<Block> seen;
  for (const auto& b : m.marked) {
    if (!allowed.count(b) || !seen.insert(b).second) return false;
  }
  return true;
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilies) {
    if (fam == f) return name;
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (const auto& [fam, n] : kFamilies) {
    if (n == name) return fam;
  }
  throw ValidationError("unknown family '" + std::string(name) + "'");
}

bool is_signed_family(Family f) { return f != Family::nc_a && f != Family::nn_a; }

TotalOrder nc_b_order(int n) {
  std::vector<int> items;
  for (int i = 1; i <= n; ++i) items.push_back(i);
  for (int i = 1; i <= n; ++i) items.push_back(-i);
  return TotalOrder(std::move(items));
}

TotalOrder nn_b_order(int n) {
  std::vector<int> items;
  for (int i = 1; i <= n; ++i) items.push_back(i);
  items.push_back(0);
  for (int i = n; i >= 1; --i) items.push_back(-i);
  return TotalOrder(std::move(items));
}

TotalOrder nn_c_order(int n) {
  std::vector<int> items;
  for (int i = 1; i <= n; ++i) items.push_back(i);
  for (int i = n; i >= 1; --i) items.push_back(-i);
  return TotalOrder(std::move(items));
}

std::optional<SignedPartition> reduce_d(const SignedPartition& pi) {
  const int n = pi.size();
  if (n < 1) return std::nullopt;
  const int ip = pi.block_index(n);
  const int im = pi.block_index(-n);
  std::vector<Block> out;
  Block merged;
  for (int i = 0; i < static_cast<int>(pi.blocks().size()); ++i) {
    const auto& b = pi.blocks()[static_cast<std::size_t>(i)];
    if (i == ip || i == im) {
      for (int x : b) {
        if (std::abs(x) != n) merged.push_back(x);
      }
    } else {
      out.push_back(b);
    }
  }
  if (!merged.empty()) out.push_back(std::move(merged));
  try {
    return SignedPartition(n - 1, std::move(out));
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

bool is_member(const SetPartition& p, Family f) {
  switch (f) {
    case Family::nc_a:
      return is_noncrossing(p);
    case Family::nn_a:
      return is_nonnesting(p);
    default:
      throw ValidationError(std::string(family_name(f)) + " is a family of signed partitions");
  }
}

bool is_member(const SignedPartition& pi, Family f) { return signed_member(pi, f); }

std::vector<SetPartition> enumerate_unsigned(Family f, int n) {
  if (n < 0) throw ValidationError("n must be nonnegative");
  switch (f) {
    case Family::nc_a:
      return noncrossing_partitions(n);
    case Family::nn_a:
      return nonnesting_partitions(n);
    default:
      throw ValidationError(std::string(family_name(f)) + " is a family of signed partitions");
  }
}

std::vector<SignedPartition> enumerate_signed_family(Family f, int n) {
  if (!is_signed_family(f)) throw ValidationError(std::string(family_name(f)) + " is not a signed family");
  std::vector<SignedPartition> out;
  for (auto& pi : enumerate_signed(n)) {
    if (signed_member(pi, f)) out.push_back(std::move(pi));
  }
  return out;
}

std::vector<SignedPartition> enumerate_nc_b_constructive(int n) {
  std::vector<SignedPartition> out;
  for (const auto& m : enumerate_marked_pairs(MarkedClass::nc_nn, n)) out.push_back(phi_nc_b_inverse(m));
  std::sort(out.begin(), out.end());
  return out;
}

MarkedPair make_marked(SetPartition sigma, std::vector<Block> marked) {
  return MarkedPair{std::move(sigma), sort_blocks(std::move(marked))};
}

std::string_view class_name(MarkedClass c) {
  switch (c) {
    case MarkedClass::nc_nn:
      return "nc_nn";
    case MarkedClass::nc_na:
      return "nc_na";
    case MarkedClass::nn_na:
      return "nn_na";
    case MarkedClass::nc_nn_pm:
      return "nc_nn_pm";
    case MarkedClass::nc_na_pm:
      return "nc_na_pm";
    case MarkedClass::nn_na_pm:
      return "nn_na_pm";
  }
  return "?";
}

bool is_triple_class(MarkedClass c) {
  return c == MarkedClass::nc_nn_pm || c == MarkedClass::nc_na_pm || c == MarkedClass::nn_na_pm;
}

bool validate_marked(const MarkedPair& m, MarkedClass c) { return marked_base_ok(m, c); }

bool validate_marked(const MarkedTriple& m, MarkedClass c) {
  if (!is_triple_class(c)) return false;
  if (m.epsilon < -1 || m.epsilon > 1) return false;
  if (m.pair.marked.empty() && m.epsilon != 0) return false;
  return marked_base_ok(m.pair, c);
}

bool is_nc_nn_bar(const MarkedPair& m) {
  if (!validate_marked(m, MarkedClass::nc_nn)) return false;
  const int n = m.sigma.size();
  return std::none_of(m.marked.begin(), m.marked.end(),
                      [n](const Block& b) { return b.size() == 1 && b.front() == n; });
}

std::vector<MarkedPair> enumerate_marked_pairs(MarkedClass c, int n) {
  const bool nc_sigma = c == MarkedClass::nc_nn || c == MarkedClass::nc_na || c == MarkedClass::nc_nn_pm ||
                        c == MarkedClass::nc_na_pm;
  const SpecialKind kind =
      (c == MarkedClass::nc_nn || c == MarkedClass::nc_nn_pm) ? SpecialKind::nonnested : SpecialKind::nonaligned;
  std::vector<MarkedPair> out;
  for (const auto& sigma : enumerate_unsigned(nc_sigma ? Family::nc_a : Family::nn_a, n)) {
    auto special = special_blocks(sigma, kind);
    const std::size_t k = special.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::vector<Block> x;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1U) x.push_back(special[i]);
      }
      out.push_back(MarkedPair{sigma, std::move(x)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MarkedTriple> enumerate_marked_triples(MarkedClass c, int n) {
  if (!is_triple_class(c)) throw ValidationError(std::string(class_name(c)) + " is not a triple class");
  const MarkedClass base = c == MarkedClass::nc_nn_pm   ? MarkedClass::nc_nn
                           : c == MarkedClass::nc_na_pm ? MarkedClass::nc_na
                                                        : MarkedClass::nn_na;
  std::vector<MarkedTriple> out;
  for (auto& m : enumerate_marked_pairs(base, n)) {
    if (m.marked.empty()) {
      out.push_back(MarkedTriple{std::move(m), 0});
    } else {
      for (int e : {-1, 0, 1}) out.push_back(MarkedTriple{m, e});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MarkedPair> enumerate_nc_nn_bar(int n) {
  std::vector<MarkedPair> out;
  for (auto& m : enumerate_marked_pairs(MarkedClass::nc_nn, n)) {
    if (is_nc_nn_bar(m)) out.push_back(std::move(m));
  }
  return out;
}

mpz_class count_by_type(TypeFamily family, int n, const TypePartition& lambda) {
  if (n < 0) throw ValidationError("n must be nonnegative");
  for (int p : lambda.parts()) {
    if (p < 1) throw ValidationError("type parts must be positive");
  }
  const int w = lambda.weight();
  const int l = lambda.length();
  const mpz_class ml = m_lambda(lambda);
  switch (family) {
    case TypeFamily::A:
      if (w != n) throw ValidationError("type A needs |lambda| = n");
      return factorial(n) / (ml * factorial(n - l + 1));
    case TypeFamily::B:
      if (w > n) throw ValidationError("type B needs |lambda| <= n");
      return factorial(n) / (ml * factorial(n - l));
    case TypeFamily::D:
      if (n < 1) throw ValidationError("type D needs n >= 1");
      if (w > n) throw ValidationError("type D needs |lambda| <= n");
      if (w == n - 1) return 0;
      if (w == n) {
        return (lambda.multiplicity(1) + 2 * (n - l)) * factorial(n - 1) / (ml * factorial(n - l));
      }
      return factorial(n - 1) / (ml * factorial(n - l - 1));
  }
  return 0;
}

std::vector<TypePartition> integer_partitions(int m) {
  if (m < 0) throw ValidationError("integer_partitions needs m >= 0");
  std::vector<TypePartition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

mpz_class binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class factorial(int n) {
  if (n < 0) throw ValidationError("factorial of a negative number");
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

mpz_class catalan(int n) { return binomial(2 * n, n) / (n + 1); }

mpz_class family_cardinality(Family f, int n) {
  switch (f) {
    case Family::pi_b:
      return count_signed(n);
    case Family::nc_a:
    case Family::nn_a:
      return catalan(n);
    case Family::nc_b:
    case Family::nn_b:
    case Family::nn_c:
      return binomial(2 * n, n);
    case Family::nc_d:
    case Family::nn_d:
      if (n < 1) throw ValidationError("type D needs n >= 1");
      return (3 * n - 2) * binomial(2 * n - 2, n - 1) / n;
  }
  return 0;
}

}  // namespace coxcat
