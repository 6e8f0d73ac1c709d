#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <map>
#include <set>

#include "coxcat/models.hpp"
#include "helpers.hpp"

using namespace coxcat;
using coxcat::testing::P;
using coxcat::testing::S;
using coxcat::testing::T;

namespace {
const SetPartition kFig2 = P(10, {{1, 4, 10}, {2, 3}, {5, 6, 7, 9}, {8}});

mpz_class size_of(std::size_t s) { return mpz_class(static_cast<unsigned long>(s)); }
}  // namespace

TEST_CASE("family names") {
  for (auto f : {Family::pi_b, Family::nc_a, Family::nn_a, Family::nc_b, Family::nc_d, Family::nn_b,
                 Family::nn_c, Family::nn_d}) {
    CHECK(parse_family(family_name(f)) == f);
  }
  CHECK_THROWS_AS(parse_family("nc_e"), ValidationError);
}

TEST_CASE("membership examples") {
  auto fig4 = S(10, {{1, 4, 5, -10}, {2, 3}, {7, 9, -7, -9}, {6}, {8}});
  CHECK(is_member(fig4, Family::nc_b));
  auto fig5 = S(10, {{1, 2, -8}, {-3, -5, 6, 7, 10}, {4}, {9}});
  CHECK(is_member(fig5, Family::nc_d));
  CHECK_FALSE(is_member(S(3, {{3, -3}, {1}, {2}}), Family::nc_d));
  CHECK_FALSE(is_member(S(3, {{3, -3}, {1}, {2}}), Family::nn_d));
  auto fig6 = S(10, {{1, 3, 7, -7, -3, -1}, {2, 4}, {5, 9, -10, -6}, {8}});
  CHECK(is_member(fig6, Family::nn_b));
  auto fig7 = S(10, {{1, 3, 7, -10, -6}, {2, 4}, {5, 9, -9, -5}, {8}});
  CHECK(is_member(fig7, Family::nn_c));
  auto fig8 = S(10, {{1, 4, 7, -3, -6, 10}, {2}, {5, 9, -8}});
  CHECK(is_member(fig8, Family::nn_d));
  CHECK(is_member(kFig2, Family::nc_a));
  CHECK_FALSE(is_member(kFig2, Family::nn_a));
  CHECK_THROWS_AS(is_member(kFig2, Family::nc_b), ValidationError);
  CHECK_THROWS_AS(is_member(fig4, Family::nc_a), ValidationError);
}

TEST_CASE("family sizes") {
  CHECK(enumerate_unsigned(Family::nc_a, 4).size() == 14);
  CHECK(enumerate_unsigned(Family::nn_a, 4).size() == 14);
  CHECK(enumerate_signed_family(Family::nc_b, 3).size() == 20);
  CHECK(enumerate_signed_family(Family::nn_b, 3).size() == 20);
  CHECK(enumerate_signed_family(Family::nn_c, 3).size() == 20);
  CHECK(enumerate_signed_family(Family::nc_d, 3).size() == 14);
  CHECK(enumerate_signed_family(Family::nn_d, 3).size() == 14);
  for (int n = 1; n <= 12; ++n) CHECK(size_of(enumerate_unsigned(Family::nc_a, n).size()) == catalan(n));
  for (int n = 1; n <= 6; ++n) {
    for (auto f : {Family::nc_b, Family::nn_b, Family::nn_c, Family::nc_d, Family::nn_d, Family::pi_b}) {
      CAPTURE(family_name(f));
      CAPTURE(n);
      CHECK(size_of(enumerate_signed_family(f, n).size()) == family_cardinality(f, n));
    }
  }
  CHECK(family_cardinality(Family::nc_d, 2) == 4);
  CHECK(family_cardinality(Family::nc_d, 6) == 672);
}

TEST_CASE("constructive NC_B enumeration matches the filter") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(enumerate_nc_b_constructive(n) == enumerate_signed_family(Family::nc_b, n));
  }
  for (int n = 7; n <= 9; ++n) {
    auto c = enumerate_nc_b_constructive(n);
    CHECK(size_of(c.size()) == binomial(2 * n, n));
    CHECK(coxcat::testing::all_distinct(c));
  }
}

TEST_CASE("reduce_d") {
  auto r = reduce_d(S(3, {{1}, {2}, {3}}));
  REQUIRE(r.has_value());
  CHECK(*r == S(2, {{1}, {2}}));
  // the blocks through 3 and -3 merge into a zero block
  CHECK(*reduce_d(S(3, {{1, 3}, {2}})) == S(2, {{1, -1}, {2}}));
  CHECK(*reduce_d(S(3, {{1, -3}, {2}})) == S(2, {{1, -1}, {2}}));
}

TEST_CASE("type D needs more than the two reduction conditions") {
  // +-{1,3,4,-2}: the reduction is a zero block, yet the two halves cross
  auto pi = S(4, {{1, 3, 4, -2}});
  CHECK(is_member(*reduce_d(pi), Family::nc_b));
  CHECK_FALSE(is_member(pi, Family::nc_d));
  // a member of NN_D whose reduction is not in NN_B(4)
  auto nn = S(5, {{1, 4}, {-2, 3, 5}});
  CHECK_FALSE(is_member(*reduce_d(nn), Family::nn_b));
  CHECK(is_member(nn, Family::nn_d));
}

TEST_CASE("validate_marked examples") {
  CHECK(validate_marked(make_marked(kFig2, {{8}, {1, 4, 10}}), MarkedClass::nc_na));
  CHECK_FALSE(validate_marked(make_marked(kFig2, {{2, 3}}), MarkedClass::nc_nn));
  for (auto c : {MarkedClass::nc_nn_pm, MarkedClass::nc_na_pm, MarkedClass::nn_na_pm}) {
    CHECK_FALSE(validate_marked(MarkedTriple{MarkedPair{SetPartition::singletons(2), {}}, 1}, c));
    CHECK(validate_marked(MarkedTriple{MarkedPair{SetPartition::singletons(2), {}}, 0}, c));
  }
  CHECK_FALSE(validate_marked(MarkedTriple{make_marked(SetPartition::singletons(2), {{1}}), 2},
                              MarkedClass::nc_nn_pm));
  // a marked block that is not a block of sigma
  CHECK_FALSE(validate_marked(MarkedPair{SetPartition::singletons(2), {{1, 2}}}, MarkedClass::nc_nn));
  // sigma must be NN for nn_na
  CHECK_FALSE(validate_marked(MarkedPair{P(4, {{1, 4}, {2, 3}}), {}}, MarkedClass::nn_na));
}

TEST_CASE("marked class sizes") {
  for (int n = 1; n <= 6; ++n) {
    const auto b = binomial(2 * n, n);
    CHECK(size_of(enumerate_marked_pairs(MarkedClass::nc_nn, n).size()) == b);
    CHECK(size_of(enumerate_marked_pairs(MarkedClass::nc_na, n).size()) == b);
    CHECK(size_of(enumerate_marked_pairs(MarkedClass::nn_na, n).size()) == b);
    const auto d = family_cardinality(Family::nc_d, n + 1);
    CHECK(size_of(enumerate_marked_triples(MarkedClass::nc_nn_pm, n).size()) == d);
    CHECK(size_of(enumerate_marked_triples(MarkedClass::nn_na_pm, n).size()) == d);
    CHECK(size_of(enumerate_nc_nn_bar(n + 1).size()) == d);
    for (const auto& m : enumerate_nc_nn_bar(n + 1)) CHECK(is_nc_nn_bar(m));
  }
}

TEST_CASE("count_by_type examples") {
  CHECK(count_by_type(TypeFamily::A, 4, T({2, 2})) == 2);
  CHECK(count_by_type(TypeFamily::B, 2, T({1})) == 2);
  CHECK(count_by_type(TypeFamily::D, 3, T({3})) == 4);
  CHECK(count_by_type(TypeFamily::D, 3, T({2})) == 0);
  CHECK_THROWS_AS(count_by_type(TypeFamily::A, 4, T({2})), ValidationError);
  CHECK_THROWS_AS(count_by_type(TypeFamily::B, 2, T({2, 1})), ValidationError);
  CHECK_THROWS_AS(count_by_type(TypeFamily::D, 2, T({2, 1})), ValidationError);
}

TEST_CASE("count_by_type matches enumeration") {
  for (int n = 1; n <= 6; ++n) {
    std::map<TypePartition, mpz_class> a, b, d;
    for (const auto& p : enumerate_unsigned(Family::nc_a, n)) a[type_of(p)] += 1;
    for (const auto& p : enumerate_signed_family(Family::nc_b, n)) b[signed_type(p)] += 1;
    for (const auto& p : enumerate_signed_family(Family::nc_d, n)) d[signed_type(p)] += 1;
    mpz_class total_a = 0, total_b = 0, total_d = 0;
    for (const auto& l : integer_partitions(n)) {
      CHECK(count_by_type(TypeFamily::A, n, l) == a[l]);
      total_a += count_by_type(TypeFamily::A, n, l);
    }
    for (int m = 0; m <= n; ++m) {
      for (const auto& l : integer_partitions(m)) {
        CAPTURE(n);
        CAPTURE(to_string(l));
        CHECK(count_by_type(TypeFamily::B, n, l) == b[l]);
        total_b += count_by_type(TypeFamily::B, n, l);
        CHECK(count_by_type(TypeFamily::D, n, l) == d[l]);
        total_d += count_by_type(TypeFamily::D, n, l);
      }
    }
    CHECK(total_a == catalan(n));
    CHECK(total_b == binomial(2 * n, n));
    CHECK(total_d == family_cardinality(Family::nc_d, n));
  }
}

TEST_CASE("integer partitions and helpers") {
  CHECK(integer_partitions(4).size() == 5);
  CHECK(integer_partitions(0).size() == 1);
  CHECK(binomial(10, 5) == 252);
  CHECK(factorial(6) == 720);
  CHECK(catalan(10) == 16796);
}

namespace {
// Positive roots of B_n or D_n in the simple-root basis, with the pair of
// elements each root joins: e_i - e_j joins i and j, e_i + e_j joins i and
// -j, e_i joins i and -i.
struct Root {
  std::vector<int> coeff;
  int a;
  int b;
};

std::vector<int> span(int n, int from, int to) {  // alpha_from + ... + alpha_to (1-based)
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  for (int i = from; i <= to; ++i) v[static_cast<std::size_t>(i - 1)] += 1;
  return v;
}

std::vector<int> add(std::vector<int> a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

// B_n: alpha_i = e_i - e_i+1, alpha_n = e_n.  D_n: alpha_n = e_n-1 + e_n.
std::vector<Root> positive_roots(int n, bool type_d) {
  std::vector<Root> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back({span(n, i, j - 1), i, j});
    if (!type_d) {
      out.push_back({span(n, i, n), i, -i});
      for (int j = i + 1; j <= n; ++j) out.push_back({add(span(n, i, n), span(n, j, n)), i, -j});
    } else {
      for (int j = i + 1; j <= n; ++j) {
        // e_i + e_j = (e_i - e_n) + (e_j + e_n), e_j + e_n = alpha_j..alpha_n-2 + alpha_n
        std::vector<int> plus_n = span(n, j, n - 2);
        plus_n[static_cast<std::size_t>(n - 1)] += 1;
        std::vector<int> c = j == n ? add(span(n, i, n - 2), span(n, n, n)) : add(span(n, i, n - 1), plus_n);
        out.push_back({c, i, -j});
      }
    }
  }
  return out;
}

std::set<SignedPartition> antichain_partitions(int n, bool type_d) {
  const auto roots = positive_roots(n, type_d);
  const std::size_t m = roots.size();
  auto leq = [&](std::size_t x, std::size_t y) {
    for (std::size_t k = 0; k < roots[x].coeff.size(); ++k) {
      if (roots[x].coeff[k] > roots[y].coeff[k]) return false;
    }
    return true;
  };
  std::set<SignedPartition> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    std::map<int, int> parent;
    for (int x = -n; x <= n; ++x) parent[x] = x;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t r : chosen) {
      parent[find(roots[r].a)] = find(roots[r].b);
      parent[find(-roots[r].a)] = find(-roots[r].b);
    }
    std::map<int, Block> groups;
    for (int x = -n; x <= n; ++x) {
      if (x != 0) groups[find(x)].push_back(x);
    }
    std::vector<Block> blocks;
    for (auto& [r, b] : groups) blocks.push_back(b);
    out.insert(validate_signed(n, blocks));
    for (std::size_t k = start; k < m; ++k) {
      bool ok = true;
      for (std::size_t c : chosen) ok = ok && !leq(k, c) && !leq(c, k);
      if (!ok) continue;
      chosen.push_back(k);
      rec(k + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}
}  // namespace

TEST_CASE("nonnesting type D partitions are the root poset antichains") {
  for (int n = 2; n <= 6; ++n) {
    auto fam = enumerate_signed_family(Family::nn_d, n);
    CHECK(antichain_partitions(n, true) == std::set<SignedPartition>(fam.begin(), fam.end()));
  }
}

TEST_CASE("nonnesting type B partitions are the root poset antichains") {
  for (int n = 1; n <= 6; ++n) {
    auto fam = enumerate_signed_family(Family::nn_b, n);
    CHECK(antichain_partitions(n, false) == std::set<SignedPartition>(fam.begin(), fam.end()));
  }
}
