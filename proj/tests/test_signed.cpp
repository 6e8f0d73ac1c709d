#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coxcat/signed.hpp"
#include "helpers.hpp"

using namespace coxcat;
using coxcat::testing::P;
using coxcat::testing::S;
using coxcat::testing::T;

namespace {
SignedPartition example() {
  return validate_signed(8, {{1, -3, 6}, {-1, 3, -6}, {2, 4, -2, -4}, {5, 8}, {-5, -8}, {7}, {-7}});
}
}  // namespace

TEST_CASE("validate_signed") {
  auto pi = example();
  REQUIRE(pi.zero_block().has_value());
  CHECK(*pi.zero_block() == Block{-4, -2, 2, 4});
  CHECK_THROWS_AS(validate_signed(2, {{1, -1}, {2, -2}}), ValidationError);
  CHECK_NOTHROW(validate_signed(3, {{1, 2}, {-1, -2}, {3, -3}}));
  CHECK_THROWS_AS(validate_signed(2, {{1, 2}, {-1}, {-2}}), ValidationError);
  CHECK_THROWS_AS(validate_signed(2, {{1}, {-1}, {2}}), ValidationError);
  CHECK_THROWS_AS(validate_signed(1, {{1, -1}, {1}}), ValidationError);
  CHECK_THROWS_AS(validate_signed(1, {{1, 0, -1}}), ValidationError);
}

TEST_CASE("canonical order does not depend on input order") {
  auto a = validate_signed(3, {{3, -3}, {-1, -2}, {1, 2}});
  auto b = validate_signed(3, {{1, 2}, {-2, -1}, {-3, 3}});
  CHECK(a == b);
  CHECK(a.blocks().front() == Block{1, 2});
}

TEST_CASE("decompose_triple on the worked example") {
  auto d = decompose_triple(example());
  CHECK(d.alpha == P(8, {{1, 6}, {2, 4}, {3}, {5, 8}, {7}}));
  CHECK(d.beta == std::vector<Block>{{3}, {2, 4}, {1, 6}});
  CHECK(d.gamma == make_matching({{{1, 6}, {3}}}));
  CHECK(d.gamma0 == make_matching({{{1, 6}, {3}}, {{0}, {2, 4}}}));
  CHECK(compose_triple(d.alpha, d.beta, d.gamma) == example());
}

TEST_CASE("decompose_triple without mixed blocks") {
  auto d = decompose_triple(S(2, {{1}, {2}}));
  CHECK(d.alpha == P(2, {{1}, {2}}));
  CHECK(d.beta.empty());
  CHECK(d.gamma.pairs.empty());
}

TEST_CASE("compose_triple small cases") {
  CHECK(compose_triple(P(2, {{1}, {2}}), {}, {}) == S(2, {{1}, {2}}));
  CHECK(compose_triple(P(1, {{1}}), {{1}}, {}) == S(1, {{1, -1}}));
  // non-maximal matching
  CHECK_THROWS_AS(compose_triple(P(2, {{1}, {2}}), {{1}, {2}}, {}), ValidationError);
  CHECK_THROWS_AS(compose_triple(P(2, {{1, 2}}), {{1}}, {}), ValidationError);
}

TEST_CASE("counting formula") {
  CHECK(count_signed(1) == 2);
  CHECK(count_signed(2) == 6);
  CHECK(count_signed(6) == 4088);
  CHECK(stirling2(5, 2) == 15);
  CHECK(involutions(4) == 10);
  for (int n = 1; n <= 7; ++n) {
    auto all = enumerate_signed(n);
    CHECK(mpz_class(static_cast<unsigned long>(all.size())) == count_signed(n));
    CHECK(coxcat::testing::all_distinct(all));
  }
  CHECK(coxcat::testing::sorted(enumerate_signed(1)) ==
        coxcat::testing::sorted(std::vector<SignedPartition>{S(1, {{1}}), S(1, {{1, -1}})}));
}

TEST_CASE("decompose and compose are inverse") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& pi : enumerate_signed(n)) {
      auto d = decompose_triple(pi);
      CHECK(compose_triple(d.alpha, d.beta, d.gamma) == pi);
      const bool odd = d.beta.size() % 2 == 1;
      CHECK(odd == pi.zero_block().has_value());
      if (odd) {
        auto support = d.gamma.support();
        for (const auto& b : d.beta) {
          if (std::find(support.begin(), support.end(), b) != support.end()) continue;
          Block z = b;
          for (int x : b) z.push_back(-x);
          std::sort(z.begin(), z.end());
          CHECK(*pi.zero_block() == z);
        }
      }
      CHECK(signed_type(pi).weight() == n - zero_block_size(pi) / 2);
    }
    for (const auto& sigma : set_partitions(n)) {
      const auto& blocks = sigma.blocks();
      for (unsigned mask = 0; mask < (1U << blocks.size()); ++mask) {
        std::vector<Block> x;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
          if (mask >> i & 1U) x.push_back(blocks[i]);
        }
        x = blocks_by_max(x);
        for (const auto& y : maximal_matchings(x)) {
          auto d = decompose_triple(compose_triple(sigma, x, y));
          CHECK(d.alpha == sigma);
          CHECK(d.beta == x);
          CHECK(d.gamma == y);
        }
      }
    }
  }
}

TEST_CASE("signed type") {
  auto pi = example();
  CHECK(signed_type(pi) == T({3, 2, 1}));
  CHECK(zero_block_size(pi) == 4);
  CHECK(to_string(S(1, {{1, -1}})) == "{{-1,1}}");
}
