#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "coxcat/interpret.hpp"
#include "helpers.hpp"

using namespace coxcat;
using coxcat::testing::P;
using coxcat::testing::S;
using coxcat::testing::T;

namespace {
const SignedPartition kFig4 = S(10, {{1, 4, 5, -10}, {2, 3}, {7, 9, -7, -9}, {6}, {8}});
const SignedPartition kFig5 = S(10, {{1, 2, -8}, {-3, -5, 6, 7, 10}, {4}, {9}});
const SignedPartition kFig6 = S(10, {{1, 3, 7, -7, -3, -1}, {2, 4}, {5, 9, -10, -6}, {8}});
const SignedPartition kFig7 = S(10, {{1, 3, 7, -10, -6}, {2, 4}, {5, 9, -9, -5}, {8}});
const SignedPartition kFig8 = S(10, {{1, 4, 7, -3, -6, 10}, {2}, {5, 9, -8}});
const SetPartition kNnSigma = P(10, {{1, 3, 7}, {2, 4}, {5, 9}, {6, 10}, {8}});

template <class Fwd, class Inv, class Marked>
void check_bijection(Family family, int n, const std::vector<Marked>& targets, Fwd fwd, Inv inv) {
  const auto members = enumerate_signed_family(family, n);
  std::set<Marked> image;
  for (const auto& pi : members) {
    auto m = fwd(pi);
    CHECK(inv(m) == pi);
    image.insert(m);
  }
  CHECK(image == std::set<Marked>(targets.begin(), targets.end()));
  for (const auto& m : targets) CHECK(fwd(inv(m)) == m);
}
}  // namespace

TEST_CASE("pairing") {
  CHECK(pairing({{1, 4, 5}, {10}}) == T({4}));
  CHECK(pairing({}) == T({}));
  CHECK(pairing({{1}, {2}, {3}, {4}}) == T({2, 2}));
  CHECK_THROWS_AS(pairing({{1}}), ValidationError);
}

TEST_CASE("phi NC_B examples") {
  auto m = phi_nc_b(kFig4);
  CHECK(m.sigma == P(10, {{1, 4, 5}, {2, 3}, {6}, {7, 9}, {8}, {10}}));
  CHECK(m.marked == std::vector<Block>{{1, 4, 5}, {7, 9}, {10}});
  CHECK(phi_nc_b_inverse(m) == kFig4);
  auto sigma = P(3, {{1, 3}, {2}});
  CHECK(phi_nc_b(S(3, {{1, 3}, {2}})) == MarkedPair{sigma, {}});
  CHECK(phi_nc_b_inverse(make_marked(P(1, {{1}}), {{1}})) == S(1, {{1, -1}}));
  CHECK_THROWS_AS(phi_nc_b(kFig6), ValidationError);
  CHECK_THROWS_AS(phi_nc_b_inverse(make_marked(P(4, {{1, 4}, {2, 3}}), {{2, 3}})), ValidationError);
}

TEST_CASE("phi NC_D examples") {
  auto t = phi_nc_d(kFig5);
  CHECK(t.pair.sigma == P(9, {{1, 2}, {3, 5}, {4}, {6, 7}, {8}, {9}}));
  CHECK(t.pair.marked == std::vector<Block>{{1, 2}, {3, 5}, {6, 7}, {8}});
  CHECK(t.epsilon == -1);
  CHECK(phi_nc_d_inverse(t) == kFig5);
  CHECK(phi_nc_d(S(3, {{1, 2}, {3}})) == MarkedTriple{MarkedPair{P(2, {{1, 2}}), {}}, 0});
  auto u = phi_nc_d(S(3, {{1, 3}, {2}}));
  CHECK(u == MarkedTriple{make_marked(P(2, {{1}, {2}}), {{1}}), 1});
  CHECK(phi_nc_d_inverse(u) == S(3, {{1, 3}, {2}}));
  CHECK_THROWS_AS(phi_nc_d_inverse(MarkedTriple{MarkedPair{P(2, {{1}, {2}}), {}}, 1}), ValidationError);
}

TEST_CASE("phi NN_B and NN_C examples") {
  auto b = phi_nn_b(kFig6);
  CHECK(b.sigma == kNnSigma);
  CHECK(b.marked == std::vector<Block>{{1, 3, 7}, {5, 9}, {6, 10}});
  CHECK(phi_nn_b_inverse(b) == kFig6);
  auto c = phi_nn_c(kFig7);
  CHECK(c == b);
  CHECK(phi_nn_c_inverse(c) == kFig7);
  CHECK(phi_nn_b_inverse(b) != phi_nn_c_inverse(c));
  CHECK(*phi_nn_b_inverse(b).zero_block() == Block{-7, -3, -1, 1, 3, 7});
  CHECK(*phi_nn_c_inverse(c).zero_block() == Block{-9, -5, 5, 9});
  auto sigma = P(3, {{1, 2}, {3}});
  CHECK(phi_nn_b(S(3, {{1, 2}, {3}})) == MarkedPair{sigma, {}});
  CHECK(phi_nn_c_inverse(MarkedPair{sigma, {}}) == S(3, {{1, 2}, {3}}));
}

TEST_CASE("phi NN_D examples") {
  auto t = phi_nn_d(kFig8);
  CHECK(t.pair.sigma == P(9, {{1, 4, 7}, {2}, {3, 6}, {5, 9}, {8}}));
  CHECK(t.pair.marked == std::vector<Block>{{3, 6}, {1, 4, 7}, {8}, {5, 9}});
  CHECK(t.epsilon == -1);
  auto back = phi_nn_d_inverse(t);
  CHECK(back == kFig8);
  CHECK(back.block_of(10) == Block{-6, -3, 1, 4, 7, 10});
  CHECK(back.block_of(8) == Block{-9, -5, 8});
  auto sigma = P(2, {{1}, {2}});
  CHECK(phi_nn_d(S(3, {{3}, {1}, {2}})) == MarkedTriple{MarkedPair{sigma, {}}, 0});
}

TEST_CASE("interpretation maps are bijections") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    check_bijection(Family::nc_b, n, enumerate_marked_pairs(MarkedClass::nc_nn, n), phi_nc_b, phi_nc_b_inverse);
    check_bijection(Family::nn_b, n, enumerate_marked_pairs(MarkedClass::nn_na, n), phi_nn_b, phi_nn_b_inverse);
    check_bijection(Family::nn_c, n, enumerate_marked_pairs(MarkedClass::nn_na, n), phi_nn_c, phi_nn_c_inverse);
    check_bijection(Family::nc_d, n, enumerate_marked_triples(MarkedClass::nc_nn_pm, n - 1), phi_nc_d,
                    phi_nc_d_inverse);
    check_bijection(Family::nn_d, n, enumerate_marked_triples(MarkedClass::nn_na_pm, n - 1), phi_nn_d,
                    phi_nn_d_inverse);
  }
}

TEST_CASE("type clauses") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& pi : enumerate_signed_family(Family::nc_b, n)) {
      auto m = phi_nc_b(pi);
      CHECK(signed_type(pi) == nc_b_type_clause(m));
      const bool odd = m.marked.size() % 2 == 1;
      CHECK(odd == pi.zero_block().has_value());
      if (odd) {
        Block mid = m.marked[m.marked.size() / 2];
        Block z = mid;
        for (int x : mid) z.push_back(-x);
        std::sort(z.begin(), z.end());
        CHECK(*pi.zero_block() == z);
      }
    }
    for (const auto& pi : enumerate_signed_family(Family::nn_b, n)) {
      auto m = phi_nn_b(pi);
      CHECK(signed_type(pi) == nn_b_type_clause(m));
      if (pi.zero_block()) CHECK(positive_part(*pi.zero_block()) == m.marked.front());
    }
    for (const auto& pi : enumerate_signed_family(Family::nn_c, n)) {
      CHECK(signed_type(pi) == nn_c_type_clause(phi_nn_c(pi)));
    }
    for (const auto& pi : enumerate_signed_family(Family::nc_d, n)) {
      CHECK(signed_type(pi) == nc_d_type_clause(phi_nc_d(pi)));
    }
    for (const auto& pi : enumerate_signed_family(Family::nn_d, n)) {
      CHECK(signed_type(pi) == nn_d_type_clause(phi_nn_d(pi)));
    }
  }
}

TEST_CASE("the two signs never produce the same partition") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_marked_triples(MarkedClass::nc_nn_pm, n)) {
      if (t.epsilon != 1) continue;
      CHECK(phi_nc_d_inverse(t) != phi_nc_d_inverse(MarkedTriple{t.pair, -1}));
    }
    for (const auto& t : enumerate_marked_triples(MarkedClass::nn_na_pm, n)) {
      if (t.epsilon != 1) continue;
      CHECK(phi_nn_d_inverse(t) != phi_nn_d_inverse(MarkedTriple{t.pair, -1}));
    }
  }
}
