#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "coxcat/core.hpp"
#include "coxcat/signed.hpp"

namespace coxcat {

enum class Family { pi_b, nc_a, nn_a, nc_b, nc_d, nn_b, nn_c, nn_d };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);
bool is_signed_family(Family f);

/// Orders used by the signed families.
TotalOrder nc_b_order(int n);  // 1 < ... < n < -1 < ... < -n
TotalOrder nn_b_order(int n);  // 1 < ... < n < 0 < -n < ... < -1
TotalOrder nn_c_order(int n);  // 1 < ... < n < -n < ... < -1

/// Union the blocks holding n and -n and drop +-n. Empty when the result is
/// not a type-B partition of [+-(n-1)].
std::optional<SignedPartition> reduce_d(const SignedPartition& pi);

bool is_member(const SetPartition& p, Family f);
bool is_member(const SignedPartition& pi, Family f);

std::vector<SetPartition> enumerate_unsigned(Family f, int n);
/// Filter of enumerate_signed(n), canonical order.
std::vector<SignedPartition> enumerate_signed_family(Family f, int n);
/// NC_B(n) built from NC^NN(n) through the inverse interpretation map.
std::vector<SignedPartition> enumerate_nc_b_constructive(int n);

/// (sigma, X): marked blocks kept sorted by maximum.
struct MarkedPair {
  SetPartition sigma;
  std::vector<Block> marked;

  bool operator==(const MarkedPair&) const = default;
  bool operator<(const MarkedPair& o) const {
    return sigma != o.sigma ? sigma < o.sigma : marked < o.marked;
  }
};

struct MarkedTriple {
  MarkedPair pair;
  int epsilon = 0;

  bool operator==(const MarkedTriple&) const = default;
  bool operator<(const MarkedTriple& o) const {
    return pair != o.pair ? pair < o.pair : epsilon < o.epsilon;
  }
};

MarkedPair make_marked(SetPartition sigma, std::vector<Block> marked);

enum class MarkedClass { nc_nn, nc_na, nn_na, nc_nn_pm, nc_na_pm, nn_na_pm };

std::string_view class_name(MarkedClass c);
bool is_triple_class(MarkedClass c);

bool validate_marked(const MarkedPair& m, MarkedClass c);
bool validate_marked(const MarkedTriple& m, MarkedClass c);
/// NC^NN pair whose marked block containing n (if any) has size >= 2.
bool is_nc_nn_bar(const MarkedPair& m);

std::vector<MarkedPair> enumerate_marked_pairs(MarkedClass c, int n);
std::vector<MarkedTriple> enumerate_marked_triples(MarkedClass c, int n);
std::vector<MarkedPair> enumerate_nc_nn_bar(int n);

enum class TypeFamily { A, B, D };

/// Number of members of NC(n), NC_B(n) or NC_D(n) with the given type.
/// Throws ValidationError when lambda is outside the formula's domain.
mpz_class count_by_type(TypeFamily family, int n, const TypePartition& lambda);

/// All integer partitions of m.
std::vector<TypePartition> integer_partitions(int m);

mpz_class binomial(int n, int k);
mpz_class factorial(int n);
mpz_class catalan(int n);
/// Closed-form cardinality of a family.
mpz_class family_cardinality(Family f, int n);

}  // namespace coxcat
