#pragma once

#include <utility>
#include <vector>

#include "coxcat/core.hpp"
#include "coxcat/models.hpp"
#include "coxcat/signed.hpp"

namespace coxcat {

/// (max, size) of every block, sorted by max.
using Profile = std::vector<std::pair<int, int>>;

Profile block_profile(const SetPartition& p);

/// The partition of [n] with the given profile that avoids `pattern`.
/// Built right to left: a non-maximum element joins the open block with the
/// smallest current minimum (crossing) or the largest (nesting). Throws
/// InvariantError when no such partition exists.
SetPartition from_profile(int n, const Profile& profile, Pattern pattern);

/// NC(n) -> NN(n), same (max, size) profile.
SetPartition rho(const SetPartition& sigma);
SetPartition rho_inverse(const SetPartition& sigma);
/// Reference version: scans NN(n) for the profile. Small n only.
SetPartition rho_by_search(const SetPartition& sigma);

/// NC^NA(n) -> NN^NA(n); marks keep their positions in max order.
MarkedPair rho_bar(const MarkedPair& m);
MarkedPair rho_bar_inverse(const MarkedPair& m);

SetPartition uplus(const SetPartition& a, const SetPartition& b);
/// a must be connected or empty.
SetPartition star(const SetPartition& a, const SetPartition& b);

struct NcDecomposition {
  SetPartition prefix;
  SetPartition connected_part;
  SetPartition tail;

  bool operator==(const NcDecomposition&) const = default;
};

/// p = prefix u+ (connected_part * tail). variant is 1 or 2 and only
/// matters when {n} is a block.
NcDecomposition decompose(const SetPartition& p, int variant);

/// Involution on NC(n) swapping nonnested and nonaligned blocks.
SetPartition xi(const SetPartition& sigma);

/// NC^NN(n) -> NC^NA(n).
MarkedPair xi_bar(const MarkedPair& m);
MarkedPair xi_bar_inverse(const MarkedPair& m);

/// sigma cut at its nonnested blocks: sigma = c_1 u+ c_2 u+ ... u+ c_l.
std::vector<SetPartition> components(const SetPartition& sigma);

/// Rearrangement by a permutation p of [k] (one-line, 1-based), k = |X|.
MarkedPair rearrange(const MarkedPair& m, const std::vector<int>& p);

std::vector<int> iota_b_permutation(int k);
std::vector<int> iota_d_permutation(int k, int epsilon);

MarkedPair iota_b(const MarkedPair& m);
MarkedPair iota_b_inverse(const MarkedPair& m);
MarkedTriple iota_d(const MarkedTriple& t);
MarkedTriple iota_d_inverse(const MarkedTriple& t);

enum class Flavor { B, C, D };

/// NC_B/NC_B/NC_D (n) -> NN_B/NN_C/NN_D (n), type preserving.
SignedPartition nc_to_nn(Flavor f, const SignedPartition& pi);
SignedPartition nn_to_nc(Flavor f, const SignedPartition& pi);

}  // namespace coxcat
