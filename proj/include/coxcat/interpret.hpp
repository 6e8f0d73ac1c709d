#pragma once

#include <vector>

#include "coxcat/core.hpp"
#include "coxcat/models.hpp"
#include "coxcat/signed.hpp"

namespace coxcat {

/// {|A_1 u A_2k|, |A_2 u A_2k-1|, ..., |A_k u A_k+1|} for blocks sorted by
/// maximum. Throws ValidationError on an odd count.
TypePartition pairing(const std::vector<Block>& sorted_by_max);

// Signed families <-> marked type-A objects. Forward maps check membership,
// inverses check the marked class; both throw ValidationError.
//
// In every inverse a matched pair {A_i, A_j} with max(A_i) < max(A_j) becomes
// the mirror pair +-(A_i u -A_j).

/// NC_B(n) -> NC^NN(n): drop negatives, mark the blocks that lost elements.
MarkedPair phi_nc_b(const SignedPartition& pi);
/// Pairs A_i with A_k+1-i; the middle block of an odd X becomes the zero block.
SignedPartition phi_nc_b_inverse(const MarkedPair& m);

/// NN_B(n) -> NN^NA(n).
MarkedPair phi_nn_b(const SignedPartition& pi);
/// The first block of an odd X becomes the zero block, the rest pair up
/// first-with-last.
SignedPartition phi_nn_b_inverse(const MarkedPair& m);

/// NN_C(n) -> NN^NA(n); inverse uses the middle-block convention.
MarkedPair phi_nn_c(const SignedPartition& pi);
SignedPartition phi_nn_c_inverse(const MarkedPair& m);

/// The type-D forward construction with no membership check. Throws
/// InvariantError when the reduction of pi is not a type-B partition.
MarkedTriple d_split(const SignedPartition& pi);

/// NC_D(n) -> NC^NN_{0,+-1}(n-1).
MarkedTriple phi_nc_d(const SignedPartition& pi);
SignedPartition phi_nc_d_inverse(const MarkedTriple& t);

/// NN_D(n) -> NN^NA_{0,+-1}(n-1).
MarkedTriple phi_nn_d(const SignedPartition& pi);
SignedPartition phi_nn_d_inverse(const MarkedTriple& t);

// Predicted signed type type(sigma \ X) + T for each map.
TypePartition nc_b_type_clause(const MarkedPair& m);
TypePartition nn_b_type_clause(const MarkedPair& m);
TypePartition nn_c_type_clause(const MarkedPair& m);
TypePartition nc_d_type_clause(const MarkedTriple& t);
TypePartition nn_d_type_clause(const MarkedTriple& t);

}  // namespace coxcat
