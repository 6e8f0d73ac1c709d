#pragma once

#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coxcat/core.hpp"
#include "coxcat/models.hpp"
#include "coxcat/signed.hpp"

namespace coxcat {

/// x of a pair (sigma, x): nothing, an edge, a block, or (type D only) an
/// integer in [+-(n-1)].
using Pointer = std::variant<std::monostate, Edge, Block, int>;

struct BPair {
  SetPartition sigma;
  Pointer x;
  bool operator==(const BPair&) const = default;
  bool operator<(const BPair& o) const { return sigma != o.sigma ? sigma < o.sigma : x < o.x; }
};

/// sigma is a partition of [n-1].
struct DPair {
  SetPartition sigma;
  Pointer x;
  bool operator==(const DPair&) const = default;
  bool operator<(const DPair& o) const { return sigma != o.sigma ? sigma < o.sigma : x < o.x; }
};

std::string to_string(const Pointer& x);

bool is_b_pair(const BPair& p);
bool is_d_pair(const DPair& p);
std::vector<BPair> enumerate_b_pairs(int n);
/// Pairs for NC_D(n): sigma in NC(n-1).
std::vector<DPair> enumerate_d_pairs(int n);

/// Merge A_i with A_k+1-i; x marks what is left in the middle.
BPair varphi_b(const MarkedPair& m);
/// Removes the edges over x and marks the blocks they touched.
MarkedPair varphi_b_inverse(const BPair& p);
DPair varphi_d(const MarkedTriple& t);
MarkedTriple varphi_d_inverse(const DPair& p);

BPair psi_b(const SignedPartition& pi);
SignedPartition psi_b_inverse(const BPair& p);
DPair psi_d(const SignedPartition& pi);
SignedPartition psi_d_inverse(const DPair& p);

/// Predicted signed type of psi_b^-1(p) / psi_d^-1(p).
TypePartition b_pair_type(const BPair& p);
TypePartition d_pair_type(const DPair& p);

/// NC^NN_{0,+-1}(n-1) -> barred NC^NN(n).
MarkedPair kappa(const MarkedTriple& t);
MarkedTriple kappa_inverse(const MarkedPair& m);

/// Word over {N, E}; N = (0,1), E = (1,0).
struct LatticePath {
  std::string steps;

  int n() const;
  bool operator==(const LatticePath&) const = default;
  bool operator<(const LatticePath& o) const { return steps < o.steps; }
};

/// Throws ValidationError on bad letters or unequal N/E counts.
LatticePath make_path(std::string steps);
bool is_dyck(const LatticePath& p);
/// Does not pass through both (n-1,n-1) and (n,n-1).
bool is_lp_bar(const LatticePath& p);
std::vector<LatticePath> enumerate_paths(int n);

LatticePath nc_to_dyck(const SetPartition& sigma);
SetPartition dyck_to_nc(const LatticePath& p);

/// Dyck path of sigma with the steps of every marked block reflected.
LatticePath g_map(const MarkedPair& m);
MarkedPair g_inverse(const LatticePath& p);

/// 0/1 filling of a shifted Ferrers diagram. Rows are south labels r > 0 and
/// -i for east labels i; columns are east labels. Cell (r, j) exists when
/// r < j, cell (-i, j) when j >= i.
struct ShiftedTableau {
  std::vector<int> south;  // ascending
  std::vector<int> east;   // ascending
  std::set<std::pair<int, int>> ones;

  int n() const { return static_cast<int>(south.size() + east.size()); }
  bool operator==(const ShiftedTableau&) const = default;
  bool operator<(const ShiftedTableau& o) const;
};

/// Sorts labels; throws ValidationError unless south/east split [n] and every
/// 1 sits in an existing cell.
ShiftedTableau make_tableau(std::vector<int> south, std::vector<int> east, std::set<std::pair<int, int>> ones);
bool cell_exists(const ShiftedTableau& t, int row, int col);
/// Rows top to bottom: -i for east i descending, then south ascending.
std::vector<int> tableau_rows(const ShiftedTableau& t);
/// Columns left to right: east descending.
std::vector<int> tableau_columns(const ShiftedTableau& t);

enum class TableauKind { PT_B, CT_B, CT_D };

bool tableau_validate(const ShiftedTableau& t, TableauKind kind);
std::vector<ShiftedTableau> enumerate_catalan_tableaux(int n, TableauKind kind);

ShiftedTableau f_map(const MarkedPair& m);
MarkedPair f_inverse(const ShiftedTableau& t);

}  // namespace coxcat
