#pragma once

#include <string>

#include "coxcat/core.hpp"
#include "coxcat/encode.hpp"
#include "coxcat/signed.hpp"

namespace coxcat {

// ASCII pictures. Every line ends in '\n' and carries no trailing blanks.

/// Labels on one line; each arc below as +---+ between its two ends, arcs
/// packed greedily into as few rows as possible.
std::string render_arcs(const SetPartition& p);
/// Same picture with labels in the order 1..n, -1..-n.
std::string render_arcs(const SignedPartition& pi);
/// Lattice points as '.', visited points as '+', steps as '-' and '|'.
/// Top line is y = n.
std::string render_path(const LatticePath& p);
/// Column labels on top, row labels on the left, 0/1 in existing cells.
std::string render_tableau(const ShiftedTableau& t);

}  // namespace coxcat
