#include "coxcat/render.hpp"

#include <algorithm>
#include <map>

namespace coxcat {

namespace {

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::string pad_left(const std::string& s, std::size_t w) {
  return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
}

// labels[i] is drawn in column i; arcs join column indices.
std::string arcs_picture(const std::vector<std::string>& labels, std::vector<std::pair<int, int>> arcs) {
  std::size_t w = 1;
  for (const auto& l : labels) w = std::max(w, l.size());
  const std::size_t step = w + 1;
  std::string head;
  for (const auto& l : labels) head += pad_left(l, w) + " ";
  std::string out = rstrip(head) + "\n";

  std::sort(arcs.begin(), arcs.end());
  std::vector<std::string> rows;
  std::vector<int> row_end;  // last column used by each row
  const std::size_t width = labels.size() * step;
  for (const auto& [a, b] : arcs) {
    std::size_t r = 0;
    while (r < rows.size() && row_end[r] > a) ++r;
    if (r == rows.size()) {
      rows.emplace_back(width, ' ');
      row_end.push_back(-1);
    }
    const std::size_t lo = static_cast<std::size_t>(a) * step + w - 1;
    const std::size_t hi = static_cast<std::size_t>(b) * step + w - 1;
    for (std::size_t c = lo; c <= hi; ++c) {
      if (rows[r][c] == ' ') rows[r][c] = '-';
    }
    rows[r][lo] = '+';
    rows[r][hi] = '+';
    row_end[r] = b;
  }
  for (const auto& r : rows) out += rstrip(r) + "\n";
  return out;
}

}  // namespace

std::string render_arcs(const SetPartition& p) {
  std::vector<std::string> labels;
  for (int i = 1; i <= p.size(); ++i) labels.push_back(std::to_string(i));
  std::vector<std::pair<int, int>> arcs;
  for (const auto& e : edges(p)) arcs.emplace_back(e.lo - 1, e.hi - 1);
  return arcs_picture(labels, arcs);
}

std::string render_arcs(const SignedPartition& pi) {
  const int n = pi.size();
  std::vector<std::string> labels;
  std::map<int, int> column;
  for (int i = 1; i <= n; ++i) column[i] = i - 1, labels.push_back(std::to_string(i));
  for (int i = 1; i <= n; ++i) column[-i] = n + i - 1, labels.push_back(std::to_string(-i));
  std::vector<std::pair<int, int>> arcs;
  for (const auto& b : pi.blocks()) {
    std::vector<int> cols;
    for (int x : b) cols.push_back(column.at(x));
    std::sort(cols.begin(), cols.end());
    for (std::size_t i = 1; i < cols.size(); ++i) arcs.emplace_back(cols[i - 1], cols[i]);
  }
  return arcs_picture(labels, arcs);
}

std::string render_path(const LatticePath& p) {
  const int n = p.n();
  const std::size_t side = static_cast<std::size_t>(2 * n + 1);
  std::vector<std::string> grid(side, std::string(side, ' '));
  auto cell = [&](int col, int row) -> char& {
    return grid[static_cast<std::size_t>(2 * n - row)][static_cast<std::size_t>(col)];
  };
  for (int x = 0; x <= n; ++x) {
    for (int y = 0; y <= n; ++y) cell(2 * x, 2 * y) = '.';
  }
  int x = 0, y = 0;
  cell(0, 0) = '+';
  for (char s : p.steps) {
    if (s == 'E') {
      cell(2 * x + 1, 2 * y) = '-';
      ++x;
    } else {
      cell(2 * x, 2 * y + 1) = '|';
      ++y;
    }
    cell(2 * x, 2 * y) = '+';
  }
  std::string out;
  for (const auto& row : grid) out += rstrip(row) + "\n";
  return out;
}

std::string render_tableau(const ShiftedTableau& t) {
  const auto rows = tableau_rows(t);
  const auto cols = tableau_columns(t);
  std::size_t w = 1;
  for (int r : rows) w = std::max(w, std::to_string(r).size());
  for (int c : cols) w = std::max(w, std::to_string(c).size());
  std::string head = std::string(w, ' ');
  for (int c : cols) head += " " + pad_left(std::to_string(c), w);
  std::string out = rstrip(head) + "\n";
  for (int r : rows) {
    std::string line = pad_left(std::to_string(r), w);
    for (int c : cols) {
      std::string v = " ";
      if (cell_exists(t, r, c)) v = t.ones.count({r, c}) != 0 ? "1" : "0";
      line += " " + pad_left(v, w);
    }
    out += rstrip(line) + "\n";
  }
  return out;
}

}  // namespace coxcat
