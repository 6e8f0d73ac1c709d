#include "coxcat/encode.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

#include "coxcat/interpret.hpp"

namespace coxcat {

namespace {

void require_class(const MarkedPair& m, MarkedClass c) {
  if (!validate_marked(m, c)) {
    throw ValidationError("(" + to_string(m.sigma) + ", " + to_string(m.marked) + ") is not in " +
                          std::string(class_name(c)));
  }
}

void require_class(const MarkedTriple& t, MarkedClass c) {
  if (!validate_marked(t, c)) {
    throw ValidationError("(" + to_string(t.pair.sigma) + ", " + to_string(t.pair.marked) + ", " +
                          std::to_string(t.epsilon) + ") is not in " + std::string(class_name(c)));
  }
}

// sigma with A_i and A_k+1-i merged.
SetPartition merge_pairs(const MarkedPair& m) {
  const auto& x = m.marked;
  const std::size_t k = x.size();
  std::vector<Block> out = blocks_except(m.sigma, x);
  for (std::size_t i = 0; i < k / 2; ++i) {
    Block u = x[i];
    u.insert(u.end(), x[k - 1 - i].begin(), x[k - 1 - i].end());
    out.push_back(std::move(u));
  }
  if (k % 2 == 1) out.push_back(x[k / 2]);
  return SetPartition(m.sigma.size(), std::move(out));
}

Pointer b_pointer(const std::vector<Block>& x) {
  const std::size_t k = x.size();
  if (k == 0) return std::monostate{};
  if (k % 2 == 0) return Edge{x[k / 2 - 1].back(), x[k / 2].front()};
  return x[k / 2];
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n + 1)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
  std::vector<Block> blocks(int n) {
    std::map<int, Block> by_root;
    for (int i = 1; i <= n; ++i) by_root[find(i)].push_back(i);
    std::vector<Block> out;
    for (auto& [r, b] : by_root) out.push_back(std::move(b));
    return out;
  }
};

// Drops the edges in `removed`; marks the blocks touching them plus `keep`.
MarkedPair cut_edges(const SetPartition& sigma, const std::vector<Edge>& removed, const Block* keep) {
  const int n = sigma.size();
  Dsu dsu(n);
  for (const auto& e : edges(sigma)) {
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) dsu.unite(e.lo, e.hi);
  }
  SetPartition cut(n, dsu.blocks(n));
  std::vector<Block> marked;
  auto mark = [&](const Block& b) {
    if (std::find(marked.begin(), marked.end(), b) == marked.end()) marked.push_back(b);
  };
  if (keep != nullptr) mark(*keep);
  for (const auto& e : removed) {
    mark(cut.block_of(e.lo));
    mark(cut.block_of(e.hi));
  }
  MarkedPair out = make_marked(std::move(cut), std::move(marked));
  if (!validate_marked(out, MarkedClass::nc_nn)) {
    throw InvariantError("edge removal left a nested marked block in " + to_string(out.sigma));
  }
  return out;
}

MarkedPair undo_edge(const SetPartition& sigma, Edge x) {
  std::vector<Edge> removed;
  for (const auto& e : edges(sigma)) {
    if (e.lo <= x.lo && x.hi <= e.hi) removed.push_back(e);
  }
  return cut_edges(sigma, removed, nullptr);
}

MarkedPair undo_block(const SetPartition& sigma, const Block& b) {
  std::vector<Edge> removed;
  for (const auto& e : edges(sigma)) {
    if (e.lo < b.front() && b.back() < e.hi) removed.push_back(e);
  }
  return cut_edges(sigma, removed, &b);
}

bool pointer_ok(const SetPartition& sigma, const Pointer& x, bool allow_int) {
  if (!is_noncrossing(sigma)) return false;
  if (std::holds_alternative<std::monostate>(x)) return true;
  if (const auto* e = std::get_if<Edge>(&x)) {
    const auto es = edges(sigma);
    return std::find(es.begin(), es.end(), *e) != es.end();
  }
  if (const auto* b = std::get_if<Block>(&x)) return sigma.contains_block(*b);
  const int v = std::get<int>(x);
  return allow_int && v != 0 && std::abs(v) <= sigma.size();
}

std::vector<Pointer> b_pointers(const SetPartition& sigma) {
  std::vector<Pointer> out{std::monostate{}};
  for (const auto& e : edges(sigma)) out.emplace_back(e);
  for (const auto& b : sigma.blocks()) out.emplace_back(b);
  return out;
}

void reflect(std::string& s, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) s[i] = s[i] == 'N' ? 'E' : 'N';
}

std::pair<std::vector<int>, std::vector<int>> split_labels(const MarkedPair& m) {
  std::vector<int> south;
  for (const auto& b : blocks_except(m.sigma, m.marked)) south.push_back(b.front());
  std::sort(south.begin(), south.end());
  std::vector<int> east;
  for (int i = 1; i <= m.sigma.size(); ++i) {
    if (!std::binary_search(south.begin(), south.end(), i)) east.push_back(i);
  }
  return {south, east};
}

bool structure_ok(const ShiftedTableau& t) {
  std::vector<int> all = t.south;
  all.insert(all.end(), t.east.begin(), t.east.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<int>(i + 1)) return false;
  }
  if (!std::is_sorted(t.south.begin(), t.south.end()) || !std::is_sorted(t.east.begin(), t.east.end())) return false;
  return std::all_of(t.ones.begin(), t.ones.end(), [&](const auto& c) { return cell_exists(t, c.first, c.second); });
}

}  // namespace

std::string to_string(const Pointer& x) {
  if (std::holds_alternative<std::monostate>(x)) return "none";
  if (const auto* e = std::get_if<Edge>(&x)) return "edge (" + std::to_string(e->lo) + "," + std::to_string(e->hi) + ")";
  if (const auto* b = std::get_if<Block>(&x)) return "block " + to_string(*b);
  return "int " + std::to_string(std::get<int>(x));
}

bool is_b_pair(const BPair& p) { return pointer_ok(p.sigma, p.x, false); }

bool is_d_pair(const DPair& p) { return pointer_ok(p.sigma, p.x, true); }

std::vector<BPair> enumerate_b_pairs(int n) {
  std::vector<BPair> out;
  for (const auto& s : noncrossing_partitions(n)) {
    for (auto& x : b_pointers(s)) out.push_back(BPair{s, std::move(x)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DPair> enumerate_d_pairs(int n) {
  if (n < 1) throw ValidationError("type D pairs need n >= 1");
  std::vector<DPair> out;
  for (const auto& s : noncrossing_partitions(n - 1)) {
    for (auto& x : b_pointers(s)) out.push_back(DPair{s, std::move(x)});
    for (int v = 1; v < n; ++v) {
      out.push_back(DPair{s, v});
      out.push_back(DPair{s, -v});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BPair varphi_b(const MarkedPair& m) {
  require_class(m, MarkedClass::nc_nn);
  return BPair{merge_pairs(m), b_pointer(m.marked)};
}

MarkedPair varphi_b_inverse(const BPair& p) {
  if (!is_b_pair(p)) throw ValidationError("(" + to_string(p.sigma) + ", " + to_string(p.x) + ") is not a B pair");
  if (const auto* e = std::get_if<Edge>(&p.x)) return undo_edge(p.sigma, *e);
  if (const auto* b = std::get_if<Block>(&p.x)) return undo_block(p.sigma, *b);
  return MarkedPair{p.sigma, {}};
}

DPair varphi_d(const MarkedTriple& t) {
  require_class(t, MarkedClass::nc_nn_pm);
  const auto& x = t.pair.marked;
  SetPartition merged = merge_pairs(t.pair);
  if (t.epsilon == 0) return DPair{std::move(merged), b_pointer(x)};
  const std::size_t k = x.size();
  return DPair{std::move(merged), t.epsilon * x[(k + 1) / 2 - 1].back()};
}

MarkedTriple varphi_d_inverse(const DPair& p) {
  if (!is_d_pair(p)) throw ValidationError("(" + to_string(p.sigma) + ", " + to_string(p.x) + ") is not a D pair");
  if (const auto* v = std::get_if<int>(&p.x)) {
    const int m = std::abs(*v);
    const int eps = *v > 0 ? 1 : -1;
    const Block& c = p.sigma.block_of(m);
    if (c.back() == m) return MarkedTriple{undo_block(p.sigma, c), eps};
    const int next = *std::upper_bound(c.begin(), c.end(), m);
    return MarkedTriple{undo_edge(p.sigma, Edge{m, next}), eps};
  }
  return MarkedTriple{varphi_b_inverse(BPair{p.sigma, p.x}), 0};
}

BPair psi_b(const SignedPartition& pi) { return varphi_b(phi_nc_b(pi)); }

SignedPartition psi_b_inverse(const BPair& p) { return phi_nc_b_inverse(varphi_b_inverse(p)); }

DPair psi_d(const SignedPartition& pi) { return varphi_d(phi_nc_d(pi)); }

SignedPartition psi_d_inverse(const DPair& p) { return phi_nc_d_inverse(varphi_d_inverse(p)); }

TypePartition b_pair_type(const BPair& p) {
  if (const auto* b = std::get_if<Block>(&p.x)) {
    std::vector<Block> gone{*b};
    auto rest = blocks_except(p.sigma, gone);
    return type_of(std::span<const Block>(rest));
  }
  return type_of(p.sigma);
}

TypePartition d_pair_type(const DPair& p) {
  if (std::holds_alternative<Block>(p.x)) return b_pair_type(BPair{p.sigma, p.x});
  if (const auto* v = std::get_if<int>(&p.x)) {
    const Block& b = p.sigma.block_of(std::abs(*v));
    std::vector<Block> gone{b};
    auto rest = blocks_except(p.sigma, gone);
    return type_of(std::span<const Block>(rest)).with(static_cast<int>(b.size()) + 1);
  }
  return type_of(p.sigma).with(1);
}

MarkedPair kappa(const MarkedTriple& t) {
  require_class(t, MarkedClass::nc_nn_pm);
  const int n = t.pair.sigma.size() + 1;
  std::vector<Block> blocks = t.pair.sigma.blocks();
  std::vector<Block> marked = t.pair.marked;
  if (t.epsilon == 0) {
    blocks.push_back({n});
  } else {
    const Block last = marked.back();
    for (auto& b : blocks) {
      if (b == last) b.push_back(n);
    }
    marked.pop_back();
    if (t.epsilon == 1) {
      Block grown = last;
      grown.push_back(n);
      marked.push_back(std::move(grown));
    }
  }
  return make_marked(SetPartition(n, std::move(blocks)), std::move(marked));
}

MarkedTriple kappa_inverse(const MarkedPair& m) {
  if (!is_nc_nn_bar(m)) {
    throw ValidationError("(" + to_string(m.sigma) + ", " + to_string(m.marked) + ") is not in the barred class");
  }
  const int n = m.sigma.size();
  if (n < 1) throw ValidationError("kappa inverse needs n >= 1");
  const Block b = m.sigma.block_of(n);
  std::vector<Block> blocks;
  for (const auto& c : m.sigma.blocks()) {
    if (c != b) blocks.push_back(c);
  }
  if (b.size() == 1) return MarkedTriple{MarkedPair{SetPartition(n - 1, std::move(blocks)), m.marked}, 0};
  const Block shrunk(b.begin(), b.end() - 1);
  blocks.push_back(shrunk);
  std::vector<Block> marked;
  bool was_marked = false;
  for (const auto& c : m.marked) {
    if (c == b) {
      was_marked = true;
    } else {
      marked.push_back(c);
    }
  }
  marked.push_back(shrunk);
  MarkedTriple out{make_marked(SetPartition(n - 1, std::move(blocks)), std::move(marked)), was_marked ? 1 : -1};
  if (!validate_marked(out, MarkedClass::nc_nn_pm) || out.pair.marked.back() != shrunk) {
    throw InvariantError("kappa inverse produced an invalid triple");
  }
  return out;
}

int LatticePath::n() const { return static_cast<int>(std::count(steps.begin(), steps.end(), 'N')); }

LatticePath make_path(std::string steps) {
  long ns = 0;
  for (char c : steps) {
    if (c != 'N' && c != 'E') throw ValidationError(std::string("bad step '") + c + "' (expected N or E)");
    ns += c == 'N';
  }
  if (2 * ns != static_cast<long>(steps.size())) throw ValidationError("path must have as many N as E steps");
  return LatticePath{std::move(steps)};
}

bool is_dyck(const LatticePath& p) {
  int h = 0;
  for (char c : p.steps) {
    h += c == 'N' ? 1 : -1;
    if (h < 0) return false;
  }
  return h == 0;
}

bool is_lp_bar(const LatticePath& p) {
  const int n = p.n();
  int x = 0;
  int y = 0;
  bool diag = false;
  bool below = false;
  auto visit = [&] {
    diag = diag || (x == n - 1 && y == n - 1);
    below = below || (x == n && y == n - 1);
  };
  visit();
  for (char c : p.steps) {
    (c == 'N' ? y : x) += 1;
    visit();
  }
  return !(diag && below);
}

std::vector<LatticePath> enumerate_paths(int n) {
  if (n < 0) throw ValidationError("n must be nonnegative");
  std::vector<LatticePath> out;
  std::string cur;
  std::function<void(int, int)> rec = [&](int ns, int es) {
    if (ns == n && es == n) {
      out.push_back(LatticePath{cur});
      return;
    }
    if (es < n) {
      cur.push_back('E');
      rec(ns, es + 1);
      cur.pop_back();
    }
    if (ns < n) {
      cur.push_back('N');
      rec(ns + 1, es);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

LatticePath nc_to_dyck(const SetPartition& sigma) {
  if (!is_noncrossing(sigma)) throw ValidationError(to_string(sigma) + " is not noncrossing");
  std::string s;
  for (int i = 1; i <= sigma.size(); ++i) {
    const Block& b = sigma.block_of(i);
    if (b.size() == 1) {
      s += "NE";
    } else if (b.front() == i) {
      s += "NN";
    } else if (b.back() == i) {
      s += "EE";
    } else {
      s += "EN";
    }
  }
  return LatticePath{s};
}

SetPartition dyck_to_nc(const LatticePath& p) {
  if (!is_dyck(p)) throw ValidationError(p.steps + " is not a Dyck path");
  const int n = p.n();
  std::vector<Block> done;
  std::vector<Block> open;
  for (int i = 1; i <= n; ++i) {
    const std::string pair = p.steps.substr(static_cast<std::size_t>(2 * i - 2), 2);
    if (pair == "NN") {
      open.push_back({i});
    } else if (pair == "NE") {
      done.push_back({i});
    } else if (open.empty()) {
      throw ValidationError(p.steps + " does not encode a noncrossing partition");
    } else if (pair == "EN") {
      open.back().push_back(i);
    } else {
      open.back().push_back(i);
      done.push_back(std::move(open.back()));
      open.pop_back();
    }
  }
  if (!open.empty()) throw ValidationError(p.steps + " does not encode a noncrossing partition");
  SetPartition out(n, std::move(done));
  if (nc_to_dyck(out) != p) throw ValidationError(p.steps + " does not encode a noncrossing partition");
  return out;
}

LatticePath g_map(const MarkedPair& m) {
  require_class(m, MarkedClass::nc_nn);
  LatticePath p = nc_to_dyck(m.sigma);
  for (const auto& b : m.marked) {
    reflect(p.steps, static_cast<std::size_t>(2 * b.front() - 2), static_cast<std::size_t>(2 * b.back()));
  }
  return p;
}

MarkedPair g_inverse(const LatticePath& p) {
  LatticePath q = make_path(p.steps);
  std::vector<std::pair<std::size_t, std::size_t>> windows;
  int h = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < q.steps.size(); ++i) {
    if (h == 0 && q.steps[i] == 'E') start = i;
    h += q.steps[i] == 'N' ? 1 : -1;
    if (h == 0 && q.steps[i] == 'N') windows.emplace_back(start, i + 1);
  }
  for (const auto& [a, b] : windows) reflect(q.steps, a, b);
  SetPartition sigma = dyck_to_nc(q);
  std::vector<Block> marked;
  for (const auto& [a, b] : windows) {
    if (a % 2 != 0 || b % 2 != 0) throw InvariantError("excursion of " + p.steps + " breaks a step pair");
    const Block& blk = sigma.block_of(static_cast<int>(a / 2) + 1);
    if (blk.front() != static_cast<int>(a / 2) + 1 || blk.back() != static_cast<int>(b / 2)) {
      throw InvariantError("excursion of " + p.steps + " is not a block");
    }
    marked.push_back(blk);
  }
  MarkedPair out = make_marked(std::move(sigma), std::move(marked));
  if (!validate_marked(out, MarkedClass::nc_nn)) throw InvariantError("g inverse gave a nested marked block");
  return out;
}

bool ShiftedTableau::operator<(const ShiftedTableau& o) const {
  return std::tie(south, east, ones) < std::tie(o.south, o.east, o.ones);
}

ShiftedTableau make_tableau(std::vector<int> south, std::vector<int> east, std::set<std::pair<int, int>> ones) {
  std::sort(south.begin(), south.end());
  std::sort(east.begin(), east.end());
  ShiftedTableau t{std::move(south), std::move(east), std::move(ones)};
  if (!structure_ok(t)) throw ValidationError("tableau labels must split [n] and 1s must sit in cells");
  return t;
}

bool cell_exists(const ShiftedTableau& t, int row, int col) {
  if (!std::binary_search(t.east.begin(), t.east.end(), col)) return false;
  if (row > 0) return std::binary_search(t.south.begin(), t.south.end(), row) && row < col;
  return row < 0 && std::binary_search(t.east.begin(), t.east.end(), -row) && col >= -row;
}

std::vector<int> tableau_rows(const ShiftedTableau& t) {
  std::vector<int> rows;
  for (auto it = t.east.rbegin(); it != t.east.rend(); ++it) rows.push_back(-*it);
  rows.insert(rows.end(), t.south.begin(), t.south.end());
  return rows;
}

std::vector<int> tableau_columns(const ShiftedTableau& t) { return {t.east.rbegin(), t.east.rend()}; }

bool tableau_validate(const ShiftedTableau& t, TableauKind kind) {
  if (!structure_ok(t)) return false;
  const auto rows = tableau_rows(t);
  const auto cols = tableau_columns(t);
  auto one = [&](int r, int c) { return t.ones.count({r, c}) != 0; };
  for (int c : cols) {
    int count = 0;
    for (int r : rows) count += one(r, c) ? 1 : 0;
    if (count == 0) return false;
    if (kind != TableauKind::PT_B && count != 1) return false;
  }
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    const int r = rows[ri];
    bool left_one = false;
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
      const int c = cols[ci];
      if (!cell_exists(t, r, c)) continue;
      if (!one(r, c)) {
        if (left_one && r == -c) return false;
        if (left_one) {
          for (std::size_t above = 0; above < ri; ++above) {
            if (one(rows[above], c)) return false;
          }
        }
      } else {
        left_one = true;
      }
    }
  }
  if (kind == TableauKind::CT_D && !rows.empty() && !cols.empty()) {
    const int bottom = rows.back();
    const bool bottom_nonempty =
        std::any_of(cols.begin(), cols.end(), [&](int c) { return cell_exists(t, bottom, c); });
    if (bottom_nonempty) {
      const int left = cols.front();
      for (int r : rows) {
        if (cell_exists(t, r, left)) {
          if (one(r, left)) return false;
          break;
        }
      }
    }
  }
  return true;
}

std::vector<ShiftedTableau> enumerate_catalan_tableaux(int n, TableauKind kind) {
  if (kind == TableauKind::PT_B) throw ValidationError("only Catalan tableaux are enumerated");
  if (n < 0 || n > 20) throw ValidationError("n out of range");
  std::vector<ShiftedTableau> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> south, east;
    for (int i = 1; i <= n; ++i) (mask >> (i - 1) & 1U ? south : east).push_back(i);
    ShiftedTableau t{south, east, {}};
    const auto rows = tableau_rows(t);
    std::vector<std::vector<int>> options;
    for (int c : east) {
      std::vector<int> opt;
      for (int r : rows) {
        if (cell_exists(t, r, c)) opt.push_back(r);
      }
      options.push_back(std::move(opt));
    }
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
      if (j == east.size()) {
        if (tableau_validate(t, kind)) out.push_back(t);
        return;
      }
      for (int r : options[j]) {
        t.ones.insert({r, east[j]});
        rec(j + 1);
        t.ones.erase({r, east[j]});
      }
    };
    rec(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ShiftedTableau f_map(const MarkedPair& m) {
  require_class(m, MarkedClass::nc_nn);
  auto [south, east] = split_labels(m);
  std::set<std::pair<int, int>> ones;
  for (const auto& b : m.sigma.blocks()) {
    const bool marked = std::find(m.marked.begin(), m.marked.end(), b) != m.marked.end();
    const int i = b.front();
    if (marked) ones.insert({-i, i});
    for (std::size_t k = 1; k < b.size(); ++k) ones.insert({marked ? -i : i, b[k]});
  }
  return make_tableau(std::move(south), std::move(east), std::move(ones));
}

MarkedPair f_inverse(const ShiftedTableau& t) {
  if (!tableau_validate(t, TableauKind::CT_B)) throw ValidationError("not a Catalan tableau of type B");
  const int n = t.n();
  Dsu dsu(n);
  for (const auto& [r, c] : t.ones) {
    const int i = std::abs(r);
    if (i < c) dsu.unite(c, i);
  }
  SetPartition sigma(n, dsu.blocks(n));
  std::vector<Block> marked;
  for (const auto& b : sigma.blocks()) {
    const int i = b.front();
    const bool row_has_one = std::any_of(t.ones.begin(), t.ones.end(), [&](const auto& c) { return c.first == -i; });
    if (row_has_one) marked.push_back(b);
  }
  MarkedPair out = make_marked(std::move(sigma), std::move(marked));
  if (!validate_marked(out, MarkedClass::nc_nn) || f_map(out) != t) {
    throw ValidationError("tableau does not come from a marked noncrossing partition");
  }
  return out;
}

}  // namespace coxcat
