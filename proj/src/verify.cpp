#include "coxcat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "coxcat/encode.hpp"
#include "coxcat/interpret.hpp"
#include "coxcat/models.hpp"
#include "coxcat/series.hpp"
#include "coxcat/signed.hpp"
#include "coxcat/typemaps.hpp"

namespace coxcat::verify {

namespace {

constexpr int kSignedCap = 8;

void expect(Failures& f, bool ok, const std::string& what) {
  if (!ok) f.push_back(what);
}

std::string at_n(int n, const std::string& what) { return "n=" + std::to_string(n) + ": " + what; }

mpz_class size_of(std::size_t s) { return mpz_class(static_cast<unsigned long>(s)); }

template <class V>
std::set<typename V::value_type> as_set(const V& v) {
  return {v.begin(), v.end()};
}

std::vector<std::size_t> sizes(const std::vector<Block>& bs) {
  std::vector<std::size_t> out;
  for (const auto& b : bs) out.push_back(b.size());
  return out;
}

SetPartition P(int n, std::vector<Block> blocks) { return SetPartition(n, std::move(blocks)); }

SignedPartition S(int n, std::vector<Block> half) {
  std::vector<Block> all;
  for (auto& b : half) {
    Block neg = negate(b);
    std::sort(b.begin(), b.end());
    std::sort(neg.begin(), neg.end());
    all.push_back(b);
    if (neg != b) all.push_back(neg);
  }
  return validate_signed(n, std::move(all));
}

// Runs fwd over `domain`, checks inv(fwd(a)) == a, membership of the image,
// and that the image is exactly `target`.
template <class A, class B, class Fwd, class Inv, class Ok>
void bijection(Failures& f, int n, const std::string& name, const std::vector<A>& domain,
               const std::vector<B>& target, Fwd fwd, Inv inv, Ok in_target) {
  std::set<B> image;
  for (const auto& a : domain) {
    B b = fwd(a);
    if (!in_target(b)) {
      f.push_back(at_n(n, name + " leaves the target class"));
      return;
    }
    if (!(inv(b) == a)) {
      f.push_back(at_n(n, name + " inverse fails to undo the map"));
      return;
    }
    image.insert(std::move(b));
  }
  expect(f, image.size() == domain.size(), at_n(n, name + " not injective"));
  expect(f, image == as_set(target), at_n(n, name + " image differs from the target set"));
}

}  // namespace

Failures catalan_counts(int n) {
  Failures f;
  const mpz_class c = catalan(n);
  expect(f, size_of(noncrossing_partitions(n).size()) == c, at_n(n, "#NC != Catalan"));
  expect(f, size_of(nonnesting_partitions(n).size()) == c, at_n(n, "#NN != Catalan"));
  if (n <= 9) {
    long nc = 0, nn = 0;
    for (const auto& p : set_partitions(n)) {
      nc += is_noncrossing(p) ? 1 : 0;
      nn += is_nonnesting(p) ? 1 : 0;
    }
    expect(f, nc == c && nn == c, at_n(n, "filtered counts != Catalan"));
  }
  return f;
}

Failures pattern_agreement(int n) {
  Failures f;
  const TotalOrder order = TotalOrder::natural(n);
  for (const auto& p : set_partitions(n)) {
    const bool cross = pattern_free(p, order, Pattern::crossing);
    if (cross != pattern_free_by_quadruples(p.blocks(), order, Pattern::crossing)) {
      f.push_back(at_n(n, "crossing tests disagree on " + to_string(p)));
      break;
    }
    if (cross && pattern_free(p, order, Pattern::nesting) !=
                     pattern_free_by_quadruples(p.blocks(), order, Pattern::nesting)) {
      f.push_back(at_n(n, "nesting tests disagree on " + to_string(p)));
      break;
    }
    if (type_of(p).weight() != n) {
      f.push_back(at_n(n, "type weight wrong on " + to_string(p)));
      break;
    }
  }
  return f;
}

Failures signed_count(int n) {
  Failures f;
  const auto all = enumerate_signed(n);
  expect(f, size_of(all.size()) == count_signed(n), at_n(n, "#Pi_B != sum S(n,k) t_k+1"));
  expect(f, as_set(all).size() == all.size(), at_n(n, "duplicate signed partitions"));
  return f;
}

Failures triple_roundtrip(int n) {
  Failures f;
  for (const auto& pi : enumerate_signed(n)) {
    const auto t = decompose_triple(pi);
    if (compose_triple(t.alpha, t.beta, t.gamma) != pi) {
      f.push_back(at_n(n, "compose(decompose(pi)) != pi for " + to_string(pi)));
      break;
    }
  }
  return f;
}

Failures family_count(const std::string& family, int n) {
  Failures f;
  const Family fam = parse_family(family);
  const std::size_t got =
      is_signed_family(fam) ? enumerate_signed_family(fam, n).size() : enumerate_unsigned(fam, n).size();
  const mpz_class want = family_cardinality(fam, n);
  expect(f, size_of(got) == want,
         at_n(n, "#" + family + " = " + std::to_string(got) + ", formula gives " + want.get_str()));
  return f;
}

Failures nc_b_constructive(int n, bool compare_with_filter) {
  Failures f;
  const auto built = enumerate_nc_b_constructive(n);
  expect(f, size_of(built.size()) == binomial(2 * n, n), at_n(n, "constructive #NC_B != C(2n,n)"));
  expect(f, as_set(built).size() == built.size(), at_n(n, "constructive NC_B has duplicates"));
  for (const auto& pi : built) {
    if (!is_member(pi, Family::nc_b)) {
      f.push_back(at_n(n, "constructive NC_B produced a nonmember"));
      break;
    }
  }
  if (compare_with_filter) {
    expect(f, as_set(built) == as_set(enumerate_signed_family(Family::nc_b, n)),
           at_n(n, "constructive NC_B != filtered NC_B"));
  }
  return f;
}

Failures marked_class_counts(int n) {
  Failures f;
  const mpz_class b = binomial(2 * n, n);
  for (auto c : {MarkedClass::nc_nn, MarkedClass::nc_na, MarkedClass::nn_na}) {
    expect(f, size_of(enumerate_marked_pairs(c, n).size()) == b,
           at_n(n, "#" + std::string(class_name(c)) + " != C(2n,n)"));
  }
  const mpz_class d = family_cardinality(Family::nc_d, n + 1);
  for (auto c : {MarkedClass::nc_nn_pm, MarkedClass::nn_na_pm}) {
    expect(f, size_of(enumerate_marked_triples(c, n).size()) == d,
           at_n(n, "#" + std::string(class_name(c)) + " != #NC_D(n+1)"));
  }
  expect(f, size_of(enumerate_nc_nn_bar(n + 1).size()) == d, at_n(n, "#barred NC^NN(n+1) != #NC_D(n+1)"));
  return f;
}

Failures type_counts(const std::string& family, int n) {
  Failures f;
  std::map<TypePartition, mpz_class> seen;
  TypeFamily tf;
  if (family == "A") {
    tf = TypeFamily::A;
    for (const auto& p : enumerate_unsigned(Family::nc_a, n)) seen[type_of(p)] += 1;
  } else if (family == "B") {
    tf = TypeFamily::B;
    for (const auto& p : enumerate_signed_family(Family::nc_b, n)) seen[signed_type(p)] += 1;
  } else if (family == "D") {
    tf = TypeFamily::D;
    for (const auto& p : enumerate_signed_family(Family::nc_d, n)) seen[signed_type(p)] += 1;
  } else {
    throw ValidationError("type family must be A, B or D");
  }
  const int lo = tf == TypeFamily::A ? n : 0;
  bool small = false, full = false;
  for (int m = lo; m <= n; ++m) {
    for (const auto& l : integer_partitions(m)) {
      const mpz_class want = count_by_type(tf, n, l);
      if (want != seen[l]) {
        f.push_back(at_n(n, family + " type " + to_string(l) + ": formula " + want.get_str() + ", counted " +
                                seen[l].get_str()));
      }
      if (tf == TypeFamily::D && want > 0) (m == n ? full : small) = true;
    }
  }
  if (tf == TypeFamily::D && n >= 3) {
    expect(f, small && full, at_n(n, "type D did not reach both nonzero branches"));
    for (const auto& l : integer_partitions(n - 1)) {
      expect(f, count_by_type(tf, n, l) == 0, at_n(n, "type D |lambda|=n-1 not zero"));
    }
  }
  return f;
}

Failures interpretation(const std::string& map, int n) {
  Failures f;
  const bool d = map == "nc_d" || map == "nn_d";
  if (d) {
    const Family fam = map == "nc_d" ? Family::nc_d : Family::nn_d;
    const MarkedClass cls = map == "nc_d" ? MarkedClass::nc_nn_pm : MarkedClass::nn_na_pm;
    auto fwd = map == "nc_d" ? phi_nc_d : phi_nn_d;
    auto inv = map == "nc_d" ? phi_nc_d_inverse : phi_nn_d_inverse;
    auto clause = map == "nc_d" ? nc_d_type_clause : nn_d_type_clause;
    const auto domain = enumerate_signed_family(fam, n);
    bijection(f, n, "phi_" + map, domain, enumerate_marked_triples(cls, n - 1), fwd, inv,
              [&](const MarkedTriple& t) { return validate_marked(t, cls); });
    for (const auto& pi : domain) {
      if (clause(fwd(pi)) != signed_type(pi)) {
        f.push_back(at_n(n, "phi_" + map + " type clause fails on " + to_string(pi)));
        break;
      }
    }
    return f;
  }
  Family fam;
  MarkedClass cls;
  MarkedPair (*fwd)(const SignedPartition&);
  SignedPartition (*inv)(const MarkedPair&);
  TypePartition (*clause)(const MarkedPair&);
  if (map == "nc_b") {
    fam = Family::nc_b, cls = MarkedClass::nc_nn, fwd = phi_nc_b, inv = phi_nc_b_inverse, clause = nc_b_type_clause;
  } else if (map == "nn_b") {
    fam = Family::nn_b, cls = MarkedClass::nn_na, fwd = phi_nn_b, inv = phi_nn_b_inverse, clause = nn_b_type_clause;
  } else if (map == "nn_c") {
    fam = Family::nn_c, cls = MarkedClass::nn_na, fwd = phi_nn_c, inv = phi_nn_c_inverse, clause = nn_c_type_clause;
  } else {
    throw ValidationError("unknown interpretation map '" + map + "'");
  }
  const auto domain = enumerate_signed_family(fam, n);
  bijection(f, n, "phi_" + map, domain, enumerate_marked_pairs(cls, n), fwd, inv,
            [&](const MarkedPair& m) { return validate_marked(m, cls); });
  for (const auto& pi : domain) {
    if (clause(fwd(pi)) != signed_type(pi)) {
      f.push_back(at_n(n, "phi_" + map + " type clause fails on " + to_string(pi)));
      break;
    }
  }
  return f;
}

Failures rho_check(int n) {
  Failures f;
  const auto nc = noncrossing_partitions(n);
  bijection(f, n, "rho", nc, nonnesting_partitions(n), rho, rho_inverse,
            [](const SetPartition& p) { return is_nonnesting(p); });
  for (const auto& s : nc) {
    if (block_profile(rho(s)) != block_profile(s)) {
      f.push_back(at_n(n, "rho changes the (max, size) profile of " + to_string(s)));
      break;
    }
  }
  return f;
}

Failures rho_bar_check(int n) {
  Failures f;
  const auto domain = enumerate_marked_pairs(MarkedClass::nc_na, n);
  bijection(f, n, "rho_bar", domain, enumerate_marked_pairs(MarkedClass::nn_na, n), rho_bar, rho_bar_inverse,
            [](const MarkedPair& m) { return validate_marked(m, MarkedClass::nn_na); });
  for (const auto& p : domain) {
    const auto q = rho_bar(p);
    bool same = q.marked.size() == p.marked.size();
    for (std::size_t i = 0; same && i < p.marked.size(); ++i) same = p.marked[i].back() == q.marked[i].back();
    if (!same) {
      f.push_back(at_n(n, "rho_bar moves a marked maximum"));
      break;
    }
  }
  return f;
}

Failures xi_check(int n) {
  Failures f;
  for (const auto& s : noncrossing_partitions(n)) {
    const auto x = xi(s);
    std::string bad;
    if (!is_noncrossing(x)) bad = "image not noncrossing";
    else if (xi(x) != s) bad = "not an involution";
    else if (type_of(x) != type_of(s)) bad = "type changed";
    else if (nn_count(x) != na_count(s) || na_count(x) != nn_count(s)) bad = "nn/na not swapped";
    else if (sizes(special_blocks(s, SpecialKind::nonnested)) != sizes(special_blocks(x, SpecialKind::nonaligned)) ||
             sizes(special_blocks(s, SpecialKind::nonaligned)) != sizes(special_blocks(x, SpecialKind::nonnested)))
      bad = "special block sizes do not correspond";
    if (!bad.empty()) {
      f.push_back(at_n(n, "xi " + bad + " at " + to_string(s)));
      break;
    }
  }
  return f;
}

Failures xi_symmetry(int n) {
  Failures f;
  std::map<std::pair<int, int>, long> dist;
  for (const auto& s : noncrossing_partitions(n)) dist[{nn_count(s), na_count(s)}] += 1;
  for (const auto& [k, v] : dist) {
    auto it = dist.find({k.second, k.first});
    if (it == dist.end() || it->second != v) {
      f.push_back(at_n(n, "(nn,na) = (" + std::to_string(k.first) + "," + std::to_string(k.second) +
                              ") not matched by its swap"));
      break;
    }
  }
  return f;
}

Failures xi_bar_check(int n) {
  Failures f;
  const auto domain = enumerate_marked_pairs(MarkedClass::nc_nn, n);
  bijection(f, n, "xi_bar", domain, enumerate_marked_pairs(MarkedClass::nc_na, n), xi_bar, xi_bar_inverse,
            [](const MarkedPair& m) { return validate_marked(m, MarkedClass::nc_na); });
  for (const auto& p : domain) {
    if (sizes(xi_bar(p).marked) != sizes(p.marked)) {
      f.push_back(at_n(n, "xi_bar changes marked block sizes"));
      break;
    }
  }
  return f;
}

Failures iota_check(int n) {
  Failures f;
  const auto pairs = enumerate_marked_pairs(MarkedClass::nc_nn, n);
  bijection(f, n, "iota_b", pairs, pairs, iota_b, iota_b_inverse,
            [](const MarkedPair& m) { return validate_marked(m, MarkedClass::nc_nn); });
  for (const auto& p : pairs) {
    if (type_of(iota_b(p).sigma) != type_of(p.sigma)) {
      f.push_back(at_n(n, "iota_b changes the type"));
      break;
    }
  }
  const auto triples = enumerate_marked_triples(MarkedClass::nc_nn_pm, n);
  bijection(f, n, "iota_d", triples, triples, iota_d, iota_d_inverse,
            [](const MarkedTriple& t) { return validate_marked(t, MarkedClass::nc_nn_pm); });
  for (const auto& t : triples) {
    const auto u = iota_d(t);
    if (u.epsilon != t.epsilon || type_of(u.pair.sigma) != type_of(t.pair.sigma)) {
      f.push_back(at_n(n, "iota_d changes epsilon or type"));
      break;
    }
  }
  return f;
}

Failures composed_check(const std::string& flavor, int n) {
  Failures f;
  Flavor fl;
  Family nc, nn;
  if (flavor == "B") {
    fl = Flavor::B, nc = Family::nc_b, nn = Family::nn_b;
  } else if (flavor == "C") {
    fl = Flavor::C, nc = Family::nc_b, nn = Family::nn_c;
  } else if (flavor == "D") {
    fl = Flavor::D, nc = Family::nc_d, nn = Family::nn_d;
  } else {
    throw ValidationError("flavor must be B, C or D");
  }
  const auto domain = enumerate_signed_family(nc, n);
  auto fwd = [fl](const SignedPartition& pi) { return nc_to_nn(fl, pi); };
  auto inv = [fl](const SignedPartition& pi) { return nn_to_nc(fl, pi); };
  bijection(f, n, "nc_to_nn " + flavor, domain, enumerate_signed_family(nn, n), fwd, inv,
            [nn](const SignedPartition& pi) { return is_member(pi, nn); });
  for (const auto& pi : domain) {
    if (signed_type(fwd(pi)) != signed_type(pi)) {
      f.push_back(at_n(n, "nc_to_nn " + flavor + " changes the signed type of " + to_string(pi)));
      break;
    }
  }
  return f;
}

Failures psi_b_check(int n) {
  Failures f;
  const auto domain = enumerate_signed_family(Family::nc_b, n);
  bijection(f, n, "psi_b", domain, enumerate_b_pairs(n), psi_b, psi_b_inverse, is_b_pair);
  for (const auto& pi : domain) {
    if (b_pair_type(psi_b(pi)) != signed_type(pi)) {
      f.push_back(at_n(n, "psi_b type clause fails on " + to_string(pi)));
      break;
    }
  }
  return f;
}

Failures psi_d_check(int n) {
  Failures f;
  const auto domain = enumerate_signed_family(Family::nc_d, n);
  bijection(f, n, "psi_d", domain, enumerate_d_pairs(n), psi_d, psi_d_inverse, is_d_pair);
  for (const auto& pi : domain) {
    if (d_pair_type(psi_d(pi)) != signed_type(pi)) {
      f.push_back(at_n(n, "psi_d type clause fails on " + to_string(pi)));
      break;
    }
  }
  return f;
}

Failures kappa_check(int n) {
  Failures f;
  bijection(f, n, "kappa", enumerate_marked_triples(MarkedClass::nc_nn_pm, n - 1), enumerate_nc_nn_bar(n), kappa,
            kappa_inverse, is_nc_nn_bar);
  return f;
}

Failures dyck_check(int n) {
  Failures f;
  std::vector<LatticePath> dyck;
  for (const auto& p : enumerate_paths(n)) {
    if (is_dyck(p)) dyck.push_back(p);
  }
  bijection(f, n, "nc_to_dyck", noncrossing_partitions(n), dyck, nc_to_dyck, dyck_to_nc, is_dyck);
  return f;
}

Failures g_check(int n) {
  Failures f;
  const auto domain = enumerate_marked_pairs(MarkedClass::nc_nn, n);
  const auto paths = enumerate_paths(n);
  bijection(f, n, "g", domain, paths, g_map, g_inverse, [](const LatticePath&) { return true; });
  for (const auto& m : domain) {
    if (is_lp_bar(g_map(m)) != is_nc_nn_bar(m)) {
      f.push_back(at_n(n, "g does not carry the barred class onto the barred paths"));
      break;
    }
  }
  long bar = 0;
  for (const auto& p : paths) bar += is_lp_bar(p) ? 1 : 0;
  if (n >= 1) {
    expect(f, mpz_class(bar) == binomial(2 * n, n) - binomial(2 * n - 2, n - 1),
           at_n(n, "#barred paths != C(2n,n) - C(2n-2,n-1)"));
  }
  return f;
}

Failures f_check(int n) {
  Failures f;
  const auto domain = enumerate_marked_pairs(MarkedClass::nc_nn, n);
  bijection(f, n, "f", domain, enumerate_catalan_tableaux(n, TableauKind::CT_B), f_map, f_inverse,
            [](const ShiftedTableau& t) { return tableau_validate(t, TableauKind::CT_B); });
  for (const auto& m : domain) {
    const bool n_alone = std::find(m.marked.begin(), m.marked.end(), Block{n}) != m.marked.end();
    if (tableau_validate(f_map(m), TableauKind::CT_D) == n_alone) {
      f.push_back(at_n(n, "CT_D test disagrees with {n} not marked"));
      break;
    }
  }
  return f;
}

Failures pair_counts(int n) {
  Failures f;
  expect(f, size_of(enumerate_b_pairs(n).size()) == binomial(2 * n, n), at_n(n, "#B-pairs != C(2n,n)"));
  expect(f, size_of(enumerate_d_pairs(n).size()) == mpz_class(3 * n - 2) * catalan(n - 1),
         at_n(n, "#D-pairs != (3n-2) Cat(n-1)"));
  return f;
}

Failures series_cross_check(int n_max) {
  Failures f;
  for (const auto& line : cross_check(n_max).lines) {
    if (line.ok) continue;
    std::string detail = line.detail;
    if (detail.size() > 100) detail = detail.substr(0, 97) + "...";
    f.push_back(line.name + " (" + detail + ")");
  }
  return f;
}

Failures golden_examples() {
  Failures f;
  auto pin = [&f](const std::string& name, auto&& body) {
    try {
      if (!body()) f.push_back(name);
    } catch (const std::exception& e) {
      f.push_back(name + ": " + e.what());
    }
  };
  const SetPartition fig2 = P(10, {{1, 4, 10}, {2, 3}, {5, 6, 7, 9}, {8}});

  pin("edges of the ten-element example", [&] {
    return edges(fig2) == std::vector<Edge>{{1, 4}, {2, 3}, {4, 10}, {5, 6}, {6, 7}, {7, 9}};
  });
  pin("patterns under a custom order", [&] {
    auto p = P(10, {{1, 3, 8}, {2}, {4, 5, 6}, {7}, {9, 10}});
    TotalOrder o({4, 3, 8, 1, 5, 2, 6, 7, 10, 9});
    return pattern_free(p, o, Pattern::crossing) && !pattern_free(p, o, Pattern::nesting);
  });
  pin("nonaligned blocks of the ten-element example", [&] {
    const auto na = special_blocks(fig2, SpecialKind::nonaligned);
    return validate_marked(make_marked(fig2, {{8}, {1, 4, 10}}), MarkedClass::nc_na) &&
           std::find(na.begin(), na.end(), Block{8}) != na.end() &&
           std::find(na.begin(), na.end(), Block{1, 4, 10}) != na.end();
  });
  const SignedPartition ex = S(8, {{1, -3, 6}, {2, 4, -2, -4}, {5, 8}, {7}});
  pin("signed partition with zero block", [&] { return ex.zero_block() == Block{-4, -2, 2, 4}; });
  pin("triple decomposition", [&] {
    auto t = decompose_triple(ex);
    return t.alpha == P(8, {{1, 6}, {2, 4}, {3}, {5, 8}, {7}}) &&
           t.beta == std::vector<Block>{{3}, {2, 4}, {1, 6}} &&
           t.gamma == make_matching({{{3}, {1, 6}}}) &&
           t.gamma0 == make_matching({{{3}, {1, 6}}, {{0}, {2, 4}}});
  });
  pin("triple composition", [&] {
    auto t = decompose_triple(ex);
    return compose_triple(t.alpha, t.beta, t.gamma) == ex;
  });

  const SignedPartition fig4 = S(10, {{1, 4, 5, -10}, {2, 3}, {7, 9, -7, -9}, {6}, {8}});
  const SignedPartition fig5 = S(10, {{1, 2, -8}, {-3, -5, 6, 7, 10}, {4}, {9}});
  const SignedPartition fig6 = S(10, {{1, 3, 7, -7, -3, -1}, {2, 4}, {5, 9, -10, -6}, {8}});
  const SignedPartition fig7 = S(10, {{1, 3, 7, -10, -6}, {2, 4}, {5, 9, -9, -5}, {8}});
  const SignedPartition fig8 = S(10, {{1, 4, 7, -3, -6, 10}, {2}, {5, 9, -8}});
  pin("NC_B membership", [&] { return is_member(fig4, Family::nc_b); });
  pin("NC_D membership", [&] { return is_member(fig5, Family::nc_d); });
  pin("NC^NA marks", [&] { return validate_marked(make_marked(fig2, {{8}, {1, 4, 10}}), MarkedClass::nc_na); });
  pin("empty X forces epsilon 0", [&] {
    const MarkedTriple t{MarkedPair{fig2, {}}, 1};
    return !validate_marked(t, MarkedClass::nc_nn_pm) && !validate_marked(t, MarkedClass::nc_na_pm) &&
           !validate_marked(t, MarkedClass::nn_na_pm);
  });

  pin("phi NC_B", [&] {
    auto m = phi_nc_b(fig4);
    return m.sigma == P(10, {{1, 4, 5}, {2, 3}, {6}, {7, 9}, {8}, {10}}) &&
           m.marked == std::vector<Block>{{1, 4, 5}, {7, 9}, {10}} && phi_nc_b_inverse(m) == fig4;
  });
  pin("phi NC_D", [&] {
    auto t = phi_nc_d(fig5);
    return t.pair.sigma == P(9, {{1, 2}, {3, 5}, {4}, {6, 7}, {8}, {9}}) &&
           t.pair.marked == std::vector<Block>{{1, 2}, {3, 5}, {6, 7}, {8}} && t.epsilon == -1 &&
           phi_nc_d_inverse(t) == fig5;
  });
  const SetPartition nn_sigma = P(10, {{1, 3, 7}, {2, 4}, {5, 9}, {6, 10}, {8}});
  const std::vector<Block> nn_marks{{1, 3, 7}, {5, 9}, {6, 10}};
  pin("phi NN_B", [&] {
    auto m = phi_nn_b(fig6);
    return m.sigma == nn_sigma && m.marked == nn_marks;
  });
  pin("phi NN_B inverse", [&] {
    auto pi = phi_nn_b_inverse(make_marked(nn_sigma, nn_marks));
    return pi == fig6 && pi.zero_block() == Block{-7, -3, -1, 1, 3, 7} &&
           pi.block_of(5) == Block{-10, -6, 5, 9};
  });
  pin("phi NN_C", [&] {
    auto m = phi_nn_c(fig7);
    return m.sigma == nn_sigma && m.marked == nn_marks && phi_nn_c_inverse(m) == fig7;
  });
  pin("NN_B and NN_C inverses differ", [&] {
    auto m = make_marked(nn_sigma, nn_marks);
    return phi_nn_b_inverse(m).zero_block() == Block{-7, -3, -1, 1, 3, 7} &&
           phi_nn_c_inverse(m).zero_block() == Block{-9, -5, 5, 9};
  });
  pin("phi NN_D", [&] {
    auto t = phi_nn_d(fig8);
    return t.pair.sigma == P(9, {{1, 4, 7}, {2}, {3, 6}, {5, 9}, {8}}) &&
           t.pair.marked == std::vector<Block>{{3, 6}, {1, 4, 7}, {8}, {5, 9}} && t.epsilon == -1 &&
           phi_nn_d_inverse(t) == fig8;
  });

  pin("rho", [&] { return rho(fig2) == P(10, {{1, 3}, {2, 4, 6, 9}, {5, 7, 10}, {8}}); });
  pin("rho_bar", [&] {
    auto m = rho_bar(make_marked(fig2, {{8}, {1, 4, 10}}));
    return m.sigma == rho(fig2) && m.marked == std::vector<Block>{{8}, {5, 7, 10}};
  });
  pin("star", [&] {
    return star(P(4, {{1, 2, 4}, {3}}), P(3, {{1, 2}, {3}})) == P(8, {{1, 2, 4, 8}, {3}, {5, 6}, {7}});
  });
  pin("iota_b is the identity for even |X|", [&] {
    auto even = make_marked(P(4, {{1, 2}, {3}, {4}}), {{1, 2}, {4}});
    return iota_b(even) == even && iota_b_permutation(6) == std::vector<int>{1, 2, 3, 4, 5, 6};
  });
  pin("xi_bar keeps marked sizes", [&] {
    auto m = make_marked(P(4, {{1, 3}, {2}, {4}}), {{1, 3}, {4}});
    return sizes(xi_bar(m).marked) == sizes(m.marked);
  });

  pin("varphi_B", [&] {
    auto m = make_marked(P(11, {{1, 2}, {3}, {4, 7}, {5, 6}, {8, 9, 10}, {11}}), {{1, 2}, {3}, {4, 7}, {8, 9, 10}, {11}});
    auto p = varphi_b(m);
    return p.sigma == P(11, {{1, 2, 11}, {3, 8, 9, 10}, {4, 7}, {5, 6}}) && p.x == Pointer(Block{4, 7});
  });
  const SetPartition dyck_sigma = P(10, {{1, 4, 5}, {2, 3}, {6}, {7, 9}, {8}, {10}});
  pin("Dyck path", [&] { return nc_to_dyck(dyck_sigma).steps == "NNNNEEENEENENNNEEENE"; });
  pin("g", [&] { return g_map(make_marked(dyck_sigma, {{1, 4, 5}, {6}, {10}})).steps == "EEEENNNENNENNNNEEEEN"; });
  const ShiftedTableau fig10 =
      make_tableau({3, 5, 8, 10}, {1, 2, 4, 6, 7, 9}, {{-1, 1}, {-1, 2}, {-4, 4}, {-4, 7}, {-4, 9}, {5, 6}});
  pin("f", [&] {
    return f_map(make_marked(P(10, {{1, 2}, {3}, {4, 7, 9}, {5, 6}, {8}, {10}}), {{1, 2}, {4, 7, 9}})) == fig10;
  });
  pin("Catalan tableau", [&] { return tableau_validate(fig10, TableauKind::CT_B); });
  pin("(nn, na) polynomial symmetry", [&] {
    for (int n = 1; n <= 10; ++n) {
      const Poly p = nn_na_polynomial(n);
      for (const auto& [e, c] : p.terms()) {
        if (p.at(e.second, e.first) != c) return false;
      }
    }
    return true;
  });
  return f;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core",     "signed", "models", "interpret",
                                              "typemaps", "series", "encode", "examples"};
  return names;
}

std::vector<Job> suite_jobs(const std::string& suite, int max_n) {
  if (max_n < 1) throw ValidationError("--max-n must be at least 1");
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw ValidationError("unknown suite '" + suite + "'");
  }
  std::vector<Job> jobs;
  auto want = [&](const char* s) { return suite == "all" || suite == s; };
  const int sn = std::min(max_n, kSignedCap);
  auto per_n = [&](const char* s, const std::string& name, int lo, int hi, auto fn) {
    for (int n = lo; n <= hi; ++n) jobs.push_back({s, name + " n=" + std::to_string(n), [fn, n] { return fn(n); }});
  };
  if (want("core")) {
    per_n("core", "catalan", 1, max_n, catalan_counts);
    per_n("core", "patterns", 1, std::min(max_n, 9), pattern_agreement);
  }
  if (want("signed")) {
    per_n("signed", "count", 1, sn, signed_count);
    per_n("signed", "triples", 1, sn, triple_roundtrip);
  }
  if (want("models")) {
    for (const char* fam : {"nc_a", "nn_a"}) {
      per_n("models", fam, 1, max_n, [fam](int n) { return family_count(fam, n); });
    }
    for (const char* fam : {"pi_b", "nc_b", "nn_b", "nn_c", "nc_d", "nn_d"}) {
      per_n("models", fam, 1, sn, [fam](int n) { return family_count(fam, n); });
    }
    per_n("models", "nc_b constructive", 1, max_n, [sn](int n) { return nc_b_constructive(n, n <= sn); });
    per_n("models", "marked classes", 1, sn, marked_class_counts);
    for (const char* t : {"A", "B", "D"}) {
      per_n("models", std::string("type ") + t, 1, sn, [t](int n) { return type_counts(t, n); });
    }
  }
  if (want("interpret")) {
    for (const char* m : {"nc_b", "nc_d", "nn_b", "nn_c", "nn_d"}) {
      per_n("interpret", std::string("phi_") + m, 1, sn, [m](int n) { return interpretation(m, n); });
    }
  }
  if (want("typemaps")) {
    per_n("typemaps", "rho", 1, max_n, rho_check);
    per_n("typemaps", "rho_bar", 1, sn, rho_bar_check);
    per_n("typemaps", "xi", 1, max_n, xi_check);
    per_n("typemaps", "xi symmetry", 1, max_n, xi_symmetry);
    per_n("typemaps", "xi_bar", 1, sn, xi_bar_check);
    per_n("typemaps", "iota", 1, sn, iota_check);
    for (const char* fl : {"B", "C", "D"}) {
      per_n("typemaps", std::string("nc_to_nn ") + fl, 1, sn, [fl](int n) { return composed_check(fl, n); });
    }
  }
  if (want("series")) {
    jobs.push_back({"series", "cross check to z^" + std::to_string(max_n),
                    [max_n] { return series_cross_check(max_n); }});
  }
  if (want("encode")) {
    per_n("encode", "psi_b", 1, sn, psi_b_check);
    per_n("encode", "psi_d", 1, sn, psi_d_check);
    per_n("encode", "kappa", 1, sn, kappa_check);
    per_n("encode", "dyck", 1, max_n, dyck_check);
    per_n("encode", "g", 1, sn, g_check);
    per_n("encode", "f", 1, sn, f_check);
    per_n("encode", "pair counts", 1, max_n, pair_counts);
  }
  if (want("examples")) jobs.push_back({"examples", "pinned examples", golden_examples});
  return jobs;
}

std::vector<Failures> run_jobs(const std::vector<Job>& jobs, int workers) {
  if (workers < 1) throw ValidationError("--jobs must be at least 1");
  std::vector<Failures> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = jobs[i].run();
      } catch (const std::exception& e) {
        results[i] = {std::string("exception: ") + e.what()};
      }
    }
  };
  const int extra = std::min<int>(workers, static_cast<int>(jobs.size())) - 1;
  std::vector<std::thread> pool;
  for (int t = 0; t < extra; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return results;
}

std::vector<SuiteReport> summarize(const std::vector<Job>& jobs, const std::vector<Failures>& results) {
  std::vector<SuiteReport> out;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto it = std::find_if(out.begin(), out.end(), [&](const SuiteReport& r) { return r.suite == jobs[i].suite; });
    if (it == out.end()) {
      out.push_back({jobs[i].suite, 0, 0, {}});
      it = out.end() - 1;
    }
    it->jobs += 1;
    if (!results[i].empty()) it->failed += 1;
    for (const auto& m : results[i]) it->messages.push_back(jobs[i].name + ": " + m);
  }
  return out;
}

}  // namespace coxcat::verify
