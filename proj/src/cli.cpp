#include "coxcat/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "coxcat/encode.hpp"
#include "coxcat/interpret.hpp"
#include "coxcat/io.hpp"
#include "coxcat/models.hpp"
#include "coxcat/render.hpp"
#include "coxcat/series.hpp"
#include "coxcat/signed.hpp"
#include "coxcat/typemaps.hpp"
#include "coxcat/verify.hpp"

namespace coxcat::cli {

namespace {

using io::json;

struct Output {
  json value;
  std::string text;  // empty: print value.dump()
};

Output out_of(const SetPartition& p) { return {io::to_json(p), to_string(p)}; }
Output out_of(const SignedPartition& p) { return {io::to_json(p), to_string(p)}; }
Output out_of(const LatticePath& p) { return {io::to_json(p), p.steps}; }
template <class T>
Output out_of(const T& v) {
  return {io::to_json(v), {}};
}

using MapFn = std::function<Output(const json&)>;

template <class In, class Fn>
MapFn wrap(In (*read)(const json&), Fn fn) {
  return [read, fn](const json& j) { return out_of(fn(read(j))); };
}

const std::map<std::string, MapFn>& maps() {
  using namespace io;
  static const std::map<std::string, MapFn> table = [] {
    std::map<std::string, MapFn> m;
    auto set = &set_partition_from;
    auto sgn = &signed_partition_from;
    auto pair = &marked_pair_from;
    auto triple = &marked_triple_from;
    m["rho"] = wrap(set, rho);
    m["rho_inverse"] = wrap(set, rho_inverse);
    m["xi"] = wrap(set, xi);
    m["nc_to_dyck"] = wrap(set, nc_to_dyck);
    m["dyck_to_nc"] = wrap(&path_from, dyck_to_nc);
    m["components"] = [](const json& j) {
      json a = json::array();
      std::string text;
      for (const auto& c : components(set_partition_from(j))) {
        a.push_back(to_json(c));
        text += (text.empty() ? "" : " ") + to_string(c);
      }
      return Output{a, text};
    };
    m["rho_bar"] = wrap(pair, rho_bar);
    m["rho_bar_inverse"] = wrap(pair, rho_bar_inverse);
    m["xi_bar"] = wrap(pair, xi_bar);
    m["xi_bar_inverse"] = wrap(pair, xi_bar_inverse);
    m["iota_b"] = wrap(pair, iota_b);
    m["iota_b_inverse"] = wrap(pair, iota_b_inverse);
    m["iota_d"] = wrap(triple, iota_d);
    m["iota_d_inverse"] = wrap(triple, iota_d_inverse);
    m["kappa"] = wrap(triple, kappa);
    m["kappa_inverse"] = wrap(pair, kappa_inverse);
    m["varphi_b"] = wrap(pair, varphi_b);
    m["varphi_b_inverse"] = wrap(&b_pair_from, varphi_b_inverse);
    m["varphi_d"] = wrap(triple, varphi_d);
    m["varphi_d_inverse"] = wrap(&d_pair_from, varphi_d_inverse);
    m["g_map"] = wrap(pair, g_map);
    m["g_inverse"] = wrap(&path_from, g_inverse);
    m["f_map"] = wrap(pair, f_map);
    m["f_inverse"] = wrap(&tableau_from, f_inverse);
    m["phi_nc_b"] = wrap(sgn, phi_nc_b);
    m["phi_nc_b_inverse"] = wrap(pair, phi_nc_b_inverse);
    m["phi_nn_b"] = wrap(sgn, phi_nn_b);
    m["phi_nn_b_inverse"] = wrap(pair, phi_nn_b_inverse);
    m["phi_nn_c"] = wrap(sgn, phi_nn_c);
    m["phi_nn_c_inverse"] = wrap(pair, phi_nn_c_inverse);
    m["phi_nc_d"] = wrap(sgn, phi_nc_d);
    m["phi_nc_d_inverse"] = wrap(triple, phi_nc_d_inverse);
    m["phi_nn_d"] = wrap(sgn, phi_nn_d);
    m["phi_nn_d_inverse"] = wrap(triple, phi_nn_d_inverse);
    m["psi_b"] = wrap(sgn, psi_b);
    m["psi_b_inverse"] = wrap(&b_pair_from, psi_b_inverse);
    m["psi_d"] = wrap(sgn, psi_d);
    m["psi_d_inverse"] = wrap(&d_pair_from, psi_d_inverse);
    const std::pair<const char*, Flavor> flavors[] = {{"b", Flavor::B}, {"c", Flavor::C}, {"d", Flavor::D}};
    for (const auto& [name, fl] : flavors) {
      const Flavor f = fl;
      m[std::string("nc_to_nn_") + name] = [f](const json& j) {
        return out_of(nc_to_nn(f, signed_partition_from(j)));
      };
      m[std::string("nn_to_nc_") + name] = [f](const json& j) {
        return out_of(nn_to_nc(f, signed_partition_from(j)));
      };
    }
    m["decompose_triple"] = [](const json& j) {
      const auto t = decompose_triple(signed_partition_from(j));
      json beta = json::array(), gamma = json::array();
      for (const auto& b : t.beta) beta.push_back(to_json(b));
      for (const auto& [a, b] : t.gamma.pairs) gamma.push_back({to_json(a), to_json(b)});
      return Output{{{"alpha", to_json(t.alpha)}, {"beta", beta}, {"gamma", gamma}}, {}};
    };
    m["reduce_d"] = [](const json& j) {
      auto r = reduce_d(signed_partition_from(j));
      return r ? out_of(*r) : Output{nullptr, "none"};
    };
    m["type_of"] = [](const json& j) { return out_of(type_of(set_partition_from(j))); };
    m["signed_type"] = [](const json& j) { return out_of(signed_type(signed_partition_from(j))); };
    return m;
  }();
  return table;
}

std::string read_all(const std::string& source, std::istream& in) {
  std::ostringstream buf;
  if (source == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(source);
    if (!f) throw ValidationError("cannot read '" + source + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

// A single value, or one value per nonblank line.
std::vector<json> read_values(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw ValidationError("no input");
  try {
    return {io::parse_value(text)};
  } catch (const ValidationError&) {
    std::vector<json> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.push_back(io::parse_value(line));
    }
    return out;
  }
}

void emit(std::ostream& out, const Output& o, bool text) {
  out << (text && !o.text.empty() ? o.text : o.value.dump()) << '\n';
}

bool has_negative(const json& j) {
  if (j.is_number_integer()) return j.get<long>() < 0;
  if (j.is_array() || j.is_object()) {
    for (const auto& v : j) {
      if (has_negative(v)) return true;
    }
  }
  return false;
}

TypePartition parse_lambda(const std::string& s) {
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("bad --lambda part '" + item + "'");
    }
  }
  return TypePartition(std::move(parts));
}

std::optional<MarkedClass> parse_class(const std::string& name) {
  for (auto c : {MarkedClass::nc_nn, MarkedClass::nc_na, MarkedClass::nn_na, MarkedClass::nc_nn_pm,
                 MarkedClass::nc_na_pm, MarkedClass::nn_na_pm}) {
    if (class_name(c) == name) return c;
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::string> map_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : maps()) out.push_back(k);
  return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coxeter-Catalan combinatorics: enumeration, bijections, counting, series."};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string family, cls, name, input = "-", inline_json, type_family, lambda, which, suite = "all", mode;
  int n = 0, order = -1, max_n = 6, jobs = 1, cross = 0;
  bool count_only = false, text = false, closed = false;

  auto* en = app.add_subcommand("enumerate", "List a family or marked class of size n");
  auto* en_what = en->add_option_group("what");
  en_what->add_option("--family", family, "pi_b nc_a nn_a nc_b nc_d nn_b nn_c nn_d");
  en_what->add_option("--class", cls, "nc_nn nc_na nn_na nc_nn_pm nc_na_pm nn_na_pm nc_nn_bar b_pairs d_pairs");
  en_what->require_option(1);
  en->add_option("--n", n, "size")->required()->check(CLI::Range(0, 20));
  en->add_flag("--count-only", count_only, "print only the number of objects");
  en->add_flag("--text", text, "brace notation instead of JSON where available");

  auto* mp = app.add_subcommand("map", "Apply a named map to JSON objects (one per line, or a single value)");
  mp->add_option("--name", name, "map name, see --list")->required();
  mp->add_option("--input", input, "file or - for stdin");
  mp->add_option("--json", inline_json, "input given inline");
  mp->add_flag("--text", text, "brace notation instead of JSON where available");

  auto* ct = app.add_subcommand("count", "Closed-form counts");
  auto* ct_what = ct->add_option_group("what");
  ct_what->add_option("--family", family, "family cardinality");
  ct_what->add_option("--type", type_family, "A, B or D: count by type");
  ct_what->require_option(1);
  ct->add_option("--n", n, "size")->required()->check(CLI::Range(0, 1000));
  ct->add_option("--lambda", lambda, "type as comma-separated parts; omit for the whole table");

  auto* se = app.add_subcommand("series", "Coefficients of a generating function");
  se->add_option("--which", which, "C, B, A or F");
  se->add_option("--order", order, "truncation order (default $COXCAT_TRUNC_ORDER or 12)");
  se->add_flag("--closed", closed, "F from its closed formula");
  se->add_option("--cross-check", cross, "compare F with enumeration up to z^N");

  auto* ve = app.add_subcommand("verify", "Run the exhaustive suites");
  ve->add_option("--max-n", max_n, "largest n checked")->check(CLI::Range(1, 14));
  ve->add_option("--suite", suite, "all, core, signed, models, interpret, typemaps, series, encode, examples");
  ve->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  auto* re = app.add_subcommand("render", "ASCII picture of an object");
  re->add_option("--mode", mode, "arcs, path or tableau")->required()->check(CLI::IsMember({"arcs", "path", "tableau"}));
  re->add_option("--input", input, "file or - for stdin");
  re->add_option("--json", inline_json, "input given inline");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  auto inputs = [&] { return read_values(inline_json.empty() ? read_all(input, in) : inline_json); };

  try {
    if (en->parsed()) {
      std::vector<Output> items;
      std::size_t count = 0;
      auto add = [&](Output o) {
        ++count;
        if (!count_only) items.push_back(std::move(o));
      };
      if (!family.empty()) {
        const Family f = parse_family(family);
        if (is_signed_family(f)) {
          for (const auto& p : enumerate_signed_family(f, n)) add(out_of(p));
        } else {
          for (const auto& p : enumerate_unsigned(f, n)) add(out_of(p));
        }
      } else if (cls == "nc_nn_bar") {
        for (const auto& m : enumerate_nc_nn_bar(n)) add(out_of(m));
      } else if (cls == "b_pairs") {
        for (const auto& p : enumerate_b_pairs(n)) add(out_of(p));
      } else if (cls == "d_pairs") {
        for (const auto& p : enumerate_d_pairs(n)) add(out_of(p));
      } else if (auto c = parse_class(cls)) {
        if (is_triple_class(*c)) {
          for (const auto& t : enumerate_marked_triples(*c, n)) add(out_of(t));
        } else {
          for (const auto& m : enumerate_marked_pairs(*c, n)) add(out_of(m));
        }
      } else {
        throw ValidationError("unknown class '" + cls + "'");
      }
      if (count_only) {
        out << count << '\n';
      } else {
        for (const auto& o : items) emit(out, o, text);
      }
      return 0;
    }

    if (mp->parsed()) {
      auto it = maps().find(name);
      if (it == maps().end()) {
        std::string all;
        for (const auto& k : map_names()) all += " " + k;
        throw ValidationError("unknown map '" + name + "'; known:" + all);
      }
      for (const auto& v : inputs()) emit(out, it->second(v), text);
      return 0;
    }

    if (ct->parsed()) {
      if (!family.empty()) {
        out << family_cardinality(parse_family(family), n).get_str() << '\n';
        return 0;
      }
      TypeFamily tf;
      if (type_family == "A") tf = TypeFamily::A;
      else if (type_family == "B") tf = TypeFamily::B;
      else if (type_family == "D") tf = TypeFamily::D;
      else throw ValidationError("--type must be A, B or D");
      if (!lambda.empty()) {
        out << count_by_type(tf, n, parse_lambda(lambda)).get_str() << '\n';
        return 0;
      }
      for (int m = tf == TypeFamily::A ? n : 0; m <= n; ++m) {
        for (const auto& l : integer_partitions(m)) {
          out << to_string(l) << ' ' << count_by_type(tf, n, l).get_str() << '\n';
        }
      }
      return 0;
    }

    if (se->parsed()) {
      if (cross > 0) {
        const auto report = cross_check(cross);
        for (const auto& line : report.lines) {
          out << (line.ok ? "PASS " : "FAIL ") << line.name;
          if (!line.ok) out << "  [" << line.detail << "]";
          out << '\n';
        }
        return report.ok() ? 0 : 2;
      }
      if (which.empty()) throw ValidationError("series needs --which or --cross-check");
      const int k = order >= 0 ? order : default_truncation_order();
      const FracSeries s = closed ? f_closed_form(k) : series(parse_series_kind(which), k);
      if (closed && which != "F") throw ValidationError("--closed applies to F only");
      for (int i = 0; i <= k; ++i) out << "z^" << i << ": " << to_string(s[i]) << '\n';
      return 0;
    }

    if (ve->parsed()) {
      const auto job_list = verify::suite_jobs(suite, max_n);
      const auto results = verify::run_jobs(job_list, jobs);
      bool all_ok = true;
      for (const auto& r : verify::summarize(job_list, results)) {
        out << r.suite << ": " << (r.failed == 0 ? "PASS" : "FAIL") << " (" << (r.jobs - r.failed) << "/" << r.jobs
            << " checks)\n";
        for (const auto& m : r.messages) out << "  " << m << '\n';
        all_ok = all_ok && r.failed == 0;
      }
      out << "verify: " << (all_ok ? "PASS" : "FAIL") << '\n';
      return all_ok ? 0 : 2;
    }

    if (re->parsed()) {
      for (const auto& v : inputs()) {
        if (mode == "arcs") {
          out << (has_negative(v) ? render_arcs(io::signed_partition_from(v)) : render_arcs(io::set_partition_from(v)));
        } else if (mode == "path") {
          out << render_path(io::path_from(v));
        } else {
          out << render_tableau(io::tableau_from(v));
        }
      }
      return 0;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace coxcat::cli
