#include <cstdio>
#include <filesystem>
#include <map>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcalg/lcalg.hpp"

using namespace lcalg;

namespace {

enum Exit { Ok = 0, PropertyFailure = 1, Usage = 2, Malformed = 3 };

struct UsageError : Error {
  using Error::Error;
};

// Thrown by commands whose check did not pass; the report is already printed.
struct CheckFailed {};

struct Common {
  std::string format = "json";
  std::uint64_t seed = default_seed;
};

struct AlgebraSource {
  std::string name;
  std::string file;
  std::string spec;  // name or path
};

struct Loaded {
  std::string name;
  Algebra algebra;
  std::optional<Grading> grading;
};

void add_source(CLI::App* cmd, AlgebraSource& src, const std::string& prefix = "", bool positional = true) {
  auto* n = cmd->add_option("--" + prefix + "algebra", src.name, "named algebra: R C H O S TO TS A<k> J<k>");
  auto* f = cmd->add_option("--" + prefix + "file", src.file, "algebra JSON file");
  n->excludes(f);
  if (positional) {
    auto* p = cmd->add_option("source", src.spec, "algebra name or JSON file");
    p->excludes(n)->excludes(f);
  }
}

Loaded load(AlgebraSource src) {
  if (!src.spec.empty()) {
    const bool looks_like_path = src.spec.find('/') != std::string::npos || src.spec.find(".json") != std::string::npos;
    if (looks_like_path || std::filesystem::exists(src.spec)) {
      src.file = src.spec;
    } else {
      src.name = src.spec;
    }
  }
  if (!src.file.empty()) {
    AlgebraFile af = algebra_from_json(read_json_file(src.file));
    return {src.file, af.algebra, af.grading};
  }
  if (src.name.empty()) throw UsageError("an algebra name or file is required");
  NamedAlgebra na = [&] {
    try {
      return named_algebra(src.name);
    } catch (const PreconditionError& e) {
      throw UsageError(e.what());
    }
  }();
  return {na.name, na.algebra, na.grading};
}

std::string property_name(const std::string& p) {
  static const std::map<std::string, std::string> aliases = {{"lc", "locally_complex"},   {"alt", "alternative"},
                                                             {"superalt", "super_alternative"}, {"nn", "nicely_normed"},
                                                             {"comm", "commutative"},    {"zd", "has_zero_divisors"}};
  auto it = aliases.find(p);
  return it == aliases.end() ? p : it->second;
}

Rational rational_arg(const std::string& s) { return parse_rational(s); }

json elements_json(const Algebra& a, const std::vector<Vector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(format_element(a, v));
  return out;
}

std::vector<Vector> columns(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t k = 0; k < m.cols(); ++k) out.push_back(m.column(k));
  return out;
}

std::string scalar_md(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

void render_md(std::ostream& out, const json& j, int depth = 0) {
  const std::string indent(2 * static_cast<std::size_t>(depth), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (v.is_object()) {
      out << indent << "- **" << it.key() << "**\n";
      render_md(out, v, depth + 1);
    } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
      out << indent << "- **" << it.key() << "**\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          out << indent << "  -\n";
          render_md(out, e, depth + 2);
        } else {
          out << indent << "  - " << e.dump() << "\n";
        }
      }
    } else if (v.is_array()) {
      std::string joined;
      for (const auto& e : v) joined += (joined.empty() ? "" : ", ") + scalar_md(e);
      out << indent << "- **" << it.key() << "**: " << (joined.empty() ? "(none)" : joined) << "\n";
    } else {
      out << indent << "- **" << it.key() << "**: " << scalar_md(v) << "\n";
    }
  }
}

void emit(const Common& c, const std::string& title, const json& j, const std::string& md_override = "") {
  if (c.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "## " << title << "\n\n";
  if (!md_override.empty()) {
    std::cout << md_override;
  } else {
    render_md(std::cout, j);
  }
}

Grading pick_grading(const Loaded& l, bool trivial) {
  if (trivial || !l.grading) return Grading::trivial(l.algebra.dim());
  return *l.grading;
}

struct InlineParams {
  std::vector<std::string> T, u;
};

Params4Exact inline_params(const InlineParams& ip) {
  if (ip.T.size() != 9) throw UsageError("--T takes 9 entries in row order");
  if (!ip.u.empty() && ip.u.size() != 3) throw UsageError("--u takes 3 entries");
  Params4Exact p;
  for (std::size_t k = 0; k < 9; ++k) p.T(k / 3, k % 3) = parse_rational(ip.T[k]);
  for (std::size_t k = 0; k < ip.u.size(); ++k) p.u[k] = parse_rational(ip.u[k]);
  return p;
}

Params4Exact params_or_extract(const std::string& params_file, const InlineParams& ip, const AlgebraSource& src,
                               std::optional<Params4>& approx, std::optional<Matrix>& basis) {
  if (!ip.T.empty()) return inline_params(ip);
  if (!params_file.empty()) return params4_from_json(read_json_file(params_file));
  Loaded l = load(src);
  ExtractedParams4 e = extract_Tu(l.algebra);
  basis = e.basis;
  if (e.exact) return *e.exact;
  approx = e.approx;
  return {};
}

json geometric_json(const GeometricType& g) {
  return {{"rank", g.rank},
          {"kind", to_string(g.kind)},
          {"eigenvalues", {g.eigenvalues(0), g.eigenvalues(1), g.eigenvalues(2)}},
          {"flipped", g.flipped}};
}

json division_json(const Division4Result& d, const Algebra& a) {
  json out{{"division", d.division}, {"exact", d.exact}};
  if (d.pair) out["zero_divisor_pair"] = {format_element(a, d.pair->first), format_element(a, d.pair->second)};
  if (d.pair_approx) {
    auto vec = [](const Eigen::Vector4d& v) { return json{v(0), v(1), v(2), v(3)}; };
    out["zero_divisor_pair"] = {vec(d.pair_approx->first), vec(d.pair_approx->second)};
    out["product_norm"] = d.product_norm;
  }
  return out;
}

// One file holding either {"T": ..., "u": ...} or an algebra.
Params4 params_from_file(const std::string& path) {
  json j = read_json_file(path);
  if (j.is_object() && j.contains("T")) return to_double(params4_from_json(j));
  ExtractedParams4 e = extract_Tu(algebra_from_json(j).algebra);
  return e.exact ? to_double(*e.exact) : e.approx;
}

Matrix map_from_file(const std::string& path, const Algebra& from, const Algebra& to) {
  json j = read_json_file(path);
  if (j.is_object() && j.contains("images")) j = j.at("images");
  if (!j.is_array() || j.size() != from.dim()) throw ParseError("map must list one image per source basis element");
  Matrix m(to.dim(), from.dim());
  for (std::size_t k = 0; k < from.dim(); ++k) {
    Vector v = j[k].is_string() ? parse_element(j[k].get<std::string>(), to) : json_vector(j[k], to.dim());
    m.set_column(k, v);
  }
  return m;
}

std::string verify_md(const VerificationReport& r) {
  std::ostringstream out;
  out << "| id | claim | status | ms | detail |\n|---:|---|---|---:|---|\n";
  for (const auto& c : r.claims) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", c.elapsed_ms);
    out << "| " << c.id << " | " << c.name << " | " << (c.passed ? "pass" : "FAIL") << " | " << ms << " | " << c.witness << " |\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for real nonassociative algebras: Cayley-Dickson algebras, locally complex algebras, low-dimensional classification"};
  app.require_subcommand(1);
  Common common;
  auto common_opts = [&](CLI::App* cmd) {
    cmd->add_option("--format", common.format, "output format")->check(CLI::IsMember({"json", "md"}))->capture_default_str();
    cmd->add_option("--seed", common.seed, "random seed (default 20240607)")->capture_default_str();
  };

  AlgebraSource src;
  bool trivial_grading = false;

  // gen
  auto* gen = app.add_subcommand("gen", "emit a named or parametrised algebra as JSON");
  common_opts(gen);
  std::string gen_name, gen_t = "0", gen_s = "0", gen_params;
  gen->add_option("name", gen_name, "R C H O S TO TS A<k> J<k>, A_ts or A_Tu")->required();
  gen->add_option("--t", gen_t, "t for A_ts");
  gen->add_option("--s", gen_s, "s for A_ts");
  gen->add_option("--params", gen_params, "(T, u) JSON for A_Tu");

  // table
  auto* table = app.add_subcommand("table", "multiplication table");
  common_opts(table);
  add_source(table, src);

  // check
  auto* check = app.add_subcommand("check", "property report");
  common_opts(check);
  add_source(check, src);
  std::vector<std::string> check_props, check_expect;
  std::size_t budget = 10000;
  unsigned threads = 0;
  check->add_option("--property", check_props, "all, quadratic|lc|alt|superalt|nn|comm|zd or full names");
  check->add_option("--expect", check_expect, "name=yes|no; exit 1 on mismatch");
  check->add_option("--budget", budget, "random zero-divisor trials")->capture_default_str();
  check->add_option("--threads", threads, "worker threads (0: all cores)");
  check->add_flag("--trivial-grading", trivial_grading, "ignore the grading of the input");

  // recognize
  auto* recognize = app.add_subcommand("recognize", "identify an alternative locally complex algebra as R, C, H or O");
  common_opts(recognize);
  add_source(recognize, src);

  // classify-super
  auto* csuper = app.add_subcommand("classify-super", "classify a super-alternative locally complex algebra");
  common_opts(csuper);
  add_source(csuper, src);
  csuper->add_flag("--trivial-grading", trivial_grading, "use A_0 = A");

  // classify3
  auto* c3 = app.add_subcommand("classify3", "canonical (t, s) of a 3-dimensional locally complex algebra");
  common_opts(c3);
  add_source(c3, src);
  std::string c3_t, c3_z1 = "0", c3_z2 = "0";
  c3->add_option("--t", c3_t, "raw t (instead of an algebra)");
  c3->add_option("--z1", c3_z1, "raw z1");
  c3->add_option("--z2", c3_z2, "raw z2");
  std::vector<std::string> c3_params;
  c3->add_option("--params", c3_params, "t s")->expected(2);

  // classify4
  auto* c4 = app.add_subcommand("classify4", "(T, u), geometric type and division test of a 4-dimensional algebra");
  common_opts(c4);
  add_source(c4, src);
  std::string params_file;
  double tol = 1e-9;
  c4->add_option("--params", params_file, "(T, u) JSON instead of an algebra");
  InlineParams ip;
  c4->add_option("--T", ip.T, "T entries in row order")->expected(9);
  c4->add_option("--u", ip.u, "u entries")->expected(3);
  c4->add_option("--tol", tol, "floating tolerance")->capture_default_str();

  // iso4
  auto* iso4 = app.add_subcommand("iso4", "decide isomorphism of two 4-dimensional algebras");
  common_opts(iso4);
  std::string iso_a, iso_b;
  iso4->add_option("first,--a", iso_a, "(T, u) or algebra JSON")->required();
  iso4->add_option("second,--b", iso_b, "(T, u) or algebra JSON")->required();
  iso4->add_option("--tol", tol, "floating tolerance")->capture_default_str();

  // division4
  auto* div4 = app.add_subcommand("division4", "division test for a 4-dimensional locally complex algebra");
  common_opts(div4);
  add_source(div4, src);
  div4->add_option("--params", params_file, "(T, u) JSON instead of an algebra");
  div4->add_option("--T", ip.T, "T entries in row order")->expected(9);
  div4->add_option("--u", ip.u, "u entries")->expected(3);

  // ann
  auto* ann = app.add_subcommand("ann", "annihilator {y : xy = 0}");
  common_opts(ann);
  add_source(ann, src);
  std::string element;
  ann->add_option("--element,-x", element, "element, e.g. \"f1 - f4\"")->required();

  // zerodiv
  auto* zd = app.add_subcommand("zerodiv", "search for zero divisors");
  common_opts(zd);
  add_source(zd, src);
  zd->add_option("--budget", budget, "random trials")->capture_default_str();
  zd->add_option("--threads", threads, "worker threads (0: all cores)");

  // alterscalar
  auto* alt = app.add_subcommand("alterscalar", "solutions of x^2 a = x(xa) for all x");
  common_opts(alt);
  add_source(alt, src);

  // embed-check
  auto* embed = app.add_subcommand("embed-check", "check that a linear map is an injective unital homomorphism");
  common_opts(embed);
  AlgebraSource from, to;
  add_source(embed, from, "from-", false);
  add_source(embed, to, "to-", false);
  embed->add_option("--from", from.spec, "source algebra name or file (default TO)");
  embed->add_option("--to", to.spec, "target algebra name or file (default S)");
  std::string map_file;
  embed->add_option("--map", map_file, "JSON list of images (default: the standard TO -> S map)");

  // subalg
  auto* subalg = app.add_subcommand("subalg", "generated subalgebras and dimension census");
  common_opts(subalg);
  add_source(subalg, src);
  std::vector<std::string> gens;
  std::vector<std::size_t> census;
  bool no_unit = false;
  std::size_t census_budget = 200;
  subalg->add_option("--gen,-g", gens, "generator (repeatable)");
  subalg->add_option("--census", census, "look for subalgebras of these dimensions");
  subalg->add_option("--budget", census_budget, "random generator sets for the census")->capture_default_str();
  subalg->add_flag("--no-unit", no_unit, "do not adjoin 1");

  // verify-paper
  auto* vp = app.add_subcommand("verify-paper", "run the built-in verification suite");
  common_opts(vp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Usage;
  }

  try {
    if (*gen) {
      const std::string name = canonical_name(gen_name);
      if (name == "ATS") {
        Algebra a = build_A_ts(rational_arg(gen_t), rational_arg(gen_s));
        emit(common, "A_ts", algebra_json(a), table_markdown(a));
      } else if (name == "ATU") {
        if (gen_params.empty()) throw UsageError("A_Tu needs --params");
        Algebra a = build_A_Tu(params4_from_json(read_json_file(gen_params)));
        emit(common, "A_Tu", algebra_json(a), table_markdown(a));
      } else {
        Loaded l = load({gen_name, "", ""});
        emit(common, l.name, algebra_json(l.algebra, l.grading), table_markdown(l.algebra));
      }
    } else if (*table) {
      Loaded l = load(src);
      json rows = json::array();
      for (std::size_t i = 0; i < l.algebra.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < l.algebra.dim(); ++j) row.push_back(format_element(l.algebra, l.algebra.multiply(l.algebra.basis(i), l.algebra.basis(j))));
        rows.push_back(row);
      }
      emit(common, l.name, {{"labels", l.algebra.labels()}, {"table", rows}}, table_markdown(l.algebra));
    } else if (*check) {
      Loaded l = load(src);
      std::optional<Grading> g = trivial_grading ? std::optional<Grading>(Grading::trivial(l.algebra.dim())) : l.grading;
      std::vector<std::string> props;
      for (const auto& pr : check_props) {
        if (pr == "all") {
          props.clear();
          break;
        }
        props.push_back(property_name(pr));
      }
      PropertyReport r = property_report(l.algebra, g, props, {budget, common.seed, threads});
      json out = report_json(l.algebra, r);
      bool ok = true;
      json mismatches = json::array();
      for (const auto& e : check_expect) {
        auto eq = e.find('=');
        if (eq == std::string::npos) throw UsageError("--expect takes name=yes|no");
        const std::string name = property_name(e.substr(0, eq)), want = e.substr(eq + 1);
        const PropertyEntry* entry = r.find(name);
        if (!entry) throw UsageError("unknown or unselected property '" + name + "'");
        if (want != to_string(entry->value)) {
          ok = false;
          mismatches.push_back(name + ": expected " + want + ", got " + to_string(entry->value));
        }
      }
      if (!check_expect.empty()) out["expectations"] = {{"met", ok}, {"mismatches", mismatches}};
      emit(common, "properties of " + l.name, out);
      if (!ok) throw CheckFailed{};
    } else if (*recognize || *csuper) {
      Loaded l = load(src);
      RecognitionResult r;
      try {
        r = *recognize ? recognize_alternative_division(l.algebra) : classify_super_alternative(l.algebra, pick_grading(l, trivial_grading));
      } catch (const PreconditionError& e) {
        emit(common, l.name, {{"recognized", false}, {"reason", e.what()}});
        throw CheckFailed{};
      }
      NamedAlgebra target = named_algebra(r.tag);
      json basis = json::object();
      auto cols = columns(r.basis);
      for (std::size_t k = 0; k < cols.size(); ++k) basis[target.algebra.label(k)] = format_element(l.algebra, cols[k]);
      emit(common, l.name, {{"recognized", true}, {"tag", r.tag}, {"basis", basis}, {"iso", matrix_json(r.iso)}});
    } else if (*c3) {
      if (!c3_params.empty()) {
        c3_t = c3_params[0];
        c3_z1 = c3_params[1];
        c3_z2 = "0";
      }
      Algebra a = c3_t.empty() ? load(src).algebra : build_A_tz(rational_arg(c3_t), rational_arg(c3_z1), rational_arg(c3_z2));
      CanonicalForm3 c;
      try {
        c = canonical_3d(a);
      } catch (const PreconditionError& e) {
        emit(common, "classify3", {{"locally_complex", false}, {"reason", e.what()}});
        throw CheckFailed{};
      }
      json out{{"t_squared", to_string(c.t_squared)}, {"s_squared", to_string(c.s_squared)}, {"t", c.t}, {"s", c.s}};
      if (c.t_exact) out["t_exact"] = to_string(*c.t_exact);
      if (c.s_exact) out["s_exact"] = to_string(*c.s_exact);
      emit(common, "classify3", out);
    } else if (*c4 || *div4) {
      std::optional<Params4> approx;
      std::optional<Matrix> basis;
      Params4Exact exact = params_or_extract(params_file, ip, src, approx, basis);
      Params4 p = approx ? *approx : to_double(exact);
      Algebra model = build_A_Tu(exact);
      Division4Result d = approx ? is_division_4d(p, tol) : is_division_4d(exact);
      json out = json::object();
      if (*c4) {
        out["params"] = approx ? params4_json(p) : params4_json(exact);
        out["exact"] = !approx;
        out["geometric_type"] = geometric_json(geometric_type(p.T, tol));
        if (basis) out["basis"] = elements_json(load(src).algebra, columns(*basis));
      }
      out["division"] = division_json(d, model);
      emit(common, *c4 ? "classify4" : "division4", out);
    } else if (*iso4) {
      Equiv4Result r = equiv_4d(params_from_file(iso_a), params_from_file(iso_b), tol);
      json out{{"equivalent", r.equivalent}, {"borderline", r.borderline}, {"reason", r.reason}};
      if (r.Q) out["Q"] = eigen_json(*r.Q);
      emit(common, "iso4", out);
    } else if (*ann) {
      Loaded l = load(src);
      Vector x = parse_element(element, l.algebra);
      Subspace s = annihilator(l.algebra, x);
      emit(common, "Ann(" + element + ")", {{"element", format_element(l.algebra, x)}, {"dim", s.dim()}, {"basis", elements_json(l.algebra, s.basis_vectors())}});
    } else if (*zd) {
      Loaded l = load(src);
      ZeroDivisorResult r = zero_divisor_search(l.algebra, {budget, common.seed, threads});
      json out{{"status", to_string(r.status)}, {"definitive", r.definitive}, {"reason", r.reason}, {"random_trials", r.random_trials}, {"seed", common.seed}};
      if (r.x) out["x"] = format_element(l.algebra, *r.x);
      if (r.y) out["y"] = format_element(l.algebra, *r.y);
      emit(common, "zero divisors of " + l.name, out);
    } else if (*alt) {
      Loaded l = load(src);
      AlterScalarSpace s = alter_scalar_space(l.algebra);
      emit(common, "alter-scalars of " + l.name,
           {{"dim", s.solutions.dim()}, {"basis", elements_json(l.algebra, s.solutions.basis_vectors())}, {"has_alter_scalars", s.has_alter_scalars}});
    } else if (*embed) {
      if (map_file.empty() && from.name.empty() && from.file.empty() && from.spec.empty()) from.name = "TO";
      if (map_file.empty() && to.name.empty() && to.file.empty() && to.spec.empty()) to.name = "S";
      Loaded a = load(from), b = load(to);
      Matrix m;
      if (map_file.empty()) {
        if (canonical_name(a.name) != "TO" || canonical_name(b.name) != "S") throw UsageError("--map is required unless mapping TO into S");
        m = detail::to_into_s_map();
      } else {
        m = map_from_file(map_file, a.algebra, b.algebra);
      }
      HomomorphismCheck h = check_homomorphism(m, a.algebra, b.algebra);
      json images = json::object();
      for (std::size_t k = 0; k < a.algebra.dim(); ++k) images[a.algebra.label(k)] = format_element(b.algebra, m.column(k));
      json out{{"homomorphism", h.ok}, {"reason", h.reason}, {"images", images}};
      if (h.violated_pair) out["violated_pair"] = {a.algebra.label(h.violated_pair->first), a.algebra.label(h.violated_pair->second)};
      emit(common, a.name + " -> " + b.name, out);
      if (!h.ok) throw CheckFailed{};
    } else if (*subalg) {
      Loaded l = load(src);
      json out = json::object();
      if (!gens.empty() || census.empty()) {
        std::vector<Vector> g;
        for (const auto& s : gens) g.push_back(parse_element(s, l.algebra));
        Subspace s = generated_subalgebra(l.algebra, g, !no_unit);
        out["generated"] = {{"generators", gens}, {"dim", s.dim()}, {"basis", elements_json(l.algebra, s.basis_vectors())}};
      }
      if (!census.empty()) {
        SubalgebraCensus c = subalgebra_census(l.algebra, census, census_budget, {}, common.seed);
        json found = json::object();
        for (const auto& [d, g] : c.generators) found[std::to_string(d)] = elements_json(l.algebra, g);
        json missing = json::array();
        for (auto d : census)
          if (!c.generators.count(d)) missing.push_back(d);
        out["census"] = {{"found", found}, {"not_found", missing}};
      }
      emit(common, "subalgebras of " + l.name, out);
    } else if (*vp) {
      VerifyOptions opt;
      opt.seed = common.seed;
      VerificationReport r = verify_all(opt);
      emit(common, "verification", report_json(r), verify_md(r));
      if (!r.all_passed()) throw CheckFailed{};
    }
  } catch (const CheckFailed&) {
    return PropertyFailure;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  } catch (const ParseError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return Malformed;
  } catch (const DimensionError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return Malformed;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return PropertyFailure;
  }
  return Ok;
}
