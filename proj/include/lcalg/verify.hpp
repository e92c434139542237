#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lcalg/cayley_dickson.hpp"
#include "lcalg/io.hpp"
#include "lcalg/lowdim.hpp"
#include "lcalg/random.hpp"
#include "lcalg/search.hpp"
#include "lcalg/structure.hpp"
#include "lcalg/tables.hpp"

namespace lcalg {

// End-to-end checks of the library's headline facts, one per claim id.

struct ClaimResult {
  int id = 0;
  std::string name;
  std::string anchor;  // the mathematical statement being checked
  bool passed = false;
  double elapsed_ms = 0;
  std::string witness;
};

struct VerificationReport {
  std::vector<ClaimResult> claims;

  bool all_passed() const {
    for (const auto& c : claims)
      if (!c.passed) return false;
    return true;
  }
};

struct VerifyOptions {
  std::uint64_t seed = default_seed;
  /// Source of named algebras; tests replace it to inject corrupted tables.
  std::function<NamedAlgebra(const std::string&)> provider = [](const std::string& name) { return named_algebra(name); };
};

namespace detail {

struct ClaimFailure : Error {
  using Error::Error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ClaimFailure(what);
}

inline std::string dims_summary(const std::vector<std::pair<std::string, std::size_t>>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i].first << ": " << v[i].second;
  return out.str();
}

inline Algebra rotated(const Algebra& a, Rng& rng, const std::vector<std::vector<std::size_t>>& groups = {}) {
  return a.change_basis(random_rotation_basis(a, rng, groups));
}

/// (T, u) transported by an orthogonal Q: (det Q Q T Q^T, det Q Q u).
inline Params4Exact transport(const Params4Exact& p, const Matrix& q) {
  Rational d = determinant(q);
  Params4Exact out;
  Matrix t = q * p.T * q.transpose();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out.T(i, j) = d * t(i, j);
  out.u = d * q.apply(p.u);
  return out;
}

inline Params4Exact random_params4(Rng& rng) {
  Params4Exact p;
  for (std::size_t i = 0; i < 3; ++i) {
    p.u[i] = random_rational(rng, 4, 3);
    for (std::size_t j = 0; j < 3; ++j) p.T(i, j) = random_rational(rng, 4, 3);
  }
  return p;
}

inline std::string claim_tables(const VerifyOptions&) {
  Algebra o = cayley_dickson_algebra(3).algebra;
  Algebra s = cayley_dickson_algebra(4).algebra;
  Algebra o_table = tables::from_signed_table(tables::octonion, 'e');
  Algebra s_table = tables::from_signed_table(tables::sedenion, 'e');
  require(o.constants() == o_table.constants(), "doubling of H differs from the octonion table");
  require(s.constants() == s_table.constants(), "doubling of O differs from the sedenion table");
  return "64 octonion and 256 sedenion basis products match";
}

inline std::string claim_moufang(const VerifyOptions& opt) {
  Algebra o = opt.provider("O").algebra;
  Algebra s = opt.provider("S").algebra;
  Verdict vo = moufang_holds(o);
  require(vo.holds, "octonions: " + vo.reason);
  Verdict vs = moufang_holds(s);
  require(!vs.holds, "sedenions satisfy the Moufang identity on all basis triples");
  return "holds on all 512 octonion basis triples; sedenion failure: " + vs.reason;
}

inline std::string claim_recognizers(const VerifyOptions& opt) {
  Rng rng(opt.seed);
  std::size_t checked = 0;
  for (const char* name : {"R", "C", "H", "O"}) {
    Algebra a = opt.provider(name).algebra;
    RecognitionResult r = recognize_alternative_division(a);
    require(r.tag == name, std::string(name) + " recognized as " + r.tag);
    for (int k = 0; k < 10; ++k) {
      Algebra rot = rotated(a, rng);
      RecognitionResult rr = recognize_alternative_division(rot);
      require(rr.tag == name, std::string("rotated ") + name + " recognized as " + rr.tag);
      require(check_homomorphism(rr.iso, rot, opt.provider(name).algebra).ok, "iso not multiplicative");
      ++checked;
    }
  }
  return "R, C, H, O and " + std::to_string(checked) + " rotated copies recognized with verified isomorphisms";
}

inline std::string claim_alter_scalars(const VerifyOptions& opt) {
  Algebra s = opt.provider("S").algebra;
  AlterScalarSpace as = alter_scalar_space(s);
  require(as.solutions == Subspace::span({s.basis(0), s.basis(8)}, 16), "sedenion alter-scalar space is not span{1, e8}");
  std::vector<std::pair<std::string, std::size_t>> dims{{"S", as.solutions.dim()}};
  for (const char* name : {"TO", "TS"}) {
    AlterScalarSpace t = alter_scalar_space(opt.provider(name).algebra);
    require(t.solutions.dim() == 1 && !t.has_alter_scalars, std::string(name) + " has alter-scalars");
    dims.emplace_back(name, t.solutions.dim());
  }
  AlterScalarSpace o = alter_scalar_space(opt.provider("O").algebra);
  require(o.solutions.dim() == 8, "octonion solution space is not everything");
  dims.emplace_back("O", 8);
  return "solution dimensions " + dims_summary(dims);
}

inline std::string claim_annihilators(const VerifyOptions& opt) {
  Algebra to = opt.provider("TO").algebra;
  Vector x = parse_element("f1 - f4", to);
  require(is_zero(to.multiply(x, parse_element("f3 - f6", to))), "(f1 - f4)(f3 - f6) != 0 in TO");
  Subspace ann = annihilator(to, x);
  require(ann.dim() == 2, "dim Ann(f1 - f4) = " + std::to_string(ann.dim()) + " in TO");
  for (const char* y : {"f2 + f7", "f3 - f6"}) require(ann.contains(parse_element(y, to)), std::string(y) + " not in Ann(f1 - f4)");
  Algebra ts = opt.provider("TS").algebra;
  Subspace ann2 = annihilator(ts, parse_element("f3 + f12", ts));
  require(ann2.dim() == 6, "dim Ann(f3 + f12) = " + std::to_string(ann2.dim()) + " in TS");
  for (const char* y : {"f1 + f14", "f2 - f13", "f4 + f11", "f5 + f10", "f6 - f9", "f7 - f8"}) {
    require(ann2.contains(parse_element(y, ts)), std::string(y) + " not in Ann(f3 + f12)");
  }
  Algebra s = opt.provider("S").algebra;
  std::size_t zero_divisors = 0;
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = i + 1; j < 16; ++j)
      for (int sg : {1, -1}) {
        Vector v = s.basis(i);
        v[j] = sg;
        std::size_t d = annihilator(s, v).dim();
        if (d == 0) continue;
        require(d == 4, "dim Ann = " + std::to_string(d) + " for a sedenion zero divisor");
        ++zero_divisors;
      }
  require(zero_divisors > 0, "no sedenion zero divisor among e_i +- e_j");
  return "TO: dim 2; TS: dim 6; S: " + std::to_string(zero_divisors) + " zero divisors of the form e_i +- e_j, all with dim Ann = 4";
}

inline std::string claim_super_classification(const VerifyOptions& opt) {
  Rng rng(opt.seed + 6);
  std::size_t checked = 0;
  for (const char* name : {"C", "H", "O", "S", "TO", "TS"}) {
    NamedAlgebra na = opt.provider(name);
    const std::string nm = name;
    const bool trivial = nm == "C" || nm == "H" || nm == "O";
    Grading g = trivial ? Grading::trivial(na.algebra.dim()) : *na.grading;
    RecognitionResult r;
    try {
      r = classify_super_alternative(na.algebra, g);
    } catch (const PreconditionError& e) {
      throw ClaimFailure(nm + ": " + e.what());
    }
    require(r.tag == nm, nm + " classified as " + r.tag);
    auto groups = coordinate_groups(g);
    require(groups.has_value(), "grading of " + nm + " is not a coordinate grading");
    for (int k = 0; k < 5; ++k) {
      Matrix b = random_rotation_basis(na.algebra, rng, *groups);
      Algebra rot = na.algebra.change_basis(b);
      RecognitionResult rr = classify_super_alternative(rot, transform_grading(g, b));
      require(rr.tag == nm, "rotated " + nm + " classified as " + rr.tag);
      require(check_homomorphism(rr.iso, rot, opt.provider(rr.tag).algebra).ok, "iso not multiplicative");
      ++checked;
    }
  }
  return "C, H, O, S, TO, TS and " + std::to_string(checked) + " grading-preserving rotations classified with verified isomorphisms";
}

/// TO -> S: f1 -> e1, f2 -> e2, f3 -> e3, f4 -> e12, f5 -> -e13, f6 -> -e14, f7 -> -e15.
inline Matrix to_into_s_map(bool flip_f5 = false) {
  Matrix m(16, 8);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 2) = 1;
  m(3, 3) = 1;
  m(12, 4) = 1;
  m(13, 5) = flip_f5 ? 1 : -1;
  m(14, 6) = -1;
  m(15, 7) = -1;
  return m;
}

inline std::string claim_embedding(const VerifyOptions& opt) {
  Algebra to = opt.provider("TO").algebra;
  Algebra s = opt.provider("S").algebra;
  HomomorphismCheck good = check_homomorphism(to_into_s_map(), to, s);
  require(good.ok, "embedding fails: " + good.reason);
  HomomorphismCheck bad = check_homomorphism(to_into_s_map(true), to, s);
  require(!bad.ok && bad.violated_pair.has_value(), "sign-flipped map was accepted");
  return "embedding verified; flipped map fails at " + bad.reason;
}

inline std::string claim_subalgebras(const VerifyOptions& opt) {
  Algebra ts = opt.provider("TS").algebra;
  std::vector<Vector> span;
  for (const char* e : {"1", "f1 + f14", "f3 - f12", "f6 - f9", "f7 - f8"}) span.push_back(parse_element(e, ts));
  Subspace closed = generated_subalgebra(ts, span, true);
  if (closed.dim() != 5) {
    std::vector<Vector> variant;
    for (const char* e : {"1", "f1 + f14", "f3 + f12", "f6 - f9", "f7 - f8"}) variant.push_back(parse_element(e, ts));
    std::size_t d = generated_subalgebra(ts, variant, true).dim();
    require(false, "span{1, f1 + f14, f3 - f12, f6 - f9, f7 - f8} closes to dimension " + std::to_string(closed.dim()) +
                       " in TS; with f3 + f12 in place of f3 - f12 it closes to dimension " + std::to_string(d));
  }
  Algebra o = opt.provider("O").algebra;
  Subspace q = generated_subalgebra(o, {o.basis(1), o.basis(2)}, true);
  require(q.dim() == 4, "{1, e1, e2} generates dimension " + std::to_string(q.dim()) + " in O");
  return "TS span closed in dimension 5; <1, e1, e2> in O has dimension 4";
}

inline std::string claim_3d(const VerifyOptions&) {
  std::vector<Rational> grid;
  for (int k = 0; k < 10; ++k) grid.push_back(ratio(k, 3));
  std::vector<CanonicalForm3> forms;
  for (const auto& t : grid)
    for (const auto& s : grid) {
      CanonicalForm3 c = canonical_3d(build_A_ts(t, s));
      require(c.t_exact && c.s_exact && *c.t_exact == t && *c.s_exact == s,
              "round trip fails at (" + to_string(t) + ", " + to_string(s) + ")");
      forms.push_back(c);
    }
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j) require(!iso_3d(forms[i], forms[j], 0), "distinct grid points have equal canonical forms");
  // Raw (t, z) with t < 0 and |z| = 5k/5: z = (3k/5, 4k/5).
  for (int k = 1; k <= 5; ++k) {
    Rational t = ratio(-k, 2);
    CanonicalForm3 c = canonical_3d(build_A_tz(t, ratio(3 * k, 5), ratio(4 * k, 5)));
    require(c.t_exact && c.s_exact && *c.t_exact == -t && *c.s_exact == k, "negative-t raw input not mapped to (|t|, |z|)");
  }
  return "100 grid points round-trip exactly and are pairwise non-isomorphic; 5 negative-t raw inputs map to (|t|, |z|)";
}

inline std::string claim_4d(const VerifyOptions& opt) {
  Rng rng(opt.seed + 10);
  const double tol = 1e-9;
  std::size_t non_division = 0, division = 0;
  for (int k = 0; k < 20; ++k) {
    Params4Exact p = random_params4(rng);
    if (k % 4 == 0) {
      // Skew part only, plus a definite diagonal.
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) p.T(j, i) = -p.T(i, j);
        p.T(i, i) = ratio(static_cast<long>(i) + 1, 2);
      }
    }
    ExtractedParams4 e = extract_Tu(build_A_Tu(p));
    require(e.exact && e.exact->T == p.T && e.exact->u == p.u, "extract_Tu(build_A_Tu(T, u)) != (T, u)");
    Matrix q = random_orthogonal(rng, 3);
    if (k % 2 == 1)
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) q(i, j) = -q(i, j);
    Params4Exact moved = transport(p, q);
    require(equiv_4d(to_double(p), to_double(moved), tol).equivalent, "orbit pair not recognized as equivalent");
    Params4 flipped = to_double(p);
    flipped.T = -flipped.T;
    require(equiv_4d(to_double(p), flipped, tol).equivalent, "(T, u) and (-T, u) not recognized as equivalent");
    GeometricType g1 = geometric_type(to_double(p).T, tol), g2 = geometric_type(to_double(moved).T, tol);
    require(g1.kind == g2.kind && g1.rank == g2.rank, "geometric type changes along an orbit");
    Division4Result d = is_division_4d(p);
    require(d.division == (g1.kind == GeometricKind::Ellipsoid), "division verdict disagrees with the eigenvalue sign pattern");
    if (d.division) ++division;
    if (!d.division) {
      ++non_division;
      if (d.pair) {
        require(is_zero(build_A_Tu(p).multiply(d.pair->first, d.pair->second)), "zero-divisor pair does not multiply to 0");
      } else {
        require(d.product_norm < 1e-8, "approximate zero-divisor pair has large product");
      }
    }
  }
  std::size_t separated = 0;
  while (separated < 20) {
    Params4Exact a = random_params4(rng), b = random_params4(rng);
    Eigen::Vector3d ea = detail::sym_eigen(0.5 * (to_double(a).T + to_double(a).T.transpose())).values;
    Eigen::Vector3d eb = detail::sym_eigen(0.5 * (to_double(b).T + to_double(b).T.transpose())).values;
    Eigen::Vector3d eneg(-ea(2), -ea(1), -ea(0));
    if ((ea - eb).cwiseAbs().maxCoeff() < 1e-3 || (eneg - eb).cwiseAbs().maxCoeff() < 1e-3) continue;
    require(!equiv_4d(to_double(a), to_double(b), tol).equivalent, "eigenvalue-separated pair reported equivalent");
    ++separated;
  }
  return "20 exact round trips and orbit pairs, 20 separated pairs rejected, " + std::to_string(division) + " division samples, " +
         std::to_string(non_division) + " non-division samples with verified zero divisors";
}

inline std::string claim_properties(const VerifyOptions& opt) {
  for (const char* name : {"R", "C", "H", "O"}) {
    Verdict v = is_alternative(opt.provider(name).algebra);
    require(v.holds, std::string(name) + " not alternative: " + v.reason);
  }
  std::string witnesses;
  for (const char* name : {"S", "TO", "TS", "A5"}) {
    Verdict v = is_alternative(opt.provider(name).algebra);
    require(!v.holds && !v.witness.empty(), std::string(name) + " reported alternative");
    if (witnesses.empty()) witnesses = std::string(name) + ": " + v.reason;
  }
  for (const char* name : {"R", "C", "H", "O", "TO", "S", "TS"}) {
    NamedAlgebra na = opt.provider(name);
    Verdict v = is_super_alternative(na.algebra, *na.grading);
    require(v.holds, std::string(name) + " not super-alternative: " + v.reason);
  }
  for (const char* name : {"R", "C", "H", "O", "S", "TO", "TS", "A5", "J3", "J4", "J5", "J6"}) {
    LocallyComplexVerdict lc = is_locally_complex(opt.provider(name).algebra);
    require(lc.holds, std::string(name) + " not locally complex: " + lc.reason);
  }
  for (int t = 0; t <= 2; ++t)
    for (int s = 0; s <= 2; ++s) {
      Algebra a = build_A_ts(ratio(t, 2), ratio(s, 3));
      require(is_locally_complex(a).holds, "A_{t,s} not locally complex");
      require(is_nicely_normed(a).holds == (t == 0), "nicely normed verdict wrong for A_{t,s}");
    }
  Rng rng(opt.seed + 11);
  for (int k = 0; k < 6; ++k) {
    Params4Exact p = detail::random_params4(rng);
    if (k % 2 == 0) p.u = zero_vector(3);
    Algebra a = build_A_Tu(p);
    require(is_locally_complex(a).holds, "A_{T,u} not locally complex");
    require(is_nicely_normed(a).holds == is_zero(p.u), "nicely normed verdict wrong for A_{T,u}");
  }
  for (int n = 3; n <= 6; ++n) {
    CommutativeVerdict c = is_commutative_Jn(jordan_algebra(static_cast<std::size_t>(n)));
    require(c.holds && c.iso.has_value(), "J_" + std::to_string(n) + " not detected as commutative");
  }
  require(!is_commutative_Jn(opt.provider("H").algebra).holds, "H reported commutative");
  return "alternative, super-alternative, locally complex, nicely normed and J_n verdicts as expected; " + witnesses;
}

inline std::string claim_annihilator_law(const VerifyOptions& opt) {
  Algebra a = cayley_dickson_algebra(5).algebra;
  Rng rng(opt.seed + 12);
  std::uniform_int_distribution<std::size_t> idx(0, 31);
  std::map<std::size_t, std::size_t> histogram;
  for (int k = 0; k < 200; ++k) {
    std::size_t i = idx(rng), j = idx(rng);
    while (j == i) j = idx(rng);
    Vector v = a.basis(i);
    v[j] = (rng() & 1) ? 1 : -1;
    std::size_t d = annihilator(a, v).dim();
    require(d % 4 == 0, "dim Ann = " + std::to_string(d) + " for an element of A_5");
    ++histogram[d];
  }
  std::string summary;
  for (auto [d, count] : histogram) summary += (summary.empty() ? "" : ", ") + std::string("dim ") + std::to_string(d) + " x" + std::to_string(count);
  return "200 elements of A_5: " + summary;
}

}  // namespace detail

struct ClaimSpec {
  int id;
  const char* name;
  const char* anchor;
  std::string (*run)(const VerifyOptions&);
};

inline const std::vector<ClaimSpec>& claim_specs() {
  static const std::vector<ClaimSpec> specs = {
      {1, "table-reproduction", "Cayley-Dickson doubling reproduces the octonion and sedenion tables", detail::claim_tables},
      {2, "moufang", "(xy)(zx) = (x(yz))x on basis triples of O, not of S", detail::claim_moufang},
      {3, "recognizers", "alternative locally complex algebras are R, C, H or O", detail::claim_recognizers},
      {4, "alter-scalars", "alter-scalars of S are multiples of e8; none in TO, TS", detail::claim_alter_scalars},
      {5, "zero-divisors-annihilators", "annihilator dimensions in TO, TS and S", detail::claim_annihilators},
      {6, "super-alternative-classification", "super-alternative locally complex algebras are R, C, H, O, TO, S or TS", detail::claim_super_classification},
      {7, "embedding", "TO embeds into S", detail::claim_embedding},
      {8, "subalgebras", "5-dimensional subalgebra of TS; quaternion subalgebra of O", detail::claim_subalgebras},
      {9, "classification-3d", "3-dimensional locally complex algebras are classified by (t, s)", detail::claim_3d},
      {10, "classification-4d", "4-dimensional locally complex algebras are classified by (T, u) up to signed conjugation", detail::claim_4d},
      {11, "property-suite", "property checkers on the named and low-dimensional algebras", detail::claim_properties},
      {12, "annihilator-law", "annihilator dimensions in A_5 are multiples of 4", detail::claim_annihilator_law},
  };
  return specs;
}

inline ClaimResult run_claim(const ClaimSpec& spec, const VerifyOptions& opt) {
  ClaimResult r{spec.id, spec.name, spec.anchor, false, 0, ""};
  const auto start = std::chrono::steady_clock::now();
  try {
    r.witness = spec.run(opt);
    r.passed = true;
  } catch (const std::exception& e) {
    r.witness = e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Runs every claim in id order.
inline VerificationReport verify_all(const VerifyOptions& opt = {}) {
  VerificationReport report;
  for (const auto& spec : claim_specs()) report.claims.push_back(run_claim(spec, opt));
  return report;
}

inline json report_json(const VerificationReport& r) {
  json claims = json::array();
  for (const auto& c : r.claims) {
    claims.push_back({{"id", c.id},
                      {"name", c.name},
                      {"anchor", c.anchor},
                      {"status", c.passed ? "pass" : "fail"},
                      {"elapsed_ms", c.elapsed_ms},
                      {"witness", c.witness}});
  }
  return {{"claims", claims}, {"all_passed", r.all_passed()}};
}

}  // namespace lcalg
