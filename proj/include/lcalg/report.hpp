#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lcalg/io.hpp"
#include "lcalg/search.hpp"

namespace lcalg {

enum class Tri { Yes, No, Unknown };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

struct PropertyEntry {
  std::string name;
  Tri value = Tri::Unknown;
  std::string detail;            // reason, certificate summary or "not applicable"
  std::vector<Vector> witness;   // counterexample or certificate elements
};

struct PropertyReport {
  std::vector<PropertyEntry> entries;

  const PropertyEntry* find(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }
};

inline PropertyEntry from_verdict(const std::string& name, const Verdict& v, const std::string& yes_detail) {
  return {name, v.holds ? Tri::Yes : Tri::No, v.holds ? yes_detail : v.reason, v.witness};
}

/// Property names: quadratic, locally_complex, alternative, super_alternative,
/// nicely_normed, commutative, has_zero_divisors. An empty selection means all.
inline PropertyReport property_report(const Algebra& a, const std::optional<Grading>& g = std::nullopt,
                                      std::vector<std::string> selection = {}, const ZeroDivisorOptions& zd = {}) {
  auto wanted = [&](const std::string& name) {
    return selection.empty() || std::find(selection.begin(), selection.end(), name) != selection.end();
  };
  PropertyReport r;
  const bool unital = a.is_unital();
  auto not_applicable = [&](const std::string& name, const std::string& why) { r.entries.push_back({name, Tri::Unknown, why, {}}); };
  if (wanted("quadratic")) {
    if (unital) {
      r.entries.push_back(from_verdict("quadratic", is_quadratic(a), "all cubic coefficients of 1 ^ x ^ x^2 vanish"));
    } else {
      not_applicable("quadratic", "algebra is not unital");
    }
  }
  std::optional<LocallyComplexVerdict> lc;
  if (unital) lc = is_locally_complex(a);
  if (wanted("locally_complex")) {
    if (lc) {
      PropertyEntry e{"locally_complex", lc->holds ? Tri::Yes : Tri::No, lc->reason, lc->witness};
      if (lc->holds) {
        e.detail = lc->certificate->normalized ? "anticommuting basis with e_i^2 = -1" : "anticommuting basis with e_i^2 = -n_i (no rational normalisation)";
        e.witness = lc->certificate->basis;
      }
      r.entries.push_back(std::move(e));
    } else {
      not_applicable("locally_complex", "algebra is not unital");
    }
  }
  if (wanted("alternative")) r.entries.push_back(from_verdict("alternative", is_alternative(a), "both laws hold on the polarised family"));
  if (wanted("super_alternative")) {
    if (g) {
      r.entries.push_back(from_verdict("super_alternative", is_super_alternative(a, *g), "laws hold on the polarised homogeneous family"));
    } else {
      not_applicable("super_alternative", "no grading given");
    }
  }
  if (wanted("nicely_normed")) {
    if (lc) {
      r.entries.push_back(from_verdict("nicely_normed", is_nicely_normed(a), "e_i e_j has no scalar part for i != j"));
    } else {
      not_applicable("nicely_normed", "algebra is not unital");
    }
  }
  if (wanted("commutative")) {
    PropertyEntry e{"commutative", Tri::Yes, "all basis pairs commute", {}};
    for (std::size_t i = 0; i < a.dim() && e.value == Tri::Yes; ++i)
      for (std::size_t j = i + 1; j < a.dim(); ++j) {
        if (a.multiply(a.basis(i), a.basis(j)) != a.multiply(a.basis(j), a.basis(i))) {
          e.value = Tri::No;
          e.detail = a.label(i) + " " + a.label(j) + " != " + a.label(j) + " " + a.label(i);
          e.witness = {a.basis(i), a.basis(j)};
          break;
        }
      }
    if (e.value == Tri::Yes && lc && lc->holds && a.dim() >= 2) e.detail += "; locally complex, so isomorphic to J_" + std::to_string(a.dim());
    r.entries.push_back(std::move(e));
  }
  if (wanted("has_zero_divisors")) {
    ZeroDivisorResult z = zero_divisor_search(a, zd);
    PropertyEntry e{"has_zero_divisors", Tri::Unknown, z.reason, {}};
    if (z.status == ZeroDivisorResult::Status::Found) {
      e.value = Tri::Yes;
      e.witness = {*z.x, *z.y};
    } else if (z.definitive) {
      e.value = Tri::No;
    }
    r.entries.push_back(std::move(e));
  }
  return r;
}

inline json report_json(const Algebra& a, const PropertyReport& r) {
  json out = json::object();
  for (const auto& e : r.entries) {
    json w = json::array();
    for (const auto& v : e.witness) w.push_back(format_element(a, v));
    out[e.name] = {{"value", to_string(e.value)}, {"detail", e.detail}, {"witness", w}};
  }
  return out;
}

}  // namespace lcalg
