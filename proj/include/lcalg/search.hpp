#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "lcalg/lowdim.hpp"
#include "lcalg/random.hpp"
#include "lcalg/structure.hpp"

namespace lcalg {

struct ZeroDivisorOptions {
  std::size_t budget = 10000;  // random trials after the structured families
  std::uint64_t seed = default_seed;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct ZeroDivisorResult {
  enum class Status { Found, NoneFound, Exhausted };
  Status status = Status::Exhausted;
  std::optional<Vector> x, y;  // xy = 0, both nonzero
  bool definitive = false;     // NoneFound backed by a proof
  std::string reason;
  std::size_t random_trials = 0;
};

inline const char* to_string(ZeroDivisorResult::Status s) {
  switch (s) {
    case ZeroDivisorResult::Status::Found: return "found";
    case ZeroDivisorResult::Status::NoneFound: return "none_found";
    case ZeroDivisorResult::Status::Exhausted: return "exhausted";
  }
  return "?";
}

namespace detail {

/// e_i, then e_i + e_j and e_i - e_j for i < j.
inline std::vector<Vector> signed_pair_family(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int s : {1, -1}) {
        Vector v = unit_vector(n, i);
        v[j] = s;
        out.push_back(std::move(v));
      }
  return out;
}

/// A partner y with xy = 0, preferring members of `family`.
inline std::optional<Vector> annihilating_partner(const Algebra& a, const Vector& x, const std::vector<Vector>& family) {
  Subspace ann = annihilator(a, x);
  if (ann.dim() == 0) return std::nullopt;
  for (const auto& y : family)
    if (ann.contains(y)) return y;
  return ann.basis_vectors().front();
}

}  // namespace detail

/// Zero-divisor search: proofs of absence where available, then the
/// structured family e_i, e_i +- e_j, then seeded random elements.
inline ZeroDivisorResult zero_divisor_search(const Algebra& a, const ZeroDivisorOptions& opt = {}) {
  ZeroDivisorResult out;
  const std::size_t n = a.dim();
  if (a.is_unital()) {
    LocallyComplexVerdict lc = is_locally_complex(a);
    if (lc.holds && n <= 2) {
      out.status = ZeroDivisorResult::Status::NoneFound;
      out.definitive = true;
      out.reason = "locally complex of dimension <= 2 (R or C)";
      return out;
    }
    if (lc.holds && is_alternative(a).holds) {
      out.status = ZeroDivisorResult::Status::NoneFound;
      out.definitive = true;
      out.reason = "alternative and locally complex, hence a division algebra";
      return out;
    }
    if (lc.holds && n == 4) {
      ExtractedParams4 p = extract_Tu(a);
      if (p.exact) {
        Division4Result d = is_division_4d(*p.exact);
        if (d.division) {
          out.status = ZeroDivisorResult::Status::NoneFound;
          out.definitive = true;
          out.reason = "4-dimensional with definite symmetric part of T";
          return out;
        }
        if (d.pair) {
          out.status = ZeroDivisorResult::Status::Found;
          out.x = p.basis.apply(d.pair->first);
          out.y = p.basis.apply(d.pair->second);
          out.reason = "4-dimensional with indefinite symmetric part of T";
          return out;
        }
      }
    }
  }
  const std::vector<Vector> family = detail::signed_pair_family(n);
  for (const auto& x : family) {
    if (auto y = detail::annihilating_partner(a, x, family)) {
      out.status = ZeroDivisorResult::Status::Found;
      out.x = x;
      out.y = *y;
      out.reason = "structured family";
      return out;
    }
  }
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, opt.budget)));
  // Trial k uses its own generator seeded from (seed, k); the lowest successful k wins.
  std::atomic<std::size_t> best{opt.budget};
  auto trial_vector = [&](std::size_t k) {
    Rng rng(opt.seed ^ (0x9E3779B97F4A7C15ull * (k + 1)));
    return random_vector(rng, n, 3, 2);
  };
  auto worker = [&](unsigned id) {
    for (std::size_t k = id; k < opt.budget; k += threads) {
      if (k >= best.load()) return;
      Vector x = trial_vector(k);
      if (is_zero(x)) continue;
      if (rank(a.left_mul_matrix(x)) < n) {
        std::size_t cur = best.load();
        while (k < cur && !best.compare_exchange_weak(cur, k)) {
        }
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  for (auto& t : pool) t.join();
  out.random_trials = opt.budget;
  if (best.load() < opt.budget) {
    Vector x = trial_vector(best.load());
    out.status = ZeroDivisorResult::Status::Found;
    out.x = x;
    out.y = annihilator(a, x).basis_vectors().front();
    out.random_trials = best.load() + 1;
    out.reason = "random trial " + std::to_string(best.load());
    return out;
  }
  out.status = ZeroDivisorResult::Status::Exhausted;
  out.reason = "no zero divisor in the structured family or " + std::to_string(opt.budget) + " random trials";
  return out;
}

struct SubalgebraCensus {
  std::map<std::size_t, std::vector<Vector>> generators;  // dimension -> generating set
  std::map<std::size_t, Subspace> spans;
};

/// Closes candidate generator sets (with 1) and records which dimensions
/// occur. Only reports existence; a missing dimension proves nothing.
inline SubalgebraCensus subalgebra_census(const Algebra& a, const std::vector<std::size_t>& targets, std::size_t budget = 200,
                                          const std::vector<std::vector<Vector>>& extra = {}, std::uint64_t seed = default_seed) {
  if (!a.is_unital()) throw PreconditionError("subalgebra census needs a unital algebra");
  SubalgebraCensus out;
  const std::size_t n = a.dim();
  auto done = [&] {
    return std::all_of(targets.begin(), targets.end(), [&](std::size_t d) { return out.generators.count(d) > 0; });
  };
  auto record = [&](const std::vector<Vector>& gens) {
    Subspace s = generated_subalgebra(a, gens, true);
    if (!out.generators.count(s.dim())) {
      out.generators.emplace(s.dim(), gens);
      out.spans.emplace(s.dim(), s);
    }
    return done();
  };
  if (record({})) return out;
  for (const auto& gens : extra)
    if (record(gens)) return out;
  const std::vector<Vector> family = detail::signed_pair_family(n);
  for (const auto& v : family)
    if (record({v})) return out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (record({a.basis(i), a.basis(j)})) return out;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size() && j < i + 2 * n; ++j)
      if (record({family[i], family[j]})) return out;
  Rng rng(seed);
  for (std::size_t k = 0; k < budget; ++k) {
    std::vector<Vector> gens;
    for (std::size_t g = 0; g <= k % 3; ++g) gens.push_back(random_vector(rng, n, 2, 1));
    if (record(gens)) return out;
  }
  return out;
}

}  // namespace lcalg
