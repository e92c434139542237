#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lcalg/properties.hpp"

namespace lcalg {

// Three- and four-dimensional locally complex algebras.
//
// A_{t,s}: basis 1, e1, e2 with e1 e2 = t + s e1.
// A_{T,u}: basis 1, e1, e2, e3 with (l,x)(m,y) = (lm - <x,y> + (x,y,u), ly + mx + T(x cross y)).

/// e1 e2 = t + z1 e1 + z2 e2, e_i^2 = -1 (the raw form of a 3-dim locally complex algebra).
inline Algebra build_A_tz(const Rational& t, const Rational& z1, const Rational& z2) {
  std::vector<Rational> c(27, Rational(0));
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& { return c[(i * 3 + j) * 3 + k]; };
  for (std::size_t i = 0; i < 3; ++i) {
    at(0, i, i) = 1;
    at(i, 0, i) = 1;
  }
  at(1, 1, 0) = -1;
  at(2, 2, 0) = -1;
  at(1, 2, 0) = t;
  at(1, 2, 1) = z1;
  at(1, 2, 2) = z2;
  at(2, 1, 0) = -t;
  at(2, 1, 1) = -z1;
  at(2, 1, 2) = -z2;
  return Algebra(3, std::move(c), 0);
}

inline Algebra build_A_ts(const Rational& t, const Rational& s) { return build_A_tz(t, s, Rational(0)); }

/// Canonical (t, s) of a 3-dim locally complex algebra. The squares are
/// exact; t and s themselves are exact when those squares are rational squares.
struct CanonicalForm3 {
  Rational t_squared;
  Rational s_squared;
  double t = 0;
  double s = 0;
  std::optional<Rational> t_exact;
  std::optional<Rational> s_exact;
};

inline CanonicalForm3 canonical_3d(const Algebra& a) {
  if (a.dim() != 3) throw DimensionError("canonical_3d needs a 3-dimensional algebra");
  LocallyComplexVerdict lc = is_locally_complex(a);
  if (!lc.holds) throw PreconditionError("algebra is not locally complex: " + lc.reason);
  const auto& cert = *lc.certificate;
  auto coords = solve(cert.change_of_basis, a.multiply(cert.basis[1], cert.basis[2]));
  if (!coords) throw InternalError("certificate basis is singular");
  const Rational& n1 = cert.square_norms[0];
  const Rational& n2 = cert.square_norms[1];
  // In the normalised basis e_i / sqrt(n_i): t = c0 / sqrt(n1 n2), z = (c1 / sqrt(n2), c2 / sqrt(n1)).
  CanonicalForm3 out;
  out.t_squared = (*coords)[0] * (*coords)[0] / (n1 * n2);
  out.s_squared = (*coords)[1] * (*coords)[1] / n2 + (*coords)[2] * (*coords)[2] / n1;
  out.t_exact = rational_sqrt(out.t_squared);
  out.s_exact = rational_sqrt(out.s_squared);
  out.t = out.t_exact ? out.t_exact->get_d() : std::sqrt(out.t_squared.get_d());
  out.s = out.s_exact ? out.s_exact->get_d() : std::sqrt(out.s_squared.get_d());
  return out;
}

inline bool iso_3d(const CanonicalForm3& a, const CanonicalForm3& b, double tol = 1e-9) {
  if (tol == 0) return a.t_squared == b.t_squared && a.s_squared == b.s_squared;
  return std::abs(a.t - b.t) <= tol && std::abs(a.s - b.s) <= tol;
}

/// Exact (T, u) with T as a 3x3 rational matrix.
struct Params4Exact {
  Matrix T = Matrix(3, 3);
  Vector u = zero_vector(3);
};

/// Floating (T, u).
struct Params4 {
  Eigen::Matrix3d T = Eigen::Matrix3d::Zero();
  Eigen::Vector3d u = Eigen::Vector3d::Zero();
};

inline Params4 to_double(const Params4Exact& p) {
  Params4 out;
  for (int i = 0; i < 3; ++i) {
    out.u(i) = p.u[i].get_d();
    for (int j = 0; j < 3; ++j) out.T(i, j) = p.T(i, j).get_d();
  }
  return out;
}

namespace detail {

/// (a, b, c) cyclic with e_a cross e_b = e_c, zero-based.
inline constexpr std::array<std::array<std::size_t, 3>, 3> cyclic = {{{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}};

}  // namespace detail

/// e_a e_b = -delta_ab + sum_c eps_abc (u_c + T(:, c)).
inline Algebra build_A_Tu(const Params4Exact& p) {
  if (p.T.rows() != 3 || p.T.cols() != 3 || p.u.size() != 3) throw DimensionError("T must be 3x3 and u a 3-vector");
  std::vector<Rational> c(64, Rational(0));
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& { return c[(i * 4 + j) * 4 + k]; };
  for (std::size_t i = 0; i < 4; ++i) {
    at(0, i, i) = 1;
    at(i, 0, i) = 1;
  }
  for (std::size_t i = 1; i < 4; ++i) at(i, i, 0) = -1;
  for (const auto& [a, b, cc] : detail::cyclic) {
    for (int sign : {1, -1}) {
      std::size_t x = sign == 1 ? a : b;
      std::size_t y = sign == 1 ? b : a;
      at(x + 1, y + 1, 0) += sign * p.u[cc];
      for (std::size_t r = 0; r < 3; ++r) at(x + 1, y + 1, r + 1) += sign * p.T(r, cc);
    }
  }
  return Algebra(4, std::move(c), 0);
}

/// (T, u) read off an anticommuting basis of a 4-dim locally complex
/// algebra, together with that basis (columns, input coordinates).
struct ExtractedParams4 {
  std::optional<Params4Exact> exact;  // when the basis is normalised over Q
  Params4 approx;
  Matrix basis;
};

inline ExtractedParams4 extract_Tu(const Algebra& a) {
  if (a.dim() != 4) throw DimensionError("extract_Tu needs a 4-dimensional algebra");
  LocallyComplexVerdict lc = is_locally_complex(a);
  if (!lc.holds) throw PreconditionError("algebra is not locally complex: " + lc.reason);
  const auto& cert = *lc.certificate;
  ExtractedParams4 out;
  out.basis = cert.change_of_basis;
  std::array<double, 3> scale{};
  for (std::size_t i = 0; i < 3; ++i) scale[i] = std::sqrt(cert.square_norms[i].get_d());
  Params4Exact raw;
  for (const auto& [x, y, c] : detail::cyclic) {
    auto coords = solve(cert.change_of_basis, a.multiply(cert.basis[x + 1], cert.basis[y + 1]));
    if (!coords) throw InternalError("certificate basis is singular");
    raw.u[c] = (*coords)[0];
    for (std::size_t r = 0; r < 3; ++r) raw.T(r, c) = (*coords)[r + 1];
    // Normalised basis f_i = e_i / scale_i: f_x f_y = (e_x e_y) / (scale_x scale_y).
    const double denom = scale[x] * scale[y];
    out.approx.u(static_cast<int>(c)) = (*coords)[0].get_d() / denom;
    for (std::size_t r = 0; r < 3; ++r) out.approx.T(static_cast<int>(r), static_cast<int>(c)) = (*coords)[r + 1].get_d() * scale[r] / denom;
  }
  if (cert.normalized) out.exact = std::move(raw);
  return out;
}

// ---- spectral layer ----

inline Eigen::Matrix3d skew_from(const Eigen::Vector3d& c) {
  Eigen::Matrix3d r;
  r << 0, c(2), -c(1), -c(2), 0, c(0), c(1), -c(0), 0;
  return r;
}

/// c with R = R_c for a skew-symmetric R.
inline Eigen::Vector3d skew_vector(const Eigen::Matrix3d& r) { return {r(1, 2), r(2, 0), r(0, 1)}; }

inline double params_scale(const Params4& p) { return std::max({1.0, p.T.norm(), p.u.norm()}); }

struct Equiv4Result {
  bool equivalent = false;
  bool borderline = false;
  std::optional<Eigen::Matrix3d> Q;  // T' = det(Q) Q T Q^T, u' = det(Q) Q u
  std::string reason;
};

/// Residual of the witness Q against the defining relation.
inline double equiv_residual(const Params4& a, const Params4& b, const Eigen::Matrix3d& q) {
  const double d = q.determinant() > 0 ? 1.0 : -1.0;
  double r = (b.T - d * q * a.T * q.transpose()).norm();
  r = std::max(r, (b.u - d * q * a.u).norm());
  r = std::max(r, (q * q.transpose() - Eigen::Matrix3d::Identity()).norm());
  return r;
}

namespace detail {

struct SymEigen {
  Eigen::Vector3d values;  // descending
  Eigen::Matrix3d vectors;  // columns
};

inline SymEigen sym_eigen(const Eigen::Matrix3d& p) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(p);
  SymEigen out;
  for (int i = 0; i < 3; ++i) {
    out.values(i) = solver.eigenvalues()(2 - i);
    out.vectors.col(i) = solver.eigenvectors().col(2 - i);
  }
  return out;
}

/// Orthonormal frame adapted to the columns of x (in order), with the same
/// Gram-Schmidt steps replayed on y. Returns nullopt when the steps disagree.
inline std::optional<std::pair<Eigen::MatrixXd, Eigen::MatrixXd>> matched_frames(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y,
                                                                                 double thr) {
  const int k = static_cast<int>(x.rows());
  std::vector<Eigen::VectorXd> fx, fy;
  for (int col = 0; col < x.cols(); ++col) {
    Eigen::VectorXd rx = x.col(col), ry = y.col(col);
    for (std::size_t i = 0; i < fx.size(); ++i) {
      double cx = fx[i].dot(rx), cy = fy[i].dot(ry);
      if (std::abs(cx - cy) > thr) return std::nullopt;
      rx -= cx * fx[i];
      ry -= cy * fy[i];
    }
    const double nx = rx.norm(), ny = ry.norm();
    if (std::abs(nx - ny) > thr) return std::nullopt;
    if (nx > thr && static_cast<int>(fx.size()) < k) {
      fx.push_back(rx / nx);
      fy.push_back(ry / ny);
    }
  }
  auto complete = [k](std::vector<Eigen::VectorXd> f) {
    for (int e = 0; e < k && static_cast<int>(f.size()) < k; ++e) {
      Eigen::VectorXd v = Eigen::VectorXd::Unit(k, e);
      for (const auto& g : f) v -= g.dot(v) * g;
      if (v.norm() > 1e-6) f.push_back(v.normalized());
    }
    Eigen::MatrixXd m(k, k);
    for (int i = 0; i < k; ++i) m.col(i) = f[static_cast<std::size_t>(i)];
    return m;
  };
  return std::make_pair(complete(fx), complete(fy));
}

}  // namespace detail

/// Decides (T, u) ~ (T', u'): some orthogonal Q with T' = det(Q) Q T Q^T and
/// u' = det(Q) Q u. Writing Q = sigma Q0 with Q0 in SO(3), this reads
/// P' = sigma Q0 P Q0^T, c' = sigma Q0 c, u' = Q0 u for T = P + R_c.
inline Equiv4Result equiv_4d(const Params4& a, const Params4& b, double tol = 1e-9) {
  Equiv4Result out;
  const double scale = std::max(params_scale(a), params_scale(b));
  const double loose = std::sqrt(tol) * scale;
  const Eigen::Matrix3d pa = 0.5 * (a.T + a.T.transpose()), pb = 0.5 * (b.T + b.T.transpose());
  const Eigen::Vector3d ca = skew_vector(0.5 * (a.T - a.T.transpose())), cb = skew_vector(0.5 * (b.T - b.T.transpose()));
  if (std::abs(a.u.norm() - b.u.norm()) > loose || std::abs(ca.norm() - cb.norm()) > loose) {
    out.reason = "norms of u or of the skew part differ";
    return out;
  }
  double best = std::numeric_limits<double>::infinity();
  for (int sigma : {1, -1}) {
    detail::SymEigen ea = detail::sym_eigen(sigma * pa), eb = detail::sym_eigen(pb);
    if ((ea.values - eb.values).cwiseAbs().maxCoeff() > loose) continue;
    // Clusters of (near) equal eigenvalues.
    std::vector<std::pair<int, int>> clusters;  // [begin, end)
    for (int i = 0; i < 3;) {
      int j = i + 1;
      while (j < 3 && std::abs(ea.values(j) - ea.values(j - 1)) <= loose) ++j;
      clusters.emplace_back(i, j);
      i = j;
    }
    Eigen::Matrix<double, 3, 2> xa, xb;
    xa.col(0) = ea.vectors.transpose() * (sigma * ca);
    xa.col(1) = ea.vectors.transpose() * a.u;
    xb.col(0) = eb.vectors.transpose() * cb;
    xb.col(1) = eb.vectors.transpose() * b.u;
    // Per cluster: a block D_k with D_k xa_k = xb_k, and whether its determinant can be flipped.
    Eigen::Matrix3d d = Eigen::Matrix3d::Zero();
    bool ok = true;
    std::vector<std::pair<int, int>> flippable;  // (cluster begin, size) where det is free
    for (auto [begin, end] : clusters) {
      const int k = end - begin;
      Eigen::MatrixXd x = xa.block(begin, 0, k, 2), y = xb.block(begin, 0, k, 2);
      auto frames = detail::matched_frames(x, y, loose);
      if (!frames) {
        ok = false;
        break;
      }
      Eigen::MatrixXd block = frames->second * frames->first.transpose();
      d.block(begin, begin, k, k) = block;
      // Rank below k leaves a complement direction whose sign is free.
      Eigen::FullPivLU<Eigen::MatrixXd> lu(x);
      lu.setThreshold(loose / std::max(1.0, x.norm()));
      if (lu.rank() < k) flippable.emplace_back(begin, k);
    }
    if (!ok) continue;
    const double det_target = ea.vectors.determinant() * eb.vectors.determinant();  // det D must equal this
    if (d.determinant() * det_target < 0) {
      if (flippable.empty()) continue;
      // Flip the last frame vector of a flippable cluster (it lies in the complement).
      auto [begin, k] = flippable.front();
      Eigen::MatrixXd x = xa.block(begin, 0, k, 2), y = xb.block(begin, 0, k, 2);
      auto frames = detail::matched_frames(x, y, loose);
      Eigen::MatrixXd fy = frames->second;
      fy.col(k - 1) *= -1;
      d.block(begin, begin, k, k) = fy * frames->first.transpose();
    }
    Eigen::Matrix3d q0 = eb.vectors * d * ea.vectors.transpose();
    Eigen::Matrix3d q = sigma * q0;
    const double res = equiv_residual(a, b, q);
    best = std::min(best, res);
    if (res <= tol * scale) {
      out.equivalent = true;
      out.Q = q;
      out.reason = "witness verified, residual " + std::to_string(res);
      return out;
    }
  }
  if (best <= 10 * tol * scale) out.borderline = true;
  out.reason = best == std::numeric_limits<double>::infinity() ? "invariants differ" : "no witness within tolerance";
  return out;
}

enum class GeometricKind { Ellipsoid, Hyperboloid, EllipticCylinder, HyperbolicCylinder, Rank1, Rank0 };

inline const char* to_string(GeometricKind k) {
  switch (k) {
    case GeometricKind::Ellipsoid: return "ellipsoid";
    case GeometricKind::Hyperboloid: return "hyperboloid";
    case GeometricKind::EllipticCylinder: return "elliptic-cylinder";
    case GeometricKind::HyperbolicCylinder: return "hyperbolic-cylinder";
    case GeometricKind::Rank1: return "rank1";
    case GeometricKind::Rank0: return "rank0";
  }
  return "?";
}

struct GeometricType {
  int rank = 0;
  GeometricKind kind = GeometricKind::Rank0;
  Eigen::Vector3d eigenvalues;  // of the sign-normalised symmetric part, descending
  bool flipped = false;         // T was replaced by -T
};

inline GeometricType geometric_type(const Eigen::Matrix3d& t, double tol = 1e-9) {
  Eigen::Matrix3d p = 0.5 * (t + t.transpose());
  Eigen::Vector3d ev = detail::sym_eigen(p).values;
  int pos = 0, neg = 0;
  for (int i = 0; i < 3; ++i) {
    if (ev(i) > tol) ++pos;
    if (ev(i) < -tol) ++neg;
  }
  GeometricType out;
  if (neg > pos) {
    out.flipped = true;
    std::swap(pos, neg);
    ev = detail::sym_eigen(-p).values;
  }
  out.eigenvalues = ev;
  out.rank = pos + neg;
  switch (out.rank) {
    case 3: out.kind = neg == 0 ? GeometricKind::Ellipsoid : GeometricKind::Hyperboloid; break;
    case 2: out.kind = neg == 0 ? GeometricKind::EllipticCylinder : GeometricKind::HyperbolicCylinder; break;
    case 1: out.kind = GeometricKind::Rank1; break;
    default: out.kind = GeometricKind::Rank0; break;
  }
  return out;
}

struct Division4Result {
  bool division = false;
  bool exact = false;  // verdict and pair are exact
  // Zero-divisor pair in A_{T,u} coordinates (1, e1, e2, e3).
  std::optional<std::pair<Vector, Vector>> pair;
  std::optional<std::pair<Eigen::Vector4d, Eigen::Vector4d>> pair_approx;
  double product_norm = 0;
};

namespace detail {

inline Vector cross(const Vector& x, const Vector& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

/// ((0, w), (m, v - s w)) for isotropic z: w = Tz with m = -1, or any w
/// orthogonal to z with m = 0 when Tz = 0; v = (z x w)/|w|^2, s = -(w, v, u)/|w|^2.
inline std::pair<Vector, Vector> zero_divisor_pair(const Params4Exact& p, const Vector& z) {
  Vector w = p.T.apply(z);
  Rational m = -1;
  if (is_zero(w)) {
    m = 0;
    for (std::size_t i = 0; i < 3 && is_zero(w); ++i) w = cross(z, unit_vector(3, i));
  }
  const Rational ww = dot(w, w);
  Vector v = Rational(1 / ww) * cross(z, w);
  Rational s = -dot(cross(w, v), p.u) / ww;
  Vector y = v;
  axpy(y, -s, w);
  return {{Rational(0), w[0], w[1], w[2]}, {m, y[0], y[1], y[2]}};
}

inline std::optional<Vector> rational_isotropic(const Matrix& p) {
  auto ker = kernel(p);
  if (!ker.empty()) return ker.front();
  for (int bound = 1; bound <= 8; ++bound)
    for (int x = -bound; x <= bound; ++x)
      for (int y = -bound; y <= bound; ++y)
        for (int z = -bound; z <= bound; ++z) {
          if (std::max({std::abs(x), std::abs(y), std::abs(z)}) != bound) continue;
          Vector v{Rational(x), Rational(y), Rational(z)};
          if (sgn(dot(v, p.apply(v))) == 0) return v;
        }
  return std::nullopt;
}

inline Eigen::Vector4d product_approx(const Params4& p, const Eigen::Vector4d& a, const Eigen::Vector4d& b) {
  Eigen::Vector3d x = a.tail<3>(), y = b.tail<3>();
  Eigen::Vector3d xy = x.cross(y);
  Eigen::Vector4d out;
  out(0) = a(0) * b(0) - x.dot(y) + xy.dot(p.u);
  out.tail<3>() = a(0) * y + b(0) * x + p.T * xy;
  return out;
}

inline std::pair<Eigen::Vector4d, Eigen::Vector4d> zero_divisor_pair_approx(const Params4& p, const Eigen::Vector3d& z) {
  Eigen::Vector3d w = p.T * z;
  double m = -1;
  if (w.norm() < 1e-12 * std::max(1.0, p.T.norm())) {
    m = 0;
    Eigen::Vector3d other = std::abs(z(0)) < 0.9 * z.norm() ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
    w = z.cross(other);
  }
  const double ww = w.squaredNorm();
  Eigen::Vector3d v = z.cross(w) / ww;
  const double s = -w.cross(v).dot(p.u) / ww;
  Eigen::Vector4d x, y;
  x << 0, w;
  y << m, v - s * w;
  return {x, y};
}

}  // namespace detail

/// A_{T,u} is a division algebra iff <Tx, x> is definite. Exact verdict for
/// rational input; the zero-divisor pair is exact whenever a rational
/// isotropic vector is found, otherwise built from eigenvectors.
inline Division4Result is_division_4d(const Params4Exact& p) {
  Matrix sym(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) sym(i, j) = (p.T(i, j) + p.T(j, i)) / 2;
  Matrix neg(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) neg(i, j) = -sym(i, j);
  Division4Result out;
  out.exact = true;
  if (is_positive_definite(sym) || is_positive_definite(neg)) {
    out.division = true;
    return out;
  }
  if (auto z = detail::rational_isotropic(sym)) {
    out.pair = detail::zero_divisor_pair(p, *z);
    Algebra a = build_A_Tu(p);
    if (!is_zero(a.multiply(out.pair->first, out.pair->second))) throw InternalError("zero-divisor construction failed");
    return out;
  }
  Params4 d = to_double(p);
  detail::SymEigen e = detail::sym_eigen(0.5 * (d.T + d.T.transpose()));
  const double lp = e.values(0), ln = e.values(2);
  Eigen::Vector3d z = std::sqrt(std::max(0.0, -ln)) * e.vectors.col(0) + std::sqrt(std::max(0.0, lp)) * e.vectors.col(2);
  z.normalize();
  out.pair_approx = detail::zero_divisor_pair_approx(d, z);
  out.product_norm = detail::product_approx(d, out.pair_approx->first, out.pair_approx->second).norm();
  out.exact = false;
  if (out.product_norm >= 1e-8) throw InternalError("zero-divisor construction failed numerically");
  return out;
}

inline Division4Result is_division_4d(const Params4& p, double tol = 1e-9) {
  detail::SymEigen e = detail::sym_eigen(0.5 * (p.T + p.T.transpose()));
  Division4Result out;
  const double lp = e.values(0), lm = e.values(1), ln = e.values(2);
  if ((ln > tol) || (lp < -tol)) {
    out.division = true;
    return out;
  }
  Eigen::Vector3d z;
  if (std::abs(lm) <= tol) {
    z = e.vectors.col(1);
  } else if (std::abs(ln) <= tol) {
    z = e.vectors.col(2);
  } else if (std::abs(lp) <= tol) {
    z = e.vectors.col(0);
  } else {
    z = std::sqrt(-ln) * e.vectors.col(0) + std::sqrt(lp) * e.vectors.col(2);
    z.normalize();
  }
  out.pair_approx = detail::zero_divisor_pair_approx(p, z);
  out.product_norm = detail::product_approx(p, out.pair_approx->first, out.pair_approx->second).norm();
  return out;
}

/// Principal-axis hyperboloid configuration (delta, u, c), delta1 >= delta2 > 0 > delta3.
struct HyperboloidConfig {
  Eigen::Vector3d delta;
  Eigen::Vector3d u;
  Eigen::Vector3d c;
  Eigen::Matrix3d Q;  // rotation used, Q P Q^T = diag(delta)
  bool flipped = false;
};

inline Params4 from_config(const HyperboloidConfig& h) {
  Params4 p;
  p.T = Eigen::Matrix3d(h.delta.asDiagonal()) + skew_from(h.c);
  p.u = h.u;
  return p;
}

inline HyperboloidConfig hyperboloid_config(const Params4& p, double tol = 1e-9) {
  GeometricType g = geometric_type(p.T, tol);
  if (g.kind != GeometricKind::Hyperboloid) throw PreconditionError(std::string("algebra is not a hyperboloid algebra (") + to_string(g.kind) + ")");
  Eigen::Matrix3d t = g.flipped ? Eigen::Matrix3d(-p.T) : p.T;
  Eigen::Matrix3d sym = 0.5 * (t + t.transpose());
  Eigen::Matrix3d skew = 0.5 * (t - t.transpose());
  detail::SymEigen e = detail::sym_eigen(sym);
  Eigen::Matrix3d q = e.vectors.transpose();
  if (q.determinant() < 0) q.row(2) *= -1;
  HyperboloidConfig out;
  out.delta = e.values;
  out.c = skew_vector(q * skew * q.transpose());
  out.u = q * p.u;
  out.Q = q;
  out.flipped = g.flipped;
  return out;
}

/// The symmetry group of a non-circular hyperboloid: the identity and the
/// three diagonal matrices with two entries -1.
inline std::array<Eigen::Matrix3d, 4> hyperboloid_symmetries() {
  std::array<Eigen::Matrix3d, 4> out;
  const double signs[4][3] = {{1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}};
  for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(i)] = Eigen::Vector3d(signs[i][0], signs[i][1], signs[i][2]).asDiagonal();
  return out;
}

/// T_d = [[0, d, 0], [-d, 0, 0], [0, 0, 0]].
inline Eigen::Matrix3d rank0_T(double d) {
  Eigen::Matrix3d t = Eigen::Matrix3d::Zero();
  t(0, 1) = d;
  t(1, 0) = -d;
  return t;
}

/// Equivalence of rank-0 data (d, u) ~ (d', u'): d = d' = 0 and |u| = |u'|, or
/// d = d' > 0, |u| = |u'| and |u_3| = |u'_3|. Any Q fixing the kernel axis e3
/// satisfies Q e3 = e3 with det Q free, so only the size of the e3-component
/// of u is invariant.
inline bool rank0_equiv(double d, const Eigen::Vector3d& u, double d2, const Eigen::Vector3d& u2, double tol = 1e-9) {
  if (d < 0 || d2 < 0) throw PreconditionError("rank-0 parameter d must be nonnegative");
  if (std::abs(d - d2) > tol || std::abs(u.norm() - u2.norm()) > tol) return false;
  if (d <= tol) return true;
  return std::abs(std::abs(u(2)) - std::abs(u2(2))) <= tol;
}

}  // namespace lcalg
