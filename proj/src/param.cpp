#include "krasno/param.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "krasno/error.hpp"

namespace krasno {

const char* to_string(Family f) {
  switch (f) {
    case Family::BoxVol: return "box-vol";
    case Family::BoxSum: return "box-sum";
    case Family::Ball: return "ball";
    case Family::EllAxis: return "ell-axis";
    case Family::EllVol: return "ell-vol";
  }
  return "?";
}

SymEigen jacobi_eigen(const Mat& S, double tol, int max_sweeps) {
  const int n = static_cast<int>(S.rows());
  if (S.cols() != n) throw GeometryError(ErrorCode::InvalidArgument, "jacobi_eigen: matrix not square");
  Mat a = 0.5 * (S + S.transpose());
  Mat v = Mat::Identity(n, n);
  const double scale = std::max(a.norm(), 1e-300);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += 2 * a(p, q) * a(p, q);
    if (std::sqrt(off) <= tol * scale) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int i, int j) { return a(i, i) < a(j, j); });
  SymEigen out{Vec(n), Mat(n, n)};
  for (int i = 0; i < n; ++i) {
    out.values[i] = a(idx[i], idx[i]);
    out.vectors.col(i) = v.col(idx[i]);
  }
  return out;
}

bool is_spd(const Mat& A, double tol) {
  if (A.rows() != A.cols() || A.rows() == 0) return false;
  if ((A - A.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, A.cwiseAbs().maxCoeff())) return false;
  return jacobi_eigen(A).values[0] > tol;
}

PolarDecomposition polar_decompose(const Mat& X) {
  const int d = static_cast<int>(X.rows());
  if (X.cols() != d || d == 0) throw GeometryError(ErrorCode::InvalidArgument, "polar_decompose: matrix not square");
  if (std::abs(X.determinant()) <= 1e-12) throw GeometryError(ErrorCode::DomainViolation, "polar_decompose: matrix near singular");
  auto e = jacobi_eigen(X * X.transpose());
  Vec root = e.values.cwiseMax(0).cwiseSqrt();
  Mat A = e.vectors * root.asDiagonal() * e.vectors.transpose();
  Mat Ainv = e.vectors * root.cwiseInverse().asDiagonal() * e.vectors.transpose();
  // Newton polar steps restore orthogonality lost to cond(X)^2.
  Mat Q = Ainv * X;
  for (int it = 0; it < 8; ++it) {
    const double err = (Q.transpose() * Q - Mat::Identity(d, d)).cwiseAbs().maxCoeff();
    if (err < 1e-15) break;
    Q = 0.5 * (Q + Q.inverse().transpose());
  }
  A = X * Q.transpose();
  A = 0.5 * (A + A.transpose());
  return {A, Q, X};
}

static void require_dim(int d, const Vec& v, Eigen::Index n, const char* what) {
  if (d < 1 || v.size() != n) throw GeometryError(ErrorCode::InvalidArgument, std::string(what) + ": wrong coordinate count");
}

BoxD box_vol_param(int d, const Vec& p) {
  require_dim(d, p, 2 * d - 1, "box_vol_param");
  BoxD b{p.head(d), Vec(d)};
  double prod = 1;
  for (int i = 0; i < d - 1; ++i) {
    const double l = p[d + i];
    if (!(l > 0)) throw GeometryError(ErrorCode::DomainViolation, "box_vol_param: nonpositive length");
    b.lengths[i] = l;
    prod *= l;
  }
  b.lengths[d - 1] = 1 / prod;
  return b;
}

BoxD box_sum_param(int d, const Vec& q, const ParamConfig& cfg) {
  require_dim(d, q, 2 * d, "box_sum_param");
  BoxD b{q.head(d), q.tail(d)};
  if ((b.lengths.array() <= 0).any()) throw GeometryError(ErrorCode::DomainViolation, "box_sum_param: nonpositive length");
  if (std::abs(b.lengths.sum() - 1) > cfg.sum_tol) throw GeometryError(ErrorCode::DomainViolation, "box_sum_param: lengths must sum to 1");
  return b;
}

BallD ball_param(int d, const Vec& y) {
  require_dim(d, y, d, "ball_param");
  return {y, 1.0};
}

EllipsoidD ellipsoid_axis_param(int d, const Vec& a, const Mat& A, const ParamConfig& cfg) {
  require_dim(d, a, d, "ellipsoid_axis_param");
  if (A.rows() != d || !is_spd(A)) throw GeometryError(ErrorCode::DomainViolation, "ellipsoid_axis_param: shape not SPD");
  if (std::abs(A.trace() - cfg.trace) > cfg.trace_tol)
    throw GeometryError(ErrorCode::DomainViolation, "ellipsoid_axis_param: trace off the normalisation");
  return {a, A};
}

EllipsoidD ellipsoid_project_pi(const Vec& a, const Mat& A) {
  const int d = static_cast<int>(A.rows());
  if (a.size() != d || !is_spd(A)) throw GeometryError(ErrorCode::DomainViolation, "ellipsoid_project_pi: shape not SPD");
  // log det from the eigenvalues keeps large d stable.
  const auto e = jacobi_eigen(A);
  double logdet = 0;
  for (int i = 0; i < d; ++i) logdet += std::log(e.values[i]);
  if (std::abs(logdet) < 1e-15) return {a, A};
  Mat S = std::exp(-logdet / d) * A;
  return {a, 0.5 * (S + S.transpose())};
}

Vec sym_pack(const Mat& A) {
  const int d = static_cast<int>(A.rows());
  Vec v(d * (d + 1) / 2);
  int k = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) v[k++] = A(i, j);
  return v;
}

Mat sym_unpack(int d, std::span<const double> v) {
  if (static_cast<int>(v.size()) != d * (d + 1) / 2) throw GeometryError(ErrorCode::InvalidArgument, "sym_unpack: size");
  Mat A(d, d);
  int k = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) A(i, j) = A(j, i) = v[k++];
  return A;
}

int param_size(Family f, int d) {
  switch (f) {
    case Family::BoxVol: return 2 * d - 1;
    case Family::BoxSum: return 2 * d;
    case Family::Ball: return d;
    case Family::EllAxis:
    case Family::EllVol: return d + d * (d + 1) / 2;
  }
  return 0;
}

Body realize(const ParamPoint& p, const ParamConfig& cfg) {
  const int d = p.d;
  if (p.coords.size() != param_size(p.family, d)) throw GeometryError(ErrorCode::InvalidArgument, "realize: coordinate count");
  switch (p.family) {
    case Family::BoxVol: return box_vol_param(d, p.coords);
    case Family::BoxSum: return box_sum_param(d, p.coords, cfg);
    case Family::Ball: return ball_param(d, p.coords);
    case Family::EllAxis:
    case Family::EllVol: {
      const Vec a = p.coords.head(d);
      const Vec tail = p.coords.tail(d * (d + 1) / 2);
      const Mat A = sym_unpack(d, std::span<const double>(tail.data(), tail.size()));
      if (p.family == Family::EllAxis) return ellipsoid_axis_param(d, a, A, cfg);
      return ellipsoid_project_pi(a, A);
    }
  }
  throw GeometryError(ErrorCode::InvalidArgument, "realize: unknown family");
}

ParamPoint combine(const ParamPoint& a, const ParamPoint& b, double lambda) {
  if (a.family != b.family || a.d != b.d) throw GeometryError(ErrorCode::MixedFamilies, "combine: mixed families");
  return {a.family, a.d, lambda * a.coords + (1 - lambda) * b.coords};
}

double support(const BoxD& b, const Vec& u) {
  double s = b.corner.dot(u);
  for (int i = 0; i < b.dim(); ++i) s += std::max(0.0, b.lengths[i] * u[i]);
  return s;
}
double support(const BallD& b, const Vec& u) { return b.center.dot(u) + b.radius * u.norm(); }
double support(const EllipsoidD& e, const Vec& u) { return e.center.dot(u) + (e.shape * u).norm(); }
double support(const Body& b, const Vec& u) {
  return std::visit([&](const auto& x) { return support(x, u); }, b);
}

std::vector<Vec> sample_directions(int d, int count, std::uint64_t seed) {
  std::vector<Vec> out;
  out.reserve(count);
  if (d == 2) {
    for (int i = 0; i < count; ++i) {
      const double t = 2 * std::numbers::pi * i / count;
      Vec u(2);
      u << std::cos(t), std::sin(t);
      out.push_back(u);
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> N;
  while (static_cast<int>(out.size()) < count) {
    Vec u(d);
    for (int i = 0; i < d; ++i) u[i] = N(rng);
    const double n = u.norm();
    if (n < 1e-9) continue;
    out.push_back(u / n);
  }
  return out;
}

double check_param_containment(const ParamPoint& a, const ParamPoint& b, double lambda, int count,
                               const ParamConfig& cfg, std::uint64_t seed) {
  if (!(lambda >= 0 && lambda <= 1)) throw GeometryError(ErrorCode::InvalidArgument, "lambda outside [0,1]");
  const ParamPoint c = combine(a, b, lambda);
  const Body Da = realize(a, cfg), Db = realize(b, cfg), Dc = realize(c, cfg);
  if (count <= 0) count = a.d == 2 ? 720 : 2000;
  double worst = INFINITY;
  for (const auto& u : sample_directions(a.d, count, seed))
    worst = std::min(worst, lambda * support(Da, u) + (1 - lambda) * support(Db, u) - support(Dc, u));
  return worst;
}

static Mat random_spd(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> N;
  std::uniform_real_distribution<double> U(0.1, 2.0);
  Mat G(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) G(i, j) = N(rng);
  Eigen::HouseholderQR<Mat> qr(G);
  Mat Q = qr.householderQ();
  Vec lam(d);
  for (int i = 0; i < d; ++i) lam[i] = U(rng);
  Mat A = Q * lam.asDiagonal() * Q.transpose();
  return 0.5 * (A + A.transpose());
}

ParamPoint random_param(Family f, int d, std::uint64_t seed, const ParamConfig& cfg) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> C(-5, 5), L(0.1, 4);
  ParamPoint p{f, d, Vec(param_size(f, d))};
  for (int i = 0; i < d; ++i) p.coords[i] = C(rng);
  switch (f) {
    case Family::BoxVol:
      for (int i = 0; i < d - 1; ++i) p.coords[d + i] = L(rng);
      break;
    case Family::BoxSum: {
      Vec l(d);
      for (int i = 0; i < d; ++i) l[i] = L(rng);
      l /= l.sum();
      p.coords.tail(d) = l;
      break;
    }
    case Family::Ball: break;
    case Family::EllAxis: {
      Mat A = random_spd(d, rng);
      A *= cfg.trace / A.trace();
      p.coords.tail(d * (d + 1) / 2) = sym_pack(A);
      break;
    }
    case Family::EllVol: {
      const Mat A = ellipsoid_project_pi(Vec::Zero(d), random_spd(d, rng)).shape;
      p.coords.tail(d * (d + 1) / 2) = sym_pack(A);
      break;
    }
  }
  return p;
}

PolytopeNormBall PolytopeNormBall::linf(int d) {
  PolytopeNormBall B;
  for (int i = 0; i < d; ++i)
    for (double s : {1.0, -1.0}) {
      Vec n = Vec::Zero(d);
      n[i] = s;
      B.normals.push_back(n);
      B.offsets.push_back(1);
    }
  return B;
}

PolytopeNormBall PolytopeNormBall::l1(int d) {
  PolytopeNormBall B;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Vec n(d);
    for (int i = 0; i < d; ++i) n[i] = (mask >> i) & 1 ? -1.0 : 1.0;
    B.normals.push_back(n);
    B.offsets.push_back(1);
  }
  return B;
}

void PolytopeNormBall::validate() const {
  if (normals.empty() || normals.size() != offsets.size()) throw GeometryError(ErrorCode::InvalidArgument, "norm ball: no facets");
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (!(offsets[i] > 0)) throw GeometryError(ErrorCode::InvalidArgument, "norm ball: origin not interior");
    bool mirrored = false;
    for (std::size_t j = 0; j < normals.size() && !mirrored; ++j)
      mirrored = (normals[j] + normals[i]).cwiseAbs().maxCoeff() <= 1e-12 && std::abs(offsets[j] - offsets[i]) <= 1e-12;
    if (!mirrored) throw GeometryError(ErrorCode::InvalidArgument, "norm ball: not centrally symmetric");
  }
}

double minkowski_norm(const PolytopeNormBall& B, const Vec& x) {
  if (B.normals.empty()) throw GeometryError(ErrorCode::InvalidArgument, "norm ball: no facets");
  double r = 0;
  for (std::size_t i = 0; i < B.normals.size(); ++i) r = std::max(r, B.normals[i].dot(x) / B.offsets[i]);
  return r;
}

double minkowski_norm(const EllipsoidD& B, const Vec& x) {
  Eigen::LDLT<Mat> f(B.shape);
  if (f.info() != Eigen::Success || std::abs(B.shape.determinant()) < 1e-300)
    throw GeometryError(ErrorCode::DomainViolation, "norm ball: degenerate ellipsoid");
  return f.solve(x).norm();
}

double v_width(std::span<const Vec> points, const Vec& v) {
  if (points.empty()) throw GeometryError(ErrorCode::EmptyInput, "v_width of no points");
  double lo = INFINITY, hi = -INFINITY;
  for (const auto& p : points) {
    const double t = p.dot(v);
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  return hi - lo;
}

double v_width(const Body& b, const Vec& v) { return support(b, v) + support(b, Vec(-v)); }

}  // namespace krasno
