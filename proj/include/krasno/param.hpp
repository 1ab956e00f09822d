#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace krasno {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct BoxD {
  Vec corner;
  Vec lengths;
  int dim() const { return static_cast<int>(corner.size()); }
  double volume() const { return lengths.prod(); }
};

struct BallD {
  Vec center;
  double radius = 1.0;
  int dim() const { return static_cast<int>(center.size()); }
};

/// a + A * B_d with A symmetric positive definite.
struct EllipsoidD {
  Vec center;
  Mat shape;
  int dim() const { return static_cast<int>(center.size()); }
  double axis_sum() const { return 2.0 * shape.trace(); }
};

using Body = std::variant<BoxD, BallD, EllipsoidD>;

enum class Family { BoxVol, BoxSum, Ball, EllAxis, EllVol };
const char* to_string(Family f);

struct ParamPoint {
  Family family = Family::Ball;
  int d = 2;
  Vec coords;
};

struct ParamConfig {
  double trace = 0.5;        // EllAxis trace normalisation; axis sum = 2 * trace
  double sum_tol = 1e-12;    // BoxSum length sum
  double trace_tol = 1e-10;  // EllAxis trace
};

struct SymEigen {
  Vec values;   // ascending
  Mat vectors;  // columns
};

/// Cyclic Jacobi; stops when the off-diagonal Frobenius norm drops below tol
/// (relative to the matrix norm).
SymEigen jacobi_eigen(const Mat& S, double tol = 1e-14, int max_sweeps = 100);

bool is_spd(const Mat& A, double tol = 0.0);

struct PolarDecomposition {
  Mat A;  // symmetric positive definite
  Mat Q;  // orthogonal
  Mat X;  // X = A Q
};
PolarDecomposition polar_decompose(const Mat& X);

BoxD box_vol_param(int d, const Vec& p);
BoxD box_sum_param(int d, const Vec& q, const ParamConfig& cfg = {});
BallD ball_param(int d, const Vec& y);
EllipsoidD ellipsoid_axis_param(int d, const Vec& a, const Mat& A, const ParamConfig& cfg = {});
/// Shape rescaled to determinant one.
EllipsoidD ellipsoid_project_pi(const Vec& a, const Mat& A);

/// Packs / unpacks the upper triangle of a symmetric matrix (row-major).
Vec sym_pack(const Mat& A);
Mat sym_unpack(int d, std::span<const double> v);

/// Parameter-space dimension of a family.
int param_size(Family f, int d);
Body realize(const ParamPoint& p, const ParamConfig& cfg = {});
ParamPoint combine(const ParamPoint& a, const ParamPoint& b, double lambda);

double support(const BoxD& b, const Vec& u);
double support(const BallD& b, const Vec& u);
double support(const EllipsoidD& e, const Vec& u);
double support(const Body& b, const Vec& u);

/// Unit directions: evenly spaced on the circle for d = 2, seeded uniform
/// samples on the sphere otherwise.
std::vector<Vec> sample_directions(int d, int count, std::uint64_t seed = 1);

/// Minimum over directions of lambda h_a + (1 - lambda) h_b - h_{D(lambda a + (1 - lambda) b)}.
/// count <= 0 picks the default (720 for d = 2, 2000 otherwise).
double check_param_containment(const ParamPoint& a, const ParamPoint& b, double lambda, int count = 0,
                               const ParamConfig& cfg = {}, std::uint64_t seed = 1);

/// Seeded random point of a family's domain.
ParamPoint random_param(Family f, int d, std::uint64_t seed, const ParamConfig& cfg = {});

/// Centrally symmetric polytope { x : <n_i, x> <= b_i }.
struct PolytopeNormBall {
  std::vector<Vec> normals;
  std::vector<double> offsets;

  int dim() const { return normals.empty() ? 0 : static_cast<int>(normals[0].size()); }
  static PolytopeNormBall linf(int d);
  static PolytopeNormBall l1(int d);
  /// Throws InvalidArgument unless every facet has its mirror and offsets are positive.
  void validate() const;
};

double minkowski_norm(const PolytopeNormBall& B, const Vec& x);
/// Gauge of A * B_d (centre ignored).
double minkowski_norm(const EllipsoidD& B, const Vec& x);

double v_width(std::span<const Vec> points, const Vec& v);
double v_width(const Body& b, const Vec& v);

}  // namespace krasno
