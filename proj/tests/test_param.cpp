#include <cmath>
#include <random>

#include "doctest.h"
#include "krasno/error.hpp"
#include "krasno/param.hpp"

using namespace krasno;

namespace {
Vec v(std::initializer_list<double> xs) {
  Vec r(static_cast<Eigen::Index>(xs.size()));
  int i = 0;
  for (double x : xs) r[i++] = x;
  return r;
}
Mat diag(std::initializer_list<double> xs) { return v(xs).asDiagonal(); }
}  // namespace

TEST_CASE("box parametrizations") {
  auto b = box_vol_param(2, v({0, 0, 2}));
  CHECK(b.lengths[0] == 2);
  CHECK(b.lengths[1] == 0.5);
  auto u = box_vol_param(2, v({1, 1, 1}));
  CHECK(u.corner == v({1, 1}));
  CHECK(u.lengths == v({1, 1}));
  auto c = box_vol_param(3, v({0, 0, 0, 2, 4}));
  CHECK(c.lengths == v({2, 4, 0.125}));
  CHECK_THROWS_AS(box_vol_param(2, v({0, 0, -1})), GeometryError);
  CHECK_THROWS_AS(box_vol_param(2, v({0, 0, 0})), GeometryError);

  CHECK(box_sum_param(2, v({0, 0, 0.5, 0.5})).lengths == v({0.5, 0.5}));
  CHECK(box_sum_param(2, v({0, 0, 0.9, 0.1})).lengths[0] == 0.9);
  CHECK(box_sum_param(4, v({0, 0, 0, 0, 0.25, 0.25, 0.25, 0.25})).lengths == Vec::Constant(4, 0.25));
  CHECK_THROWS_AS(box_sum_param(2, v({0, 0, 0.5, 0.6})), GeometryError);

  for (int d = 2; d <= 5; ++d)
    for (std::uint64_t s = 0; s < 100; ++s) {
      auto p = random_param(Family::BoxVol, d, s);
      CHECK(std::abs(box_vol_param(d, p.coords).volume() - 1) <= 1e-12);
    }
}

TEST_CASE("balls and ellipsoids") {
  auto B = ball_param(3, v({1, 2, 3}));
  CHECK(B.radius == 1);
  CHECK(B.center == v({1, 2, 3}));
  ParamPoint a{Family::Ball, 2, v({0, 0})}, b{Family::Ball, 2, v({4, 2})};
  auto mid = std::get<BallD>(realize(combine(a, b, 0.25)));
  CHECK(mid.center == v({3, 1.5}));

  CHECK(ellipsoid_axis_param(2, v({0, 0}), diag({0.25, 0.25})).axis_sum() == doctest::Approx(1));
  CHECK(ellipsoid_axis_param(2, v({0, 0}), diag({0.4, 0.1})).axis_sum() == doctest::Approx(1));
  ParamConfig c3;
  c3.trace = 0.5;
  CHECK(ellipsoid_axis_param(3, v({0, 0, 0}), Mat::Identity(3, 3) / 6, c3).axis_sum() == doctest::Approx(1));
  CHECK_THROWS_AS(ellipsoid_axis_param(2, v({0, 0}), diag({0.6, 0.1})), GeometryError);
  CHECK_THROWS_AS(ellipsoid_axis_param(2, v({0, 0}), diag({0.6, -0.1})), GeometryError);

  auto e1 = ellipsoid_project_pi(v({0, 0}), 2 * Mat::Identity(2, 2));
  CHECK((e1.shape - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
  auto e2 = ellipsoid_project_pi(v({0, 0}), diag({4, 1}));
  CHECK((e2.shape - diag({2, 0.5})).cwiseAbs().maxCoeff() < 1e-14);
  auto e3 = ellipsoid_project_pi(v({0, 0}), e2.shape);
  CHECK(e3.shape == e2.shape);
  CHECK_THROWS_AS(ellipsoid_project_pi(v({0, 0}), diag({1, -1})), GeometryError);
}

TEST_CASE("jacobi and polar decomposition") {
  Mat S(3, 3);
  S << 4, 1, 2, 1, 3, 0, 2, 0, 5;
  auto e = jacobi_eigen(S);
  CHECK((e.vectors * e.values.asDiagonal() * e.vectors.transpose() - S).cwiseAbs().maxCoeff() < 1e-12);
  Eigen::SelfAdjointEigenSolver<Mat> ref(S);
  CHECK((e.values - ref.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);

  auto p = polar_decompose(Mat::Identity(2, 2));
  CHECK((p.A - Mat::Identity(2, 2)).norm() < 1e-14);
  Mat R(2, 2);
  R << 0, -1, 1, 0;
  p = polar_decompose(R);
  CHECK((p.A - Mat::Identity(2, 2)).norm() < 1e-14);
  CHECK((p.Q - R).norm() < 1e-14);
  p = polar_decompose(diag({3, 2}));
  CHECK((p.A - diag({3, 2})).norm() < 1e-14);
  CHECK((p.Q - Mat::Identity(2, 2)).norm() < 1e-14);
  CHECK_THROWS_AS(polar_decompose(diag({1, 0})), GeometryError);

  std::mt19937_64 rng(5);
  std::normal_distribution<double> N;
  for (int t = 0; t < 200; ++t) {
    const int d = 2 + t % 4;
    Mat X(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) X(i, j) = N(rng);
    if (std::abs(X.determinant()) < 1e-6) continue;
    auto pd = polar_decompose(X);
    CHECK((pd.A * pd.Q - X).norm() <= 1e-12 * X.norm());
    CHECK((pd.Q.transpose() * pd.Q - Mat::Identity(d, d)).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(is_spd(pd.A));
  }
}

TEST_CASE("support functions") {
  CHECK(support(BallD{v({0, 0}), 1}, v({1, 0})) == 1);
  CHECK(support(BoxD{v({0, 0}), v({1, 1})}, v({0, 1})) == 1);
  CHECK(support(EllipsoidD{v({0, 0}), diag({2, 1})}, v({1, 0})) == 2);
  // h of a Minkowski sum of boxes is the sum of the supports (lengths add).
  BoxD P{v({1, -2}), v({2, 3})}, Q{v({0, 5}), v({0.5, 1})};
  BoxD PQ{P.corner + Q.corner, P.lengths + Q.lengths};
  BallD b1{v({1, 1}), 2}, b2{v({-3, 0}), 0.5}, b12{v({-2, 1}), 2.5};
  for (const auto& u : sample_directions(2, 360)) {
    CHECK(support(PQ, u) == doctest::Approx(support(P, u) + support(Q, u)).epsilon(1e-14));
    CHECK(support(b12, u) == doctest::Approx(support(b1, u) + support(b2, u)).epsilon(1e-14));
  }
}

TEST_CASE("containment examples") {
  ParamPoint a{Family::BoxVol, 2, v({0, 0, 1})}, b{Family::BoxVol, 2, v({0, 0, 4})};
  CHECK(check_param_containment(a, b, 0.5) >= 0);
  auto mid = std::get<BoxD>(realize(combine(a, b, 0.5)));
  CHECK(mid.lengths[0] == 2.5);
  CHECK(mid.lengths[1] == 0.4);

  for (std::uint64_t s = 0; s < 20; ++s) {
    auto p = random_param(Family::Ball, 3, s), q = random_param(Family::Ball, 3, s + 100);
    CHECK(std::abs(check_param_containment(p, q, 0.3)) < 1e-12);
    auto r = random_param(Family::BoxSum, 2, s), t = random_param(Family::BoxSum, 2, s + 100);
    CHECK(std::abs(check_param_containment(r, t, 0.7)) < 1e-12);
  }
  CHECK_THROWS_AS(check_param_containment(a, ParamPoint{Family::Ball, 2, v({0, 0})}, 0.5), GeometryError);
}

TEST_CASE("containment property per family and dimension") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> L(0, 1);
  for (Family f : {Family::BoxVol, Family::BoxSum, Family::Ball, Family::EllAxis, Family::EllVol})
    for (int d = 2; d <= 4; ++d)
      for (std::uint64_t t = 0; t < 40; ++t) {
        auto a = random_param(f, d, 1000 * t + d), b = random_param(f, d, 1000 * t + d + 500);
        CHECK(check_param_containment(a, b, L(rng), d == 2 ? 720 : 500, {}, t) >= -1e-9);
      }
}

TEST_CASE("determinant log-concavity instances") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> L(0, 1);
  for (std::uint64_t t = 0; t < 200; ++t) {
    const int d = 2 + static_cast<int>(t % 3);
    auto a = random_param(Family::EllVol, d, t), b = random_param(Family::EllVol, d, t + 7777);
    const Mat A = std::get<EllipsoidD>(realize(a)).shape;
    const Mat B = std::get<EllipsoidD>(realize(b)).shape;
    CHECK(std::abs(A.determinant() - 1) < 1e-12);
    const double lam = L(rng);
    CHECK((lam * A + (1 - lam) * B).determinant() >= 1 - 1e-12);
  }
}

TEST_CASE("minkowski norms and v-width") {
  CHECK(minkowski_norm(PolytopeNormBall::linf(2), v({3, -2})) == 3);
  CHECK(minkowski_norm(PolytopeNormBall::l1(2), v({3, -2})) == 5);
  CHECK(minkowski_norm(PolytopeNormBall::l1(2), v({0, 0})) == 0);
  CHECK(minkowski_norm(EllipsoidD{v({0, 0}), diag({2, 1})}, v({4, 0})) == doctest::Approx(2));
  PolytopeNormBall bad;
  bad.normals = {v({1, 0})};
  bad.offsets = {1};
  CHECK_THROWS_AS(bad.validate(), GeometryError);
  PolytopeNormBall::linf(3).validate();
  PolytopeNormBall::l1(3).validate();

  std::vector<Vec> sq{v({0, 0}), v({1, 0}), v({1, 1}), v({0, 1})};
  CHECK(v_width(sq, v({1, 0})) == 1);
  const double r = std::sqrt(0.5);
  CHECK(v_width(sq, v({r, r})) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(v_width(Body{BallD{v({0, 0}), 1}}, v({0.6, 0.8})) == doctest::Approx(2));
  std::vector<Vec> one{v({1, 1})};
  CHECK(v_width(one, v({1, 0})) == 0);
  CHECK_THROWS_AS(v_width(std::span<const Vec>{}, v({1, 0})), GeometryError);
}
