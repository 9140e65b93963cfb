#include <catch2/catch_amalgamated.hpp>

#include "soddy/geometry.hpp"
#include "test_support.hpp"

using namespace soddy;
using testsupport::random_rational;

TEST_CASE("dbz_inv is total and matches the ordinary reciprocal off zero") {
  CHECK(dbz_inv(0.0) == 0.0);
  CHECK(dbz_inv(4.0) == 0.25);
  CHECK(dbz_inv(-2.0) == -0.5);
  CHECK(dbz_inv(BigRational(0)) == 0);
  CHECK(dbz_inv(BigRational(7, 3)) == BigRational(3, 7));
}

TEST_CASE("dbz_inv is an involution, zero included") {
  auto gen = testsupport::rng(11);
  for (int i = 0; i < 200; ++i) {
    BigRational x = random_rational(gen, -10, 10);
    CHECK(dbz_inv(dbz_inv(x)) == x);
  }
  CHECK(dbz_inv(dbz_inv(0.0)) == 0.0);
}

TEST_CASE("curvature: 1/r for circles, 0 for lines and point circles") {
  CHECK(curvature(make_circle<double>({0, 0}, 2)).value == 0.5);
  CHECK(curvature(make_line<double>({0, 1}, 0)).value == 0.0);
  CHECK(curvature(make_point<double>({1, 1})).value == 0.0);
  CHECK(curvature(make_circle<BigRational>({BigRational(0), BigRational(0)}, BigRational(2))).value ==
        BigRational(1, 2));
}

TEST_CASE("construction invariants") {
  CHECK_THROWS_AS(make_circle<double>({0, 0}, 0.0), domain_error);
  CHECK_THROWS_AS(make_circle<double>({0, 0}, -1.0), domain_error);
  CHECK_THROWS_AS(make_line<double>({0, 0}, 1.0), domain_error);

  // Normals are normalized at construction, offsets rescaled to match.
  auto l = std::get<Line<double>>(make_line<double>({0, 5}, 10));
  CHECK(l.normal.y == 1.0);
  CHECK(l.offset == 2.0);

  auto lr = std::get<Line<BigRational>>(
      make_line<BigRational>({BigRational(3), BigRational(4)}, BigRational(10)));
  CHECK(lr.normal.x == BigRational(3, 5));
  CHECK(lr.normal.y == BigRational(4, 5));
  CHECK(lr.offset == BigRational(2));

  // |(1,1)| is irrational: no exact representation.
  CHECK_THROWS_AS(make_line<BigRational>({BigRational(1), BigRational(1)}, BigRational(0)),
                  not_representable);
}

TEST_CASE("equation_to_circle: the three spec shapes") {
  // 2(x²+y²) − 2y = 0 completes to x² + (y − 1/2)² = 1/4.
  auto g = equation_to_circle(CircleEquation<BigRational>{BigRational(2), BigRational(0),
                                                          BigRational(-2), BigRational(0)});
  auto c = std::get<Circle<BigRational>>(g);
  CHECK(c.center.x == 0);
  CHECK(c.center.y == BigRational(1, 2));
  CHECK(c.radius == BigRational(1, 2));
  // ... which is r1r2/(r1+r2) at r1 = r2 = 1.
  CHECK(c.radius == BigRational(1) * BigRational(1) / (BigRational(1) + BigRational(1)));

  auto p = equation_to_circle(CircleEquation<double>{1, 0, 0, 0});
  CHECK(std::get<PointCircle<double>>(p).at == Vec2<double>{0, 0});

  auto l = std::get<Line<double>>(equation_to_circle(CircleEquation<double>{0, 0, 1, 0}));
  CHECK(l.normal.x == 0.0);
  CHECK(l.normal.y == 1.0);
  CHECK(l.offset == 0.0);
}

TEST_CASE("equation_to_circle rejects degenerate input") {
  CHECK_THROWS_AS(equation_to_circle(CircleEquation<double>{0, 0, 0, 0}), domain_error);
  CHECK_THROWS_AS(equation_to_circle(CircleEquation<double>{0, 0, 0, 3}), domain_error);
  // Imaginary circle x² + y² + 1 = 0.
  CHECK_THROWS_AS(equation_to_circle(CircleEquation<double>{1, 0, 0, 1}), domain_error);
  // Irrational radius in the exact domain.
  CHECK_THROWS_AS(equation_to_circle(CircleEquation<BigRational>{
                      BigRational(1), BigRational(0), BigRational(0), BigRational(-2)}),
                  not_representable);
}

TEST_CASE("equation_to_circle is a left inverse of the circle embedding (exact)") {
  auto gen = testsupport::rng(23);
  for (int i = 0; i < 200; ++i) {
    Vec2<BigRational> center{random_rational(gen, -8, 8), random_rational(gen, -8, 8)};
    BigRational r = random_rational(gen, 0.25, 6);
    if (r <= 0) continue;
    GeneralizedCircle<BigRational> g = Circle<BigRational>{center, r};
    auto back = std::get<Circle<BigRational>>(equation_to_circle(circle_to_equation(g)));
    CHECK(back.center == center);
    CHECK(back.radius == r);
  }
  // Point circles and lines round-trip too.
  GeneralizedCircle<BigRational> pt = PointCircle<BigRational>{{BigRational(3), BigRational(-2)}};
  CHECK(std::get<PointCircle<BigRational>>(equation_to_circle(circle_to_equation(pt))).at ==
        std::get<PointCircle<BigRational>>(pt).at);
  auto ln = make_line<BigRational>({BigRational(0), BigRational(1)}, BigRational(5, 3));
  auto ln2 = std::get<Line<BigRational>>(equation_to_circle(circle_to_equation(ln)));
  CHECK(ln2.normal == std::get<Line<BigRational>>(ln).normal);
  CHECK(ln2.offset == std::get<Line<BigRational>>(ln).offset);
}

TEST_CASE("tangency oracle: spec instances") {
  auto a = make_circle<double>({-1, 0}, 1);
  auto b = make_circle<double>({1, 0}, 1);
  auto rep = verify_tangency(a, b, 1e-9);
  CHECK(rep.kind == TangencyKind::External);
  CHECK(rep.residual == 0.0);

  // Family members of the unit arbelos: gap 4/5 equals 2/3 + 2/15.
  auto f1 = make_circle<double>({0, 4.0 / 3.0}, 2.0 / 3.0);
  auto f2 = make_circle<double>({0, 8.0 / 15.0}, 2.0 / 15.0);
  auto rep2 = verify_tangency(f1, f2, 1e-9);
  CHECK(rep2.kind == TangencyKind::External);
  CHECK(rep2.residual < 1e-15);

  auto c = make_circle<double>({0, 0}, 1);
  auto far_line = make_line<double>({0, 1}, 3);
  CHECK(verify_tangency(c, far_line, 1e-9).kind == TangencyKind::NotTangent);
}

TEST_CASE("tangency oracle: line, point and mixed pairs") {
  auto c = make_circle<double>({0, 2}, 2);
  CHECK(verify_tangency(c, make_line<double>({0, 1}, 0), 1e-9).kind == TangencyKind::External);
  CHECK(verify_tangency(c, make_point<double>({0, 0}), 1e-9).kind == TangencyKind::External);
  CHECK(verify_tangency(c, make_point<double>({0.5, 0}), 1e-9).kind == TangencyKind::NotTangent);

  // Parallel lines touch at infinity; crossing lines do not touch.
  auto l0 = make_line<double>({0, 1}, 0);
  auto l2 = make_line<double>({0, 1}, 2);
  auto lx = make_line<double>({1, 0}, 0);
  CHECK(verify_tangency(l0, l2, 1e-9).kind == TangencyKind::External);
  CHECK(verify_tangency(l0, lx, 1e-9).kind == TangencyKind::NotTangent);

  CHECK(verify_tangency(make_point<double>({1, 1}), make_point<double>({1, 1}), 1e-9).kind ==
        TangencyKind::External);
  CHECK(verify_tangency(make_point<double>({1, 1}), make_point<double>({1, 2}), 1e-9).kind ==
        TangencyKind::NotTangent);
  CHECK(verify_tangency(make_point<double>({1, 0}), l0, 1e-9).kind == TangencyKind::External);

  // Internal tangency.
  auto big = make_circle<double>({0, 0}, 3);
  auto inner = make_circle<double>({2, 0}, 1);
  auto rep = verify_tangency(big, inner, 1e-9);
  CHECK(rep.kind == TangencyKind::Internal);
  CHECK(rep.residual < 1e-15);
}

TEST_CASE("tangency oracle in the exact domain gives exact verdicts") {
  auto a = make_circle<BigRational>({BigRational(-1), BigRational(0)}, BigRational(1));
  auto b = make_circle<BigRational>({BigRational(1), BigRational(0)}, BigRational(1));
  auto rep = verify_tangency(a, b, BigRational(1, 1000000000));
  CHECK(rep.kind == TangencyKind::External);
  CHECK(rep.residual == 0.0);

  // Pythagorean placement: distance 5 = 2 + 3 exactly.
  auto p = make_circle<BigRational>({BigRational(0), BigRational(0)}, BigRational(2));
  auto q = make_circle<BigRational>({BigRational(3), BigRational(4)}, BigRational(3));
  CHECK(verify_tangency(p, q, BigRational(1, 1000000000)).kind == TangencyKind::External);

  // Off by 1/10^12 in radius: exact mode still says no.
  auto q2 = make_circle<BigRational>({BigRational(3), BigRational(4)},
                                     BigRational(3) + BigRational(1, 1000000000000LL));
  CHECK(verify_tangency(p, q2, BigRational(1, 1000000000)).kind == TangencyKind::NotTangent);
}

TEST_CASE("oracle is symmetric in its arguments") {
  auto gen = testsupport::rng(37);
  std::vector<GeneralizedCircle<double>> zoo;
  for (int i = 0; i < 12; ++i) {
    double x = testsupport::random_double(gen, -4, 4);
    double y = testsupport::random_double(gen, -4, 4);
    double r = testsupport::random_double(gen, 0.1, 3);
    switch (i % 3) {
      case 0: zoo.push_back(make_circle<double>({x, y}, r)); break;
      case 1: zoo.push_back(make_line<double>({std::cos(x), std::sin(x)}, y)); break;
      default: zoo.push_back(make_point<double>({x, y}));
    }
  }
  for (const auto& a : zoo) {
    for (const auto& b : zoo) {
      auto r1 = verify_tangency(a, b, 1e-9);
      auto r2 = verify_tangency(b, a, 1e-9);
      CHECK(r1.kind == r2.kind);
      CHECK(r1.residual == r2.residual);
    }
  }
}

TEST_CASE("1000 explicitly placed tangent circle pairs have residual < 1e-12") {
  auto gen = testsupport::rng(41);
  for (int i = 0; i < 1000; ++i) {
    double r1 = testsupport::random_double(gen, 0.01, 100);
    double r2 = testsupport::random_double(gen, 0.01, 100);
    double x = testsupport::random_double(gen, -50, 50);
    double y = testsupport::random_double(gen, -50, 50);
    double th = testsupport::random_double(gen, 0, 2 * M_PI);
    Vec2<double> c1{x, y};
    bool internal = (i % 4 == 0) && r1 > r2 + 0.01;
    double d = internal ? r1 - r2 : r1 + r2;
    Vec2<double> c2{x + d * std::cos(th), y + d * std::sin(th)};
    auto rep = verify_tangency(make_circle(c1, r1), make_circle(c2, r2), 1e-9);
    CHECK(rep.kind == (internal ? TangencyKind::Internal : TangencyKind::External));
    CHECK(rep.residual < 1e-12);
  }
}

TEST_CASE("tolerance must be positive") {
  auto a = make_circle<double>({0, 0}, 1);
  CHECK_THROWS_AS(verify_tangency(a, a, 0.0), domain_error);
  CHECK_THROWS_AS(verify_tangency(a, a, -1e-9), domain_error);
}
