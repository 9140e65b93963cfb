#pragma once

// Generalized circles (proper circle / line / point circle), curvature under
// the 1/0 = 0 convention, the quadratic-form representation
// A(x²+y²) + Bx + Cy + D = 0, and the numeric tangency oracle that every
// solver output is checked against.

#include <algorithm>
#include <variant>

#include "soddy/scalar.hpp"

namespace soddy {

template <typename S>
struct Vec2 {
  S x{}, y{};

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {S(a.x + b.x), S(a.y + b.y)}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {S(a.x - b.x), S(a.y - b.y)}; }
  friend Vec2 operator*(const S& s, const Vec2& v) { return {S(s * v.x), S(s * v.y)}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

template <typename S>
S dot(const Vec2<S>& a, const Vec2<S>& b) {
  return S(a.x * b.x + a.y * b.y);
}

template <typename S>
S cross(const Vec2<S>& a, const Vec2<S>& b) {
  return S(a.x * b.y - a.y * b.x);
}

template <typename S>
S norm2(const Vec2<S>& v) {
  return dot(v, v);
}

// Counter-clockwise quarter turn.
template <typename S>
Vec2<S> rot90(const Vec2<S>& v) {
  return {S(-v.y), v.x};
}

template <typename S>
struct Circle {
  Vec2<S> center;
  S radius;  // strictly positive; zero radius is a PointCircle
};

template <typename S>
struct Line {
  Vec2<S> normal;  // unit length
  S offset;        // signed distance from origin: points p with normal·p = offset
};

template <typename S>
struct PointCircle {
  Vec2<S> at;
};

template <typename S>
using GeneralizedCircle = std::variant<Circle<S>, Line<S>, PointCircle<S>>;

template <typename S>
GeneralizedCircle<S> make_circle(Vec2<S> center, S radius) {
  if (!(radius > S(0))) throw domain_error("circle radius must be > 0 (use a point circle for radius 0)");
  return Circle<S>{center, radius};
}

// Accepts any nonzero normal; stores the unit form with the offset rescaled
// to match. In the exact domain the normal's squared length must be a
// rational square.
template <typename S>
GeneralizedCircle<S> make_line(Vec2<S> normal, S offset) {
  S n2 = norm2(normal);
  if (scalar_traits<S>::is_zero(n2)) throw domain_error("line normal must be nonzero");
  S len = domain_sqrt(n2);
  return Line<S>{{S(normal.x / len), S(normal.y / len)}, S(offset / len)};
}

template <typename S>
GeneralizedCircle<S> make_point(Vec2<S> at) {
  return PointCircle<S>{at};
}

// Signed curvature, 1/radius units. Lines and point circles both carry
// curvature 0: the r = ∞ case is treated as r = 0 and 1/0 = 0.
template <typename S>
struct Curvature {
  S value{};
};

template <typename S>
Curvature<S> curvature(const GeneralizedCircle<S>& g) {
  if (const auto* c = std::get_if<Circle<S>>(&g)) return {S(S(1) / c->radius)};
  return {S(0)};
}

// A(x²+y²) + Bx + Cy + D = 0. A≠0: circle or point circle; A=0: line.
template <typename S>
struct CircleEquation {
  S A{}, B{}, C{}, D{};
};

template <typename S>
CircleEquation<S> circle_to_equation(const GeneralizedCircle<S>& g) {
  if (const auto* c = std::get_if<Circle<S>>(&g)) {
    return {S(1), S(S(-2) * c->center.x), S(S(-2) * c->center.y),
            S(norm2(c->center) - c->radius * c->radius)};
  }
  if (const auto* l = std::get_if<Line<S>>(&g)) {
    return {S(0), l->normal.x, l->normal.y, S(-l->offset)};
  }
  const auto& p = std::get<PointCircle<S>>(g);
  return {S(1), S(S(-2) * p.at.x), S(S(-2) * p.at.y), norm2(p.at)};
}

template <typename S>
GeneralizedCircle<S> equation_to_circle(const CircleEquation<S>& e) {
  using T = scalar_traits<S>;
  if (T::is_zero(e.A) && T::is_zero(e.B) && T::is_zero(e.C)) {
    throw domain_error("circle equation needs a nonzero coefficient among A, B, C");
  }
  if (T::is_zero(e.A)) return make_line(Vec2<S>{e.B, e.C}, S(-e.D));

  S disc = S(e.B * e.B + e.C * e.C - S(4) * e.A * e.D);
  if constexpr (!T::exact) {
    // Absorb roundoff-scale negatives; anything larger is a genuine empty locus.
    double scale = std::fabs(e.B * e.B) + std::fabs(e.C * e.C) + std::fabs(4 * e.A * e.D);
    if (disc < 0 && -disc <= 1e-14 * scale) disc = 0;
  }
  if (disc < S(0)) throw domain_error("circle equation has no real locus");

  S half = S(S(2) * e.A);
  Vec2<S> center{S(-e.B / half), S(-e.C / half)};
  if (T::is_zero(disc)) return PointCircle<S>{center};
  S radius = S(domain_sqrt(disc) / abs_val(half));
  return Circle<S>{center, radius};
}

enum class TangencyKind { External, Internal, NotTangent };

inline const char* to_string(TangencyKind k) {
  switch (k) {
    case TangencyKind::External: return "external";
    case TangencyKind::Internal: return "internal";
    default: return "not-tangent";
  }
}

// Oracle verdict. The residual is always reported numerically; in the exact
// domain the verdict itself comes from exact comparisons and a tangent pair
// reports residual 0.
struct TangencyReport {
  TangencyKind kind = TangencyKind::NotTangent;
  double residual = 0.0;
};

namespace detail {

// |d - target| where d = sqrt(d2), all already converted to double.
inline double gap(double d2, double target) {
  return std::fabs(std::sqrt(d2) - target);
}

template <typename S>
TangencyReport incidence_report(const S& dist2, double tol) {
  double g = std::sqrt(to_double(dist2));
  if constexpr (scalar_traits<S>::exact) {
    if (scalar_traits<S>::is_zero(dist2)) return {TangencyKind::External, 0.0};
    return {TangencyKind::NotTangent, g};
  } else {
    if (g < tol) return {TangencyKind::External, g};
    return {TangencyKind::NotTangent, g};
  }
}

template <typename S>
TangencyReport circle_circle(const Circle<S>& a, const Circle<S>& b, double tol) {
  S d2 = norm2(Vec2<S>(b.center - a.center));
  S sum = S(a.radius + b.radius);
  S dif = S(a.radius - b.radius);
  double ext = gap(to_double(d2), to_double(sum));
  double inn = gap(to_double(d2), std::fabs(to_double(dif)));
  if constexpr (scalar_traits<S>::exact) {
    if (d2 == sum * sum) return {TangencyKind::External, 0.0};
    if (d2 == dif * dif) return {TangencyKind::Internal, 0.0};
  } else {
    if (ext < tol && ext <= inn) return {TangencyKind::External, ext};
    if (inn < tol) return {TangencyKind::Internal, inn};
  }
  return {TangencyKind::NotTangent, std::min(ext, inn)};
}

template <typename S>
S line_point_distance(const Line<S>& l, const Vec2<S>& p) {
  return abs_val(S(dot(l.normal, p) - l.offset));
}

template <typename S>
TangencyReport circle_line(const Circle<S>& c, const Line<S>& l, double tol) {
  S dist = line_point_distance(l, c.center);
  double g = std::fabs(to_double(dist) - to_double(c.radius));
  if constexpr (scalar_traits<S>::exact) {
    if (dist == c.radius) return {TangencyKind::External, 0.0};
    return {TangencyKind::NotTangent, g};
  } else {
    return {g < tol ? TangencyKind::External : TangencyKind::NotTangent, g};
  }
}

// Two lines touch (at the point at infinity) exactly when they are parallel.
// Residual is the cross product of the unit normals, dimensionless.
template <typename S>
TangencyReport line_line(const Line<S>& a, const Line<S>& b, double tol) {
  S c = cross(a.normal, b.normal);
  double g = std::fabs(to_double(c));
  if constexpr (scalar_traits<S>::exact) {
    return {scalar_traits<S>::is_zero(c) ? TangencyKind::External : TangencyKind::NotTangent, g};
  } else {
    return {g < tol ? TangencyKind::External : TangencyKind::NotTangent, g};
  }
}

}  // namespace detail

// Independent tangency oracle. Touching means: circle–circle center distance
// equals r_a+r_b (external) or |r_a−r_b| (internal); anything involving a
// point circle means incidence; lines touch circles at distance = radius and
// touch each other when parallel. Symmetric in its arguments.
template <typename S>
TangencyReport verify_tangency(const GeneralizedCircle<S>& a, const GeneralizedCircle<S>& b,
                               const S& tol) {
  if (!(tol > S(0))) throw domain_error("tangency tolerance must be > 0");
  if (a.index() > b.index()) return verify_tangency(b, a, tol);
  double t = to_double(tol);

  if (const auto* ca = std::get_if<Circle<S>>(&a)) {
    if (const auto* cb = std::get_if<Circle<S>>(&b)) return detail::circle_circle(*ca, *cb, t);
    if (const auto* lb = std::get_if<Line<S>>(&b)) return detail::circle_line(*ca, *lb, t);
    const auto& pb = std::get<PointCircle<S>>(b);
    S d2 = norm2(Vec2<S>(pb.at - ca->center));
    double g = std::fabs(std::sqrt(to_double(d2)) - to_double(ca->radius));
    if constexpr (scalar_traits<S>::exact) {
      return {d2 == ca->radius * ca->radius ? TangencyKind::External : TangencyKind::NotTangent, g};
    } else {
      return {g < t ? TangencyKind::External : TangencyKind::NotTangent, g};
    }
  }
  if (const auto* la = std::get_if<Line<S>>(&a)) {
    if (const auto* lb = std::get_if<Line<S>>(&b)) return detail::line_line(*la, *lb, t);
    const auto& pb = std::get<PointCircle<S>>(b);
    S dist = detail::line_point_distance(*la, pb.at);
    double g = to_double(dist);
    if constexpr (scalar_traits<S>::exact) {
      return {scalar_traits<S>::is_zero(dist) ? TangencyKind::External : TangencyKind::NotTangent, g};
    } else {
      return {g < t ? TangencyKind::External : TangencyKind::NotTangent, g};
    }
  }
  const auto& pa = std::get<PointCircle<S>>(a);
  const auto& pb = std::get<PointCircle<S>>(b);
  return detail::incidence_report(norm2(Vec2<S>(pb.at - pa.at)), t);
}

template <typename S>
TangencyReport verify_tangency(const GeneralizedCircle<S>& a, const GeneralizedCircle<S>& b) {
  return verify_tangency(a, b, S(default_tolerance));
}

template <typename S>
bool is_tangent(const GeneralizedCircle<S>& a, const GeneralizedCircle<S>& b, const S& tol) {
  return verify_tangency(a, b, tol).kind != TangencyKind::NotTangent;
}

}  // namespace soddy
