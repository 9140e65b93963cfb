#pragma once

// The Descartes circle theorem over generalized circles:
//   1/r4 = 1/r1 + 1/r2 + 1/r3 ± 2√(1/(r1r2) + 1/(r2r3) + 1/(r3r1))
// in signed-curvature form, with lines and point circles contributing
// curvature 0 under the 1/0 = 0 convention, a classifier that routes every
// degenerate configuration to its closed form, and center recovery validated
// against the tangency oracle.
//
// Sign convention: negative curvature marks a circle that encloses the
// others; the oracle then expects internal tangency against it.

#include <algorithm>
#include <array>
#include <utility>

#include "soddy/arbelos.hpp"
#include "soddy/geometry.hpp"

namespace soddy {

enum class Branch { Plus, Minus };

inline const char* to_string(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

enum class ConfigurationClass {
  ThreeCircles,
  OneLineTwoCircles,
  TwoParallelLinesOneCircle,
  OnePointTwoCircles,
  TwoPointsOneCircle,
  ThreePoints,
  ThreeLines,
};

inline const char* to_string(ConfigurationClass c) {
  switch (c) {
    case ConfigurationClass::ThreeCircles: return "ThreeCircles";
    case ConfigurationClass::OneLineTwoCircles: return "OneLineTwoCircles";
    case ConfigurationClass::TwoParallelLinesOneCircle: return "TwoParallelLinesOneCircle";
    case ConfigurationClass::OnePointTwoCircles: return "OnePointTwoCircles";
    case ConfigurationClass::TwoPointsOneCircle: return "TwoPointsOneCircle";
    case ConfigurationClass::ThreePoints: return "ThreePoints";
    default: return "ThreeLines";
  }
}

enum class SolutionFlag {
  None,
  Enclosing,             // negative curvature: circle4 wraps the inputs
  DbzBankoff,            // fourth circle produced by the division by zero calculus
  DegenerateEqualRadii,  // line-case minus branch, r1 = r2: circle4 is the second tangent line
};

inline const char* to_string(SolutionFlag f) {
  switch (f) {
    case SolutionFlag::None: return "none";
    case SolutionFlag::Enclosing: return "enclosing";
    case SolutionFlag::DbzBankoff: return "dbz-bankoff";
    default: return "degenerate-equal-radii";
  }
}

template <typename S>
struct FourthCircleSolution {
  Curvature<S> curvature4;
  GeneralizedCircle<S> circle4;
  Branch branch = Branch::Plus;
  SolutionFlag flag = SolutionFlag::None;
};

// k4 = k1 + k2 + k3 ± 2√(k1k2 + k2k3 + k3k1), signed curvatures allowed.
template <typename S>
Curvature<S> descartes_curvature(const Curvature<S>& k1, const Curvature<S>& k2,
                                 const Curvature<S>& k3, Branch branch) {
  S e = S(k1.value * k2.value + k2.value * k3.value + k3.value * k1.value);
  if constexpr (!scalar_traits<S>::exact) {
    double mag = std::fabs(k1.value * k2.value) + std::fabs(k2.value * k3.value) +
                 std::fabs(k3.value * k1.value);
    if (e < 0 && -e <= 1e-12 * mag) e = 0;
  }
  if (e < S(0)) {
    throw no_real_solution("negative radicand: curvatures do not form a tangent triple");
  }
  S root = domain_sqrt(e);
  S sum = S(k1.value + k2.value + k3.value);
  S two_root = S(S(2) * root);
  return {branch == Branch::Plus ? S(sum + two_root) : S(sum - two_root)};
}

namespace detail {

template <typename S>
bool lex_less(const Vec2<S>& a, const Vec2<S>& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

// Same geometric line, canonical representation: normal points into the
// upper half plane (ties: positive x).
template <typename S>
Line<S> canonical_line(Line<S> l) {
  if (l.normal.y < S(0) || (scalar_traits<S>::is_zero(l.normal.y) && l.normal.x < S(0))) {
    l.normal = {S(-l.normal.x), S(-l.normal.y)};
    l.offset = S(-l.offset);
  }
  return l;
}

// Deterministic input order: circles before lines before points; circles by
// descending radius then center, lines by offset then normal, points by
// position. Makes every solver path permutation invariant.
template <typename S>
void canonical_sort(std::array<GeneralizedCircle<S>, 3>& g) {
  for (auto& e : g) {
    if (auto* l = std::get_if<Line<S>>(&e)) *l = canonical_line(*l);
  }
  auto less = [](const GeneralizedCircle<S>& a, const GeneralizedCircle<S>& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    if (const auto* ca = std::get_if<Circle<S>>(&a)) {
      const auto& cb = std::get<Circle<S>>(b);
      if (ca->radius != cb.radius) return ca->radius > cb.radius;
      return lex_less(ca->center, cb.center);
    }
    if (const auto* la = std::get_if<Line<S>>(&a)) {
      const auto& lb = std::get<Line<S>>(b);
      if (la->offset != lb.offset) return la->offset < lb.offset;
      return lex_less(la->normal, lb.normal);
    }
    return lex_less(std::get<PointCircle<S>>(a).at, std::get<PointCircle<S>>(b).at);
  };
  std::sort(g.begin(), g.end(), less);
}

template <typename S>
void require_mutually_tangent(const std::array<GeneralizedCircle<S>, 3>& g, const S& tol) {
  static const char* names[3] = {"first", "second", "third"};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      auto rep = verify_tangency(g[std::size_t(i)], g[std::size_t(j)], tol);
      if (rep.kind == TangencyKind::NotTangent) {
        throw not_mutually_tangent(std::string("inputs are not mutually tangent (") + names[i] +
                                   " vs " + names[j] +
                                   ", residual " + scalar_traits<double>::str(rep.residual) + ")");
      }
    }
  }
}

template <typename S>
S clamped_sqrt(S v, double scale) {
  if constexpr (!scalar_traits<S>::exact) {
    if (v < 0 && -v <= 1e-12 * scale) v = 0;
  }
  return domain_sqrt(v);
}

// Both intersection points of the circles |p − p1| = d1, |p − p2| = d2,
// where e is the exact center distance (known from the tangency kind, so no
// square root is spent on it).
template <typename S>
std::pair<Vec2<S>, Vec2<S>> two_distance_points(const Vec2<S>& p1, const S& d1, const Vec2<S>& p2,
                                                const S& d2, const S& e) {
  if (scalar_traits<S>::is_zero(e)) throw domain_error("coincident circle centers");
  Vec2<S> u{S(S(p2.x - p1.x) / e), S(S(p2.y - p1.y) / e)};
  S a = S(S(e * e + d1 * d1 - d2 * d2) / S(S(2) * e));
  S h2 = S(d1 * d1 - a * a);
  S h = clamped_sqrt(h2, to_double(S(d1 * d1 + a * a)));
  Vec2<S> base{S(p1.x + a * u.x), S(p1.y + a * u.y)};
  Vec2<S> off = h * rot90(u);
  return {base + off, base - off};
}

// Pick whichever candidate center yields the smaller tangency residual
// against the remaining input; ties resolve lexicographically.
template <typename S>
GeneralizedCircle<S> pick_by_third(const std::pair<Vec2<S>, Vec2<S>>& centers, const S& radius,
                                   const GeneralizedCircle<S>& third, const S& tol) {
  GeneralizedCircle<S> c1 = Circle<S>{centers.first, radius};
  GeneralizedCircle<S> c2 = Circle<S>{centers.second, radius};
  double g1 = verify_tangency(c1, third, tol).residual;
  double g2 = verify_tangency(c2, third, tol).residual;
  if (g1 != g2) return g1 < g2 ? c1 : c2;
  return lex_less(centers.first, centers.second) ? c1 : c2;
}

}  // namespace detail

// Configuration classes follow the variant census. Mixed line/point triples
// and internally nested chains have no closed form here and are rejected.
template <typename S>
ConfigurationClass classify(const GeneralizedCircle<S>& c1, const GeneralizedCircle<S>& c2,
                            const GeneralizedCircle<S>& c3, const S& tol = S(default_tolerance)) {
  std::array<GeneralizedCircle<S>, 3> g{c1, c2, c3};
  detail::require_mutually_tangent(g, tol);
  int circles = 0, lines = 0, points = 0;
  for (const auto& e : g) {
    if (std::holds_alternative<Circle<S>>(e)) ++circles;
    else if (std::holds_alternative<Line<S>>(e)) ++lines;
    else ++points;
  }
  if (circles == 3) return ConfigurationClass::ThreeCircles;
  if (circles == 2 && lines == 1) return ConfigurationClass::OneLineTwoCircles;
  if (circles == 1 && lines == 2) return ConfigurationClass::TwoParallelLinesOneCircle;
  if (circles == 2 && points == 1) return ConfigurationClass::OnePointTwoCircles;
  if (circles == 1 && points == 2) return ConfigurationClass::TwoPointsOneCircle;
  if (points == 3) return ConfigurationClass::ThreePoints;
  if (lines == 3) return ConfigurationClass::ThreeLines;
  throw domain_error("configurations mixing lines and point circles are not supported");
}

// One-line-two-circles case, minus sign: 1/√r4 = 1/√r2 − 1/√r1 with r1 ≥ r2.
// Equal radii cancel exactly; then r4 = 0 is reported with a flag (the
// geometric solution is the second common tangent line).
template <typename S>
struct MinusBranchLineResult {
  S r4;
  bool degenerate_equal_radii = false;
};

template <typename S>
MinusBranchLineResult<S> minus_branch_line_case(const S& r1, const S& r2) {
  if (!(r1 > S(0)) || !(r2 > S(0))) throw domain_error("radii must be > 0");
  if (r1 < r2) throw domain_error("minus branch expects r1 >= r2");
  if (r1 == r2) return {S(0), true};
  S diff = S(S(1) / domain_sqrt(r2) - S(1) / domain_sqrt(r1));
  S inv = dbz_inv(diff);
  return {S(inv * inv), false};
}

// Eq. form with r3 = −(r1+r2): the radicand collapses to 0 and
// r4 = r1r2(r1+r2)/(r1²+r1r2+r2²) — the arbelos incircle radius.
template <typename S>
S internal_tangency_check(const S& r1, const S& r2) {
  if (!(r1 > S(0)) || !(r2 > S(0))) throw domain_error("radii must be > 0");
  Curvature<S> k1{S(S(1) / r1)}, k2{S(S(1) / r2)}, k3{S(S(-1) / S(r1 + r2))};
  Curvature<S> k4 = descartes_curvature(k1, k2, k3, Branch::Plus);
  return dbz_inv(k4.value);
}

namespace detail {

template <typename S>
FourthCircleSolution<S> solve_three_circles(const std::array<GeneralizedCircle<S>, 3>& g,
                                            Branch branch, const S& tol) {
  std::array<Circle<S>, 3> c{std::get<Circle<S>>(g[0]), std::get<Circle<S>>(g[1]),
                             std::get<Circle<S>>(g[2])};
  std::array<TangencyKind, 3> kind{};  // pair (i,j) stored at the excluded index 3-i-j
  int internal = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      kind[std::size_t(3 - i - j)] = verify_tangency(g[std::size_t(i)], g[std::size_t(j)], tol).kind;
      if (kind[std::size_t(3 - i - j)] == TangencyKind::Internal) ++internal;
    }
  }
  std::array<S, 3> bend{S(S(1) / c[0].radius), S(S(1) / c[1].radius), S(S(1) / c[2].radius)};
  if (internal == 2) {
    // Exactly one circle may enclose the other two; it is internal to both.
    int j = -1;
    for (int i = 0; i < 3; ++i) {
      if (kind[std::size_t(i)] == TangencyKind::External) j = i;  // pair excluding i is external
    }
    bool contains_both = true;
    for (int i = 0; i < 3 && j >= 0; ++i) {
      if (i == j) continue;
      S d2 = norm2(Vec2<S>(c[std::size_t(i)].center - c[std::size_t(j)].center));
      S reach = S(c[std::size_t(j)].radius - c[std::size_t(i)].radius);
      if (reach < S(0) || d2 > reach * reach) contains_both = false;
    }
    if (j < 0 || !contains_both) {
      throw domain_error("unsupported internal tangency pattern among three circles");
    }
    bend[std::size_t(j)] = S(-bend[std::size_t(j)]);
  } else if (internal != 0) {
    throw domain_error("unsupported internal tangency pattern among three circles");
  }

  Curvature<S> k4 =
      descartes_curvature<S>({bend[0]}, {bend[1]}, {bend[2]}, branch);
  double bend_scale = std::fabs(to_double(bend[0])) + std::fabs(to_double(bend[1])) +
                      std::fabs(to_double(bend[2]));
  bool is_line;
  if constexpr (scalar_traits<S>::exact) {
    is_line = scalar_traits<S>::is_zero(k4.value);
  } else {
    is_line = std::fabs(to_double(k4.value)) <= 1e-12 * bend_scale;
  }
  if (is_line) {
    // The fourth tangent object flattens to the common tangent line:
    // n·ci − off = ri for all i, built from the first two and checked on the third.
    Vec2<S> d = c[0].center - c[1].center;
    S e2 = norm2(d);
    S rdiff = S(c[0].radius - c[1].radius);
    S t2 = S(e2 - rdiff * rdiff);
    S root = clamped_sqrt(t2, to_double(e2));
    // n = (rdiff·d ± root·rot90(d)) / e²  (unit by construction)
    Vec2<S> perp = rot90(d);
    auto line_for = [&](bool flip) {
      S s = flip ? S(-root) : root;
      Vec2<S> n{S(S(rdiff * d.x + s * perp.x) / e2), S(S(rdiff * d.y + s * perp.y) / e2)};
      S off = S(dot(n, c[0].center) - c[0].radius);
      return Line<S>{n, off};
    };
    GeneralizedCircle<S> l1 = line_for(false), l2 = line_for(true);
    double g1 = verify_tangency(l1, g[2], tol).residual;
    double g2 = verify_tangency(l2, g[2], tol).residual;
    GeneralizedCircle<S> best;
    if (g1 != g2) {
      best = g1 < g2 ? l1 : l2;
    } else {
      best = lex_less(std::get<Line<S>>(l1).normal, std::get<Line<S>>(l2).normal) ? l1 : l2;
    }
    return {Curvature<S>{S(0)}, detail::canonical_line(std::get<Line<S>>(best)), branch,
            SolutionFlag::None};
  }

  S r4 = S(S(1) / abs_val(k4.value));
  bool enclosing = k4.value < S(0);
  auto dist_to = [&](int i) {
    bool same_side = enclosing == (bend[std::size_t(i)] < S(0));
    return same_side ? S(r4 + c[std::size_t(i)].radius)
                     : abs_val(S(r4 - c[std::size_t(i)].radius));
  };
  S e = kind[2] == TangencyKind::External ? S(c[0].radius + c[1].radius)
                                          : abs_val(S(c[0].radius - c[1].radius));
  auto centers = two_distance_points(c[0].center, dist_to(0), c[1].center, dist_to(1), e);
  GeneralizedCircle<S> circle4 = pick_by_third(centers, r4, g[2], tol);
  return {k4, circle4, branch, enclosing ? SolutionFlag::Enclosing : SolutionFlag::None};
}

template <typename S>
FourthCircleSolution<S> solve_one_line_two_circles(const std::array<GeneralizedCircle<S>, 3>& g,
                                                   Branch branch, const S& tol) {
  Circle<S> a = std::get<Circle<S>>(g[0]);
  Circle<S> b = std::get<Circle<S>>(g[1]);
  Line<S> line = std::get<Line<S>>(g[2]);
  // Point the normal toward the circles.
  if (S(dot(line.normal, a.center) - line.offset) < S(0)) {
    line.normal = {S(-line.normal.x), S(-line.normal.y)};
    line.offset = S(-line.offset);
  }
  if (S(dot(line.normal, b.center) - line.offset) < S(0)) {
    throw domain_error("circles must lie on the same side of their common tangent line");
  }
  Curvature<S> k4 = descartes_curvature<S>({S(S(1) / a.radius)}, {S(S(1) / b.radius)}, {S(0)},
                                           branch);
  bool degenerate;
  if constexpr (scalar_traits<S>::exact) {
    degenerate = scalar_traits<S>::is_zero(k4.value);
  } else {
    degenerate = std::fabs(to_double(k4.value)) <=
                 1e-12 * (1.0 / to_double(a.radius) + 1.0 / to_double(b.radius));
  }
  if (degenerate) {
    // Minus branch with equal radii: the second common tangent line.
    Line<S> second{line.normal, S(line.offset + S(2) * a.radius)};
    return {Curvature<S>{S(0)}, second, branch, SolutionFlag::DegenerateEqualRadii};
  }
  S r4 = S(S(1) / k4.value);
  // Center sits at height r4 over the line; slide along it to touch circle a.
  Vec2<S> u = rot90(line.normal);
  Vec2<S> base = S(line.offset + r4) * line.normal;
  Vec2<S> w = base - a.center;
  S uw = dot(u, w);
  S d1 = S(r4 + a.radius);
  S disc = S(uw * uw - norm2(w) + d1 * d1);
  S root = clamped_sqrt(disc, to_double(S(uw * uw + d1 * d1)));
  auto centers = std::make_pair(Vec2<S>(base + S(S(-uw) + root) * u),
                                Vec2<S>(base + S(S(-uw) - root) * u));
  GeneralizedCircle<S> circle4 = pick_by_third(centers, r4, g[1], tol);
  return {k4, circle4, branch, SolutionFlag::None};
}

template <typename S>
FourthCircleSolution<S> solve_two_parallel_lines(const std::array<GeneralizedCircle<S>, 3>& g,
                                                 Branch branch) {
  Circle<S> c = std::get<Circle<S>>(g[0]);
  Line<S> l = std::get<Line<S>>(g[1]);
  // Congruent circle, displaced one diameter along the strip.
  Vec2<S> u = rot90(l.normal);
  S step = S(S(2) * c.radius);
  Vec2<S> center = branch == Branch::Plus ? Vec2<S>(c.center + step * u)
                                          : Vec2<S>(c.center - step * u);
  return {Curvature<S>{S(S(1) / c.radius)}, Circle<S>{center, c.radius}, branch,
          SolutionFlag::None};
}

// Cascade output mapped rigidly from the arbelos frame onto the given pair of
// externally tangent circles: tangency point to the origin, centers onto the
// x axis with a on the left. Exact whenever the inputs are rational, since
// the center distance equals r_a + r_b.
template <typename S>
FamilyExtract<S> mapped_family_extract(const Circle<S>& a, const Circle<S>& b, const S& tol,
                                       int order = 8) {
  if (verify_tangency(GeneralizedCircle<S>(a), GeneralizedCircle<S>(b), tol).kind !=
      TangencyKind::External) {
    throw domain_error("point circle case needs externally tangent circles");
  }
  S e = S(a.radius + b.radius);
  Vec2<S> u{S(S(b.center.x - a.center.x) / e), S(S(b.center.y - a.center.y) / e)};
  Vec2<S> v = rot90(u);
  Vec2<S> t = a.center + a.radius * u;  // the exact mutual tangency point

  auto extract = dbz_family_extract(ArbelosConfig<S>(a.radius, b.radius), order);
  auto map_circle = [&](const GeneralizedCircle<S>& g) -> GeneralizedCircle<S> {
    const auto& c = std::get<Circle<S>>(g);
    return Circle<S>{t + c.center.x * u + c.center.y * v, c.radius};
  };
  return {PointCircle<S>{t}, map_circle(extract.bankoff), map_circle(extract.incircle)};
}

template <typename S>
FourthCircleSolution<S> solve_one_point_two_circles(const std::array<GeneralizedCircle<S>, 3>& g,
                                                    Branch branch, const S& tol) {
  auto mapped = mapped_family_extract(std::get<Circle<S>>(g[0]), std::get<Circle<S>>(g[1]), tol);
  Circle<S> bank = std::get<Circle<S>>(mapped.bankoff);
  return {Curvature<S>{S(S(1) / bank.radius)}, bank, branch, SolutionFlag::DbzBankoff};
}

}  // namespace detail

// Full division-by-zero-calculus output for the OnePointTwoCircles class —
// the extracted point circle, Bankoff circle and incircle, mapped into the
// frame of the two input circles.
template <typename S>
FamilyExtract<S> point_case_family_extract(const GeneralizedCircle<S>& c1,
                                           const GeneralizedCircle<S>& c2,
                                           const GeneralizedCircle<S>& c3,
                                           const S& tol = S(default_tolerance), int order = 8) {
  if (classify(c1, c2, c3, tol) != ConfigurationClass::OnePointTwoCircles) {
    throw domain_error("expected one point circle and two circles");
  }
  std::array<GeneralizedCircle<S>, 3> g{c1, c2, c3};
  detail::canonical_sort(g);
  return detail::mapped_family_extract(std::get<Circle<S>>(g[0]), std::get<Circle<S>>(g[1]), tol,
                                       order);
}

// Fourth tangent circle for a mutually tangent triple of generalized
// circles. Lines and point circles enter the curvature identity as 0; the
// degenerate classes return their closed-form objects:
//   TwoParallelLinesOneCircle — a congruent circle (branch picks the side),
//   TwoPointsOneCircle        — the input circle itself,
//   ThreePoints               — the common point,
//   ThreeLines                — the point circle at the origin (the paper's
//                               zero stand-in for the point at infinity),
//   OnePointTwoCircles        — the Bankoff circle of the two-circle arbelos,
//                               via the division by zero calculus cascade.
template <typename S>
FourthCircleSolution<S> solve_fourth(const GeneralizedCircle<S>& c1, const GeneralizedCircle<S>& c2,
                                     const GeneralizedCircle<S>& c3, Branch branch,
                                     const S& tol = S(default_tolerance)) {
  ConfigurationClass cls = classify(c1, c2, c3, tol);
  std::array<GeneralizedCircle<S>, 3> g{c1, c2, c3};
  detail::canonical_sort(g);
  switch (cls) {
    case ConfigurationClass::ThreeCircles:
      return detail::solve_three_circles(g, branch, tol);
    case ConfigurationClass::OneLineTwoCircles:
      return detail::solve_one_line_two_circles(g, branch, tol);
    case ConfigurationClass::TwoParallelLinesOneCircle:
      return detail::solve_two_parallel_lines(g, branch);
    case ConfigurationClass::OnePointTwoCircles:
      return detail::solve_one_point_two_circles(g, branch, tol);
    case ConfigurationClass::TwoPointsOneCircle:
      return {curvature(g[0]), g[0], branch, SolutionFlag::None};
    case ConfigurationClass::ThreePoints:
      return {Curvature<S>{S(0)}, g[0], branch, SolutionFlag::None};
    default:  // ThreeLines
      return {Curvature<S>{S(0)}, PointCircle<S>{{S(0), S(0)}}, branch, SolutionFlag::None};
  }
}

}  // namespace soddy
