#pragma once

// The arbelos built from two externally tangent circles
//   C1: center (−r1, 0) radius r1,   C2: center (r2, 0) radius r2,
// their tangent point at the origin, and the outer circle of radius r1+r2.
//
// Provides the one-parameter family of circles touching C1 and C2, the
// w-parameterized fourth-circle family (x4, y4, r4, D), and the division by
// zero calculus cascade that extracts the origin point circle, the Bankoff
// circle, and the arbelos incircle from the family identity
// f0 + f1·w + f2·w² = 0.

#include <array>

#include "soddy/geometry.hpp"
#include "soddy/laurent.hpp"

namespace soddy {

template <typename S>
struct ArbelosConfig {
  S r1, r2;

  ArbelosConfig(S radius1, S radius2) : r1(std::move(radius1)), r2(std::move(radius2)) {
    if (!(r1 > S(0)) || !(r2 > S(0))) throw domain_error("arbelos radii must be > 0");
  }

  Circle<S> circle1() const { return {{S(-r1), S(0)}, r1}; }
  Circle<S> circle2() const { return {{r2, S(0)}, r2}; }
  // Touches C1 and C2 internally; the three arcs bound the arbelos.
  Circle<S> outer_circle() const { return {{S(r2 - r1), S(0)}, S(r1 + r2)}; }
};

// One member of the fourth-circle family. r4 keeps its sign as produced by
// the closed form: negative r4 means the member circle of radius |r4|
// encloses C1 and C2 (internal tangency), mirroring the signed-curvature
// convention.
template <typename S>
struct FamilyMember {
  S w, x4, y4, r4, D;

  GeneralizedCircle<S> to_circle() const {
    if (scalar_traits<S>::is_zero(r4)) return PointCircle<S>{{x4, y4}};
    return Circle<S>{{x4, y4}, abs_val(r4)};
  }
};

template <typename S>
struct FamilyExtract {
  GeneralizedCircle<S> point;     // f0 = 0: the origin
  GeneralizedCircle<S> bankoff;   // f1 = 0: radius r1r2/(r1+r2)
  GeneralizedCircle<S> incircle;  // f2 = 0: radius r1r2(r1+r2)/(r1²+r1r2+r2²)
};

// V_z = (0, 2√(r1r2)/z), with 1/0 = 0 so V_0 is the origin.
template <typename S>
Vec2<S> ow_vertex(const S& z, const ArbelosConfig<S>& cfg) {
  S s = domain_sqrt(S(cfg.r1 * cfg.r2));
  return {S(0), S(S(2) * s * dbz_inv(z))};
}

// The circle through V_{z−1} and V_{z+1} touching C1 and C2 (z ≠ ±1).
template <typename S>
GeneralizedCircle<S> ow_circle(const S& z, const ArbelosConfig<S>& cfg) {
  if (z == S(1) || z == S(-1)) {
    throw domain_error("tangent circle family degenerates to a line at z = ±1");
  }
  S s = domain_sqrt(S(cfg.r1 * cfg.r2));
  S denom = S(z * z - S(1));
  Vec2<S> center{S(S(cfg.r1 - cfg.r2) / denom), S(S(2) * z * s / denom)};
  S radius = S(S(cfg.r1 + cfg.r2) / abs_val(denom));
  return Circle<S>{center, radius};
}

// Fourth-circle family at parameter w (the z = 1/w substitution):
//   x4 = r1r2(r1−r2)w²/D,  y4 = 2r1r2(√(r1r2)+(r1+r2)w)w/D,
//   r4 = r1r2(r1+r2)w²/D,  D = r1r2 + 2√(r1r2)(r1+r2)w + (r1²+r1r2+r2²)w².
// At w = 0 the member collapses to the origin point circle.
template <typename S>
FamilyMember<S> family_member(const S& w, const ArbelosConfig<S>& cfg) {
  const S &r1 = cfg.r1, &r2 = cfg.r2;
  S rr = S(r1 * r2), sum = S(r1 + r2);
  S quad = S(r1 * r1 + rr + r2 * r2);
  S s = domain_sqrt(rr);
  S d = S(rr + S(2) * s * sum * w + quad * w * w);
  if (scalar_traits<S>::is_zero(d)) {
    throw domain_error("family denominator D vanishes at w = " + scalar_traits<S>::str(w));
  }
  S w2 = S(w * w);
  return {w, S(rr * S(r1 - r2) * w2 / d), S(S(2) * rr * S(s + sum * w) * w / d),
          S(rr * sum * w2 / d), d};
}

// The paper-form coefficients of f0 + f1·w + f2·w² = 0, scalar prefactors
// retained. Needs √(r1r2) in the scalar domain; for exact work with general
// rationals use dbz_family_extract, which never takes that root.
template <typename S>
std::array<CircleEquation<S>, 3> family_equation_coeffs(const ArbelosConfig<S>& cfg) {
  const S &r1 = cfg.r1, &r2 = cfg.r2;
  S rr = S(r1 * r2), sum = S(r1 + r2);
  S quad = S(r1 * r1 + rr + r2 * r2);
  S s = domain_sqrt(rr);
  CircleEquation<S> f0{rr, S(0), S(0), S(0)};
  CircleEquation<S> f1{S(S(2) * s * sum), S(0), S(S(-4) * s * rr), S(0)};
  CircleEquation<S> f2{quad, S(S(2) * rr * S(r2 - r1)), S(S(-4) * rr * sum), S(S(4) * rr * rr)};
  return {f0, f1, f2};
}

// Division by zero calculus cascade over the touching identity.
//
// Inserting x4(w), y4(w), r4(w) into (x−x4)² + (y−y4)² = r4² and clearing D²
// gives G(w) = (x²+y²)D² − 2(xX+yY)D + X²+Y²−R², and G/D = f0 + f1w + f2w².
// The three vanishing loci are read off with C_0 extraction after dividing by
// w⁰, w¹, w²; each quadratic-form component (A,B,C,D) is carried as its own
// Laurent series.
//
// Everything runs under the substitution w = 2√(r1r2)·v, in which √(r1r2)
// appears only squared, so every coefficient stays in the scalar domain for
// arbitrary rational radii. The substitution rescales f_k by (2√(r1r2))^k,
// which leaves the vanishing loci — and hence the extracted circles —
// unchanged.
template <typename S>
FamilyExtract<S> dbz_family_extract(const ArbelosConfig<S>& cfg, int order = 8) {
  if (order < 2) throw domain_error("cascade needs truncation order >= 2");
  using LS = LaurentSeries<S>;
  const S &r1 = cfg.r1, &r2 = cfg.r2;
  S rr = S(r1 * r2), sum = S(r1 + r2);
  S quad = S(r1 * r1 + rr + r2 * r2);
  S m2 = S(S(4) * rr);  // (2√(r1r2))²

  LS D(S(0), 0, {rr, S(m2 * sum), S(m2 * quad)});
  LS X = LS::monomial(S(m2 * rr * S(r1 - r2)), 2);
  LS Y(S(0), 1, {S(m2 * rr), S(S(2) * m2 * rr * sum)});
  LS R = LS::monomial(S(m2 * rr * sum), 2);

  LS ga = D * D;                                     // coefficient of x²+y²
  LS gb = S(-2) * (X * D);                           // coefficient of x
  LS gc = S(-2) * (Y * D);                           // coefficient of y
  LS gd = X * X + Y * Y - R * R;                     // constant part
  LS recipD = series_recip(D, order);

  std::array<std::array<S, 3>, 4> f;
  const LS* comps[4] = {&ga, &gb, &gc, &gd};
  for (int i = 0; i < 4; ++i) {
    LS g = series_mul(*comps[i], recipD);
    for (int k = 0; k < 3; ++k) f[std::size_t(i)][std::size_t(k)] = dbz_eval(shift_divide(g, k));
  }

  auto equation = [&](int k) {
    return CircleEquation<S>{f[0][std::size_t(k)], f[1][std::size_t(k)], f[2][std::size_t(k)],
                             f[3][std::size_t(k)]};
  };
  return {equation_to_circle(equation(0)), equation_to_circle(equation(1)),
          equation_to_circle(equation(2))};
}

// Branch choice of the touching-circle identity; C_0 is branch independent
// because the ± term carries only odd powers of ξ.
enum class XiBranch { Plus, Minus };

// Evaluate 1/r4 at r3 = 0 through the ξ = √r3 substitution:
//   1/r4 = 1/r1 + 1/r2 + 1/ξ² ± (2/ξ)·√(ξ²/(r1r2) + 1/r1 + 1/r2)
// expanded as a Laurent series in ξ and read off by C_0 extraction.
// Returns 1/r1 + 1/r2 — the Bankoff curvature.
template <typename S>
S xi_substitution_dbz(const S& radius1, const S& radius2, XiBranch branch = XiBranch::Plus,
                      int order = 8) {
  if (!(radius1 > S(0)) || !(radius2 > S(0))) throw domain_error("radii must be > 0");
  using LS = LaurentSeries<S>;
  S a = S(S(1) / radius1 + S(1) / radius2);
  S b = S(S(1) / S(radius1 * radius2));
  LS arg(S(0), 0, {a, S(0), b});
  LS root = series_sqrt(arg, order);
  LS half = shift_divide(S(2) * root, 1);
  LS expr = LS::monomial(S(1), -2) + LS::constant(a);
  expr = (branch == XiBranch::Plus) ? expr + half : expr - half;
  return dbz_eval(expr);
}

}  // namespace soddy
