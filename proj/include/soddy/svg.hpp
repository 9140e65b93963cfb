#pragma once

// Minimal deterministic SVG writer plus the three stock figures:
//   fig1 — two circles on a tangent line with the plus-branch incircle,
//   fig2 — the same with the minus-branch second circle,
//   fig3 — the arbelos with the Bankoff circle (red) and incircle (green).
// Model coordinates are y-up; emission flips y. Output is a pure function of
// the input, byte-identical across runs.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "soddy/descartes.hpp"

namespace soddy::svg {

inline std::string fmt(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct Style {
  std::string stroke = "black";
  std::string fill = "none";
  double width = 0.0;  // 0: use the document default
};

class Document {
 public:
  void add_circle(double cx, double cy, double r, const Style& style = {}) {
    grow(cx - r, cy - r);
    grow(cx + r, cy + r);
    body_ += "  <circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(-cy) + "\" r=\"" + fmt(r) + "\"" +
             attrs(style) + "/>\n";
  }

  void add_dot(double cx, double cy, double r, const Style& style = {"black", "black", 0.0}) {
    grow(cx - r, cy - r);
    grow(cx + r, cy + r);
    body_ += "  <circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(-cy) + "\" r=\"" + fmt(r) + "\"" +
             attrs(style) + "/>\n";
  }

  void add_segment(double x1, double y1, double x2, double y2, const Style& style = {}) {
    grow(x1, y1);
    grow(x2, y2);
    segment_markup(x1, y1, x2, y2, style);
  }

  // Infinite line drawn across the current bounds without growing them
  // (draw it after the circles).
  void add_line(const Line<double>& l, const Style& style = {}) {
    double ux = -l.normal.y, uy = l.normal.x;
    double px = l.offset * l.normal.x, py = l.offset * l.normal.y;
    double span = std::max(xmax_ - xmin_, ymax_ - ymin_);
    if (span <= 0) span = 2;
    // Re-center the parameterization near the bounds so the stroke covers them.
    double cx = 0.5 * (xmin_ + xmax_), cy = 0.5 * (ymin_ + ymax_);
    double t0 = (cx - px) * ux + (cy - py) * uy;
    segment_markup(px + (t0 - 1.2 * span) * ux, py + (t0 - 1.2 * span) * uy,
                   px + (t0 + 1.2 * span) * ux, py + (t0 + 1.2 * span) * uy, style);
  }

  std::string render() const {
    double pad = 0.08 * std::max(xmax_ - xmin_, ymax_ - ymin_);
    if (!(pad > 0)) pad = 1;
    double x0 = xmin_ - pad, y0 = -(ymax_ + pad);
    double w = (xmax_ - xmin_) + 2 * pad, h = (ymax_ - ymin_) + 2 * pad;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
                      fmt(x0) + " " + fmt(y0) + " " + fmt(w) + " " + fmt(h) +
                      "\" width=\"640\" height=\"" + fmt(std::round(640 * h / w)) + "\">\n" +
                      "  <g fill=\"none\" stroke=\"black\" stroke-width=\"" +
                      fmt(default_width()) + "\">\n";
    // Body lines are indented for the group wrapper.
    std::string indented;
    for (std::size_t i = 0; i < body_.size(); ++i) {
      if (i == 0 || body_[i - 1] == '\n') indented += "  ";
      indented += body_[i];
    }
    return out + indented + "  </g>\n</svg>\n";
  }

 private:
  std::string body_;
  double xmin_ = 0, xmax_ = 0, ymin_ = 0, ymax_ = 0;
  bool seen_ = false;

  double default_width() const {
    double span = std::max(xmax_ - xmin_, ymax_ - ymin_);
    return span > 0 ? 0.008 * span : 0.02;
  }

  void grow(double x, double y) {
    if (!seen_) {
      xmin_ = xmax_ = x;
      ymin_ = ymax_ = y;
      seen_ = true;
      return;
    }
    xmin_ = std::min(xmin_, x);
    xmax_ = std::max(xmax_, x);
    ymin_ = std::min(ymin_, y);
    ymax_ = std::max(ymax_, y);
  }

  void segment_markup(double x1, double y1, double x2, double y2, const Style& style) {
    body_ += "  <line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(-y1) + "\" x2=\"" + fmt(x2) + "\" y2=\"" +
             fmt(-y2) + "\"" + attrs(style) + "/>\n";
  }

  static std::string attrs(const Style& s) {
    std::string a;
    if (s.stroke != "black") a += " stroke=\"" + s.stroke + "\"";
    if (s.fill != "none") a += " fill=\"" + s.fill + "\"";
    if (s.width > 0) a += " stroke-width=\"" + fmt(s.width) + "\"";
    return a;
  }
};

inline void add_generalized(Document& doc, const GeneralizedCircle<double>& g,
                            const Style& style = {}, double dot_radius = 0.03) {
  if (const auto* c = std::get_if<Circle<double>>(&g)) {
    doc.add_circle(c->center.x, c->center.y, c->radius, style);
  } else if (const auto* l = std::get_if<Line<double>>(&g)) {
    doc.add_line(*l, style);
  } else {
    const auto& p = std::get<PointCircle<double>>(g);
    doc.add_dot(p.at.x, p.at.y, dot_radius, {style.stroke, style.stroke, style.width});
  }
}

inline std::string render_scene(const std::vector<GeneralizedCircle<double>>& circles) {
  Document doc;
  for (const auto& g : circles) {
    if (!std::holds_alternative<Line<double>>(g)) add_generalized(doc, g);
  }
  for (const auto& g : circles) {
    if (std::holds_alternative<Line<double>>(g)) add_generalized(doc, g);
  }
  return doc.render();
}

// Two circles resting on a common tangent line, plus the solver's fourth
// circle: plus branch for fig1 (the incircle of the curvilinear triangle),
// minus branch for fig2 (the second, larger tangent circle).
inline std::string render_line_case_figure(double r1, double r2, Branch branch) {
  GeneralizedCircle<double> c1 = make_circle<double>({0.0, r1}, r1);
  GeneralizedCircle<double> c2 = make_circle<double>({2 * std::sqrt(r1 * r2), r2}, r2);
  GeneralizedCircle<double> line = make_line<double>({0.0, 1.0}, 0.0);
  auto sol = solve_fourth(c1, c2, line, branch);
  Document doc;
  add_generalized(doc, c1);
  add_generalized(doc, c2);
  add_generalized(doc, sol.circle4, {"red"});
  add_generalized(doc, line);
  return doc.render();
}

// The arbelos figure: the extracted point circle, the Bankoff circle (red),
// and the incircle (green) inside the three arbelos arcs.
inline std::string render_arbelos_figure(double r1, double r2) {
  ArbelosConfig<double> cfg(r1, r2);
  auto extract = dbz_family_extract(cfg);
  Document doc;
  Circle<double> a = cfg.circle1(), b = cfg.circle2(), outer = cfg.outer_circle();
  doc.add_circle(a.center.x, a.center.y, a.radius);
  doc.add_circle(b.center.x, b.center.y, b.radius);
  doc.add_circle(outer.center.x, outer.center.y, outer.radius);
  add_generalized(doc, extract.bankoff, {"red"});
  add_generalized(doc, extract.incircle, {"green"});
  add_generalized(doc, extract.point, {"black"}, 0.02 * (r1 + r2));
  return doc.render();
}

inline std::string render_figure(const std::string& name, double r1, double r2) {
  if (name == "fig1") return render_line_case_figure(r1, r2, Branch::Plus);
  if (name == "fig2") return render_line_case_figure(r1, r2, Branch::Minus);
  if (name == "fig3") return render_arbelos_figure(r1, r2);
  throw domain_error("unknown figure \"" + name + "\" (expected fig1, fig2 or fig3)");
}

inline double figure_default_r1(const std::string& name) { return name == "fig3" ? 2.0 : 4.0; }
inline double figure_default_r2(const std::string&) { return 1.0; }

}  // namespace soddy::svg
