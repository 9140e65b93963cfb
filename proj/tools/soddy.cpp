// soddy — fourth tangent circle solver for generalized circles.
//
// Subcommands:
//   solve     read a 3-circle scene, emit the fourth circle with oracle residuals
//   classify  report the configuration class of a scene
//   verify    run the tangency oracle over every pair in a scene
//   family    sample the two-circle tangent family at given w parameters
//   render    write an SVG of a named figure (fig1|fig2|fig3) or a scene
//
// Exit codes: 0 ok, 2 not mutually tangent, 3 no real solution / vanishing
// denominator, 4 malformed input, 5 I/O failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "soddy/soddy.hpp"

namespace {

using soddy::json;

constexpr int kExitOk = 0;
constexpr int kExitNotTangent = 2;
constexpr int kExitNoSolution = 3;
constexpr int kExitBadInput = 4;
constexpr int kExitIo = 5;

struct CommonOpts {
  std::string in = "-";
  std::string branch = "plus";
  std::string mode = "float";
  double tol = soddy::default_tolerance;
  int order = 8;
  bool branch_set = false, mode_set = false, tol_set = false, order_set = false;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw std::ios_base::failure("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw soddy::domain_error("input is not valid JSON");
  return j;
}

// Scene options fill in whatever the command line left at its default.
void merge_scene_options(const json& scene, CommonOpts& o) {
  if (!scene.is_object() || !scene.contains("options")) return;
  const json& opt = scene["options"];
  if (!opt.is_object()) throw soddy::domain_error("scene \"options\" must be an object");
  if (!o.branch_set && opt.contains("branch")) o.branch = opt["branch"].get<std::string>();
  if (!o.mode_set && opt.contains("mode")) o.mode = opt["mode"].get<std::string>();
  if (!o.tol_set && opt.contains("tol")) o.tol = opt["tol"].get<double>();
  if (!o.order_set && opt.contains("order")) o.order = opt["order"].get<int>();
}

soddy::Branch parse_branch(const std::string& s) {
  if (s == "plus") return soddy::Branch::Plus;
  if (s == "minus") return soddy::Branch::Minus;
  throw soddy::domain_error("branch must be \"plus\" or \"minus\"");
}

void check_mode(const std::string& s) {
  if (s != "float" && s != "exact") throw soddy::domain_error("mode must be \"float\" or \"exact\"");
}

template <typename S>
std::vector<soddy::GeneralizedCircle<S>> parse_circles(const json& scene, std::size_t min_count,
                                                       std::size_t max_count) {
  const json* arr = nullptr;
  if (scene.is_array()) arr = &scene;
  else if (scene.is_object() && scene.contains("circles")) arr = &scene["circles"];
  if (!arr || !arr->is_array()) {
    throw soddy::domain_error("scene must be a JSON array of circles or {\"circles\": [...]}");
  }
  if (arr->size() < min_count || arr->size() > max_count) {
    throw soddy::domain_error("scene needs between " + std::to_string(min_count) + " and " +
                              std::to_string(max_count) + " circles, got " +
                              std::to_string(arr->size()));
  }
  std::vector<soddy::GeneralizedCircle<S>> out;
  for (const auto& item : *arr) out.push_back(soddy::circle_from_json<S>(item));
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

template <typename S>
double radius_of(const soddy::GeneralizedCircle<S>& g) {
  if (const auto* c = std::get_if<soddy::Circle<S>>(&g)) return soddy::to_double(c->radius);
  return 0.0;  // lines and point circles carry r = 0
}

template <typename S>
int run_solve(const json& scene, const CommonOpts& o) {
  auto circles = parse_circles<S>(scene, 3, 3);
  S tol(o.tol);
  soddy::Branch branch = parse_branch(o.branch);
  auto cls = soddy::classify(circles[0], circles[1], circles[2], tol);
  auto sol = soddy::solve_fourth(circles[0], circles[1], circles[2], branch, tol);

  json out;
  out["class"] = soddy::to_string(cls);
  out["branch"] = soddy::to_string(sol.branch);
  out["flag"] = soddy::to_string(sol.flag);
  out["curvature4"] = soddy::number_to_json(sol.curvature4.value);
  out["r4"] = soddy::round15(radius_of(sol.circle4));
  out["circle4"] = soddy::to_json(sol.circle4);
  json residuals = json::array();
  for (const auto& c : circles) {
    residuals.push_back(soddy::round15(soddy::verify_tangency(sol.circle4, c, tol).residual));
  }
  out["residuals"] = residuals;
  if constexpr (soddy::scalar_traits<S>::exact) {
    out["rational"] = {{"curvature4", soddy::scalar_traits<S>::str(sol.curvature4.value)}};
  }
  if (cls == soddy::ConfigurationClass::OnePointTwoCircles) {
    auto extract =
        soddy::point_case_family_extract(circles[0], circles[1], circles[2], tol, o.order);
    out["point"] = soddy::to_json(extract.point);
    out["bankoff"] = soddy::to_json(extract.bankoff);
    out["incircle"] = soddy::to_json(extract.incircle);
  }
  emit(out);
  return kExitOk;
}

template <typename S>
int run_classify(const json& scene, const CommonOpts& o) {
  auto circles = parse_circles<S>(scene, 3, 3);
  S tol(o.tol);
  json out;
  out["class"] = soddy::to_string(soddy::classify(circles[0], circles[1], circles[2], tol));
  emit(out);
  return kExitOk;
}

template <typename S>
int run_verify(const json& scene, const CommonOpts& o) {
  auto circles = parse_circles<S>(scene, 2, 64);
  S tol(o.tol);
  json pairs = json::array();
  bool all = true;
  for (std::size_t i = 0; i < circles.size(); ++i) {
    for (std::size_t j = i + 1; j < circles.size(); ++j) {
      auto rep = soddy::verify_tangency(circles[i], circles[j], tol);
      all = all && rep.kind != soddy::TangencyKind::NotTangent;
      pairs.push_back({{"i", i},
                       {"j", j},
                       {"kind", soddy::to_string(rep.kind)},
                       {"residual", soddy::round15(rep.residual)}});
    }
  }
  json out;
  out["pairs"] = pairs;
  out["mutually_tangent"] = all;
  emit(out);
  return kExitOk;
}

template <typename S>
int run_family(const std::string& r1s, const std::string& r2s, const std::string& wlist,
               const CommonOpts& o) {
  S r1 = soddy::scalar_traits<S>::parse(r1s);
  S r2 = soddy::scalar_traits<S>::parse(r2s);
  soddy::ArbelosConfig<S> cfg(r1, r2);
  S tol(o.tol);

  std::vector<S> ws;
  std::stringstream ss(wlist);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) ws.push_back(soddy::scalar_traits<S>::parse(tok));
  }
  if (ws.empty()) throw soddy::domain_error("--w needs at least one value");

  bool failed = false;
  json out = json::array();
  for (const S& w : ws) {
    json item;
    item["w"] = soddy::number_to_json(w);
    try {
      auto member = soddy::family_member(w, cfg);
      item["x4"] = soddy::number_to_json(member.x4);
      item["y4"] = soddy::number_to_json(member.y4);
      item["r4"] = soddy::number_to_json(member.r4);
      item["D"] = soddy::number_to_json(member.D);
      if constexpr (soddy::scalar_traits<S>::exact) {
        using T = soddy::scalar_traits<S>;
        item["rational"] = {{"x4", T::str(member.x4)},
                            {"y4", T::str(member.y4)},
                            {"r4", T::str(member.r4)},
                            {"D", T::str(member.D)}};
      }
      auto circle = member.to_circle();
      json residuals = json::array();
      residuals.push_back(soddy::round15(
          soddy::verify_tangency(circle, soddy::GeneralizedCircle<S>(cfg.circle1()), tol).residual));
      residuals.push_back(soddy::round15(
          soddy::verify_tangency(circle, soddy::GeneralizedCircle<S>(cfg.circle2()), tol).residual));
      if (!soddy::scalar_traits<S>::is_zero(w) && w != S(1) && w != S(-1)) {
        auto host = soddy::ow_circle(S(S(1) / w), cfg);
        residuals.push_back(soddy::round15(soddy::verify_tangency(circle, host, tol).residual));
      }
      item["residuals"] = residuals;
    } catch (const soddy::error& e) {
      item["error"] = e.what();
      failed = true;
    }
    out.push_back(item);
  }
  emit(out);
  return failed ? kExitNoSolution : kExitOk;
}

int run_render(const std::string& figure, const std::string& in, const std::string& out_path,
               const std::string& r1s, const std::string& r2s, const CommonOpts& o) {
  std::string svg_text;
  if (!figure.empty()) {
    double r1 = r1s.empty() ? soddy::svg::figure_default_r1(figure)
                            : soddy::scalar_traits<double>::parse(r1s);
    double r2 = r2s.empty() ? soddy::svg::figure_default_r2(figure)
                            : soddy::scalar_traits<double>::parse(r2s);
    if (!(r1 > 0) || !(r2 > 0)) throw soddy::domain_error("figure radii must be > 0");
    svg_text = soddy::svg::render_figure(figure, r1, r2);
  } else {
    json scene = parse_json(slurp(in));
    CommonOpts merged = o;
    merge_scene_options(scene, merged);
    auto circles = parse_circles<double>(scene, 1, 64);
    svg_text = soddy::svg::render_scene(circles);
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot open output file: " + out_path);
  f << svg_text;
  f.flush();
  if (!f) throw std::ios_base::failure("failed writing output file: " + out_path);
  return kExitOk;
}

template <int (*FloatRun)(const json&, const CommonOpts&),
          int (*ExactRun)(const json&, const CommonOpts&)>
int run_scene_command(CommonOpts& o) {
  json scene = parse_json(slurp(o.in));
  merge_scene_options(scene, o);
  check_mode(o.mode);
  parse_branch(o.branch);
  if (!(o.tol > 0)) throw soddy::domain_error("tolerance must be > 0");
  return o.mode == "exact" ? ExactRun(scene, o) : FloatRun(scene, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fourth tangent circle solver for circles, lines and point circles"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string r1s, r2s, wlist, figure, out_path;

  auto add_common = [&](CLI::App* cmd, bool with_branch) {
    cmd->add_option("--in", opts.in, "scene JSON path, - for stdin");
    auto* m = cmd->add_option("--mode", opts.mode, "float|exact (default float)");
    auto* t = cmd->add_option("--tol", opts.tol, "tangency tolerance (default 1e-9)");
    auto* ord = cmd->add_option("--order", opts.order, "series truncation order (default 8)");
    m->each([&](const std::string&) { opts.mode_set = true; });
    t->each([&](const std::string&) { opts.tol_set = true; });
    ord->each([&](const std::string&) { opts.order_set = true; });
    if (with_branch) {
      auto* b = cmd->add_option("--branch", opts.branch, "plus|minus (default plus)");
      b->each([&](const std::string&) { opts.branch_set = true; });
    }
  };

  CLI::App* solve = app.add_subcommand("solve", "solve for the fourth tangent circle");
  add_common(solve, true);
  CLI::App* classify = app.add_subcommand("classify", "classify a three-circle configuration");
  add_common(classify, false);
  CLI::App* verify = app.add_subcommand("verify", "tangency oracle over all pairs");
  add_common(verify, false);

  CLI::App* family = app.add_subcommand("family", "sample the tangent-circle family");
  family->add_option("--r1", r1s, "left radius")->required();
  family->add_option("--r2", r2s, "right radius")->required();
  family->add_option("--w", wlist, "comma separated w values")->required();
  add_common(family, false);

  CLI::App* render = app.add_subcommand("render", "write an SVG figure or scene");
  render->add_option("--figure", figure, "fig1|fig2|fig3");
  render->add_option("--r1", r1s, "first radius (figure mode)");
  render->add_option("--r2", r2s, "second radius (figure mode)");
  render->add_option("--out", out_path, "output SVG path")->required();
  add_common(render, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (solve->parsed()) return run_scene_command<run_solve<double>, run_solve<soddy::BigRational>>(opts);
    if (classify->parsed())
      return run_scene_command<run_classify<double>, run_classify<soddy::BigRational>>(opts);
    if (verify->parsed())
      return run_scene_command<run_verify<double>, run_verify<soddy::BigRational>>(opts);
    if (family->parsed()) {
      check_mode(opts.mode);
      if (!(opts.tol > 0)) throw soddy::domain_error("tolerance must be > 0");
      return opts.mode == "exact" ? run_family<soddy::BigRational>(r1s, r2s, wlist, opts)
                                  : run_family<double>(r1s, r2s, wlist, opts);
    }
    if (render->parsed()) {
      if (figure.empty() && !render->count("--in")) {
        throw soddy::domain_error("render needs --figure or --in");
      }
      return run_render(figure, opts.in, out_path, r1s, r2s, opts);
    }
  } catch (const soddy::not_mutually_tangent& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotTangent;
  } catch (const soddy::no_real_solution& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoSolution;
  } catch (const soddy::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitBadInput;
}
