#pragma once

// JSON encodings:
//   circle {"kind":"circle","center":[x,y],"radius":r}
//   line   {"kind":"line","normal":[nx,ny],"offset":d}
//   point  {"kind":"point","at":[x,y]}
// Numbers are decimal doubles rounded to 15 significant digits; the exact
// domain adds "rational" fields carrying "p/q" strings, which take precedence
// when parsing in exact mode.

#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"
#include "soddy/geometry.hpp"
#include "soddy/laurent.hpp"

namespace soddy {

using json = nlohmann::json;

// Round through 15 significant digits so emitted JSON is platform stable.
inline double round15(double v) {
  if (v == 0.0) return 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return std::strtod(buf, nullptr);
}

template <typename S>
json number_to_json(const S& v) {
  return round15(to_double(v));
}

template <typename S>
S number_from_json(const json& j) {
  if (!j.is_number()) throw domain_error("expected a JSON number");
  return S(j.get<double>());
}

template <>
inline BigRational number_from_json<BigRational>(const json& j) {
  if (j.is_string()) return scalar_traits<BigRational>::parse(j.get<std::string>());
  if (!j.is_number()) throw domain_error("expected a JSON number");
  return BigRational(j.get<double>());
}

namespace detail {

template <typename S>
Vec2<S> vec_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw domain_error("expected a [x, y] pair");
  return {number_from_json<S>(j[0]), number_from_json<S>(j[1])};
}

template <typename S>
json vec_to_json(const Vec2<S>& v) {
  return json::array({number_to_json(v.x), number_to_json(v.y)});
}

inline json rational_vec(const Vec2<BigRational>& v) {
  using T = scalar_traits<BigRational>;
  return json::array({T::str(v.x), T::str(v.y)});
}

}  // namespace detail

template <typename S>
json to_json(const GeneralizedCircle<S>& g) {
  json out;
  if (const auto* c = std::get_if<Circle<S>>(&g)) {
    out["kind"] = "circle";
    out["center"] = detail::vec_to_json(c->center);
    out["radius"] = number_to_json(c->radius);
  } else if (const auto* l = std::get_if<Line<S>>(&g)) {
    out["kind"] = "line";
    out["normal"] = detail::vec_to_json(l->normal);
    out["offset"] = number_to_json(l->offset);
  } else {
    const auto& p = std::get<PointCircle<S>>(g);
    out["kind"] = "point";
    out["at"] = detail::vec_to_json(p.at);
  }
  if constexpr (scalar_traits<S>::exact) {
    using T = scalar_traits<BigRational>;
    json rat;
    if (const auto* c = std::get_if<Circle<S>>(&g)) {
      rat["center"] = detail::rational_vec(c->center);
      rat["radius"] = T::str(c->radius);
    } else if (const auto* l = std::get_if<Line<S>>(&g)) {
      rat["normal"] = detail::rational_vec(l->normal);
      rat["offset"] = T::str(l->offset);
    } else {
      rat["at"] = detail::rational_vec(std::get<PointCircle<S>>(g).at);
    }
    out["rational"] = rat;
  }
  return out;
}

template <typename S>
GeneralizedCircle<S> circle_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw domain_error("generalized circle needs a \"kind\" field");
  }
  std::string kind = j["kind"].get<std::string>();
  const json* src = &j;
  json merged;
  if constexpr (scalar_traits<S>::exact) {
    if (j.contains("rational") && j["rational"].is_object()) {
      merged = j;
      for (auto& [key, value] : j["rational"].items()) merged[key] = value;
      src = &merged;
    }
  }
  auto field = [&](const char* name) -> const json& {
    if (!src->contains(name)) throw domain_error(std::string("missing field \"") + name + "\"");
    return (*src)[name];
  };
  if (kind == "circle") {
    return make_circle(detail::vec_from_json<S>(field("center")),
                       number_from_json<S>(field("radius")));
  }
  if (kind == "line") {
    return make_line(detail::vec_from_json<S>(field("normal")),
                     number_from_json<S>(field("offset")));
  }
  if (kind == "point") return make_point(detail::vec_from_json<S>(field("at")));
  throw domain_error("unknown circle kind \"" + kind + "\"");
}

// Test-fixture form of a series: [{"n":exponent,"c":coefficient}, ...].
template <typename S>
json to_json(const LaurentSeries<S>& p) {
  json out = json::array();
  for (int n = p.n_min(); n <= p.n_max(); ++n) {
    S c = p.coeff(n);
    if (scalar_traits<S>::is_zero(c)) continue;
    json term;
    term["n"] = n;
    term["c"] = number_to_json(c);
    if constexpr (scalar_traits<S>::exact) term["rational"] = scalar_traits<S>::str(c);
    out.push_back(term);
  }
  return out;
}

template <typename S>
LaurentSeries<S> series_from_json(const json& j, S center = S(0)) {
  if (!j.is_array()) throw domain_error("series JSON must be an array of {n, c} terms");
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& term : j) {
    int n = term.at("n").get<int>();
    lo = first ? n : std::min(lo, n);
    hi = first ? n : std::max(hi, n);
    first = false;
  }
  if (first) return LaurentSeries<S>::zero(center);
  std::vector<S> coeffs(std::size_t(hi - lo + 1), S(0));
  for (const auto& term : j) {
    int n = term.at("n").get<int>();
    S c = S(0);
    if constexpr (scalar_traits<S>::exact) {
      if (term.contains("rational")) {
        c = scalar_traits<S>::parse(term["rational"].get<std::string>());
      } else {
        c = number_from_json<S>(term.at("c"));
      }
    } else {
      c = number_from_json<S>(term.at("c"));
    }
    coeffs[std::size_t(n - lo)] = S(coeffs[std::size_t(n - lo)] + c);
  }
  return LaurentSeries<S>(center, lo, std::move(coeffs));
}

}  // namespace soddy
