#pragma once

// Truncated Laurent series f(z) = Σ C_n (z−a)^n over a scalar domain, and the
// division by zero calculus: the value of f at its singular point a is C_0,
// and the k-th derivative there is k!·C_k.
//
// A series either is exact (every coefficient outside the stored window is
// known to be zero) or carries a truncation order t: coefficients above t are
// unknown, i.e. the series is trusted only as ... + O(w^{t+1}). Arithmetic
// propagates the tightest order; asking for a coefficient beyond it throws.

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "soddy/scalar.hpp"

namespace soddy {

template <typename S>
class LaurentSeries {
 public:
  LaurentSeries() : LaurentSeries(S(0), 0, {S(0)}) {}

  LaurentSeries(S center, int n_min, std::vector<S> coeffs,
                std::optional<int> truncation = std::nullopt)
      : center_(std::move(center)), nmin_(n_min), c_(std::move(coeffs)), trunc_(truncation) {
    if (c_.empty()) c_.push_back(S(0));
    normalize();
  }

  static LaurentSeries zero(S center = S(0)) { return LaurentSeries(std::move(center), 0, {S(0)}); }
  static LaurentSeries constant(S value, S center = S(0)) {
    return LaurentSeries(std::move(center), 0, {std::move(value)});
  }
  static LaurentSeries monomial(S coeff, int exponent, S center = S(0)) {
    return LaurentSeries(std::move(center), exponent, {std::move(coeff)});
  }

  const S& center() const { return center_; }
  int n_min() const { return nmin_; }
  int n_max() const { return nmin_ + int(c_.size()) - 1; }
  std::optional<int> truncation() const { return trunc_; }
  bool is_exact() const { return !trunc_.has_value(); }

  bool is_zero() const {
    for (const S& v : c_)
      if (!scalar_traits<S>::is_zero(v)) return false;
    return true;
  }

  // Is the coefficient at exponent n determined by this series?
  bool knows(int n) const { return !trunc_ || n <= *trunc_; }

  S coeff(int n) const {
    if (!knows(n)) {
      throw domain_error("series coefficient C_" + std::to_string(n) +
                         " lies beyond truncation order " + std::to_string(*trunc_));
    }
    if (n < nmin_ || n > n_max()) return S(0);
    return c_[std::size_t(n - nmin_)];
  }

  bool cancellation_flagged() const { return cancel_; }

  std::string str() const;
  static LaurentSeries parse(const std::string& text, S center = S(0));

  template <typename T>
  friend LaurentSeries<T> series_add(const LaurentSeries<T>&, const LaurentSeries<T>&);
  template <typename T>
  friend LaurentSeries<T> series_mul(const LaurentSeries<T>&, const LaurentSeries<T>&);
  template <typename T>
  friend LaurentSeries<T> series_recip(const LaurentSeries<T>&, int);
  template <typename T>
  friend LaurentSeries<T> series_sqrt(const LaurentSeries<T>&, int);
  template <typename T>
  friend LaurentSeries<T> shift_divide(const LaurentSeries<T>&, int);

 private:
  static constexpr long long kInf = 1LL << 40;

  S center_{};
  int nmin_ = 0;
  std::vector<S> c_;
  std::optional<int> trunc_;
  bool cancel_ = false;

  long long order_or_inf() const { return trunc_ ? *trunc_ : kInf; }

  // Leading exponent for truncation bookkeeping; a truncated zero series has
  // no visible leading term before t+1.
  long long effective_lead() const {
    if (!is_zero()) return nmin_;
    return trunc_ ? *trunc_ + 1 : kInf;
  }

  void normalize() {
    if (trunc_) {
      long long last = *trunc_;
      if (nmin_ > last) {
        c_.assign(1, S(0));
        nmin_ = 0;
      } else if (n_max() > last) {
        c_.resize(std::size_t(last - nmin_ + 1));
      }
    }
    std::size_t lo = 0, hi = c_.size();
    if constexpr (scalar_traits<S>::exact) {
      while (lo < hi && scalar_traits<S>::is_zero(c_[lo])) ++lo;
      while (hi > lo && scalar_traits<S>::is_zero(c_[hi - 1])) --hi;
    } else {
      double maxabs = 0;
      for (const S& v : c_) maxabs = std::max(maxabs, std::fabs(to_double(v)));
      double cut = 1e-14 * maxabs;
      auto negligible = [&](const S& v) { return std::fabs(to_double(v)) <= cut; };
      if (maxabs == 0) {
        lo = hi;
      } else {
        while (lo < hi && negligible(c_[lo])) ++lo;
        while (hi > lo && negligible(c_[hi - 1])) --hi;
      }
    }
    if (lo == hi) {
      c_.assign(1, S(0));
      nmin_ = 0;
      return;
    }
    if (lo > 0 || hi < c_.size()) {
      c_ = std::vector<S>(c_.begin() + long(lo), c_.begin() + long(hi));
      nmin_ += int(lo);
    }
  }
};

template <typename S>
LaurentSeries<S> series_add(const LaurentSeries<S>& p, const LaurentSeries<S>& q) {
  if (!(p.center_ == q.center_)) throw domain_error("series centers differ");
  long long t = std::min(p.order_or_inf(), q.order_or_inf());
  int lo = std::min(p.nmin_, q.nmin_);
  int hi = std::max(p.n_max(), q.n_max());
  if (hi > t) hi = int(t);
  if (hi < lo) {
    LaurentSeries<S> r = LaurentSeries<S>::zero(p.center_);
    r.trunc_ = int(t);
    r.cancel_ = p.cancel_ || q.cancel_;
    return r;
  }
  std::vector<S> out(std::size_t(hi - lo + 1), S(0));
  bool flagged = p.cancel_ || q.cancel_;
  for (int n = lo; n <= hi; ++n) {
    S a = (n >= p.nmin_ && n <= p.n_max()) ? p.c_[std::size_t(n - p.nmin_)] : S(0);
    S b = (n >= q.nmin_ && n <= q.n_max()) ? q.c_[std::size_t(n - q.nmin_)] : S(0);
    S sum = S(a + b);
    if constexpr (!scalar_traits<S>::exact) {
      double da = std::fabs(to_double(a)), db = std::fabs(to_double(b));
      double ds = std::fabs(to_double(sum));
      if (da > 0 && db > 0 && ds > 0 && ds * 1e12 < da + db) flagged = true;
    }
    out[std::size_t(n - lo)] = std::move(sum);
  }
  LaurentSeries<S> r(p.center_, lo, std::move(out),
                     t >= LaurentSeries<S>::kInf ? std::nullopt : std::optional<int>(int(t)));
  r.cancel_ = flagged;
  return r;
}

template <typename S>
LaurentSeries<S> series_negate(const LaurentSeries<S>& p) {
  return series_mul(p, LaurentSeries<S>::constant(S(-1), p.center()));
}

template <typename S>
LaurentSeries<S> series_sub(const LaurentSeries<S>& p, const LaurentSeries<S>& q) {
  return series_add(p, series_negate(q));
}

template <typename S>
LaurentSeries<S> series_mul(const LaurentSeries<S>& p, const LaurentSeries<S>& q) {
  if (!(p.center_ == q.center_)) throw domain_error("series centers differ");
  // Orders beyond kInf/2 only arise from the exact sentinel; treat them as exact.
  const long long exact_cut = LaurentSeries<S>::kInf / 2;
  long long t = std::min(p.order_or_inf() + q.effective_lead(),
                         q.order_or_inf() + p.effective_lead());
  bool flagged = p.cancel_ || q.cancel_;
  if (p.is_zero() || q.is_zero()) {
    LaurentSeries<S> r = LaurentSeries<S>::zero(p.center_);
    if (t < exact_cut) r.trunc_ = int(t);
    r.cancel_ = flagged;
    return r;
  }
  int lo = p.nmin_ + q.nmin_;
  long long hi = (long long)p.n_max() + q.n_max();
  if (hi > t) hi = t;
  if (hi < lo) {
    LaurentSeries<S> r = LaurentSeries<S>::zero(p.center_);
    if (t < exact_cut) r.trunc_ = int(t);
    r.cancel_ = flagged;
    return r;
  }
  std::vector<S> out(std::size_t(hi - lo + 1), S(0));
  std::vector<double> sumabs;
  if constexpr (!scalar_traits<S>::exact) sumabs.assign(out.size(), 0.0);
  for (std::size_t i = 0; i < p.c_.size(); ++i) {
    for (std::size_t j = 0; j < q.c_.size(); ++j) {
      long long n = (long long)p.nmin_ + int(i) + q.nmin_ + int(j);
      if (n < lo || n > hi) continue;
      S term = S(p.c_[i] * q.c_[j]);
      std::size_t k = std::size_t(n - lo);
      if constexpr (!scalar_traits<S>::exact) sumabs[k] += std::fabs(to_double(term));
      out[k] = S(out[k] + term);
    }
  }
  if constexpr (!scalar_traits<S>::exact) {
    for (std::size_t k = 0; k < out.size(); ++k) {
      double ds = std::fabs(to_double(out[k]));
      if (ds > 0 && ds * 1e12 < sumabs[k]) flagged = true;
    }
  }
  LaurentSeries<S> r(p.center_, lo, std::move(out),
                     t >= exact_cut ? std::nullopt : std::optional<int>(int(t)));
  r.cancel_ = flagged;
  return r;
}

// q with p·q = 1 + O(w^{lead+order+1}); q covers exponents [−m, −m+order]
// where m is p's leading exponent.
template <typename S>
LaurentSeries<S> series_recip(const LaurentSeries<S>& p, int order) {
  if (order < 0) throw domain_error("reciprocal order must be >= 0");
  if (p.is_zero()) throw domain_error("reciprocal of the zero series");
  int m = p.nmin_;
  long long avail = p.order_or_inf() - m;
  int n_terms = int(std::min<long long>(order, avail)) + 1;
  const S& a0 = p.c_[0];
  std::vector<S> q(std::size_t(n_terms), S(0));
  q[0] = S(S(1) / a0);
  for (int n = 1; n < n_terms; ++n) {
    S acc(0);
    for (int k = 1; k <= n; ++k) {
      S ak = (k < int(p.c_.size())) ? p.c_[std::size_t(k)] : S(0);
      if (scalar_traits<S>::is_zero(ak)) continue;
      acc = S(acc + ak * q[std::size_t(n - k)]);
    }
    q[std::size_t(n)] = S(S(-acc) / a0);
  }
  LaurentSeries<S> r(p.center_, -m, std::move(q), -m + n_terms - 1);
  r.cancel_ = p.cancel_;
  return r;
}

// Principal branch: the leading coefficient of the result is the domain
// square root of p's leading coefficient. Requires an even leading exponent.
template <typename S>
LaurentSeries<S> series_sqrt(const LaurentSeries<S>& p, int order) {
  if (order < 0) throw domain_error("square root order must be >= 0");
  if (p.is_zero()) throw domain_error("square root of the zero series");
  int m = p.nmin_;
  if (m % 2 != 0) throw domain_error("square root needs an even leading exponent, got w^" +
                                     std::to_string(m));
  long long avail = p.order_or_inf() - m;
  int n_terms = int(std::min<long long>(order, avail)) + 1;
  const S& a0 = p.c_[0];
  S s0 = domain_sqrt(a0);
  std::vector<S> b(std::size_t(n_terms), S(0));
  b[0] = S(1);
  for (int n = 1; n < n_terms; ++n) {
    S un = (n < int(p.c_.size())) ? S(p.c_[std::size_t(n)] / a0) : S(0);
    S acc(0);
    for (int k = 1; k < n; ++k) acc = S(acc + b[std::size_t(k)] * b[std::size_t(n - k)]);
    b[std::size_t(n)] = S(S(un - acc) / S(2));
  }
  for (S& v : b) v = S(s0 * v);
  LaurentSeries<S> r(p.center_, m / 2, std::move(b), m / 2 + n_terms - 1);
  r.cancel_ = p.cancel_;
  return r;
}

// Multiply by (z−a)^{−k}: every exponent drops by k.
template <typename S>
LaurentSeries<S> shift_divide(const LaurentSeries<S>& p, int k) {
  LaurentSeries<S> r = p;
  r.nmin_ -= k;
  if (r.trunc_) *r.trunc_ -= k;
  return r;
}

// The division by zero calculus: f(a) = C_0.
template <typename S>
S dbz_eval(const LaurentSeries<S>& p) {
  if (!p.knows(0)) {
    throw domain_error("truncation order too small to determine C_0");
  }
  return p.coeff(0);
}

// k-th derivative at the center under the same calculus: k!·C_k.
template <typename S>
S dbz_derivative(const LaurentSeries<S>& p, int k) {
  if (k < 0) throw domain_error("derivative order must be >= 0");
  if (!p.knows(k)) {
    throw domain_error("truncation order too small to determine C_" + std::to_string(k));
  }
  S fact(1);
  for (int i = 2; i <= k; ++i) fact = S(fact * S(i));
  return S(fact * p.coeff(k));
}

template <typename S>
LaurentSeries<S> operator+(const LaurentSeries<S>& p, const LaurentSeries<S>& q) {
  return series_add(p, q);
}
template <typename S>
LaurentSeries<S> operator-(const LaurentSeries<S>& p, const LaurentSeries<S>& q) {
  return series_sub(p, q);
}
template <typename S>
LaurentSeries<S> operator*(const LaurentSeries<S>& p, const LaurentSeries<S>& q) {
  return series_mul(p, q);
}
template <typename S>
LaurentSeries<S> operator*(const S& s, const LaurentSeries<S>& p) {
  return series_mul(LaurentSeries<S>::constant(s, p.center()), p);
}

template <typename S>
std::string LaurentSeries<S>::str() const {
  std::string out;
  auto term = [](const S& c, int n) {
    std::string t = scalar_traits<S>::str(c);
    if (n == 0) return t;
    t += "*w";
    if (n != 1) t += "^" + std::to_string(n);
    return t;
  };
  if (is_zero()) {
    out = "0";
  } else {
    for (int n = nmin_; n <= n_max(); ++n) {
      const S& c = c_[std::size_t(n - nmin_)];
      if (scalar_traits<S>::is_zero(c)) continue;
      if (!out.empty()) out += " + ";
      out += term(c, n);
    }
  }
  if (trunc_) out += " + O(w^" + std::to_string(*trunc_ + 1) + ")";
  return out;
}

template <typename S>
LaurentSeries<S> LaurentSeries<S>::parse(const std::string& text, S center) {
  std::map<int, S> terms;
  std::optional<int> trunc;
  std::size_t pos = 0;
  auto next_token = [&]() -> std::string {
    if (pos >= text.size()) return {};
    std::size_t cut = text.find(" + ", pos);
    std::string tok = text.substr(pos, cut == std::string::npos ? cut : cut - pos);
    pos = cut == std::string::npos ? text.size() : cut + 3;
    return tok;
  };
  bool any = false;
  while (pos < text.size()) {
    std::string tok = next_token();
    if (tok.empty()) continue;
    any = true;
    if (tok.rfind("O(", 0) == 0) {
      std::string inner = tok.substr(2, tok.size() - 3);  // w or w^k
      int k = 1;
      if (inner.size() > 1 && inner[1] == '^') k = std::atoi(inner.c_str() + 2);
      trunc = k - 1;
      continue;
    }
    std::size_t w = tok.find('w');
    int n = 0;
    std::string coef;
    if (w == std::string::npos) {
      coef = tok;
    } else {
      coef = tok.substr(0, w);
      if (!coef.empty() && coef.back() == '*') coef.pop_back();
      if (coef.empty()) coef = "1";
      else if (coef == "-") coef = "-1";
      n = 1;
      if (w + 1 < tok.size() && tok[w + 1] == '^') n = std::atoi(tok.c_str() + w + 2);
    }
    S c = scalar_traits<S>::parse(coef);
    auto it = terms.find(n);
    if (it == terms.end()) terms.emplace(n, std::move(c));
    else it->second = S(it->second + c);
  }
  if (!any) throw domain_error("empty series text");
  int lo = terms.empty() ? 0 : terms.begin()->first;
  int hi = terms.empty() ? 0 : terms.rbegin()->first;
  std::vector<S> coeffs(std::size_t(hi - lo + 1), S(0));
  for (auto& [n, c] : terms) coeffs[std::size_t(n - lo)] = std::move(c);
  return LaurentSeries<S>(std::move(center), lo, std::move(coeffs), trunc);
}

}  // namespace soddy
