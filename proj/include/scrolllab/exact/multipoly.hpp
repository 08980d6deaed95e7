#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <numeric>
#include <span>
#include <vector>

#include "scrolllab/errors.hpp"
#include "scrolllab/exact/rational.hpp"

namespace scrolllab::exact {

using Exponents = std::vector<int>;

inline int exponent_sum(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

// Graded lexicographic, highest first: compare total degree, then the
// exponent vector lexicographically with variable 0 strongest. This order
// is global to the project; serialized coefficient vectors depend on it.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = exponent_sum(a);
    const int db = exponent_sum(b);
    if (da != db) return da > db;
    return a > b;
  }
};

template <class C>
bool coeff_is_zero(const C& c) {
  return c == C(0);
}
inline bool coeff_is_zero(const std::complex<double>& c) { return c == std::complex<double>(0.0, 0.0); }

// Sparse multivariate polynomial over coefficient ring C (Rational for the
// exact core, std::complex<double> for fitted forms). Terms are stored in
// descending grlex order; no zero coefficient is ever kept.
template <class C>
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, C, GrlexGreater>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly zero(int nvars) { return MultiPoly(nvars); }

  static MultiPoly constant(int nvars, const C& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  static MultiPoly variable(int nvars, int index) {
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e.at(index) = 1;
    p.add_term(e, C(1));
    return p;
  }

  static MultiPoly monomial(Exponents e, const C& c) {
    MultiPoly p(static_cast<int>(e.size()));
    p.add_term(std::move(e), c);
    return p;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(Exponents e, const C& c) {
    require(static_cast<int>(e.size()) == nvars_, Errc::dimension, "exponent vector length mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!coeff_is_zero(c)) terms_.emplace(std::move(e), c);
    } else {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  C coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  // -1 for the zero polynomial.
  int total_degree() const {
    return terms_.empty() ? -1 : exponent_sum(terms_.begin()->first);
  }

  int degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = exponent_sum(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (exponent_sum(e) != d) return false;
    return true;
  }

  MultiPoly operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    require(nvars_ == o.nvars_, Errc::dimension, "variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    require(nvars_ == o.nvars_, Errc::dimension, "variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require(a.nvars_ == b.nvars_, Errc::dimension, "variable count mismatch");
    MultiPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    }
    return r;
  }

  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly& operator*=(const C& s) {
    if (coeff_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend MultiPoly operator*(MultiPoly a, const C& s) { return a *= s; }
  friend MultiPoly operator*(const C& s, MultiPoly a) { return a *= s; }

  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  MultiPoly pow(int k) const {
    require(k >= 0, Errc::input, "negative power");
    MultiPoly r = constant(nvars_, C(1));
    MultiPoly base = *this;
    while (k > 0) {
      if (k & 1) r *= base;
      base = k > 1 ? base * base : base;
      k >>= 1;
    }
    return r;
  }

  MultiPoly derivative(int var) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e.at(var) == 0) continue;
      Exponents d = e;
      d[var] -= 1;
      r.add_term(std::move(d), c * C(e[var]));
    }
    return r;
  }

  // Evaluation over any ring T that C converts into; powers memoized per
  // variable. Instantiating T = MultiPoly<C> performs substitution.
  template <class T, class Conv>
  T eval_with(std::span<const T> point, Conv conv) const {
    require(static_cast<int>(point.size()) == nvars_, Errc::dimension, "evaluation point length mismatch");
    std::vector<std::vector<T>> powers(nvars_);  // powers[i][k] == point[i]^(k+1)
    auto var_pow = [&](int i, int k) -> const T& {
      auto& tab = powers[i];
      if (tab.empty()) tab.push_back(point[i]);
      while (static_cast<int>(tab.size()) < k) tab.push_back(tab.back() * point[i]);
      return tab[static_cast<std::size_t>(k) - 1];
    };
    T acc = conv(C(0));
    for (const auto& [e, c] : terms_) {
      T term = conv(c);
      for (int i = 0; i < nvars_; ++i)
        if (e[i] > 0) term = term * var_pow(i, e[i]);
      acc = acc + term;
    }
    return acc;
  }

  C eval(std::span<const C> point) const {
    return eval_with<C>(point, [](const C& c) { return c; });
  }

  std::complex<double> eval_complex(std::span<const std::complex<double>> point) const {
    return eval_with<std::complex<double>>(point, [](const C& c) { return coeff_to_complex(c); });
  }

  // Coefficients with respect to one variable: element [k] is the
  // coefficient of var^k, a polynomial in the remaining variables (same
  // variable count, exponent of var forced to 0).
  std::vector<MultiPoly> coeffs_in(int var) const {
    const int d = degree_in(var);
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(d + 1, 1)), MultiPoly(nvars_));
    for (const auto& [e, c] : terms_) {
      Exponents r = e;
      const int k = r[var];
      r[var] = 0;
      out[k].add_term(std::move(r), c);
    }
    return out;
  }

  // x_i -> sum_j S[i][j] * x_j (S given row-major, n x n).
  MultiPoly linear_substitute(const std::vector<C>& s_row_major) const {
    require(static_cast<int>(s_row_major.size()) == nvars_ * nvars_, Errc::dimension, "substitution matrix shape");
    std::vector<MultiPoly> images;
    images.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      MultiPoly img(nvars_);
      for (int j = 0; j < nvars_; ++j) {
        const C& c = s_row_major[static_cast<std::size_t>(i) * nvars_ + j];
        if (!coeff_is_zero(c)) img += variable(nvars_, j) * c;
      }
      images.push_back(std::move(img));
    }
    return eval_with<MultiPoly>(std::span<const MultiPoly>(images), [&](const C& c) { return constant(nvars_, c); });
  }

  // Largest coefficient magnitude (for numeric normalization).
  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, coeff_abs(c));
    return m;
  }

  void prune(double eps) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (coeff_abs(it->second) <= eps)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

 private:
  static double coeff_abs(const Rational& c) { return std::abs(to_double(c)); }
  static double coeff_abs(const std::complex<double>& c) { return std::abs(c); }
  static std::complex<double> coeff_to_complex(const Rational& c) { return to_complex(c); }
  static std::complex<double> coeff_to_complex(const std::complex<double>& c) { return c; }

  int nvars_ = 0;
  TermMap terms_;
};

using RatPoly = MultiPoly<Rational>;
using CPoly = MultiPoly<std::complex<double>>;

// Exact division: requires den | num (as in Bareiss intermediate
// divisions); throws if the division leaves a remainder.
RatPoly divide_exact(const RatPoly& num, const RatPoly& den);

CPoly to_cpoly(const RatPoly& p);

// All exponent vectors of the given total degree in descending grlex
// order; this enumeration defines every serialized coefficient vector.
std::vector<Exponents> monomials_of_degree(int nvars, int degree);

}  // namespace scrolllab::exact
