#ifndef QHEUN_MPOLY_HPP
#define QHEUN_MPOLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qheun/errors.hpp"
#include "qheun/laurent_poly.hpp"
#include "qheun/quadratic_field.hpp"

namespace qheun {

/// Sparse polynomial in a fixed number of variables over an exact field.
template <ExactField K = Rational>
class MPoly {
 public:
  using Monomial = std::vector<int>;
  using Terms = std::map<Monomial, K>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
  MPoly(std::size_t nvars, const K& c) : nvars_(nvars) {
    if (!c.is_zero()) terms_.emplace(Monomial(nvars, 0), c);
  }
  static MPoly variable(std::size_t nvars, std::size_t i) {
    MPoly p(nvars);
    Monomial m(nvars, 0);
    m.at(i) = 1;
    p.terms_.emplace(std::move(m), K(1));
    return p;
  }

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }
  [[nodiscard]] K constant_term() const {
    auto it = terms_.find(Monomial(nvars_, 0));
    return it == terms_.end() ? K(0) : it->second;
  }

  void add_term(const Monomial& m, const K& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  [[nodiscard]] int degree_in(std::size_t v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
  }
  [[nodiscard]] int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }
  [[nodiscard]] std::vector<std::size_t> variables() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < nvars_; ++v)
      if (degree_in(v) > 0) out.push_back(v);
    return out;
  }

  /// Coefficient of v^1 when it is a constant, i.e. p = c v + (terms free of v).
  [[nodiscard]] std::optional<K> constant_linear_coeff(std::size_t v) const {
    std::optional<K> c;
    for (const auto& [m, k] : terms_) {
      if (m[v] == 0) continue;
      if (m[v] > 1 || total_degree(m) != 1) return std::nullopt;
      c = k;
    }
    return c;
  }

  /// Replaces variable v by the polynomial `value`.
  [[nodiscard]] MPoly substitute(std::size_t v, const MPoly& value) const {
    MPoly out(nvars_);
    std::vector<MPoly> powers{MPoly(nvars_, K(1))};
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      const int e = rest[v];
      rest[v] = 0;
      if (e == 0) {
        out.add_term(rest, c);
        continue;
      }
      while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
      for (const auto& [pm, pc] : powers[static_cast<std::size_t>(e)].terms_) {
        Monomial sum = rest;
        for (std::size_t i = 0; i < nvars_; ++i) sum[i] += pm[i];
        out.add_term(sum, c * pc);
      }
    }
    return out;
  }
  [[nodiscard]] MPoly substitute(std::size_t v, const K& value) const { return substitute(v, MPoly(nvars_, value)); }

  /// Divides out the largest monomial in the listed variables that divides every term.
  [[nodiscard]] MPoly strip_content(const std::vector<std::size_t>& vars) const {
    if (terms_.empty()) return *this;
    Monomial low(nvars_, 0);
    for (auto v : vars) {
      int e = terms_.begin()->first[v];
      for (const auto& [m, c] : terms_) e = std::min(e, m[v]);
      low[v] = e;
    }
    if (std::all_of(low.begin(), low.end(), [](int e) { return e == 0; })) return *this;
    MPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
      Monomial r = m;
      for (std::size_t i = 0; i < nvars_; ++i) r[i] -= low[i];
      out.terms_.emplace(std::move(r), c);
    }
    return out;
  }

  /// The polynomial as univariate in v; requires no other variables.
  [[nodiscard]] LaurentPoly<K> as_univariate(std::size_t v) const {
    typename LaurentPoly<K>::Terms t;
    for (const auto& [m, c] : terms_) {
      if (total_degree(m) != m[v]) throw InvalidParameters("polynomial is not univariate");
      t.emplace(m[v], c);
    }
    return LaurentPoly<K>(std::move(t));
  }

  /// Scales so the leading (lexicographically largest) coefficient is 1.
  [[nodiscard]] MPoly monic() const {
    if (terms_.empty()) return *this;
    const K inv = K(1) / terms_.rbegin()->second;
    return inv * *this;
  }

  [[nodiscard]] K evaluate(const std::vector<K>& point) const {
    K acc(0);
    for (const auto& [m, c] : terms_) {
      K t = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (m[i]) t = t * power(point.at(i), m[i]);
      acc = acc + t;
    }
    return acc;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) {
    for (const auto& [m, c] : b.terms_) a.add_term(m, c);
    return a;
  }
  friend MPoly operator-(MPoly a, const MPoly& b) {
    for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
    return a;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out(std::max(a.nvars_, b.nvars_));
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
        out.add_term(m, ca * cb);
      }
    return out;
  }
  friend MPoly operator*(const K& s, const MPoly& a) {
    MPoly out(a.nvars_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), m, s * c);
    return out;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const MPoly& a, const MPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return ia->first < ib->first;
      const std::string sa = ia->second.to_string(), sb = ib->second.to_string();
      if (sa != sb) return sa < sb;
    }
    return false;
  }

  [[nodiscard]] std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")";
      for (std::size_t i = 0; i < nvars_; ++i)
        if (m[i]) out += "*" + names.at(i) + (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
    }
    return out;
  }

 private:
  static int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Roots of a univariate polynomial inside the coefficient field. When a
/// quadratic factor over Q has no rational root, `extension` names the
/// squarefree D with the roots in Q(sqrt D).
template <ExactField K>
struct FieldRoots {
  std::vector<K> roots;
  std::optional<mpz_class> extension;
};

namespace detail {

inline std::optional<Rational> field_sqrt(const Rational& v) { return v.sqrt(); }
inline std::optional<QuadraticNumber> field_sqrt(const QuadraticNumber& v) { return v.sqrt(); }

inline std::optional<mpz_class> extension_for(const Rational& disc) { return squarefree_kernel(disc); }
inline std::optional<mpz_class> extension_for(const QuadraticNumber& disc) {
  if (!disc.is_rational()) return std::nullopt;
  return squarefree_kernel(disc.re());
}

inline Rational to_rational(const Rational& v) { return v; }
inline std::optional<Rational> as_rational(const Rational& v) { return v; }
inline std::optional<Rational> as_rational(const QuadraticNumber& v) {
  if (!v.is_rational()) return std::nullopt;
  return v.re();
}

// Divisors of |n| up to a size bound; nullopt when n is too large to enumerate.
inline std::optional<std::vector<mpz_class>> small_divisors(mpz_class n) {
  n = abs(n);
  if (n == 0 || n > mpz_class(1000000000)) return std::nullopt;
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

}  // namespace detail

/// Roots of p in K: linear and quadratic factors exactly, higher degrees via
/// the rational root theorem when the coefficients are rational and small.
template <ExactField K>
FieldRoots<K> roots_in_field(LaurentPoly<K> p) {
  FieldRoots<K> out;
  if (p.is_zero() || !p.is_polynomial()) return out;
  if (p.valuation() > 0) {
    out.roots.push_back(K(0));
    p = p.shifted(-p.valuation());
  }
  // Peel rational roots off higher-degree factors.
  while (p.degree() > 2) {
    std::vector<Rational> rc;
    for (int e = 0; e <= p.degree(); ++e) {
      auto r = detail::as_rational(p.coeff(e));
      if (!r) return out;
      rc.push_back(*r);
    }
    mpz_class lcm_den = 1;
    for (const auto& r : rc) lcm_den = lcm(lcm_den, r.denominator());
    const mpz_class a0 = (rc.front() * Rational(lcm_den)).numerator();
    const mpz_class an = (rc.back() * Rational(lcm_den)).numerator();
    auto dn = detail::small_divisors(a0), dd = detail::small_divisors(an);
    if (!dn || !dd) return out;
    std::optional<Rational> found;
    for (const auto& n : *dn) {
      for (const auto& d : *dd) {
        for (int s : {1, -1}) {
          const Rational cand(mpq_class(n * s, d));
          if (p.evaluate(K(cand)).is_zero()) {
            found = cand;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return out;
    out.roots.push_back(K(*found));
    p = divmod(p, LaurentPoly<K>::x() - LaurentPoly<K>(K(*found))).first;
  }
  if (p.degree() == 1) {
    out.roots.push_back(-p.coeff(0) / p.coeff(1));
  } else if (p.degree() == 2) {
    const K a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    const K disc = b * b - K(4) * a * c;
    if (auto s = detail::field_sqrt(disc)) {
      out.roots.push_back((-b + *s) / (K(2) * a));
      if (!s->is_zero()) out.roots.push_back((-b - *s) / (K(2) * a));
    } else {
      out.extension = detail::extension_for(disc);
    }
  }
  return out;
}

}  // namespace qheun

#endif  // QHEUN_MPOLY_HPP
