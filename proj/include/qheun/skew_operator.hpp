#ifndef QHEUN_SKEW_OPERATOR_HPP
#define QHEUN_SKEW_OPERATOR_HPP

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qheun/errors.hpp"
#include "qheun/rat_func.hpp"

namespace qheun {

/// Application produced a genuine rational function. The witness is the
/// offending value in canonical form.
class NonPolynomialResult : public Error {
 public:
  NonPolynomialResult(std::string witness, std::string numerator, std::string denominator)
      : Error("operator result is not a Laurent polynomial: " + witness),
        witness_(std::move(witness)), numerator_(std::move(numerator)), denominator_(std::move(denominator)) {}
  [[nodiscard]] const std::string& witness() const { return witness_; }
  [[nodiscard]] const std::string& numerator() const { return numerator_; }
  [[nodiscard]] const std::string& denominator() const { return denominator_; }

 private:
  std::string witness_, numerator_, denominator_;
};

/// q-shift operator sum_k C_k(x) T^k with (T^k f)(x) = f(q^k x).
template <ExactField K = Rational>
class BasicSkewOperator {
 public:
  using Coeff = BasicRatFunc<K>;
  using PolyT = LaurentPoly<K>;
  using Coeffs = std::map<int, Coeff>;

  explicit BasicSkewOperator(K q) : q_(std::move(q)) {
    if (q_.is_zero() || q_ == K(1) || q_ == K(-1)) throw InvalidParameters("shift base q must avoid 0, 1, -1");
  }
  BasicSkewOperator(K q, Coeffs coeffs) : BasicSkewOperator(std::move(q)) {
    for (auto& [k, c] : coeffs)
      if (!c.is_zero()) coeffs_.emplace(k, std::move(c));
  }

  static BasicSkewOperator identity(const K& q) { return multiplication(q, Coeff(K(1))); }
  static BasicSkewOperator shift(const K& q, int k) { return term(q, k, Coeff(K(1))); }
  /// Multiplication by a function: the k = 0 operator f(x) * I.
  static BasicSkewOperator multiplication(const K& q, const Coeff& f) { return term(q, 0, f); }
  static BasicSkewOperator term(const K& q, int k, const Coeff& f) {
    BasicSkewOperator op(q);
    if (!f.is_zero()) op.coeffs_.emplace(k, f);
    return op;
  }

  [[nodiscard]] const K& q() const { return q_; }
  [[nodiscard]] const Coeffs& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] Coeff coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Coeff() : it->second;
  }
  [[nodiscard]] std::vector<int> support() const {
    std::vector<int> out;
    for (const auto& kv : coeffs_) out.push_back(kv.first);
    return out;
  }

  /// sum_k C_k(x) f(q^k x); throws NonPolynomialResult if a denominator survives.
  [[nodiscard]] PolyT apply(const PolyT& f) const {
    const Coeff total = apply_rational(Coeff(f));
    if (auto lp = total.as_laurent()) return *lp;
    throw NonPolynomialResult(total.to_string(), total.numerator().to_string(), total.denominator().to_string());
  }
  [[nodiscard]] Coeff apply_rational(const Coeff& f) const {
    Coeff total;
    for (const auto& [k, c] : coeffs_) total = total + c * f.scale_substitute(power(q_, k));
    return total;
  }

  BasicSkewOperator& operator+=(const BasicSkewOperator& o) {
    check_base(o);
    for (const auto& [k, c] : o.coeffs_) add_term(k, c);
    return *this;
  }
  BasicSkewOperator& operator-=(const BasicSkewOperator& o) {
    check_base(o);
    for (const auto& [k, c] : o.coeffs_) add_term(k, -c);
    return *this;
  }
  friend BasicSkewOperator operator+(BasicSkewOperator a, const BasicSkewOperator& b) { return a += b; }
  friend BasicSkewOperator operator-(BasicSkewOperator a, const BasicSkewOperator& b) { return a -= b; }
  friend BasicSkewOperator operator-(const BasicSkewOperator& a) { return K(-1) * a; }

  /// (A T^j)(B T^k) = A(x) B(q^j x) T^(j+k).
  friend BasicSkewOperator operator*(const BasicSkewOperator& u, const BasicSkewOperator& v) {
    u.check_base(v);
    BasicSkewOperator out(u.q_);
    for (const auto& [j, a] : u.coeffs_) {
      const K qj = power(u.q_, j);
      for (const auto& [k, b] : v.coeffs_) out.add_term(j + k, a * b.scale_substitute(qj));
    }
    return out;
  }
  friend BasicSkewOperator operator*(const K& s, const BasicSkewOperator& a) {
    BasicSkewOperator out(a.q_);
    if (s.is_zero()) return out;
    for (const auto& [k, c] : a.coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), k, s * c);
    return out;
  }
  /// Left multiplication by a function.
  friend BasicSkewOperator operator*(const Coeff& f, const BasicSkewOperator& a) {
    BasicSkewOperator out(a.q_);
    if (f.is_zero()) return out;
    for (const auto& [k, c] : a.coeffs_) out.add_term(k, f * c);
    return out;
  }

  friend bool operator==(const BasicSkewOperator& a, const BasicSkewOperator& b) {
    return a.q_ == b.q_ && a.coeffs_ == b.coeffs_;
  }

  /// x^g W x^-g with mu = q^-g: C_k picks up mu^k.
  [[nodiscard]] BasicSkewOperator conjugate_shiftscale(const K& mu) const {
    if (mu.is_zero()) throw ZeroScale("conjugation factor must be nonzero");
    BasicSkewOperator out(q_);
    for (const auto& [k, c] : coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), k, power(mu, k) * c);
    return out;
  }

  /// S W S^-1 with (S f)(x) = f(eps x): C_k(x) -> C_k(eps x).
  [[nodiscard]] BasicSkewOperator scale_argument(const K& eps) const {
    if (eps.is_zero()) throw ZeroScale("argument scale must be nonzero");
    BasicSkewOperator out(q_);
    for (const auto& [k, c] : coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), k, c.scale_substitute(eps));
    return out;
  }

  /// theta(x) (W + (alpha x + beta) I).
  [[nodiscard]] BasicSkewOperator affine(const Coeff& theta, const K& alpha, const K& beta) const {
    if (theta.is_zero()) throw ZeroMultiplier("affine multiplier must be nonzero");
    const PolyT shift = PolyT::monomial(alpha, 1) + PolyT(beta);
    return theta * (*this + multiplication(q_, Coeff(shift)));
  }

  /// "q=2; k=-1 num=[1,0,-1] den=[0,1]; k=1 ..." with ascending coefficient lists.
  [[nodiscard]] std::string serialize() const {
    std::string out = "q=" + q_.to_string();
    for (const auto& [k, c] : coeffs_) {
      out += "; k=" + std::to_string(k) + " num=" + dense_list(c.numerator()) + " den=" + dense_list(c.denominator());
    }
    return out;
  }

  [[nodiscard]] std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : coeffs_) {
      if (!out.empty()) out += " + ";
      out += "[" + c.to_string() + "]";
      if (k != 0) out += "T^" + std::to_string(k);
    }
    return out;
  }

  /// Same operator with coefficients mapped into another field.
  template <ExactField L, typename F>
  [[nodiscard]] BasicSkewOperator<L> map_field(F&& embed) const {
    auto lift = [&](const PolyT& p) {
      typename LaurentPoly<L>::Terms t;
      for (const auto& [e, c] : p.terms()) t.emplace(e, embed(c));
      return LaurentPoly<L>(std::move(t));
    };
    typename BasicSkewOperator<L>::Coeffs cs;
    for (const auto& [k, c] : coeffs_)
      cs.emplace(k, BasicRatFunc<L>::make(lift(c.numerator()), lift(c.denominator())));
    return BasicSkewOperator<L>(embed(q_), std::move(cs));
  }

 private:
  template <ExactField>
  friend class BasicSkewOperator;

  void check_base(const BasicSkewOperator& o) const {
    if (!(q_ == o.q_)) throw BaseMismatch("operators have different shift bases");
  }
  void add_term(int k, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(k, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  static std::string dense_list(const PolyT& p) {
    std::string out = "[";
    const auto d = p.dense();
    for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + d[i].to_string();
    return out + "]";
  }

  K q_;
  Coeffs coeffs_;
};

using SkewOperator = BasicSkewOperator<Rational>;

template <ExactField K>
BasicSkewOperator<K> commutator(const BasicSkewOperator<K>& u, const BasicSkewOperator<K>& v) {
  return u * v - v * u;
}

template <ExactField K>
BasicSkewOperator<K> anticommutator(const BasicSkewOperator<K>& u, const BasicSkewOperator<K>& v) {
  return u * v + v * u;
}

/// Inverse of SkewOperator::serialize.
inline SkewOperator parse_operator(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  auto parse_list = [&](std::string_view s) {
    s = trim(s);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("expected [..] in " + std::string(s));
    s = s.substr(1, s.size() - 2);
    std::vector<Rational> out;
    while (!s.empty()) {
      const auto comma = s.find(',');
      out.push_back(Rational::parse(trim(s.substr(0, comma))));
      if (comma == std::string_view::npos) break;
      s.remove_prefix(comma + 1);
    }
    return Poly::from_coeffs(out);
  };
  auto field = [&](std::string_view rec, std::string_view key) {
    const auto at = rec.find(key);
    if (at == std::string_view::npos) throw ParseError("missing " + std::string(key) + " in " + std::string(rec));
    rec.remove_prefix(at + key.size());
    const auto end = rec.find(' ');
    return trim(rec.substr(0, end));
  };

  std::vector<std::string_view> records;
  while (true) {
    const auto semi = text.find(';');
    records.push_back(trim(text.substr(0, semi)));
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  if (records.empty() || records[0].substr(0, 2) != "q=") throw ParseError("operator text must start with q=");
  SkewOperator op(Rational::parse(records[0].substr(2)));
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto rec = records[i];
    int k = 0;
    try {
      k = std::stoi(std::string(field(rec, "k=")));
    } catch (const std::logic_error&) {
      throw ParseError("bad shift degree in " + std::string(rec));
    }
    op += SkewOperator::term(op.q(), k, RatFunc::make(parse_list(field(rec, "num=")), parse_list(field(rec, "den="))));
  }
  return op;
}

}  // namespace qheun

#endif  // QHEUN_SKEW_OPERATOR_HPP
