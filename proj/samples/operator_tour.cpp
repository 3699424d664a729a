// Builds the big q-Jacobi operator and an algebraic Heun operator, applies
// them to polynomials and prints a few exact results.
#include <iostream>

#include "qheun/checks.hpp"
#include "qheun/heun.hpp"

int main() {
  using namespace qheun;
  const Params p(Rational(2), Rational(1, 3), Rational(1, 5), Rational(1, 7));
  const TauSet t{Rational(1), Rational(2), Rational(-1), Rational(1, 2), Rational(3)};

  const SkewOperator y = big_qjacobi_operator(p);
  std::cout << "Y = " << y.to_string() << "\n";
  for (int n = 0; n <= 3; ++n)
    std::cout << "P_" << n << " = " << big_qjacobi_poly(p, n).to_string() << "   lambda_" << n << " = "
              << lambda_n(p, n).to_string() << "\n";

  const SkewOperator w = algebraic_heun(p, t);
  const HeunData d = extract_heun_data(w);
  std::cout << "\nW = " << w.to_string() << "\n";
  std::cout << "p3 = " << d.p3.to_string() << ", p2 = " << d.p2.to_string() << ", p1 = " << d.p1.to_string() << "\n";
  std::cout << "W x^2 = " << w.apply(Poly::monomial(Rational(1), 2)).to_string() << "\n";

  const auto tri = check_tridiagonal(w, PolyFamily::big_qjacobi(p), 4, t);
  std::cout << "\nW in the big q-Jacobi basis (" << (tri.report.ok() ? "tridiagonal" : "NOT tridiagonal") << ")\n";
  for (const auto& row : tri.table)
    std::cout << "  n=" << row.n << "  sub " << row.sub.to_string() << "  diag " << row.diag.to_string() << "  super "
              << row.super.to_string() << "\n";
  return tri.report.ok() ? 0 : 1;
}
