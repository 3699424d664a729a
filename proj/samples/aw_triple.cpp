// Solves for an Askey-Wilson triple (W1, W2, alpha Y + beta) and prints it.
//   aw_triple [q a b c]
#include <iostream>

#include "qheun/aw_triple.hpp"

int main(int argc, char** argv) {
  using namespace qheun;
  Params p(Rational(2), Rational(1, 3), Rational(1, 5), Rational(1, 7));
  if (argc == 5) p = Params(Rational::parse(argv[1]), Rational::parse(argv[2]), Rational::parse(argv[3]),
                            Rational::parse(argv[4]));
  const auto res = solve_aw_triple(p);
  std::cout << p.to_string() << "\n";
  if (res.status != TripleStatus::Solved) {
    std::cout << "no solution: " << res.reason << "\n";
    return 1;
  }
  std::cout << "field: " << (res.field ? "Q(sqrt(" + res.field->to_string() + "))" : std::string("Q")) << "\n";
  for (std::size_t i = 0; i < kTripleVars; ++i)
    std::cout << "  " << triple_variable_names()[i] << " = " << res.values[i].to_string() << "\n";
  std::cout << "free parameters: " << res.free_parameters << ", search nodes: " << res.nodes << "\n";
  std::cout << "relations verified: " << (res.verified ? "yes" : "no") << "\n";
  return res.verified ? 0 : 1;
}
