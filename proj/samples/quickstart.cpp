// Recognize the paw, list its maximal independent sets and solve the
// knapsack instance built from it.

#include <iostream>
#include <variant>

#include "tkit/tkit.hpp"

int main() {
  using namespace tkit;
  const Graph paw = Graph::from_edges(4, {{1, 2}, {1, 4}, {2, 4}, {3, 4}});

  const auto rec = recognize_threshold(paw);
  const auto& cs = std::get<CreationSequence>(rec);
  std::cout << "creation sequence " << cs.bit_string() << '\n';
  std::cout << "maximal independent sets " << enumerate_mis(cs) << '\n';

  const KpInstance kp = threshold_to_kp(cs, {Rational(3), Rational(1), Rational(2), Rational(5)});
  const Solution best = solve_kp_equivalent(kp);
  std::cout << "best items " << best.chosen << " profit " << to_string(best.profit) << '\n';
}
