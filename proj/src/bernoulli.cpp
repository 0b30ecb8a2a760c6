#include "eulerzeta/bernoulli.hpp"

#include <stdexcept>
#include <vector>

#include "eulerzeta/combinatorics.hpp"

namespace eulerzeta {

Rational bernoulli(unsigned n) {
  std::vector<Rational> b(n + 1);
  b[0] = Rational(1);
  for (unsigned r = 1; r <= n; ++r) {
    Rational sum(0);
    for (unsigned j = 0; j < r; ++j) sum += Rational(binomial(r + 1, j)) * b[j];
    b[r] = -sum / Rational(static_cast<long>(r) + 1);
  }
  return b[n];
}

Integer euler_number(unsigned n) {
  if (n % 2 != 0) throw std::invalid_argument("euler_number: index must be even");
  std::vector<Integer> e(n / 2 + 1);
  e[0] = 1;
  for (unsigned r = 1; r <= n / 2; ++r) {
    Integer sum(0);
    for (unsigned j = 0; j < r; ++j) sum += binomial(2 * r, 2 * j) * e[j];
    e[r] = -sum;
  }
  return e[n / 2];
}

}  // namespace eulerzeta
