#include "eulerzeta/harmonic.hpp"

#include <stdexcept>

namespace eulerzeta {

HarmonicTable::HarmonicTable(unsigned max_n, unsigned max_k)
    : max_n_(max_n), max_k_(max_k) {
  if (max_n == 0) throw std::invalid_argument("HarmonicTable: max_n must be >= 1");
  values_.resize(static_cast<size_t>(max_k + 1) * max_n);
  for (unsigned n = 1; n <= max_n; ++n) values_[n - 1] = Rational(1);
  for (unsigned k = 1; k <= max_k; ++k) {
    Rational running(0);
    for (unsigned n = 1; n <= max_n; ++n) {
      running += at(n, k - 1) / Rational(static_cast<long>(n));
      values_[static_cast<size_t>(k) * max_n + (n - 1)] = running;
    }
  }
}

const Rational& HarmonicTable::at(unsigned n, unsigned k) const {
  if (n < 1 || n > max_n_ || k > max_k_)
    throw std::out_of_range("HarmonicTable::at: index outside table");
  return values_[static_cast<size_t>(k) * max_n_ + (n - 1)];
}

Rational harmonic_classical(unsigned n, unsigned k) {
  if (n < 1 || k < 1)
    throw std::invalid_argument("harmonic_classical: need n >= 1, k >= 1");
  Rational sum(0);
  for (unsigned j = 1; j <= n; ++j)
    sum += Rational(Integer(1), pow(Integer(static_cast<long>(j)), k));
  return sum;
}

Rational harmonic_generalized(unsigned n, unsigned k) {
  if (n < 1) throw std::invalid_argument("harmonic_generalized: need n >= 1");
  return HarmonicTable(n, k).at(n, k);
}

SymmetricIdentityCheck symmetric_identity_check(unsigned n) {
  HarmonicTable table(n, 3);
  const Rational h1 = table.at(n, 1);
  const Rational h2 = harmonic_classical(n, 2);
  const Rational h3 = harmonic_classical(n, 3);

  SymmetricIdentityCheck out;
  out.order1 = table.at(n, 1) == harmonic_classical(n, 1);
  out.order2 = table.at(n, 2) == h1 * h1 / Rational(2) + h2 / Rational(2);
  out.order3 = table.at(n, 3) ==
               h1 * h1 * h1 / Rational(6) + h1 * h2 / Rational(2) + h3 / Rational(3);
  return out;
}

}  // namespace eulerzeta
