#include "eulerzeta/diff_table.hpp"

#include <stdexcept>
#include <utility>

#include "eulerzeta/combinatorics.hpp"

namespace eulerzeta {

DiffTable::DiffTable(Integer m, Integer i, unsigned max_n, unsigned max_k)
    : m_(std::move(m)), i_(std::move(i)), max_n_(max_n), max_k_(max_k) {
  if (m_ < 1 || i_ < 1 || i_ > m_)
    throw std::invalid_argument("DiffTable: need m >= 1 and 1 <= i <= m");
  const size_t cols = static_cast<size_t>(max_k_) + 1;
  entries_.resize((static_cast<size_t>(max_n_) + 1) * cols);

  // Row 0: C(0,k) = i^{1-k} (at k = 0 this is i, matching A(0,0)/A(0,1)).
  entries_[0] = Rational(i_);
  for (unsigned k = 1; k <= max_k_; ++k)
    entries_[k] = Rational(Integer(1), pow(i_, k - 1));

  for (unsigned n = 1; n <= max_n_; ++n) {
    const Rational denom(m_ * n + i_);
    Rational* row = &entries_[static_cast<size_t>(n) * cols];
    const Rational* prev = &entries_[(static_cast<size_t>(n) - 1) * cols];
    row[0] = Rational(0);
    for (unsigned k = 1; k <= max_k_; ++k)
      row[k] = prev[k] + row[k - 1] / denom;
  }
}

const Rational& DiffTable::at(unsigned n, unsigned k) const {
  if (n > max_n_ || k > max_k_)
    throw std::out_of_range("DiffTable::at: index outside table");
  return entries_[static_cast<size_t>(n) * (max_k_ + 1) + k];
}

Rational diff_power_direct(const Integer& m, const Integer& i, long k, unsigned n) {
  if (m < 1 || i < 1 || i > m)
    throw std::invalid_argument("diff_power_direct: need m >= 1 and 1 <= i <= m");
  Rational sum(0);
  for (unsigned j = 0; j <= n; ++j) {
    const Integer base = m * j + i;
    Rational term = Rational(binomial(n, j)) *
                    (k >= 0 ? Rational(Integer(1), pow(base, static_cast<unsigned long>(k)))
                            : Rational(pow(base, static_cast<unsigned long>(-k))));
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

Rational diff_power_closed(const Integer& m, const Integer& i, long k, unsigned n,
                           const DiffTable& table) {
  if (k < 1) throw std::invalid_argument("diff_power_closed: need k >= 1");
  if (table.step() != m || table.offset() != i)
    throw std::invalid_argument("diff_power_closed: table built for different (m, i)");
  const Rational lead =
      Rational(factorial(n)) / (Rational(m) * rising_factorial(Rational(i, m), n + 1));
  return lead * table.at(n, static_cast<unsigned>(k));
}

}  // namespace eulerzeta
