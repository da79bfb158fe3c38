#include "coxmod/ints.hpp"

namespace coxmod {

const Int& binomial(int n, int k) {
  static std::vector<std::vector<Int>> rows{{1}};
  static const Int zero = 0;
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return zero;
  while (static_cast<int>(rows.size()) <= n) {
    const auto& prev = rows.back();
    std::vector<Int> row(prev.size() + 1, 1);
    for (size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int double_factorial(int n) {
  if (n < -1) throw std::invalid_argument("double_factorial: n < -1");
  Int r = 1;
  for (int i = n; i > 1; i -= 2) r *= i;
  return r;
}

Int pow2(int e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  return Int(1) << e;
}

}  // namespace coxmod
