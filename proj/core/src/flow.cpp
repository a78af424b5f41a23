#include "deligne/flow.hpp"

namespace deligne {

std::vector<Scalar> bernoulli_numbers(int n) {
  // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1.
  std::vector<Scalar> b(static_cast<std::size_t>(std::max(n, 0)) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Scalar acc = 0;
    mpz_class binom = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      acc += Scalar(binom) * b[static_cast<std::size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[static_cast<std::size_t>(m)] = -acc / (m + 1);
  }
  return b;
}

std::vector<std::vector<int>> compositions(int n, int parts) {
  std::vector<std::vector<int>> out;
  if (parts <= 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  for (int first = 1; first <= n - (parts - 1); ++first) {
    for (auto rest : compositions(n - first, parts - 1)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

}  // namespace deligne
