#pragma once

#include <stdexcept>
#include <vector>

#include "deligne/lie_context.hpp"

namespace deligne {

/// dx + 1/2 [x, x].
template <LieContext C>
typename C::Element mc_residual(const C& c, const typename C::Element& x) {
  return c.add(c.d(x), c.scale(Scalar(1, 2), c.bracket(x, x)));
}

/// Time-1 flow of xdot = dy + [x, y] from x: sum of x_k with x_0 = x, x_1 = dy + [x, y],
/// x_{k+1} = [x_k, y] / (k + 1).
template <LieContext C>
typename C::Element gauge_act(const C& c, const typename C::Element& y, const typename C::Element& x) {
  auto result = x;
  auto term = c.add(c.d(y), c.bracket(x, y));
  const int cap = c.nilpotency_bound() + 2;
  for (int k = 1; !c.is_zero(term); ++k) {
    if (k > cap) throw std::logic_error("gauge flow did not terminate: ambient algebra is not nilpotent");
    result = c.add(result, term);
    term = c.scale(Scalar(1, k + 1), c.bracket(term, y));
  }
  return result;
}

/// Bernoulli numbers B_0 .. B_n (B_1 = -1/2).
std::vector<Scalar> bernoulli_numbers(int n);
/// Ordered tuples of `parts` positive integers summing to n.
std::vector<std::vector<int>> compositions(int n, int parts);

/// log(exp(a) exp(b)) by the Varadarajan recursion, exact in a nilpotent ambient.
template <LieContext C>
typename C::Element bch_standard(const C& c, const typename C::Element& a, const typename C::Element& b) {
  const int top = std::max(1, c.nilpotency_bound());
  const std::vector<Scalar> bern = bernoulli_numbers(top + 1);
  std::vector<Scalar> fact(static_cast<std::size_t>(top) + 2, Scalar(1));
  for (std::size_t i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * static_cast<long>(i);
  const auto sum = c.add(a, b);
  const auto diff = c.add(a, c.scale(Scalar(-1), b));
  std::vector<typename C::Element> z{c.zero(), sum};  // z[n] = Z_n
  for (int n = 1; n < top; ++n) {
    auto next = c.scale(Scalar(1, 2), c.bracket(diff, z[static_cast<std::size_t>(n)]));
    for (int p = 1; 2 * p <= n; ++p) {
      const Scalar k = bern[static_cast<std::size_t>(2 * p)] / fact[static_cast<std::size_t>(2 * p)];
      if (sgn(k) == 0) continue;
      // Sum over compositions k_1 + ... + k_{2p} = n of [Z_{k_1}, [..., [Z_{k_{2p}}, a + b]...]].
      for (const auto& parts : compositions(n, 2 * p)) {
        auto nested = sum;
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) nested = c.bracket(z[static_cast<std::size_t>(*it)], nested);
        next = c.add(next, c.scale(k, nested));
      }
    }
    z.push_back(c.scale(Scalar(1, n + 1), next));
  }
  auto out = c.zero();
  for (const auto& t : z) out = c.add(out, t);
  return out;
}

/// Group law on gauge elements: gauge_act(bch(a, b), x) = gauge_act(a, gauge_act(b, x)).
template <LieContext C>
typename C::Element bch(const C& c, const typename C::Element& a, const typename C::Element& b) {
  return bch_standard(c, b, a);
}

template <LieContext C>
typename C::Element gauge_inverse(const C& c, const typename C::Element& a) {
  return c.scale(Scalar(-1), a);
}

}  // namespace deligne
