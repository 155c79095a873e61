// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef CUBEFEC_SAMPLING_HPP
#define CUBEFEC_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "cubefec/diff_form.hpp"

namespace cubefec {

/// Seeded generator of random polynomial forms with small integer
/// coefficients. Draws use mt19937_64 with plain modulo so a seed replays
/// identically on every platform.
class FormSampler {
 public:
  explicit FormSampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational coefficient() {
    int c = uniform(-4, 4);
    if (c == 0) c = 1;
    return Rational(c);
  }

  FormMonomial monomial(int n, int deg, int k) {
    std::vector<int> alpha(n, 0);
    int remaining = deg;
    for (int i = 0; i + 1 < n; ++i) {
      alpha[i] = uniform(0, remaining);
      remaining -= alpha[i];
    }
    if (n > 0) alpha[n - 1] = remaining;
    std::vector<int> sigma;
    int next = 1;
    for (int picked = 0; picked < k; ++picked) {
      // ensure enough indices remain for the tail of sigma
      const int hi = n - (k - picked - 1);
      next = uniform(next, hi);
      sigma.push_back(next);
      ++next;
    }
    return FormMonomial(MultiIndex(std::move(alpha)), IndexSet(std::move(sigma)));
  }

  /// Random k-form, homogeneous of degree exactly deg (may cancel to zero).
  DiffForm homogeneous_form(int n, int deg, int k, int max_terms) {
    DiffForm out(n, k);
    const int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) out.add_term(monomial(n, deg, k), coefficient());
    return out;
  }

  /// Random k-form of polynomial degree at most max_deg.
  DiffForm polynomial_form(int n, int max_deg, int k, int max_terms) {
    DiffForm out(n, k);
    const int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) {
      out.add_term(monomial(n, uniform(0, max_deg), k), coefficient());
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace cubefec

#endif
