#pragma once

// Random Laurent polynomials for property tests.

#include "core/laurent.hpp"

#include <random>

namespace deltalink::testing {

inline LaurentPoly random_poly(std::mt19937_64& rng, std::size_t nvars, int max_terms = 5, int exp_range = 3,
                               int coeff_range = 6) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> exp(-exp_range, exp_range);
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  LaurentPoly p(nvars);
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    LaurentPoly::Exponents e(nvars);
    for (auto& v : e) v = exp(rng);
    p.add_term(e, coeff(rng));
  }
  return p;
}

inline LaurentPoly random_nonzero_poly(std::mt19937_64& rng, std::size_t nvars) {
  LaurentPoly p(nvars);
  while (p.is_zero()) p = random_poly(rng, nvars);
  return p;
}

inline LaurentPoly random_unit(std::mt19937_64& rng, std::size_t nvars) {
  std::uniform_int_distribution<int> exp(-4, 4);
  LaurentPoly::Exponents e(nvars);
  for (auto& v : e) v = exp(rng);
  return LaurentPoly::monomial(e, rng() % 2 ? 1 : -1);
}

}  // namespace deltalink::testing
