#pragma once

#include <random>
#include <string>
#include <vector>

#include "milnor/polyforms/parse.hpp"
#include "milnor/polyforms/poly.hpp"

namespace testutil {

inline milnor::polyforms::Poly poly(const std::string& text, std::size_t n = 3) {
  return milnor::polyforms::parse_poly(text, milnor::polyforms::default_variables(n));
}

inline const char* kF1 = "x^5+y^4*z+x^4*y";
inline const char* kF2 = "x^5+y^4*z+x^3*y^2";
inline const char* kQuinticA = "x^5+x*y^3*z+y^4*z+x*y^4";
inline const char* kFermat = "x^5+y^5+z^5";

/// Random homogeneous polynomial with `terms` monomials and small integer coefficients.
inline milnor::polyforms::Poly random_homogeneous(std::mt19937_64& rng, std::size_t n, int d, std::size_t terms) {
  auto monos = milnor::polyforms::monomials_of_degree(n, d);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  milnor::polyforms::Poly p(n);
  for (std::size_t i = 0; i < terms; ++i) {
    int c = coef(rng);
    if (c == 0) c = 1;
    p.add_term(monos[pick(rng)], c);
  }
  return p;
}

}  // namespace testutil
