#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "milnor/exactla/rational.hpp"

namespace milnor::vfilt {

using exactla::Rational;

/// Affine form (c0 + sum_i c_i e_i) / den on exponent vectors, c_i >= 0, den > 0.
struct VCondition {
  long c0 = 0;
  std::vector<long> coeffs;
  long den = 1;

  std::size_t nvars() const { return coeffs.size(); }
  /// Throws InputError for a negative exponent or a length mismatch.
  Rational value(const std::vector<int>& exponents) const;
};

/// Parses "(4i+5j+9)/20" over the given exponent names ("i", "j", "k").
/// The denominator and the parentheses are optional. Throws InputError.
VCondition parse_vcondition(std::string_view text, const std::vector<std::string>& names);

std::string to_string(const VCondition& c, const std::vector<std::string>& names);

/// Minimum of the conditions at the exponent vector.
Rational v_value(const std::vector<int>& exponents, const std::vector<VCondition>& conds);

/// Smallest per-variable bound B such that if the value alpha is attained at
/// all, it is attained with every exponent <= B.
long sound_cutoff(const Rational& alpha, const std::vector<VCondition>& conds);

/// max(ceil(2 alpha max den), sound_cutoff).
long default_bound(const Rational& alpha, const std::vector<VCondition>& conds);

/// No exponent vector has v_value exactly alpha. Throws InputError for
/// alpha <= 0 and DiagnosticError when `bound` is below the sound cutoff.
bool grv_vanishes(const Rational& alpha, const std::vector<VCondition>& conds,
                  std::optional<long> bound = std::nullopt);

/// Some exponent vector in [0, bound]^n attaining alpha, if any.
std::optional<std::vector<int>> grv_witness(const Rational& alpha, const std::vector<VCondition>& conds,
                                            std::optional<long> bound = std::nullopt);

/// All values of v_value over [0, bound]^n that are <= cap.
std::set<Rational> attained_values(const std::vector<VCondition>& conds, long bound, const Rational& cap);

struct Implication {
  bool holds = true;
  std::optional<std::vector<int>> counterexample;
};

/// Checks premise(e) >= a  ==>  conclusion(e) > b over all exponent vectors.
/// The search is exhaustive over a box outside of which no counterexample
/// can be the only one.
Implication implication_check(const VCondition& premise, const Rational& a, const VCondition& conclusion,
                              const Rational& b);

}  // namespace milnor::vfilt
