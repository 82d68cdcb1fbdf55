#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "milnor/exactla/rational.hpp"

namespace milnor::polyforms {

using exactla::Rational;

/// Exponent vector; negative entries are allowed (Laurent monomials).
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);
bool has_negative_exponent(const Monomial& m);
Monomial monomial_product(const Monomial& a, const Monomial& b);

/// Graded lexicographic order with x1 > x2 > ... ; `true` when a comes first
/// (is larger).
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of total degree `degree` in `nvars` variables with
/// nonnegative exponents, largest first.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

/// Multivariate polynomial with exact rational coefficients.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t index);
  static Poly monomial(const Monomial& m, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  bool operator==(const Poly& o) const;

  Poly pow(unsigned e) const;
  Poly derivative(std::size_t var) const;

  /// True when every term has the same total degree (the zero polynomial is
  /// homogeneous of every degree).
  bool is_homogeneous() const;
  /// Total degree of the leading term; meaningful for homogeneous input.
  int degree() const;
  int max_degree() const;
  int min_degree() const;
  bool has_negative_exponents() const;

  Rational evaluate(const std::vector<Rational>& point) const;

  /// Replaces x_i by subs[i] (all polys in the same target ring).
  Poly substitute(const std::vector<Poly>& subs) const;

  /// Homogeneous part of the given total degree.
  Poly homogeneous_part(int degree) const;

 private:
  void check_compatible(const Poly& o) const;
  std::size_t nvars_;
  TermMap terms_;
};

/// Canonical text using the given variable names (grammar accepted by parse_poly).
std::string to_string(const Poly& p, const std::vector<std::string>& vars);

/// Default variable names: x,y,z for up to three variables, x1..xn otherwise.
std::vector<std::string> default_variables(std::size_t n);

}  // namespace milnor::polyforms
