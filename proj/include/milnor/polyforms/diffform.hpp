#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "milnor/polyforms/poly.hpp"

namespace milnor::polyforms {

/// Strictly increasing variable indices I = (i_1 < ... < i_j) naming dx_I.
using IndexTuple = std::vector<int>;

/// All j-element index tuples from {0..n-1}, lexicographic.
std::vector<IndexTuple> index_tuples(std::size_t n, std::size_t j);

/// Differential j-form sum_I g_I dx_I with (Laurent) polynomial coefficients.
class DiffForm {
 public:
  DiffForm(std::size_t nvars, std::size_t degree);

  /// g dx_I with I given in any order; reordering contributes the permutation
  /// sign, a repeated index gives the zero form.
  static DiffForm term(const Poly& g, const IndexTuple& indices);
  /// df = sum_i (d f / d x_i) dx_i
  static DiffForm differential(const Poly& f);
  /// dx_0 ^ ... ^ dx_{n-1} times g.
  static DiffForm top(const Poly& g);

  std::size_t nvars() const { return nvars_; }
  std::size_t degree() const { return degree_; }
  const std::map<IndexTuple, Poly>& components() const { return comps_; }
  Poly component(const IndexTuple& indices) const;
  bool is_zero() const { return comps_.empty(); }

  void add_component(const IndexTuple& indices, const Poly& g);

  DiffForm operator+(const DiffForm& o) const;
  DiffForm operator-(const DiffForm& o) const;
  DiffForm operator*(const Rational& c) const;
  /// Multiplication by a 0-form.
  DiffForm times(const Poly& g) const;
  bool operator==(const DiffForm& o) const;

 private:
  void check_compatible(const DiffForm& o) const;
  std::size_t nvars_;
  std::size_t degree_;
  std::map<IndexTuple, Poly> comps_;
};

/// Graded-antisymmetric product. Throws InputError when deg a + deg b > n.
DiffForm wedge(const DiffForm& a, const DiffForm& b);

/// Exterior derivative.
DiffForm ext_derivative(const DiffForm& a);

/// Interior product with the Euler field sum_i x_i d/dx_i. Throws on 0-forms.
DiffForm euler_contract(const DiffForm& a);

/// Checks df ^ (g * contraction of the top form) = deg(f) f g dx at form level.
/// Throws InputError when f is not homogeneous.
bool euler_koszul_identity_check(const Poly& f, const Poly& g);

std::string to_string(const DiffForm& w, const std::vector<std::string>& vars);

}  // namespace milnor::polyforms
