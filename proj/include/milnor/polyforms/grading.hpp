#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "milnor/exactla/sparse.hpp"
#include "milnor/polyforms/diffform.hpp"

namespace milnor::polyforms {

/// Degree conventions for forms attached to a homogeneous f of degree d in
/// n variables: the grading of j-forms is shifted by d(n-j), which makes
/// df^ degree-preserving and lowers d by exactly d.
struct GradingConvention {
  int d;
  std::size_t n;

  GradingConvention(int degree, std::size_t nvars);

  /// deg(g) + |I| + d (n - |I|) for a term g dx_I.
  int graded_degree(const Monomial& g, std::size_t form_degree) const;
  /// Polynomial degree of coefficients of j-forms in graded degree k.
  int coefficient_degree(std::size_t form_degree, int k) const;
};

/// Canonical basis of the graded piece Omega^j_k: terms m dx_I, ordered by
/// index tuple (lexicographic) and then by monomial (largest first).
class FormBasis {
 public:
  struct Term {
    Monomial monomial;
    IndexTuple indices;
  };

  FormBasis(const GradingConvention& conv, std::size_t form_degree, int k);

  std::size_t size() const { return terms_.size(); }
  std::size_t form_degree() const { return j_; }
  int graded_degree() const { return k_; }
  std::size_t nvars() const { return n_; }
  int coefficient_degree() const { return coeff_deg_; }
  const Term& term(std::size_t i) const { return terms_[i]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const std::vector<IndexTuple>& tuples() const { return tuples_; }

  /// Index of m dx_I, or -1 when absent from this graded piece.
  std::ptrdiff_t index_of(const Monomial& m, const IndexTuple& indices) const;
  std::ptrdiff_t monomial_rank(const Monomial& m) const;
  std::ptrdiff_t tuple_rank(const IndexTuple& indices) const;

  /// Coordinates of a form; throws InputError when a term lies outside this piece.
  exactla::SparseVec to_coords(const DiffForm& w) const;
  DiffForm from_coords(const exactla::SparseVec& v) const;

 private:
  std::size_t n_;
  std::size_t j_;
  int k_;
  int coeff_deg_;
  std::vector<IndexTuple> tuples_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> monomial_rank_;
  std::map<IndexTuple, std::size_t> tuple_rank_;
  std::vector<Term> terms_;
};

int graded_degree(const Monomial& g, std::size_t form_degree, const GradingConvention& conv);
FormBasis graded_basis(std::size_t form_degree, int k, const GradingConvention& conv);

/// Columns of df^ : src -> dst (dst must be the (j+1)-forms of the same degree).
std::vector<exactla::SparseVec> wedge_df_columns(const Poly& f, const FormBasis& src, const FormBasis& dst);

/// Columns of the exterior derivative src -> dst (dst: (j+1)-forms, degree k-d).
std::vector<exactla::SparseVec> derivative_columns(const FormBasis& src, const FormBasis& dst);

}  // namespace milnor::polyforms
