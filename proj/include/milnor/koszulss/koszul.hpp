#pragma once

#include <cstddef>
#include <vector>

#include "milnor/jacobian/milnor_context.hpp"

namespace milnor::koszulss {

using exactla::Rational;
using exactla::RationalMatrix;
using exactla::SparseEchelon;
using exactla::SparseVec;
using exactla::Vector;
using jacobian::MilnorContext;
using polyforms::FormBasis;

/// Koszul complex around Omega^{n-1} in degree k, with a basis of N_k.
///
/// N_k is represented by cocycles supported on the columns that stay free
/// after echelonizing the boundaries df^Omega^{n-2}_k; every class has a
/// unique such representative.
struct KoszulSlice {
  int k;
  FormBasis lower;   // Omega^{n-2}_k
  FormBasis middle;  // Omega^{n-1}_k
  std::vector<SparseVec> lower_columns;  // df^ : lower -> middle
  SparseEchelon boundaries;              // image of lower_columns
  std::vector<SparseVec> reps;           // basis of N_k as cocycles
  SparseEchelon classes;                 // boundaries + reps; tags give N-coordinates
  std::vector<SparseVec> derivative_columns;  // d : middle -> Omega^n_{k-d}
};

/// Cached slices for a context; thread-safe.
class KoszulComplex {
 public:
  explicit KoszulComplex(const MilnorContext& ctx) : ctx_(ctx) {}
  const MilnorContext& context() const { return ctx_; }
  const KoszulSlice& slice(int k) const;

  /// N_k coordinates of a df^-closed (n-1)-form of degree k. Throws InputError
  /// when the form is not closed under df^.
  Vector n_coordinates(int k, const SparseVec& cocycle) const;
  /// d applied to an (n-1)-form of degree k, in Omega^n_{k-d} coordinates.
  SparseVec derivative(int k, const SparseVec& form) const;

 private:
  const MilnorContext& ctx_;
  jacobian::DegreeCache<KoszulSlice> slices_;
};

/// dim N_k.
std::size_t nu(const KoszulComplex& kc, int k);

/// Matrix of d: N_k -> M_{k-d} in (rep basis, standard monomial) coordinates.
RationalMatrix d1_matrix(const KoszulComplex& kc, int k);

/// True iff the class of g * volume form in M_{k-d} lies in d(N_k).
/// Throws InputError when deg g + n != k - d.
bool image_membership(const KoszulComplex& kc, const polyforms::Poly& g, int k);

/// Rank of N_{k+d} -> M_k -> M''_k.
std::size_t dbar_rank(const KoszulComplex& kc, int k);

}  // namespace milnor::koszulss
