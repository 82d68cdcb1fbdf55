#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "milnor/exactla/matrix.hpp"
#include "milnor/exactla/sparse.hpp"
#include "milnor/polyforms/grading.hpp"
#include "milnor/polyforms/poly.hpp"

namespace milnor::jacobian {

using exactla::Rational;
using exactla::RationalMatrix;
using exactla::SparseEchelon;
using exactla::SparseVec;
using exactla::Subspace;
using exactla::Vector;
using polyforms::FormBasis;
using polyforms::Poly;

/// Inclusive degree range [lo, hi].
struct DegreeWindow {
  int lo;
  int hi;
  bool contains(int k) const { return lo <= k && k <= hi; }
  std::size_t size() const { return hi < lo ? 0 : static_cast<std::size_t>(hi - lo + 1); }
};

/// Memoizes one value per degree; entries are built once and never change.
template <class T>
class DegreeCache {
 public:
  template <class Build>
  const T& get(int k, Build&& build) const {
    Slot* slot;
    {
      std::lock_guard lock(mutex_);
      auto& p = entries_[k];
      if (!p) p = std::make_unique<Slot>();
      slot = p.get();
    }
    std::call_once(slot->once, [&] { slot->value = std::make_unique<T>(build()); });
    return *slot->value;
  }

 private:
  struct Slot {
    std::once_flag once;
    std::unique_ptr<T> value;
  };
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<Slot>> entries_;
};

/// The graded piece M_k = Omega^n_k / df^Omega^{n-1}_k in canonical coordinates.
struct TopSlice {
  FormBasis top;     // Omega^n_k: monomials of degree k - n times the volume form
  FormBasis sub;     // Omega^{n-1}_k
  std::vector<SparseVec> wedge_columns;  // df^ : sub -> top
  SparseEchelon image;                   // echelon of the image of df^, tags in sub coordinates
  std::vector<std::size_t> standard;     // free columns: the monomial basis of M_k
};

/// Homogeneous f with its Milnor algebra; all per-degree data is memoized.
class MilnorContext {
 public:
  explicit MilnorContext(Poly f);

  const Poly& f() const { return f_; }
  int d() const { return conv_.d; }
  std::size_t n() const { return conv_.n; }
  const polyforms::GradingConvention& convention() const { return conv_; }
  const std::vector<Poly>& partials() const { return partials_; }

  const TopSlice& top_slice(int k) const;
  /// Echelon of the image of df^ on Omega^{n-1}_k whose rows remember their
  /// preimages (tags in Omega^{n-1}_k coordinates).
  const SparseEchelon& tracked_image(int k) const;

  /// dim M_k.
  std::size_t mu(int k) const;

  /// Coordinates in M_k (one per standard monomial) of a top form given in
  /// Omega^n_k coordinates.
  Vector normal_form(int k, const SparseVec& top_coords) const;
  /// Class of g * volume form in M_k; g must be homogeneous of degree k - n.
  Vector normal_form(int k, const Poly& g) const;

  /// Some eta in Omega^{n-1}_k with df ^ eta = v, or nullopt if v is not in the image.
  std::optional<SparseVec> solve_wedge(int k, const SparseVec& v) const;

  /// Matrix of multiplication by a homogeneous polynomial h: M_k -> M_{k + deg h}.
  RationalMatrix multiplication_matrix(int k, const Poly& h) const;
  /// Multiplication by x_var, cached.
  const RationalMatrix& variable_multiplication(int k, std::size_t var) const;

 private:
  Poly f_;
  polyforms::GradingConvention conv_;
  std::vector<Poly> partials_;
  DegreeCache<TopSlice> slices_;
  std::vector<std::unique_ptr<DegreeCache<RationalMatrix>>> var_mult_;
};

struct HilbertEntry {
  int k;
  std::size_t mu;
  std::size_t mu_torsion;  // dim M'_k
  std::size_t mu_free;     // dim M''_k
};

/// Rows (mu, mu', mu'') over a degree window.
using HilbertRow = std::vector<HilbertEntry>;

/// Default window [n, 2 n d] for row computations.
DegreeWindow default_hilbert_window(const MilnorContext& ctx);

std::size_t mu(const MilnorContext& ctx, int k);

/// True iff g * volume form vanishes in M, i.e. g lies in the Jacobian ideal.
/// Throws InputError when g is not homogeneous.
bool ideal_membership(const MilnorContext& ctx, const Poly& g);

/// Torsion subspace M'_k (in M_k coordinates) for every k in the window,
/// computed as the elements killed by all monomials of degree N with N
/// doubling from d until two consecutive values agree on the window.
/// Throws UnsupportedInput when the singularities are not isolated.
std::map<int, Subspace> torsion_subspaces(const MilnorContext& ctx, DegreeWindow window);
std::map<int, std::size_t> torsion_dims(const MilnorContext& ctx, DegreeWindow window);

/// The N reached by the doubling search in `torsion_subspaces`.
int torsion_annihilator_order(const MilnorContext& ctx, DegreeWindow window);

/// Multiplication by the linear form is injective past the torsion degrees,
/// i.e. the form vanishes at no singular point.
bool avoids_singular_points(const MilnorContext& ctx, const std::vector<Rational>& ell);

/// Cross-check of torsion: dim of the kernel of multiplication by
/// ell^(K-k): M_k -> M_K, with K past the degrees where torsion can live.
/// Throws DiagnosticError when ell vanishes at a singular point.
std::map<int, std::size_t> torsion_dims_generic(const MilnorContext& ctx, DegreeWindow window,
                                                const std::vector<Rational>& ell);

/// Linear forms: coefficients 1,2,..,n and 1,3,9,...
std::vector<Rational> generic_form_a(std::size_t n);
std::vector<Rational> generic_form_b(std::size_t n);

/// The first `count` forms avoiding the singular points among form a, form b
/// and (1, j, j^2, ...) for j = 4, 5, ...
std::vector<std::vector<Rational>> checking_forms(const MilnorContext& ctx, std::size_t count);

HilbertRow hilbert_row(const MilnorContext& ctx, DegreeWindow window);

/// mu_k is constant over n d consecutive degrees at the top of [n, 2 n d].
bool isolated_sing_check(const MilnorContext& ctx);

/// Stable value of mu_k. Throws DiagnosticError when the window does not show
/// n d consecutive equal values at its top.
std::size_t global_tjurina(const MilnorContext& ctx, std::optional<DegreeWindow> window = std::nullopt);

/// Coefficients of (t + t^2 + ... + t^(d-1))^n, indexed by k (vector index = k).
std::vector<std::size_t> gamma_series(int d, std::size_t n);
std::size_t gamma(int d, std::size_t n, int k);

}  // namespace milnor::jacobian
