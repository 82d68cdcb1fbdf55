#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "milnor/jacobian/milnor_context.hpp"
#include "milnor/polyforms/poly.hpp"

namespace milnor::localinv {

using exactla::Rational;
using polyforms::Poly;

/// Germ of h at a base point, stored translated so the point is the origin.
class LocalGerm {
 public:
  /// Throws InputError when h is Laurent, the point has the wrong length or
  /// h does not vanish at the point.
  explicit LocalGerm(const Poly& h, std::vector<Rational> base = {});

  const Poly& h() const { return h_; }  // translated
  const std::vector<Rational>& base() const { return base_; }
  std::size_t nvars() const { return h_.nvars(); }

 private:
  Poly h_;
  std::vector<Rational> base_;
};

struct JetResult {
  std::size_t value;
  int order;  // certified jet order N: m^N lies in the ideal plus m^(N+1)
};

/// Milnor number dim O/(dh). A smooth point gives 0. Throws UnsupportedInput
/// when no order up to max_order is certified (non-isolated critical point).
JetResult local_milnor(const LocalGerm& g, int max_order = 40);
/// Tjurina number dim O/(h, dh).
JetResult local_tjurina(const LocalGerm& g, int max_order = 40);

/// All partials of f vanish at the projective point. Throws InputError for the
/// zero vector or a length mismatch.
bool is_singular_point(const Poly& f, const std::vector<Rational>& point);

/// Local equation of the projective hypersurface f = 0 at the point: f
/// restricted to the chart of the largest coordinate (in absolute value,
/// first on ties), translated to the origin.
LocalGerm germ_at_point(const Poly& f, const std::vector<Rational>& point);

struct PointGerm {
  std::vector<Rational> point;  // projective coordinates
  LocalGerm germ;
};

struct TauReconciliation {
  bool pass = false;
  std::size_t local_sum = 0;
  std::size_t global = 0;
  std::vector<std::size_t> local;  // per point
  std::string detail;
};

/// Sum of local Tjurina numbers against the stable Hilbert value.
TauReconciliation tau_reconciliation(const jacobian::MilnorContext& ctx, const std::vector<PointGerm>& points);

}  // namespace milnor::localinv
