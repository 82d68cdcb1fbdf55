#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "milnor/spectra/spectrum.hpp"

namespace milnor::spectra {

/// Weights w_i in (0, 1/2] with 1/w_i an integer, as for x_1^(1/w_1) + ... .
struct WeightSystem {
  std::vector<Rational> weights;

  /// Throws InputError unless every 1/w_i is an integer >= 2.
  void validate() const;
  /// Weights of x_1^a_1 + ... + x_m^a_m.
  static WeightSystem brieskorn_pham(const std::vector<int>& exponents);
};

/// {sum_i a_i w_i : 1 <= a_i <= 1/w_i - 1}.
SpectrumMS qh_spectrum(const WeightSystem& w);

/// prod_i (1/w_i - 1).
std::size_t qh_milnor_number(const WeightSystem& w);

struct PuiseuxPair {
  int k;
  int n;
};

/// Throws InputError on k, n <= 0, n == 1 or gcd(k, n) != 1.
void validate_puiseux(const std::vector<PuiseuxPair>& pairs);

/// Characteristic integers w_1 = k_1, w_i = w_{i-1} n_{i-1} n_i + k_i.
std::vector<long> puiseux_weights(const std::vector<PuiseuxPair>& pairs);

/// Spectral numbers < 1 of an irreducible plane curve germ with the given
/// Puiseux pairs: (r + i/n_v + j/w_v) / (n_{v+1} ... n_g) over
/// 1 <= i < n_v, 1 <= j < w_v, 0 <= r < n_{v+1} ... n_g, i/n_v + j/w_v < 1.
SpectrumMS puiseux_spectrum_below1(const std::vector<PuiseuxPair>& pairs);

/// s together with its mirror image 2 c - s. Throws InputError when some
/// entry is >= c.
SpectrumMS symmetrize(const SpectrumMS& s, const Rational& center);

/// {a + b}: spectrum of a sum of functions in separate variables.
SpectrumMS ts_join(const SpectrumMS& a, const SpectrumMS& b);

/// Residue of q in [0, 1).
Rational residue(const Rational& q);

/// Monodromy eigenvalues exp(-2 pi i a) stored as residues a mod 1. Always
/// holds 0.
class EvSet {
 public:
  EvSet() { residues_.insert(Rational(0)); }
  void add(const Rational& alpha) { residues_.insert(residue(alpha)); }
  bool contains(const Rational& alpha) const { return residues_.count(residue(alpha)) > 0; }
  const std::set<Rational>& residues() const { return residues_; }
  std::size_t size() const { return residues_.size(); }

 private:
  std::set<Rational> residues_;
};

/// Union of the residues of the local spectra, plus 0.
EvSet ev_set(const std::vector<SpectrumMS>& local_spectra);

/// exp(-2 pi i k/d) is not an eigenvalue. Throws InputError for d < 1.
bool condition2(int k, int d, const EvSet& ev);

/// Roots whose residue is not an eigenvalue residue.
SpectrumMS r0_from_bfunction(const SpectrumMS& roots, const EvSet& ev);

/// Every value of spP has some value + i (i = 0, 1, 2, ...) present in sp.
bool p_compat_check(const SpectrumMS& sp, const SpectrumMS& spP);

}  // namespace milnor::spectra
