#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "milnor/koszulss/koszul.hpp"
#include "milnor/spectra/spectrum.hpp"

namespace milnor::koszulss {

/// (n-1)-forms eta_0, ..., eta_{r-1} with eta_i of degree k - i d, eta_0
/// closed under df^ and d eta_{i-1} = df ^ eta_i.
using Chain = std::vector<SparseVec>;

/// Basis element of N^(r)_k.
struct SourceChain {
  Vector n_coords;  // class of eta_0 in N_k
  Chain chain;      // length r
};

/// d eta_{s-1} of a page-s chain, spanning part of the image in M_m.
struct ImageGenerator {
  int page;
  int source_degree;
  Chain chain;
  SparseVec target;  // Omega^n_m coordinates
  Vector nf;         // M_m coordinates
};

/// Page r of the pole order spectral sequence on degrees [0, kmax].
struct SpectralPage {
  int r = 1;
  int kmax = 0;
  std::map<int, std::vector<SourceChain>> sources;    // basis of N^(r)_k
  std::map<int, std::vector<ImageGenerator>> images;  // generators from pages < r, per degree m
  std::map<int, std::size_t> previous_ranks;          // rank of d^(r-1) out of degree k

  std::size_t nu(int k) const;
  /// mu^(r)_m; needs mu_m from the context.
  std::size_t mu(const MilnorContext& ctx, int m) const;
};

SpectralPage first_page(const KoszulComplex& kc, int kmax);

/// Computes d^(r) on every source degree and returns page r+1.
SpectralPage page_advance(const KoszulComplex& kc, const SpectralPage& page);

/// Canonical coordinates of a class of M_m modulo the images of pages < r
/// (reduced against those images in the M_m basis).
Vector reduce_modulo_images(const SpectralPage& page, int m, const Vector& nf, int below_page);

/// Zig-zag from scratch: starting at a closed eta_0 of degree k whose class
/// lies in N^(r)_k, returns the class of d eta_{r-1} in M_{k-rd} reduced
/// modulo the images of pages < r (taken from `page`, which must have index
/// >= r). Each solve step is shifted by a random element of ker(df^) drawn
/// from `rng` when it is non-null. Throws InternalError when a solve step
/// fails (eta_0 was not in N^(r)).
Vector zigzag_dr(const KoszulComplex& kc, const SpectralPage& page, const SparseVec& eta0, int k, int r,
                 std::mt19937_64* rng = nullptr);

/// Entry state in the assembled table.
enum class EntryState { determined, window_edge };

struct SSTable {
  jacobian::DegreeWindow window;  // displayed degrees
  int kmax = 0;                   // degrees actually computed: [0, kmax]
  int r_max = 0;
  int d = 0;
  std::size_t n = 0;
  std::size_t tau = 0;
  std::vector<int> ks;
  std::vector<std::size_t> gamma, mu, mu_torsion, mu_free, nu;
  std::vector<std::vector<std::size_t>> mu_page;  // [r-1][i], r = 1..r_max
  std::vector<std::vector<std::size_t>> nu_page;
  std::vector<std::vector<std::optional<std::size_t>>> nu_page_shifted;  // nu^(r)_{k+d}, when k+d <= kmax
  std::vector<std::vector<EntryState>> mu_state;
  /// True when no differential of page >= r_max can reach M^(r_max)_k inside
  /// the computed range, so mu^(r_max)_k is the limit value there.
  std::vector<bool> mu_final;
  std::vector<bool> nu_final;

  std::size_t index_of(int k) const;
  std::size_t mu_r(int r, int k) const;
  std::size_t nu_r(int r, int k) const;
  bool mu_r_determined(int r, int k) const;
};

/// Default computation range [n, 3 n d].
jacobian::DegreeWindow default_ss_window(const MilnorContext& ctx);

/// Assembles the table on `window` using pages up to r_max, computing degrees
/// up to `kmax` (default: max(window.hi, 3 n d)). Throws UnsupportedInput for
/// non-isolated singularities.
SSTable ss_table(const MilnorContext& ctx, jacobian::DegreeWindow window, int r_max = 6,
                 std::optional<int> kmax = std::nullopt);

nlohmann::json to_json(const SSTable& t);
std::string to_text(const SSTable& t);
std::string to_csv(const SSTable& t);

struct PoleSpectrum {
  spectra::SpectrumMS spectrum;
  std::vector<std::string> warnings;  // entries that are not final
  bool complete() const { return warnings.empty(); }
};

/// {k/d with multiplicity mu^(r_max)_k : 0 < k < n d}.
PoleSpectrum pole_spectrum(const SSTable& t);
PoleSpectrum pole_spectrum(const MilnorContext& ctx, int r_max = 6);

}  // namespace milnor::koszulss
