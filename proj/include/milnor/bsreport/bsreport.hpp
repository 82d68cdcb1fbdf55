#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "milnor/koszulss/spectral.hpp"
#include "milnor/polyforms/diffform.hpp"
#include "milnor/spectra/formulas.hpp"

namespace milnor::bsreport {

using exactla::Rational;
using jacobian::DegreeWindow;
using jacobian::MilnorContext;
using koszulss::SSTable;
using polyforms::DiffForm;
using polyforms::Poly;
using spectra::EvSet;

/// Roots alpha of b_f(-s), with multiplicity. All entries are positive.
using BFunctionRoots = spectra::SpectrumMS;

/// Parses {"roots": [{"num","den","mult"}]}. Throws InputError on schema
/// violations or a root <= 0.
BFunctionRoots bfixture_from_json(const nlohmann::json& j);
BFunctionRoots load_bfixture(const std::filesystem::path& file);
nlohmann::json bfixture_to_json(const BFunctionRoots& roots);

/// bf = bh + {i/d : i in I} as multisets.
bool factorization_check(const BFunctionRoots& bf, const BFunctionRoots& bh, const std::vector<int>& I, int d);

/// Labels of the graded piece reached from degree k.
struct GrLabel {
  int k;
  int d;
  int n;
  /// k/d mod 1; the eigenvalue is exp(-2 pi i k/d).
  Rational lambda_residue() const;
  /// floor(n - k/d).
  long p() const;
};

enum class Status { pass, fail, skip, inconclusive };

std::string to_string(Status s);
/// Throws InputError on an unknown name.
Status status_from_string(const std::string& s);

struct CheckResult {
  std::string name;
  Status status = Status::fail;
  nlohmann::json computed;
  nlohmann::json expected;
  std::string provenance;

  bool operator==(const CheckResult& o) const = default;
};

struct Report {
  std::vector<CheckResult> checks;

  /// 0 when everything passed or was skipped, 1 on any failure, 2 when the
  /// only non-passing entries are inconclusive.
  int exit_code() const;
  std::size_t count(Status s) const;
  bool operator==(const Report& o) const = default;
};

nlohmann::json to_json(const Report& r);
/// Throws InputError on schema violations.
Report report_from_json(const nlohmann::json& j);
/// One line per check.
std::string to_text(const Report& r);

/// Degree k against the fixture: for k satisfying condition (2), pass iff
/// k/d lies in R0 (from bf and ev) exactly when mu^(r_max)_k != 0. Other
/// degrees are skipped; degrees whose limit value is not known are
/// inconclusive.
std::vector<CheckResult> theorem1_check(const SSTable& t, const BFunctionRoots& bf, const EvSet& ev,
                                        DegreeWindow window);

/// Looks for k in [d+1, 2d-2] with condition (2), M'_k != 0, M'_{k+1} = 0 and
/// k/d not in R0. `expected` is the degree the caller expects (nullopt: no
/// witness). Skipped without a fixture.
CheckResult theorem3_witness(const SSTable& t, const std::optional<BFunctionRoots>& bf, const EvSet& ev,
                             std::optional<int> expected);

/// Inputs of the torsion-in-image witness: `member` should lie in the
/// Jacobian ideal, `torsion` should not, both homogeneous of the same degree.
struct Theorem4Input {
  Poly member;
  Poly torsion;
  std::optional<DiffForm> eta;  // Laurent (n-2)-form
  std::optional<Rational> c1;   // regression values
  std::optional<Rational> c2;
};

/// Sub-checks in order: member in (df), torsion not in (df), class of the
/// torsion form in M'_k, class in the image of d: N_{k+d} -> M_k, and with
/// eta: df ^ eta polynomial and d(df ^ eta) = c1 member + c2 torsion with
/// c1 c2 != 0.
std::vector<CheckResult> theorem4_witness(const MilnorContext& ctx, const Theorem4Input& in);

/// Sums mu^(r_max)_k over k in the table by k mod d and compares with
/// expected[residue]. Inconclusive for an empty table or when some entry is
/// not final.
CheckResult eigenspace_check(const SSTable& t, const std::vector<std::size_t>& expected);

/// A row of a page as printed: values of mu^(page)_k (or nu^(page)_{k+d}
/// when shifted) for k = from, from+1, ...
struct PageRow {
  int page = 1;
  bool nu_shifted = false;
  int from = 0;
  std::vector<std::size_t> values;
};

struct Candidate {
  std::string name;
  std::vector<PageRow> rows;
};

struct LocalPoint {
  std::vector<Rational> point;
  std::optional<std::size_t> milnor;
  std::optional<std::size_t> tjurina;
};

/// Parsed configuration; every field except the polynomial is optional.
struct Config {
  std::string name;
  std::string poly_text;
  std::vector<std::string> vars;
  Poly f;

  std::optional<DegreeWindow> hilbert_window;
  std::optional<std::vector<std::size_t>> mu, mu_torsion, mu_free;
  std::optional<std::size_t> tau;
  std::optional<PageRow> nu;  // page field unused
  bool identities = false;
  std::optional<std::size_t> dbar_rank;  // expected wherever nu_{k+d} = tau

  DegreeWindow ss_window{0, -1};
  int r_max = 6;
  std::optional<int> kmax;
  std::vector<PageRow> rows;
  std::vector<Candidate> candidates;
  std::optional<spectra::SpectrumMS> pole_spectrum;
  std::vector<Rational> pole_contains, pole_excludes;

  std::vector<LocalPoint> points;
  bool reconcile = false;

  std::vector<spectra::WeightSystem> local_weights;
  std::optional<spectra::SpectrumMS> local_expected;
  std::optional<spectra::SpectrumMS> sp, sp_p;

  std::optional<BFunctionRoots> bf, bh;
  std::vector<int> factor_I;
  std::optional<DegreeWindow> theorem1_window;
  bool theorem3 = false;
  std::optional<int> theorem3_k;
  std::optional<Theorem4Input> theorem4;
  std::optional<std::vector<std::size_t>> eigenspaces;

  bool needs_table() const;
};

/// Validates the whole config before anything is computed. Fixture paths are
/// relative to `base_dir`. Throws InputError with the offending key.
Config parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir);
Config load_config(const std::filesystem::path& file);

/// Runs every check the config asks for, in a fixed order.
Report run_report(const Config& config);

}  // namespace milnor::bsreport
