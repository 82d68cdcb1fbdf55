// milnor: command line front end.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "milnor/bsreport/bsreport.hpp"
#include "milnor/errors.hpp"
#include "milnor/jacobian/milnor_context.hpp"
#include "milnor/koszulss/spectral.hpp"
#include "milnor/localinv/localinv.hpp"
#include "milnor/polyforms/parse.hpp"
#include "milnor/spectra/formulas.hpp"
#include "milnor/vfilt/vfilt.hpp"

using namespace milnor;
using nlohmann::json;

namespace {

constexpr int kExitInput = 3;
constexpr int kExitUnsupported = 4;
constexpr int kExitInternal = 5;

struct Common {
  std::string poly;
  std::string vars;
  std::string range;
  int pages = 6;
  std::string format = "text";
  std::string fixture;
  std::string out;
};

std::vector<std::string> variables(const Common& c) {
  if (!c.vars.empty()) return polyforms::parse_variable_list(c.vars);
  return polyforms::default_variables(3);
}

polyforms::Poly read_poly(const Common& c) {
  if (c.poly.empty()) throw InputError("--poly is required");
  return polyforms::parse_poly(c.poly, variables(c));
}

std::optional<jacobian::DegreeWindow> read_range(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto dots = text.find("..");
  if (dots == std::string::npos) throw InputError("--range expects A..B");
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    int lo = std::stoi(a, &used);
    if (used != a.size()) throw InputError("--range expects A..B");
    int hi = std::stoi(b, &used);
    if (used != b.size()) throw InputError("--range expects A..B");
    if (lo < 0 || hi < lo) throw InputError("--range needs 0 <= A <= B");
    return jacobian::DegreeWindow{lo, hi};
  } catch (const std::logic_error&) {
    throw InputError("--range expects A..B");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<exactla::Rational> rationals(const std::string& text) {
  std::vector<exactla::Rational> out;
  for (const auto& s : split(text, ',')) out.push_back(exactla::parse_rational(s));
  return out;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream o(c.out);
  if (!o) throw InputError("cannot write " + c.out);
  o << text;
}

void check_format(const Common& c, bool csv_ok) {
  if (c.format != "text" && c.format != "json" && !(csv_ok && c.format == "csv"))
    throw InputError("unsupported --format " + c.format);
}

std::string spectrum_out(const Common& c, const spectra::SpectrumMS& s) {
  check_format(c, false);
  if (c.format == "json") return spectra::to_json(s).dump(2) + "\n";
  return spectra::to_string(s) + "\n";
}

int run_hilbert(const Common& c) {
  check_format(c, true);
  jacobian::MilnorContext ctx(read_poly(c));
  auto window = read_range(c.range).value_or(jacobian::default_hilbert_window(ctx));
  auto row = jacobian::hilbert_row(ctx, window);
  std::ostringstream os;
  if (c.format == "json") {
    json j = json::array();
    for (const auto& e : row) j.push_back({{"k", e.k}, {"mu", e.mu}, {"mu_torsion", e.mu_torsion}, {"mu_free", e.mu_free}});
    os << j.dump(2) << '\n';
  } else if (c.format == "csv") {
    os << "k,mu,mu_torsion,mu_free\n";
    for (const auto& e : row) os << e.k << ',' << e.mu << ',' << e.mu_torsion << ',' << e.mu_free << '\n';
  } else {
    os << "k\tmu\tmu'\tmu''\n";
    for (const auto& e : row) os << e.k << '\t' << e.mu << '\t' << e.mu_torsion << '\t' << e.mu_free << '\n';
  }
  emit(c, os.str());
  return 0;
}

int run_ss_table(const Common& c) {
  check_format(c, true);
  jacobian::MilnorContext ctx(read_poly(c));
  auto window = read_range(c.range).value_or(koszulss::default_ss_window(ctx));
  auto t = koszulss::ss_table(ctx, window, c.pages);
  if (c.format == "json") {
    json j = koszulss::to_json(t);
    auto ps = koszulss::pole_spectrum(t);
    j["pole_spectrum"] = spectra::to_json(ps.spectrum);
    j["pole_spectrum_warnings"] = ps.warnings;
    emit(c, j.dump(2) + "\n");
  } else if (c.format == "csv") {
    emit(c, koszulss::to_csv(t));
  } else {
    auto ps = koszulss::pole_spectrum(t);
    std::string text = koszulss::to_text(t) + "pole spectrum: " + spectra::to_string(ps.spectrum) + "\n";
    for (const auto& w : ps.warnings) text += "warning: " + w + "\n";
    emit(c, text);
  }
  return 0;
}

int run_local(const Common& c, const std::string& point) {
  check_format(c, false);
  auto f = read_poly(c);
  auto p = rationals(point);
  if (f.is_homogeneous() && !localinv::is_singular_point(f, p)) {
    emit(c, c.format == "json" ? json{{"singular", false}}.dump(2) + "\n" : std::string("smooth point\n"));
    return 0;
  }
  auto germ = f.is_homogeneous() && p.size() == f.nvars() ? localinv::germ_at_point(f, p) : localinv::LocalGerm(f, p);
  auto mu = localinv::local_milnor(germ);
  auto tau = localinv::local_tjurina(germ);
  if (c.format == "json") {
    emit(c, json{{"singular", true}, {"milnor", mu.value}, {"tjurina", tau.value}, {"jet_order", mu.order}}.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "germ: " << polyforms::to_string(germ.h(), polyforms::default_variables(germ.nvars())) << '\n'
       << "mu = " << mu.value << "\ntau = " << tau.value << '\n';
    emit(c, os.str());
  }
  return 0;
}

int run_vfilt(const Common& c, const std::vector<std::string>& conds_text, const std::string& names_text,
              const std::string& alpha_text, std::optional<long> bound) {
  check_format(c, false);
  auto names = split(names_text, ',');
  std::vector<vfilt::VCondition> conds;
  for (const auto& t : conds_text) conds.push_back(vfilt::parse_vcondition(t, names));
  const auto alpha = exactla::parse_rational(alpha_text);
  auto witness = vfilt::grv_witness(alpha, conds, bound);
  if (c.format == "json") {
    json j = {{"alpha", exactla::to_string(alpha)}, {"vanishes", !witness.has_value()}};
    j["witness"] = witness ? json(*witness) : json(nullptr);
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "Gr_V^" << exactla::to_string(alpha) << (witness ? " != 0" : " = 0");
    if (witness) {
      os << " (witness";
      for (int e : *witness) os << ' ' << e;
      os << ')';
    }
    os << '\n';
    emit(c, os.str());
  }
  return 0;
}

int run_verify(const Common& c, const std::string& config) {
  check_format(c, false);
  if (config.empty()) {
    if (c.fixture.empty()) throw InputError("verify needs --config or --fixture");
    auto roots = bsreport::load_bfixture(c.fixture);
    emit(c, c.format == "json" ? bsreport::bfixture_to_json(roots).dump(2) + "\n"
                               : spectra::to_string(roots) + "\n");
    return 0;
  }
  auto cfg = bsreport::load_config(config);
  if (!c.fixture.empty()) cfg.bf = bsreport::load_bfixture(c.fixture);
  auto report = bsreport::run_report(cfg);
  emit(c, c.format == "json" ? bsreport::to_json(report).dump(2) + "\n" : bsreport::to_text(report));
  return report.exit_code();
}

void add_common(CLI::App* app, Common& c, bool poly) {
  if (poly) {
    app->add_option("--poly", c.poly, "Polynomial, e.g. x^5+y^4*z+x^4*y");
    app->add_option("--vars", c.vars, "Variables, comma separated (default x,y,z)");
  }
  app->add_option("--format", c.format, "text, json or csv");
  app->add_option("--out", c.out, "Write output to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Milnor algebras, pole order spectral sequences and spectra of projective hypersurfaces"};
  app.require_subcommand(1);
  Common c;
  int code = 0;

  auto* hilbert = app.add_subcommand("hilbert", "Rows mu, mu', mu'' of the Milnor algebra");
  add_common(hilbert, c, true);
  hilbert->add_option("--range", c.range, "Degrees A..B");
  hilbert->callback([&] { code = run_hilbert(c); });

  auto* ss = app.add_subcommand("ss-table", "Pole order spectral sequence table");
  add_common(ss, c, true);
  ss->add_option("--range", c.range, "Degrees A..B");
  ss->add_option("--pages", c.pages, "Last page R")->check(CLI::PositiveNumber);
  ss->callback([&] { code = run_ss_table(c); });

  auto* spectrum = app.add_subcommand("spectrum", "Spectrum formulas");
  spectrum->require_subcommand(1);
  std::string weights, pairs, left, right, center;
  auto* qh = spectrum->add_subcommand("qh", "Weighted homogeneous spectrum");
  add_common(qh, c, false);
  qh->add_option("--weights", weights, "Weights, e.g. 1/5,1/4")->required();
  qh->callback([&] {
    spectra::WeightSystem w{rationals(weights)};
    emit(c, spectrum_out(c, spectra::qh_spectrum(w)));
  });
  auto* puiseux = spectrum->add_subcommand("puiseux", "Spectral numbers of an irreducible plane curve germ");
  add_common(puiseux, c, false);
  puiseux->add_option("--pairs", pairs, "Puiseux pairs k,n;k,n;...")->required();
  puiseux->add_option("--symmetrize", center, "Add the mirror image about this center");
  puiseux->callback([&] {
    std::vector<spectra::PuiseuxPair> pp;
    for (const auto& item : split(pairs, ';')) {
      auto kn = split(item, ',');
      if (kn.size() != 2) throw InputError("--pairs expects k,n;k,n;...");
      pp.push_back({std::stoi(kn[0]), std::stoi(kn[1])});
    }
    auto s = spectra::puiseux_spectrum_below1(pp);
    if (!center.empty()) s = spectra::symmetrize(s, exactla::parse_rational(center));
    emit(c, spectrum_out(c, s));
  });
  auto* join = spectrum->add_subcommand("join", "Thom-Sebastiani sum of two spectra");
  add_common(join, c, false);
  join->add_option("--left", left, "Values, comma separated")->required();
  join->add_option("--right", right, "Values, comma separated")->required();
  join->callback([&] {
    auto a = spectra::SpectrumMS::from_values(rationals(left));
    auto b = spectra::SpectrumMS::from_values(rationals(right));
    emit(c, spectrum_out(c, spectra::ts_join(a, b)));
  });

  auto* vf = app.add_subcommand("vfilt", "Monomial V-filtration test");
  add_common(vf, c, false);
  std::vector<std::string> conds;
  std::string names = "i,j,k", alpha;
  std::optional<long> bound;
  vf->add_option("--condition", conds, "Condition such as (4i+5j+9)/20, repeatable")->required();
  vf->add_option("--names", names, "Exponent names (default i,j,k)");
  vf->add_option("--alpha", alpha, "alpha")->required();
  vf->add_option("--bound", bound, "Search bound per exponent");
  vf->callback([&] { code = run_vfilt(c, conds, names, alpha, bound); });

  auto* local = app.add_subcommand("local", "Local Milnor and Tjurina numbers at a point");
  add_common(local, c, true);
  std::string point;
  local->add_option("--point", point, "Coordinates, comma separated")->required();
  local->callback([&] { code = run_local(c, point); });

  auto* verify = app.add_subcommand("verify", "Run a verification report");
  add_common(verify, c, false);
  std::string config;
  verify->add_option("--config", config, "Report configuration");
  verify->add_option("--fixture", c.fixture, "b-function fixture (replaces the config's bf)");
  verify->callback([&] { code = run_verify(c, config); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const polyforms::ParseError& e) {
    std::cerr << "error: " << e.what() << " at offset " << e.position() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const UnsupportedInput& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const DiagnosticError& e) {
    std::cerr << "undecided: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return code;
}
