#include "milnor/bsreport/bsreport.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "milnor/errors.hpp"
#include "milnor/koszulss/koszul.hpp"

namespace milnor::bsreport {

using nlohmann::json;

namespace {

json rational_json(const Rational& q) { return exactla::to_string(q); }

std::string degree_name(const char* what, int k) { return std::string(what) + " k=" + std::to_string(k); }

CheckResult make(std::string name, bool ok, json computed, json expected, std::string provenance) {
  return {std::move(name), ok ? Status::pass : Status::fail, std::move(computed), std::move(expected),
          std::move(provenance)};
}

}  // namespace

BFunctionRoots bfixture_from_json(const json& j) {
  if (!j.is_object() || !j.contains("roots")) throw InputError("b-function fixture: expected {\"roots\": [...]}");
  auto roots = spectra::spectrum_from_json(j.at("roots"));
  for (const auto& [v, m] : roots.entries())
    if (sgn(v) <= 0) throw InputError("b-function fixture: root " + exactla::to_string(v) + " is not positive");
  return roots;
}

BFunctionRoots load_bfixture(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open fixture " + file.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("fixture " + file.string() + ": " + e.what());
  }
  return bfixture_from_json(j);
}

json bfixture_to_json(const BFunctionRoots& roots) { return {{"roots", spectra::to_json(roots)}}; }

bool factorization_check(const BFunctionRoots& bf, const BFunctionRoots& bh, const std::vector<int>& I, int d) {
  if (d < 1) return false;
  BFunctionRoots expect = bh;
  for (int i : I) expect.add(exactla::make_rational(i, d));
  return expect == bf;
}

Rational GrLabel::lambda_residue() const { return exactla::frac(exactla::make_rational(k, d)); }

long GrLabel::p() const { return exactla::floor(Rational(n) - exactla::make_rational(k, d)).get_si(); }

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
    case Status::inconclusive: return "inconclusive";
  }
  return "fail";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skip") return Status::skip;
  if (s == "inconclusive") return Status::inconclusive;
  throw InputError("unknown check status '" + s + "'");
}

int Report::exit_code() const {
  if (count(Status::fail)) return 1;
  if (count(Status::inconclusive)) return 2;
  return 0;
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

json to_json(const Report& r) {
  json out = json::array();
  for (const auto& c : r.checks)
    out.push_back({{"name", c.name},
                   {"status", to_string(c.status)},
                   {"computed", c.computed},
                   {"expected", c.expected},
                   {"provenance", c.provenance}});
  return out;
}

Report report_from_json(const json& j) {
  if (!j.is_array()) throw InputError("report: expected a JSON list");
  Report r;
  for (const auto& e : j) {
    if (!e.is_object()) throw InputError("report: entries must be objects");
    for (const char* key : {"name", "status", "computed", "expected", "provenance"})
      if (!e.contains(key)) throw InputError(std::string("report: entry without \"") + key + "\"");
    if (!e.at("name").is_string() || !e.at("status").is_string() || !e.at("provenance").is_string())
      throw InputError("report: name, status and provenance must be strings");
    r.checks.push_back({e.at("name").get<std::string>(), status_from_string(e.at("status").get<std::string>()),
                        e.at("computed"), e.at("expected"), e.at("provenance").get<std::string>()});
  }
  return r;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << '[' << to_string(c.status) << "] " << c.name << ": computed " << c.computed.dump();
    if (!c.expected.is_null()) os << ", expected " << c.expected.dump();
    if (!c.provenance.empty()) os << " (" << c.provenance << ')';
    os << '\n';
  }
  os << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, " << r.count(Status::skip)
     << " skip, " << r.count(Status::inconclusive) << " inconclusive\n";
  return os.str();
}

std::vector<CheckResult> theorem1_check(const SSTable& t, const BFunctionRoots& bf, const EvSet& ev,
                                        DegreeWindow window) {
  if (window.lo < t.window.lo || window.hi > t.window.hi)
    throw InputError("theorem1_check: window outside the table");
  const auto r0 = spectra::r0_from_bfunction(bf, ev);
  std::vector<CheckResult> out;
  for (int k = window.lo; k <= window.hi; ++k) {
    const GrLabel label{k, t.d, static_cast<int>(t.n)};
    const std::string name = degree_name("theorem1", k);
    json where = {{"lambda_residue", rational_json(label.lambda_residue())}, {"p", label.p()}};
    if (!spectra::condition2(k, t.d, ev)) {
      out.push_back({name, Status::skip, "skipped (condition 2)", nullptr, "eigenvalue set"});
      continue;
    }
    const auto i = t.index_of(k);
    const std::size_t m = t.mu_page.back()[i];
    const bool in_r0 = r0.contains(exactla::make_rational(k, t.d));
    json computed = {{"mu_inf", m}, {"in_r0", in_r0}, {"label", where}};
    if (!t.mu_final[i]) {
      out.push_back({name, Status::inconclusive, computed, "mu_inf != 0 iff k/d in R0",
                     "table not stabilized at page " + std::to_string(t.r_max)});
      continue;
    }
    out.push_back(make(name, in_r0 == (m != 0), computed, "mu_inf != 0 iff k/d in R0", "fixture and table"));
  }
  return out;
}

CheckResult theorem3_witness(const SSTable& t, const std::optional<BFunctionRoots>& bf, const EvSet& ev,
                             std::optional<int> expected) {
  const json want = expected ? json(*expected) : json(nullptr);
  if (!bf) return {"theorem3 witness", Status::skip, "skipped (no b-function fixture)", want, "missing fixture"};
  const auto r0 = spectra::r0_from_bfunction(*bf, ev);
  const int lo = t.d + 1, hi = 2 * t.d - 2;
  if (lo > hi || lo < t.window.lo || hi + 1 > t.window.hi)
    return {"theorem3 witness", Status::inconclusive, "table window misses [d+1, 2d-1]", want, "computed"};
  std::optional<int> found;
  for (int k = lo; k <= hi && !found; ++k) {
    if (!spectra::condition2(k, t.d, ev)) continue;
    if (t.mu_torsion[t.index_of(k)] == 0 || t.mu_torsion[t.index_of(k + 1)] != 0) continue;
    if (r0.contains(exactla::make_rational(k, t.d))) continue;
    found = k;
  }
  const json got = found ? json(*found) : json(nullptr);
  return make("theorem3 witness", found == expected, got, want, "fixture and torsion row");
}

std::vector<CheckResult> theorem4_witness(const MilnorContext& ctx, const Theorem4Input& in) {
  const std::size_t n = ctx.n();
  if (!in.member.is_homogeneous() || !in.torsion.is_homogeneous() || in.member.is_zero() ||
      in.torsion.is_zero() || in.member.degree() != in.torsion.degree())
    throw InputError("theorem4: member and torsion must be nonzero homogeneous of one degree");
  const int k = in.torsion.degree() + static_cast<int>(n);
  const auto vars = polyforms::default_variables(n);
  std::vector<CheckResult> out;

  const bool member_in = jacobian::ideal_membership(ctx, in.member);
  out.push_back(make("theorem4 member in Jacobian ideal", member_in, member_in, true, "computed"));
  const bool torsion_in = jacobian::ideal_membership(ctx, in.torsion);
  out.push_back(make("theorem4 torsion form not in Jacobian ideal", !torsion_in, torsion_in, false, "computed"));

  const auto tors = jacobian::torsion_subspaces(ctx, {k, k});
  const bool in_torsion = exactla::membership(ctx.normal_form(k, in.torsion), tors.at(k));
  out.push_back(make("theorem4 class in M'_" + std::to_string(k), in_torsion, in_torsion, true, "computed"));

  koszulss::KoszulComplex kc(ctx);
  const bool in_image = koszulss::image_membership(kc, in.torsion, k + ctx.d());
  out.push_back(make("theorem4 class in d(N_" + std::to_string(k + ctx.d()) + ")", in_image, in_image, true,
                     "computed"));

  if (in.eta) {
    if (in.eta->nvars() != n || in.eta->degree() + 2 != n) throw InputError("theorem4: eta must be an (n-2)-form");
    const DiffForm xi = polyforms::wedge(DiffForm::differential(ctx.f()), *in.eta);
    bool polynomial = true;
    for (const auto& [idx, g] : xi.components()) polynomial = polynomial && !g.has_negative_exponents();
    polyforms::IndexTuple all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(static_cast<int>(i));
    const Poly g = polyforms::ext_derivative(xi).component(all);

    // g = c1 member + c2 torsion, by coefficient matching
    std::set<polyforms::Monomial> monos;
    for (const Poly* p : {&g, &in.member, &in.torsion})
      for (const auto& [m, c] : p->terms()) monos.insert(m);
    exactla::RationalMatrix a(monos.size(), 2);
    exactla::Vector b(monos.size());
    std::size_t row = 0;
    for (const auto& m : monos) {
      a(row, 0) = in.member.coefficient(m);
      a(row, 1) = in.torsion.coefficient(m);
      b[row] = g.coefficient(m);
      ++row;
    }
    const auto sol = exactla::solve(a, b);
    json computed = {{"xi_polynomial", polynomial}, {"d_xi", polyforms::to_string(g, vars)}};
    json expected = {{"xi_polynomial", true}, {"c1c2", "nonzero"}};
    bool ok = polynomial && sol.has_value();
    if (sol) {
      const Rational c1 = (*sol)[0], c2 = (*sol)[1];
      computed["c1"] = rational_json(c1);
      computed["c2"] = rational_json(c2);
      ok = ok && !exactla::is_zero(c1) && !exactla::is_zero(c2);
      if (in.c1) {
        expected["c1"] = rational_json(*in.c1);
        ok = ok && c1 == *in.c1;
      }
      if (in.c2) {
        expected["c2"] = rational_json(*in.c2);
        ok = ok && c2 == *in.c2;
      }
    } else {
      computed["c1"] = nullptr;
      computed["c2"] = nullptr;
    }
    out.push_back(make("theorem4 Laurent primitive", ok, computed, expected,
                       in.c1 || in.c2 ? "regression values" : "computed"));
  }
  return out;
}

CheckResult eigenspace_check(const SSTable& t, const std::vector<std::size_t>& expected) {
  const json want = expected;
  if (t.ks.empty()) return {"eigenspaces", Status::inconclusive, "empty table", want, "computed"};
  if (expected.size() != static_cast<std::size_t>(t.d))
    throw InputError("eigenspace_check: need one expected value per residue mod d");
  std::vector<std::size_t> sums(static_cast<std::size_t>(t.d), 0);
  bool final = true;
  for (std::size_t i = 0; i < t.ks.size(); ++i) {
    final = final && t.mu_final[i];
    sums[static_cast<std::size_t>(((t.ks[i] % t.d) + t.d) % t.d)] += t.mu_page.back()[i];
  }
  if (!final)
    return {"eigenspaces", Status::inconclusive, sums, want,
            "table not stabilized at page " + std::to_string(t.r_max)};
  return make("eigenspaces", sums == expected, sums, want, "config");
}

}  // namespace milnor::bsreport
