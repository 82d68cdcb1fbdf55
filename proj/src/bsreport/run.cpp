#include "milnor/bsreport/bsreport.hpp"
#include "milnor/errors.hpp"
#include "milnor/koszulss/koszul.hpp"
#include "milnor/localinv/localinv.hpp"

namespace milnor::bsreport {

using nlohmann::json;

namespace {

json texts(const spectra::SpectrumMS& s) {
  json out = json::array();
  for (const auto& v : s.values()) out.push_back(exactla::to_string(v));
  return out;
}

json texts(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(exactla::to_string(q));
  return out;
}

CheckResult compare(std::string name, const json& computed, const json& expected, std::string provenance) {
  return {std::move(name), computed == expected ? Status::pass : Status::fail, computed, expected,
          std::move(provenance)};
}

// Values of a printed row read off the table; nullopt past the window.
std::optional<std::vector<std::size_t>> read_row(const SSTable& t, const PageRow& row) {
  if (row.page > t.r_max) return std::nullopt;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < row.values.size(); ++i) {
    const int k = row.from + static_cast<int>(i) + (row.nu_shifted ? t.d : 0);
    if (!t.window.contains(k)) return std::nullopt;
    out.push_back(row.nu_shifted ? t.nu_r(row.page, k) : t.mu_r(row.page, k));
  }
  return out;
}

std::string row_name(const PageRow& row) {
  return (row.nu_shifted ? "nu^(" : "mu^(") + std::to_string(row.page) + ")" + (row.nu_shifted ? "_{k+d}" : "_k") +
         " from k=" + std::to_string(row.from);
}

// Runs one group of checks; library errors become a single failing or
// inconclusive entry instead of aborting the report.
template <class Body>
void guarded(Report& r, const std::string& group, Body&& body) {
  try {
    body();
  } catch (const DiagnosticError& e) {
    r.checks.push_back({group, Status::inconclusive, e.what(), nullptr, "computed"});
  } catch (const UnsupportedInput& e) {
    r.checks.push_back({group, Status::inconclusive, e.what(), nullptr, "computed"});
  } catch (const std::exception& e) {
    r.checks.push_back({group, Status::fail, e.what(), nullptr, "computed"});
  }
}

}  // namespace

Report run_report(const Config& c) {
  Report r;
  MilnorContext ctx(c.f);
  const int d = ctx.d();
  const int nd = static_cast<int>(ctx.n()) * d;

  jacobian::HilbertRow hrow;
  if (c.hilbert_window) {
    guarded(r, "hilbert", [&] {
      hrow = jacobian::hilbert_row(ctx, *c.hilbert_window);
      std::vector<std::size_t> mu, mt, mf;
      for (const auto& e : hrow) {
        mu.push_back(e.mu);
        mt.push_back(e.mu_torsion);
        mf.push_back(e.mu_free);
      }
      if (c.mu) r.checks.push_back(compare("hilbert mu", mu, *c.mu, "golden table"));
      if (c.mu_torsion) r.checks.push_back(compare("hilbert mu'", mt, *c.mu_torsion, "golden table"));
      if (c.mu_free) r.checks.push_back(compare("hilbert mu''", mf, *c.mu_free, "golden table"));
      if (c.tau) r.checks.push_back(compare("global tau", jacobian::global_tjurina(ctx), *c.tau, "golden table"));
    });
  }

  if (c.nu || c.identities || c.dbar_rank) {
    guarded(r, "koszul", [&] {
      koszulss::KoszulComplex kc(ctx);
      if (c.nu) {
        std::vector<std::size_t> got;
        for (std::size_t i = 0; i < c.nu->values.size(); ++i)
          got.push_back(koszulss::nu(kc, c.nu->from + static_cast<int>(i)));
        r.checks.push_back(compare("koszul nu from k=" + std::to_string(c.nu->from), got, c.nu->values, "golden table"));
      }
      const std::size_t tau = hrow.empty() ? 0 : jacobian::global_tjurina(ctx);
      if (c.identities && !hrow.empty()) {
        const auto gam = jacobian::gamma_series(d, ctx.n());
        json bad = json::array();
        for (const auto& e : hrow) {
          const std::size_t g = e.k < static_cast<int>(gam.size()) ? gam[static_cast<std::size_t>(e.k)] : 0;
          const std::size_t nuk = koszulss::nu(kc, e.k);
          if (e.mu - nuk != g) bad.push_back({{"k", e.k}, {"identity", "mu - nu = gamma"}});
          if (nd - e.k >= 0 && e.mu_free + koszulss::nu(kc, nd - e.k) != tau)
            bad.push_back({{"k", e.k}, {"identity", "mu'' + nu_{nd-k} = tau"}});
        }
        r.checks.push_back(compare("koszul identities", bad, json::array(), "identity"));
      }
      if (c.dbar_rank && !hrow.empty()) {
        json ranks = json::array();
        bool ok = true;
        for (const auto& e : hrow) {
          if (koszulss::nu(kc, e.k + d) != tau) continue;
          const std::size_t rk = koszulss::dbar_rank(kc, e.k);
          ranks.push_back({{"k", e.k}, {"rank", rk}});
          ok = ok && rk == *c.dbar_rank;
        }
        r.checks.push_back({"dbar rank where nu_{k+d} = tau", ok ? Status::pass : Status::fail, ranks, *c.dbar_rank,
                            "golden table"});
      }
    });
  }

  for (std::size_t i = 0; i < c.points.size(); ++i) {
    const auto& p = c.points[i];
    guarded(r, "local point " + std::to_string(i), [&] {
      json where = texts(p.point);
      if (!localinv::is_singular_point(c.f, p.point)) {
        r.checks.push_back({"local point " + where.dump(), Status::fail, "not singular", "singular", "config"});
        return;
      }
      auto germ = localinv::germ_at_point(c.f, p.point);
      if (p.milnor)
        r.checks.push_back(compare("local mu at " + where.dump(), localinv::local_milnor(germ).value, *p.milnor,
                                   "golden value"));
      if (p.tjurina)
        r.checks.push_back(compare("local tau at " + where.dump(), localinv::local_tjurina(germ).value,
                                   *p.tjurina, "golden value"));
    });
  }
  if (c.reconcile) {
    guarded(r, "tau reconciliation", [&] {
      std::vector<localinv::PointGerm> germs;
      for (const auto& p : c.points) germs.push_back({p.point, localinv::germ_at_point(c.f, p.point)});
      auto rec = localinv::tau_reconciliation(ctx, germs);
      r.checks.push_back({"tau reconciliation", rec.pass ? Status::pass : Status::fail,
                          {{"local_sum", rec.local_sum}, {"global", rec.global}}, "local sum = global",
                          "listed singular points"});
    });
  }

  EvSet ev;
  std::vector<spectra::SpectrumMS> local;
  for (const auto& w : c.local_weights) local.push_back(spectra::qh_spectrum(w));
  ev = spectra::ev_set(local);
  if (c.local_expected) {
    spectra::SpectrumMS all;
    for (const auto& s : local)
      for (const auto& [v, m] : s.entries()) all.add(v, m);
    r.checks.push_back(compare("local spectrum", texts(all), texts(*c.local_expected), "weight formula"));
  }
  if (c.sp)
    r.checks.push_back({"pole spectrum compatible with Sp", spectra::p_compat_check(*c.sp, *c.sp_p) ? Status::pass
                                                                                                     : Status::fail,
                        {{"sp", texts(*c.sp)}, {"sp_p", texts(*c.sp_p)}}, true, "config"});

  if (!c.factor_I.empty())
    r.checks.push_back({"b-function factorization", factorization_check(*c.bf, *c.bh, c.factor_I, d)
                                                        ? Status::pass
                                                        : Status::fail,
                        texts(*c.bf), {{"bh", texts(*c.bh)}, {"I", c.factor_I}, {"d", d}}, "fixtures"});

  if (c.needs_table()) {
    guarded(r, "spectral sequence", [&] {
      const SSTable t = koszulss::ss_table(ctx, c.ss_window, c.r_max, c.kmax);
      for (const auto& row : c.rows) {
        auto got = read_row(t, row);
        if (!got) {
          r.checks.push_back({row_name(row), Status::inconclusive, "outside the table", row.values, "golden table"});
          continue;
        }
        json expected = row.values;
        bool determined = true;
        if (!row.nu_shifted)
          for (std::size_t i = 0; i < row.values.size(); ++i)
            determined = determined && t.mu_r_determined(row.page, row.from + static_cast<int>(i));
        CheckResult cr = compare(row_name(row), *got, expected, "golden table");
        if (cr.status == Status::fail && !determined) cr.status = Status::inconclusive;
        r.checks.push_back(std::move(cr));
      }
      if (!c.candidates.empty()) {
        json matched = json::array();
        for (const auto& cand : c.candidates) {
          bool all = true;
          for (const auto& row : cand.rows) {
            auto got = read_row(t, row);
            all = all && got && *got == row.values;
          }
          if (all) matched.push_back(cand.name);
        }
        r.checks.push_back({"candidate tables", matched.size() == 1 ? Status::pass : Status::fail, matched,
                            "exactly one candidate", "golden tables"});
      }
      if (c.pole_spectrum || !c.pole_contains.empty() || !c.pole_excludes.empty()) {
        auto ps = koszulss::pole_spectrum(t);
        const Status undecided = ps.complete() ? Status::fail : Status::inconclusive;
        if (c.pole_spectrum) {
          CheckResult cr = compare("pole spectrum", texts(ps.spectrum), texts(*c.pole_spectrum), "golden value");
          if (cr.status == Status::fail) cr.status = undecided;
          r.checks.push_back(std::move(cr));
        }
        for (const auto& v : c.pole_contains)
          r.checks.push_back({"pole spectrum contains " + exactla::to_string(v),
                              ps.spectrum.contains(v) ? Status::pass : undecided, texts(ps.spectrum),
                              exactla::to_string(v), "golden value"});
        for (const auto& v : c.pole_excludes)
          r.checks.push_back({"pole spectrum excludes " + exactla::to_string(v),
                              !ps.spectrum.contains(v) ? Status::pass : undecided, texts(ps.spectrum),
                              exactla::to_string(v), "golden value"});
      }
      if (c.theorem1_window)
        for (auto& cr : theorem1_check(t, *c.bf, ev, *c.theorem1_window)) r.checks.push_back(std::move(cr));
      if (c.theorem3) r.checks.push_back(theorem3_witness(t, c.bf, ev, c.theorem3_k));
      if (c.eigenspaces) r.checks.push_back(eigenspace_check(t, *c.eigenspaces));
    });
  }

  if (c.theorem4)
    guarded(r, "theorem4", [&] {
      for (auto& cr : theorem4_witness(ctx, *c.theorem4)) r.checks.push_back(std::move(cr));
    });
  return r;
}

}  // namespace milnor::bsreport
