#include "milnor/koszulss/spectral.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <sstream>
#include <thread>

#include "milnor/errors.hpp"

namespace milnor::koszulss {

using exactla::DenseAccumulator;

namespace {

const std::vector<ImageGenerator> kNoImages;

const std::vector<ImageGenerator>& images_at(const SpectralPage& page, int m) {
  auto it = page.images.find(m);
  return it == page.images.end() ? kNoImages : it->second;
}

// Builds slices for all degrees up front; slices at distinct degrees are independent.
void prefetch(const KoszulComplex& kc, int lo, int hi) {
  const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (int k = hi - static_cast<int>(w); k >= lo; k -= static_cast<int>(workers)) {
        kc.slice(k);
        kc.context().top_slice(k);
        kc.context().tracked_image(k);
      }
    }));
  for (auto& j : jobs) j.get();
}

SparseVec combine(const std::vector<std::pair<const SparseVec*, Rational>>& terms, std::size_t dim) {
  DenseAccumulator acc(dim);
  for (const auto& [v, c] : terms)
    if (c != 0) acc.add(*v, c);
  return acc.take();
}

// Subtracts a * (chain of g) from `chain`, aligned so that g's last entry sits
// at position `top - 1`.
void subtract_shifted(Chain& chain, const ImageGenerator& g, const Rational& a, int top) {
  const int offset = top - g.page;
  for (int t = 0; t < g.page; ++t) {
    auto& slot = chain[static_cast<std::size_t>(offset + t)];
    slot = exactla::sparse_add(slot, g.chain[static_cast<std::size_t>(t)], -a);
  }
}

}  // namespace

std::size_t SpectralPage::nu(int k) const {
  auto it = sources.find(k);
  return it == sources.end() ? 0 : it->second.size();
}

std::size_t SpectralPage::mu(const MilnorContext& ctx, int m) const {
  return ctx.mu(m) - images_at(*this, m).size();
}

SpectralPage first_page(const KoszulComplex& kc, int kmax) {
  if (kmax < 0) throw InputError("first_page: kmax must be nonnegative");
  prefetch(kc, 0, kmax);
  SpectralPage p;
  p.r = 1;
  p.kmax = kmax;
  for (int k = 0; k <= kmax; ++k) {
    const auto& s = kc.slice(k);
    std::vector<SourceChain> src;
    for (std::size_t i = 0; i < s.reps.size(); ++i) {
      Vector e(s.reps.size());
      e[i] = 1;
      src.push_back({std::move(e), Chain{s.reps[i]}});
    }
    if (!src.empty()) p.sources.emplace(k, std::move(src));
  }
  return p;
}

SpectralPage page_advance(const KoszulComplex& kc, const SpectralPage& page) {
  const auto& ctx = kc.context();
  const int r = page.r;
  const int d = ctx.d();
  SpectralPage next;
  next.r = r + 1;
  next.kmax = page.kmax;
  next.images = page.images;

  for (const auto& [k, src] : page.sources) {
    const int m = k - r * d;
    const int last = k - (r - 1) * d;
    const std::size_t s = src.size();
    const auto& gens = images_at(page, m);
    const std::size_t mu_m = ctx.mu(m);

    std::vector<SparseVec> targets;
    std::vector<Vector> nfs;
    for (const auto& c : src) {
      targets.push_back(kc.derivative(last, c.chain.back()));
      nfs.push_back(ctx.normal_form(m, targets.back()));
    }

    // Columns: targets, then existing image generators.
    std::vector<Vector> cols = nfs;
    for (const auto& g : gens) cols.push_back(g.nf);
    RationalMatrix mat = RationalMatrix::from_columns(mu_m, cols);
    auto ker = exactla::kernel_basis(mat);
    if (ker.dim() > s) throw InternalError("page_advance: image generators are dependent");
    next.previous_ranks[k] = s - ker.dim();

    // New image generators: targets independent modulo the existing ones.
    if (ker.dim() < s) {
      SparseEchelon span(mu_m);
      for (const auto& g : gens) span.insert(exactla::sparse_from_dense(g.nf));
      auto& out = next.images[m];
      for (std::size_t i = 0; i < s; ++i)
        if (!span.insert(exactla::sparse_from_dense(nfs[i])))
          out.push_back({r, k, src[i].chain, targets[i], nfs[i]});
    }

    // Kernel: extend each chain by one solve step.
    std::vector<SourceChain> kept;
    for (std::size_t b = 0; b < ker.dim(); ++b) {
      Vector v = ker.basis_vector(b);
      const std::size_t top_dim = ctx.top_slice(m).top.size();
      std::vector<std::pair<const SparseVec*, Rational>> terms;
      for (std::size_t i = 0; i < s; ++i) terms.push_back({&targets[i], v[i]});
      for (std::size_t j = 0; j < gens.size(); ++j) terms.push_back({&gens[j].target, -v[s + j]});
      SparseVec rhs = combine(terms, top_dim);
      auto zeta = ctx.solve_wedge(m, rhs);
      if (!zeta) throw InternalError("page_advance: zig-zag solve failed");

      SourceChain nc;
      nc.n_coords.assign(src.front().n_coords.size(), Rational(0));
      nc.chain.assign(static_cast<std::size_t>(r), SparseVec{});
      for (std::size_t i = 0; i < s; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t c = 0; c < nc.n_coords.size(); ++c) nc.n_coords[c] += v[i] * src[i].n_coords[c];
        for (int p = 0; p < r; ++p)
          nc.chain[static_cast<std::size_t>(p)] =
              exactla::sparse_add(nc.chain[static_cast<std::size_t>(p)], src[i].chain[static_cast<std::size_t>(p)], v[i]);
      }
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (v[s + j] != 0) subtract_shifted(nc.chain, gens[j], v[s + j], r);
      nc.chain.push_back(std::move(*zeta));
      kept.push_back(std::move(nc));
    }
    if (!kept.empty()) next.sources.emplace(k, std::move(kept));
  }
  return next;
}

Vector reduce_modulo_images(const SpectralPage& page, int m, const Vector& nf, int below_page) {
  SparseEchelon span(nf.size());
  for (const auto& g : images_at(page, m))
    if (g.page < below_page) span.insert(exactla::sparse_from_dense(g.nf));
  return span.quotient_coordinates(exactla::sparse_from_dense(nf));
}

namespace {

SparseVec random_kernel_element(const KoszulComplex& kc, int m, std::mt19937_64& rng) {
  const auto& s = kc.slice(m);
  std::uniform_int_distribution<int> coef(-3, 3);
  DenseAccumulator acc(s.middle.size());
  for (const auto& rep : s.reps) acc.add(rep, Rational(coef(rng)));
  for (const auto& b : s.lower_columns) acc.add(b, Rational(coef(rng)));
  return acc.take();
}

}  // namespace

Vector zigzag_dr(const KoszulComplex& kc, const SpectralPage& page, const SparseVec& eta0, int k, int r,
                 std::mt19937_64* rng) {
  const auto& ctx = kc.context();
  const int d = ctx.d();
  if (r < 1) throw InputError("zigzag_dr: r must be positive");
  if (page.r < r) throw InputError("zigzag_dr: page does not carry the images of the lower pages");
  kc.n_coordinates(k, eta0);

  Chain chain{eta0};
  for (int i = 1;; ++i) {
    const int m = k - i * d;
    SparseVec v = kc.derivative(k - (i - 1) * d, chain.back());
    Vector nf = ctx.normal_form(m, v);
    if (i == r) return reduce_modulo_images(page, m, nf, r);

    std::vector<const ImageGenerator*> gens;
    for (const auto& g : images_at(page, m))
      if (g.page < i) gens.push_back(&g);
    std::vector<Vector> cols;
    for (const auto* g : gens) cols.push_back(g->nf);
    auto a = exactla::solve(RationalMatrix::from_columns(nf.size(), cols), nf);
    if (!a) throw InternalError("zigzag_dr: class does not survive to the requested page");
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Rational& aj = (*a)[j];
      if (aj == 0) continue;
      v = exactla::sparse_add(v, gens[j]->target, -aj);
      subtract_shifted(chain, *gens[j], aj, i);
    }
    auto zeta = ctx.solve_wedge(m, v);
    if (!zeta) throw InternalError("zigzag_dr: solve step failed");
    if (rng) *zeta = exactla::sparse_add(*zeta, random_kernel_element(kc, m, *rng));
    chain.push_back(std::move(*zeta));
  }
}

// ---------------------------------------------------------------------------

jacobian::DegreeWindow default_ss_window(const MilnorContext& ctx) {
  const int n = static_cast<int>(ctx.n());
  return {n, 3 * n * ctx.d()};
}

std::size_t SSTable::index_of(int k) const {
  if (k < window.lo || k > window.hi) throw InputError("SSTable: degree outside the table window");
  return static_cast<std::size_t>(k - window.lo);
}

std::size_t SSTable::mu_r(int r, int k) const {
  if (r < 1 || r > r_max) throw InputError("SSTable: page out of range");
  return mu_page[static_cast<std::size_t>(r - 1)][index_of(k)];
}

std::size_t SSTable::nu_r(int r, int k) const {
  if (r < 1 || r > r_max) throw InputError("SSTable: page out of range");
  return nu_page[static_cast<std::size_t>(r - 1)][index_of(k)];
}

bool SSTable::mu_r_determined(int r, int k) const {
  if (r < 1 || r > r_max) throw InputError("SSTable: page out of range");
  return mu_state[static_cast<std::size_t>(r - 1)][index_of(k)] == EntryState::determined;
}

SSTable ss_table(const MilnorContext& ctx, jacobian::DegreeWindow window, int r_max, std::optional<int> kmax_opt) {
  if (r_max < 1) throw InputError("ss_table: r_max must be at least 1");
  if (window.lo < 0 || window.hi < window.lo) throw InputError("ss_table: bad degree window");
  const int d = ctx.d();
  const int kmax = kmax_opt.value_or(std::max(window.hi, default_ss_window(ctx).hi));
  if (kmax < window.hi) throw InputError("ss_table: kmax below the table window");
  if (!jacobian::isolated_sing_check(ctx)) throw UnsupportedInput("ss_table: singularities are not isolated");
  const std::size_t tau = jacobian::global_tjurina(ctx);

  KoszulComplex kc(ctx);
  std::vector<SpectralPage> pages;
  pages.push_back(first_page(kc, kmax));
  while (static_cast<int>(pages.size()) < r_max) pages.push_back(page_advance(kc, pages.back()));

  // Determination over all degrees [0, kmax].
  const std::size_t full = static_cast<std::size_t>(kmax) + 1;
  std::vector<std::vector<std::size_t>> mu_all(static_cast<std::size_t>(r_max), std::vector<std::size_t>(full));
  std::vector<std::vector<std::size_t>> nu_all = mu_all;
  std::vector<std::vector<bool>> det(static_cast<std::size_t>(r_max), std::vector<bool>(full, true));
  for (int r = 1; r <= r_max; ++r) {
    const auto& P = pages[static_cast<std::size_t>(r - 1)];
    for (int m = 0; m <= kmax; ++m) {
      const auto i = static_cast<std::size_t>(m);
      const auto ri = static_cast<std::size_t>(r - 1);
      mu_all[ri][i] = P.mu(ctx, m);
      nu_all[ri][i] = P.nu(m);
      if (r > 1) det[ri][i] = mu_all[ri][i] == 0 || (det[ri - 1][i] && m + (r - 1) * d <= kmax);
    }
  }

  SSTable t;
  t.window = window;
  t.kmax = kmax;
  t.r_max = r_max;
  t.d = d;
  t.n = ctx.n();
  t.tau = tau;
  auto g = jacobian::gamma_series(d, ctx.n());
  auto tors = jacobian::torsion_dims(ctx, window);
  t.mu_page.assign(static_cast<std::size_t>(r_max), {});
  t.nu_page = t.mu_page;
  t.nu_page_shifted.assign(static_cast<std::size_t>(r_max), {});
  t.mu_state.assign(static_cast<std::size_t>(r_max), {});
  const auto last = static_cast<std::size_t>(r_max - 1);
  for (int k = window.lo; k <= window.hi; ++k) {
    const auto i = static_cast<std::size_t>(k);
    t.ks.push_back(k);
    t.gamma.push_back(i < g.size() ? g[i] : 0);
    t.mu.push_back(ctx.mu(k));
    t.mu_torsion.push_back(tors.at(k));
    t.mu_free.push_back(ctx.mu(k) - tors.at(k));
    t.nu.push_back(nu_all[0][i]);
    for (std::size_t r = 0; r < static_cast<std::size_t>(r_max); ++r) {
      t.mu_page[r].push_back(mu_all[r][i]);
      t.nu_page[r].push_back(nu_all[r][i]);
      t.nu_page_shifted[r].push_back(k + d <= kmax ? std::optional(nu_all[r][i + static_cast<std::size_t>(d)])
                                                   : std::nullopt);
      t.mu_state[r].push_back(det[r][i] ? EntryState::determined : EntryState::window_edge);
    }
    bool mu_fin = det[last][i];
    if (mu_all[last][i] != 0)
      for (int j = k + r_max * d; j <= kmax; j += d)
        if (nu_all[last][static_cast<std::size_t>(j)] != 0) mu_fin = false;
    if (mu_all[last][i] != 0 && k + r_max * d > kmax) mu_fin = false;
    t.mu_final.push_back(mu_fin);
    bool nu_fin = true;
    if (nu_all[last][i] != 0)
      for (int m = k - r_max * d; m >= 0; m -= d)
        if (mu_all[last][static_cast<std::size_t>(m)] != 0) nu_fin = false;
    t.nu_final.push_back(nu_fin);
  }
  return t;
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const SSTable& t) {
  using nlohmann::json;
  json pages = json::array();
  for (int r = 1; r <= t.r_max; ++r) {
    const auto ri = static_cast<std::size_t>(r - 1);
    json det = json::array();
    for (auto s : t.mu_state[ri]) det.push_back(s == EntryState::determined);
    json shifted = json::array();
    for (const auto& v : t.nu_page_shifted[ri]) shifted.push_back(v ? json(*v) : json(nullptr));
    pages.push_back({{"r", r},
                     {"mu", t.mu_page[ri]},
                     {"nu", t.nu_page[ri]},
                     {"nu_shifted", shifted},
                     {"mu_determined", det}});
  }
  return {{"k_range", {t.window.lo, t.window.hi}},
          {"kmax", t.kmax},
          {"r_max", t.r_max},
          {"d", t.d},
          {"n", t.n},
          {"tau", t.tau},
          {"k", t.ks},
          {"gamma", t.gamma},
          {"mu", t.mu},
          {"mu_torsion", t.mu_torsion},
          {"mu_free", t.mu_free},
          {"nu", t.nu},
          {"pages", pages},
          {"mu_final", t.mu_final},
          {"nu_final", t.nu_final}};
}

std::string to_text(const SSTable& t) {
  std::ostringstream os;
  const int w = 4;
  auto row = [&](const std::string& label, auto cell) {
    os << std::setw(14) << std::left << label << std::right;
    for (std::size_t i = 0; i < t.ks.size(); ++i) os << std::setw(w) << cell(i);
    os << '\n';
  };
  auto num = [](std::size_t v) { return v == 0 ? std::string() : std::to_string(v); };
  const std::string dstr = std::to_string(t.d);
  row("k:", [&](std::size_t i) { return std::to_string(t.ks[i]); });
  row("gamma_k:", [&](std::size_t i) { return num(t.gamma[i]); });
  row("mu'_k:", [&](std::size_t i) { return num(t.mu_torsion[i]); });
  row("mu''_k:", [&](std::size_t i) { return num(t.mu_free[i]); });
  row("nu_k:", [&](std::size_t i) { return num(t.nu[i]); });
  row("mu_k:", [&](std::size_t i) { return num(t.mu[i]); });
  for (int r = 1; r <= t.r_max; ++r) {
    const auto ri = static_cast<std::size_t>(r - 1);
    const std::string sup = r == 1 ? "" : "^(" + std::to_string(r) + ")";
    if (r > 1)
      row("mu" + sup + "_k:", [&](std::size_t i) {
        std::string s = num(t.mu_page[ri][i]);
        return t.mu_state[ri][i] == EntryState::determined ? s : s + (s.empty() ? "?" : "*");
      });
    row("nu" + sup + "_k+" + dstr + ":", [&](std::size_t i) {
      const auto& v = t.nu_page_shifted[ri][i];
      return v ? num(*v) : std::string("-");
    });
  }
  row("final:", [&](std::size_t i) { return std::string(t.mu_final[i] ? "" : "open"); });
  os << "blank = 0, * or ? = depends on degrees above " << t.kmax << ", - = not computed, open = a later"
     << " differential may still act (window " << t.kmax << ")\n";
  return os.str();
}

std::string to_csv(const SSTable& t) {
  std::ostringstream os;
  os << "k,gamma,mu,mu_torsion,mu_free,nu";
  for (int r = 1; r <= t.r_max; ++r) os << ",mu_" << r << ",nu_" << r << ",mu_" << r << "_determined";
  os << ",mu_final,nu_final\n";
  for (std::size_t i = 0; i < t.ks.size(); ++i) {
    os << t.ks[i] << ',' << t.gamma[i] << ',' << t.mu[i] << ',' << t.mu_torsion[i] << ',' << t.mu_free[i] << ','
       << t.nu[i];
    for (std::size_t r = 0; r < static_cast<std::size_t>(t.r_max); ++r)
      os << ',' << t.mu_page[r][i] << ',' << t.nu_page[r][i] << ','
         << (t.mu_state[r][i] == EntryState::determined ? 1 : 0);
    os << ',' << (t.mu_final[i] ? 1 : 0) << ',' << (t.nu_final[i] ? 1 : 0) << '\n';
  }
  return os.str();
}

PoleSpectrum pole_spectrum(const SSTable& t) {
  PoleSpectrum out;
  const int top = static_cast<int>(t.n) * t.d - 1;
  if (t.window.lo > 1 && t.window.lo > static_cast<int>(t.n))
    out.warnings.push_back("table starts above degree " + std::to_string(t.n));
  if (t.window.hi < top) out.warnings.push_back("table ends below degree " + std::to_string(top));
  for (int k = std::max(1, t.window.lo); k <= std::min(top, t.window.hi); ++k) {
    const auto i = t.index_of(k);
    const std::size_t m = t.mu_page.back()[i];
    if (!t.mu_final[i]) out.warnings.push_back("mu^(" + std::to_string(t.r_max) + ")_" + std::to_string(k) + " not final");
    if (m) out.spectrum.add(exactla::make_rational(k, t.d), m);
  }
  return out;
}

PoleSpectrum pole_spectrum(const MilnorContext& ctx, int r_max) {
  const int n = static_cast<int>(ctx.n());
  return pole_spectrum(ss_table(ctx, {n, n * ctx.d() - 1}, r_max));
}

}  // namespace milnor::koszulss
