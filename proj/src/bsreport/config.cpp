#include <fstream>

#include "milnor/bsreport/bsreport.hpp"
#include "milnor/errors.hpp"
#include "milnor/polyforms/parse.hpp"

namespace milnor::bsreport {

using nlohmann::json;

namespace {

// Reads `key` of `obj` with a path-qualified error message.
class Reader {
 public:
  Reader(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) fail("expected an object");
  }

  bool has(const char* key) const { return obj_.contains(key) && !obj_.at(key).is_null(); }
  const json& at(const char* key) const {
    if (!has(key)) throw InputError(path_ + ": missing \"" + key + "\"");
    return obj_.at(key);
  }
  Reader sub(const char* key) const { return Reader(at(key), path_ + "." + key); }
  std::string where(const char* key) const { return path_ + "." + key; }

  [[noreturn]] void fail(const std::string& what) const { throw InputError(path_ + ": " + what); }

  std::string str(const char* key) const {
    const auto& v = at(key);
    if (!v.is_string()) throw InputError(where(key) + ": expected a string");
    return v.get<std::string>();
  }
  long integer(const char* key) const {
    const auto& v = at(key);
    if (!v.is_number_integer()) throw InputError(where(key) + ": expected an integer");
    return v.get<long>();
  }
  std::size_t count(const char* key) const {
    long v = integer(key);
    if (v < 0) throw InputError(where(key) + ": expected a nonnegative integer");
    return static_cast<std::size_t>(v);
  }
  bool boolean(const char* key) const {
    const auto& v = at(key);
    if (!v.is_boolean()) throw InputError(where(key) + ": expected true or false");
    return v.get<bool>();
  }
  std::vector<std::size_t> counts(const char* key) const {
    const auto& v = at(key);
    if (!v.is_array()) throw InputError(where(key) + ": expected a list");
    std::vector<std::size_t> out;
    for (const auto& e : v) {
      if (!e.is_number_integer() || e.get<long>() < 0)
        throw InputError(where(key) + ": expected nonnegative integers");
      out.push_back(e.get<std::size_t>());
    }
    return out;
  }
  std::vector<int> ints(const char* key) const {
    const auto& v = at(key);
    if (!v.is_array()) throw InputError(where(key) + ": expected a list");
    std::vector<int> out;
    for (const auto& e : v) {
      if (!e.is_number_integer()) throw InputError(where(key) + ": expected integers");
      out.push_back(e.get<int>());
    }
    return out;
  }
  Rational rational(const char* key) const { return rational_of(at(key), where(key)); }
  std::vector<Rational> rationals(const char* key) const {
    const auto& v = at(key);
    if (!v.is_array()) throw InputError(where(key) + ": expected a list");
    std::vector<Rational> out;
    for (const auto& e : v) out.push_back(rational_of(e, where(key)));
    return out;
  }
  DegreeWindow window(const char* key) const {
    auto v = ints(key);
    if (v.size() != 2 || v[0] < 0 || v[1] < v[0]) throw InputError(where(key) + ": expected [lo, hi] with 0 <= lo <= hi");
    return {v[0], v[1]};
  }

  static Rational rational_of(const json& e, const std::string& where) {
    if (e.is_number_integer()) return Rational(e.get<long>());
    if (e.is_string()) {
      try {
        return exactla::parse_rational(e.get<std::string>());
      } catch (const InputError& err) {
        throw InputError(where + ": " + err.what());
      }
    }
    throw InputError(where + ": expected a rational (\"p/q\" or an integer)");
  }

 private:
  const json& obj_;
  std::string path_;
};

spectra::SpectrumMS spectrum_of(const Reader& r, const char* key) {
  return spectra::SpectrumMS::from_values(r.rationals(key));
}

PageRow page_row(const json& e, const std::string& where) {
  Reader r(e, where);
  PageRow row;
  row.page = r.has("page") ? static_cast<int>(r.integer("page")) : 1;
  if (row.page < 1) r.fail("page must be at least 1");
  row.nu_shifted = r.has("nu_shifted") && r.boolean("nu_shifted");
  row.from = static_cast<int>(r.integer("from"));
  row.values = r.counts("values");
  return row;
}

std::vector<PageRow> page_rows(const Reader& r, const char* key) {
  const auto& v = r.at(key);
  if (!v.is_array()) throw InputError(r.where(key) + ": expected a list");
  std::vector<PageRow> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(page_row(v[i], r.where(key) + "[" + std::to_string(i) + "]"));
  return out;
}

Poly poly_of(const Reader& r, const char* key, const std::vector<std::string>& vars) {
  const auto text = r.str(key);
  try {
    return polyforms::parse_poly(text, vars);
  } catch (const polyforms::ParseError& e) {
    throw InputError(r.where(key) + ": " + e.what());
  }
}

}  // namespace

bool Config::needs_table() const {
  return !rows.empty() || !candidates.empty() || pole_spectrum || !pole_contains.empty() ||
         !pole_excludes.empty() || theorem1_window || theorem3 || eigenspaces;
}

Config parse_config(const json& j, const std::filesystem::path& base_dir) {
  Reader top(j, "config");
  Config c;
  c.name = top.has("name") ? top.str("name") : "report";
  c.poly_text = top.str("poly");
  if (top.has("vars")) {
    const auto& v = top.at("vars");
    if (v.is_string()) {
      c.vars = polyforms::parse_variable_list(v.get<std::string>());
    } else if (v.is_array()) {
      for (const auto& e : v) {
        if (!e.is_string()) top.fail("vars must be strings");
        c.vars.push_back(e.get<std::string>());
      }
    } else {
      top.fail("vars must be a list or a comma separated string");
    }
  } else {
    c.vars = polyforms::default_variables(3);
  }
  c.f = poly_of(top, "poly", c.vars);
  if (c.f.is_zero() || !c.f.is_homogeneous() || c.f.has_negative_exponents())
    top.fail("poly must be a nonzero homogeneous polynomial");

  if (top.has("hilbert")) {
    auto h = top.sub("hilbert");
    c.hilbert_window = h.window("window");
    const auto size = c.hilbert_window->size();
    auto row = [&](const char* key, std::optional<std::vector<std::size_t>>& dst) {
      if (!h.has(key)) return;
      dst = h.counts(key);
      if (dst->size() != size) h.fail(std::string(key) + " must have one value per degree of the window");
    };
    row("mu", c.mu);
    row("mu_torsion", c.mu_torsion);
    row("mu_free", c.mu_free);
    if (h.has("tau")) c.tau = h.count("tau");
  }

  if (top.has("koszul")) {
    auto k = top.sub("koszul");
    if (k.has("nu")) c.nu = page_row(k.at("nu"), k.where("nu"));
    c.identities = k.has("identities") && k.boolean("identities");
    if (k.has("dbar_rank")) c.dbar_rank = k.count("dbar_rank");
    if ((c.identities || c.dbar_rank) && !c.hilbert_window) k.fail("identities need the hilbert window");
  }

  if (top.has("ss")) {
    auto s = top.sub("ss");
    c.ss_window = s.window("window");
    if (s.has("r_max")) c.r_max = static_cast<int>(s.integer("r_max"));
    if (c.r_max < 1) s.fail("r_max must be at least 1");
    if (s.has("kmax")) c.kmax = static_cast<int>(s.integer("kmax"));
    if (c.kmax && *c.kmax < c.ss_window.hi) s.fail("kmax below the window");
    if (s.has("rows")) c.rows = page_rows(s, "rows");
    if (s.has("candidates")) {
      const auto& v = s.at("candidates");
      if (!v.is_array()) s.fail("candidates must be a list");
      for (std::size_t i = 0; i < v.size(); ++i) {
        Reader cr(v[i], s.where("candidates") + "[" + std::to_string(i) + "]");
        c.candidates.push_back({cr.str("name"), page_rows(cr, "rows")});
      }
    }
    if (s.has("pole_spectrum")) {
      auto p = s.sub("pole_spectrum");
      if (p.has("equals")) c.pole_spectrum = spectrum_of(p, "equals");
      if (p.has("contains")) c.pole_contains = p.rationals("contains");
      if (p.has("excludes")) c.pole_excludes = p.rationals("excludes");
    }
  }

  if (top.has("local")) {
    auto l = top.sub("local");
    if (l.has("points")) {
      const auto& v = l.at("points");
      if (!v.is_array()) l.fail("points must be a list");
      for (std::size_t i = 0; i < v.size(); ++i) {
        Reader pr(v[i], l.where("points") + "[" + std::to_string(i) + "]");
        LocalPoint p;
        p.point = pr.rationals("point");
        if (p.point.size() != c.vars.size()) pr.fail("point needs one coordinate per variable");
        if (pr.has("milnor")) p.milnor = pr.count("milnor");
        if (pr.has("tjurina")) p.tjurina = pr.count("tjurina");
        c.points.push_back(std::move(p));
      }
    }
    c.reconcile = l.has("reconcile") && l.boolean("reconcile");
  }

  if (top.has("spectra")) {
    auto s = top.sub("spectra");
    if (s.has("local_weights")) {
      const auto& v = s.at("local_weights");
      if (!v.is_array()) s.fail("local_weights must be a list of weight lists");
      for (std::size_t i = 0; i < v.size(); ++i) {
        spectra::WeightSystem w;
        if (!v[i].is_array()) s.fail("local_weights must be a list of weight lists");
        for (const auto& e : v[i]) w.weights.push_back(Reader::rational_of(e, s.where("local_weights")));
        w.validate();
        c.local_weights.push_back(std::move(w));
      }
    }
    if (s.has("local_expected")) c.local_expected = spectrum_of(s, "local_expected");
    if (s.has("sp")) c.sp = spectrum_of(s, "sp");
    if (s.has("sp_p")) c.sp_p = spectrum_of(s, "sp_p");
    if (c.sp.has_value() != c.sp_p.has_value()) s.fail("sp and sp_p go together");
  }

  if (top.has("bfunction")) {
    auto b = top.sub("bfunction");
    if (b.has("bf")) c.bf = load_bfixture(base_dir / b.str("bf"));
    if (b.has("bh")) c.bh = load_bfixture(base_dir / b.str("bh"));
    if (b.has("I")) c.factor_I = b.ints("I");
    if (!c.factor_I.empty() && !(c.bf && c.bh)) b.fail("I needs both bf and bh");
  }

  if (top.has("theorem1")) {
    auto t = top.sub("theorem1");
    c.theorem1_window = t.window("window");
    if (!c.theorem1_window->size() || c.theorem1_window->lo < c.ss_window.lo || c.theorem1_window->hi > c.ss_window.hi)
      t.fail("window must lie inside ss.window");
    if (!c.bf) t.fail("needs bfunction.bf");
  }

  if (top.has("theorem3")) {
    auto t = top.sub("theorem3");
    c.theorem3 = true;
    if (t.has("expect")) c.theorem3_k = static_cast<int>(t.integer("expect"));
  }

  if (top.has("theorem4")) {
    auto t = top.sub("theorem4");
    Theorem4Input in{poly_of(t, "member", c.vars), poly_of(t, "torsion", c.vars), std::nullopt, std::nullopt,
                     std::nullopt};
    if (t.has("eta")) {
      const auto& v = t.at("eta");
      if (!v.is_array()) t.fail("eta must be a list of {\"dx\": [...], \"coef\": ...}");
      const std::size_t n = c.vars.size();
      DiffForm eta(n, n < 2 ? 0 : n - 2);
      for (std::size_t i = 0; i < v.size(); ++i) {
        Reader er(v[i], t.where("eta") + "[" + std::to_string(i) + "]");
        auto idx = er.ints("dx");
        if (idx.size() + 2 != n) er.fail("dx must name n-2 variables");
        for (int x : idx)
          if (x < 0 || static_cast<std::size_t>(x) >= n) er.fail("dx index out of range");
        eta = eta + DiffForm::term(poly_of(er, "coef", c.vars), idx);
      }
      in.eta = eta;
    }
    if (t.has("c1")) in.c1 = t.rational("c1");
    if (t.has("c2")) in.c2 = t.rational("c2");
    c.theorem4 = std::move(in);
  }

  if (top.has("eigenspaces")) {
    c.eigenspaces = top.counts("eigenspaces");
    if (c.eigenspaces->size() != static_cast<std::size_t>(c.f.degree()))
      top.fail("eigenspaces needs one value per residue mod the degree");
  }

  if (c.needs_table() && !c.ss_window.size()) top.fail("table checks need ss.window");
  return c;
}

Config load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open config " + file.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("config " + file.string() + ": " + e.what());
  }
  return parse_config(j, file.parent_path());
}

}  // namespace milnor::bsreport
