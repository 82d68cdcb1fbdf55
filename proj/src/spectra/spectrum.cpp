#include "milnor/spectra/spectrum.hpp"

#include <sstream>

#include "milnor/errors.hpp"

namespace milnor::spectra {

SpectrumMS::SpectrumMS(std::initializer_list<Rational> values) {
  for (const auto& v : values) add(v);
}

SpectrumMS SpectrumMS::from_values(const std::vector<Rational>& values) {
  SpectrumMS s;
  for (const auto& v : values) s.add(v);
  return s;
}

void SpectrumMS::add(const Rational& value, std::size_t mult) {
  if (mult == 0) return;
  Rational v = value;
  v.canonicalize();
  entries_[v] += mult;
  size_ += mult;
}

std::size_t SpectrumMS::multiplicity(const Rational& value) const {
  auto it = entries_.find(value);
  return it == entries_.end() ? 0 : it->second;
}

std::vector<Rational> SpectrumMS::values() const {
  std::vector<Rational> out;
  for (const auto& [v, m] : entries_)
    for (std::size_t i = 0; i < m; ++i) out.push_back(v);
  return out;
}

std::string to_string(const SpectrumMS& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [v, m] : s.entries()) {
    if (!first) os << ", ";
    first = false;
    os << exactla::to_string(v);
    if (m > 1) os << " (x" << m << ')';
  }
  os << '}';
  return os.str();
}

nlohmann::json to_json(const SpectrumMS& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [v, m] : s.entries()) {
    if (!v.get_num().fits_slong_p() || !v.get_den().fits_slong_p())
      throw InputError("spectrum entry too large for JSON export");
    out.push_back({{"num", v.get_num().get_si()}, {"den", v.get_den().get_si()}, {"mult", m}});
  }
  return out;
}

SpectrumMS spectrum_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("spectrum: expected a JSON list");
  SpectrumMS s;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("num") || !e.contains("den"))
      throw InputError("spectrum: entries need \"num\" and \"den\"");
    const auto& num = e.at("num");
    const auto& den = e.at("den");
    if (!num.is_number_integer() || !den.is_number_integer())
      throw InputError("spectrum: \"num\" and \"den\" must be integers");
    long mult = 1;
    if (e.contains("mult")) {
      if (!e.at("mult").is_number_integer()) throw InputError("spectrum: \"mult\" must be an integer");
      mult = e.at("mult").get<long>();
    }
    if (den.get<long>() <= 0) throw InputError("spectrum: \"den\" must be positive");
    if (mult <= 0) throw InputError("spectrum: \"mult\" must be positive");
    Rational v(num.get<long>(), den.get<long>());
    v.canonicalize();
    s.add(v, static_cast<std::size_t>(mult));
  }
  return s;
}

}  // namespace milnor::spectra
