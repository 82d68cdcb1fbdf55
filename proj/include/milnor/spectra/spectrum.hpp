#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "milnor/exactla/rational.hpp"

namespace milnor::spectra {

using exactla::Rational;

/// Finite multiset of exact rationals, kept sorted.
class SpectrumMS {
 public:
  SpectrumMS() = default;
  SpectrumMS(std::initializer_list<Rational> values);
  static SpectrumMS from_values(const std::vector<Rational>& values);

  void add(const Rational& value, std::size_t mult = 1);
  /// Total count with multiplicity.
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::size_t multiplicity(const Rational& value) const;
  bool contains(const Rational& value) const { return multiplicity(value) > 0; }
  const std::map<Rational, std::size_t>& entries() const { return entries_; }
  /// Values with repetition, ascending.
  std::vector<Rational> values() const;

  bool operator==(const SpectrumMS& o) const { return entries_ == o.entries_; }

 private:
  std::map<Rational, std::size_t> entries_;
  std::size_t size_ = 0;
};

/// "{9/20, 13/20, 1 (x2)}"
std::string to_string(const SpectrumMS& s);

/// JSON list of {"num","den","mult"} sorted ascending.
nlohmann::json to_json(const SpectrumMS& s);
/// Throws InputError on schema violations (den <= 0, mult <= 0, non-integers).
SpectrumMS spectrum_from_json(const nlohmann::json& j);

}  // namespace milnor::spectra
