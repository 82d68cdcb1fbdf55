#include <cstdint>

#include "milnor/exactla/modp.hpp"

namespace milnor::exactla::modp {

namespace {

void axpy_scalar(std::span<double> y, std::span<const double> x, double a, double p) {
  const auto pi = static_cast<std::uint64_t>(p);
  const auto ai = static_cast<std::uint64_t>(a);
  for (std::size_t i = 0; i < y.size(); ++i) {
    auto yi = static_cast<std::uint64_t>(y[i]);
    auto xi = static_cast<std::uint64_t>(x[i]);
    y[i] = static_cast<double>((yi + ai * xi) % pi);
  }
}

void scale_scalar(std::span<double> y, double a, double p) {
  const auto pi = static_cast<std::uint64_t>(p);
  const auto ai = static_cast<std::uint64_t>(a);
  for (auto& v : y) v = static_cast<double>((static_cast<std::uint64_t>(v) * ai) % pi);
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", &axpy_scalar, &scale_scalar};
  return table;
}

}  // namespace milnor::exactla::modp
