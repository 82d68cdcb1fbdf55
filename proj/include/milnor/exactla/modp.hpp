#pragma once

// Modular (mod p) elimination used as a fast cross-check of exact ranks.
//
// Rows are stored as doubles holding residues in [0, p). With p < 2^26 every
// product a*x + y stays below 2^53, so the SIMD kernels can use a fused
// multiply-add plus floor-quotient reduction and still be exact. The scalar
// kernels are the reference and use 64-bit integer arithmetic.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "milnor/exactla/matrix.hpp"
#include "milnor/exactla/sparse.hpp"

namespace milnor::exactla::modp {

inline constexpr std::uint32_t kDefaultPrime = 67108859;  // largest prime below 2^26

/// y[i] <- (y[i] + a * x[i]) mod p, all inputs residues in [0, p).
using AxpyFn = void (*)(std::span<double> y, std::span<const double> x, double a, double p);
/// y[i] <- (a * y[i]) mod p.
using ScaleFn = void (*)(std::span<double> y, double a, double p);

struct KernelTable {
  std::string_view name;
  AxpyFn axpy;
  ScaleFn scale;
};

const KernelTable& scalar_kernels();
/// Null when the binary was built without AVX2 support.
const KernelTable* avx2_kernels();

/// Kernel table picked at first use: AVX2+FMA when the CPU has it, scalar
/// otherwise. MILNOR_SIMD=scalar in the environment forces the scalar table.
const KernelTable& active_kernels();

std::uint32_t reduce(const Rational& q, std::uint32_t p);
std::uint32_t inverse(std::uint32_t a, std::uint32_t p);

/// Rank over F_p of the matrix whose columns are given (rows = ambient size).
std::size_t rank(std::size_t rows, const std::vector<SparseVec>& columns,
                 std::uint32_t p = kDefaultPrime, const KernelTable& kernels = active_kernels());

std::size_t rank(const RationalMatrix& m, std::uint32_t p = kDefaultPrime,
                 const KernelTable& kernels = active_kernels());

}  // namespace milnor::exactla::modp
