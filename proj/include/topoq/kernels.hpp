#pragma once

// Dense row-major complex kernels behind linalg. Each kernel has a serial
// reference and an OpenMP version; both accumulate every output entry in
// the same order, so their results are bitwise identical.

#include <complex>
#include <cstddef>
#include <span>

namespace topoq::kernels {

using Complex = std::complex<double>;

/// Work (in multiply-adds) below which the dispatching entry points stay serial.
inline constexpr std::size_t kParallelWorkThreshold = std::size_t{1} << 15;

namespace serial {

/// out[rows x cols] = a[rows x inner] * b[inner x cols]
void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
            std::size_t rows, std::size_t inner, std::size_t cols);

/// Kronecker product; the left factor is the major index.
void kron(std::span<const Complex> a, std::size_t a_rows, std::size_t a_cols,
          std::span<const Complex> b, std::size_t b_rows, std::size_t b_cols,
          std::span<Complex> out);

}  // namespace serial

namespace parallel {

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
            std::size_t rows, std::size_t inner, std::size_t cols);

void kron(std::span<const Complex> a, std::size_t a_rows, std::size_t a_cols,
          std::span<const Complex> b, std::size_t b_rows, std::size_t b_cols,
          std::span<Complex> out);

}  // namespace parallel

// Dispatch on problem size.
void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
            std::size_t rows, std::size_t inner, std::size_t cols);

void kron(std::span<const Complex> a, std::size_t a_rows, std::size_t a_cols,
          std::span<const Complex> b, std::size_t b_rows, std::size_t b_cols,
          std::span<Complex> out);

}  // namespace topoq::kernels
