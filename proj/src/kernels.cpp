#include "topoq/kernels.hpp"

#include <omp.h>

namespace topoq::kernels {

namespace {

// Row kernel shared by both paths so the accumulation order is identical.
// Zero entries of `a` are skipped: the maps in this library are mostly
// permutation-like and very sparse.
inline void matmul_row(const Complex* a_row, const Complex* b, Complex* out_row,
                       std::size_t inner, std::size_t cols) {
  for (std::size_t c = 0; c < cols; ++c) out_row[c] = Complex{0.0, 0.0};
  for (std::size_t k = 0; k < inner; ++k) {
    const Complex aik = a_row[k];
    if (aik.real() == 0.0 && aik.imag() == 0.0) continue;
    const Complex* b_row = b + k * cols;
    for (std::size_t c = 0; c < cols; ++c) out_row[c] += aik * b_row[c];
  }
}

inline void kron_row(const Complex* a, std::size_t a_cols, const Complex* b, std::size_t b_rows,
                     std::size_t b_cols, Complex* out, std::size_t out_row) {
  const std::size_t i = out_row / b_rows;
  const std::size_t k = out_row % b_rows;
  const std::size_t out_cols = a_cols * b_cols;
  Complex* dst = out + out_row * out_cols;
  for (std::size_t j = 0; j < a_cols; ++j) {
    const Complex aij = a[i * a_cols + j];
    const Complex* b_row = b + k * b_cols;
    for (std::size_t l = 0; l < b_cols; ++l) dst[j * b_cols + l] = aij * b_row[l];
  }
}

}  // namespace

namespace serial {

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
            std::size_t rows, std::size_t inner, std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    matmul_row(a.data() + r * inner, b.data(), out.data() + r * cols, inner, cols);
  }
}

void kron(std::span<const Complex> a, std::size_t a_rows, std::size_t a_cols,
          std::span<const Complex> b, std::size_t b_rows, std::size_t b_cols,
          std::span<Complex> out) {
  const std::size_t out_rows = a_rows * b_rows;
  for (std::size_t r = 0; r < out_rows; ++r) {
    kron_row(a.data(), a_cols, b.data(), b_rows, b_cols, out.data(), r);
  }
}

}  // namespace serial

namespace parallel {

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
            std::size_t rows, std::size_t inner, std::size_t cols) {
  const auto n = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < n; ++r) {
    const auto row = static_cast<std::size_t>(r);
    matmul_row(a.data() + row * inner, b.data(), out.data() + row * cols, inner, cols);
  }
}

void kron(std::span<const Complex> a, std::size_t a_rows, std::size_t a_cols,
          std::span<const Complex> b, std::size_t b_rows, std::size_t b_cols,
          std::span<Complex> out) {
  const auto n = static_cast<std::ptrdiff_t>(a_rows * b_rows);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < n; ++r) {
    kron_row(a.data(), a_cols, b.data(), b_rows, b_cols, out.data(), static_cast<std::size_t>(r));
  }
}

}  // namespace parallel

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
            std::size_t rows, std::size_t inner, std::size_t cols) {
  if (rows * inner * cols < kParallelWorkThreshold || rows < 2) {
    serial::matmul(a, b, out, rows, inner, cols);
  } else {
    parallel::matmul(a, b, out, rows, inner, cols);
  }
}

void kron(std::span<const Complex> a, std::size_t a_rows, std::size_t a_cols,
          std::span<const Complex> b, std::size_t b_rows, std::size_t b_cols,
          std::span<Complex> out) {
  if (a.size() * b.size() < kParallelWorkThreshold) {
    serial::kron(a, a_rows, a_cols, b, b_rows, b_cols, out);
  } else {
    parallel::kron(a, a_rows, a_cols, b, b_rows, b_cols, out);
  }
}

}  // namespace topoq::kernels
