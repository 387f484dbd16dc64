#include "emph/nn/kernels.hpp"

#include <cstddef>
#include <cstdint>

namespace emph::nn {

namespace {

inline std::size_t idx_a(bool trans, int i, int l, int k, int m) {
  // element (i, l) of op(A); A is m x k untransposed, k x m when transposed
  return trans ? static_cast<std::size_t>(l) * static_cast<std::size_t>(m) +
                     static_cast<std::size_t>(i)
               : static_cast<std::size_t>(i) * static_cast<std::size_t>(k) +
                     static_cast<std::size_t>(l);
}

inline std::size_t idx_b(bool trans, int l, int j, int n, int k) {
  // element (l, j) of op(B); B is k x n untransposed, n x k when transposed
  return trans ? static_cast<std::size_t>(j) * static_cast<std::size_t>(k) +
                     static_cast<std::size_t>(l)
               : static_cast<std::size_t>(l) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(j);
}

inline void gemm_row(bool trans_a, bool trans_b, int i, int n, int k, int m,
                     const double* a, const double* b, double* c, bool acc) {
  double* crow = c + static_cast<std::size_t>(i) * static_cast<std::size_t>(n);
  for (int j = 0; j < n; ++j) {
    double s = acc ? crow[j] : 0.0;
    for (int l = 0; l < k; ++l)
      s += a[idx_a(trans_a, i, l, k, m)] * b[idx_b(trans_b, l, j, n, k)];
    crow[j] = s;
  }
}

// below this many multiply-adds the parallel fork is pure overhead
constexpr std::int64_t kParallelCutoff = 32768;

}  // namespace

namespace ref {
void gemm(bool trans_a, bool trans_b, int m, int n, int k, const double* a,
          const double* b, double* c, bool acc) {
  for (int i = 0; i < m; ++i) gemm_row(trans_a, trans_b, i, n, k, m, a, b, c, acc);
}
}  // namespace ref

void gemm(bool trans_a, bool trans_b, int m, int n, int k, const double* a,
          const double* b, double* c, bool acc) {
  const std::int64_t work = static_cast<std::int64_t>(m) * n * k;
#pragma omp parallel for schedule(static) if (work >= kParallelCutoff)
  for (int i = 0; i < m; ++i) gemm_row(trans_a, trans_b, i, n, k, m, a, b, c, acc);
}

}  // namespace emph::nn
