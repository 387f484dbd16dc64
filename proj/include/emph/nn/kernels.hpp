#pragma once

namespace emph::nn {

// C [m x n] = (acc ? C : 0) + op(A) * op(B), where op(A) is m x k and
// op(B) is k x n after the optional transposes. A and B are stored
// row-major in their untransposed shapes.

// Serial reference kernel, kept as the ground truth the parallel kernel is
// tested against.
namespace ref {
void gemm(bool trans_a, bool trans_b, int m, int n, int k, const double* a,
          const double* b, double* c, bool acc);
}

// OpenMP kernel. Rows of C are distributed over threads; every element is
// accumulated by a single thread in the same order as ref::gemm, so the
// result is bit-identical to the serial kernel.
void gemm(bool trans_a, bool trans_b, int m, int n, int k, const double* a,
          const double* b, double* c, bool acc);

}  // namespace emph::nn
