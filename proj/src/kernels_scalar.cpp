#include "dualrec/kernels.hpp"

namespace dualrec::kernels::detail {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void matvec_scalar(const double* m, std::size_t rows, std::size_t cols,
                   const double* q, double* out) {
    for (std::size_t r = 0; r < rows; ++r)
        out[r] = dot_scalar(m + r * cols, q, cols);
}

double squared_norm_scalar(const double* a, std::size_t n) {
    return dot_scalar(a, a, n);
}

}  // namespace dualrec::kernels::detail
