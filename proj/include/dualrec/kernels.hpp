#pragma once
// Dense vector kernels behind the embedding math: scalar reference
// implementations plus an AVX2 variant selected at runtime. All callers go
// through the dispatch table so the whole system runs on whichever backend
// the host supports.

#include <cstddef>
#include <span>
#include <string>

namespace dualrec::kernels {

enum class Backend { Scalar, Avx2 };

// Backend currently wired into the dispatch table.
Backend active_backend();
std::string backend_name(Backend b);

// True if the host CPU can run the given backend.
bool backend_supported(Backend b);

// Override the auto-detected backend (tests use this to compare variants).
// Throws std::runtime_error if the host cannot run it.
void force_backend(Backend b);

// Reset to auto-detection.
void reset_backend();

double dot(const double* a, const double* b, std::size_t n);

// y += alpha * x
void axpy(double alpha, const double* x, double* y, std::size_t n);

// out[r] = dot(matrix row r, query); matrix is row-major rows x cols.
void matvec(const double* matrix, std::size_t rows, std::size_t cols,
            const double* query, double* out);

double squared_norm(const double* a, std::size_t n);

inline double dot(std::span<const double> a, std::span<const double> b) {
    return dot(a.data(), b.data(), a.size());
}
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    axpy(alpha, x.data(), y.data(), x.size());
}
inline double squared_norm(std::span<const double> a) {
    return squared_norm(a.data(), a.size());
}

namespace detail {
// Raw entry points for each variant, exposed for equivalence tests.
double dot_scalar(const double* a, const double* b, std::size_t n);
void axpy_scalar(double alpha, const double* x, double* y, std::size_t n);
void matvec_scalar(const double* m, std::size_t rows, std::size_t cols,
                   const double* q, double* out);
double squared_norm_scalar(const double* a, std::size_t n);

#if defined(__x86_64__)
double dot_avx2(const double* a, const double* b, std::size_t n);
void axpy_avx2(double alpha, const double* x, double* y, std::size_t n);
void matvec_avx2(const double* m, std::size_t rows, std::size_t cols,
                 const double* q, double* out);
double squared_norm_avx2(const double* a, std::size_t n);
#endif
}  // namespace detail

}  // namespace dualrec::kernels
