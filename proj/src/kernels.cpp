#include "dualrec/kernels.hpp"

#include <stdexcept>

namespace dualrec::kernels {

namespace {

struct Table {
    Backend backend;
    double (*dot)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*matvec)(const double*, std::size_t, std::size_t, const double*, double*);
    double (*squared_norm)(const double*, std::size_t);
};

constexpr Table kScalar{Backend::Scalar, detail::dot_scalar, detail::axpy_scalar,
                        detail::matvec_scalar, detail::squared_norm_scalar};

#if defined(__x86_64__)
constexpr Table kAvx2{Backend::Avx2, detail::dot_avx2, detail::axpy_avx2,
                      detail::matvec_avx2, detail::squared_norm_avx2};
#endif

bool cpu_has_avx2() {
#if defined(__x86_64__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Table& detect() {
#if defined(__x86_64__)
    if (cpu_has_avx2()) return kAvx2;
#endif
    return kScalar;
}

const Table* g_table = nullptr;

const Table& table() {
    if (g_table == nullptr) g_table = &detect();
    return *g_table;
}

}  // namespace

Backend active_backend() { return table().backend; }

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
    }
    return "unknown";
}

bool backend_supported(Backend b) {
    if (b == Backend::Scalar) return true;
    return cpu_has_avx2();
}

void force_backend(Backend b) {
    if (!backend_supported(b))
        throw std::runtime_error("kernel backend not supported on this host: " +
                                 backend_name(b));
    switch (b) {
        case Backend::Scalar: g_table = &kScalar; break;
        case Backend::Avx2:
#if defined(__x86_64__)
            g_table = &kAvx2;
#endif
            break;
    }
}

void reset_backend() { g_table = nullptr; }

double dot(const double* a, const double* b, std::size_t n) {
    return table().dot(a, b, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    table().axpy(alpha, x, y, n);
}

void matvec(const double* matrix, std::size_t rows, std::size_t cols,
            const double* query, double* out) {
    table().matvec(matrix, rows, cols, query, out);
}

double squared_norm(const double* a, std::size_t n) {
    return table().squared_norm(a, n);
}

}  // namespace dualrec::kernels
