#include "misoic/kernels.hpp"

#include "misoic/errors.hpp"

#include <algorithm>

namespace misoic {

namespace {

KernelMode g_mode = KernelMode::Auto;

bool cpu_supports_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

void check_sizes(std::size_t n1, std::size_t n2) {
    if (n1 == 0 || n2 == 0) throw RangeError("pair_max: empty gain cloud");
}

} // namespace

#if defined(MISOIC_BUILD_AVX2)
namespace detail {
PairBest nn_pair_max_avx2(const double* a, const double* b, std::size_t n1,
                          const double* c, const double* d, std::size_t n2);
PairBest nd_pair_max_avx2(const double* a, const double* b, std::size_t n1,
                          const double* c, const double* d, std::size_t n2);
PairBest dd_pair_max_avx2(const double* a, const double* b, std::size_t n1,
                          const double* c, const double* d, std::size_t n2);
} // namespace detail
#endif

void set_kernel_mode(KernelMode mode) {
    if (mode == KernelMode::Avx2 && !kernel_avx2_available())
        throw RangeError("AVX2 kernels are not available on this build or CPU");
    g_mode = mode;
}

KernelMode kernel_mode() { return g_mode; }

bool kernel_avx2_available() {
#if defined(MISOIC_BUILD_AVX2)
    return cpu_supports_avx2();
#else
    return false;
#endif
}

double nn_pair_value(double a, double b, double c, double d) {
    const double x = 1.0 + a, bb = 1.0 + b, e = 1.0 + d;
    return (x + d) * (bb + c) / (e * bb);
}

double nd_pair_value(double a, double b, double c, double d) {
    const double x = 1.0 + a, y = 1.0 + c, e = 1.0 + d;
    return std::min((x + d) * y / e, b + y);
}

double dd_pair_value(double a, double b, double c, double d) {
    const double x = 1.0 + a, y = 1.0 + c;
    const double z1 = x * y, z2 = x + d, z3 = b + y;
    return std::min(std::min(z1, z2), std::min(z3, z2 * z3 / z1));
}

namespace {

template <double (*Value)(double, double, double, double)>
PairBest pair_max_scalar(const double* a, const double* b, std::size_t n1,
                         const double* c, const double* d, std::size_t n2) {
    check_sizes(n1, n2);
    PairBest best;
    best.value = 0.0;
    for (std::size_t i = 0; i < n1; ++i) {
        const double ai = a[i], bi = b[i];
        for (std::size_t j = 0; j < n2; ++j) {
            const double v = Value(ai, bi, c[j], d[j]);
            if (v > best.value) best = {v, i, j};
        }
    }
    return best;
}

bool use_avx2() {
    switch (g_mode) {
        case KernelMode::Scalar: return false;
        case KernelMode::Avx2: return true;
        case KernelMode::Auto: return kernel_avx2_available();
    }
    return false;
}

} // namespace

PairBest nn_pair_max_scalar(const double* a, const double* b, std::size_t n1,
                            const double* c, const double* d, std::size_t n2) {
    return pair_max_scalar<nn_pair_value>(a, b, n1, c, d, n2);
}

PairBest nd_pair_max_scalar(const double* a, const double* b, std::size_t n1,
                            const double* c, const double* d, std::size_t n2) {
    return pair_max_scalar<nd_pair_value>(a, b, n1, c, d, n2);
}

PairBest dd_pair_max_scalar(const double* a, const double* b, std::size_t n1,
                            const double* c, const double* d, std::size_t n2) {
    return pair_max_scalar<dd_pair_value>(a, b, n1, c, d, n2);
}

PairBest nn_pair_max(const double* a, const double* b, std::size_t n1,
                     const double* c, const double* d, std::size_t n2) {
#if defined(MISOIC_BUILD_AVX2)
    if (use_avx2()) return detail::nn_pair_max_avx2(a, b, n1, c, d, n2);
#endif
    return nn_pair_max_scalar(a, b, n1, c, d, n2);
}

PairBest nd_pair_max(const double* a, const double* b, std::size_t n1,
                     const double* c, const double* d, std::size_t n2) {
#if defined(MISOIC_BUILD_AVX2)
    if (use_avx2()) return detail::nd_pair_max_avx2(a, b, n1, c, d, n2);
#endif
    return nd_pair_max_scalar(a, b, n1, c, d, n2);
}

PairBest dd_pair_max(const double* a, const double* b, std::size_t n1,
                     const double* c, const double* d, std::size_t n2) {
#if defined(MISOIC_BUILD_AVX2)
    if (use_avx2()) return detail::dd_pair_max_avx2(a, b, n1, c, d, n2);
#endif
    return dd_pair_max_scalar(a, b, n1, c, d, n2);
}

} // namespace misoic
