// AVX2 variants of the pair-max kernels. This is the only translation unit
// compiled with -mavx2/-mfma; the dispatcher in kernels.cpp never calls in
// here unless the CPU reports AVX2 at runtime.
//
// The vector loop only screens candidates: lanes are compared against a
// slightly relaxed running best using division-free forms, and any lane that
// passes is re-evaluated with the exact scalar objective. That keeps results
// bit-identical to the scalar kernels while skipping the expensive division
// on almost every pair.

#if defined(MISOIC_BUILD_AVX2)

#include "misoic/errors.hpp"
#include "misoic/kernels.hpp"

#include <immintrin.h>

#include <vector>

namespace misoic {
namespace detail {

namespace {

// Relaxation factor applied to the running best before the vector compare,
// covering the rounding gap between the screened and the exact form.
constexpr double kRelax = 1.0 - 1e-12;

inline void refine(PairBest& best, double v, std::size_t i, std::size_t j) {
    if (v > best.value) best = {v, i, j};
}

} // namespace

PairBest nn_pair_max_avx2(const double* a, const double* b, std::size_t n1,
                          const double* c, const double* d, std::size_t n2) {
    if (n1 == 0 || n2 == 0) throw RangeError("pair_max: empty gain cloud");
    PairBest best;
    best.value = 0.0;
    const __m256d ones = _mm256_set1_pd(1.0);
    for (std::size_t i = 0; i < n1; ++i) {
        const double ai = a[i], bi = b[i];
        const __m256d vx = _mm256_set1_pd(1.0 + ai);
        const __m256d vB = _mm256_set1_pd(1.0 + bi);
        std::size_t j = 0;
        for (; j + 4 <= n2; j += 4) {
            const __m256d vt = _mm256_set1_pd(best.value * kRelax * (1.0 + bi));
            const __m256d vc = _mm256_loadu_pd(c + j);
            const __m256d vd = _mm256_loadu_pd(d + j);
            const __m256d lhs = _mm256_mul_pd(_mm256_add_pd(vx, vd), _mm256_add_pd(vB, vc));
            const __m256d rhs = _mm256_mul_pd(vt, _mm256_add_pd(ones, vd));
            const int mask = _mm256_movemask_pd(_mm256_cmp_pd(lhs, rhs, _CMP_GT_OQ));
            if (mask) {
                for (int l = 0; l < 4; ++l)
                    if (mask & (1 << l))
                        refine(best, nn_pair_value(ai, bi, c[j + l], d[j + l]), i, j + l);
            }
        }
        for (; j < n2; ++j) refine(best, nn_pair_value(ai, bi, c[j], d[j]), i, j);
    }
    return best;
}

PairBest nd_pair_max_avx2(const double* a, const double* b, std::size_t n1,
                          const double* c, const double* d, std::size_t n2) {
    if (n1 == 0 || n2 == 0) throw RangeError("pair_max: empty gain cloud");
    // Hoist the only division to a per-column precompute.
    std::vector<double> y(n2), r(n2);
    for (std::size_t j = 0; j < n2; ++j) {
        y[j] = 1.0 + c[j];
        r[j] = y[j] / (1.0 + d[j]);
    }
    PairBest best;
    best.value = 0.0;
    for (std::size_t i = 0; i < n1; ++i) {
        const double ai = a[i], bi = b[i];
        const __m256d vx = _mm256_set1_pd(1.0 + ai);
        const __m256d vb = _mm256_set1_pd(bi);
        std::size_t j = 0;
        for (; j + 4 <= n2; j += 4) {
            const __m256d vbest = _mm256_set1_pd(best.value * kRelax);
            const __m256d vd = _mm256_loadu_pd(d + j);
            const __m256d vy = _mm256_loadu_pd(y.data() + j);
            const __m256d vr = _mm256_loadu_pd(r.data() + j);
            const __m256d t1 = _mm256_mul_pd(_mm256_add_pd(vx, vd), vr);
            const __m256d t2 = _mm256_add_pd(vb, vy);
            const __m256d m = _mm256_min_pd(t1, t2);
            const int mask = _mm256_movemask_pd(_mm256_cmp_pd(m, vbest, _CMP_GT_OQ));
            if (mask) {
                for (int l = 0; l < 4; ++l)
                    if (mask & (1 << l))
                        refine(best, nd_pair_value(ai, bi, c[j + l], d[j + l]), i, j + l);
            }
        }
        for (; j < n2; ++j) refine(best, nd_pair_value(ai, bi, c[j], d[j]), i, j);
    }
    return best;
}

PairBest dd_pair_max_avx2(const double* a, const double* b, std::size_t n1,
                          const double* c, const double* d, std::size_t n2) {
    if (n1 == 0 || n2 == 0) throw RangeError("pair_max: empty gain cloud");
    std::vector<double> y(n2);
    for (std::size_t j = 0; j < n2; ++j) y[j] = 1.0 + c[j];
    PairBest best;
    best.value = 0.0;
    for (std::size_t i = 0; i < n1; ++i) {
        const double ai = a[i], bi = b[i];
        const __m256d vx = _mm256_set1_pd(1.0 + ai);
        const __m256d vb = _mm256_set1_pd(bi);
        std::size_t j = 0;
        for (; j + 4 <= n2; j += 4) {
            const __m256d vbest = _mm256_set1_pd(best.value * kRelax);
            const __m256d vd = _mm256_loadu_pd(d + j);
            const __m256d vy = _mm256_loadu_pd(y.data() + j);
            const __m256d z1 = _mm256_mul_pd(vx, vy);
            const __m256d z2 = _mm256_add_pd(vx, vd);
            const __m256d z3 = _mm256_add_pd(vb, vy);
            const __m256d m3 = _mm256_min_pd(_mm256_min_pd(z1, z2), z3);
            // z4 > best <=> z2*z3 > best*z1, keeping the loop division free.
            const __m256d c1 = _mm256_cmp_pd(m3, vbest, _CMP_GT_OQ);
            const __m256d c2 =
                _mm256_cmp_pd(_mm256_mul_pd(z2, z3), _mm256_mul_pd(vbest, z1), _CMP_GT_OQ);
            const int mask = _mm256_movemask_pd(_mm256_and_pd(c1, c2));
            if (mask) {
                for (int l = 0; l < 4; ++l)
                    if (mask & (1 << l))
                        refine(best, dd_pair_value(ai, bi, c[j + l], d[j + l]), i, j + l);
            }
        }
        for (; j < n2; ++j) refine(best, dd_pair_value(ai, bi, c[j], d[j]), i, j);
    }
    return best;
}

} // namespace detail
} // namespace misoic

#endif // MISOIC_BUILD_AVX2
