#pragma once

#include <cstddef>

namespace misoic {

// Pair maximization over two gain clouds in the linear rate domain. Arrays
// a/b hold side 1's desired and cross received powers, c/d side 2's, all
// with transmit power folded in. The returned value is 2^(sum rate); taking
// the maximum before the log keeps the hot loop free of transcendentals.
//
// Ties resolve to the lexicographically smallest (i, j), which makes the
// result independent of how callers split the i range across threads.
struct PairBest {
    double value = 0.0;
    std::size_t i = 0, j = 0;
};

enum class KernelMode { Auto, Scalar, Avx2 };

// Process-wide dispatch override, used by the equivalence tests. Auto picks
// the AVX2 path when the build and the CPU both support it.
void set_kernel_mode(KernelMode mode);
KernelMode kernel_mode();
bool kernel_avx2_available();

PairBest nn_pair_max(const double* a, const double* b, std::size_t n1,
                     const double* c, const double* d, std::size_t n2);
PairBest nd_pair_max(const double* a, const double* b, std::size_t n1,
                     const double* c, const double* d, std::size_t n2);
PairBest dd_pair_max(const double* a, const double* b, std::size_t n1,
                     const double* c, const double* d, std::size_t n2);

// Reference implementations, always compiled without ISA extensions.
PairBest nn_pair_max_scalar(const double* a, const double* b, std::size_t n1,
                            const double* c, const double* d, std::size_t n2);
PairBest nd_pair_max_scalar(const double* a, const double* b, std::size_t n1,
                            const double* c, const double* d, std::size_t n2);
PairBest dd_pair_max_scalar(const double* a, const double* b, std::size_t n1,
                            const double* c, const double* d, std::size_t n2);

// Exact per-pair objectives shared by every path, so vector and scalar
// kernels agree bit for bit.
double nn_pair_value(double a, double b, double c, double d);
double nd_pair_value(double a, double b, double c, double d);
double dd_pair_value(double a, double b, double c, double d);

} // namespace misoic
