#pragma once

#include <complex>
#include <vector>

namespace misoic {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

// Absolute norm threshold below which a direction is treated as zero.
inline constexpr double tol_deg = 1e-9;
// Relative residual threshold below which two vectors count as parallel.
inline constexpr double tol_par = 1e-9;

// Hermitian inner product, conjugate-linear in the first argument: x^H y.
cplx inner(const CVec& x, const CVec& y);

double norm2(const CVec& x); // squared Euclidean norm
double vnorm(const CVec& x);

// x scaled to unit norm. Throws DegenerateDirection for (near) zero input.
CVec unit(const CVec& x);

// Orthogonal projection of x onto span{onto} and onto its complement.
CVec proj(const CVec& x, const CVec& onto);
CVec proj_orth(const CVec& x, const CVec& onto);

CVec add(const CVec& x, const CVec& y);
CVec sub(const CVec& x, const CVec& y);
CVec scale(const CVec& x, cplx s);

struct Rank2Eig {
    double pos_val = 0.0;
    CVec pos_vec;
    double neg_val = 0.0;
    CVec neg_vec;
};

// Eigen-decomposition of M = alpha*u*u^H + beta*v*v^H restricted to
// span{u, v}, with alpha > 0 and beta < 0. M has exactly one positive and
// one negative eigenvalue on that span; the remaining directions are null
// and never returned. Closed form via the 2x2 representation in an
// orthonormal basis of span{u, v}. Throws ParallelChannels when u and v do
// not span a 2-dimensional subspace.
Rank2Eig rank2_herm_eig(const CVec& u, const CVec& v, double alpha, double beta);

} // namespace misoic
