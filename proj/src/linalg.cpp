#include "misoic/linalg.hpp"

#include "misoic/errors.hpp"

#include <cmath>
#include <cstddef>

namespace misoic {

namespace {

void check_same_dim(const CVec& x, const CVec& y) {
    if (x.size() != y.size())
        throw RangeError("vector dimensions differ: " + std::to_string(x.size()) + " vs " +
                         std::to_string(y.size()));
}

} // namespace

cplx inner(const CVec& x, const CVec& y) {
    check_same_dim(x, y);
    cplx s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

double norm2(const CVec& x) {
    double s = 0.0;
    for (const cplx& c : x) s += std::norm(c);
    return s;
}

double vnorm(const CVec& x) { return std::sqrt(norm2(x)); }

CVec unit(const CVec& x) {
    double n = vnorm(x);
    if (n <= tol_deg) throw DegenerateDirection("cannot normalize a (near) zero vector");
    CVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] / n;
    return out;
}

CVec proj(const CVec& x, const CVec& onto) {
    check_same_dim(x, onto);
    double n2 = norm2(onto);
    if (n2 <= tol_deg * tol_deg)
        throw DegenerateDirection("projection target is a (near) zero vector");
    cplx coef = inner(onto, x) / n2;
    CVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = coef * onto[i];
    return out;
}

CVec proj_orth(const CVec& x, const CVec& onto) {
    CVec p = proj(x, onto);
    CVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - p[i];
    return out;
}

CVec add(const CVec& x, const CVec& y) {
    check_same_dim(x, y);
    CVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
    return out;
}

CVec sub(const CVec& x, const CVec& y) {
    check_same_dim(x, y);
    CVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
    return out;
}

CVec scale(const CVec& x, cplx s) {
    CVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = s * x[i];
    return out;
}

Rank2Eig rank2_herm_eig(const CVec& u, const CVec& v, double alpha, double beta) {
    check_same_dim(u, v);
    if (!(alpha > 0.0) || !(beta < 0.0))
        throw RangeError("rank2_herm_eig expects alpha > 0 and beta < 0");
    double nu = vnorm(u);
    double nv = vnorm(v);
    if (nu <= tol_deg || nv <= tol_deg)
        throw DegenerateDirection("rank2_herm_eig needs two nonzero vectors");

    // Orthonormal basis of span{u, v}: e1 along u, e2 along the residual of v.
    CVec e1(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) e1[i] = u[i] / nu;
    cplx p = inner(e1, v); // v component along e1
    CVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] - p * e1[i];
    double q = vnorm(r); // v component along e2, real and positive by construction
    if (q / nv <= tol_par)
        throw ParallelChannels("rank2_herm_eig: input vectors are numerically parallel");
    CVec e2(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) e2[i] = r[i] / q;

    // 2x2 representation: u -> (nu, 0), v -> (p, q).
    double m11 = alpha * nu * nu + beta * std::norm(p);
    double m22 = beta * q * q;
    cplx m12 = beta * p * q;

    double half_tr = 0.5 * (m11 + m22);
    double half_diff = 0.5 * (m11 - m22);
    double disc = std::sqrt(half_diff * half_diff + std::norm(m12));
    double lam_pos = half_tr + disc;
    double lam_neg = half_tr - disc;

    auto eigvec = [&](double lam) {
        // (M - lam I) z = 0 has solution z = (m12, lam - m11); fall back to the
        // coordinate axes when the matrix is (nearly) diagonal.
        cplx z0 = m12;
        double z1 = lam - m11;
        double zn = std::sqrt(std::norm(z0) + z1 * z1);
        CVec out(u.size());
        if (zn <= 1e-300) {
            // Diagonal case: pick the axis whose diagonal entry matches lam.
            const CVec& axis = (std::abs(m11 - lam) <= std::abs(m22 - lam)) ? e1 : e2;
            return axis;
        }
        for (std::size_t i = 0; i < u.size(); ++i) out[i] = (z0 * e1[i] + z1 * e2[i]) / zn;
        return out;
    };

    Rank2Eig out;
    out.pos_val = lam_pos;
    out.neg_val = lam_neg;
    out.pos_vec = eigvec(lam_pos);
    out.neg_vec = eigvec(lam_neg);
    return out;
}

} // namespace misoic
