#pragma once

#include "misoic/channel.hpp"
#include "misoic/pareto.hpp"

#include <cstdint>
#include <vector>

namespace misoic {

// Lattice resolution for the exhaustive oracles. For the full-sphere scope
// n_lambda counts the polar samples and n_phase the relative-phase samples.
struct GridSpec {
    int n_lambda = default_n_lambda;
    int n_phase = 64;
    int n_power = default_n_power;
    enum class Scope { Subspace, FullSphere } scope = Scope::Subspace;
    enum class PhaseMode { Reduced, Full } phase_mode = PhaseMode::Reduced;
};

// Flat sample of one transmitter's received powers over its beamformer
// lattice: des = |h_des^H w|^2 p and cross = |h_cross^H w|^2 p, enumerated
// lambda-major, then phase, then power. In Reduced mode only the coherent
// phase is kept per (lambda, power) column; this is lossless whenever the
// consumer's objective is monotone in the phase-carrying gain (the other
// gain never depends on the phase in either basis). In Full mode the cosine
// symmetry phi <-> 2pi - phi halves the grid; kept indices run 0..n_phase/2.
struct GainCloud {
    std::vector<double> des, cross;
    std::vector<std::int32_t> il, ik, ip; // lambda, phase, power lattice indices
    std::vector<double> lam_vals, pow_vals;
    double phase_step = 0.0; // radians per phase index
    int n_lambda = 0, n_phase = 0, n_power = 0;

    std::size_t size() const { return des.size(); }
};

// Subspace lattice of one transmitter in the given family basis. W for the
// structures whose objective rewards the desired gain coherently (NN, ND,
// DN), V for DD where the cross gain carries the phase.
GainCloud make_subspace_cloud(const Channel& ch, int user, FamilyKind kind,
                              const GridSpec& spec, double p_max);

// Unconstrained unit-sphere lattice for N = 2: w = (cos a, e^{ib} sin a)
// with a over [0, pi/2] and b over [0, 2pi). Throws UnsupportedDimension
// for any other antenna count. Phases are never reduced here because both
// received powers depend on b.
GainCloud make_sphere_cloud(const Channel& ch, int user, int n_alpha, int n_beta,
                            int n_power, double p_max);

// Beamformer at subspace lattice coordinates (lambda, phase).
CVec subspace_beamformer(const LambdaFamily& fam, double lambda, double phase);

// Beamformer lists matching the lattices above, enumerated lambda-major then
// phase (full grid, no reduction). Used by tests that sweep directions
// without gain bookkeeping.
std::vector<CVec> subspace_grid(const Channel& ch, int user, const GridSpec& spec,
                                FamilyKind kind = FamilyKind::W);
std::vector<CVec> full_sphere_grid(int n, int n_alpha, int n_beta);
std::vector<CVec> full_sphere_grid(int n, int resolution); // beta gets 2x resolution

} // namespace misoic
