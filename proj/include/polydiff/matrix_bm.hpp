#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "polydiff/sim.hpp"

namespace polydiff {

enum class MatrixKind { SOd, SU3, Hermitian, Symmetric };

struct MatrixEnsemble {
    MatrixKind kind;
    int d = 0;
    double time = 0;
    std::vector<Eigen::MatrixXcd> mats;
    std::uint64_t seed = 0;
};

// Brownian motion on the matrix space, started at `start` (identity when
// absent). SOd/SU3 move by left-increment exponentials over the Lie-algebra
// basis, normalized so the short-time generator matches the operator tables
// (see generator_check); they re-project to the group every 100 steps.
// Hermitian/Symmetric entries are exact Gaussians, sampled in one shot.
MatrixEnsemble matrix_brownian(MatrixKind kind, int d, const SimConfig& cfg,
                               const std::optional<Eigen::MatrixXcd>& start = std::nullopt);

enum class SpectralMapKind { CharpolyCoeffs, SpectrumSorted, TraceSu3, FirstColumnBlock };

// CharpolyCoeffs: columns a_0..a_{d-1} of det(X I - M) = X^d + sum a_i X^i.
// SpectrumSorted: ascending real eigenvalues (Hermitian/Symmetric only).
// TraceSu3: (Re Z, Im Z) with Z = trace/3 (SU3 only).
// FirstColumnBlock: top-left p x q real entries, row-major (SOd only).
EnsembleSample spectral_map(const MatrixEnsemble& ens, SpectralMapKind map, int p = 0, int q = 0);

// Worst orthogonality / unitarity defect max_i ||M_i M_i^* - I||_inf.
double group_defect(const MatrixEnsemble& ens);

}  // namespace polydiff
