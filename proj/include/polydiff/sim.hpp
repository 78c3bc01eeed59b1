#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "polydiff/model.hpp"

namespace polydiff {

enum class BoundaryPolicy { RejectStep, HalveDt, Absorb };

struct SimConfig {
    double t_final = 1.0;
    double dt = 1e-3;
    int n_paths = 1000;
    std::uint64_t seed = 0;
    BoundaryPolicy policy = BoundaryPolicy::RejectStep;
};

struct EnsembleSample {
    std::string label;
    double time = 0;
    Eigen::MatrixXd points;  // n_paths x nvars
    std::uint64_t seed = 0;
    long rejected_steps = 0;
    long absorbed_paths = 0;
};

// Euler-Maruyama for a real-coordinate model: x <- x + b(x) dt + sigma(x)
// sqrt(dt) xi with sigma sigma^T = 2 gamma(x). The domain is the set where
// every boundary/domain polynomial is >= 0; x0 must lie in the closed
// domain. Paths are independent, each driven by a seed derived from
// (cfg.seed, path index); reruns are bit-identical.
EnsembleSample sde_paths(const DiffusionModel& m, const Eigen::VectorXd& x0,
                         const SimConfig& cfg);

// Simulates the h-transformed model (conjugate-pair models are converted to
// real coordinates after the transform).
EnsembleSample conditioned_paths(const DiffusionModel& m, const Eigen::VectorXd& x0,
                                 const SimConfig& cfg);

// Brownian motion in the ordered chamber x1 < ... < xd conditioned to stay
// there: drift_i = 2 sum_{j != i} 1/(x_i - x_j), sigma = sqrt(2) I.
EnsembleSample chamber_conditioned_paths(int d, const Eigen::VectorXd& x0,
                                         const SimConfig& cfg);

// Spherical Brownian motion on S^m in ambient coordinates (m+1 columns):
// tangential Gaussian increments with renormalization each step.
EnsembleSample sphere_paths(int m, const Eigen::VectorXd& x0, const SimConfig& cfg);

// Deterministic per-path seed stream.
std::uint64_t splitmix64(std::uint64_t z);
std::uint64_t path_seed(std::uint64_t seed, std::uint64_t index);

// One row per path; header records label, t, dt, seed.
void write_ensemble_csv(const EnsembleSample& s, const std::vector<std::string>& columns,
                        const std::string& path, double dt);

}  // namespace polydiff
