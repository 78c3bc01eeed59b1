#pragma once

#include <Eigen/Dense>
#include <vector>

namespace polydiff {

// Finite-chain conditioning: Perron ground state of a positive submatrix,
// the induced stochastic matrix Q(x,y) = V0(y) P(x,y) / (mu0 V0(x)), and a
// brute-force conditioned path law for comparison.

struct GroundState {
    double mu0 = 0;
    Eigen::VectorXd v0;  // positive, max entry 1
    long iterations = 0;
};

// Power iteration on an entrywise-positive square matrix, residual < tol in
// the sup norm. Deterministic. Throws on non-positive entries or when the
// iteration cap is exceeded.
GroundState perron_ground_state(const Eigen::MatrixXd& pa, double tol = 1e-12,
                                long max_iter = 1000000);

Eigen::MatrixXd doob_matrix(const Eigen::MatrixXd& pa);

// Law of (X_0..X_n). prob is indexed by the path code sum_k a_k |A|^{n-k}
// over positions of X_1..X_n inside A (X_0 = x0 fixed).
struct PathLaw {
    int n = 0;
    int na = 0;
    std::vector<double> prob;
};

// Exact enumeration of every length-N path of P started at x0 and staying
// in A; returns the normalized law of the first n+1 states. Throws when
// |A|^N exceeds max_paths (default 1e7) or x0 is outside A.
PathLaw conditioned_path_law(const Eigen::MatrixXd& p, const std::vector<int>& a, int x0,
                             int n, int big_n, double max_paths = 1e7);

// Law of (X_0..X_n) under the Q-chain started at x0 (index within A).
PathLaw q_chain_law(const Eigen::MatrixXd& q, int x0_local, int n);

double tv_distance(const PathLaw& a, const PathLaw& b);

// |second eigenvalue| / Perron eigenvalue of a square matrix; governs the
// conditioning convergence rate.
double subdominant_ratio(const Eigen::MatrixXd& pa);

// Row-stochastic validation helper (1e-12 tolerance).
bool rows_sum_to_one(const Eigen::MatrixXd& p, double tol = 1e-12);

// Seeded random chain on n states with strictly positive entries.
Eigen::MatrixXd random_positive_chain(int n, uint64_t seed);

}  // namespace polydiff
