#include "polydiff/chain.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>
#include <stdexcept>

namespace polydiff {

GroundState perron_ground_state(const Eigen::MatrixXd& pa, double tol, long max_iter) {
    const int n = static_cast<int>(pa.rows());
    if (pa.cols() != n || n == 0) throw std::invalid_argument("perron: square matrix required");
    if ((pa.array() <= 0).any()) throw std::invalid_argument("perron: entries must be positive");

    GroundState gs;
    gs.v0 = Eigen::VectorXd::Ones(n);
    for (long it = 0; it < max_iter; ++it) {
        Eigen::VectorXd w = pa * gs.v0;
        double mu = w.maxCoeff();
        w /= mu;
        double res = (pa * w - mu * w).cwiseAbs().maxCoeff();
        gs.v0 = w;
        gs.mu0 = mu;
        gs.iterations = it + 1;
        if (res < tol) return gs;
    }
    throw std::runtime_error("perron: no convergence within iteration cap");
}

Eigen::MatrixXd doob_matrix(const Eigen::MatrixXd& pa) {
    GroundState gs = perron_ground_state(pa);
    const int n = static_cast<int>(pa.rows());
    Eigen::MatrixXd q(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) q(x, y) = gs.v0(y) / (gs.mu0 * gs.v0(x)) * pa(x, y);
    return q;
}

PathLaw conditioned_path_law(const Eigen::MatrixXd& p, const std::vector<int>& a, int x0,
                             int n, int big_n, double max_paths) {
    const int na = static_cast<int>(a.size());
    if (n > big_n) throw std::invalid_argument("conditioned_path_law: n must be <= N");
    if (std::pow(static_cast<double>(na), big_n) > max_paths)
        throw std::invalid_argument("conditioned_path_law: |A|^N too large for enumeration");
    int x0_local = -1;
    for (int i = 0; i < na; ++i)
        if (a[i] == x0) x0_local = i;
    if (x0_local < 0) throw std::invalid_argument("conditioned_path_law: x0 not in A");

    PathLaw law;
    law.n = n;
    law.na = na;
    size_t buckets = 1;
    for (int k = 0; k < n; ++k) buckets *= na;
    law.prob.assign(buckets, 0.0);

    // DFS over all length-N paths inside A; the code collects X_1..X_n.
    double total = 0;
    auto dfs = [&](auto&& self, int depth, int cur, size_t code, double w) -> void {
        if (depth == big_n) {
            law.prob[code] += w;
            total += w;
            return;
        }
        for (int y = 0; y < na; ++y) {
            double w2 = w * p(a[cur], a[y]);
            if (w2 <= 0) continue;
            self(self, depth + 1, y, depth + 1 <= n ? code * na + static_cast<size_t>(y) : code, w2);
        }
    };
    dfs(dfs, 0, x0_local, 0, 1.0);

    if (total <= 0) throw std::runtime_error("conditioned_path_law: conditioning event has mass 0");
    for (double& pr : law.prob) pr /= total;
    return law;
}

PathLaw q_chain_law(const Eigen::MatrixXd& q, int x0_local, int n) {
    const int na = static_cast<int>(q.rows());
    PathLaw law;
    law.n = n;
    law.na = na;
    size_t buckets = 1;
    for (int k = 0; k < n; ++k) buckets *= na;
    law.prob.assign(buckets, 0.0);
    for (size_t code = 0; code < buckets; ++code) {
        double w = 1.0;
        int prev = x0_local;
        size_t c = code;
        // decode most-significant first
        size_t div = buckets / (na > 0 ? na : 1);
        for (int k = 0; k < n; ++k) {
            int y = static_cast<int>(c / div);
            c %= div;
            if (k + 1 < n) div /= na;
            w *= q(prev, y);
            prev = y;
        }
        law.prob[code] = w;
    }
    return law;
}

double tv_distance(const PathLaw& a, const PathLaw& b) {
    if (a.prob.size() != b.prob.size() || a.na != b.na)
        throw std::invalid_argument("tv_distance: incompatible laws");
    double s = 0;
    for (size_t i = 0; i < a.prob.size(); ++i) s += std::abs(a.prob[i] - b.prob[i]);
    return 0.5 * s;
}

double subdominant_ratio(const Eigen::MatrixXd& pa) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(pa, false);
    std::vector<double> mags;
    for (int i = 0; i < pa.rows(); ++i) mags.push_back(std::abs(es.eigenvalues()(i)));
    std::sort(mags.begin(), mags.end(), std::greater<>());
    if (mags.size() < 2 || mags[0] == 0) return 0;
    return mags[1] / mags[0];
}

bool rows_sum_to_one(const Eigen::MatrixXd& p, double tol) {
    for (int i = 0; i < p.rows(); ++i)
        if (std::abs(p.row(i).sum() - 1.0) > tol) return false;
    return true;
}

Eigen::MatrixXd random_positive_chain(int n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    Eigen::MatrixXd p(n, n);
    for (int i = 0; i < n; ++i) {
        double row = 0;
        for (int j = 0; j < n; ++j) {
            p(i, j) = u(rng);
            row += p(i, j);
        }
        p.row(i) /= row;
    }
    return p;
}

}  // namespace polydiff
