#include "polydiff/matrix_bm.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

namespace polydiff {

namespace {

// Antisymmetric basis E_{ij} = e_i e_j^T - e_j e_i^T, i < j. With steps
// exp(sqrt(2 dt) sum xi E_{ij}) the generator is the SO(d) Casimir table
// L(m_ij) = -(d-1) m_ij, Gamma(m_kl, m_qp) = delta_kq delta_lp - m_kp m_ql.
Eigen::MatrixXd so_increment(int d, std::mt19937_64& rng, double dt) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d, d);
    const double s = std::sqrt(2.0 * dt);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            double x = s * normal(rng);
            a(i, j) = x;
            a(j, i) = -x;
        }
    return a.exp();
}

// su(3) basis i*H_a with H_a the Gell-Mann matrices over sqrt(2)
// (orthonormal for tr(H_a H_b) = delta_ab). Steps exp(sqrt(8 dt) sum xi_a
// i H_a) realize the doubled Casimir table L(z_kl) = -(32/3) z_kl.
const std::vector<Eigen::Matrix3cd>& su3_basis() {
    static const std::vector<Eigen::Matrix3cd> basis = [] {
        using C = std::complex<double>;
        const C I(0, 1);
        std::vector<Eigen::Matrix3cd> h(8, Eigen::Matrix3cd::Zero());
        h[0](0, 1) = 1; h[0](1, 0) = 1;
        h[1](0, 1) = -I; h[1](1, 0) = I;
        h[2](0, 0) = 1; h[2](1, 1) = -1;
        h[3](0, 2) = 1; h[3](2, 0) = 1;
        h[4](0, 2) = -I; h[4](2, 0) = I;
        h[5](1, 2) = 1; h[5](2, 1) = 1;
        h[6](1, 2) = -I; h[6](2, 1) = I;
        double r3 = 1.0 / std::sqrt(3.0);
        h[7](0, 0) = r3; h[7](1, 1) = r3; h[7](2, 2) = -2 * r3;
        std::vector<Eigen::Matrix3cd> t;
        for (auto& m : h) t.push_back(I / std::sqrt(2.0) * m);
        return t;
    }();
    return basis;
}

Eigen::Matrix3cd su3_increment(std::mt19937_64& rng, double dt) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::Matrix3cd a = Eigen::Matrix3cd::Zero();
    const double s = std::sqrt(8.0 * dt);
    for (const auto& t : su3_basis()) a += s * normal(rng) * t;
    return a.exp();
}

Eigen::MatrixXd polar_orthogonal(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().transpose();
}

Eigen::MatrixXcd polar_special_unitary(const Eigen::MatrixXcd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::MatrixXcd u = svd.matrixU() * svd.matrixV().adjoint();
    std::complex<double> det = u.determinant();
    u /= std::pow(det, 1.0 / 3.0);
    return u;
}

}  // namespace

MatrixEnsemble matrix_brownian(MatrixKind kind, int d, const SimConfig& cfg,
                               const std::optional<Eigen::MatrixXcd>& start) {
    if (kind == MatrixKind::SU3 && d != 3)
        throw std::invalid_argument("matrix_brownian: SU kind supported at d = 3");
    if (d < 1) throw std::invalid_argument("matrix_brownian: d >= 1");
    if (cfg.n_paths < 1 || !(cfg.dt > 0) || cfg.t_final < 0)
        throw std::invalid_argument("matrix_brownian: bad config");

    Eigen::MatrixXcd x0 = start.value_or(Eigen::MatrixXcd::Identity(d, d));
    if (x0.rows() != d || x0.cols() != d)
        throw std::invalid_argument("matrix_brownian: start shape mismatch");

    MatrixEnsemble out;
    out.kind = kind;
    out.d = d;
    out.time = cfg.t_final;
    out.seed = cfg.seed;
    out.mats.reserve(cfg.n_paths);

    for (int path = 0; path < cfg.n_paths; ++path) {
        std::mt19937_64 rng(path_seed(cfg.seed, static_cast<std::uint64_t>(path)));
        std::normal_distribution<double> normal(0.0, 1.0);

        switch (kind) {
            case MatrixKind::SOd: {
                Eigen::MatrixXd o = x0.real();
                double t = 0;
                long steps = 0;
                while (t < cfg.t_final - 1e-15) {
                    double hs = std::min(cfg.dt, cfg.t_final - t);
                    o = o * so_increment(d, rng, hs);
                    t += hs;
                    if (++steps % 100 == 0) o = polar_orthogonal(o);
                }
                out.mats.emplace_back(o.cast<std::complex<double>>());
                break;
            }
            case MatrixKind::SU3: {
                Eigen::Matrix3cd g = x0;
                double t = 0;
                long steps = 0;
                while (t < cfg.t_final - 1e-15) {
                    double hs = std::min(cfg.dt, cfg.t_final - t);
                    g = g * su3_increment(rng, hs);
                    t += hs;
                    if (++steps % 100 == 0) g = polar_special_unitary(g);
                }
                out.mats.emplace_back(g);
                break;
            }
            case MatrixKind::Hermitian: {
                // Exact Gaussian increments: E z_kk(t)^2 = 2t,
                // E |z_kl(t)|^2 = 2t for k != l.
                Eigen::MatrixXcd h = x0;
                const double t = cfg.t_final;
                for (int i = 0; i < d; ++i) {
                    h(i, i) += std::sqrt(2.0 * t) * normal(rng);
                    for (int j = i + 1; j < d; ++j) {
                        std::complex<double> z(std::sqrt(t) * normal(rng),
                                               std::sqrt(t) * normal(rng));
                        h(i, j) += z;
                        h(j, i) += std::conj(z);
                    }
                }
                out.mats.emplace_back(h);
                break;
            }
            case MatrixKind::Symmetric: {
                Eigen::MatrixXcd s = x0;
                const double t = cfg.t_final;
                for (int i = 0; i < d; ++i) {
                    s(i, i) += std::sqrt(2.0 * t) * normal(rng);
                    for (int j = i + 1; j < d; ++j) {
                        double z = std::sqrt(t) * normal(rng);
                        s(i, j) += z;
                        s(j, i) += z;
                    }
                }
                out.mats.emplace_back(s);
                break;
            }
        }
    }
    return out;
}

EnsembleSample spectral_map(const MatrixEnsemble& ens, SpectralMapKind map, int p, int q) {
    const int d = ens.d;
    const int n = static_cast<int>(ens.mats.size());
    EnsembleSample out;
    out.time = ens.time;
    out.seed = ens.seed;

    switch (map) {
        case SpectralMapKind::CharpolyCoeffs: {
            out.label = "charpoly coefficients";
            out.points.resize(n, d);
            for (int i = 0; i < n; ++i) {
                Eigen::VectorXcd lam;
                if (ens.kind == MatrixKind::Hermitian || ens.kind == MatrixKind::Symmetric) {
                    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(ens.mats[i]);
                    lam = es.eigenvalues().cast<std::complex<double>>();
                } else {
                    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(ens.mats[i], false);
                    lam = es.eigenvalues();
                }
                // prod (X - lam_k), expanded low to high.
                std::vector<std::complex<double>> c{1.0};
                for (int k = 0; k < d; ++k) {
                    std::vector<std::complex<double>> nx(c.size() + 1, 0.0);
                    for (size_t m = 0; m < c.size(); ++m) {
                        nx[m + 1] += c[m];
                        nx[m] -= lam(k) * c[m];
                    }
                    c = std::move(nx);
                }
                for (int k = 0; k < d; ++k) out.points(i, k) = c[k].real();
            }
            break;
        }
        case SpectralMapKind::SpectrumSorted: {
            if (ens.kind != MatrixKind::Hermitian && ens.kind != MatrixKind::Symmetric)
                throw std::invalid_argument("spectral_map: sorted spectrum needs a self-adjoint kind");
            out.label = "sorted spectrum";
            out.points.resize(n, d);
            for (int i = 0; i < n; ++i) {
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(ens.mats[i]);
                out.points.row(i) = es.eigenvalues().transpose();
            }
            break;
        }
        case SpectralMapKind::TraceSu3: {
            if (ens.kind != MatrixKind::SU3)
                throw std::invalid_argument("spectral_map: trace map is for SU3");
            out.label = "su3 normalized trace";
            out.points.resize(n, 2);
            for (int i = 0; i < n; ++i) {
                std::complex<double> z = ens.mats[i].trace() / 3.0;
                out.points(i, 0) = z.real();
                out.points(i, 1) = z.imag();
            }
            break;
        }
        case SpectralMapKind::FirstColumnBlock: {
            if (ens.kind != MatrixKind::SOd)
                throw std::invalid_argument("spectral_map: block extraction is for SOd");
            if (p < 1 || q < 1 || p > d || q > d)
                throw std::invalid_argument("spectral_map: bad block shape");
            out.label = "extracted block";
            out.points.resize(n, p * q);
            for (int i = 0; i < n; ++i)
                for (int a = 0; a < p; ++a)
                    for (int b = 0; b < q; ++b)
                        out.points(i, a * q + b) = ens.mats[i](a, b).real();
            break;
        }
    }
    return out;
}

double group_defect(const MatrixEnsemble& ens) {
    double worst = 0;
    for (const auto& m : ens.mats) {
        Eigen::MatrixXcd r = m * m.adjoint() - Eigen::MatrixXcd::Identity(ens.d, ens.d);
        worst = std::max(worst, r.cwiseAbs().maxCoeff());
    }
    return worst;
}

}  // namespace polydiff
