#include "polydiff/sim.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

#include "polydiff/complex_real.hpp"
#include "polydiff/diffop.hpp"

namespace polydiff {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t path_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 1));
}

namespace {

// Double-precision view of a polynomial for the inner stepping loop.
struct CompiledPoly {
    struct Term {
        double c;
        std::vector<unsigned> e;
    };
    std::vector<Term> terms;

    static CompiledPoly from(const Poly& p) {
        if (!is_real_poly(p))
            throw std::invalid_argument("sde_paths: model must be in real coordinates");
        CompiledPoly out;
        for (const auto& [e, c] : p.terms()) out.terms.push_back({to_double(c.re), e});
        return out;
    }

    double operator()(const Eigen::VectorXd& x) const {
        double acc = 0;
        for (const auto& t : terms) {
            double v = t.c;
            for (size_t k = 0; k < t.e.size(); ++k)
                for (unsigned j = 0; j < t.e[k]; ++j) v *= x(static_cast<int>(k));
            acc += v;
        }
        return acc;
    }
};

struct CompiledModel {
    int n;
    std::vector<CompiledPoly> gamma;  // row-major upper triangle incl. diagonal
    std::vector<CompiledPoly> drift;
    std::vector<CompiledPoly> domain;
    bool gamma_constant = true;

    explicit CompiledModel(const DiffusionModel& m) : n(m.nvars()) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                gamma.push_back(CompiledPoly::from(m.gamma(i, j)));
                if (!m.gamma(i, j).is_constant()) gamma_constant = false;
            }
        for (const auto& b : m.drift) drift.push_back(CompiledPoly::from(b));
        for (const auto& f : m.boundary) domain.push_back(CompiledPoly::from(f.poly));
        for (const auto& p : m.domain.positive) {
            bool dup = false;
            for (const auto& f : m.boundary) dup = dup || f.poly == p;
            if (!dup) domain.push_back(CompiledPoly::from(p));
        }
    }

    void eval_gamma(const Eigen::VectorXd& x, Eigen::MatrixXd& g) const {
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                g(i, j) = gamma[k](x);
                g(j, i) = g(i, j);
                ++k;
            }
    }

    bool inside(const Eigen::VectorXd& x) const {
        for (const auto& p : domain)
            if (p(x) < 0) return false;
        return true;
    }
};

// sigma with sigma sigma^T = a, for symmetric PSD a (clamped at zero).
void psd_sqrt(const Eigen::MatrixXd& a, Eigen::MatrixXd& sigma) {
    const int n = static_cast<int>(a.rows());
    if (n == 1) {
        sigma(0, 0) = std::sqrt(std::max(a(0, 0), 0.0));
        return;
    }
    if (n == 2) {
        double det = std::max(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0), 0.0);
        double s = std::sqrt(det);
        double t2 = a(0, 0) + a(1, 1) + 2 * s;
        if (t2 <= 1e-300) {
            sigma.setZero();
            return;
        }
        double t = std::sqrt(t2);
        sigma = a / t;
        sigma(0, 0) += s / t;
        sigma(1, 1) += s / t;
        return;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
    sigma = es.eigenvectors() * lam.cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace

EnsembleSample sde_paths(const DiffusionModel& m, const Eigen::VectorXd& x0,
                         const SimConfig& cfg) {
    if (m.has_conj_pairs())
        throw std::invalid_argument("sde_paths: convert conjugate-pair models with realify first");
    validate_shape(m);
    if (x0.size() != m.nvars()) throw std::invalid_argument("sde_paths: x0 length mismatch");
    if (!(cfg.dt > 0) || cfg.t_final < 0 || cfg.n_paths < 1)
        throw std::invalid_argument("sde_paths: bad config");

    CompiledModel cm(m);
    if (!cm.inside(x0)) throw std::invalid_argument("sde_paths: x0 outside the closed domain");

    EnsembleSample out;
    out.label = m.label;
    out.time = cfg.t_final;
    out.seed = cfg.seed;
    out.points.resize(cfg.n_paths, m.nvars());

    const int n = m.nvars();
    Eigen::MatrixXd g(n, n), sigma(n, n);
    Eigen::MatrixXd sigma_const;
    if (cm.gamma_constant) {
        cm.eval_gamma(x0, g);
        sigma_const.resize(n, n);
        psd_sqrt(2.0 * g, sigma_const);
    }

    Eigen::VectorXd x(n), b(n), xi(n), prop(n);
    for (int path = 0; path < cfg.n_paths; ++path) {
        std::mt19937_64 rng(path_seed(cfg.seed, static_cast<std::uint64_t>(path)));
        std::normal_distribution<double> normal(0.0, 1.0);
        x = x0;
        double t = 0;
        double h = cfg.dt;
        int tries = 0;
        bool absorbed = false;
        while (t < cfg.t_final - 1e-15 && !absorbed) {
            double hs = std::min(h, cfg.t_final - t);
            for (int i = 0; i < n; ++i) b(i) = cm.drift[i](x);
            if (cm.gamma_constant) {
                sigma = sigma_const;
            } else {
                cm.eval_gamma(x, g);
                psd_sqrt(2.0 * g, sigma);
            }
            for (int i = 0; i < n; ++i) xi(i) = normal(rng);
            prop = x + b * hs + std::sqrt(hs) * (sigma * xi);
            if (cm.inside(prop)) {
                x = prop;
                t += hs;
                h = cfg.dt;
                tries = 0;
                continue;
            }
            ++out.rejected_steps;
            switch (cfg.policy) {
                case BoundaryPolicy::RejectStep:
                    if (++tries >= 10) {
                        h = hs / 2;
                        tries = 0;
                    }
                    break;
                case BoundaryPolicy::HalveDt:
                    h = hs / 2;
                    break;
                case BoundaryPolicy::Absorb:
                    absorbed = true;
                    ++out.absorbed_paths;
                    break;
            }
            if (h < cfg.dt * 1e-9)
                throw std::runtime_error("sde_paths: step size collapsed at the boundary");
        }
        out.points.row(path) = x;
    }
    return out;
}

EnsembleSample conditioned_paths(const DiffusionModel& m, const Eigen::VectorXd& x0,
                                 const SimConfig& cfg) {
    HTransformResult ht = h_transform(m);
    DiffusionModel sim_model =
        ht.model.has_conj_pairs() ? realify(ht.model) : ht.model;
    EnsembleSample out = sde_paths(sim_model, x0, cfg);
    out.label = m.label + " conditioned";
    return out;
}

EnsembleSample chamber_conditioned_paths(int d, const Eigen::VectorXd& x0,
                                         const SimConfig& cfg) {
    if (x0.size() != d) throw std::invalid_argument("chamber: x0 length mismatch");
    for (int i = 0; i + 1 < d; ++i)
        if (!(x0(i) < x0(i + 1))) throw std::invalid_argument("chamber: x0 must be ordered");

    EnsembleSample out;
    out.label = "weyl-chamber conditioned";
    out.time = cfg.t_final;
    out.seed = cfg.seed;
    out.points.resize(cfg.n_paths, d);

    const double sq2 = std::sqrt(2.0);
    Eigen::VectorXd x(d), b(d), prop(d);
    for (int path = 0; path < cfg.n_paths; ++path) {
        std::mt19937_64 rng(path_seed(cfg.seed, static_cast<std::uint64_t>(path)));
        std::normal_distribution<double> normal(0.0, 1.0);
        x = x0;
        double t = 0, h = cfg.dt;
        int tries = 0;
        while (t < cfg.t_final - 1e-15) {
            double hs = std::min(h, cfg.t_final - t);
            for (int i = 0; i < d; ++i) {
                double s = 0;
                for (int j = 0; j < d; ++j)
                    if (j != i) s += 1.0 / (x(i) - x(j));
                b(i) = 2.0 * s;
            }
            for (int i = 0; i < d; ++i) prop(i) = x(i) + b(i) * hs + sq2 * std::sqrt(hs) * normal(rng);
            bool ordered = true;
            for (int i = 0; i + 1 < d; ++i) ordered = ordered && prop(i) < prop(i + 1);
            if (ordered) {
                x = prop;
                t += hs;
                h = cfg.dt;
                tries = 0;
            } else {
                ++out.rejected_steps;
                if (++tries >= 10) {
                    h = hs / 2;
                    tries = 0;
                }
                if (h < cfg.dt * 1e-9)
                    throw std::runtime_error("chamber: step size collapsed");
            }
        }
        out.points.row(path) = x;
    }
    return out;
}

EnsembleSample sphere_paths(int m, const Eigen::VectorXd& x0, const SimConfig& cfg) {
    const int n = m + 1;
    if (x0.size() != n) throw std::invalid_argument("sphere_paths: x0 must have m+1 coordinates");
    if (std::abs(x0.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("sphere_paths: x0 must be a unit vector");

    EnsembleSample out;
    out.label = "sphere S^" + std::to_string(m);
    out.time = cfg.t_final;
    out.seed = cfg.seed;
    out.points.resize(cfg.n_paths, n);

    Eigen::VectorXd x(n), xi(n), u(n);
    for (int path = 0; path < cfg.n_paths; ++path) {
        std::mt19937_64 rng(path_seed(cfg.seed, static_cast<std::uint64_t>(path)));
        std::normal_distribution<double> normal(0.0, 1.0);
        x = x0;
        double t = 0;
        while (t < cfg.t_final - 1e-15) {
            double hs = std::min(cfg.dt, cfg.t_final - t);
            for (int i = 0; i < n; ++i) xi(i) = normal(rng);
            u = xi - x.dot(xi) * x;
            x = (x + std::sqrt(2.0 * hs) * u).normalized();
            t += hs;
        }
        out.points.row(path) = x;
    }
    return out;
}

void write_ensemble_csv(const EnsembleSample& s, const std::vector<std::string>& columns,
                        const std::string& path, double dt) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << "# label=" << s.label << " t=" << s.time << " dt=" << dt << " seed=" << s.seed
      << " rejected_steps=" << s.rejected_steps << "\n";
    for (size_t c = 0; c < columns.size(); ++c) f << (c ? "," : "") << columns[c];
    f << "\n";
    f.precision(17);
    for (int i = 0; i < s.points.rows(); ++i) {
        for (int j = 0; j < s.points.cols(); ++j) f << (j ? "," : "") << s.points(i, j);
        f << "\n";
    }
}

}  // namespace polydiff
