#include "polydiff/diffop.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <map>

#include "polydiff/complex_real.hpp"

namespace polydiff {

void validate_shape(const DiffusionModel& m) {
    const int n = m.nvars();
    if (n == 0) throw std::invalid_argument("model: no variables");
    if (m.gamma.rows() != n || m.gamma.cols() != n)
        throw std::invalid_argument("model: gamma shape mismatch");
    if (static_cast<int>(m.drift.size()) != n)
        throw std::invalid_argument("model: drift length mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.gamma(i, j).nvars() != n)
                throw std::invalid_argument("model: gamma entry in foreign ring");
    for (const Poly& b : m.drift)
        if (b.nvars() != n) throw std::invalid_argument("model: drift entry in foreign ring");
    if (m.log_tilt.nvars() != n)
        throw std::invalid_argument("model: tilt in foreign ring");
    for (const auto& f : m.boundary)
        if (f.poly.nvars() != n) throw std::invalid_argument("model: boundary poly in foreign ring");
}

bool same_structure(const DiffusionModel& a, const DiffusionModel& b) {
    if (a.nvars() != b.nvars()) return false;
    for (int i = 0; i < a.nvars(); ++i)
        if (a.vars[i].conj_partner != b.vars[i].conj_partner) return false;
    if (!(a.gamma == b.gamma)) return false;
    if (a.drift != b.drift) return false;
    if (a.log_tilt != b.log_tilt) return false;
    if (a.boundary.size() != b.boundary.size()) return false;
    for (size_t r = 0; r < a.boundary.size(); ++r) {
        if (a.boundary[r].poly != b.boundary[r].poly) return false;
        if (a.boundary[r].exponent != b.boundary[r].exponent) return false;
    }
    return true;
}

namespace {

void require_ring(const DiffusionModel& m, const Poly& f) {
    if (f.nvars() != m.nvars())
        throw std::invalid_argument("diffop: polynomial not over model variables");
}

// Gamma(x_i, q) = sum_j g^{ij} d_j q.
Poly gamma_row(const PolyMat& gamma, int i, const Poly& q) {
    Poly acc(q.nvars());
    for (int j = 0; j < gamma.cols(); ++j) acc += gamma(i, j) * partial(q, j);
    return acc;
}

}  // namespace

Poly gamma_apply(const DiffusionModel& m, const Poly& f, const Poly& g) {
    require_ring(m, f);
    require_ring(m, g);
    const int n = m.nvars();
    Poly acc(n);
    std::vector<Poly> pf(n), pg(n);
    for (int i = 0; i < n; ++i) pf[i] = partial(f, i);
    for (int j = 0; j < n; ++j) pg[j] = partial(g, j);
    for (int i = 0; i < n; ++i) {
        if (pf[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (pg[j].is_zero()) continue;
            acc += m.gamma(i, j) * pf[i] * pg[j];
        }
    }
    return acc;
}

Poly l_apply(const DiffusionModel& m, const Poly& f) {
    require_ring(m, f);
    const int n = m.nvars();
    Poly acc(n);
    for (int i = 0; i < n; ++i) {
        Poly pi = partial(f, i);
        if (pi.is_zero()) continue;
        acc += m.drift[i] * pi;
        for (int j = 0; j < n; ++j) acc += m.gamma(i, j) * partial(pi, j);
    }
    return acc;
}

Poly product_rule_residual(const DiffusionModel& m, const Poly& f, const Poly& g) {
    Poly res = l_apply(m, f * g);
    res -= f * l_apply(m, g);
    res -= g * l_apply(m, f);
    res -= GaussRat(Rat(2)) * gamma_apply(m, f, g);
    return res;
}

BoundaryResult boundary_data(const PolyMat& gamma, std::span<const BoundaryFactor> boundary) {
    BoundaryResult out;
    const int n = gamma.rows();
    const int nf = static_cast<int>(boundary.size());
    if (nf == 0) {
        out.violations.push_back({-1, -1, "boundary list is empty"});
        return out;
    }
    out.data.l = PolyMat(n, nf, Poly(n));
    out.data.c.assign(nf, Rat(0));
    out.ok = true;
    for (int r = 0; r < nf; ++r) {
        const Poly& p = boundary[r].poly;
        GaussRat c_sum(0);
        for (int i = 0; i < n; ++i) {
            Poly num = gamma_row(gamma, i, p);
            auto q = divexact(num, p);
            if (!q) {
                out.ok = false;
                out.violations.push_back({i, r, "Gamma(x_i, P_r) not divisible by P_r"});
                continue;
            }
            if (q->total_degree() > 1) {
                out.ok = false;
                out.violations.push_back({i, r, "quotient degree exceeds 1"});
                continue;
            }
            out.data.l(i, r) = *q;
            c_sum += partial(*q, i).constant_value();
        }
        if (!c_sum.is_real()) {
            out.ok = false;
            out.violations.push_back({-1, r, "c_r is not real"});
        } else {
            out.data.c[r] = c_sum.re;
        }
    }
    return out;
}

BoundaryResult check_boundary_eq(const DiffusionModel& m) {
    validate_shape(m);
    return boundary_data(m.gamma, m.boundary);
}

std::vector<Poly> drift_from_measure(const PolyMat& gamma,
                                     std::span<const BoundaryFactor> boundary,
                                     const Poly& tilt) {
    const int n = gamma.rows();
    BoundaryResult br;
    if (!boundary.empty()) {
        br = boundary_data(gamma, boundary);
        if (!br.ok) throw BoundaryError("drift_from_measure: boundary equation fails", br.violations);
    }
    std::vector<Poly> b(n, Poly(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) b[i] += partial(gamma(i, j), j);
        for (size_t r = 0; r < boundary.size(); ++r)
            b[i] += GaussRat(boundary[r].exponent) * br.data.l(i, static_cast<int>(r));
        if (!tilt.is_zero()) b[i] += gamma_row(gamma, i, tilt);
    }
    return b;
}

std::vector<Poly> density_residual(const DiffusionModel& m) {
    validate_shape(m);
    const int n = m.nvars();
    const int nf = static_cast<int>(m.boundary.size());

    Poly prod_all = Poly::constant(n, GaussRat(1));
    for (const auto& f : m.boundary) prod_all *= f.poly;

    std::vector<Poly> res(n, Poly(n));
    for (int i = 0; i < n; ++i) {
        Poly base = m.drift[i];
        for (int j = 0; j < n; ++j) base -= partial(m.gamma(i, j), j);
        if (m.has_tilt()) base -= gamma_row(m.gamma, i, m.log_tilt);
        res[i] = base * prod_all;
        for (int r = 0; r < nf; ++r) {
            Poly others = Poly::constant(n, GaussRat(1));
            for (int s = 0; s < nf; ++s)
                if (s != r) others *= m.boundary[s].poly;
            res[i] -= GaussRat(m.boundary[r].exponent) *
                      gamma_row(m.gamma, i, m.boundary[r].poly) * others;
        }
    }
    return res;
}

HTransformResult h_transform(const DiffusionModel& m) {
    auto br = check_boundary_eq(m);
    if (!br.ok) throw BoundaryError("h_transform: boundary equation fails", br.violations);

    const int n = m.nvars();
    HTransformResult out;
    out.model = m;
    out.kappa = Rat(0);
    for (size_t r = 0; r < m.boundary.size(); ++r) {
        Rat t(0);
        if (m.has_tilt()) {
            Poly num = gamma_apply(m, m.log_tilt, m.boundary[r].poly);
            auto q = divexact(num, m.boundary[r].poly);
            if (!q || !q->is_constant() || !q->constant_value().is_real())
                throw BoundaryError("h_transform: Gamma(tilt, P_r)/P_r is not a real constant");
            t = q->constant_value().re;
        }
        out.kappa -= m.boundary[r].exponent * (br.data.c[r] + t);

        out.model.boundary[r].exponent = -m.boundary[r].exponent;
        out.h_factors.push_back({m.boundary[r].poly, Rat(-m.boundary[r].exponent)});

        for (int i = 0; i < n; ++i)
            out.model.drift[i] -= GaussRat(Rat(2) * m.boundary[r].exponent) *
                                  br.data.l(i, static_cast<int>(r));
    }
    out.model.label = m.label.empty() ? "h-transform" : m.label + " (h-transform)";
    return out;
}

std::vector<Poly> ground_state_residual(const DiffusionModel& m) {
    auto br = check_boundary_eq(m);
    if (!br.ok) throw BoundaryError("ground_state_residual: boundary equation fails", br.violations);

    const int n = m.nvars();
    std::vector<Poly> out;
    out.reserve(m.boundary.size());
    for (size_t r = 0; r < m.boundary.size(); ++r) {
        const Poly& p = m.boundary[r].poly;
        Poly acc(n);
        for (int i = 0; i < n; ++i) {
            Poly pi = partial(p, i);
            for (int j = 0; j < n; ++j) {
                // g^{ij} (P d2_{ij}P - d_iP d_jP)
                acc += m.gamma(i, j) * (p * partial(pi, j) - pi * partial(p, j));
            }
            Poly div(n);
            for (int j = 0; j < n; ++j) div += partial(m.gamma(i, j), j);
            acc += div * p * pi;
        }
        acc -= GaussRat(br.data.c[r]) * p * p;
        out.push_back(std::move(acc));
    }
    return out;
}

Poly eigenvector_shift_residual(const DiffusionModel& m, const Poly& f, const Rat& lambda1) {
    require_ring(m, f);
    const int n = m.nvars();

    Poly h = Poly::constant(n, GaussRat(1));
    for (const auto& fac : m.boundary) {
        Rat e = -fac.exponent;
        if (denominator(e) != 1 || e < 0)
            throw std::domain_error("eigenvector shift: exponent direction is not a nonnegative integer");
        for (Int k = 0; k < numerator(e); ++k) h *= fac.poly;
    }

    HTransformResult ht = h_transform(m);
    Poly pre = l_apply(ht.model, f) + GaussRat(lambda1) * f;
    if (!pre.is_zero())
        throw std::invalid_argument("eigenvector shift: f is not an eigenvector of the transformed model");

    Rat lambda = ht.lambda();
    Poly hf = h * f;
    return l_apply(m, hf) + GaussRat(lambda1 + lambda) * hf;
}

ImageReport image_check(const DiffusionModel& src, std::span<const Poly> maps,
                        const DiffusionModel& candidate, const Rat& scale) {
    if (static_cast<int>(maps.size()) != candidate.nvars())
        throw std::invalid_argument("image_check: map count != candidate variable count");
    for (const Poly& x : maps) require_ring(src, x);

    ImageReport report;
    const GaussRat s{scale};
    for (int i = 0; i < candidate.nvars(); ++i) {
        for (int j = i; j < candidate.nvars(); ++j) {
            Poly res = gamma_apply(src, maps[i], maps[j]) - s * subst(candidate.gamma(i, j), maps);
            if (!res.is_zero()) {
                report.ok = false;
                report.failures.push_back({"gamma", i, j, std::move(res)});
            }
        }
        Poly res = l_apply(src, maps[i]) - s * subst(candidate.drift[i], maps);
        if (!res.is_zero()) {
            report.ok = false;
            report.failures.push_back({"drift", i, -1, std::move(res)});
        }
    }
    return report;
}

namespace {

void enumerate_expos(int nvars, int max_total, Expo& cur, int var, int used,
                     std::vector<Expo>& out) {
    if (var == nvars) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e + used <= max_total; ++e) {
        cur[var] = static_cast<unsigned>(e);
        enumerate_expos(nvars, max_total, cur, var + 1, used + e, out);
    }
    cur[var] = 0;
}

unsigned expo_degree(const Expo& e) {
    unsigned d = 0;
    for (unsigned k : e) d += k;
    return d;
}

}  // namespace

OperatorMatrix operator_matrix(const DiffusionModel& m, int max_degree) {
    validate_shape(m);
    const int n = m.nvars();

    OperatorMatrix om;
    Expo cur(n, 0);
    enumerate_expos(n, max_degree, cur, 0, 0, om.basis);
    std::sort(om.basis.begin(), om.basis.end(),
              [](const Expo& a, const Expo& b) { return GrlexGreater{}(b, a); });

    std::map<Expo, int> index;
    for (size_t k = 0; k < om.basis.size(); ++k) index[om.basis[k]] = static_cast<int>(k);

    const int dim = static_cast<int>(om.basis.size());
    om.mat = DenseMat<GaussRat>(dim, dim, GaussRat(0));
    for (int j = 0; j < dim; ++j) {
        Poly lf = l_apply(m, Poly::monomial(n, om.basis[j], GaussRat(1)));
        for (const auto& [e, c] : lf.terms()) {
            if (expo_degree(e) > expo_degree(om.basis[j]))
                throw DegreeEscapeError("operator_matrix: L raises total degree on " +
                                        std::string("basis column ") + std::to_string(j));
            om.mat(index.at(e), j) = c;
        }
    }

    int start = 0;
    for (int d = 0; d <= max_degree; ++d) {
        int count = 0;
        while (start + count < dim && expo_degree(om.basis[start + count]) == static_cast<unsigned>(d))
            ++count;
        om.degree_blocks.emplace_back(start, count);
        start += count;
    }
    return om;
}

std::vector<std::complex<double>> block_spectrum(const OperatorMatrix& om, int degree) {
    if (degree < 0 || degree >= static_cast<int>(om.degree_blocks.size()))
        throw std::out_of_range("block_spectrum: degree");
    auto [start, size] = om.degree_blocks[degree];
    Eigen::MatrixXcd b(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) b(i, j) = to_complex(om.mat(start + i, start + j));
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(b, false);
    std::vector<std::complex<double>> ev(es.eigenvalues().data(),
                                         es.eigenvalues().data() + size);
    return ev;
}

SanityReport model_sanity(const DiffusionModel& m) {
    SanityReport rep;
    try {
        validate_shape(m);
    } catch (const std::exception& e) {
        rep.ok = false;
        rep.issues.push_back(e.what());
        return rep;
    }
    const int n = m.nvars();

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(m.gamma(i, j) == m.gamma(j, i))) {
                rep.ok = false;
                rep.issues.push_back("gamma not structurally symmetric at (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
            }

    for (int i = 0; i < n; ++i) {
        int p = m.vars[i].conj_partner;
        if (p >= 0 && (p >= n || m.vars[p].conj_partner != i)) {
            rep.ok = false;
            rep.issues.push_back("conjugate pairing broken at variable " + std::to_string(i));
        }
    }

    for (int i = 0; i < n; ++i) {
        if (m.gamma(i, i).total_degree() > 2)
            rep.warnings.push_back("gamma(" + std::to_string(i) + "," + std::to_string(i) +
                                   ") has degree > 2");
        if (m.drift[i].total_degree() > 1)
            rep.warnings.push_back("drift " + std::to_string(i) + " has degree > 1");
    }

    if (static_cast<int>(m.domain.interior.size()) != n) {
        rep.warnings.push_back("no interior sample point; positivity checks skipped");
        return rep;
    }

    for (size_t r = 0; r < m.boundary.size(); ++r) {
        GaussRat v = eval(m.boundary[r].poly, m.domain.interior);
        if (!v.is_real() || !(v.re > 0)) {
            rep.ok = false;
            rep.issues.push_back("boundary polynomial " + std::to_string(r) +
                                 " not positive at the interior point");
        }
    }
    for (size_t r = 0; r < m.domain.positive.size(); ++r) {
        GaussRat v = eval(m.domain.positive[r], m.domain.interior);
        if (!v.is_real() || !(v.re > 0)) {
            rep.ok = false;
            rep.issues.push_back("domain predicate " + std::to_string(r) +
                                 " not positive at the interior point");
        }
    }

    const DiffusionModel* real_model = &m;
    DiffusionModel converted;
    if (m.has_conj_pairs()) {
        try {
            converted = realify(m);
        } catch (const std::exception& e) {
            rep.ok = false;
            rep.issues.push_back(std::string("realify failed: ") + e.what());
            return rep;
        }
        real_model = &converted;
    }
    Eigen::MatrixXd g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            GaussRat v = eval(real_model->gamma(i, j), real_model->domain.interior);
            g(i, j) = to_double(v.re);
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (g + g.transpose()));
    if (es.eigenvalues().minCoeff() < -1e-9) {
        rep.ok = false;
        rep.issues.push_back("gamma not positive semidefinite at the interior point");
    }
    return rep;
}

}  // namespace polydiff
