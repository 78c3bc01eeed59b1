#include "polydiff/complex_real.hpp"

#include <stdexcept>

namespace polydiff {

bool is_real_poly(const Poly& p) {
    for (const auto& [e, c] : p.terms())
        if (!c.is_real()) return false;
    return true;
}

namespace {

// New coordinates y_m = sum_a C(m,a) x_a, with the inverse substitution
// x_a = S[a](y). Gamma transforms bilinearly, drift linearly, and every
// stored polynomial gets its variables substituted.
DiffusionModel linear_coordinate_change(const DiffusionModel& m,
                                        std::vector<ModelVariable> new_vars,
                                        const DenseMat<GaussRat>& C,
                                        const std::vector<Poly>& S,
                                        bool require_real) {
    const int n = m.nvars();
    DiffusionModel out;
    out.vars = std::move(new_vars);
    out.label = m.label;

    auto convert = [&](const Poly& p) {
        Poly q = subst(p, S);
        if (require_real && !is_real_poly(q))
            throw std::invalid_argument(
                "coordinate change: complex coefficients survive; conjugate symmetry violated");
        return q;
    };

    out.gamma = PolyMat(n, n, Poly(n));
    for (int p = 0; p < n; ++p)
        for (int q = p; q < n; ++q) {
            Poly acc(n);
            for (int a = 0; a < n; ++a) {
                if (C(p, a).is_zero()) continue;
                for (int b = 0; b < n; ++b) {
                    if (C(q, b).is_zero()) continue;
                    acc += C(p, a) * C(q, b) * m.gamma(a, b);
                }
            }
            out.gamma(p, q) = convert(acc);
            out.gamma(q, p) = out.gamma(p, q);
        }

    out.drift.assign(n, Poly(n));
    for (int p = 0; p < n; ++p) {
        Poly acc(n);
        for (int a = 0; a < n; ++a)
            if (!C(p, a).is_zero()) acc += C(p, a) * m.drift[a];
        out.drift[p] = convert(acc);
    }

    for (const auto& f : m.boundary) out.boundary.push_back({convert(f.poly), f.exponent});
    out.log_tilt = convert(m.log_tilt);
    for (const auto& p : m.domain.positive) out.domain.positive.push_back(convert(p));

    if (static_cast<int>(m.domain.interior.size()) == n) {
        out.domain.interior.assign(n, GaussRat(0));
        for (int p = 0; p < n; ++p) {
            GaussRat v(0);
            for (int a = 0; a < n; ++a) v += C(p, a) * m.domain.interior[a];
            if (require_real && !v.is_real())
                throw std::invalid_argument("coordinate change: interior point not conjugate-consistent");
            out.domain.interior[p] = v;
        }
    }
    return out;
}

}  // namespace

DiffusionModel realify(const DiffusionModel& m) {
    validate_shape(m);
    const int n = m.nvars();
    if (!m.has_conj_pairs()) return m;

    std::vector<ModelVariable> new_vars(n);
    DenseMat<GaussRat> C(n, n, GaussRat(0));
    std::vector<Poly> S(n, Poly(n));
    const GaussRat half{Rat(1, 2)};
    const GaussRat ihalf = GaussRat(Rat(0), Rat(1, 2));

    for (int i = 0; i < n; ++i) {
        int j = m.vars[i].conj_partner;
        if (j < 0) {
            new_vars[i] = {m.vars[i].name, -1};
            C(i, i) = GaussRat(1);
            S[i] = Poly::variable(n, i);
        } else if (j > i) {
            if (m.vars[j].conj_partner != i)
                throw std::invalid_argument("realify: broken conjugate pairing");
            new_vars[i] = {m.vars[i].name + "_re", -1};
            new_vars[j] = {m.vars[i].name + "_im", -1};
            // U = (Z + Zb)/2, V = -i(Z - Zb)/2
            C(i, i) = half;
            C(i, j) = half;
            C(j, i) = -ihalf;
            C(j, j) = ihalf;
            // Z = U + iV, Zb = U - iV
            S[i] = Poly::variable(n, i) + GaussRat::i() * Poly::variable(n, j);
            S[j] = Poly::variable(n, i) - GaussRat::i() * Poly::variable(n, j);
        }
    }
    DiffusionModel out = linear_coordinate_change(m, std::move(new_vars), C, S, true);
    return out;
}

DiffusionModel complexify(const DiffusionModel& m,
                          const std::vector<std::pair<int, int>>& uv_pairs) {
    validate_shape(m);
    const int n = m.nvars();
    std::vector<ModelVariable> new_vars(n);
    DenseMat<GaussRat> C(n, n, GaussRat(0));
    std::vector<Poly> S(n, Poly(n));

    std::vector<bool> in_pair(n, false);
    for (auto [u, v] : uv_pairs) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::invalid_argument("complexify: bad index pair");
        in_pair[u] = in_pair[v] = true;
    }
    for (int i = 0; i < n; ++i) {
        if (in_pair[i]) continue;
        new_vars[i] = {m.vars[i].name, -1};
        C(i, i) = GaussRat(1);
        S[i] = Poly::variable(n, i);
    }
    const GaussRat half{Rat(1, 2)};
    const GaussRat ihalf = GaussRat(Rat(0), Rat(1, 2));
    for (auto [u, v] : uv_pairs) {
        std::string base = m.vars[u].name;
        if (base.size() > 3 && base.ends_with("_re")) base = base.substr(0, base.size() - 3);
        new_vars[u] = {base, v};
        new_vars[v] = {base + "b", u};
        // Z = U + iV, Zb = U - iV
        C(u, u) = GaussRat(1);
        C(u, v) = GaussRat::i();
        C(v, u) = GaussRat(1);
        C(v, v) = -GaussRat::i();
        // U = (Z + Zb)/2, V = -i(Z - Zb)/2
        S[u] = half * Poly::variable(n, u) + half * Poly::variable(n, v);
        S[v] = -ihalf * Poly::variable(n, u) + ihalf * Poly::variable(n, v);
    }
    return linear_coordinate_change(m, std::move(new_vars), C, S, false);
}

}  // namespace polydiff
