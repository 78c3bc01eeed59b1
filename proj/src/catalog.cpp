#include "polydiff/catalog.hpp"

#include <stdexcept>

#include "polydiff/diffop.hpp"
#include "polydiff/discriminant.hpp"

namespace polydiff {

Rat param(const ParamMap& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw std::invalid_argument("missing parameter: " + key);
    return it->second;
}

int int_param(const ParamMap& p, const std::string& key) {
    Rat r = param(p, key);
    if (denominator(r) != 1) throw std::invalid_argument("parameter must be an integer: " + key);
    return static_cast<int>(numerator(r).convert_to<long>());
}

ParamMap fill_defaults(const CatalogEntry& entry, const ParamMap& params) {
    ParamMap out = params;
    for (const auto& [k, v] : entry.default_params) out.emplace(k, v);
    return out;
}

namespace {

Poly cnst(int n, const Rat& v) { return Poly::constant(n, GaussRat(v)); }

std::string label_with_params(const std::string& name, const CatalogEntry& e, const ParamMap& p) {
    std::string s = name + "(";
    bool first = true;
    for (const auto& [k, unused] : e.default_params) {
        if (!first) s += ",";
        s += k + "=" + to_string(p.at(k));
        first = false;
    }
    return s + ")";
}

DiffusionModel build_bessel_hat(const ParamMap& p) {
    Rat n = param(p, "n");
    DiffusionModel m;
    m.vars = {{"x", -1}};
    m.gamma = PolyMat(1, 1, Poly(1));
    m.gamma(0, 0) = GaussRat(Rat(2)) * Poly::variable(1, 0);
    m.drift = {cnst(1, n)};
    m.boundary = {{Poly::variable(1, 0), (n - 2) / 2}};
    m.log_tilt = Poly(1);
    m.domain.positive = {Poly::variable(1, 0)};
    m.domain.interior = {GaussRat(1)};
    return m;
}

DiffusionModel build_jacobi(const ParamMap& p) {
    Rat a = param(p, "alpha"), b = param(p, "beta");
    DiffusionModel m;
    m.vars = {{"x", -1}};
    Poly x = Poly::variable(1, 0);
    Poly one = cnst(1, 1);
    m.gamma = PolyMat(1, 1, Poly(1));
    m.gamma(0, 0) = one - x * x;
    m.drift = {cnst(1, -(a + b)) * x + cnst(1, b - a)};
    m.boundary = {{one - x, a - 1}, {one + x, b - 1}};
    m.log_tilt = Poly(1);
    m.domain.positive = {one - x * x};
    m.domain.interior = {GaussRat(0)};
    return m;
}

DiffusionModel build_laguerre(const ParamMap& p) {
    Rat a = param(p, "alpha");
    DiffusionModel m;
    m.vars = {{"x", -1}};
    Poly x = Poly::variable(1, 0);
    m.gamma = PolyMat(1, 1, Poly(1));
    m.gamma(0, 0) = x;
    m.drift = {cnst(1, a) - x};
    m.boundary = {{x, a - 1}};
    m.log_tilt = -x;  // Gamma-measure factor e^{-x}
    m.domain.positive = {x};
    m.domain.interior = {GaussRat(1)};
    return m;
}

DiffusionModel build_ou(const ParamMap& p) {
    int n = int_param(p, "n");
    DiffusionModel m;
    m.gamma = poly_identity(n, n);
    m.log_tilt = Poly(n);
    for (int i = 0; i < n; ++i) {
        m.vars.push_back({"x" + std::to_string(i + 1), -1});
        Poly xi = Poly::variable(n, i);
        m.drift.push_back(-xi);
        m.log_tilt -= GaussRat(Rat(1, 2)) * xi * xi;
        m.domain.interior.push_back(GaussRat(0));
    }
    return m;
}

DiffusionModel build_bm(const ParamMap& p) {
    int n = int_param(p, "n");
    DiffusionModel m;
    m.gamma = PolyMat(n, n, Poly(n));
    for (int i = 0; i < n; ++i) {
        m.vars.push_back({"x" + std::to_string(i + 1), -1});
        m.gamma(i, i) = cnst(n, Rat(1, 2));
        m.drift.push_back(Poly(n));
        m.domain.interior.push_back(GaussRat(0));
    }
    m.log_tilt = Poly(n);
    return m;
}

DiffusionModel build_deltoid(const ParamMap& p) {
    Rat lam = param(p, "lambda");
    DiffusionModel m;
    m.vars = {{"Z", 1}, {"Zb", 0}};
    Poly z = Poly::variable(2, 0), zb = Poly::variable(2, 1);
    Poly one = cnst(2, 1);
    m.gamma = PolyMat(2, 2, Poly(2));
    m.gamma(0, 0) = zb - z * z;
    m.gamma(1, 1) = z - zb * zb;
    m.gamma(0, 1) = GaussRat(Rat(1, 2)) * (one - z * zb);
    m.gamma(1, 0) = m.gamma(0, 1);
    m.drift = {cnst(2, -lam) * z, cnst(2, -lam) * zb};
    Poly d = m.gamma(0, 1) * m.gamma(0, 1) - m.gamma(0, 0) * m.gamma(1, 1);
    m.boundary = {{d, (2 * lam - 5) / 6}};
    m.log_tilt = Poly(2);
    m.domain.positive = {d};
    m.domain.interior = {GaussRat(0), GaussRat(0)};
    return m;
}

DiffusionModel build_ball(const ParamMap& p) {
    int d = int_param(p, "d");
    Rat mm = param(p, "m");
    DiffusionModel m;
    m.gamma = PolyMat(d, d, Poly(d));
    Poly norm2(d);
    for (int i = 0; i < d; ++i) {
        m.vars.push_back({"x" + std::to_string(i + 1), -1});
        Poly xi = Poly::variable(d, i);
        norm2 += xi * xi;
        m.drift.push_back(cnst(d, -mm) * xi);
        for (int j = 0; j < d; ++j) {
            m.gamma(i, j) = -Poly::variable(d, i) * Poly::variable(d, j);
            if (i == j) m.gamma(i, j) += cnst(d, 1);
        }
        m.domain.interior.push_back(GaussRat(0));
    }
    Poly pball = cnst(d, 1) - norm2;
    m.boundary = {{pball, (mm - 1 - d) / 2}};
    m.log_tilt = Poly(d);
    m.domain.positive = {pball};
    return m;
}

DiffusionModel build_matrix_jacobi(const ParamMap& pm) {
    int p = int_param(pm, "p"), q = int_param(pm, "q");
    Rat d = param(pm, "d");
    const int n = p * q;
    auto idx = [q](int a, int b) { return a * q + b; };

    DiffusionModel m;
    m.gamma = PolyMat(n, n, Poly(n));
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < q; ++b) {
            m.vars.push_back({"n" + std::to_string(a + 1) + std::to_string(b + 1), -1});
            m.domain.interior.push_back(GaussRat(0));
        }
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < p; ++c)
                for (int e = 0; e < q; ++e) {
                    Poly g = -Poly::variable(n, idx(a, e)) * Poly::variable(n, idx(c, b));
                    if (a == c && b == e) g += cnst(n, 1);
                    m.gamma(idx(a, b), idx(c, e)) = g;
                }
    for (int v = 0; v < n; ++v) m.drift.push_back(cnst(n, 1 - d) * Poly::variable(n, v));

    // P = det(I_p - N N^T)
    PolyMat s(p, p, Poly(n));
    for (int a = 0; a < p; ++a)
        for (int c = 0; c < p; ++c) {
            Poly e(n);
            for (int k = 0; k < q; ++k)
                e -= Poly::variable(n, idx(a, k)) * Poly::variable(n, idx(c, k));
            if (a == c) e += cnst(n, 1);
            s(a, c) = e;
        }
    Poly pdet = poly_det(s);
    m.boundary = {{pdet, (d - 1 - p - q) / 2}};
    m.log_tilt = Poly(n);
    m.domain.positive = {pdet};
    return m;
}

DiffusionModel build_weyl_dyson(const ParamMap& pm) {
    int d = int_param(pm, "d");
    Rat a = param(pm, "a");
    DiffusionModel m;
    m.gamma = gamma_weyl_from_bivariate(d);
    for (int i = 0; i < d; ++i) m.vars.push_back({"a" + std::to_string(i), -1});
    Poly disc = weyl_discriminant(d);
    m.boundary = {{disc, a}};
    m.log_tilt = Poly(d);
    m.drift = drift_from_measure(m.gamma, m.boundary, m.log_tilt);
    m.domain.positive = {disc};

    // Interior point: coefficients of prod_i (X - r_i) with distinct rational
    // roots r_i = i - (d-1)/2.
    std::vector<Rat> coeffs{Rat(1)};
    for (int i = 0; i < d; ++i) {
        Rat root = Rat(i) - Rat(d - 1, 2);
        std::vector<Rat> next(coeffs.size() + 1, Rat(0));
        for (size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] += coeffs[k];
            next[k] -= root * coeffs[k];
        }
        coeffs = std::move(next);
    }
    for (int i = 0; i < d; ++i) m.domain.interior.push_back(GaussRat(coeffs[i]));
    return m;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;

        v.push_back({"bessel_hat",
                     {{"n", Rat(1)}},
                     build_bessel_hat,
                     [](const ParamMap& p) { return ParamMap{{"n", 4 - param(p, "n")}}; },
                     [](const ParamMap&) { return Rat(0); },
                     true});

        v.push_back({"jacobi",
                     {{"alpha", Rat(1, 2)}, {"beta", Rat(1, 2)}},
                     build_jacobi,
                     [](const ParamMap& p) {
                         return ParamMap{{"alpha", 2 - param(p, "alpha")},
                                         {"beta", 2 - param(p, "beta")}};
                     },
                     [](const ParamMap& p) { return param(p, "alpha") + param(p, "beta") - 2; },
                     true});

        v.push_back({"laguerre",
                     {{"alpha", Rat(1, 2)}},
                     build_laguerre,
                     [](const ParamMap& p) { return ParamMap{{"alpha", 2 - param(p, "alpha")}}; },
                     [](const ParamMap& p) { return param(p, "alpha") - 1; },
                     true});

        v.push_back({"ou", {{"n", Rat(1)}}, build_ou, nullptr, nullptr, false});
        v.push_back({"bm", {{"n", Rat(1)}}, build_bm, nullptr, nullptr, false});

        v.push_back({"deltoid",
                     {{"lambda", Rat(1)}},
                     build_deltoid,
                     [](const ParamMap& p) { return ParamMap{{"lambda", 5 - param(p, "lambda")}}; },
                     [](const ParamMap& p) { return 2 * param(p, "lambda") - 5; },
                     true});

        v.push_back({"ball",
                     {{"d", Rat(1)}, {"m", Rat(1)}},
                     build_ball,
                     [](const ParamMap& p) {
                         return ParamMap{{"d", param(p, "d")},
                                         {"m", 2 * param(p, "d") + 2 - param(p, "m")}};
                     },
                     [](const ParamMap& p) {
                         Rat d = param(p, "d");
                         return d * (param(p, "m") - d - 1);
                     },
                     true});

        v.push_back({"matrix_jacobi",
                     {{"p", Rat(1)}, {"q", Rat(1)}, {"d", Rat(4)}},
                     build_matrix_jacobi,
                     [](const ParamMap& p) {
                         return ParamMap{{"p", param(p, "p")},
                                         {"q", param(p, "q")},
                                         {"d", 2 * (param(p, "p") + param(p, "q")) + 2 - param(p, "d")}};
                     },
                     [](const ParamMap& p) {
                         Rat pq = param(p, "p") * param(p, "q");
                         return pq * (param(p, "d") - 1 - param(p, "p") - param(p, "q"));
                     },
                     true});

        v.push_back({"weyl_dyson",
                     {{"d", Rat(2)}, {"a", Rat(-1, 2)}},
                     build_weyl_dyson,
                     [](const ParamMap& p) {
                         return ParamMap{{"d", param(p, "d")}, {"a", -param(p, "a")}};
                     },
                     [](const ParamMap&) { return Rat(0); },
                     true});

        return v;
    }();
    return entries;
}

const CatalogEntry* find_model(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

DiffusionModel build_model(const std::string& name, const ParamMap& params) {
    const CatalogEntry* e = find_model(name);
    if (!e) throw std::invalid_argument("unknown model: " + name);
    ParamMap full = fill_defaults(*e, params);
    DiffusionModel m = e->build(full);
    m.label = label_with_params(name, *e, full);
    validate_shape(m);
    return m;
}

PolyMat gamma_weyl_from_bivariate(int d) {
    if (d < 1) throw std::invalid_argument("gamma_weyl_from_bivariate: d >= 1");
    // Ring: a_0..a_{d-1}, X (slot d), Y (slot d+1).
    const int nv = d + 2;
    const int X = d, Y = d + 1;

    auto monic = [&](int var) {
        Expo e(nv, 0);
        e[var] = static_cast<unsigned>(d);
        Poly p = Poly::monomial(nv, e, GaussRat(1));
        for (int i = 0; i < d; ++i) {
            Expo t(nv, 0);
            t[i] = 1;
            t[var] = static_cast<unsigned>(i);
            p += Poly::monomial(nv, t, GaussRat(1));
        }
        return p;
    };
    Poly px = monic(X), py = monic(Y);
    Poly num = partial(px, X) * py - partial(py, Y) * px;
    Poly den = Poly::variable(nv, Y) - Poly::variable(nv, X);
    auto quot = divexact(num, den);
    if (!quot) throw std::logic_error("gamma_weyl_from_bivariate: numerator not divisible by Y-X");

    PolyMat g(d, d, Poly(d));
    std::vector<int> proj(nv, 0);
    for (int i = 0; i < d; ++i) proj[i] = i;
    for (const auto& [e, c] : quot->terms()) {
        int i = static_cast<int>(e[X]), j = static_cast<int>(e[Y]);
        if (i >= d || j >= d) throw std::logic_error("gamma_weyl_from_bivariate: stray degree");
        Expo ea(e.begin(), e.begin() + d);
        Expo full(d, 0);
        for (int k = 0; k < d; ++k) full[k] = ea[k];
        g(i, j).add_term(full, c);
    }
    return g;
}

Poly weyl_discriminant(int d) {
    std::vector<Poly> coeffs;
    coeffs.reserve(d);
    for (int i = 0; i < d; ++i) coeffs.push_back(Poly::variable(d, i));
    return discriminant_sylvester(coeffs, d);
}

Poly discrim_gamma_identity_residual(int d) {
    if (d < 2) throw std::invalid_argument("discrim_gamma_identity_residual: d >= 2");
    PolyMat g = gamma_weyl_from_bivariate(d);
    Poly disc = weyl_discriminant(d);

    // Lift a-ring (d vars) into (a, X) ring (d+1 vars).
    const int nv = d + 1, X = d;
    std::vector<int> lift_map(d);
    for (int i = 0; i < d; ++i) lift_map[i] = i;
    auto lift = [&](const Poly& p) { return map_vars(p, lift_map, nv); };

    Poly acc(nv);
    for (int i = 0; i < d; ++i) {
        Poly gi(d);
        for (int j = 0; j < d; ++j) gi += g(i, j) * partial(disc, j);
        Expo e(nv, 0);
        e[X] = static_cast<unsigned>(i);
        acc += Poly::monomial(nv, e, GaussRat(1)) * lift(gi);
    }

    Expo ex(nv, 0);
    ex[X] = static_cast<unsigned>(d);
    Poly px = Poly::monomial(nv, ex, GaussRat(1));
    for (int i = 0; i < d; ++i) {
        Expo t(nv, 0);
        t[i] = 1;
        t[X] = static_cast<unsigned>(i);
        px += Poly::monomial(nv, t, GaussRat(1));
    }
    Poly pxx = partial(partial(px, X), X);
    acc += pxx * lift(disc);
    return acc;
}

DiffusionModel su3_casimir_model() {
    const int n = 18;  // z_kl then zb_kl, row-major 3x3
    auto zi = [](int k, int l) { return 3 * k + l; };
    auto zbi = [](int k, int l) { return 9 + 3 * k + l; };

    DiffusionModel m;
    m.label = "su3-casimir";
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
            m.vars.push_back({"z" + std::to_string(k + 1) + std::to_string(l + 1), zbi(k, l)});
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
            m.vars.push_back({"zb" + std::to_string(k + 1) + std::to_string(l + 1), zi(k, l)});

    m.gamma = PolyMat(n, n, Poly(n));
    const GaussRat four{Rat(4)};
    const GaussRat four_thirds{Rat(4, 3)};
    auto v = [&](int idx) { return Poly::variable(n, idx); };

    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
            for (int r = 0; r < 3; ++r)
                for (int q = 0; q < 3; ++q) {
                    // Gamma(z_kl, z_rq) = -4 z_kq z_rl + (4/3) z_kl z_rq
                    m.gamma(zi(k, l), zi(r, q)) =
                        -four * v(zi(k, q)) * v(zi(r, l)) + four_thirds * v(zi(k, l)) * v(zi(r, q));
                    m.gamma(zbi(k, l), zbi(r, q)) =
                        -four * v(zbi(k, q)) * v(zbi(r, l)) +
                        four_thirds * v(zbi(k, l)) * v(zbi(r, q));
                    // Gamma(z_kl, zb_rq) = 4 (delta_kr delta_lq - (1/3) z_kl zb_rq)
                    Poly g = -four_thirds * v(zi(k, l)) * v(zbi(r, q));
                    if (k == r && l == q) g += Poly::constant(n, four);
                    m.gamma(zi(k, l), zbi(r, q)) = g;
                    m.gamma(zbi(r, q), zi(k, l)) = g;
                }

    const GaussRat ev{Rat(-32, 3)};
    for (int idx = 0; idx < n; ++idx) m.drift.push_back(ev * v(idx));
    m.log_tilt = Poly(n);
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            GaussRat val(k == l ? 1 : 0);
            m.domain.interior.push_back(val);
        }
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            GaussRat val(k == l ? 1 : 0);
            m.domain.interior.push_back(val);
        }
    return m;
}

Su3TraceReport su3_trace_image_check() {
    DiffusionModel su3 = su3_casimir_model();
    const int n = 18;
    auto zi = [](int k, int l) { return 3 * k + l; };
    auto zbi = [](int k, int l) { return 9 + 3 * k + l; };

    const GaussRat third{Rat(1, 3)};
    Poly Z(n), Zb(n);
    for (int k = 0; k < 3; ++k) {
        Z += third * Poly::variable(n, zi(k, k));
        Zb += third * Poly::variable(n, zbi(k, k));
    }

    Poly g_zz = gamma_apply(su3, Z, Z);
    Poly g_zzb = gamma_apply(su3, Z, Zb);
    Poly l_z = l_apply(su3, Z);

    // Diagonal (eigenvalue) substitution on the unit-determinant torus:
    // z_kk -> zeta_k, zb_kk -> product of the other two, off-diagonals -> 0.
    std::vector<Poly> S(n, Poly(3));
    auto zeta = [&](int k) { return Poly::variable(3, k); };
    for (int k = 0; k < 3; ++k) S[zi(k, k)] = zeta(k);
    S[zbi(0, 0)] = zeta(1) * zeta(2);
    S[zbi(1, 1)] = zeta(0) * zeta(2);
    S[zbi(2, 2)] = zeta(0) * zeta(1);

    Poly Zeta = third * (zeta(0) + zeta(1) + zeta(2));
    Poly Zbeta = third * (zeta(0) * zeta(1) + zeta(0) * zeta(2) + zeta(1) * zeta(2));
    std::vector<Poly> img{Zeta, Zbeta};

    DiffusionModel deltoid4 = build_model("deltoid", {{"lambda", Rat(4)}});
    const GaussRat scale{Rat(8, 3)};

    Su3TraceReport rep;
    rep.res_gamma_zz = subst(g_zz, S) - scale * subst(deltoid4.gamma(0, 0), img);
    rep.res_gamma_zzb = subst(g_zzb, S) - scale * subst(deltoid4.gamma(0, 1), img);
    rep.res_lz = subst(l_z, S) - scale * subst(deltoid4.drift[0], img);
    if (!rep.res_gamma_zz.is_zero()) {
        rep.ok = false;
        rep.failures.push_back("Gamma(Z,Z) != (8/3) * deltoid4 Gamma(Z,Z)");
    }
    if (!rep.res_gamma_zzb.is_zero()) {
        rep.ok = false;
        rep.failures.push_back("Gamma(Z,Zb) != (8/3) * deltoid4 Gamma(Z,Zb)");
    }
    if (!rep.res_lz.is_zero()) {
        rep.ok = false;
        rep.failures.push_back("L(Z) != (8/3) * deltoid4 L(Z)");
    }
    return rep;
}

DiffusionModel sphere_ambient_model(int d) {
    const int n = d + 1;
    DiffusionModel m;
    m.label = "sphere(" + std::to_string(d) + ") ambient";
    m.gamma = PolyMat(n, n, Poly(n));
    for (int i = 0; i < n; ++i) {
        m.vars.push_back({"x" + std::to_string(i + 1), -1});
        for (int j = 0; j < n; ++j) {
            m.gamma(i, j) = -Poly::variable(n, i) * Poly::variable(n, j);
            if (i == j) m.gamma(i, j) += Poly::constant(n, GaussRat(1));
        }
        m.drift.push_back(Poly::constant(n, GaussRat(Rat(-d))) * Poly::variable(n, i));
        m.domain.interior.push_back(GaussRat(0));
    }
    m.log_tilt = Poly(n);
    return m;
}

}  // namespace polydiff
