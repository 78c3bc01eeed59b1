#include "polydiff/poly.hpp"

#include <stdexcept>

namespace polydiff {

namespace {

void require_same_ring(const Poly& a, const Poly& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("poly: variable-count mismatch");
}

}  // namespace

Poly Poly::constant(int nvars, GaussRat c) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Expo(nvars, 0), std::move(c));
    return p;
}

Poly Poly::variable(int nvars, int var) {
    if (var < 0 || var >= nvars) throw std::out_of_range("poly: variable index");
    Expo e(nvars, 0);
    e[var] = 1;
    return monomial(nvars, std::move(e), GaussRat(1));
}

Poly Poly::monomial(int nvars, Expo e, GaussRat c) {
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("poly: exponent length mismatch");
    Poly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

GaussRat Poly::constant_value() const {
    if (terms_.empty()) return GaussRat(0);
    if (!is_constant()) throw std::logic_error("poly: not a constant");
    return terms_.begin()->second;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    unsigned d = 0;
    for (unsigned e : terms_.begin()->first) d += e;  // leading term has max degree
    return static_cast<int>(d);
}

int Poly::degree_in(int var) const {
    if (var < 0 || var >= nvars_) throw std::out_of_range("poly: variable index");
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

GaussRat Poly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussRat(0) : it->second;
}

void Poly::add_term(const Expo& e, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_ring(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_ring(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_ring(a, b);
    Poly out(a.nvars());
    Expo e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int v = 0; v < a.nvars(); ++v) e[v] = ea[v] + eb[v];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const GaussRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly partial(const Poly& p, int var) {
    if (var < 0 || var >= p.nvars()) throw std::out_of_range("partial: variable index");
    Poly out(p.nvars());
    Expo e;
    for (const auto& [ep, c] : p.terms()) {
        if (ep[var] == 0) continue;
        e = ep;
        GaussRat k = c * GaussRat(Rat(static_cast<long>(e[var])));
        e[var] -= 1;
        out.add_term(e, k);
    }
    return out;
}

GaussRat eval(const Poly& p, std::span<const GaussRat> point) {
    if (static_cast<int>(point.size()) != p.nvars())
        throw std::invalid_argument("eval: point length mismatch");
    GaussRat acc(0);
    for (const auto& [e, c] : p.terms()) {
        GaussRat t = c;
        for (int v = 0; v < p.nvars(); ++v)
            for (unsigned k = 0; k < e[v]; ++k) t *= point[v];
        acc += t;
    }
    return acc;
}

std::complex<double> eval_c(const Poly& p, std::span<const std::complex<double>> point) {
    if (static_cast<int>(point.size()) != p.nvars())
        throw std::invalid_argument("eval_c: point length mismatch");
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : p.terms()) {
        std::complex<double> t = to_complex(c);
        for (int v = 0; v < p.nvars(); ++v)
            for (unsigned k = 0; k < e[v]; ++k) t *= point[v];
        acc += t;
    }
    return acc;
}

Poly subst(const Poly& p, std::span<const Poly> images) {
    if (static_cast<int>(images.size()) != p.nvars())
        throw std::invalid_argument("subst: image count mismatch");
    int out_vars = images.empty() ? 0 : images[0].nvars();
    for (const Poly& q : images)
        if (q.nvars() != out_vars) throw std::invalid_argument("subst: mixed image rings");

    // Power tables per variable, built lazily up to the needed exponent.
    std::vector<std::vector<Poly>> pw(p.nvars());
    auto power = [&](int v, unsigned k) -> const Poly& {
        auto& tab = pw[v];
        if (tab.empty()) tab.push_back(Poly::constant(out_vars, GaussRat(1)));
        while (tab.size() <= k) tab.push_back(tab.back() * images[v]);
        return tab[k];
    };

    Poly acc(out_vars);
    for (const auto& [e, c] : p.terms()) {
        Poly t = Poly::constant(out_vars, c);
        for (int v = 0; v < p.nvars(); ++v)
            if (e[v] > 0) t *= power(v, e[v]);
        acc += t;
    }
    return acc;
}

std::optional<Poly> divexact(const Poly& num, const Poly& den) {
    require_same_ring(num, den);
    if (den.is_zero()) throw std::domain_error("divexact: zero divisor");

    const auto& lt_den = *den.terms().begin();
    Poly q(num.nvars());
    Poly r = num;
    Expo e(num.nvars());
    while (!r.is_zero()) {
        const auto& lt_r = *r.terms().begin();
        for (int v = 0; v < num.nvars(); ++v) {
            if (lt_r.first[v] < lt_den.first[v]) return std::nullopt;
            e[v] = lt_r.first[v] - lt_den.first[v];
        }
        Poly t = Poly::monomial(num.nvars(), e, lt_r.second / lt_den.second);
        q += t;
        r -= t * den;
    }
    return q;
}

Poly conj_coeffs(const Poly& p) {
    Poly out(p.nvars());
    for (const auto& [e, c] : p.terms()) out.add_term(e, c.conj());
    return out;
}

Poly map_vars(const Poly& p, std::span<const int> to, int new_nvars) {
    if (static_cast<int>(to.size()) != p.nvars())
        throw std::invalid_argument("map_vars: mapping length mismatch");
    Poly out(new_nvars);
    Expo e(new_nvars);
    for (const auto& [ep, c] : p.terms()) {
        std::fill(e.begin(), e.end(), 0u);
        for (int v = 0; v < p.nvars(); ++v) {
            if (ep[v] == 0) continue;
            if (to[v] < 0 || to[v] >= new_nvars)
                throw std::out_of_range("map_vars: target index");
            e[to[v]] += ep[v];
        }
        out.add_term(e, c);
    }
    return out;
}

}  // namespace polydiff
