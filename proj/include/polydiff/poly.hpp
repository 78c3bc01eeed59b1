#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "polydiff/gauss_rat.hpp"

namespace polydiff {

// Exponent vector, one entry per variable.
using Expo = std::vector<unsigned>;

// Graded lexicographic, largest first, so map iteration starts at the
// leading term.
struct GrlexGreater {
    bool operator()(const Expo& a, const Expo& b) const {
        unsigned da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

// Sparse multivariate polynomial over exact complex rationals. Values are
// immutable in spirit: every operation returns a fresh polynomial, zero
// coefficients are never stored, and equality is structural.
class Poly {
public:
    using TermMap = std::map<Expo, GaussRat, GrlexGreater>;

    explicit Poly(int nvars = 0) : nvars_(nvars) {}

    static Poly constant(int nvars, GaussRat c);
    static Poly variable(int nvars, int var);
    static Poly monomial(int nvars, Expo e, GaussRat c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of a constant (or zero) polynomial.
    GaussRat constant_value() const;

    // Total degree; -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(int var) const;

    const TermMap& terms() const { return terms_; }
    GaussRat coeff(const Expo& e) const;

    // Accumulates c on the monomial e, dropping the term if it cancels.
    void add_term(const Expo& e, const GaussRat& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const GaussRat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const GaussRat& c) { return a *= c; }
    friend Poly operator*(const GaussRat& c, Poly a) { return a *= c; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    int nvars_;
    TermMap terms_;
};

// Formal partial derivative.
Poly partial(const Poly& p, int var);

// Exact evaluation; point.size() must equal p.nvars().
GaussRat eval(const Poly& p, std::span<const GaussRat> point);

// Floating evaluation for simulation-side checks.
std::complex<double> eval_c(const Poly& p, std::span<const std::complex<double>> point);

// Substitutes images[v] for variable v; all images share one ring.
Poly subst(const Poly& p, std::span<const Poly> images);

// Exact quotient num/den, or nullopt when den does not divide num.
// Throws on a zero divisor.
std::optional<Poly> divexact(const Poly& num, const Poly& den);

// Conjugates every coefficient.
Poly conj_coeffs(const Poly& p);

// Moves variable v of p to slot to[v] of a ring with new_nvars variables.
Poly map_vars(const Poly& p, std::span<const int> to, int new_nvars);

}  // namespace polydiff
