#pragma once

#include <string>
#include <vector>

#include "polydiff/poly_matrix.hpp"
#include "polydiff/rational.hpp"

namespace polydiff {

// A coordinate of a model. Complex models carry conjugate pairs (Z, Zb) as
// two formal variables pointing at each other; real coordinates have
// conj_partner = -1.
struct ModelVariable {
    std::string name;
    int conj_partner = -1;
};

// One boundary polynomial P with its measure exponent: the reversible
// density carries a factor P^exponent. P is chosen positive on the domain.
struct BoundaryFactor {
    Poly poly;
    Rat exponent;
};

// Domain descriptor: polynomials required positive, plus one interior
// sample point (complex entries for conjugate-pair coordinates).
struct DomainSpec {
    std::vector<Poly> positive;
    std::vector<GaussRat> interior;
};

// A diffusion operator L = sum g^{ij} d2_{ij} + sum b^i d_i together with
// its reversible-measure data. gamma(i,j) = Gamma(x_i,x_j), drift[i] =
// L(x_i). The measure density is prod_r P_r^{alpha_r} * exp(log_tilt);
// log_tilt is the zero polynomial for purely polynomial measures and houses
// e.g. the Gaussian factor of Laguerre/Ornstein-Uhlenbeck models.
struct DiffusionModel {
    std::vector<ModelVariable> vars;
    PolyMat gamma;
    std::vector<Poly> drift;
    std::vector<BoundaryFactor> boundary;
    Poly log_tilt;
    DomainSpec domain;
    std::string label;

    int nvars() const { return static_cast<int>(vars.size()); }
    bool has_conj_pairs() const {
        for (const auto& v : vars)
            if (v.conj_partner >= 0) return true;
        return false;
    }
    bool has_tilt() const { return !log_tilt.is_zero(); }
    std::vector<std::string> var_names() const {
        std::vector<std::string> n;
        n.reserve(vars.size());
        for (const auto& v : vars) n.push_back(v.name);
        return n;
    }
};

// Structural equality of the operator data (gamma, drift, boundary, tilt,
// conjugation pattern); labels and variable names are ignored.
bool same_structure(const DiffusionModel& a, const DiffusionModel& b);

// Throws std::invalid_argument if shapes are inconsistent (gamma not square
// of the right size, asymmetric, wrong drift length, foreign rings).
void validate_shape(const DiffusionModel& m);

}  // namespace polydiff
