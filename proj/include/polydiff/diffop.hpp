#pragma once

#include <span>
#include <string>
#include <vector>

#include "polydiff/model.hpp"

namespace polydiff {

// Carre du champ: Gamma(f,g) = sum_{ij} g^{ij} d_i f d_j g.
Poly gamma_apply(const DiffusionModel& m, const Poly& f, const Poly& g);

// Generator: L(f) = sum_{ij} g^{ij} d2_{ij} f + sum_i b^i d_i f.
Poly l_apply(const DiffusionModel& m, const Poly& f);

// L(fg) - f L(g) - g L(f) - 2 Gamma(f,g); identically zero for any
// correctly assembled diffusion model.
Poly product_rule_residual(const DiffusionModel& m, const Poly& f, const Poly& g);

struct BoundaryViolation {
    int var;
    int factor;
    std::string reason;
};

// The boundary equation data: degree-<=1 quotients L_{i,r} =
// Gamma(x_i, P_r)/P_r and the constants c_r = sum_i d_i L_{i,r}.
struct BoundaryData {
    PolyMat l;           // nvars x nfactors
    std::vector<Rat> c;  // per factor
};

struct BoundaryResult {
    bool ok = false;
    BoundaryData data;
    std::vector<BoundaryViolation> violations;
};

BoundaryResult boundary_data(const PolyMat& gamma, std::span<const BoundaryFactor> boundary);
BoundaryResult check_boundary_eq(const DiffusionModel& m);

// Drift of the symmetric operator with reversible density
// prod P_r^{alpha_r} * exp(tilt): b_i = sum_j d_j g^{ij} + sum_r alpha_r
// L_{i,r} + Gamma(x_i, tilt). Throws BoundaryError if the boundary
// equation fails.
std::vector<Poly> drift_from_measure(const PolyMat& gamma,
                                     std::span<const BoundaryFactor> boundary,
                                     const Poly& tilt);

struct BoundaryError : std::runtime_error {
    explicit BoundaryError(const std::string& what, std::vector<BoundaryViolation> v = {})
        : std::runtime_error(what), violations(std::move(v)) {}
    std::vector<BoundaryViolation> violations;
};

// Per-coordinate residual of the drift/measure consistency identity with
// all denominators cleared: (b_i - sum_j d_j g^{ij} - Gamma(x_i,W)) * prod_r P_r
// - sum_r alpha_r Gamma(x_i,P_r) * prod_{s!=r} P_s. All zero iff the model's
// drift matches its declared measure.
std::vector<Poly> density_residual(const DiffusionModel& m);

// h-transform by h = prod P_r^{-alpha_r}: same Gamma, drift
// b_i - 2 sum_r alpha_r L_{i,r}, exponents negated. kappa is the signed
// ground-state eigenvalue, L(h) = kappa * h, kappa = -sum alpha_r (c_r + t_r)
// with t_r = Gamma(tilt, P_r)/P_r (each t_r must be an exact constant).
struct HTransformResult {
    DiffusionModel model;
    Rat kappa;
    std::vector<BoundaryFactor> h_factors;  // (P_r, -alpha_r)
    Rat lambda() const { return -kappa; }
};

HTransformResult h_transform(const DiffusionModel& m);

// Certifies L0(log P_r) = c_r after clearing denominators, one residual per
// boundary factor: sum_ij g^{ij}(P d2_{ij}P - d_iP d_jP) + sum_i (sum_j d_j g^{ij}) P d_iP
// - c_r P^2. Zero residuals certify the ground-state identity without ever
// materializing log P or h.
std::vector<Poly> ground_state_residual(const DiffusionModel& m);

// For a model whose -alpha_r are all nonnegative integers (so that
// h = prod P_r^{-alpha_r} is a polynomial): given f with
// L_{m'}(f) = -lambda1 f for the transformed model m' = h_transform(m),
// returns the residual of L_m(h f) + (lambda1 + lambda)(h f), lambda =
// -kappa. Throws std::domain_error on non-integer exponent directions and
// std::invalid_argument when f fails its eigenvector precondition.
Poly eigenvector_shift_residual(const DiffusionModel& m, const Poly& f, const Rat& lambda1);

struct ImageResidual {
    std::string kind;  // "gamma" or "drift"
    int i;
    int j;  // -1 for drift rows
    Poly residual;
};

struct ImageReport {
    bool ok = true;
    std::vector<ImageResidual> failures;
};

// Verifies Gamma_src(X_i,X_j) = scale * (Ghat_{ij} o X) and
// L_src(X_i) = scale * (Bhat_i o X) as exact identities in the source ring.
ImageReport image_check(const DiffusionModel& src, std::span<const Poly> maps,
                        const DiffusionModel& candidate, const Rat& scale = Rat(1));

// Matrix of L on the monomial basis of total degree <= max_degree, graded
// order (constant first). Column j holds the expansion of L(basis_j); the
// matrix is block triangular by total degree. Throws DegreeEscapeError if L
// raises the degree of any basis monomial.
struct OperatorMatrix {
    std::vector<Expo> basis;
    DenseMat<GaussRat> mat;
    std::vector<std::pair<int, int>> degree_blocks;  // (first index, size) per degree
};

struct DegreeEscapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

OperatorMatrix operator_matrix(const DiffusionModel& m, int max_degree);

// Numeric eigenvalues of one graded diagonal block.
std::vector<std::complex<double>> block_spectrum(const OperatorMatrix& om, int degree);

// Invariant checks an assembled model should satisfy: structural gamma
// symmetry, positivity of every boundary polynomial at the interior point,
// PSD gamma at the interior point (tolerance 1e-9, via the real form for
// conjugate-pair models). Degree bounds (gamma <= 2, drift <= 1) are
// reported as warnings only.
struct SanityReport {
    bool ok = true;
    std::vector<std::string> issues;
    std::vector<std::string> warnings;
};

SanityReport model_sanity(const DiffusionModel& m);

}  // namespace polydiff
