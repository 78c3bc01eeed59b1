#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "polydiff/model.hpp"

namespace polydiff {

using ParamMap = std::map<std::string, Rat>;

// One registered model family: constructor plus its documented h-transform
// dual and ground-state eigenvalue kappa (L(h) = kappa h) as functions of
// the parameters.
struct CatalogEntry {
    std::string name;
    std::vector<std::pair<std::string, Rat>> default_params;
    std::function<DiffusionModel(const ParamMap&)> build;
    std::function<ParamMap(const ParamMap&)> expected_dual;       // null if no h-transform
    std::function<Rat(const ParamMap&)> expected_kappa;           // null if no h-transform
    bool in_identity_suite = true;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_model(const std::string& name);

// Builds by name with defaults filled in; throws on unknown names.
DiffusionModel build_model(const std::string& name, const ParamMap& params = {});
ParamMap fill_defaults(const CatalogEntry& entry, const ParamMap& params);

Rat param(const ParamMap& p, const std::string& key);
int int_param(const ParamMap& p, const std::string& key);

// Gamma(a_i, a_j) of the symmetric-function coordinates, extracted exactly
// from the bivariate identity Gamma(P(X),P(Y)) = (P'(X)P(Y)-P'(Y)P(X))/(Y-X)
// for monic P of degree d. Ring: a_0..a_{d-1}.
PolyMat gamma_weyl_from_bivariate(int d);

// Discriminant of X^d + a_{d-1}X^{d-1} + ... + a_0 in the a-ring.
Poly weyl_discriminant(int d);

// Residual of sum_i X^i Gamma(a_i, disc) + P''(X) disc over the (a, X)
// ring; the zero polynomial certifies Gamma(P(X), log disc) = -P''(X).
Poly discrim_gamma_identity_residual(int d);

// SU(3) Casimir on the nine entries and their conjugates as a formal
// 18-variable model. Normalization is twice the bare basis table so that
// the image on the normalized trace is exactly (8/3) x deltoid(4).
DiffusionModel su3_casimir_model();

struct Su3TraceReport {
    bool ok = true;
    std::vector<std::string> failures;
    Poly res_gamma_zz, res_gamma_zzb, res_lz;
};

// Verifies Gamma(Z,Z), Gamma(Z,Zb), L(Z) for Z = trace/3 against
// (8/3) x deltoid(4), reduced to eigenvalue variables on the unit-determinant
// torus (zb substituted via z1 z2 z3 = 1).
Su3TraceReport su3_trace_image_check();

// Ambient-coordinate sphere Laplacian table on S^d (d+1 coordinates);
// source model for image certificates.
DiffusionModel sphere_ambient_model(int d);

}  // namespace polydiff
