#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "polydiff/matrix_bm.hpp"
#include "polydiff/model.hpp"

namespace polydiff {

struct GenCheckRow {
    std::string monomial;
    double dt = 0;
    std::complex<double> estimate;  // (E f(X_dt) - f(x0)) / dt
    std::complex<double> table;     // L(f)(x0) from the operator table
    double se_re = 0, se_im = 0;    // Monte-Carlo standard errors of the estimate

    bool within(double k_sigma) const {
        return std::abs(estimate.real() - table.real()) <= k_sigma * se_re + 1e-9 &&
               std::abs(estimate.imag() - table.imag()) <= k_sigma * se_im + 1e-9;
    }
};

// Operator table for a simulator kind, as a formal model on the matrix
// entries (and conjugates where complex).
DiffusionModel matrix_table_model(MatrixKind kind, int d);

// All monomials of total degree 1..2 over the table variables.
std::vector<Poly> degree_two_monomials(const DiffusionModel& m, std::vector<std::string>* names);

// For each dt: simulates n_paths one-step ensembles from the identity and
// compares (E f(X_dt) - f(x0))/dt against l_apply on the table model.
std::vector<GenCheckRow> generator_check(MatrixKind kind, int d, std::span<const Poly> test_polys,
                                         const std::vector<std::string>& poly_names,
                                         std::span<const double> dts, int n_paths,
                                         std::uint64_t seed);

}  // namespace polydiff
