#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <vector>

#include "kh/exec.hpp"

namespace kh {

using MatrixC = Eigen::MatrixXcd;
using VectorC = Eigen::VectorXcd;
using MatrixFn = std::function<MatrixC(double)>;

struct GapReport {
    double min_gap = 0.0;
    double at_time = 0.0;
    double matrix_norm = 0.0;
};

// Leading-order fundamental solutions of i eps da/dt = A(t) a:
// b_j(t) = exp[-(i/eps) int lambda_j] exp[i gamma_j(t)] u_j(t).
// Eigenvector phases are fixed by holding the dominant t0-component of each
// branch real positive (falling back to parallel transport if it fades), so
// the reported (gamma_j, u_j) split is grid-independent while the product
// b_j is gauge-invariant either way.
struct BirkhoffSolution {
    std::vector<double> grid;
    std::vector<std::vector<double>> lambda;      // [branch][node]
    std::vector<std::vector<double>> dyn_phase;   // int lambda dt (without 1/eps)
    std::vector<std::vector<double>> gamma;       // geometric phase
    std::vector<MatrixC> u;                       // columns = branches, per node
    VectorC alpha;                                // mixing coefficients from a(t0)
    std::vector<VectorC> amplitudes;              // reconstructed a(t)
    double eps = 1.0;
    GapReport gap;

    VectorC basis_vector(int branch, int node) const;  // b_j(t_node)
};

struct BirkhoffOptions {
    double gap_tol_rel = 1e-8;      // error below gap_tol_rel * ||A||
    double overlap_min = 0.99;      // continuation refines below this
    int max_bisect = 14;
    double hermiticity_tol = 1e-10;
};

BirkhoffSolution birkhoff_solve(const MatrixFn& A, double eps, const VectorC& a0,
                                const std::vector<double>& grid,
                                const BirkhoffOptions& opt = {});

// Adaptive Dormand-Prince integration of i eps da/dt = A(t) a, landing
// exactly on the grid nodes; norm drift beyond 1e-9 raises NumericError.
std::vector<VectorC> direct_integrate(const MatrixFn& A, double eps, const VectorC& a0,
                                      const std::vector<double>& grid,
                                      double rel_tol = 1e-10, double abs_tol = 1e-12);

}  // namespace kh
