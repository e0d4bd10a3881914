#include "kh/birkhoff.hpp"

#include <cmath>
#include <string>

#include "kh/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kh {

namespace {

struct Eig {
    Eigen::VectorXd w;
    MatrixC V;
};

Eig decompose(const MatrixFn& A, double t, double herm_tol) {
    MatrixC M = A(t);
    if (M.rows() != M.cols()) throw ValidationError("birkhoff: A(t) must be square");
    double scale = std::max(1.0, M.norm());
    if ((M - M.adjoint()).norm() > herm_tol * scale)
        throw ValidationError("birkhoff: A(t) is not Hermitian at t = " + std::to_string(t));
    Eigen::SelfAdjointEigenSolver<MatrixC> es(M);
    return {es.eigenvalues(), es.eigenvectors()};
}

// assign columns of `cur` to the branch order of `prev` by greedy max overlap
std::vector<int> match_branches(const MatrixC& prev, const MatrixC& cur) {
    const int N = static_cast<int>(prev.cols());
    Eigen::MatrixXd O = (prev.adjoint() * cur).cwiseAbs();
    std::vector<int> perm(N, -1);
    std::vector<bool> used(N, false);
    for (int pick = 0; pick < N; ++pick) {
        int bi = -1, bc = -1;
        double best = -1.0;
        for (int j = 0; j < N; ++j) {
            if (perm[j] >= 0) continue;
            for (int c = 0; c < N; ++c) {
                if (used[c]) continue;
                if (O(j, c) > best) {
                    best = O(j, c);
                    bi = j;
                    bc = c;
                }
            }
        }
        perm[bi] = bc;
        used[bc] = true;
    }
    return perm;
}

// continuation state at one time
struct Cont {
    double t;
    Eigen::VectorXd lam;  // branch-ordered eigenvalues
    MatrixC U;            // branch-ordered, gauge-fixed eigenvectors
};

struct Walker {
    const MatrixFn& A;
    const BirkhoffOptions& opt;
    const std::vector<int>& ref;          // reference component per branch
    std::vector<double>& dyn;             // running phases, per branch
    std::vector<double>& gam;

    // gauge-fix columns of e against `from`; returns branch-ordered state
    Cont fix(const Cont& from, const Eig& e, double t) const {
        const int N = static_cast<int>(from.U.cols());
        std::vector<int> perm = match_branches(from.U, e.V);
        Cont out;
        out.t = t;
        out.lam.resize(N);
        out.U.resize(N, N);
        for (int j = 0; j < N; ++j) {
            VectorC v = e.V.col(perm[j]);
            std::complex<double> ov = from.U.col(j).dot(v);
            if (std::abs(ov) < opt.overlap_min)
                throw NumericError("overlap " + std::to_string(std::abs(ov)));
            std::complex<double> z = v(ref[j]);
            if (std::abs(z) > 0.05)
                v *= std::conj(z) / std::abs(z);  // reference-component gauge
            else
                v *= std::conj(ov) / std::abs(ov);  // parallel-transport fallback
            out.U.col(j) = v;
            out.lam(j) = e.w(perm[j]);
        }
        return out;
    }

    // advance from `st` to t_to accumulating Simpson dynamic phase and the
    // discrete geometric phase; bisects when an eigenvector overlap drops
    Cont advance(const Cont& st, double t_to, const Eig* emid, const Eig* eend,
                 int depth) const {
        const double tm = 0.5 * (st.t + t_to);
        Eig em = emid ? *emid : decompose(A, tm, opt.hermiticity_tol);
        Eig ee = eend ? *eend : decompose(A, t_to, opt.hermiticity_tol);
        try {
            Cont mid = fix(st, em, tm);
            Cont end = fix(mid, ee, t_to);
            const int N = static_cast<int>(st.U.cols());
            const double h = t_to - st.t;
            for (int j = 0; j < N; ++j) {
                dyn[j] += h / 6.0 * (st.lam(j) + 4.0 * mid.lam(j) + end.lam(j));
                gam[j] += -std::arg(st.U.col(j).dot(mid.U.col(j))) -
                          std::arg(mid.U.col(j).dot(end.U.col(j)));
            }
            return end;
        } catch (const NumericError& ex) {
            if (depth >= opt.max_bisect)
                throw NumericError(
                    "birkhoff_solve: eigenvector continuation lost track near t = " +
                    std::to_string(tm) + " (" + ex.what() + "); grid too coarse");
            Cont mid = advance(st, tm, nullptr, &em, depth + 1);
            return advance(mid, t_to, nullptr, &ee, depth + 1);
        }
    }
};

}  // namespace

VectorC BirkhoffSolution::basis_vector(int branch, int node) const {
    std::complex<double> ph =
        std::exp(std::complex<double>(0.0, -dyn_phase[branch][node] / eps + gamma[branch][node]));
    return ph * u[node].col(branch);
}

BirkhoffSolution birkhoff_solve(const MatrixFn& A, double eps, const VectorC& a0,
                                const std::vector<double>& grid, const BirkhoffOptions& opt) {
    if (grid.size() < 2) throw ValidationError("birkhoff_solve: grid needs >= 2 nodes");
    for (size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i + 1] > grid[i])) throw ValidationError("birkhoff_solve: grid must increase");
    if (!(eps > 0.0)) throw ValidationError("birkhoff_solve: eps > 0");
    const int K = static_cast<int>(grid.size());
    const int N = static_cast<int>(a0.size());

    // parallel eigensolve over user nodes and interval midpoints,
    // sequential phase-continuation pass afterwards
    const int M = 2 * K - 1;
    std::vector<Eig> eig(M);
    std::vector<double> tt(M);
    for (int i = 0; i < M; ++i)
        tt[i] = (i % 2 == 0) ? grid[i / 2] : 0.5 * (grid[i / 2] + grid[i / 2 + 1]);
    bool bad = false;
    std::string bad_msg;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < M; ++i) {
        try {
            eig[i] = decompose(A, tt[i], opt.hermiticity_tol);
        } catch (const std::exception& ex) {
#pragma omp critical
            {
                bad = true;
                bad_msg = ex.what();
            }
        }
    }
    if (bad) throw ValidationError(bad_msg);
    if (eig[0].w.size() != N)
        throw ValidationError("birkhoff_solve: a0 size does not match A(t)");

    double a_norm = 0.0;
    GapReport gap{1e300, grid[0], 0.0};
    for (int i = 0; i < M; ++i) {
        a_norm = std::max({a_norm, std::abs(eig[i].w(0)), std::abs(eig[i].w(N - 1))});
        for (int j = 0; j + 1 < N; ++j) {
            double g = eig[i].w(j + 1) - eig[i].w(j);
            if (g < gap.min_gap) {
                gap.min_gap = g;
                gap.at_time = tt[i];
            }
        }
    }
    gap.matrix_norm = a_norm;
    if (N > 1 && gap.min_gap < opt.gap_tol_rel * std::max(a_norm, 1e-30))
        throw NumericError("birkhoff_solve: eigenvalue gap " + std::to_string(gap.min_gap) +
                           " at t = " + std::to_string(gap.at_time) +
                           " below tolerance (crossing); ||A|| = " + std::to_string(a_norm));

    BirkhoffSolution sol;
    sol.grid = grid;
    sol.eps = eps;
    sol.gap = gap;
    sol.lambda.assign(N, std::vector<double>(K, 0.0));
    sol.dyn_phase.assign(N, std::vector<double>(K, 0.0));
    sol.gamma.assign(N, std::vector<double>(K, 0.0));
    sol.u.assign(K, MatrixC(N, N));

    // t0: branches ordered by ascending eigenvalue; dominant component of
    // each eigenvector pinned real positive
    Cont st;
    st.t = grid[0];
    st.lam = eig[0].w;
    st.U = eig[0].V;
    std::vector<int> ref(N);
    for (int j = 0; j < N; ++j) {
        int i0 = 0;
        for (int r = 1; r < N; ++r)
            if (std::abs(st.U(r, j)) > std::abs(st.U(i0, j))) i0 = r;
        ref[j] = i0;
        std::complex<double> z = st.U(i0, j);
        st.U.col(j) *= std::conj(z) / std::abs(z);
    }
    sol.u[0] = st.U;
    for (int j = 0; j < N; ++j) sol.lambda[j][0] = st.lam(j);

    std::vector<double> dyn(N, 0.0), gam(N, 0.0);
    Walker walker{A, opt, ref, dyn, gam};
    for (int k = 1; k < K; ++k) {
        st = walker.advance(st, grid[k], &eig[2 * k - 1], &eig[2 * k], 0);
        sol.u[k] = st.U;
        for (int j = 0; j < N; ++j) {
            sol.lambda[j][k] = st.lam(j);
            sol.dyn_phase[j][k] = dyn[j];
            sol.gamma[j][k] = gam[j];
        }
    }

    sol.alpha = sol.u[0].adjoint() * a0;
    sol.amplitudes.reserve(K);
    for (int k = 0; k < K; ++k) {
        VectorC a = VectorC::Zero(N);
        for (int j = 0; j < N; ++j) a += sol.alpha(j) * sol.basis_vector(j, k);
        sol.amplitudes.push_back(std::move(a));
    }
    return sol;
}

std::vector<VectorC> direct_integrate(const MatrixFn& A, double eps, const VectorC& a0,
                                      const std::vector<double>& grid, double rel_tol,
                                      double abs_tol) {
    if (grid.size() < 2) throw ValidationError("direct_integrate: grid needs >= 2 nodes");
    if (!(eps > 0.0)) throw ValidationError("direct_integrate: eps > 0");
    const std::complex<double> mi(0.0, -1.0);
    auto rhs = [&](double t, const VectorC& y) -> VectorC { return (mi / eps) * (A(t) * y); };

    // Dormand-Prince 5(4)
    static const double c2 = 1. / 5, c3 = 3. / 10, c4 = 4. / 5, c5 = 8. / 9;
    static const double a21 = 1. / 5;
    static const double a31 = 3. / 40, a32 = 9. / 40;
    static const double a41 = 44. / 45, a42 = -56. / 15, a43 = 32. / 9;
    static const double a51 = 19372. / 6561, a52 = -25360. / 2187, a53 = 64448. / 6561,
                        a54 = -212. / 729;
    static const double a61 = 9017. / 3168, a62 = -355. / 33, a63 = 46732. / 5247,
                        a64 = 49. / 176, a65 = -5103. / 18656;
    static const double b1 = 35. / 384, b3 = 500. / 1113, b4 = 125. / 192, b5 = -2187. / 6784,
                        b6 = 11. / 84;
    static const double e1 = 5179. / 57600, e3 = 7571. / 16695, e4 = 393. / 640,
                        e5 = -92097. / 339200, e6 = 187. / 2100, e7 = 1. / 40;

    std::vector<VectorC> out;
    out.reserve(grid.size());
    out.push_back(a0);
    VectorC y = a0;
    const double span = grid.back() - grid.front();
    double h = span / 1000.0;

    for (size_t seg = 0; seg + 1 < grid.size(); ++seg) {
        double t = grid[seg];
        const double t_end = grid[seg + 1];
        while (t < t_end) {
            h = std::min(h, t_end - t);
            if (h < 1e-14 * span)
                throw NumericError(
                    "direct_integrate: step underflow (fastest phase ~ ||A||/eps too stiff); "
                    "reduce the eps range or shorten the interval");
            VectorC k1 = rhs(t, y);
            VectorC k2 = rhs(t + c2 * h, y + h * (a21 * k1));
            VectorC k3 = rhs(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
            VectorC k4 = rhs(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
            VectorC k5 = rhs(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
            VectorC k6 =
                rhs(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
            VectorC y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
            VectorC k7 = rhs(t + h, y5);
            VectorC y4 = y + h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
            double sc = abs_tol + rel_tol * std::max(y.norm(), y5.norm());
            double err = (y5 - y4).norm() / sc;
            if (err <= 1.0) {
                t += h;
                y = y5;
            }
            double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
            h *= std::min(5.0, std::max(0.2, fac));
        }
        out.push_back(y);
    }
    double drift = std::abs(y.norm() - a0.norm());
    if (drift > 1e-9 * std::max(1.0, a0.norm()))
        throw NumericError("direct_integrate: norm drift " + std::to_string(drift) +
                           " exceeds 1e-9 (Hermitian flow should be unitary)");
    return out;
}

}  // namespace kh
