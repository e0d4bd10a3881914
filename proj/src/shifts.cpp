#include "kh/shifts.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "kh/errors.hpp"

namespace kh {

double ShiftPolynomial::eval(double rho) const {
    double s = 0.0;
    for (const auto& [p, c] : terms) s += c.to_double() * std::pow(rho, p);
    return s;
}

double ShiftPolynomial::eval_au(double rho, double z_eff) const {
    return eval(rho) * z_eff * z_eff;  // Z e^2/a_B = Z^2 a.u.
}

std::string ShiftPolynomial::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms) {
        if (!first) os << " + ";
        os << c.str() << "*rho";
        if (p > 1) os << "^" << p;
        first = false;
    }
    return os.str();
}

namespace shifts {

static ShiftPolynomial assemble(const BoundState& bra, const BoundState& ket, int max_order) {
    ShiftPolynomial sp;
    sp.bra = bra;
    sp.ket = ket;
    for (auto& [m, surd] : exact::matrix_element_exact(bra, ket, max_order))
        sp.terms.emplace_back(m, surd);
    return sp;
}

ShiftPolynomial diagonal_shift(const BoundState& s, int multipole_order) {
    if (multipole_order < s.l)
        throw ValidationError("diagonal_shift: truncation below l leaves the polynomial incomplete");
    return assemble(s, s, std::min(multipole_order, s.l));
}

ShiftPolynomial ground_coupling(const BoundState& s) {
    if (s.n == 1 && s.l == 0)
        throw ValidationError("ground_coupling: state must differ from the ground state");
    return assemble(s, BoundState(1, 0, 0), std::max(1, (s.l + 0) / 2 + 1));
}

ShiftPolynomial matrix_element(const BoundState& s1, const BoundState& s2) {
    return assemble(s1, s2, (s1.l + s2.l) / 2 + 1);
}

std::vector<BoundState> manifold(int n_max) {
    std::vector<BoundState> out;
    for (int n = 1; n <= n_max; ++n)
        for (int l = 0; l < n; ++l)
            for (int lz = -l; lz <= l; ++lz) out.emplace_back(n, l, lz);
    return out;
}

RigidityResult rigidity_metric(const std::vector<BoundState>& states, double rho,
                               double z_eff, double degeneracy_tol) {
    const int N = static_cast<int>(states.size());
    if (N < 2) throw ValidationError("rigidity_metric: need at least two states");

    Eigen::MatrixXd M(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
            double v = matrix_element(states[i], states[j]).eval_au(rho, z_eff);
            M(i, j) = M(j, i) = v;
        }
    Eigen::VectorXd E(N);
    for (int i = 0; i < N; ++i)
        E(i) = -z_eff * z_eff / (2.0 * states[i].n * states[i].n) + M(i, i);

    // cluster exactly degenerate shifted energies and rotate dV inside each
    // cluster (proper zeroth-order basis); intra-cluster couplings vanish
    std::vector<int> order(N);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return E(a) < E(b); });
    Eigen::MatrixXd R = Eigen::MatrixXd::Identity(N, N);
    size_t c0 = 0;
    std::vector<std::vector<int>> clusters;
    for (size_t i = 1; i <= order.size(); ++i) {
        if (i == order.size() || E(order[i]) - E(order[i - 1]) > degeneracy_tol) {
            clusters.emplace_back(order.begin() + c0, order.begin() + i);
            c0 = i;
        }
    }
    for (const auto& cl : clusters) {
        if (cl.size() < 2) continue;
        Eigen::MatrixXd sub(cl.size(), cl.size());
        for (size_t a = 0; a < cl.size(); ++a)
            for (size_t b = 0; b < cl.size(); ++b) sub(a, b) = M(cl[a], cl[b]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sub);
        for (size_t a = 0; a < cl.size(); ++a)
            for (size_t b = 0; b < cl.size(); ++b) R(cl[a], cl[b]) = es.eigenvectors()(a, b);
    }
    Eigen::MatrixXd Mr = R.transpose() * M * R;
    Eigen::VectorXd Er(N);
    for (int i = 0; i < N; ++i)
        Er(i) = -z_eff * z_eff / (2.0 * states[i].n * states[i].n) + Mr(i, i);

    RigidityResult best;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            double c = std::abs(Mr(i, j));
            if (c < 1e-13) continue;  // uncoupled pair, degenerate or not
            double g = std::abs(Er(j) - Er(i));
            if (g < degeneracy_tol)
                throw NumericError("rigidity_metric: degenerate coupled pair (" +
                                   std::to_string(states[i].n) + "," + std::to_string(states[i].l) +
                                   "," + std::to_string(states[i].lz) + ") <-> (" +
                                   std::to_string(states[j].n) + "," + std::to_string(states[j].l) +
                                   "," + std::to_string(states[j].lz) + ") after block rotation");
            if (c / g > best.metric) {
                best.metric = c / g;
                best.pair_a = states[i];
                best.pair_b = states[j];
                best.coupling_au = c;
                best.gap_au = g;
            }
        }
    return best;
}

EffectiveHamiltonian effective_hamiltonian(const std::vector<BoundState>& states,
                                           const HydrogenicAtom& atom,
                                           const LaserField& laser) {
    RegimeReport r = derive_regime(laser, atom);
    double rho = 0.0;
    if (!r.zero_field) {
        double ratio = *r.ratio_quiver_bohr;
        rho = ratio * ratio;
    }
    EffectiveHamiltonian h;
    h.states = states;
    h.rho = rho;
    for (const auto& s : states) {
        double dE = rho > 0.0 ? diagonal_shift(s, s.l > 0 ? s.l : 1).eval_au(rho, atom.z_eff) : 0.0;
        h.energy_au.push_back(-atom.z_eff * atom.z_eff / (2.0 * s.n * s.n) + dE);
    }
    h.offdiag_metric = rho > 0.0 ? rigidity_metric(states, rho, atom.z_eff).metric : 0.0;
    return h;
}

// --- printed tables ---------------------------------------------------------

namespace {
Surd rat(long long n, long long d) { return Surd(Rational(BigInt(n), BigInt(d)), 1); }
Surd surd(long long n, long long d, long long s) { return Surd(Rational(BigInt(n), BigInt(d)), s); }
PaperEntry diag(int n, int l, int lz, std::vector<std::pair<int, Surd>> t) {
    return PaperEntry{BoundState(n, l, lz), BoundState(n, l, lz), std::move(t), true};
}
PaperEntry coup(int n, int l, int lz, std::vector<std::pair<int, Surd>> t) {
    return PaperEntry{BoundState(n, l, lz), BoundState(1, 0, 0), std::move(t), false};
}
}  // namespace

std::vector<PaperEntry> paper_diagonal_table() {
    std::vector<PaperEntry> v;
    v.push_back(diag(1, 0, 0, {}));
    v.push_back(diag(2, 1, 0, {{1, rat(1, 240)}}));
    v.push_back(diag(2, 1, 1, {{1, rat(-1, 480)}}));
    v.push_back(diag(2, 1, -1, {{1, rat(-1, 480)}}));
    v.push_back(diag(2, 0, 0, {}));
    v.push_back(diag(3, 2, 2, {{1, rat(-1, 5760)}, {2, rat(-1, 816480)}}));
    v.push_back(diag(3, 2, -2, {{1, rat(-1, 5760)}, {2, rat(-1, 816480)}}));
    v.push_back(diag(3, 2, 1, {{1, rat(1, 11340)}, {2, rat(1, 204120)}}));
    v.push_back(diag(3, 2, -1, {{1, rat(1, 11340)}, {2, rat(1, 204120)}}));
    v.push_back(diag(3, 2, 0, {{1, rat(1, 5670)}, {2, rat(-1, 136080)}}));
    v.push_back(diag(3, 1, 0, {{1, rat(1, 810)}}));
    v.push_back(diag(3, 1, 1, {{1, rat(-1, 1620)}}));
    v.push_back(diag(3, 1, -1, {{1, rat(-1, 1620)}}));
    v.push_back(diag(3, 0, 0, {}));
    v.push_back(diag(4, 3, 3, {{1, rat(-1, 32256)}, {2, rat(-3, 50462720)}, {3, rat(-25, 113359454208LL)}}));
    v.push_back(diag(4, 3, -3, {{1, rat(-1, 32256)}, {2, rat(-3, 50462720)}, {3, rat(-25, 113359454208LL)}}));
    v.push_back(diag(4, 3, 2, {{2, rat(-1, 7208960)}, {3, rat(-25, 18893242368LL)}}));
    v.push_back(diag(4, 3, -2, {{2, rat(-1, 7208960)}, {3, rat(-25, 18893242368LL)}}));
    v.push_back(diag(4, 3, 1, {{1, rat(1, 53760)}, {2, rat(-1, 50462720)}, {3, rat(-125, 37786484736LL)}}));
    v.push_back(diag(4, 3, -1, {{1, rat(1, 53760)}, {2, rat(-1, 50462720)}, {3, rat(-125, 37786484736LL)}}));
    v.push_back(diag(4, 3, 0, {{1, rat(1, 40320)}, {2, rat(-3, 25231360)}, {3, rat(125, 28339863552LL)}}));
    v.push_back(diag(4, 2, 2, {{1, rat(-1, 13440)}, {2, rat(-3, 4587520)}}));
    v.push_back(diag(4, 2, -2, {{1, rat(-1, 13440)}, {2, rat(-3, 4587520)}}));
    v.push_back(diag(4, 2, 1, {{1, rat(1, 26880)}, {2, rat(3, 1146880)}}));
    v.push_back(diag(4, 2, -1, {{1, rat(1, 26880)}, {2, rat(3, 1146880)}}));
    v.push_back(diag(4, 2, 0, {{1, rat(1, 13440)}, {2, rat(-9, 2293760)}}));
    v.push_back(diag(4, 1, 1, {{1, rat(-1, 3840)}}));
    v.push_back(diag(4, 1, -1, {{1, rat(-1, 3840)}}));
    v.push_back(diag(4, 1, 0, {{1, rat(1, 1920)}}));
    v.push_back(diag(4, 0, 0, {}));
    return v;
}

std::vector<PaperEntry> paper_coupling_table() {
    std::vector<PaperEntry> v;
    // n=2: all zero
    v.push_back(coup(2, 1, 1, {}));
    v.push_back(coup(2, 1, 0, {}));
    v.push_back(coup(2, 0, 0, {}));
    // n=3
    v.push_back(coup(3, 2, 2, {{1, rat(-1, 720)}}));
    v.push_back(coup(3, 2, 1, {}));
    v.push_back(coup(3, 2, 0, {{1, surd(1, 10800, 150)}}));
    v.push_back(coup(3, 1, 1, {}));
    v.push_back(coup(3, 1, 0, {}));
    v.push_back(coup(3, 0, 0, {}));
    // n=4
    v.push_back(coup(4, 3, 3, {}));
    v.push_back(coup(4, 3, 2, {}));
    v.push_back(coup(4, 3, 1, {}));
    v.push_back(coup(4, 3, 0, {}));
    v.push_back(coup(4, 2, 2, {{1, surd(-13, 150000, 150)}}));
    v.push_back(coup(4, 2, 1, {}));
    v.push_back(coup(4, 2, 0, {{1, rat(13, 15000)}}));
    v.push_back(coup(4, 1, 1, {}));
    v.push_back(coup(4, 1, 0, {}));
    v.push_back(coup(4, 0, 0, {}));
    return v;
}

std::vector<TableComparison> compare_with_paper() {
    std::vector<TableComparison> out;
    auto run = [&](const std::vector<PaperEntry>& tab) {
        for (const auto& pe : tab) {
            TableComparison tc;
            tc.paper = pe;
            tc.computed = pe.diagonal ? diagonal_shift(pe.bra, std::max(1, pe.bra.l))
                                      : ground_coupling(pe.bra);
            tc.match = tc.computed.terms.size() == pe.printed.size();
            if (tc.match)
                for (size_t i = 0; i < pe.printed.size(); ++i)
                    if (!(tc.computed.terms[i].first == pe.printed[i].first &&
                          tc.computed.terms[i].second == pe.printed[i].second))
                        tc.match = false;
            out.push_back(std::move(tc));
        }
    };
    run(paper_diagonal_table());
    run(paper_coupling_table());
    return out;
}

}  // namespace shifts
}  // namespace kh
