#pragma once

#include <iosfwd>
#include <vector>

#include "spssot/dataset.hpp"

namespace spssot {

// Transport plan with its marginals. The exact solver also reports the dual
// potentials of its final basis, which certify optimality via complementary
// slackness (u_i + v_j <= c_ij everywhere, equality on the support).
struct Coupling {
    Matrix plan;
    Vector row_marginals;
    Vector col_marginals;
    Vector row_potentials;  // empty unless produced by solve_exact
    Vector col_potentials;

    double objective(const Matrix& cost) const;
    double max_marginal_violation() const;
};

// Squared Euclidean pairwise costs between row sets of equal width.
Matrix cost_matrix(const Matrix& source, const Matrix& target);

// Label-adaptive multiplier on the cost: exact {0,1} label agreement for
// labeled target columns, |y_s - p_t| for unlabeled columns (p_t is the
// predicted positive-class probability). Columns are ordered labeled first.
Matrix reweight_matrix(const std::vector<int>& y_source,
                       const std::vector<int>& y_target_labeled,
                       const Vector& target_unlabeled_pos_probs);

// Exact transportation-simplex solution of min <plan, cost> subject to the
// given marginals. Deterministic pivoting; zero-mass rows and columns are
// dropped before solving and reinserted as zeros.
Coupling solve_exact(const Matrix& cost, const Vector& row_marginals,
                     const Vector& col_marginals);

struct SinkhornOptions {
    double epsilon = 0.01;
    int max_iters = 500000;
    double tolerance = 1e-9;
    // Warm-start the potentials by halving epsilon from the cost scale down
    // to the target; the fixed point is unchanged.
    bool epsilon_scaling = true;
};

// Log-domain Sinkhorn; the returned plan is rounded onto the transportation
// polytope so its marginals match to machine precision.
Coupling solve_sinkhorn(const Matrix& cost, const Vector& row_marginals,
                        const Vector& col_marginals, const SinkhornOptions& opts);

void dump_plan_tsv(const Coupling& coupling, std::ostream& out);

}  // namespace spssot
