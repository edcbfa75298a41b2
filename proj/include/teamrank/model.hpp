#pragma once

#include <span>

#include "teamrank/types.hpp"

namespace teamrank {

/// Numerically stable logistic 1/(1+e^-x). Never exponentiates a positive
/// argument, so it is finite for any finite x.
double logistic(double x);

/// log(logistic(x)), stable in both tails (equals -softplus(-x)).
double log_logistic(double x);

/// P[I beats J] under the hypergraph model: prod_I pi / (prod_I pi + prod_J pi).
/// Multi-member teams are evaluated as logistic(sum_I log pi - sum_J log pi), so
/// large teams or extreme strengths cannot overflow; the singleton-vs-singleton
/// case uses the plain ratio and is bit-identical to bt_win_prob.
double hbt_win_prob(std::span<const int> winners, std::span<const int> losers,
                    const Vector& pi);

/// Classic Bradley-Terry P[i beats j] = pi_i / (pi_i + pi_j).
double bt_win_prob(int i, int j, const Vector& pi);

/// Generalized Bradley-Terry P[I beats J] = sum_I pi / (sum_I pi + sum_J pi).
double gbt_win_prob(std::span<const int> winners, std::span<const int> losers,
                    const Vector& pi);

double edge_win_prob(const DirectedHyperedge& edge, const Vector& pi, ModelKind model);

/// Weighted log-likelihood sum_edges W * log P[I beats J] under the given model.
/// BT requires pairwise-only data. Finite for any valid pi (log-of-ratio forms).
double log_likelihood(const GameDataset& data, const Vector& pi, ModelKind model);

/// Pairwise log-likelihood straight from a win matrix (W(i,j) = wins of i over j).
double log_likelihood(const Matrix& win_matrix, const Vector& pi);

/// Gradient of log_likelihood with respect to pi, one entry per player.
/// Closed forms per model; edges where a player sits on both sides contribute
/// zero to that player's HBT component and a (pi_J - pi_I) correction term to
/// the GBT one.
Vector grad_log_likelihood(const GameDataset& data, const Vector& pi, ModelKind model);

}  // namespace teamrank
