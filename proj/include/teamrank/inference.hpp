#pragma once

#include <optional>
#include <string>
#include <vector>

#include "teamrank/model.hpp"
#include "teamrank/types.hpp"

namespace teamrank {

/// Fixed-point update rules. Zermelo/Newman operate on pairwise win matrices;
/// the others sweep hyperedge datasets. HbtMM is the MM-style ratio update for
/// the hypergraph model, GbtHuang the original (slow) generalized-BT update of
/// Huang et al., GbtNewman its Newman-style accelerated rearrangement.
/// On datasets that allow shared members, HbtMM and GbtNewman switch to the
/// non-disjoint forms automatically.
enum class UpdateRule { Zermelo, Newman, HbtMM, GbtHuang, GbtNewman };

std::string to_string(UpdateRule r);
bool rule_compatible(ModelKind model, UpdateRule rule);
UpdateRule default_rule(ModelKind model);

enum class Normalization { None, SumOne, GeometricMeanOne };

std::string to_string(Normalization n);

struct FitConfig {
  double tolerance = 1e-10;  // on max |delta log pi| per sweep
  int max_sweeps = 10000;
  Normalization normalization = Normalization::None;
  bool record_trace = false;
};

struct FitResult {
  Vector pi;
  int sweeps_used = 0;
  bool converged = false;
  double final_delta = std::numeric_limits<double>::infinity();
  std::vector<double> loglik_trace;  // one entry per sweep when recorded

  Vector log_strengths() const { return pi.array().log().matrix(); }
};

// ---------------------------------------------------------------------------
// Single sweeps. Each updates players 0..n-1 one at a time, in place, so later
// updates see earlier ones within the same sweep.

void zermelo_sweep(const Matrix& win_matrix, Vector& pi);
void newman_sweep(const Matrix& win_matrix, Vector& pi);
void hbt_sweep(const GameDataset& data, Vector& pi);
void gbt_huang_sweep(const GameDataset& data, Vector& pi);
void gbt_newman_sweep(const GameDataset& data, Vector& pi);

// The value a single player's update would produce, without mutating pi.
double hbt_update_value(const GameDataset& data, int player, const Vector& pi);
double gbt_huang_update_value(const GameDataset& data, int player, const Vector& pi);
double gbt_newman_update_value(const GameDataset& data, int player, const Vector& pi);

/// SumOne divides by the sum, GeometricMeanOne by the geometric mean (computed
/// in log space), None is the identity. Positivity is preserved.
Vector normalize(const Vector& pi, Normalization policy);

// ---------------------------------------------------------------------------
// Diagnostics

/// Players that never appear on a winning (resp. losing) side are hard errors
/// for every fixed-point rule: their likelihood has no interior maximum.
/// Connectivity of the projected comparison digraph (an arc loser -> winner for
/// every winner/loser pair of every edge) is reported as a warning only; for
/// hypergraph data it is a heuristic, not a sufficiency condition.
struct DegeneracyReport {
  std::vector<int> never_winning;
  std::vector<int> never_losing;
  bool strongly_connected = false;
  int component_count = 0;

  bool hard() const { return !never_winning.empty() || !never_losing.empty(); }
  std::string describe(const PlayerRegistry* registry = nullptr) const;
};

DegeneracyReport check_degeneracy(const GameDataset& data);
DegeneracyReport check_degeneracy(const Matrix& win_matrix);

/// Opt-in regularizer: adds weight w in both orientations of every distinct
/// unordered team pairing observed in the data. Makes degenerate players
/// fittable at the cost of shrinking everyone toward equal strength.
GameDataset add_laplace(const GameDataset& data, double w);

// ---------------------------------------------------------------------------
// Fit loop

/// Sweeps from pi = (1,...,1) until max |delta log pi| <= tolerance or the sweep
/// budget runs out. Normalization is applied after each sweep for BT/GBT and is
/// forced to None for HBT, whose probabilities are not scale-invariant.
/// Throws DegeneracyError up front for never-winning/never-losing players and
/// rethrows SweepError with the sweep index filled in. Hitting max_sweeps is not
/// an error: the result comes back with converged = false.
FitResult fit(const GameDataset& data, ModelKind model, UpdateRule rule,
              const FitConfig& cfg = {});

/// BT fit on the canonical matrix input.
FitResult fit(const Matrix& win_matrix, UpdateRule rule, const FitConfig& cfg = {});

}  // namespace teamrank
