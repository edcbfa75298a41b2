#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "teamrank/inference.hpp"
#include "teamrank/types.hpp"

namespace teamrank {

/// Sample Pearson correlation. Throws ZeroVarianceError when either argument is
/// constant; requires equal lengths >= 2.
double pearson(const Vector& x, const Vector& y);

/// Quantile with linear interpolation between order statistics (the common
/// "type 7" definition); p in [0,1].
double quantile(std::vector<double> values, double p);

/// Expands every hyperedge (I,J,W) into a win of weight W of every i in I over
/// every j in J, accumulated into an n x n matrix. Datasets flagged as
/// overlap-allowed are rejected.
Matrix pairwise_projection(const GameDataset& data);

struct RankEntry {
  int player;
  double score;
};

/// Scores in non-increasing order, ties broken by ascending player index.
using Ranking = std::vector<RankEntry>;

Ranking ranking_from_scores(const Vector& scores);

/// Score = weight won / weight played. Every player must appear in >= 1 game.
Ranking rank_by_win_rate(const GameDataset& data);

/// Ranks by fitted log-strength. Refuses unconverged results unless forced.
Ranking rank_by_strength(const FitResult& result, bool force = false);

// ---------------------------------------------------------------------------
// Replication experiments on synthetic data

enum class Method { WinRate, BT, HBT, GBT };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

struct CellStats {
  int n = 0;
  long m = 0;
  Method method = Method::HBT;
  double median_r = 0.0;
  double q1_r = 0.0;
  double q3_r = 0.0;
  double median_seconds = 0.0;
};

struct ReplicationSummary {
  std::vector<CellStats> cells;  // grid-major, then method order
  int regenerated = 0;           // degenerate datasets that were re-drawn
};

using Grid = std::vector<std::pair<int, long>>;  // (players, games) cells

/// For every cell and replication: generate a dataset from a seed derived from
/// (base_seed, n, m, replication), fit each method (HBT with HbtMM, GBT with
/// GbtNewman, BT with Newman on the pairwise projection), and correlate fitted
/// against true log-strengths. Wall time covers just the fit call. Deterministic
/// given (grid, reps, base_seed, methods) apart from the timing column.
ReplicationSummary replication_experiment(const Grid& grid, int reps,
                                          std::uint64_t base_seed,
                                          std::span<const Method> methods,
                                          const FitConfig& cfg = {});

struct TimingRow {
  int n = 0;
  long m = 0;
  Method method = Method::HBT;
  double median_seconds = 0.0;
};

/// Median per-fit wall time per cell and method. Fast fits are measured by
/// repeating the identical call until enough time accumulates, so
/// microsecond-scale fits do not drown in clock noise. Runs sequentially.
std::vector<TimingRow> timing_bench(const Grid& grid, int reps,
                                    std::uint64_t base_seed,
                                    std::span<const Method> methods,
                                    const FitConfig& cfg = {});

/// Fit one method on one dataset: HBT/GBT on the edges, BT on the projection.
FitResult fit_method(const GameDataset& data, Method method, const FitConfig& cfg = {});

}  // namespace teamrank
