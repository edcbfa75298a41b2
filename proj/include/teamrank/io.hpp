#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "teamrank/evaluation.hpp"
#include "teamrank/inference.hpp"
#include "teamrank/types.hpp"

namespace teamrank {

/// Shortest round-trip decimal form of x (std::to_chars).
std::string fmt_double(double x);

struct ParsedGames {
  PlayerRegistry registry;
  GameDataset data;
};

// Games file: one game per line, `winners|losers|weight` with comma-separated
// labels; the weight defaults to 1 when omitted. Blank lines and lines starting
// with '#' are skipped. Errors carry the 1-based line number.
ParsedGames parse_games(std::istream& in, bool allow_overlap = false);
ParsedGames parse_games_file(const std::string& path, bool allow_overlap = false);

void write_games(std::ostream& out, const PlayerRegistry& registry,
                 const GameDataset& data);
void write_games_file(const std::string& path, const PlayerRegistry& registry,
                      const GameDataset& data);

// Truth sidecar: `index s` per line.
void write_truth_file(const std::string& path, const Vector& log_strengths);

// Result file: `key value` header lines (model, rule, sweeps, converged,
// final_delta, log_likelihood, players), then one `label pi s won total` row
// per player in registry order.
void write_result(std::ostream& out, const PlayerRegistry& registry,
                  const GameDataset& data, ModelKind model, UpdateRule rule,
                  const FitResult& result, double log_likelihood);
void write_result_file(const std::string& path, const PlayerRegistry& registry,
                       const GameDataset& data, ModelKind model, UpdateRule rule,
                       const FitResult& result, double log_likelihood);

struct RankingRow {
  int rank;
  std::string method;
  std::string player;
  double score;
};

// rankings.csv schema: rank,method,player,score
void write_rankings_csv(const std::string& path, const std::vector<RankingRow>& rows);

// cell_summary.csv schema: n,m,method,median_r,q1_r,q3_r,median_seconds
void write_cell_summary_csv(const std::string& path,
                            const std::vector<CellStats>& cells);

/// Per-player total participation weight (appearances on either side).
std::vector<double> games_played_weight(const GameDataset& data);
/// Per-player total winning weight.
std::vector<double> games_won_weight(const GameDataset& data);

/// Drops players whose total participation weight is below min_weight, along
/// with every edge that involves a dropped player (single pass), and compacts
/// the registry. min_weight <= 0 keeps everything.
ParsedGames filter_min_games(const ParsedGames& input, double min_weight);

}  // namespace teamrank
