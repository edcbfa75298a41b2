#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace teamrank {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Which win-probability model a dataset is fit under.
///  - BT:  classic pairwise Bradley-Terry, P = pi_i / (pi_i + pi_j)
///  - HBT: hypergraph extension for team games, team score = product of member pi
///  - GBT: generalized Bradley-Terry of Huang et al., team score = sum of member pi
enum class ModelKind { BT, HBT, GBT };

std::string to_string(ModelKind m);
ModelKind model_from_string(const std::string& s);

/// Maps external player labels to dense indices 0..n-1, in first-appearance order.
/// Labels must be non-empty and free of ',', '|' and whitespace.
class PlayerRegistry {
 public:
  int add_or_get(const std::string& label);
  int at(const std::string& label) const;          // throws if unknown
  const std::string& name(int index) const;
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  static bool valid_label(const std::string& label);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

/// One recorded game: a directed hyperedge from the loser team to the winner team.
/// Teams are kept as sorted, duplicate-free index lists so identical teams compare equal.
struct DirectedHyperedge {
  std::vector<int> winners;
  std::vector<int> losers;
  double weight = 1.0;

  bool overlapping() const;  // winners and losers share a member
};

/// Sorts and checks both teams; throws std::invalid_argument on empty team,
/// duplicate member, or non-positive/non-finite weight.
DirectedHyperedge make_edge(std::vector<int> winners, std::vector<int> losers,
                            double weight = 1.0);

/// A weighted multiset of recorded games over n players. Duplicate (I,J) pairs are
/// kept as-is; every likelihood expression is additive in the weights, so duplicates
/// behave exactly like summed weights.
struct GameDataset {
  int n = 0;
  bool overlap_allowed = false;
  std::vector<DirectedHyperedge> edges;

  GameDataset() = default;
  explicit GameDataset(int players, bool allow_overlap = false)
      : n(players), overlap_allowed(allow_overlap) {}

  /// Validates the edge against n and the overlap flag, then appends it.
  void add_edge(DirectedHyperedge edge);
  void add_edge(std::vector<int> winners, std::vector<int> losers, double weight = 1.0);

  bool has_overlapping_edges() const;
  bool pairwise_only() const;  // every edge is singleton vs singleton
  double total_weight() const;

  /// Re-checks every invariant; throws std::invalid_argument on violation.
  void validate() const;
};

/// Throws unless pi has the expected size and strictly positive, finite entries.
void validate_strengths(const Vector& pi, int n);

// ---------------------------------------------------------------------------
// Errors

/// A fixed-point update hit a structurally impossible ratio for some player.
enum class SweepFault { ZeroNumerator, ZeroDenominator, NonPositiveNumerator };

class SweepError : public std::runtime_error {
 public:
  SweepError(SweepFault fault, int player, const std::string& what)
      : std::runtime_error(what), fault(fault), player(player) {}

  SweepFault fault;
  int player;
  int sweep = -1;  // filled in by fit() when the failure happens mid-run
};

/// Raised by fit() when the dataset has players that never win or never lose;
/// for those the maximum-likelihood strengths diverge and the updates break down.
class DegeneracyError : public std::runtime_error {
 public:
  explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what) : std::runtime_error(what), line(line) {}
  int line;
};

class ZeroVarianceError : public std::runtime_error {
 public:
  explicit ZeroVarianceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace teamrank
