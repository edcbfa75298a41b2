#include "teamrank/types.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace teamrank {

std::string to_string(ModelKind m) {
  switch (m) {
    case ModelKind::BT: return "bt";
    case ModelKind::HBT: return "hbt";
    case ModelKind::GBT: return "gbt";
  }
  return "?";
}

ModelKind model_from_string(const std::string& s) {
  if (s == "bt") return ModelKind::BT;
  if (s == "hbt") return ModelKind::HBT;
  if (s == "gbt") return ModelKind::GBT;
  throw std::invalid_argument("unknown model '" + s + "' (expected bt|hbt|gbt)");
}

bool PlayerRegistry::valid_label(const std::string& label) {
  if (label.empty()) return false;
  for (char c : label) {
    if (c == ',' || c == '|' || std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

int PlayerRegistry::add_or_get(const std::string& label) {
  auto it = index_.find(label);
  if (it != index_.end()) return it->second;
  if (!valid_label(label)) {
    throw std::invalid_argument("invalid player label '" + label + "'");
  }
  int id = static_cast<int>(names_.size());
  names_.push_back(label);
  index_.emplace(label, id);
  return id;
}

int PlayerRegistry::at(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw std::invalid_argument("unknown player '" + label + "'");
  return it->second;
}

const std::string& PlayerRegistry::name(int index) const {
  if (index < 0 || index >= size()) throw std::out_of_range("player index out of range");
  return names_[static_cast<size_t>(index)];
}

bool DirectedHyperedge::overlapping() const {
  // both teams sorted
  auto a = winners.begin();
  auto b = losers.begin();
  while (a != winners.end() && b != losers.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

namespace {

void sort_and_check_team(std::vector<int>& team, const char* side) {
  if (team.empty()) {
    throw std::invalid_argument(std::string(side) + " team is empty");
  }
  std::sort(team.begin(), team.end());
  if (std::adjacent_find(team.begin(), team.end()) != team.end()) {
    throw std::invalid_argument(std::string("duplicate player in ") + side + " team");
  }
  if (team.front() < 0) {
    throw std::invalid_argument("negative player index");
  }
}

}  // namespace

DirectedHyperedge make_edge(std::vector<int> winners, std::vector<int> losers,
                            double weight) {
  sort_and_check_team(winners, "winner");
  sort_and_check_team(losers, "loser");
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw std::invalid_argument("edge weight must be positive and finite");
  }
  return DirectedHyperedge{std::move(winners), std::move(losers), weight};
}

void GameDataset::add_edge(DirectedHyperedge edge) {
  if (edge.winners.empty() || edge.losers.empty()) {
    throw std::invalid_argument("edge team is empty");
  }
  if (edge.winners.back() >= n || edge.losers.back() >= n) {
    throw std::invalid_argument("player index out of range");
  }
  if (!overlap_allowed && edge.overlapping()) {
    throw std::invalid_argument("winners and losers overlap in a dataset without overlap support");
  }
  edges.push_back(std::move(edge));
}

void GameDataset::add_edge(std::vector<int> winners, std::vector<int> losers,
                           double weight) {
  add_edge(make_edge(std::move(winners), std::move(losers), weight));
}

bool GameDataset::has_overlapping_edges() const {
  return std::any_of(edges.begin(), edges.end(),
                     [](const DirectedHyperedge& e) { return e.overlapping(); });
}

bool GameDataset::pairwise_only() const {
  return std::all_of(edges.begin(), edges.end(), [](const DirectedHyperedge& e) {
    return e.winners.size() == 1 && e.losers.size() == 1;
  });
}

double GameDataset::total_weight() const {
  double w = 0.0;
  for (const auto& e : edges) w += e.weight;
  return w;
}

void GameDataset::validate() const {
  if (n < 1) throw std::invalid_argument("dataset needs at least one player");
  for (const auto& e : edges) {
    DirectedHyperedge checked = make_edge(e.winners, e.losers, e.weight);
    if (checked.winners != e.winners || checked.losers != e.losers) {
      throw std::invalid_argument("edge teams are not in canonical sorted order");
    }
    if (e.winners.back() >= n || e.losers.back() >= n) {
      throw std::invalid_argument("player index out of range");
    }
    if (!overlap_allowed && e.overlapping()) {
      throw std::invalid_argument("overlapping edge in a dataset without overlap support");
    }
  }
}

void validate_strengths(const Vector& pi, int n) {
  if (pi.size() != n) throw std::invalid_argument("strength vector has wrong length");
  for (Eigen::Index i = 0; i < pi.size(); ++i) {
    if (!(pi[i] > 0.0) || !std::isfinite(pi[i])) {
      throw std::invalid_argument("strengths must be strictly positive and finite");
    }
  }
}

}  // namespace teamrank
