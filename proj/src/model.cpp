#include "teamrank/model.hpp"

#include <cmath>

namespace teamrank {

double logistic(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  double e = std::exp(x);
  return e / (1.0 + e);
}

double log_logistic(double x) {
  // -softplus(-x); the std::log1p branch keeps full precision in both tails.
  if (x >= 0.0) {
    return -std::log1p(std::exp(-x));
  }
  return x - std::log1p(std::exp(x));
}

namespace {

double sum_log(std::span<const int> team, const Vector& pi) {
  double s = 0.0;
  for (int i : team) s += std::log(pi[i]);
  return s;
}

double sum_pi(std::span<const int> team, const Vector& pi) {
  double s = 0.0;
  for (int i : team) s += pi[i];
  return s;
}

void check_team(std::span<const int> team, const Vector& pi) {
  if (team.empty()) throw std::invalid_argument("empty team");
  for (int i : team) {
    if (i < 0 || i >= pi.size()) throw std::out_of_range("player index out of range");
  }
}

}  // namespace

double hbt_win_prob(std::span<const int> winners, std::span<const int> losers,
                    const Vector& pi) {
  check_team(winners, pi);
  check_team(losers, pi);
  if (winners.size() == 1 && losers.size() == 1) {
    double a = pi[winners[0]], b = pi[losers[0]];
    return a / (a + b);
  }
  return logistic(sum_log(winners, pi) - sum_log(losers, pi));
}

double bt_win_prob(int i, int j, const Vector& pi) {
  if (i == j) throw std::invalid_argument("a player cannot face themselves");
  const int w[1] = {i}, l[1] = {j};
  return hbt_win_prob(w, l, pi);
}

double gbt_win_prob(std::span<const int> winners, std::span<const int> losers,
                    const Vector& pi) {
  check_team(winners, pi);
  check_team(losers, pi);
  if (winners.size() == 1 && losers.size() == 1) {
    double a = pi[winners[0]], b = pi[losers[0]];
    return a / (a + b);
  }
  double a = sum_pi(winners, pi), b = sum_pi(losers, pi);
  return a / (a + b);
}

double edge_win_prob(const DirectedHyperedge& edge, const Vector& pi, ModelKind model) {
  switch (model) {
    case ModelKind::BT:
      if (edge.winners.size() != 1 || edge.losers.size() != 1) {
        throw std::invalid_argument("BT needs singleton teams");
      }
      return bt_win_prob(edge.winners[0], edge.losers[0], pi);
    case ModelKind::HBT:
      return hbt_win_prob(edge.winners, edge.losers, pi);
    case ModelKind::GBT:
      return gbt_win_prob(edge.winners, edge.losers, pi);
  }
  throw std::logic_error("unreachable");
}

namespace {

void require_model_fits(const GameDataset& data, ModelKind model) {
  if (model == ModelKind::BT && !data.pairwise_only()) {
    throw std::invalid_argument("BT requires singleton-vs-singleton data; "
                                "project team games first or use hbt/gbt");
  }
}

}  // namespace

double log_likelihood(const GameDataset& data, const Vector& pi, ModelKind model) {
  require_model_fits(data, model);
  validate_strengths(pi, data.n);
  double ll = 0.0;
  for (const auto& e : data.edges) {
    double term;
    if (model == ModelKind::GBT) {
      double a = 0.0, b = 0.0;
      for (int i : e.winners) a += pi[i];
      for (int j : e.losers) b += pi[j];
      term = std::log(a) - std::log(a + b);
    } else {
      // BT and HBT share the log-space form; log P = log f(sum_I s - sum_J s)
      // stays finite even when the ratio itself underflows.
      double a = sum_log(e.winners, pi);
      double b = sum_log(e.losers, pi);
      term = log_logistic(a - b);
    }
    ll += e.weight * term;
  }
  return ll;
}

double log_likelihood(const Matrix& win_matrix, const Vector& pi) {
  const Eigen::Index n = win_matrix.rows();
  if (win_matrix.cols() != n) throw std::invalid_argument("win matrix must be square");
  validate_strengths(pi, static_cast<int>(n));
  double ll = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      double w = win_matrix(i, j);
      if (w == 0.0) continue;
      ll += w * (std::log(pi[i]) - std::log(pi[i] + pi[j]));
    }
  }
  return ll;
}

Vector grad_log_likelihood(const GameDataset& data, const Vector& pi, ModelKind model) {
  require_model_fits(data, model);
  validate_strengths(pi, data.n);
  Vector grad = Vector::Zero(data.n);

  for (const auto& e : data.edges) {
    if (model == ModelKind::GBT || model == ModelKind::BT) {
      double a = 0.0, b = 0.0;
      for (int i : e.winners) a += pi[i];
      for (int j : e.losers) b += pi[j];
      const double tot = a + b;
      for (int k : e.winners) {
        bool shared = std::binary_search(e.losers.begin(), e.losers.end(), k);
        if (shared) {
          grad[k] += e.weight * (b - a) / (a * tot);
        } else {
          grad[k] += e.weight * b / (a * tot);
        }
      }
      for (int k : e.losers) {
        if (std::binary_search(e.winners.begin(), e.winners.end(), k)) continue;
        grad[k] -= e.weight / tot;
      }
    } else {
      // HBT: w * P[J beats I] / pi_k with sign by side; shared members cancel.
      double a = sum_log(e.winners, pi);
      double b = sum_log(e.losers, pi);
      double p_rev = logistic(b - a);
      for (int k : e.winners) {
        if (std::binary_search(e.losers.begin(), e.losers.end(), k)) continue;
        grad[k] += e.weight * p_rev / pi[k];
      }
      for (int k : e.losers) {
        if (std::binary_search(e.winners.begin(), e.winners.end(), k)) continue;
        grad[k] -= e.weight * p_rev / pi[k];
      }
    }
  }
  return grad;
}

}  // namespace teamrank
