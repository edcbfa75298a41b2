#pragma once

#include <cstdint>
#include <random>

#include "teamrank/types.hpp"

namespace teamrank {

/// Deterministic random source for the synthetic data protocol. Built on
/// std::mt19937_64 (bit-exact per the C++ standard) with explicit mappings:
///   uniform01      = (next_u64() >> 11) * 2^-53, in [0,1)
///   uniform_below  = unbiased rejection sampling on the top of the 64-bit range
///   normal         = Box-Muller on uniform01 draws (second value cached)
/// so a seed pins the entire stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }
  double uniform01();
  std::uint64_t uniform_below(std::uint64_t bound);  // bound >= 1
  double normal();

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Mixes (base, a, b, c) into an independent stream seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c);

struct SyntheticConfig {
  int n = 0;                    // player pool size
  long m = 0;                   // number of games to draw
  std::uint64_t seed = 0;
  double split_prob_2v2 = 0.9;  // otherwise one singleton vs the rest
  int pool_per_game = 4;
};

struct SyntheticDataset {
  Vector true_strengths;  // the log-strengths s used to generate the games
  GameDataset data;
};

/// n independent standard-normal draws from the given stream.
Vector sample_strengths(int n, Rng& rng);

/// One game: pool_per_game distinct players drawn without replacement, split in
/// draw order into two halves (first half vs rest) with probability
/// split_prob_2v2, else first player vs the rest; the winning side is a
/// Bernoulli draw with the hypergraph-model probability under `strengths`.
DirectedHyperedge sample_game(const Vector& strengths, const SyntheticConfig& cfg,
                              Rng& rng);

/// Strengths plus m games from a single stream seeded with cfg.seed; byte-for-
/// byte reproducible from the config alone.
SyntheticDataset generate_dataset(const SyntheticConfig& cfg);

/// generate_dataset, retrying with seed+1 while the result leaves some player
/// without a win or a loss. The number of discarded datasets is written to
/// *regenerated when given. Throws after max_tries consecutive degenerate draws.
SyntheticDataset generate_nondegenerate(SyntheticConfig cfg, int max_tries = 100,
                                        int* regenerated = nullptr);

}  // namespace teamrank
