#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpcn/graph.h"

namespace gpcn {

enum class FeatureMode : std::uint8_t {
  // one-hot(block) in the first num_blocks columns plus Gaussian noise.
  kGaussian,
  // Binary bag of words: each block owns a topic vocabulary; every node draws
  // words_per_node words, each from its block topic with probability
  // topic_fraction and uniformly from the whole vocabulary otherwise.
  kBinaryWords,
};

// Stochastic block model description. The optional fields default to the
// plain model: equal block sizes, uniform degrees, Gaussian features and
// fraction-based splits.
struct SyntheticSpec {
  std::string name = "sbm";
  std::size_t num_blocks = 2;
  std::size_t nodes_per_block = 50;
  double intra_block_edge_prob = 0.2;
  double inter_block_edge_prob = 0.01;
  std::size_t feature_dim = 2;
  double feature_noise_std = 0.1;
  double train_fraction = 0.2;
  double val_fraction = 0.2;
  double test_fraction = 0.6;

  // Overrides num_blocks x nodes_per_block when nonempty.
  std::vector<std::size_t> block_sizes;
  // Pareto tail index of per-node degree propensities (degree-corrected
  // SBM); 0 disables the correction.
  double degree_tail = 0.0;
  FeatureMode feature_mode = FeatureMode::kGaussian;
  std::size_t words_per_node = 18;
  std::size_t topic_words = 120;
  double topic_fraction = 0.3;
  // Planetoid-style split when > 0: this many train nodes per class, then
  // val_count and test_count nodes drawn from the rest.
  std::size_t train_per_class = 0;
  std::size_t val_count = 0;
  std::size_t test_count = 0;

  std::vector<std::size_t> sizes() const;
  // Throws UsageError on invalid probabilities, fractions or sizes.
  void validate() const;
};

Graph generate_synthetic(const SyntheticSpec& spec, std::uint64_t seed);

// Two 50-node blocks, intra 0.2, inter 0.01, noise 0.1.
SyntheticSpec sbm_fixture_spec();
// Citation-graph-scale stand-in: 2708 nodes in 7 unequal blocks, ~5.3k
// edges, 1433 binary word features, 20 train nodes per class, 500 val,
// 1000 test.
SyntheticSpec cora_like_spec();

}  // namespace gpcn
