#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gpcn/graph.h"
#include "gpcn/matrix.h"
#include "gpcn/nn.h"

namespace gpcn {

// Intermediate values of a forward pass. pre_activations[k] = Â H_k W_k and
// activations[k] = f(pre_activations[k]), with f = ReLU on hidden layers and
// identity on the output layer; H_0 is the input, referenced by `input`.
struct ForwardCache {
  const DenseMatrix* input = nullptr;  // not owned
  std::vector<DenseMatrix> pre_activations;
  std::vector<DenseMatrix> activations;

  const DenseMatrix& logits() const { return activations.back(); }
  // H_k for k in [0, K]; H_0 is the input.
  const DenseMatrix& layer_input(std::size_t k) const { return k == 0 ? *input : activations[k - 1]; }
};

// The cache keeps a pointer to `features`, which must outlive it.
ForwardCache gcn_forward(const NormalizedAdjacency& adj, const DenseMatrix& features,
                         const ModelParams& params);

// Weight gradients for the loss whose gradient w.r.t. the logits is
// `grad_logits`.
std::vector<DenseMatrix> gcn_backward(const NormalizedAdjacency& adj, const ForwardCache& cache,
                                      const DenseMatrix& grad_logits, const ModelParams& params);

// softmax of the forward logits.
DenseMatrix predict(const NormalizedAdjacency& adj, const DenseMatrix& features,
                    const ModelParams& params);

// Row argmax, ties to the lowest index.
std::vector<int> argmax_rows(const DenseMatrix& m);
// Fraction of `mask` whose row argmax equals the label; 0 for an empty mask.
double masked_accuracy(const DenseMatrix& scores, std::span<const int> labels,
                       std::span<const std::size_t> mask);

struct TrainConfig {
  std::size_t epochs = 300;
  double weight_lr = 1e-3;
  std::uint64_t seed = 0;
  std::vector<std::size_t> hidden_dims{16};

  void validate() const;
};

struct EpochRecord {
  double train_loss = 0.0;
  // Final inference energy of the epoch (predictive coding only, else 0).
  double energy = 0.0;
  double train_accuracy = 0.0;
  double val_accuracy = 0.0;
  double test_accuracy = 0.0;

  friend bool operator==(const EpochRecord&, const EpochRecord&) = default;
};

struct TrainHistory {
  std::vector<EpochRecord> epochs;
  std::size_t selected_epoch = 0;

  const EpochRecord& selected() const { return epochs.at(selected_epoch); }
  friend bool operator==(const TrainHistory&, const TrainHistory&) = default;
};

struct TrainResult {
  ModelParams params;
  TrainHistory history;
};

std::vector<std::size_t> layer_dims_for(const Graph& g, const std::vector<std::size_t>& hidden_dims);

// Full-batch Adam on the masked cross-entropy of the train split. Returns the
// snapshot with the best validation accuracy (earliest epoch on ties).
// Throws UsageError on empty train or val splits, NumericError on a
// non-finite loss.
TrainResult train_bp(const Graph& graph, const TrainConfig& config);

}  // namespace gpcn
