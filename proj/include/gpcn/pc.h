#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gpcn/gcn.h"
#include "gpcn/graph.h"
#include "gpcn/matrix.h"
#include "gpcn/nn.h"

namespace gpcn {

enum class PCMode : std::uint8_t {
  // Value nodes predicted from the layer below through Â f(h) W.
  kInterLayer,
  // Adds a predictive-coding stage on the neighbourhood aggregate: each layer
  // keeps an aggregate state h_N predicted by Â f(h), and the layer itself is
  // predicted by h_N W.
  kIntraLayer,
};

enum class WeightUpdateTiming : std::uint8_t { kEndOfInference, kEveryStep };

// Latent state of a layered predictive-coding network. Per-layer vectors are
// indexed by layer k in [0, K]; entries at k = 0 are unused except `input`.
struct PCState {
  PCMode mode = PCMode::kInterLayer;
  const DenseMatrix* input = nullptr;  // h_0, always clamped; not owned
  std::vector<DenseMatrix> values;        // h_k
  std::vector<DenseMatrix> predictions;   // μ_k
  std::vector<DenseMatrix> errors;        // ε_k = h_k − μ_k
  // Intra-layer mode only.
  std::vector<DenseMatrix> aggregates;             // h_N,k
  std::vector<DenseMatrix> aggregate_predictions;  // μ_agg,k
  std::vector<DenseMatrix> aggregate_errors;       // ε_agg,k
  // Output rows fixed to targets. While any row is clamped, output errors of
  // unclamped rows are excluded from the energy.
  std::vector<std::uint8_t> output_clamped;
  bool output_clamp_active = false;
  double energy = 0.0;
  std::size_t step = 0;

  std::size_t num_layers() const { return values.size() - 1; }
  const DenseMatrix& value(std::size_t k) const { return k == 0 ? *input : values[k]; }
  const DenseMatrix& output() const { return values.back(); }
  // Output error with the clamping mask applied.
  DenseMatrix masked_output_error() const;
};

// Recomputes μ, ε (and the aggregate terms in intra-layer mode) and the
// energy from the current values and weights.
void pc_predictions(const NormalizedAdjacency& adj, PCState& state, const ModelParams& params);

// Value nodes set layer by layer to their predictions, so every error and
// the energy are zero. The state keeps a pointer to `features`.
PCState pc_init_feedforward(const NormalizedAdjacency& adj, const DenseMatrix& features,
                            const ModelParams& params, PCMode mode = PCMode::kInterLayer);

// Fixes output row rows[i] to targets.row(i) and marks it clamped.
void clamp_output(PCState& state, std::span<const std::size_t> rows, const DenseMatrix& targets);
// clamp_output with one-hot(label) targets on the rows of `train_mask`.
void clamp_targets(PCState& state, std::span<const int> labels, std::span<const std::size_t> train_mask);

// F = ½ Σ ‖ε‖² under the output masking rule, plus ½ Σ ‖ε_agg‖² in
// intra-layer mode.
double compute_energy(const PCState& state);

// ∂F/∂h_k for k in [1, K] (index 0 empty). Clamped output rows get zero.
struct ValueGradients {
  std::vector<DenseMatrix> values;
  std::vector<DenseMatrix> aggregates;  // intra-layer mode only
};
ValueGradients pc_value_gradients(const NormalizedAdjacency& adj, const PCState& state,
                                  const ModelParams& params);

// One inter-layer inference step: h_k += γ(−ε_k + f'(h_k) ⊙ Â ε_{k+1} W_{k+1}ᵀ)
// on free entries, then predictions are recomputed.
void inference_step(const NormalizedAdjacency& adj, PCState& state, const ModelParams& params,
                    double gamma);

// One intra-layer inference step on both h and h_N.
void intra_layer_step(const NormalizedAdjacency& adj, PCState& state, const ModelParams& params,
                      double gamma);

// ∂F/∂W_k with values held fixed; descending it lowers the energy.
std::vector<DenseMatrix> pc_weight_gradients(const NormalizedAdjacency& adj, const PCState& state);

struct PCConfig {
  std::size_t inference_steps = 12;
  double value_update_rate = 0.1;
  double weight_lr = 1e-3;
  WeightUpdateTiming weight_update_timing = WeightUpdateTiming::kEndOfInference;
  std::size_t epochs = 300;
  std::uint64_t seed = 0;
  PCMode mode = PCMode::kInterLayer;
  std::vector<std::size_t> hidden_dims{16};

  void validate() const;
};

// Per epoch: feedforward init, clamp train targets, T inference steps, Adam
// weight updates on the energy gradient. EpochRecord::energy holds the energy
// after the last inference step. Selection keeps the best validation
// accuracy, ties to the lower energy, then to the earlier epoch.
TrainResult train_pc(const Graph& graph, const PCConfig& config);

// softmax of the feedforward output layer.
DenseMatrix pc_predict(const NormalizedAdjacency& adj, const DenseMatrix& features,
                       const ModelParams& params);

}  // namespace gpcn
