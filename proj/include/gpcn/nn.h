#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gpcn/matrix.h"
#include "gpcn/rng.h"

namespace gpcn {

using NodeList = std::vector<std::size_t>;

DenseMatrix relu(const DenseMatrix& m);
// 1 where x > 0, else 0 (including x == 0).
DenseMatrix relu_prime(const DenseMatrix& m);

// Row-wise softmax with max shift.
DenseMatrix softmax_rows(const DenseMatrix& m);

struct LossAndGrad {
  double loss = 0.0;
  DenseMatrix grad;  // same shape as logits; zero outside the mask
};

// Mean cross-entropy over the masked rows. Throws UsageError on an empty mask.
LossAndGrad cross_entropy_masked(const DenseMatrix& logits, std::span<const int> labels,
                                 std::span<const std::size_t> mask);

// Uniform in [-a, a] with a = sqrt(6 / (rows + cols)).
DenseMatrix glorot_init(std::size_t rows, std::size_t cols, Rng& rng);

// Weights of a K-layer network without biases. weights[k] maps layer k to
// layer k+1 and has shape layer_dims[k] x layer_dims[k+1].
struct ModelParams {
  std::vector<std::size_t> layer_dims;
  std::vector<DenseMatrix> weights;

  std::size_t num_layers() const { return weights.size(); }
  // Throws ShapeError unless the dimension chain is contiguous and K >= 1.
  void validate() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

ModelParams init_params(const std::vector<std::size_t>& layer_dims, Rng& rng);

struct AdamState {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  long step = 0;
  std::vector<DenseMatrix> first_moment;
  std::vector<DenseMatrix> second_moment;

  static AdamState For(const ModelParams& params, double learning_rate);
};

// One bias-corrected Adam update. Throws ShapeError on mismatched shapes.
void adam_step(ModelParams& params, const std::vector<DenseMatrix>& grads, AdamState& state);

}  // namespace gpcn
