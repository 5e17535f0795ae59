#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gpcn/matrix.h"

namespace gpcn {

struct ConfidenceAndPrediction {
  std::vector<double> confidence;
  std::vector<int> prediction;
};

// Row max and argmax (ties to the lowest class). Throws DataError when a row
// does not sum to 1 within 1e-6.
ConfidenceAndPrediction confidences_and_predictions(const DenseMatrix& probs);

// Equal-width bins over (0, 1]: bin b covers (b/B, (b+1)/B]; the first bin
// also takes a confidence of exactly 0.
std::size_t confidence_bin(double confidence, std::size_t num_bins);

struct ReliabilityBin {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
  // Zero for empty bins.
  double mean_confidence = 0.0;
  double mean_accuracy = 0.0;
};

struct CalibrationReport {
  double ece = 0.0;
  double mce = 0.0;
  std::vector<ReliabilityBin> bins;
  std::vector<std::size_t> histogram;
};

// ECE = Σ n_b/N |acc_b − conf_b|, MCE = max over nonempty bins.
// Throws UsageError for B == 0 or an empty mask.
CalibrationReport expected_calibration_error(const DenseMatrix& probs, std::span<const int> labels,
                                             std::span<const std::size_t> mask,
                                             std::size_t num_bins = 10);

// Same statistics from precomputed confidence / correctness pairs.
CalibrationReport calibration_from_samples(std::span<const double> confidence,
                                           std::span<const bool> correct, std::size_t num_bins);

struct MarginRecord {
  std::size_t node = 0;
  // p(true class) − max over the other classes.
  double margin = 0.0;
  bool correct = false;
};

std::vector<MarginRecord> classification_margins(const DenseMatrix& probs, std::span<const int> labels,
                                                 std::span<const std::size_t> mask);

std::vector<std::size_t> confidence_histogram(const DenseMatrix& probs, std::span<const std::size_t> mask,
                                              std::size_t num_bins = 10);

}  // namespace gpcn
