#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gpcn/attacks.h"
#include "gpcn/calibration.h"
#include "gpcn/gcn.h"
#include "gpcn/graph.h"
#include "gpcn/pc.h"
#include "gpcn/synthetic.h"

namespace gpcn {

enum class ModelKind : std::uint8_t { kGcn, kGpcn };
std::string_view to_string(ModelKind m);
ModelKind parse_model_kind(std::string_view s);
// random_1000 | nettack.
VictimStrategy parse_victim_strategy(std::string_view s);

// Either a dataset directory or a synthetic generator run.
struct DatasetSource {
  std::filesystem::path path;
  std::optional<SyntheticSpec> synthetic;
  std::uint64_t synthetic_seed = 0;
  bool lcc = false;
};

// Parses a SyntheticSpec object. "preset" (sbm_fixture | cora_like) selects
// the base; the remaining keys override its fields. Throws UsageError.
SyntheticSpec synthetic_spec_from_json(const std::string& json_text);

struct AttackOptions {
  AttackKind kind = AttackKind::kFgaStructure;
  AttackMode mode = AttackMode::kEvasion;
  // FGA edit budgets, or perturbation rates for random_global.
  std::vector<double> budgets{1, 2, 3, 4, 5};
  VictimStrategy victims = VictimStrategy::kRandom1000;
  std::size_t influencer_count = 5;
};

struct ExperimentConfig {
  DatasetSource dataset;
  ModelKind model = ModelKind::kGcn;
  // Unset values take the command default: 300 epochs at lr 0.001 for
  // training and calibration, 200 epochs at lr 0.01 for attacks.
  std::optional<std::size_t> epochs;
  std::optional<double> lr;
  std::vector<std::size_t> hidden_dims{16};
  std::size_t inference_steps = 12;
  double value_update_rate = 0.1;
  WeightUpdateTiming weight_update_timing = WeightUpdateTiming::kEndOfInference;
  PCMode pc_mode = PCMode::kInterLayer;
  std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4};
  std::size_t bins = 10;
  AttackOptions attack;
  std::filesystem::path out = "results";

  // Throws UsageError on empty or repeated seeds and invalid values.
  void validate() const;
};

// Relative dataset paths resolve against `base_dir`. Unknown keys are
// rejected. Throws UsageError.
ExperimentConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& file);
// Canonical JSON of the resolved config, without seeds and output directory.
std::string config_to_json(const ExperimentConfig& config);
// FNV-1a of config_to_json, as 16 hex digits.
std::string config_hash(const ExperimentConfig& config);

Graph load_experiment_dataset(const DatasetSource& source);

enum class CommandDefaults : std::uint8_t { kCalibration, kAttack };
TrainConfig resolve_train_config(const ExperimentConfig& config, std::uint64_t seed, CommandDefaults defaults);
PCConfig resolve_pc_config(const ExperimentConfig& config, std::uint64_t seed, CommandDefaults defaults);

struct Checkpoint {
  ModelKind model = ModelKind::kGcn;
  ModelParams params;
  std::uint64_t seed = 0;
  std::size_t selected_epoch = 0;
  TrainConfig train;
  // Predictive coding only.
  std::optional<PCConfig> pc;
  double final_energy = 0.0;
};

void save_checkpoint(const Checkpoint& ckpt, const std::filesystem::path& file);
// Throws DataError on malformed files.
Checkpoint load_checkpoint(const std::filesystem::path& file);

struct RunRecord {
  ModelKind model = ModelKind::kGcn;
  std::uint64_t seed = 0;
  std::string config_hash;
  std::size_t selected_epoch = 0;
  double train_accuracy = 0.0;
  double val_accuracy = 0.0;
  double test_accuracy = 0.0;
  double ece = 0.0;
  double mce = 0.0;
  // Inference energy of the selected epoch; predictive coding only.
  std::optional<double> final_energy;
  std::string checkpoint;
  double wall_seconds = 0.0;
  // Selected parameters, kept for in-process callers.
  ModelParams params;
};

// Trains one model for one seed and scores it on the test split.
RunRecord run_single(const ExperimentConfig& config, const Graph& graph, std::uint64_t seed,
                     CommandDefaults defaults);

// Runs fn(0..count-1) on at most GPCN_THREADS threads (default: hardware
// concurrency). Exceptions propagate after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);
std::size_t worker_count();

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};
// Population standard deviation. Throws UsageError on an empty input.
MeanStd mean_std(const std::vector<double>& xs);
// Rank correlation with average ranks for ties; 0 when either side is constant.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

// Trains every seed, writes OUT/checkpoints/<model>_seed<N>.json and
// OUT/runs.csv. Records come back in seed order.
std::vector<RunRecord> cmd_train(const ExperimentConfig& config);
void write_runs_csv(const std::vector<RunRecord>& runs, const std::filesystem::path& file);

// Writes bins.csv, histogram.csv, report.json and margins.csv for `mask`.
CalibrationReport write_calibration_outputs(const DenseMatrix& probs, const Graph& graph,
                                            const NodeList& mask, std::size_t bins, std::uint64_t seed,
                                            const std::string& condition, const std::filesystem::path& out);
// Throws DataError when the checkpoint does not fit the dataset.
CalibrationReport cmd_calibrate(const std::filesystem::path& checkpoint, const std::filesystem::path& data,
                                std::size_t bins, const std::filesystem::path& out);

struct RobustnessRow {
  std::string dataset;
  ModelKind model = ModelKind::kGcn;
  AttackKind kind = AttackKind::kFgaStructure;
  AttackMode mode = AttackMode::kEvasion;
  double budget = 0.0;
  std::uint64_t seed = 0;
  double accuracy = 0.0;
  std::optional<double> holistic_metric;
};

struct AttackOutput {
  std::vector<RobustnessRow> rows;
  // Per seed, in seed order.
  std::vector<RobustnessReport> reports;
};

// Per seed: trains a clean model, selects victims (the test split for
// random_global), runs the attack and writes OUT/robustness.csv and
// OUT/margins.csv.
AttackOutput cmd_attack(const ExperimentConfig& config);

struct StudyRow {
  std::size_t inference_steps = 0;
  std::uint64_t seed = 0;
  double energy = 0.0;
  double ece = 0.0;
  double mce = 0.0;
  double test_accuracy = 0.0;
};

// Requires model gpcn. One row per (T, seed), T-major, into OUT/study.csv.
std::vector<StudyRow> cmd_energy_study(const ExperimentConfig& config, const std::vector<std::size_t>& t_grid);

void cmd_dataset_gen(const std::filesystem::path& spec_file, std::uint64_t seed, const std::filesystem::path& out);
void cmd_dataset_inspect(const std::filesystem::path& dir, std::ostream& os);
void cmd_dataset_lcc(const std::filesystem::path& dir, const std::filesystem::path& out);

// Column documentation for --help.
std::string output_schema_help();

}  // namespace gpcn
