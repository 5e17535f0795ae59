#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpcn/calibration.h"
#include "gpcn/graph.h"
#include "gpcn/nn.h"

namespace gpcn {

enum class AttackKind : std::uint8_t { kRandomGlobal, kFgaStructure, kFgaFeature, kFgaBoth, kFgaIndirect };
enum class AttackMode : std::uint8_t { kEvasion, kPoisoning };

std::string_view to_string(AttackKind k);
std::string_view to_string(AttackMode m);
// Throw UsageError on unknown names.
AttackKind parse_attack_kind(std::string_view s);
AttackMode parse_attack_mode(std::string_view s);

struct AttackSpec {
  AttackKind kind = AttackKind::kFgaStructure;
  AttackMode mode = AttackMode::kEvasion;
  // Edit budget for the gradient attacks.
  std::size_t budget = 1;
  // Fraction of |E| inserted by random_global.
  double ptb_rate = 0.0;
  std::size_t influencer_count = 5;
  std::uint64_t seed = 0;

  bool uses_structure() const;
  bool uses_features() const;
  void validate() const;
};

enum class VictimTag : std::uint8_t { kHighMargin, kLowMargin, kRandom, kRandomValTest };
std::string_view to_string(VictimTag t);

struct VictimSet {
  NodeList nodes;
  std::vector<VictimTag> tags;
};

enum class VictimStrategy : std::uint8_t {
  // 10 highest- and 10 lowest-margin correctly classified test nodes, then
  // random test nodes up to 40.
  kNettackStyle,
  // 1000 nodes drawn uniformly without replacement from val ∪ test.
  kRandom1000,
};

// Throws UsageError when the candidate pool is empty.
VictimSet select_victims(const Graph& graph, const DenseMatrix& probs, VictimStrategy strategy,
                         std::uint64_t seed);

// Inserts ⌊rate·|E|⌋ distinct absent edges chosen uniformly. Throws
// UsageError on a negative rate or when too few absent pairs remain.
Graph random_global_poison(const Graph& graph, double ptb_rate, std::uint64_t seed);

// Gradient of one node's cross-entropy with respect to the raw adjacency
// and features, with the normalization coefficients frozen at the current
// degrees: ∂L/∂A_uv = c_uv (∂L/∂Â_uv + ∂L/∂Â_vu), c_uv = 1/sqrt(d̃_u d̃_v).
class InputGradient {
 public:
  double loss() const { return loss_; }
  std::size_t target() const { return target_; }
  // Symmetric: adjacency(u, v) == adjacency(v, u). Entries on the diagonal
  // are not edges and return 0.
  double adjacency(std::size_t u, std::size_t v) const;
  double feature(std::size_t node, std::size_t feature) const;
  // Nodes whose adjacency row may be nonzero; every pair with a nonzero
  // gradient touches one of them.
  const NodeList& structure_rows() const { return structure_rows_; }
  // Nodes whose feature row may be nonzero.
  const NodeList& feature_rows() const { return feature_rows_; }

  DenseMatrix dense_adjacency() const;
  DenseMatrix dense_features() const;

 private:
  friend class AttackSurface;
  static constexpr std::size_t kNoSlot = static_cast<std::size_t>(-1);

  std::size_t num_nodes_ = 0;
  std::size_t target_ = 0;
  double loss_ = 0.0;
  std::vector<double> degrees_;
  // Per layer k: G_k = ∂L/∂(Â M_k) and M_k = H_{k-1} W_k.
  std::vector<DenseMatrix> upstream_;
  std::vector<DenseMatrix> messages_;
  // (Â G_1) W_1ᵀ rows, indexed through feature_slot_.
  DenseMatrix feature_grad_;
  std::vector<std::size_t> feature_slot_;
  NodeList structure_rows_;
  NodeList feature_rows_;
};

// Throws UsageError for an untrained (empty) model or a bad target.
InputGradient loss_gradient_wrt_inputs(const ModelParams& params, const Graph& graph, std::size_t target);

struct FgaResult {
  std::vector<EdgeEdit> edits;
  // True when the attack stopped early because no legal move was left.
  bool exhausted = false;
  // Victim margin under the fixed model after each edit (size = edits).
  std::vector<double> margins;
  std::vector<bool> correct;
};

// Greedy gradient attack on one victim. Each step recomputes the gradient on
// the edited graph and applies the legal move with the largest
// loss-increasing first-order score grad·(1 − 2x); pairs and feature entries
// are toggled at most once. When no move increases the loss the best
// remaining one is taken. Indirect attacks fix the influencer set from the
// clean gradient and never touch edges incident to the victim.
FgaResult fga_attack(const ModelParams& params, const Graph& graph, std::size_t victim, const AttackSpec& spec);

struct BudgetAccuracy {
  double budget = 0.0;
  double accuracy = 0.0;
};

struct MarginShift {
  std::size_t node = 0;
  double budget = 0.0;
  double margin_before = 0.0;
  double margin_after = 0.0;
  bool correct_after = false;
};

struct RobustnessReport {
  AttackKind kind = AttackKind::kFgaStructure;
  AttackMode mode = AttackMode::kEvasion;
  std::vector<BudgetAccuracy> results;
  std::vector<MarginShift> margins;
  // Victims whose attack ran out of legal moves before the largest budget.
  std::size_t exhausted = 0;
  // Σ q·p_q over q = 1..5, present when all five budgets were evaluated.
  std::optional<double> holistic_metric;
};

// Σ q·p_q over q = 1..5; nullopt unless each of those budgets appears.
std::optional<double> holistic_metric(const std::vector<BudgetAccuracy>& results);

// Retrains a model from scratch on the given graph.
using Trainer = std::function<ModelParams(const Graph&)>;

// Evasion: attack and re-predict with `clean_params`. Poisoning: attack with
// `clean_params` as the surrogate, retrain on each perturbed graph and
// predict. For random_global the budgets are perturbation rates and the
// accuracy is measured over all victims on one poisoned graph per rate.
// Budget 0 reproduces the clean model.
RobustnessReport evaluate_attack(const Trainer& trainer, const ModelParams& clean_params, const Graph& graph,
                                 const NodeList& victims, const AttackSpec& spec,
                                 const std::vector<double>& budgets);

struct MarginShiftRow {
  std::size_t node = 0;
  double margin_before = 0.0;
  double margin_after = 0.0;
  std::string model;
  double budget = 0.0;
  std::uint64_t seed = 0;
};

// Pairs clean and attacked margins per victim. Throws ShapeError when the
// sequences differ in length or node order.
std::vector<MarginShiftRow> margin_shift_export(const std::vector<MarginRecord>& before,
                                                const std::vector<MarginRecord>& after, const std::string& model,
                                                double budget, std::uint64_t seed);

}  // namespace gpcn
