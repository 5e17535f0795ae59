#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpcn/matrix.h"
#include "gpcn/nn.h"

namespace gpcn {

enum class Split : std::uint8_t { kNone, kTrain, kVal, kTest };

std::string_view to_string(Split s);
// Throws DataError on anything other than train|val|test|none.
Split parse_split(std::string_view s);

using Edge = std::pair<std::size_t, std::size_t>;

// Immutable undirected attributed graph. Edges are stored once with u < v,
// sorted; the CSR view holds both directions. Copies share the feature matrix.
class Graph {
 public:
  struct BuildStats {
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_merged = 0;
  };

  Graph() = default;

  // Symmetrizes and deduplicates `edges`, drops self-loops, validates labels,
  // splits and feature shape. Throws DataError on inconsistent input.
  static Graph Build(std::string name, std::size_t num_classes, std::vector<Edge> edges,
                     DenseMatrix features, std::vector<int> labels, std::vector<Split> splits,
                     BuildStats* stats = nullptr);

  const std::string& name() const { return name_; }
  std::size_t num_nodes() const { return labels_.size(); }
  std::size_t num_features() const { return features_->cols(); }
  std::size_t num_classes() const { return num_classes_; }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& row_offsets() const { return row_offsets_; }
  const std::vector<std::size_t>& col_indices() const { return col_indices_; }
  std::span<const std::size_t> neighbors(std::size_t u) const {
    return {col_indices_.data() + row_offsets_[u], row_offsets_[u + 1] - row_offsets_[u]};
  }
  std::size_t degree(std::size_t u) const { return row_offsets_[u + 1] - row_offsets_[u]; }
  bool has_edge(std::size_t u, std::size_t v) const;

  const DenseMatrix& features() const { return *features_; }
  std::shared_ptr<const DenseMatrix> shared_features() const { return features_; }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<Split>& splits() const { return splits_; }
  NodeList nodes_in(Split s) const;
  // True when every feature entry is exactly 0 or 1.
  bool binary_features() const;

  // Replaces the structure, keeping attributes. Used by editing and attacks.
  Graph with_edges(std::vector<Edge> edges) const;
  Graph with_features(DenseMatrix features) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void rebuild_csr();

  std::string name_;
  std::size_t num_classes_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> row_offsets_{0};
  std::vector<std::size_t> col_indices_;
  std::shared_ptr<const DenseMatrix> features_ = std::make_shared<const DenseMatrix>();
  std::vector<int> labels_;
  std::vector<Split> splits_;
};

// Canonical form of an undirected pair.
inline Edge make_edge(std::size_t u, std::size_t v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Â = D̃^{-1/2}(A + I)D̃^{-1/2} in CSR form. Columns within a row are ascending.
struct NormalizedAdjacency {
  std::size_t num_nodes = 0;
  std::vector<std::size_t> row_offsets{0};
  std::vector<std::size_t> col_indices;
  std::vector<double> values;
  // d̃ per node (degree in A + I).
  std::vector<double> degrees;

  double at(std::size_t u, std::size_t v) const;
  DenseMatrix to_dense() const;
};

NormalizedAdjacency normalize_adjacency(const Graph& g);

// Â · m. Throws ShapeError on a row-count mismatch.
DenseMatrix propagate(const NormalizedAdjacency& adj, const DenseMatrix& m);

struct LoadStats {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_merged = 0;
};

// Reads meta.json, edges.csv, features.csv, labels.csv and splits.csv.
// Throws DataError with file and line number on malformed input.
Graph load_dataset(const std::filesystem::path& dir, LoadStats* stats = nullptr);
void save_dataset(const Graph& g, const std::filesystem::path& dir);

// Induced subgraph on the largest connected component. Ties go to the
// component containing the lowest node id; surviving nodes keep their order.
Graph largest_connected_component(const Graph& g);
// Component id per node, numbered in order of each component's lowest node.
std::vector<std::size_t> connected_components(const Graph& g);

struct EdgeEdit {
  enum class Kind : std::uint8_t { kAdd, kRemove, kFeatureFlip };
  Kind kind = Kind::kAdd;
  // Edge endpoints, or (node, feature index) for a feature flip.
  std::size_t u = 0;
  std::size_t v = 0;

  static EdgeEdit Add(std::size_t u, std::size_t v) { return {Kind::kAdd, u, v}; }
  static EdgeEdit Remove(std::size_t u, std::size_t v) { return {Kind::kRemove, u, v}; }
  static EdgeEdit FlipFeature(std::size_t node, std::size_t feature) {
    return {Kind::kFeatureFlip, node, feature};
  }
  // The edit that undoes this one.
  EdgeEdit inverse() const;

  friend bool operator==(const EdgeEdit&, const EdgeEdit&) = default;
};

std::string_view to_string(EdgeEdit::Kind k);

// Applies edits in order. Throws UsageError when an edit is illegal against
// the state at its turn (duplicate add, absent remove, index out of range,
// flip on a non-binary entry).
Graph apply_edits(const Graph& g, std::span<const EdgeEdit> edits);

}  // namespace gpcn
