#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "emgkit/features.hpp"

namespace emgkit {

struct TreeHyperparams {
  int n_trees = 100;
  int max_depth = 0;          // 0 = unlimited
  int min_samples_split = 2;
  int max_features = 0;       // 0 = ceil(sqrt(d))
};

enum class ForestKind { decision_tree, random_forest, extra_trees };

const char* forest_kind_name(ForestKind kind);
ForestKind forest_kind_from_name(const std::string& name);

/// Flat-array tree node. feature < 0 marks a leaf. Children of a split
/// partition its samples: counts at both sides are >= 1 and sum to n_samples.
struct TreeNode {
  int feature = -1;
  double threshold = 0.0;
  std::int32_t left = -1;
  std::int32_t right = -1;
  double impurity_decrease = 0.0;         // parent gini minus weighted child ginis
  std::int64_t n_samples = 0;
  std::vector<std::int64_t> class_counts;  // leaves only, per class slot

  bool is_leaf() const { return feature < 0; }
};

struct Tree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
};

struct Forest {
  ForestKind kind = ForestKind::decision_tree;
  TreeHyperparams hyperparams;
  std::uint64_t seed = 0;
  std::vector<int> class_labels;           // sorted distinct training labels
  std::vector<std::string> feature_names;  // training column schema
  std::vector<Tree> trees;

  bool fitted() const { return !trees.empty(); }
  int n_features() const { return static_cast<int>(feature_names.size()); }
};

/// 1 - sum(p_k^2) over class proportions. Total count must be >= 1.
double gini_impurity(const std::vector<std::int64_t>& class_counts);

/// Growth knobs behind the three fit entry points; exposed so tests can cross
/// the algorithms (e.g. extra trees with exhaustive thresholds reduces to the
/// plain decision tree).
struct GrowthOptions {
  bool bootstrap = false;          // sample n rows with replacement per tree
  bool random_thresholds = false;  // one uniform threshold in [min, max) per feature
  bool all_features = false;       // consider every feature at every node
};

Forest fit_forest(const FeatureMatrix& m, ForestKind kind, const TreeHyperparams& hp,
                  std::uint64_t seed, const GrowthOptions& options);

/// Greedy CART: exhaustive midpoint threshold search over all features.
Forest fit_decision_tree(const FeatureMatrix& m, const TreeHyperparams& hp = {});

/// Bootstrap rows per tree, random feature subset per node, exhaustive
/// threshold search among the candidates.
Forest fit_random_forest(const FeatureMatrix& m, const TreeHyperparams& hp = {},
                         std::uint64_t seed = 0);

/// No bootstrap; random feature subset and one uniform random threshold per
/// candidate, keeping the best impurity reduction.
Forest fit_extra_trees(const FeatureMatrix& m, const TreeHyperparams& hp = {},
                       std::uint64_t seed = 0);

/// Majority vote over per-tree leaf majorities; ties break to the smallest
/// label code.
std::vector<int> predict(const Forest& f, const Eigen::Ref<const Eigen::MatrixXd>& rows);
int predict_row(const Forest& f, const Eigen::Ref<const Eigen::RowVectorXd>& row);

/// Normalized mean impurity importances.
struct ImportanceRanking {
  std::vector<std::string> names;  // schema order
  Eigen::VectorXd scores;          // schema order; sums to 1 unless empty
  std::vector<int> order;          // feature indices, descending score
  bool empty = false;              // no split anywhere in the forest
};

ImportanceRanking feature_importances(const Forest& f);

}  // namespace emgkit
