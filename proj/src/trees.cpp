#include "emgkit/trees.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "emgkit/parallel.hpp"
#include "emgkit/rng.hpp"

namespace emgkit {

const char* forest_kind_name(ForestKind kind) {
  switch (kind) {
    case ForestKind::decision_tree: return "decision_tree";
    case ForestKind::random_forest: return "random_forest";
    case ForestKind::extra_trees: return "extra_trees";
  }
  return "unknown";
}

ForestKind forest_kind_from_name(const std::string& name) {
  if (name == "decision_tree") return ForestKind::decision_tree;
  if (name == "random_forest") return ForestKind::random_forest;
  if (name == "extra_trees") return ForestKind::extra_trees;
  raise(ErrorCode::invalid_params, "unknown forest kind '" + name + "'");
}

double gini_impurity(const std::vector<std::int64_t>& class_counts) {
  std::int64_t total = 0;
  for (auto c : class_counts) total += c;
  if (total <= 0) raise(ErrorCode::empty_node, "gini of an empty node");
  double sum_sq = 0.0;
  for (auto c : class_counts) {
    const double p = static_cast<double>(c) / static_cast<double>(total);
    sum_sq += p * p;
  }
  return 1.0 - sum_sq;
}

namespace {

double gini_of(const std::vector<std::int64_t>& counts, std::int64_t total) {
  double sum_sq = 0.0;
  for (auto c : counts) {
    const double p = static_cast<double>(c) / static_cast<double>(total);
    sum_sq += p * p;
  }
  return 1.0 - sum_sq;
}

struct BestSplit {
  int feature = -1;
  double threshold = 0.0;
  double decrease = -1.0;

  bool valid() const { return feature >= 0; }
};

class TreeGrower {
 public:
  TreeGrower(const Eigen::MatrixXd& x, const std::vector<int>& slots, int n_classes,
             const TreeHyperparams& hp, const GrowthOptions& options,
             std::mt19937_64 rng)
      : x_(x),
        slots_(slots),
        n_classes_(n_classes),
        hp_(hp),
        options_(options),
        rng_(rng),
        feature_pool_(static_cast<std::size_t>(x.cols())) {
    std::iota(feature_pool_.begin(), feature_pool_.end(), 0);
  }

  Tree grow() {
    const auto n = static_cast<Eigen::Index>(x_.rows());
    rows_.resize(static_cast<std::size_t>(n));
    if (options_.bootstrap) {
      for (auto& r : rows_)
        r = static_cast<int>(rng_index(rng_, static_cast<std::uint64_t>(n)));
    } else {
      std::iota(rows_.begin(), rows_.end(), 0);
    }

    Tree tree;
    struct Work {
      std::int32_t node;
      std::size_t begin, end;
      int depth;
    };
    std::vector<Work> stack;
    tree.nodes.emplace_back();
    stack.push_back({0, 0, rows_.size(), 0});

    while (!stack.empty()) {
      const Work w = stack.back();
      stack.pop_back();
      const std::int64_t n_node = static_cast<std::int64_t>(w.end - w.begin);

      std::vector<std::int64_t> counts(static_cast<std::size_t>(n_classes_), 0);
      for (std::size_t i = w.begin; i < w.end; ++i)
        ++counts[static_cast<std::size_t>(slots_[static_cast<std::size_t>(rows_[i])])];
      const double node_gini = gini_of(counts, n_node);

      TreeNode& node = tree.nodes[static_cast<std::size_t>(w.node)];
      node.n_samples = n_node;

      const bool pure =
          *std::max_element(counts.begin(), counts.end()) == n_node;
      const bool depth_capped = hp_.max_depth > 0 && w.depth >= hp_.max_depth;
      BestSplit best;
      if (!pure && !depth_capped && n_node >= hp_.min_samples_split)
        best = find_split(w.begin, w.end, counts, node_gini);

      if (!best.valid()) {
        node.feature = -1;
        node.class_counts = std::move(counts);
        continue;
      }

      const std::size_t mid = partition_rows(w.begin, w.end, best);
      node.feature = best.feature;
      node.threshold = best.threshold;
      node.impurity_decrease = std::max(0.0, best.decrease);
      node.left = static_cast<std::int32_t>(tree.nodes.size());
      node.right = node.left + 1;
      const std::int32_t left = node.left, right = node.right;
      tree.nodes.emplace_back();
      tree.nodes.emplace_back();
      stack.push_back({right, mid, w.end, w.depth + 1});
      stack.push_back({left, w.begin, mid, w.depth + 1});
    }
    return tree;
  }

 private:
  BestSplit find_split(std::size_t begin, std::size_t end,
                       const std::vector<std::int64_t>& node_counts,
                       double node_gini) {
    const int d = static_cast<int>(x_.cols());
    int n_candidates = d;
    if (!options_.all_features) {
      int mf = hp_.max_features > 0
                   ? hp_.max_features
                   : static_cast<int>(std::ceil(std::sqrt(static_cast<double>(d))));
      n_candidates = std::min(mf, d);
    }

    // Uniform sample without replacement, then ascending order so that the
    // lowest-feature-index tie rule is scheduling-independent.
    if (n_candidates < d) {
      for (int i = 0; i < n_candidates; ++i) {
        const auto j = static_cast<std::size_t>(i) +
                       static_cast<std::size_t>(rng_index(
                           rng_, static_cast<std::uint64_t>(d - i)));
        std::swap(feature_pool_[static_cast<std::size_t>(i)], feature_pool_[j]);
      }
      candidates_.assign(feature_pool_.begin(), feature_pool_.begin() + n_candidates);
      std::sort(candidates_.begin(), candidates_.end());
    } else {
      candidates_.resize(static_cast<std::size_t>(d));
      std::iota(candidates_.begin(), candidates_.end(), 0);
    }

    BestSplit best;
    for (int f : candidates_) {
      if (options_.random_thresholds)
        consider_random_threshold(f, begin, end, node_counts, node_gini, best);
      else
        consider_exhaustive(f, begin, end, node_counts, node_gini, best);
    }
    return best;
  }

  void consider_exhaustive(int f, std::size_t begin, std::size_t end,
                           const std::vector<std::int64_t>& node_counts,
                           double node_gini, BestSplit& best) {
    const std::int64_t n = static_cast<std::int64_t>(end - begin);
    sorted_.clear();
    sorted_.reserve(static_cast<std::size_t>(n));
    for (std::size_t i = begin; i < end; ++i) {
      const int row = rows_[i];
      sorted_.emplace_back(x_(row, f), slots_[static_cast<std::size_t>(row)]);
    }
    std::sort(sorted_.begin(), sorted_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (sorted_.front().first == sorted_.back().first) return;  // constant at node

    left_counts_.assign(static_cast<std::size_t>(n_classes_), 0);
    right_counts_ = node_counts;
    for (std::int64_t i = 0; i < n - 1; ++i) {
      const auto& [value, slot] = sorted_[static_cast<std::size_t>(i)];
      ++left_counts_[static_cast<std::size_t>(slot)];
      --right_counts_[static_cast<std::size_t>(slot)];
      const double next = sorted_[static_cast<std::size_t>(i) + 1].first;
      if (!(next > value)) continue;
      double threshold = value + (next - value) / 2.0;
      if (!(threshold > value)) threshold = next;  // adjacent doubles
      const std::int64_t nl = i + 1, nr = n - nl;
      const double decrease =
          node_gini - (static_cast<double>(nl) / static_cast<double>(n)) *
                          gini_of(left_counts_, nl) -
          (static_cast<double>(nr) / static_cast<double>(n)) *
              gini_of(right_counts_, nr);
      if (decrease > best.decrease) best = {f, threshold, decrease};
    }
  }

  void consider_random_threshold(int f, std::size_t begin, std::size_t end,
                                 const std::vector<std::int64_t>& node_counts,
                                 double node_gini, BestSplit& best) {
    double lo = x_(rows_[begin], f), hi = lo;
    for (std::size_t i = begin + 1; i < end; ++i) {
      const double v = x_(rows_[i], f);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (!(hi > lo)) return;  // constant feature: empty threshold interval
    const double threshold = lo + rng_real(rng_) * (hi - lo);
    if (!(threshold > lo) || !(threshold < hi)) return;  // rounding at the ends

    left_counts_.assign(static_cast<std::size_t>(n_classes_), 0);
    std::int64_t nl = 0;
    for (std::size_t i = begin; i < end; ++i) {
      const int row = rows_[i];
      if (x_(row, f) < threshold) {
        ++left_counts_[static_cast<std::size_t>(slots_[static_cast<std::size_t>(row)])];
        ++nl;
      }
    }
    const std::int64_t n = static_cast<std::int64_t>(end - begin);
    const std::int64_t nr = n - nl;
    if (nl == 0 || nr == 0) return;
    right_counts_ = node_counts;
    for (std::size_t k = 0; k < right_counts_.size(); ++k)
      right_counts_[k] -= left_counts_[k];
    const double decrease =
        node_gini -
        (static_cast<double>(nl) / static_cast<double>(n)) * gini_of(left_counts_, nl) -
        (static_cast<double>(nr) / static_cast<double>(n)) * gini_of(right_counts_, nr);
    if (decrease > best.decrease) best = {f, threshold, decrease};
  }

  std::size_t partition_rows(std::size_t begin, std::size_t end, const BestSplit& s) {
    auto it = std::partition(rows_.begin() + static_cast<std::ptrdiff_t>(begin),
                             rows_.begin() + static_cast<std::ptrdiff_t>(end),
                             [&](int row) { return x_(row, s.feature) < s.threshold; });
    return static_cast<std::size_t>(it - rows_.begin());
  }

  const Eigen::MatrixXd& x_;
  const std::vector<int>& slots_;
  int n_classes_;
  TreeHyperparams hp_;
  GrowthOptions options_;
  std::mt19937_64 rng_;
  std::vector<int> rows_;
  std::vector<int> feature_pool_;
  std::vector<int> candidates_;
  std::vector<std::pair<double, int>> sorted_;
  std::vector<std::int64_t> left_counts_;
  std::vector<std::int64_t> right_counts_;
};

int leaf_majority(const TreeNode& leaf) {
  int best = 0;
  std::int64_t best_count = -1;
  for (std::size_t k = 0; k < leaf.class_counts.size(); ++k) {
    if (leaf.class_counts[k] > best_count) {
      best_count = leaf.class_counts[k];
      best = static_cast<int>(k);
    }
  }
  return best;  // slots are sorted by label code, so ties go to the smallest
}

int route_to_slot(const Tree& tree, const Eigen::Ref<const Eigen::RowVectorXd>& row) {
  std::int32_t node = 0;
  while (!tree.nodes[static_cast<std::size_t>(node)].is_leaf()) {
    const auto& n = tree.nodes[static_cast<std::size_t>(node)];
    node = row(n.feature) < n.threshold ? n.left : n.right;
  }
  return leaf_majority(tree.nodes[static_cast<std::size_t>(node)]);
}

}  // namespace

Forest fit_forest(const FeatureMatrix& m, ForestKind kind, const TreeHyperparams& hp,
                  std::uint64_t seed, const GrowthOptions& options) {
  if (hp.n_trees < 1) raise(ErrorCode::invalid_params, "n_trees must be >= 1");
  if (m.rows() < 2 || m.cols() < 1)
    raise(ErrorCode::degenerate_data, "need >= 2 samples and >= 1 feature");
  std::set<int> distinct(m.labels.begin(), m.labels.end());
  if (distinct.size() < 2)
    raise(ErrorCode::degenerate_data, "need >= 2 classes to fit a tree");

  Forest f;
  f.kind = kind;
  f.hyperparams = hp;
  f.seed = seed;
  f.class_labels.assign(distinct.begin(), distinct.end());
  f.feature_names = m.names;

  std::vector<int> slots(m.labels.size());
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    const auto it =
        std::lower_bound(f.class_labels.begin(), f.class_labels.end(), m.labels[i]);
    slots[i] = static_cast<int>(it - f.class_labels.begin());
  }

  f.trees.resize(static_cast<std::size_t>(hp.n_trees));
  const int n_classes = static_cast<int>(f.class_labels.size());
  parallel_for(static_cast<std::size_t>(hp.n_trees), [&](std::size_t t) {
    // Per-tree stream: seed XOR tree index, so results are independent of
    // scheduling and thread count.
    std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(t));
    TreeGrower grower(m.values, slots, n_classes, hp, options, rng);
    f.trees[t] = grower.grow();
  });
  return f;
}

Forest fit_decision_tree(const FeatureMatrix& m, const TreeHyperparams& hp) {
  TreeHyperparams one = hp;
  one.n_trees = 1;
  GrowthOptions options;
  options.all_features = true;
  return fit_forest(m, ForestKind::decision_tree, one, 0, options);
}

Forest fit_random_forest(const FeatureMatrix& m, const TreeHyperparams& hp,
                         std::uint64_t seed) {
  GrowthOptions options;
  options.bootstrap = true;
  return fit_forest(m, ForestKind::random_forest, hp, seed, options);
}

Forest fit_extra_trees(const FeatureMatrix& m, const TreeHyperparams& hp,
                       std::uint64_t seed) {
  GrowthOptions options;
  options.random_thresholds = true;
  return fit_forest(m, ForestKind::extra_trees, hp, seed, options);
}

int predict_row(const Forest& f, const Eigen::Ref<const Eigen::RowVectorXd>& row) {
  if (!f.fitted()) raise(ErrorCode::unfitted_forest, "predict on an unfitted forest");
  if (row.size() != f.n_features())
    raise(ErrorCode::width_mismatch,
          "row has " + std::to_string(row.size()) + " features, forest expects " +
              std::to_string(f.n_features()));
  std::vector<std::int64_t> votes(f.class_labels.size(), 0);
  for (const auto& tree : f.trees) ++votes[static_cast<std::size_t>(route_to_slot(tree, row))];
  int best = 0;
  std::int64_t best_votes = -1;
  for (std::size_t k = 0; k < votes.size(); ++k) {
    if (votes[k] > best_votes) {
      best_votes = votes[k];
      best = static_cast<int>(k);
    }
  }
  return f.class_labels[static_cast<std::size_t>(best)];
}

std::vector<int> predict(const Forest& f, const Eigen::Ref<const Eigen::MatrixXd>& rows) {
  if (!f.fitted()) raise(ErrorCode::unfitted_forest, "predict on an unfitted forest");
  if (rows.cols() != f.n_features())
    raise(ErrorCode::width_mismatch,
          "rows have " + std::to_string(rows.cols()) + " features, forest expects " +
              std::to_string(f.n_features()));
  std::vector<int> out(static_cast<std::size_t>(rows.rows()));
  parallel_for(out.size(), [&](std::size_t i) {
    out[i] = predict_row(f, rows.row(static_cast<Eigen::Index>(i)));
  });
  return out;
}

ImportanceRanking feature_importances(const Forest& f) {
  if (!f.fitted()) raise(ErrorCode::unfitted_forest, "importances of an unfitted forest");
  const int d = f.n_features();
  Eigen::VectorXd total = Eigen::VectorXd::Zero(d);
  for (const auto& tree : f.trees) {
    Eigen::VectorXd per_tree = Eigen::VectorXd::Zero(d);
    const double n_root = static_cast<double>(tree.nodes.front().n_samples);
    for (const auto& node : tree.nodes) {
      if (node.is_leaf()) continue;
      per_tree(node.feature) +=
          (static_cast<double>(node.n_samples) / n_root) * node.impurity_decrease;
    }
    const double sum = per_tree.sum();
    if (sum > 0.0) total += per_tree / sum;  // all-leaf trees contribute nothing
  }

  ImportanceRanking r;
  r.names = f.feature_names;
  const double grand = total.sum();
  if (grand > 0.0) {
    r.scores = total / grand;
  } else {
    r.scores = Eigen::VectorXd::Zero(d);
    r.empty = true;
  }
  r.order.resize(static_cast<std::size_t>(d));
  std::iota(r.order.begin(), r.order.end(), 0);
  std::stable_sort(r.order.begin(), r.order.end(),
                   [&](int a, int b) { return r.scores(a) > r.scores(b); });
  return r;
}

}  // namespace emgkit
