#include "emgkit/selection.hpp"

namespace emgkit {

ImportanceRanking rank_features(const FeatureMatrix& train, const TreeHyperparams& hp,
                                std::uint64_t seed) {
  return feature_importances(fit_extra_trees(train, hp, seed));
}

FeatureSubset select_top_k(const ImportanceRanking& ranking, int k) {
  const int d = static_cast<int>(ranking.names.size());
  if (k < 1 || k > d)
    raise(ErrorCode::k_out_of_range,
          "k = " + std::to_string(k) + " outside 1..=" + std::to_string(d));
  FeatureSubset s;
  s.k = k;
  s.names.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    s.names.push_back(ranking.names[static_cast<std::size_t>(ranking.order[static_cast<std::size_t>(i)])]);
  return s;
}

FeatureMatrix project(const FeatureMatrix& m, const FeatureSubset& subset) {
  FeatureMatrix out;
  out.names = subset.names;
  out.labels = m.labels;
  out.values.resize(m.rows(), static_cast<Eigen::Index>(subset.names.size()));
  for (std::size_t j = 0; j < subset.names.size(); ++j) {
    const int col = m.column_index(subset.names[j]);
    if (col < 0)
      raise(ErrorCode::unknown_feature, "feature '" + subset.names[j] + "' not in matrix");
    out.values.col(static_cast<Eigen::Index>(j)) = m.values.col(col);
  }
  return out;
}

}  // namespace emgkit
