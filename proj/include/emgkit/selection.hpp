#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "emgkit/trees.hpp"

namespace emgkit {

/// Top-k slice of an importance ranking, with enough provenance to reproduce
/// it.
struct FeatureSubset {
  std::vector<std::string> names;  // ordered by descending importance
  int k = 0;
  struct SubsetProvenance {
    std::uint64_t seed = 0;
    TreeHyperparams hyperparams;
    int fold = -1;  // -1 when not produced inside a CV fold
  } provenance;
};

/// Fits extra trees on the training matrix and returns importances with a
/// descending ordering; score ties keep schema order. Only ever call this on
/// training folds.
ImportanceRanking rank_features(const FeatureMatrix& train,
                                const TreeHyperparams& hp = {},
                                std::uint64_t seed = 0);

/// First k names of the ranking; 1 <= k <= d.
FeatureSubset select_top_k(const ImportanceRanking& ranking, int k);

/// Columns reduced/reordered to the subset; labels and row order untouched.
FeatureMatrix project(const FeatureMatrix& m, const FeatureSubset& subset);

}  // namespace emgkit
