#pragma once

#include <string>
#include <vector>

#include "sumboost/llm.hpp"
#include "sumboost/util.hpp"

namespace sumboost {

/// Cosine distance, 1 - cos(a, b). Zero-norm vectors are treated as at
/// distance 1 from everything except another zero vector.
double cosine_distance(const EmbeddingVector& a, const EmbeddingVector& b);

/// Average-linkage agglomerative clustering under cosine distance. Merging
/// stops once the smallest pairwise cluster distance exceeds `threshold`;
/// distance ties break on the lowest slot pair. Clusters come back with
/// members ascending, ordered by their smallest member.
std::vector<std::vector<int>> hac_cluster(const std::vector<EmbeddingVector>& embeddings,
                                          double threshold);

/// Per-class clusters over description embeddings. Positions index into the
/// text/label arrays the model was built from; `row_index` keeps the original
/// dataset row of each position for reporting.
struct ClusterModel {
    std::vector<std::vector<std::vector<int>>> clusters_per_class;  // [class][cluster] -> positions
    std::vector<int> row_index;
    double threshold = 0.05;
};

ClusterModel build_cluster_model(const std::vector<std::string>& texts,
                                 const std::vector<int>& labels, int num_classes,
                                 LlmClient& client, double threshold = 0.05,
                                 const std::vector<int>& row_index = {});

/// JSON dump of the cluster assignments (for --dump-clusters).
std::string cluster_model_to_json(const ClusterModel& model);

/// Largest-remainder apportionment of `total` over quotas proportional to
/// counts[k], capped at counts[k]; remainder ties go to the lower index.
std::vector<int> largest_remainder(const std::vector<int>& counts, int total);

/// Weighted stratified draw: within each class, points are weighted inversely
/// to their cluster size, reweighted by the boosting distribution p
/// (renormalized within the class), and drawn without replacement; class k
/// contributes a largest-remainder share of s. Returns positions,
/// concatenated per class in draw order.
std::vector<int> cluster_sample(const ClusterModel& model, const std::vector<int>& labels,
                                const std::vector<double>& p, int s, Rng& rng);

}  // namespace sumboost
