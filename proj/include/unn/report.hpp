#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unn/dataset.hpp"

namespace unn {

struct DsreReportRow {
    std::string dataset;
    int k = 0;
    double init = 0.0; // identity (dataset-row) ordering
    double unn1 = 0.0;
    double unn2 = 0.0;
};

// Per-K comparison of the initial DSRE against both embedding strategies on
// one dataset instance.
struct DsreReport {
    std::vector<DsreReportRow> rows;
    std::optional<std::uint64_t> seed; // echo of the dataset's generation seed
    std::string config;                // echo of the embedding configuration

    // Header "dataset,K,init,unn1,unn2", one row per K, round-trip-exact
    // numbers. Byte-identical for identical inputs.
    std::string to_csv() const;
};

// For each K: the identity-ordering DSRE plus the final DSRE of both
// strategies (pointwise criterion, dataset insertion order) on the same
// dataset instance.
DsreReport compare(const Dataset& data, const std::string& label, const std::vector<int>& ks,
                   std::optional<std::uint64_t> seed = std::nullopt);

} // namespace unn
