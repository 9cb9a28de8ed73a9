#ifndef MDSI_BATCH_HPP
#define MDSI_BATCH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mdsi/manifest.hpp"
#include "mdsi/metric.hpp"

namespace mdsi {

/// Per-entry scoring outcome for one manifest. Failed entries keep their
/// slot (score is NaN) so indices stay aligned with the dataset.
struct BatchResult {
    std::vector<double> scores;
    std::vector<double> mos;
    std::vector<std::size_t> failed;        // indices into the dataset
    std::vector<std::string> failure_notes; // matching messages

    /// Scores/MOS with failed entries removed, original order.
    std::vector<double> ok_scores() const;
    std::vector<double> ok_mos() const;
};

/// Score every entry of a dataset. Entries are processed in parallel when
/// threads > 1; results are identical for any thread count. Per-entry
/// failures are isolated and recorded; throws Error if more than 10% of
/// the entries fail.
BatchResult score_dataset(const Dataset& ds, const MetricConfig& cfg = {},
                          int threads = 1);

} // namespace mdsi

#endif
