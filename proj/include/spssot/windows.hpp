#pragma once

#include <vector>

#include "spssot/dataset.hpp"

namespace spssot {

// Non-overlapping windows aligned to admission time, restricted to the first
// max_hours of the stay. Each indicator contributes max, min, mean, standard
// error and latest value; demographics pass through unchanged. The label is 1
// iff a sepsis onset flag falls in (window_end, window_end + horizon].
std::vector<WindowSample> aggregate_windows(const RawRecordSeries& series,
                                            double window_hours = 6.0,
                                            double horizon_hours = 6.0,
                                            double max_hours = 48.0);

std::vector<std::string> window_feature_names(
    const std::vector<std::string>& indicator_names,
    const std::vector<std::string>& demographic_names);

// Full ingestion path: drop patients with >= max_missing_ratio missing
// values, aggregate windows, then mean-impute the stacked feature matrix.
// Either every series carries onset flags or none does.
TabularDataset build_window_dataset(const std::vector<RawRecordSeries>& patients,
                                    DomainTag tag,
                                    double window_hours = 6.0,
                                    double horizon_hours = 6.0,
                                    double max_hours = 48.0,
                                    double max_missing_ratio = 0.8);

}  // namespace spssot
