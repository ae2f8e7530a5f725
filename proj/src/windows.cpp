#include "spssot/windows.hpp"

#include <cmath>
#include <limits>

namespace spssot {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct WindowStats {
    double max = kNaN, min = kNaN, mean = kNaN, stderr_ = kNaN, latest = kNaN;
};

WindowStats compute_stats(const std::vector<double>& values) {
    WindowStats s;
    if (values.empty()) return s;
    const long n = static_cast<long>(values.size());
    double sum = 0.0;
    s.max = values[0];
    s.min = values[0];
    for (double v : values) {
        sum += v;
        if (v > s.max) s.max = v;
        if (v < s.min) s.min = v;
    }
    s.mean = sum / static_cast<double>(n);
    s.latest = values.back();
    if (n < 2) {
        s.stderr_ = 0.0;
    } else {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        const double sd = std::sqrt(ss / static_cast<double>(n - 1));
        s.stderr_ = sd / std::sqrt(static_cast<double>(n));
    }
    return s;
}

}  // namespace

std::vector<std::string> window_feature_names(
    const std::vector<std::string>& indicator_names,
    const std::vector<std::string>& demographic_names) {
    std::vector<std::string> names;
    names.reserve(indicator_names.size() * 5 + demographic_names.size());
    for (const auto& ind : indicator_names) {
        names.push_back(ind + "_max");
        names.push_back(ind + "_min");
        names.push_back(ind + "_mean");
        names.push_back(ind + "_stderr");
        names.push_back(ind + "_latest");
    }
    for (const auto& demo : demographic_names) names.push_back(demo);
    return names;
}

std::vector<WindowSample> aggregate_windows(const RawRecordSeries& series,
                                            double window_hours,
                                            double horizon_hours,
                                            double max_hours) {
    if (window_hours <= 0 || horizon_hours <= 0)
        throw ValidationError("window and horizon must be positive");
    const long n_times = static_cast<long>(series.timestamps.size());
    if (n_times == 0) return {};
    if (series.indicators.rows() != n_times)
        throw DimensionError("indicator rows must match timestamp count");
    for (long i = 1; i < n_times; ++i)
        if (!(series.timestamps[i] > series.timestamps[i - 1]))
            throw OrderingError("timestamps must be strictly ascending for patient " +
                                series.patient_id);
    if (!series.sepsis_onset_flags.empty() &&
        static_cast<long>(series.sepsis_onset_flags.size()) != n_times)
        throw DimensionError("sepsis flags must match timestamp count");

    const long n_ind = series.indicators.cols();
    const long n_demo = series.demographics.size();
    const int n_windows = static_cast<int>(std::floor(max_hours / window_hours + 1e-9));
    const bool labeled = !series.sepsis_onset_flags.empty();

    std::vector<WindowSample> samples;
    for (int w = 0; w < n_windows; ++w) {
        const double lo = w * window_hours;
        const double hi = lo + window_hours;  // window is [lo, hi)
        WindowSample sample;
        sample.features.resize(n_ind * 5 + n_demo);
        for (long j = 0; j < n_ind; ++j) {
            std::vector<double> values;
            for (long i = 0; i < n_times; ++i) {
                const double t = series.timestamps[i];
                if (t >= lo && t < hi && !std::isnan(series.indicators(i, j)))
                    values.push_back(series.indicators(i, j));
            }
            const WindowStats s = compute_stats(values);
            sample.features(j * 5 + 0) = s.max;
            sample.features(j * 5 + 1) = s.min;
            sample.features(j * 5 + 2) = s.mean;
            sample.features(j * 5 + 3) = s.stderr_;
            sample.features(j * 5 + 4) = s.latest;
        }
        for (long j = 0; j < n_demo; ++j)
            sample.features(n_ind * 5 + j) = series.demographics(j);
        if (labeled) {
            int label = 0;
            for (long i = 0; i < n_times; ++i) {
                const double t = series.timestamps[i];
                if (t > hi && t <= hi + horizon_hours && series.sepsis_onset_flags[i])
                    label = 1;
            }
            sample.label = label;
        }
        samples.push_back(std::move(sample));
    }
    return samples;
}

TabularDataset build_window_dataset(const std::vector<RawRecordSeries>& patients,
                                    DomainTag tag, double window_hours,
                                    double horizon_hours, double max_hours,
                                    double max_missing_ratio) {
    std::vector<WindowSample> all;
    std::vector<std::string> names;
    int n_labeled_series = 0, n_kept = 0;
    for (const auto& series : patients) {
        if (series.missing_ratio() >= max_missing_ratio) continue;
        ++n_kept;
        if (!series.sepsis_onset_flags.empty()) ++n_labeled_series;
        if (names.empty())
            names = window_feature_names(series.indicator_names,
                                         series.demographic_names);
        auto samples = aggregate_windows(series, window_hours, horizon_hours, max_hours);
        for (auto& s : samples) all.push_back(std::move(s));
    }
    if (n_labeled_series != 0 && n_labeled_series != n_kept)
        throw ValidationError("either all patients carry sepsis flags or none");

    TabularDataset data;
    data.tag = tag;
    data.feature_names = names;
    data.X.resize(static_cast<long>(all.size()),
                  names.empty() ? 0 : static_cast<long>(names.size()));
    const bool labeled = n_labeled_series > 0;
    for (size_t i = 0; i < all.size(); ++i) {
        if (data.X.cols() != all[i].features.size())
            throw DimensionError("inconsistent feature dimension across patients");
        data.X.row(static_cast<long>(i)) = all[i].features.transpose();
        if (labeled) data.y.push_back(all[i].label.value());
    }
    mean_impute(data.X);
    return data;
}

}  // namespace spssot
