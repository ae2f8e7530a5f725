#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "spssot/error.hpp"

namespace spssot {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class DomainTag { source, target_labeled, target_unlabeled, target_test };

std::string to_string(DomainTag tag);

// One aggregated 6-hour window: per-indicator statistics plus demographics.
struct WindowSample {
    Vector features;
    std::optional<int> label;  // 1 iff sepsis occurs within the horizon
};

// A patient's raw time series. Missing measurements are NaN; they are never
// imputed at this level.
struct RawRecordSeries {
    std::string patient_id;
    std::vector<double> timestamps;  // hours since ICU admission, ascending
    Matrix indicators;               // timestamps.size() x indicator count
    std::vector<std::string> indicator_names;
    std::vector<int> sepsis_onset_flags;  // per timestamp; empty = unlabeled
    Vector demographics;                  // static per patient
    std::vector<std::string> demographic_names;

    double missing_ratio() const;
};

// Feature matrix with optional binary labels and a domain tag.
//
// For target_unlabeled data the true labels are kept in sealed_y for
// evaluation-only diagnostics; training code must never read it.
struct TabularDataset {
    Matrix X;
    std::vector<int> y;  // empty when unlabeled
    std::vector<int> sealed_y;
    std::vector<std::string> feature_names;
    DomainTag tag = DomainTag::source;

    long size() const { return X.rows(); }
    long dim() const { return X.cols(); }
    bool has_labels() const { return !y.empty(); }
    long count_label(int value) const;
    void validate() const;
};

TabularDataset subset(const TabularDataset& data, const std::vector<int>& rows);

// Column means over non-NaN entries; an all-NaN column imputes to 0.
void mean_impute(Matrix& X);

// z-scoring with source-domain statistics, applied to every domain so that
// squared-Euclidean costs are comparable across them.
class Standardizer {
  public:
    void fit(const Matrix& X);
    void apply(Matrix& X) const;
    void apply(TabularDataset& data) const;
    const Vector& mean() const { return mean_; }
    const Vector& stddev() const { return std_; }

  private:
    Vector mean_, std_;
};

}  // namespace spssot
