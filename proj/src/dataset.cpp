#include "spssot/dataset.hpp"

#include <algorithm>
#include <cmath>

namespace spssot {

std::string to_string(DomainTag tag) {
    switch (tag) {
        case DomainTag::source: return "source";
        case DomainTag::target_labeled: return "target_labeled";
        case DomainTag::target_unlabeled: return "target_unlabeled";
        case DomainTag::target_test: return "target_test";
    }
    return "unknown";
}

double RawRecordSeries::missing_ratio() const {
    if (indicators.size() == 0) return 1.0;
    long missing = 0;
    for (long i = 0; i < indicators.rows(); ++i)
        for (long j = 0; j < indicators.cols(); ++j)
            if (std::isnan(indicators(i, j))) ++missing;
    return static_cast<double>(missing) / static_cast<double>(indicators.size());
}

long TabularDataset::count_label(int value) const {
    return std::count(y.begin(), y.end(), value);
}

void TabularDataset::validate() const {
    if (!feature_names.empty() &&
        static_cast<long>(feature_names.size()) != X.cols())
        throw ValidationError("feature_names length does not match feature dimension");
    if (tag == DomainTag::target_unlabeled) {
        if (has_labels())
            throw ValidationError("target_unlabeled dataset must not carry labels");
    } else {
        if (static_cast<long>(y.size()) != X.rows())
            throw ValidationError(to_string(tag) + " dataset must carry one label per sample");
    }
    for (int label : y)
        if (label != 0 && label != 1)
            throw ValidationError("labels must be 0 or 1");
}

TabularDataset subset(const TabularDataset& data, const std::vector<int>& rows) {
    TabularDataset out;
    out.feature_names = data.feature_names;
    out.tag = data.tag;
    out.X.resize(static_cast<long>(rows.size()), data.X.cols());
    if (data.has_labels()) out.y.reserve(rows.size());
    if (!data.sealed_y.empty()) out.sealed_y.reserve(rows.size());
    for (size_t k = 0; k < rows.size(); ++k) {
        const int r = rows[k];
        if (r < 0 || r >= data.size())
            throw ValidationError("subset row index out of range");
        out.X.row(static_cast<long>(k)) = data.X.row(r);
        if (data.has_labels()) out.y.push_back(data.y[r]);
        if (!data.sealed_y.empty()) out.sealed_y.push_back(data.sealed_y[r]);
    }
    return out;
}

void mean_impute(Matrix& X) {
    for (long j = 0; j < X.cols(); ++j) {
        double sum = 0.0;
        long n = 0;
        for (long i = 0; i < X.rows(); ++i) {
            if (!std::isnan(X(i, j))) {
                sum += X(i, j);
                ++n;
            }
        }
        const double mean = n > 0 ? sum / static_cast<double>(n) : 0.0;
        for (long i = 0; i < X.rows(); ++i)
            if (std::isnan(X(i, j))) X(i, j) = mean;
    }
}

void Standardizer::fit(const Matrix& X) {
    if (X.rows() == 0) throw ValidationError("cannot fit standardizer on empty matrix");
    mean_ = X.colwise().mean();
    std_.resize(X.cols());
    for (long j = 0; j < X.cols(); ++j) {
        const double var =
            (X.col(j).array() - mean_(j)).square().sum() / static_cast<double>(X.rows());
        const double sd = std::sqrt(var);
        std_(j) = sd > 0.0 ? sd : 1.0;
    }
}

void Standardizer::apply(Matrix& X) const {
    if (X.cols() != mean_.size())
        throw DimensionError("standardizer fitted on different feature dimension");
    X = (X.rowwise() - mean_.transpose()).array().rowwise() /
        std_.transpose().array();
}

void Standardizer::apply(TabularDataset& data) const { apply(data.X); }

}  // namespace spssot
