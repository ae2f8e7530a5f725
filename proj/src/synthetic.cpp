#include "spssot/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spssot/rng.hpp"

namespace spssot {

namespace {

// Class-1 blob center along the first two dimensions; class 0 sits at the
// origin. Separation is scaled by nothing else, so noise_sigma controls the
// Bayes error directly.
constexpr double kClassSep = 1.8;

Vector class_mean(int label, int dim) {
    Vector mu = Vector::Zero(dim);
    if (label == 1) {
        mu(0) = kClassSep;
        if (dim > 1) mu(1) = kClassSep;
    }
    return mu;
}

std::vector<int> make_labels(int n, double minority_fraction, std::mt19937_64& rng) {
    const int n_minority = static_cast<int>(std::llround(minority_fraction * n));
    std::vector<int> labels(static_cast<size_t>(n), 0);
    std::fill(labels.begin(), labels.begin() + n_minority, 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    return labels;
}

}  // namespace

void SyntheticSpec::validate() const {
    if (feature_dim < 1) throw ValidationError("feature_dim must be positive");
    if (n_source < 1 || n_target < 1) throw ValidationError("sizes must be positive");
    if (minority_fraction_source <= 0 || minority_fraction_source > 0.5 ||
        minority_fraction_target <= 0 || minority_fraction_target > 0.5)
        throw ValidationError("minority fractions must lie in (0, 0.5]");
    if (noise_sigma < 0) throw ValidationError("noise_sigma must be nonnegative");
    if (shift_translation.size() != 0 && shift_translation.size() != feature_dim)
        throw ValidationError("translation vector must have feature_dim entries");
}

SyntheticPair generate_synthetic(const SyntheticSpec& spec) {
    spec.validate();
    const int d = spec.feature_dim;
    Vector translation = spec.shift_translation.size() == d
                             ? spec.shift_translation
                             : Vector::Zero(d);
    Matrix rotation = Matrix::Identity(d, d);
    if (d >= 2) {
        const double c = std::cos(spec.shift_rotation_angle);
        const double s = std::sin(spec.shift_rotation_angle);
        rotation(0, 0) = c;
        rotation(0, 1) = -s;
        rotation(1, 0) = s;
        rotation(1, 1) = c;
    }

    std::vector<std::string> names;
    for (int j = 0; j < d; ++j) names.push_back("f" + std::to_string(j));

    SyntheticPair pair;
    for (int domain = 0; domain < 2; ++domain) {
        const bool is_target = domain == 1;
        auto rng = make_rng(derive_seed(spec.seed, is_target ? "target" : "source"));
        std::normal_distribution<double> noise(0.0, spec.noise_sigma);
        const int n = is_target ? spec.n_target : spec.n_source;
        const double frac = is_target ? spec.minority_fraction_target
                                      : spec.minority_fraction_source;
        auto labels = make_labels(n, frac, rng);

        TabularDataset data;
        data.tag = is_target ? DomainTag::target_labeled : DomainTag::source;
        data.feature_names = names;
        data.X.resize(n, d);
        data.y = labels;
        for (int i = 0; i < n; ++i) {
            Vector x = class_mean(labels[static_cast<size_t>(i)], d);
            for (int j = 0; j < d; ++j) x(j) += noise(rng);
            if (is_target) x = rotation * x + translation;
            data.X.row(i) = x.transpose();
        }
        if (is_target)
            pair.target = std::move(data);
        else
            pair.source = std::move(data);
    }
    return pair;
}

namespace {

// Largest-remainder allocation of `total` across classes, proportional to
// class sizes.
std::vector<int> proportional_quota(const std::vector<long>& class_sizes, long total_size,
                                    int total) {
    const size_t k = class_sizes.size();
    std::vector<int> quota(k, 0);
    std::vector<std::pair<double, size_t>> fractions;
    int assigned = 0;
    for (size_t c = 0; c < k; ++c) {
        const double ideal = static_cast<double>(total) * class_sizes[c] / total_size;
        quota[c] = static_cast<int>(std::floor(ideal + 1e-12));
        assigned += quota[c];
        fractions.emplace_back(ideal - quota[c], c);
    }
    std::stable_sort(fractions.begin(), fractions.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (int r = 0; r < total - assigned; ++r)
        quota[fractions[static_cast<size_t>(r) % k].second] += 1;
    return quota;
}

}  // namespace

TargetSplits split_target(const TabularDataset& target, double labeled_fraction,
                          double test_fraction, uint64_t seed) {
    if (labeled_fraction <= 0 || test_fraction <= 0 ||
        labeled_fraction + test_fraction >= 1.0)
        throw ValidationError("labeled and test fractions must be positive and sum below 1");
    if (!target.has_labels())
        throw ValidationError("split_target requires a labeled target dataset");

    const long n = target.size();
    const int n_labeled = static_cast<int>(std::llround(labeled_fraction * n));
    const int n_test = static_cast<int>(std::llround(test_fraction * n));

    std::vector<std::vector<int>> by_class(2);
    for (long i = 0; i < n; ++i)
        by_class[static_cast<size_t>(target.y[static_cast<size_t>(i)])].push_back(
            static_cast<int>(i));
    std::vector<long> class_sizes = {static_cast<long>(by_class[0].size()),
                                     static_cast<long>(by_class[1].size())};

    auto labeled_quota = proportional_quota(class_sizes, n, n_labeled);
    auto test_quota = proportional_quota(class_sizes, n, n_test);

    std::vector<int> labeled_rows, test_rows, unlabeled_rows;
    for (size_t c = 0; c < 2; ++c) {
        if (class_sizes[c] == 0) continue;
        const long remaining = class_sizes[c] - labeled_quota[c] - test_quota[c];
        if (labeled_quota[c] < 1 || test_quota[c] < 1 || remaining < 1)
            throw StratificationError(
                "class " + std::to_string(c) +
                " would leave a split empty; enlarge the fraction or the dataset");
        auto idx = by_class[c];
        auto rng = make_rng(derive_seed(seed, "split", static_cast<uint64_t>(c)));
        std::shuffle(idx.begin(), idx.end(), rng);
        labeled_rows.insert(labeled_rows.end(), idx.begin(), idx.begin() + labeled_quota[c]);
        test_rows.insert(test_rows.end(), idx.begin() + labeled_quota[c],
                         idx.begin() + labeled_quota[c] + test_quota[c]);
        unlabeled_rows.insert(unlabeled_rows.end(),
                              idx.begin() + labeled_quota[c] + test_quota[c], idx.end());
    }
    std::sort(labeled_rows.begin(), labeled_rows.end());
    std::sort(test_rows.begin(), test_rows.end());
    std::sort(unlabeled_rows.begin(), unlabeled_rows.end());

    TargetSplits splits;
    splits.labeled = subset(target, labeled_rows);
    splits.labeled.tag = DomainTag::target_labeled;
    splits.test = subset(target, test_rows);
    splits.test.tag = DomainTag::target_test;
    splits.unlabeled = subset(target, unlabeled_rows);
    splits.unlabeled.tag = DomainTag::target_unlabeled;
    splits.unlabeled.sealed_y = std::move(splits.unlabeled.y);
    splits.unlabeled.y.clear();
    return splits;
}

}  // namespace spssot
