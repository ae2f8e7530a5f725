#pragma once

#include <cstdint>

#include "spssot/dataset.hpp"

namespace spssot {

// Two-domain covariate-shift generator: two Gaussian blobs per domain, the
// target being the source distribution rotated in the first two feature
// dimensions and translated. Class 1 is the minority.
struct SyntheticSpec {
    int feature_dim = 10;
    double minority_fraction_source = 0.06;
    double minority_fraction_target = 0.10;
    double shift_rotation_angle = 0.0;  // radians
    Vector shift_translation;           // size feature_dim; empty = zero
    int n_source = 4000;
    int n_target = 4000;
    double noise_sigma = 1.0;
    uint64_t seed = 0;

    void validate() const;
};

struct SyntheticPair {
    TabularDataset source;
    TabularDataset target;
};

SyntheticPair generate_synthetic(const SyntheticSpec& spec);

struct TargetSplits {
    TabularDataset labeled;    // D_l
    TabularDataset unlabeled;  // D_u, labels stripped into sealed_y
    TabularDataset test;       // D_test
};

// Stratified, exact and disjoint; each split keeps the global positive rate
// within one sample per class. Defaults follow the 1% / 79% / 20% protocol.
TargetSplits split_target(const TabularDataset& target, double labeled_fraction,
                          double test_fraction, uint64_t seed);

}  // namespace spssot
