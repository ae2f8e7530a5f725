#pragma once

#include <string>
#include <vector>

#include "spssot/nn.hpp"

namespace spssot {

// One trained member: the network plus bookkeeping from its training run.
struct SSOTModel {
    ModelParams params;
    std::string log_path;                    // per-iteration loss TSV, if written
    bool init_fallback_source_only = false;  // labeled-target pretraining skipped
};

// Ordered members whose positive-class probabilities are averaged.
struct EnsembleModel {
    std::vector<SSOTModel> members;
};

// Mean positive-class probability over members.
Vector predict(const EnsembleModel& ensemble, const Matrix& X);

Vector predict_positive(const ModelParams& params, const Matrix& X);

}  // namespace spssot
