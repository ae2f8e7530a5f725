#include "spssot/model.hpp"

namespace spssot {

Vector predict_positive(const ModelParams& params, const Matrix& X) {
    const Matrix probs = forward_classifier(params, forward_features(params, X));
    return probs.col(1);
}

Vector predict(const EnsembleModel& ensemble, const Matrix& X) {
    if (ensemble.members.empty())
        throw ValidationError("cannot predict with an empty ensemble");
    Vector mean = Vector::Zero(X.rows());
    for (const auto& member : ensemble.members)
        mean += predict_positive(member.params, X);
    return mean / static_cast<double>(ensemble.members.size());
}

}  // namespace spssot
