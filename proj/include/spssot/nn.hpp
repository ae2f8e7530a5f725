#pragma once

#include <cstdint>
#include <vector>

#include "spssot/dataset.hpp"

namespace spssot {

struct AffineLayer {
    Matrix W;  // in x out
    Vector b;  // out
};

// Feature generator G followed by classifier F. G applies ReLU after every
// affine layer; F applies ReLU after all but its last layer and a softmax on
// the final logits. All arithmetic is 64-bit.
struct ModelParams {
    std::vector<AffineLayer> g_layers;
    std::vector<AffineLayer> f_layers;

    long input_dim() const;
    long embedding_dim() const;
    long n_classes() const;
};

// g_widths: hidden widths of G ({256, 128} in the reference configuration;
// may be empty, in which case embeddings are the raw inputs). f_widths:
// hidden widths of F ({128}); the final n_classes layer is appended. Weights
// are uniform fan-in/fan-out initialized, biases zero.
ModelParams make_model(long input_dim, const std::vector<int>& g_widths,
                       const std::vector<int>& f_widths, long n_classes,
                       uint64_t seed);

Matrix forward_features(const ModelParams& params, const Matrix& X);
Matrix forward_classifier(const ModelParams& params, const Matrix& H);

// Intermediates of one full forward pass, consumed by backward().
struct ForwardCache {
    Matrix X;
    std::vector<Matrix> g_pre, g_act;
    std::vector<Matrix> f_pre, f_act;
    Matrix embeddings;
    Matrix probs;
};

ForwardCache full_forward(const ModelParams& params, const Matrix& X);

struct GradientSet {
    std::vector<AffineLayer> g, f;
};

GradientSet zeros_like(const ModelParams& params);
void add_in_place(GradientSet& acc, const GradientSet& g);
bool all_finite(const GradientSet& grads);

// Chain-rule gradients of a scalar loss given its gradient w.r.t. the softmax
// probabilities (d_probs) and, additively, w.r.t. the embeddings (d_embeddings;
// may be empty). The cache must come from full_forward on the same params.
GradientSet backward(const ModelParams& params, const ForwardCache& cache,
                     const Matrix& d_probs, const Matrix& d_embeddings);

struct OptimizerConfig {
    double learning_rate = 0.001;
    int batch_size = 128;
    double momentum = 0.0;
};

// Velocity buffers for momentum SGD; unused when momentum is zero.
struct MomentumState {
    GradientSet velocity;
    bool initialized = false;
};

ModelParams sgd_step(ModelParams params, const GradientSet& grads,
                     const OptimizerConfig& config, MomentumState* state = nullptr);

}  // namespace spssot
