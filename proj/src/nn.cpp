#include "spssot/nn.hpp"

#include <cmath>

#include "spssot/rng.hpp"

namespace spssot {

namespace {

Matrix relu(const Matrix& Z) { return Z.cwiseMax(0.0); }

// Row-wise stable softmax.
Matrix softmax(const Matrix& logits) {
    Matrix P(logits.rows(), logits.cols());
    for (long i = 0; i < logits.rows(); ++i) {
        const double m = logits.row(i).maxCoeff();
        Eigen::RowVectorXd e = (logits.row(i).array() - m).exp();
        P.row(i) = e / e.sum();
    }
    return P;
}

AffineLayer init_layer(long in, long out, std::mt19937_64& rng) {
    const double a = std::sqrt(6.0 / static_cast<double>(in + out));
    std::uniform_real_distribution<double> dist(-a, a);
    AffineLayer layer;
    layer.W.resize(in, out);
    for (long i = 0; i < in; ++i)
        for (long j = 0; j < out; ++j) layer.W(i, j) = dist(rng);
    layer.b = Vector::Zero(out);
    return layer;
}

void check_input(const ModelParams& params, const Matrix& X) {
    if (X.cols() != params.input_dim())
        throw DimensionError("input width " + std::to_string(X.cols()) +
                             " does not match model input dim " +
                             std::to_string(params.input_dim()));
}

Matrix affine(const Matrix& X, const AffineLayer& layer) {
    return (X * layer.W).rowwise() + layer.b.transpose();
}

}  // namespace

long ModelParams::input_dim() const {
    if (!g_layers.empty()) return g_layers.front().W.rows();
    if (!f_layers.empty()) return f_layers.front().W.rows();
    return 0;
}

long ModelParams::embedding_dim() const {
    if (!g_layers.empty()) return g_layers.back().W.cols();
    if (!f_layers.empty()) return f_layers.front().W.rows();
    return 0;
}

long ModelParams::n_classes() const {
    return f_layers.empty() ? 0 : f_layers.back().W.cols();
}

ModelParams make_model(long input_dim, const std::vector<int>& g_widths,
                       const std::vector<int>& f_widths, long n_classes,
                       uint64_t seed) {
    if (input_dim < 1 || n_classes < 2)
        throw ValidationError("model needs a positive input dim and >= 2 classes");
    auto rng = make_rng(derive_seed(seed, "model-init"));
    ModelParams params;
    long prev = input_dim;
    for (int w : g_widths) {
        params.g_layers.push_back(init_layer(prev, w, rng));
        prev = w;
    }
    for (int w : f_widths) {
        params.f_layers.push_back(init_layer(prev, w, rng));
        prev = w;
    }
    params.f_layers.push_back(init_layer(prev, n_classes, rng));
    return params;
}

Matrix forward_features(const ModelParams& params, const Matrix& X) {
    check_input(params, X);
    Matrix H = X;
    for (const auto& layer : params.g_layers) H = relu(affine(H, layer));
    return H;
}

Matrix forward_classifier(const ModelParams& params, const Matrix& H) {
    if (params.f_layers.empty()) throw ValidationError("model has no classifier layers");
    if (H.cols() != params.f_layers.front().W.rows())
        throw DimensionError("embedding width does not match classifier input");
    Matrix A = H;
    for (size_t l = 0; l + 1 < params.f_layers.size(); ++l)
        A = relu(affine(A, params.f_layers[l]));
    return softmax(affine(A, params.f_layers.back()));
}

ForwardCache full_forward(const ModelParams& params, const Matrix& X) {
    check_input(params, X);
    ForwardCache cache;
    cache.X = X;
    Matrix A = X;
    for (const auto& layer : params.g_layers) {
        cache.g_pre.push_back(affine(A, layer));
        A = relu(cache.g_pre.back());
        cache.g_act.push_back(A);
    }
    cache.embeddings = A;
    for (size_t l = 0; l < params.f_layers.size(); ++l) {
        cache.f_pre.push_back(affine(A, params.f_layers[l]));
        if (l + 1 < params.f_layers.size()) {
            A = relu(cache.f_pre.back());
            cache.f_act.push_back(A);
        }
    }
    cache.probs = softmax(cache.f_pre.back());
    return cache;
}

GradientSet zeros_like(const ModelParams& params) {
    GradientSet grads;
    for (const auto& layer : params.g_layers)
        grads.g.push_back({Matrix::Zero(layer.W.rows(), layer.W.cols()),
                           Vector::Zero(layer.b.size())});
    for (const auto& layer : params.f_layers)
        grads.f.push_back({Matrix::Zero(layer.W.rows(), layer.W.cols()),
                           Vector::Zero(layer.b.size())});
    return grads;
}

void add_in_place(GradientSet& acc, const GradientSet& g) {
    if (acc.g.size() != g.g.size() || acc.f.size() != g.f.size())
        throw DimensionError("gradient sets have different layer counts");
    for (size_t l = 0; l < acc.g.size(); ++l) {
        acc.g[l].W += g.g[l].W;
        acc.g[l].b += g.g[l].b;
    }
    for (size_t l = 0; l < acc.f.size(); ++l) {
        acc.f[l].W += g.f[l].W;
        acc.f[l].b += g.f[l].b;
    }
}

bool all_finite(const GradientSet& grads) {
    for (const auto& layer : grads.g)
        if (!layer.W.allFinite() || !layer.b.allFinite()) return false;
    for (const auto& layer : grads.f)
        if (!layer.W.allFinite() || !layer.b.allFinite()) return false;
    return true;
}

GradientSet backward(const ModelParams& params, const ForwardCache& cache,
                     const Matrix& d_probs, const Matrix& d_embeddings) {
    if (cache.g_pre.size() != params.g_layers.size() ||
        cache.f_pre.size() != params.f_layers.size())
        throw DimensionError("forward cache is stale: layer count mismatch");
    for (size_t l = 0; l < params.f_layers.size(); ++l)
        if (cache.f_pre[l].cols() != params.f_layers[l].W.cols())
            throw DimensionError("forward cache is stale: layer width mismatch");
    const long n = cache.X.rows();
    if (d_probs.size() != 0 && (d_probs.rows() != n || d_probs.cols() != cache.probs.cols()))
        throw DimensionError("d_probs shape does not match cached batch");
    if (d_embeddings.size() != 0 &&
        (d_embeddings.rows() != n || d_embeddings.cols() != cache.embeddings.cols()))
        throw DimensionError("d_embeddings shape does not match cached batch");

    GradientSet grads = zeros_like(params);

    // Softmax Jacobian: dz_k = p_k (dp_k - sum_j dp_j p_j).
    Matrix delta;
    if (d_probs.size() != 0) {
        delta.resize(n, cache.probs.cols());
        for (long i = 0; i < n; ++i) {
            const double dot = d_probs.row(i).dot(cache.probs.row(i));
            delta.row(i) =
                (cache.probs.row(i).array() * (d_probs.row(i).array() - dot)).matrix();
        }
    } else {
        delta = Matrix::Zero(n, cache.probs.cols());
    }

    for (long l = static_cast<long>(params.f_layers.size()) - 1; l >= 0; --l) {
        const Matrix& input = l == 0 ? cache.embeddings : cache.f_act[l - 1];
        grads.f[l].W = input.transpose() * delta;
        grads.f[l].b = delta.colwise().sum().transpose();
        delta = delta * params.f_layers[l].W.transpose();
        if (l > 0)
            delta = ((cache.f_pre[l - 1].array() > 0.0).cast<double>() * delta.array())
                        .matrix();
    }

    if (d_embeddings.size() != 0) delta += d_embeddings;

    for (long l = static_cast<long>(params.g_layers.size()) - 1; l >= 0; --l) {
        delta = ((cache.g_pre[l].array() > 0.0).cast<double>() * delta.array()).matrix();
        const Matrix& input = l == 0 ? cache.X : cache.g_act[l - 1];
        grads.g[l].W = input.transpose() * delta;
        grads.g[l].b = delta.colwise().sum().transpose();
        if (l > 0) delta = delta * params.g_layers[l].W.transpose();
    }
    return grads;
}

ModelParams sgd_step(ModelParams params, const GradientSet& grads,
                     const OptimizerConfig& config, MomentumState* state) {
    if (config.learning_rate < 0) throw ValidationError("learning rate must be nonnegative");
    if (grads.g.size() != params.g_layers.size() || grads.f.size() != params.f_layers.size())
        throw DimensionError("gradient layer count does not match params");
    if (!all_finite(grads))
        throw TrainingDivergedError("gradient", "non-finite gradient in sgd_step");

    const GradientSet* update = &grads;
    if (config.momentum > 0.0 && state != nullptr) {
        if (!state->initialized) {
            state->velocity = grads;
            state->initialized = true;
        } else {
            for (size_t l = 0; l < grads.g.size(); ++l) {
                state->velocity.g[l].W = config.momentum * state->velocity.g[l].W + grads.g[l].W;
                state->velocity.g[l].b = config.momentum * state->velocity.g[l].b + grads.g[l].b;
            }
            for (size_t l = 0; l < grads.f.size(); ++l) {
                state->velocity.f[l].W = config.momentum * state->velocity.f[l].W + grads.f[l].W;
                state->velocity.f[l].b = config.momentum * state->velocity.f[l].b + grads.f[l].b;
            }
        }
        update = &state->velocity;
    }

    for (size_t l = 0; l < params.g_layers.size(); ++l) {
        params.g_layers[l].W -= config.learning_rate * update->g[l].W;
        params.g_layers[l].b -= config.learning_rate * update->g[l].b;
    }
    for (size_t l = 0; l < params.f_layers.size(); ++l) {
        params.f_layers[l].W -= config.learning_rate * update->f[l].W;
        params.f_layers[l].b -= config.learning_rate * update->f[l].b;
    }
    return params;
}

}  // namespace spssot
