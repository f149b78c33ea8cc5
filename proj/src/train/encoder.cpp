#include "gcrop/train/encoder.hpp"

#include <cmath>
#include <stdexcept>

namespace gcrop::train {

EncoderParams init_encoder(const EncoderConfig& config, RngStream& rng) {
    if (config.input_dim < 1)
        throw std::invalid_argument("encoder: input_dim must be >= 1");
    if (config.embedding_dim < 1)
        throw std::invalid_argument("encoder: embedding_dim must be >= 1");
    for (int h : config.hidden)
        if (h < 1) throw std::invalid_argument("encoder: hidden width must be >= 1");

    std::vector<int> widths;
    widths.push_back(config.input_dim);
    widths.insert(widths.end(), config.hidden.begin(), config.hidden.end());
    widths.push_back(config.embedding_dim);

    EncoderParams params;
    for (std::size_t l = 0; l + 1 < widths.size(); ++l) {
        const int fan_in = widths[l];
        const int fan_out = widths[l + 1];
        EncoderParams::Layer layer;
        layer.w = Matrix(fan_out, fan_in);
        layer.b.assign(static_cast<std::size_t>(fan_out), 0.0);
        const double limit = std::sqrt(6.0 / (fan_in + fan_out));
        for (double& v : layer.w.data) v = rng.uniform(-limit, limit);
        params.layers.push_back(std::move(layer));
    }
    return params;
}

Matrix encoder_forward(const EncoderParams& params, const Matrix& inputs,
                       ForwardCache* cache) {
    if (params.layers.empty())
        throw std::invalid_argument("encoder: uninitialized params");
    if (inputs.cols != params.input_dim())
        throw std::invalid_argument("encoder: input dim mismatch");

    if (cache) {
        cache->activations.clear();
        cache->activations.reserve(params.layers.size() + 1);
    }

    Matrix current = inputs;
    const std::size_t n_layers = params.layers.size();
    for (std::size_t l = 0; l < n_layers; ++l) {
        if (cache) cache->activations.push_back(current);
        const auto& layer = params.layers[l];
        Matrix next(current.rows, layer.w.rows);
        for (int r = 0; r < current.rows; ++r) {
            for (int o = 0; o < layer.w.rows; ++o) {
                double acc = layer.b[static_cast<std::size_t>(o)];
                for (int i = 0; i < layer.w.cols; ++i)
                    acc += layer.w(o, i) * current(r, i);
                next(r, o) = acc;
            }
        }
        if (l + 1 < n_layers)
            for (double& v : next.data) v = std::tanh(v);
        current = std::move(next);
    }
    if (cache) cache->activations.push_back(current);
    return current;
}

void encoder_backward_sgd(EncoderParams& params, const ForwardCache& cache,
                          const Matrix& grad_output, double lr) {
    if (cache.activations.size() != params.layers.size() + 1)
        throw std::invalid_argument("encoder: cache does not match params");
    if (!(lr >= 0.0))
        throw std::invalid_argument("encoder: learning rate must be >= 0");

    Matrix delta = grad_output;
    for (std::size_t l = params.layers.size(); l-- > 0;) {
        auto& layer = params.layers[l];
        const Matrix& input = cache.activations[l];
        if (delta.rows != input.rows || delta.cols != layer.w.rows)
            throw std::invalid_argument("encoder: gradient shape mismatch");

        // Propagate before mutating the weights.
        Matrix prev_delta(delta.rows, layer.w.cols);
        if (l > 0) {
            for (int r = 0; r < delta.rows; ++r)
                for (int i = 0; i < layer.w.cols; ++i) {
                    double acc = 0.0;
                    for (int o = 0; o < layer.w.rows; ++o)
                        acc += delta(r, o) * layer.w(o, i);
                    // input is the tanh output of the previous layer.
                    prev_delta(r, i) = acc * (1.0 - input(r, i) * input(r, i));
                }
        }

        for (int o = 0; o < layer.w.rows; ++o) {
            double db = 0.0;
            for (int r = 0; r < delta.rows; ++r) db += delta(r, o);
            layer.b[static_cast<std::size_t>(o)] -= lr * db;
            for (int i = 0; i < layer.w.cols; ++i) {
                double dw = 0.0;
                for (int r = 0; r < delta.rows; ++r)
                    dw += delta(r, o) * input(r, i);
                layer.w(o, i) -= lr * dw;
            }
        }
        delta = std::move(prev_delta);
    }
}

}  // namespace gcrop::train
