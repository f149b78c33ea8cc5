#pragma once

#include <vector>

#include "gcrop/core/rng.hpp"
#include "gcrop/train/matrix.hpp"

namespace gcrop::train {

// Small feed-forward encoder: flatten -> tanh hidden layers -> linear
// embedding head.
struct EncoderConfig {
    int input_dim = 0;
    std::vector<int> hidden;  // may be empty (single linear layer)
    int embedding_dim = 32;
};

struct EncoderParams {
    struct Layer {
        Matrix w;               // out x in
        std::vector<double> b;  // out
    };
    std::vector<Layer> layers;

    int input_dim() const { return layers.front().w.cols; }
    int output_dim() const { return layers.back().w.rows; }
};

// Glorot-uniform weights, zero biases; deterministic in the stream.
EncoderParams init_encoder(const EncoderConfig& config, RngStream& rng);

struct ForwardCache {
    // activations[l] is the input to layer l; activations.back() is the
    // embedding output.
    std::vector<Matrix> activations;
};

// Batch forward pass, one flattened input per row. Throws on shape
// mismatch.
Matrix encoder_forward(const EncoderParams& params, const Matrix& inputs,
                       ForwardCache* cache = nullptr);

// Backpropagates d(loss)/d(embedding) through the cache and applies one
// in-place SGD update.
void encoder_backward_sgd(EncoderParams& params, const ForwardCache& cache,
                          const Matrix& grad_output, double lr);

}  // namespace gcrop::train
