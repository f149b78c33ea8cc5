#pragma once

#include <cstdint>
#include <vector>

#include "gcrop/core/cropper.hpp"
#include "gcrop/io/dataset.hpp"
#include "gcrop/train/augment.hpp"
#include "gcrop/train/encoder.hpp"
#include "gcrop/train/ntxent.hpp"

namespace gcrop::train {

struct TrainConfig {
    CropperConfig cropper;      // pairs only: n_views must equal 2
    AugmentConfig augment;
    std::vector<int> hidden{64};
    int embedding_dim = 32;
    double tau = 0.5;
    double lr = 0.05;
    int epochs = 10;
    int batch_size = 64;

    void validate() const;
};

// One SGD step: crop two views per image, augment, embed, NT-Xent
// backward. Params update in place; lr = 0 leaves them untouched.
LossReport train_step(EncoderParams& params,
                      const std::vector<const Image*>& batch,
                      const CropperConfig& cropper, const AugmentConfig& augment,
                      double tau, double lr, RngStream& rng);

struct PretrainResult {
    EncoderParams params;
    std::vector<double> epoch_loss;  // mean anchor loss per epoch
};

// Full pretraining loop; deterministic in the seed. The encoder input
// dimension is derived from the crop size, so views are encoded at their
// native dims.
PretrainResult pretrain(const std::vector<Image>& images,
                        const TrainConfig& config, std::uint64_t seed);

struct EvalConfig {
    double crop_size = 1.0;  // center-crop area fraction; match pretraining
    int epochs = 40;
    double lr = 0.1;
    int batch_size = 32;
};

// Linear evaluation protocol: embeddings of center-cropped, standardized,
// otherwise augment-free images feed a softmax linear classifier; the
// encoder stays frozen throughout. Returns held-out test accuracy.
double linear_eval(const EncoderParams& frozen, const ChannelStats& stats,
                   const io::LabeledDataset& train_set,
                   const io::LabeledDataset& test_set, const EvalConfig& config,
                   RngStream& rng);

}  // namespace gcrop::train
