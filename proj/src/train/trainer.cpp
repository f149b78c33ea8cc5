#include "gcrop/train/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gcrop::train {

namespace {

void flatten_into(const Image& img, Matrix& batch, int row) {
    for (std::size_t i = 0; i < img.pixels.size(); ++i)
        batch(row, static_cast<int>(i)) = img.pixels[i];
}

std::vector<int> shuffled_indices(std::size_t n, RngStream& rng) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = n; i > 1; --i) {
        const auto j = static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<std::int64_t>(i) - 1));
        std::swap(order[i - 1], order[j]);
    }
    return order;
}

Rect center_rect(ImageDims dims, ViewDims vd) {
    Rect r;
    r.left = static_cast<int>(std::lround((dims.width - vd.width) / 2.0));
    r.top = static_cast<int>(std::lround((dims.height - vd.height) / 2.0));
    r.width = vd.width;
    r.height = vd.height;
    return r;
}

}  // namespace

void TrainConfig::validate() const {
    cropper.validate();
    if (cropper.n_views != 2)
        throw std::invalid_argument(
            "train: the contrastive kernel trains on pairs (n_views = 2)");
    if (!(tau > 0.0)) throw std::invalid_argument("train.tau: must be > 0");
    if (!(lr >= 0.0)) throw std::invalid_argument("train.lr: must be >= 0");
    if (epochs < 0) throw std::invalid_argument("train.epochs: must be >= 0");
    if (batch_size < 1) throw std::invalid_argument("train.batch_size: must be >= 1");
    if (embedding_dim < 1)
        throw std::invalid_argument("train.embedding_dim: must be >= 1");
    for (int h : hidden)
        if (h < 1) throw std::invalid_argument("train.hidden: widths must be >= 1");
}

LossReport train_step(EncoderParams& params,
                      const std::vector<const Image*>& batch,
                      const CropperConfig& cropper, const AugmentConfig& augment_cfg,
                      double tau, double lr, RngStream& rng) {
    if (batch.empty())
        throw std::invalid_argument("train_step: empty batch");
    if (cropper.n_views != 2)
        throw std::invalid_argument("train_step: n_views must be 2");
    if (!(lr >= 0.0))
        throw std::invalid_argument("train_step: learning rate must be >= 0");

    const int input_dim = params.input_dim();
    Matrix inputs(static_cast<int>(batch.size()) * 2, input_dim);
    for (std::size_t k = 0; k < batch.size(); ++k) {
        RngStream image_rng = rng.fork(k);
        const ViewSet set = generate_views(*batch[k], cropper, image_rng);
        for (int v = 0; v < 2; ++v) {
            const Image aug = augment(set.views[static_cast<std::size_t>(v)],
                                      augment_cfg, image_rng);
            if (static_cast<int>(aug.pixels.size()) != input_dim)
                throw std::invalid_argument(
                    "train_step: view size does not match encoder input");
            flatten_into(aug, inputs, static_cast<int>(k) * 2 + v);
        }
    }

    ForwardCache cache;
    const Matrix embeddings = encoder_forward(params, inputs, &cache);
    LossReport report = nt_xent_loss(embeddings, tau);
    const Matrix grad = nt_xent_grad(embeddings, tau);
    encoder_backward_sgd(params, cache, grad, lr);
    return report;
}

PretrainResult pretrain(const std::vector<Image>& images,
                        const TrainConfig& config, std::uint64_t seed) {
    config.validate();
    if (images.empty())
        throw std::invalid_argument("pretrain: empty dataset");
    for (const Image& img : images)
        if (!img.same_shape(images.front()))
            throw std::invalid_argument("pretrain: non-uniform image shapes");

    const ViewDims vd =
        compute_view_dims(config.cropper.crop_size, images.front().dims);
    EncoderConfig enc_cfg;
    enc_cfg.input_dim = vd.width * vd.height * images.front().channels;
    enc_cfg.hidden = config.hidden;
    enc_cfg.embedding_dim = config.embedding_dim;

    RngStream root(seed);
    RngStream init_rng = root.fork(0);
    PretrainResult result;
    result.params = init_encoder(enc_cfg, init_rng);
    result.epoch_loss.reserve(static_cast<std::size_t>(config.epochs));

    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        RngStream epoch_rng = root.fork(1 + static_cast<std::uint64_t>(epoch));
        RngStream shuffle_rng = epoch_rng.fork(0);
        const std::vector<int> order = shuffled_indices(images.size(), shuffle_rng);

        double anchor_loss_sum = 0.0;
        long long anchor_count = 0;
        std::size_t cursor = 0;
        std::uint64_t batch_index = 0;
        while (cursor < order.size()) {
            const std::size_t take = std::min<std::size_t>(
                static_cast<std::size_t>(config.batch_size), order.size() - cursor);
            std::vector<const Image*> batch;
            batch.reserve(take);
            for (std::size_t i = 0; i < take; ++i)
                batch.push_back(&images[static_cast<std::size_t>(order[cursor + i])]);
            cursor += take;

            RngStream batch_rng = epoch_rng.fork(1 + batch_index);
            ++batch_index;
            const LossReport report =
                train_step(result.params, batch, config.cropper, config.augment,
                           config.tau, config.lr, batch_rng);
            if (!std::isfinite(report.loss))
                throw std::runtime_error("pretrain: loss diverged to non-finite");
            anchor_loss_sum +=
                report.loss * static_cast<double>(report.per_anchor.size());
            anchor_count += static_cast<long long>(report.per_anchor.size());
        }
        result.epoch_loss.push_back(anchor_loss_sum /
                                    static_cast<double>(anchor_count));
    }
    return result;
}

namespace {

// Embed every image through the frozen encoder: center crop at the
// pretraining view dims, standardize, forward.
Matrix embed_dataset(const EncoderParams& frozen, const ChannelStats& stats,
                     const io::LabeledDataset& set, double crop_size) {
    const ViewDims vd = compute_view_dims(crop_size, set.images.front().dims);
    const Rect crop = center_rect(set.images.front().dims, vd);
    const int input_dim =
        vd.width * vd.height * set.images.front().channels;
    if (input_dim != frozen.input_dim())
        throw std::invalid_argument(
            "linear_eval: crop size does not match encoder input dim");

    Matrix inputs(static_cast<int>(set.images.size()), input_dim);
    for (std::size_t i = 0; i < set.images.size(); ++i) {
        const Image view = extract_view(set.images[i], crop, PadPolicy::Zero);
        const Image ready = standardize(view, stats);
        flatten_into(ready, inputs, static_cast<int>(i));
    }
    return encoder_forward(frozen, inputs);
}

}  // namespace

double linear_eval(const EncoderParams& frozen, const ChannelStats& stats,
                   const io::LabeledDataset& train_set,
                   const io::LabeledDataset& test_set, const EvalConfig& config,
                   RngStream& rng) {
    train_set.validate();
    test_set.validate();
    if (train_set.class_count != test_set.class_count)
        throw std::invalid_argument("linear_eval: class-count mismatch");
    if (config.epochs < 0 || !(config.lr > 0.0) || config.batch_size < 1)
        throw std::invalid_argument("linear_eval: bad optimizer settings");

    const int classes = train_set.class_count;
    const Matrix train_emb =
        embed_dataset(frozen, stats, train_set, config.crop_size);
    const Matrix test_emb =
        embed_dataset(frozen, stats, test_set, config.crop_size);
    const int dim = train_emb.cols;

    Matrix weights(classes, dim);
    std::vector<double> bias(static_cast<std::size_t>(classes), 0.0);

    std::vector<double> logits(static_cast<std::size_t>(classes));
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        RngStream epoch_rng = rng.fork(static_cast<std::uint64_t>(epoch));
        const std::vector<int> order =
            shuffled_indices(train_set.images.size(), epoch_rng);
        std::size_t cursor = 0;
        while (cursor < order.size()) {
            const std::size_t take = std::min<std::size_t>(
                static_cast<std::size_t>(config.batch_size), order.size() - cursor);
            // Accumulate softmax cross-entropy gradient over the minibatch.
            Matrix grad_w(classes, dim);
            std::vector<double> grad_b(static_cast<std::size_t>(classes), 0.0);
            for (std::size_t i = 0; i < take; ++i) {
                const int row = order[cursor + i];
                const int label = train_set.labels[static_cast<std::size_t>(row)];
                double max_logit = -1e300;
                for (int c = 0; c < classes; ++c) {
                    double acc = bias[static_cast<std::size_t>(c)];
                    for (int d = 0; d < dim; ++d)
                        acc += weights(c, d) * train_emb(row, d);
                    logits[static_cast<std::size_t>(c)] = acc;
                    max_logit = std::max(max_logit, acc);
                }
                double denom = 0.0;
                for (int c = 0; c < classes; ++c)
                    denom += std::exp(logits[static_cast<std::size_t>(c)] - max_logit);
                for (int c = 0; c < classes; ++c) {
                    const double p =
                        std::exp(logits[static_cast<std::size_t>(c)] - max_logit) /
                        denom;
                    const double delta = (p - (c == label ? 1.0 : 0.0)) /
                                         static_cast<double>(take);
                    grad_b[static_cast<std::size_t>(c)] += delta;
                    for (int d = 0; d < dim; ++d)
                        grad_w(c, d) += delta * train_emb(row, d);
                }
            }
            for (int c = 0; c < classes; ++c) {
                bias[static_cast<std::size_t>(c)] -=
                    config.lr * grad_b[static_cast<std::size_t>(c)];
                for (int d = 0; d < dim; ++d)
                    weights(c, d) -= config.lr * grad_w(c, d);
            }
            cursor += take;
        }
    }

    long long correct = 0;
    for (int row = 0; row < test_emb.rows; ++row) {
        int best = 0;
        double best_logit = -1e300;
        for (int c = 0; c < classes; ++c) {
            double acc = bias[static_cast<std::size_t>(c)];
            for (int d = 0; d < dim; ++d) acc += weights(c, d) * test_emb(row, d);
            if (acc > best_logit) {
                best_logit = acc;
                best = c;
            }
        }
        if (best == test_set.labels[static_cast<std::size_t>(row)]) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(test_emb.rows);
}

}  // namespace gcrop::train
