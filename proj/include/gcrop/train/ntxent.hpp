#pragma once

#include <span>
#include <vector>

#include "gcrop/train/matrix.hpp"

namespace gcrop::train {

// u.v / (|u||v|), in [-1, 1]. Throws on a zero-norm vector.
double cosine_sim(std::span<const double> u, std::span<const double> v);

struct LossReport {
    double loss = 0.0;  // mean over all 2N anchors
    double tau = 0.0;
    std::vector<double> per_anchor;
};

// Normalized temperature-scaled cross entropy over cosine similarities.
// Embeddings come as a 2N x D matrix where rows (2k, 2k+1) are the positive
// pair from image k; every row serves as an anchor once. The log-sum-exp is
// stabilized by max subtraction.
LossReport nt_xent_loss(const Matrix& embeddings, double tau);

// Exact gradient of the mean loss with respect to every embedding entry,
// including the cosine-normalization terms.
Matrix nt_xent_grad(const Matrix& embeddings, double tau);

}  // namespace gcrop::train
