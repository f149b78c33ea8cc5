#include "gcrop/train/ntxent.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gcrop::train {

double cosine_sim(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size() || u.empty())
        throw std::invalid_argument("cosine_sim: dimension mismatch");
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        dot += u[i] * v[i];
        nu += u[i] * u[i];
        nv += v[i] * v[i];
    }
    if (!(nu > 0.0) || !(nv > 0.0))
        throw std::invalid_argument("cosine_sim: zero-norm vector");
    return dot / (std::sqrt(nu) * std::sqrt(nv));
}

namespace {

struct Normalized {
    Matrix unit;                // row-normalized embeddings
    std::vector<double> norms;  // original row norms
    Matrix sim;                 // cosine similarity matrix, 2N x 2N
};

void check_batch(const Matrix& z, double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("nt_xent: tau must be > 0");
    if (z.rows < 2 || z.rows % 2 != 0)
        throw std::invalid_argument("nt_xent: batch must hold 2N rows, N >= 1");
    if (z.cols < 1) throw std::invalid_argument("nt_xent: empty embedding dim");
    for (double v : z.data)
        if (!std::isfinite(v))
            throw std::invalid_argument("nt_xent: non-finite embedding entry");
}

Normalized normalize_rows(const Matrix& z) {
    Normalized n;
    n.unit = Matrix(z.rows, z.cols);
    n.norms.resize(static_cast<std::size_t>(z.rows));
    for (int i = 0; i < z.rows; ++i) {
        double sq = 0.0;
        for (int d = 0; d < z.cols; ++d) sq += z(i, d) * z(i, d);
        if (!(sq > 0.0))
            throw std::invalid_argument("nt_xent: zero-norm embedding row");
        const double norm = std::sqrt(sq);
        n.norms[static_cast<std::size_t>(i)] = norm;
        for (int d = 0; d < z.cols; ++d) n.unit(i, d) = z(i, d) / norm;
    }
    n.sim = Matrix(z.rows, z.rows);
    for (int i = 0; i < z.rows; ++i) {
        n.sim(i, i) = 1.0;
        for (int k = i + 1; k < z.rows; ++k) {
            double dot = 0.0;
            for (int d = 0; d < z.cols; ++d) dot += n.unit(i, d) * n.unit(k, d);
            n.sim(i, k) = dot;
            n.sim(k, i) = dot;
        }
    }
    return n;
}

// Per-anchor log-sum-exp over k != i of sim/tau, max-stabilized.
std::vector<double> anchor_lse(const Matrix& sim, double tau) {
    const int n = sim.rows;
    std::vector<double> lse(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double m = -std::numeric_limits<double>::infinity();
        for (int k = 0; k < n; ++k)
            if (k != i) m = std::max(m, sim(i, k) / tau);
        double sum = 0.0;
        for (int k = 0; k < n; ++k)
            if (k != i) sum += std::exp(sim(i, k) / tau - m);
        lse[static_cast<std::size_t>(i)] = m + std::log(sum);
    }
    return lse;
}

}  // namespace

LossReport nt_xent_loss(const Matrix& embeddings, double tau) {
    check_batch(embeddings, tau);
    const Normalized n = normalize_rows(embeddings);
    const auto lse = anchor_lse(n.sim, tau);

    LossReport report;
    report.tau = tau;
    report.per_anchor.resize(static_cast<std::size_t>(embeddings.rows));
    double total = 0.0;
    for (int i = 0; i < embeddings.rows; ++i) {
        const int partner = i ^ 1;
        const double li =
            lse[static_cast<std::size_t>(i)] - n.sim(i, partner) / tau;
        report.per_anchor[static_cast<std::size_t>(i)] = li;
        total += li;
    }
    report.loss = total / embeddings.rows;
    return report;
}

Matrix nt_xent_grad(const Matrix& embeddings, double tau) {
    check_batch(embeddings, tau);
    const int n = embeddings.rows;
    const Normalized nz = normalize_rows(embeddings);
    const auto lse = anchor_lse(nz.sim, tau);

    // coeff(i,k) = dL/d sim(i,k) restricted to anchor i, before symmetrizing.
    Matrix coeff(n, n);
    for (int i = 0; i < n; ++i) {
        const int partner = i ^ 1;
        for (int k = 0; k < n; ++k) {
            if (k == i) continue;
            const double p =
                std::exp(nz.sim(i, k) / tau - lse[static_cast<std::size_t>(i)]);
            coeff(i, k) = (p - (k == partner ? 1.0 : 0.0)) / tau;
        }
    }

    // Each unordered similarity feeds two anchors; fold both and the 1/2N
    // mean into a single symmetric weight matrix.
    Matrix weight(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            weight(i, k) = (coeff(i, k) + coeff(k, i)) / n;

    Matrix grad(n, embeddings.cols);
    for (int i = 0; i < n; ++i) {
        double along_self = 0.0;
        for (int k = 0; k < n; ++k) along_self += weight(i, k) * nz.sim(i, k);
        const double inv_norm = 1.0 / nz.norms[static_cast<std::size_t>(i)];
        for (int d = 0; d < embeddings.cols; ++d) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k) acc += weight(i, k) * nz.unit(k, d);
            grad(i, d) = inv_norm * (acc - along_self * nz.unit(i, d));
        }
    }
    return grad;
}

}  // namespace gcrop::train
