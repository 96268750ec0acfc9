#include "gait/umap/layout.hpp"

#include "gait/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gait::umap {

ObjectiveValue layout_objective(const Matrix& z, const FuzzyGraph& graph, double a, double b) {
    const std::size_t dim = z.cols();
    ObjectiveValue out;
    out.gradient = Matrix(z.rows(), dim, 0.0);

    for (const auto& e : graph.edges) {
        const double* zi = z.row_ptr(e.i);
        const double* zj = z.row_ptr(e.j);
        const double u = stats::squared_euclidean(zi, zj, dim);
        const double mu = e.weight;

        // Attractive part: mu * log(1 + a u^b).
        double dlo_du = 0.0;
        if (u > 0.0) {
            const double ub = std::pow(u, b);
            out.loss += mu * std::log1p(a * ub);
            dlo_du += mu * a * b * std::pow(u, b - 1.0) / (1.0 + a * ub);
        }

        // Repulsive part, evaluated at u + eps so coincident points stay
        // finite: −(1 − mu) * log(1 − phi(u + eps)).
        if (mu < 1.0) {
            const double ug = u + kRepulsionEps;
            const double ugb = std::pow(ug, b);
            out.loss -= (1.0 - mu) * (std::log(a) + b * std::log(ug) - std::log1p(a * ugb));
            dlo_du -= (1.0 - mu) * b / (ug * (1.0 + a * ugb));
        }

        for (std::size_t c = 0; c < dim; ++c) {
            const double g = dlo_du * 2.0 * (zi[c] - zj[c]);
            out.gradient(e.i, c) += g;
            out.gradient(e.j, c) -= g;
        }
    }
    return out;
}

namespace {

double clip4(double v) { return std::clamp(v, -4.0, 4.0); }

} // namespace

void sgd_layout(Matrix& z, const FuzzyGraph& graph, const SgdParams& params, Rng& rng) {
    const std::size_t n = z.rows();
    const std::size_t dim = z.cols();
    if (n == 0 || graph.edges.empty() || params.epochs == 0) return;

    double max_weight = 0.0;
    for (const auto& e : graph.edges) max_weight = std::max(max_weight, e.weight);
    const double prune_below = max_weight / static_cast<double>(params.epochs);

    // Expand to directed edges: each endpoint takes a turn as the moving
    // head for negative sampling, mirroring the usual reference dynamics.
    struct DirectedEdge {
        std::size_t head;
        std::size_t tail;
        double epochs_per_sample;
    };
    std::vector<DirectedEdge> edges;
    edges.reserve(graph.edges.size() * 2);
    for (const auto& e : graph.edges) {
        if (e.weight < prune_below) continue; // would fire less than once
        const double eps_per_sample = max_weight / e.weight;
        edges.push_back({e.i, e.j, eps_per_sample});
        edges.push_back({e.j, e.i, eps_per_sample});
    }
    if (edges.empty()) return;

    std::vector<double> next_sample(edges.size());
    std::vector<double> next_negative(edges.size());
    std::vector<double> eps_per_negative(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        next_sample[e] = edges[e].epochs_per_sample;
        eps_per_negative[e] =
            edges[e].epochs_per_sample / static_cast<double>(params.negative_samples);
        next_negative[e] = eps_per_negative[e];
    }

    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});

    const double a = params.a;
    const double b = params.b;
    for (std::size_t epoch = 0; epoch < params.epochs; ++epoch) {
        const double alpha = params.initial_lr *
                             (1.0 - static_cast<double>(epoch) /
                                        static_cast<double>(params.epochs));
        const double now = static_cast<double>(epoch + 1);
        rng.shuffle(order);

        for (std::size_t idx : order) {
            if (next_sample[idx] > now) continue;
            const auto& e = edges[idx];
            double* head = z.row_ptr(e.head);
            double* tail = z.row_ptr(e.tail);

            const double u = stats::squared_euclidean(head, tail, dim);
            if (u > 0.0) {
                const double coeff =
                    -2.0 * a * b * std::pow(u, b - 1.0) / (1.0 + a * std::pow(u, b));
                for (std::size_t c = 0; c < dim; ++c) {
                    const double g = clip4(coeff * (head[c] - tail[c]));
                    head[c] += alpha * g;
                    tail[c] -= alpha * g;
                }
            }
            next_sample[idx] += e.epochs_per_sample;

            const std::size_t n_neg = static_cast<std::size_t>(
                (now - next_negative[idx]) / eps_per_negative[idx]);
            for (std::size_t p = 0; p < n_neg; ++p) {
                const std::size_t other = static_cast<std::size_t>(rng.bounded(n));
                if (other == e.head) continue;
                const double* oz = z.row_ptr(other);
                const double ur = stats::squared_euclidean(head, oz, dim);
                if (ur <= 0.0) continue; // coincident non-self point: no direction
                const double coeff = 2.0 * params.repulsion_strength * b /
                                     ((kRepulsionEps + ur) * (1.0 + a * std::pow(ur, b)));
                for (std::size_t c = 0; c < dim; ++c) {
                    head[c] += alpha * clip4(coeff * (head[c] - oz[c]));
                }
            }
            next_negative[idx] += static_cast<double>(n_neg) * eps_per_negative[idx];
        }
    }
}

} // namespace gait::umap
