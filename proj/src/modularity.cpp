#include "modfilter/modularity.hpp"

#include <algorithm>
#include <cmath>

namespace modfilter {

namespace {

void check_vertex(const ModularityMatrix& m, int i, const char* who) {
    if (i < 0 || i >= m.size()) throw std::out_of_range(std::string(who) + ": vertex out of range");
}

} // namespace

double ModularityMatrix::total() const {
    double sum = 0.0;
    for (double v : e_) sum += v;
    return sum;
}

ModularityMatrix normalize(const SquareMatrix& raw_weights, std::span<const double> self_weights) {
    const int n = raw_weights.size();
    if (static_cast<int>(self_weights.size()) != n)
        throw std::invalid_argument("normalize: self_weights size mismatch");

    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        if (raw_weights(i, i) != 0.0)
            throw std::invalid_argument("normalize: raw weight matrix must have zero diagonal");
        if (self_weights[i] < 0.0)
            throw std::invalid_argument("normalize: negative self-weight");
        total += self_weights[i];
        for (int j = 0; j < n; ++j) {
            const double w = raw_weights(i, j);
            if (w < 0.0) throw std::invalid_argument("normalize: negative edge weight");
            if (w != raw_weights(j, i))
                throw std::invalid_argument("normalize: raw weight matrix must be symmetric");
            total += w;
        }
    }
    if (total <= 0.0) throw DegenerateGraphError("normalize: graph has zero total weight");

    std::vector<double> e(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            e[static_cast<std::size_t>(i) * n + j] =
                (i == j ? self_weights[i] : raw_weights(i, j)) / total;

    std::vector<double> a(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += e[static_cast<std::size_t>(i) * n + j];
        a[i] = row;
    }
    return ModularityMatrix(n, std::move(e), std::move(a), total);
}

ModularityMatrix normalize(const SquareMatrix& raw_weights) {
    const std::vector<double> zeros(static_cast<std::size_t>(raw_weights.size()), 0.0);
    return normalize(raw_weights, zeros);
}

double modularity(const ModularityMatrix& m) {
    double q = 0.0;
    for (int i = 0; i < m.size(); ++i) q += m.e(i, i) - m.strength(i) * m.strength(i);
    return q;
}

ModularityMatrix screed(const ModularityMatrix& m, std::span<const int> subset) {
    if (subset.empty()) throw std::invalid_argument("screed: subset must be non-empty");

    std::vector<char> in_subset(static_cast<std::size_t>(m.size()), 0);
    for (int v : subset) {
        check_vertex(m, v, "screed");
        in_subset[static_cast<std::size_t>(v)] = 1;
    }

    // The merged vertex takes the slot of the smallest subset index;
    // everything else keeps its relative order.
    std::vector<int> old_of_new;
    old_of_new.reserve(static_cast<std::size_t>(m.size()));
    int merged_slot = -1;
    for (int v = 0; v < m.size(); ++v) {
        if (in_subset[static_cast<std::size_t>(v)]) {
            if (merged_slot < 0) {
                merged_slot = static_cast<int>(old_of_new.size());
                old_of_new.push_back(-1); // placeholder for the merged vertex
            }
        } else {
            old_of_new.push_back(v);
        }
    }
    const int n_new = static_cast<int>(old_of_new.size());

    std::vector<double> e(static_cast<std::size_t>(n_new) * n_new, 0.0);
    auto at = [&](int i, int j) -> double& { return e[static_cast<std::size_t>(i) * n_new + j]; };

    for (int i = 0; i < n_new; ++i) {
        if (i == merged_slot) continue;
        const int oi = old_of_new[static_cast<std::size_t>(i)];
        for (int j = 0; j < n_new; ++j) {
            if (j == merged_slot) continue;
            at(i, j) = m.e(oi, old_of_new[static_cast<std::size_t>(j)]);
        }
    }

    // Merged self-weight: all internal vertex weights plus internal edges
    // in both orientations. Merged rows/columns accumulate per outside
    // endpoint, keeping the total at 1.
    double self = 0.0;
    for (int u = 0; u < m.size(); ++u) {
        if (!in_subset[static_cast<std::size_t>(u)]) continue;
        for (int v = 0; v < m.size(); ++v)
            if (in_subset[static_cast<std::size_t>(v)]) self += m.e(u, v);
    }
    at(merged_slot, merged_slot) = self;

    for (int j = 0; j < n_new; ++j) {
        if (j == merged_slot) continue;
        const int oj = old_of_new[static_cast<std::size_t>(j)];
        double w = 0.0;
        for (int u = 0; u < m.size(); ++u)
            if (in_subset[static_cast<std::size_t>(u)]) w += m.e(u, oj);
        at(merged_slot, j) = w;
        at(j, merged_slot) = w;
    }

    std::vector<double> a(static_cast<std::size_t>(n_new), 0.0);
    for (int i = 0; i < n_new; ++i) {
        double row = 0.0;
        for (int j = 0; j < n_new; ++j) row += at(i, j);
        a[static_cast<std::size_t>(i)] = row;
    }
    return ModularityMatrix(n_new, std::move(e), std::move(a), m.raw_total());
}

double delta_q(const ModularityMatrix& m, int i, int j) {
    check_vertex(m, i, "delta_q");
    check_vertex(m, j, "delta_q");
    if (i == j) throw std::invalid_argument("delta_q: vertices must differ");
    return 2.0 * (m.e(i, j) - m.strength(i) * m.strength(j));
}

double delta_q_direct(const ModularityMatrix& m, int i, int j) {
    check_vertex(m, i, "delta_q_direct");
    check_vertex(m, j, "delta_q_direct");
    if (i == j) throw std::invalid_argument("delta_q_direct: vertices must differ");
    const int subset[2] = {i, j};
    return modularity(screed(m, subset)) - modularity(m);
}

} // namespace modfilter
