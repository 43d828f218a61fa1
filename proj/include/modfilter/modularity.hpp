#ifndef MODFILTER_MODULARITY_HPP
#define MODFILTER_MODULARITY_HPP

#include <span>
#include <stdexcept>
#include <vector>

namespace modfilter {

/// Graph has no edge weight at all (total weight zero), so the reduced
/// matrix is undefined. The filter treats such pixels as undamaged.
struct DegenerateGraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense symmetric matrix used to assemble raw edge weights before
/// normalization. The diagonal stays zero; vertex self-weights are passed
/// to normalize() separately.
class SquareMatrix {
public:
    explicit SquareMatrix(int n) : n_(n), values_(static_cast<std::size_t>(n) * n, 0.0) {
        if (n <= 0) throw std::invalid_argument("SquareMatrix: size must be positive");
    }

    int size() const { return n_; }

    double operator()(int i, int j) const { return values_[static_cast<std::size_t>(i) * n_ + j]; }
    double& operator()(int i, int j) { return values_[static_cast<std::size_t>(i) * n_ + j]; }

    /// Sets w_ij = w_ji = w.
    void set_edge(int i, int j, double w) {
        (*this)(i, j) = w;
        (*this)(j, i) = w;
    }

private:
    int n_;
    std::vector<double> values_;
};

/// Reduced weight matrix e = E/m together with the vertex strengths
/// a_i = sum_j e_ij (full row sum, diagonal included) and the raw total m.
/// All entries sum to 1. Immutable once built.
class ModularityMatrix {
public:
    int size() const { return n_; }
    double raw_total() const { return m_raw_; }

    double e(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    double strength(int i) const { return a_[i]; }

    double total() const; // sum of all e entries, 1 up to rounding

    friend ModularityMatrix normalize(const SquareMatrix& raw_weights,
                                      std::span<const double> self_weights);
    friend ModularityMatrix screed(const ModularityMatrix& m, std::span<const int> subset);

private:
    ModularityMatrix(int n, std::vector<double> e, std::vector<double> a, double m_raw)
        : n_(n), e_(std::move(e)), a_(std::move(a)), m_raw_(m_raw) {}

    int n_;
    std::vector<double> e_;
    std::vector<double> a_;
    double m_raw_;
};

/// Builds the reduced matrix from a symmetric non-negative weight matrix
/// (zero diagonal) plus per-vertex self-weights: e = E/m, m = sum E_ij.
/// Throws DegenerateGraphError when the total is zero.
ModularityMatrix normalize(const SquareMatrix& raw_weights, std::span<const double> self_weights);
ModularityMatrix normalize(const SquareMatrix& raw_weights);

/// Q = sum_i e_ii - sum_i a_i^2.
double modularity(const ModularityMatrix& m);

/// Merges the subset into a single vertex placed at the smallest subset
/// index: self-weight accumulates all internal vertex and edge weight,
/// outside edges accumulate per endpoint. Total weight is preserved, so
/// merging a singleton is the identity.
ModularityMatrix screed(const ModularityMatrix& m, std::span<const int> subset);

/// Fast merge delta for two singleton communities: 2(e_ij - a_i a_j).
double delta_q(const ModularityMatrix& m, int i, int j);

/// Exact merge delta by construction: modularity(screed(m,{i,j})) -
/// modularity(m). Serves as the correctness oracle for delta_q.
double delta_q_direct(const ModularityMatrix& m, int i, int j);

} // namespace modfilter

#endif // MODFILTER_MODULARITY_HPP
