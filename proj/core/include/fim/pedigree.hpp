#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fim/initial_datum.hpp"

namespace fim {

// Vertex of a perfect binary ancestor tree: a word over {1,2}, the empty
// word being the root. Addresses order lexicographically.
class TreeAddress {
  public:
    TreeAddress() = default;
    static TreeAddress parse(std::string_view word);

    int level() const { return static_cast<int>(word_.size()); }
    bool is_root() const { return word_.empty(); }
    const std::string& word() const { return word_; }

    // Drops the last letter. The root has no child.
    TreeAddress child() const;
    // {i1, i2}. Leaves of a height-n tree have no parents inside it, but the
    // word operation itself is total.
    std::pair<TreeAddress, TreeAddress> parents() const;
    // Flips the last letter.
    TreeAddress mate() const;
    // Highest common descendant: the longest common prefix.
    static TreeAddress meet(const TreeAddress& a, const TreeAddress& b);

    TreeAddress extended(char letter) const;

    auto operator<=>(const TreeAddress&) const = default;

  private:
    explicit TreeAddress(std::string w) : word_(std::move(w)) {}
    std::string word_;
};

// Perfect binary tree of height n with the frozen level-major layout:
// vertices of T^n_* are stored level by level, lexicographically inside a
// level. Every consumer (Q_n, the sampler, serialization) indexes by it.
struct PerfectTree {
    int height;

    explicit PerfectTree(int n);

    std::size_t n_vertices_star() const;  // |T^n_*| = 2(2^n - 1)
    std::size_t n_internal() const;       // |T-hat^n| = 2^n - 1
    std::size_t n_leaves() const;         // 2^n

    // Position of a non-root vertex in the level-major layout.
    std::size_t ordinal(const TreeAddress& a) const;
    TreeAddress address_at(std::size_t ordinal) const;

    // Position of an internal vertex (root included) in level-major order.
    std::size_t internal_ordinal(const TreeAddress& a) const;

    std::vector<TreeAddress> level(int m) const;
    std::vector<TreeAddress> leaves() const { return level(height); }
};

// Family (y_i)_{i in T^n_*} of d-vectors in the layout above.
struct TreeVector {
    int height = 1;
    int dim = 1;
    std::vector<double> values;  // 2(2^n - 1) * d scalars

    TreeVector() = default;
    TreeVector(int n, int d);

    std::span<double> at(std::size_t ordinal);
    std::span<const double> at(std::size_t ordinal) const;
};

// Q_n(y) = sum_m sum_{i in L_m} (|y_i1|^2+|y_i2|^2)/(4 k_{n-m}) - |y_i1-y_i2|^2/8.
double quadratic_form_Q(const TreeVector& y, double alpha);

// Same quantity assembled from the per-pair inverse covariance blocks,
// (1/2) sum (y_i1,y_i2)^T Sigma^{-1} (y_i1,y_i2). Used as the independent
// route when checking that the tree Gaussian density is prop. to e^{-Q_n}.
double quadratic_form_Q_via_covariance(const TreeVector& y, double alpha);

// Lineage value of leaf j: kappa_n x + sum_m kappa_m y_{child^m(j)}.
std::vector<double> lineage_map(std::span<const double> x, const TreeAddress& leaf,
                                const TreeVector& y, double alpha);

// Draws (y_i) with the pair (Y_i1, Y_i2) of each internal vertex at level m
// sampled from N(0, Sigma_n^m), pairs independent across vertices. The draw
// is a pure function of (seed, index, vertex order) so any parallel schedule
// reproduces the same stream.
TreeVector sample_tree_gaussian(int n, double alpha, int dim, std::uint64_t seed,
                                std::uint64_t index);

// Scalar coefficient of I_d in Cov(Phi_n^i, Phi_n^j) for leaves i, j.
double leaf_covariance(const TreeAddress& i, const TreeAddress& j, int n, double alpha);

struct McRatio {
    double x = 0.0;
    double ratio = 1.0;
    double std_err = 0.0;
};

// Monte Carlo estimate of F_n(x)/F_n(0) through the pedigree reformulation:
// e^{-(1+alpha-k_n) x^2/2} E_n[F0_bar](x) / E_n[F0_bar](0), expectations
// averaged in log space with a shared shift; numerator and denominator use
// the same samples and the standard error comes from the delta method.
// Throws ZeroDensityAtLeafError when every sampled product vanishes.
std::vector<McRatio> mc_profile_ratio(std::span<const double> xs, const InitialDatum& f0, int n,
                                      double alpha, std::size_t n_samples, std::uint64_t seed,
                                      std::size_t scalar_budget = 1'000'000'000);

McRatio mc_profile_ratio(double x, const InitialDatum& f0, int n, double alpha,
                         std::size_t n_samples, std::uint64_t seed,
                         std::size_t scalar_budget = 1'000'000'000);

}  // namespace fim
