#include "fim/pedigree.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "fim/errors.hpp"
#include "fim/gaussian_oracle.hpp"
#include "fim/rng.hpp"

namespace fim {

TreeAddress TreeAddress::parse(std::string_view word) {
    for (char c : word)
        if (c != '1' && c != '2') throw TreeError("TreeAddress: letters must be 1 or 2");
    return TreeAddress(std::string(word));
}

TreeAddress TreeAddress::child() const {
    if (is_root()) throw TreeError("TreeAddress: root has no child");
    return TreeAddress(word_.substr(0, word_.size() - 1));
}

std::pair<TreeAddress, TreeAddress> TreeAddress::parents() const {
    return {extended('1'), extended('2')};
}

TreeAddress TreeAddress::mate() const {
    if (is_root()) throw TreeError("TreeAddress: root has no mate");
    std::string w = word_;
    w.back() = (w.back() == '1') ? '2' : '1';
    return TreeAddress(std::move(w));
}

TreeAddress TreeAddress::meet(const TreeAddress& a, const TreeAddress& b) {
    std::size_t k = 0;
    while (k < a.word_.size() && k < b.word_.size() && a.word_[k] == b.word_[k]) ++k;
    return TreeAddress(a.word_.substr(0, k));
}

TreeAddress TreeAddress::extended(char letter) const {
    if (letter != '1' && letter != '2') throw TreeError("TreeAddress: letters must be 1 or 2");
    return TreeAddress(word_ + letter);
}

PerfectTree::PerfectTree(int n) : height(n) {
    if (n < 1 || n > 62) throw TreeError("PerfectTree: height must be in [1, 62]");
}

std::size_t PerfectTree::n_vertices_star() const { return 2 * ((std::size_t{1} << height) - 1); }
std::size_t PerfectTree::n_internal() const { return (std::size_t{1} << height) - 1; }
std::size_t PerfectTree::n_leaves() const { return std::size_t{1} << height; }

namespace {

// In-level rank: the word read as a binary number with digits {1,2}->{0,1}.
std::size_t level_rank(const TreeAddress& a) {
    std::size_t r = 0;
    for (char c : a.word()) r = 2 * r + static_cast<std::size_t>(c - '1');
    return r;
}

}  // namespace

std::size_t PerfectTree::ordinal(const TreeAddress& a) const {
    const int m = a.level();
    if (m < 1 || m > height) throw TreeError("PerfectTree::ordinal: vertex outside T^n_*");
    return ((std::size_t{1} << m) - 2) + level_rank(a);
}

TreeAddress PerfectTree::address_at(std::size_t ordinal) const {
    if (ordinal >= n_vertices_star()) throw TreeError("PerfectTree::address_at: out of range");
    int m = 1;
    while (ordinal >= ((std::size_t{1} << (m + 1)) - 2)) ++m;
    std::size_t r = ordinal - ((std::size_t{1} << m) - 2);
    std::string w(m, '1');
    for (int t = m - 1; t >= 0; --t) {
        w[t] = static_cast<char>('1' + (r & 1));
        r >>= 1;
    }
    return TreeAddress::parse(w);
}

std::size_t PerfectTree::internal_ordinal(const TreeAddress& a) const {
    const int m = a.level();
    if (m >= height) throw TreeError("PerfectTree::internal_ordinal: vertex is a leaf");
    return ((std::size_t{1} << m) - 1) + level_rank(a);
}

std::vector<TreeAddress> PerfectTree::level(int m) const {
    if (m < 0 || m > height) throw TreeError("PerfectTree::level: out of range");
    std::vector<TreeAddress> out;
    out.reserve(std::size_t{1} << m);
    std::string w(m, '1');
    if (m == 0) {
        out.push_back(TreeAddress());
        return out;
    }
    const std::size_t count = std::size_t{1} << m;
    for (std::size_t r = 0; r < count; ++r) {
        std::size_t v = r;
        for (int t = m - 1; t >= 0; --t) {
            w[t] = static_cast<char>('1' + (v & 1));
            v >>= 1;
        }
        out.push_back(TreeAddress::parse(w));
    }
    return out;
}

TreeVector::TreeVector(int n, int d) : height(n), dim(d) {
    if (n < 1 || d < 1) throw TreeError("TreeVector: height and dim must be >= 1");
    values.assign(PerfectTree(n).n_vertices_star() * static_cast<std::size_t>(d), 0.0);
}

std::span<double> TreeVector::at(std::size_t ordinal) {
    return {values.data() + ordinal * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
}

std::span<const double> TreeVector::at(std::size_t ordinal) const {
    return {values.data() + ordinal * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
}

namespace {

// Pair covariance entries for coefficient k: diagonal a, off-diagonal -b.
struct PairCov {
    double a;
    double b;
};

PairCov pair_cov(double k) {
    return {(2.0 - k) * k / (1.0 - k), k * k / (1.0 - k)};
}

}  // namespace

double quadratic_form_Q(const TreeVector& y, double alpha) {
    const int n = y.height;
    const Coefficients coef = coefficients(alpha, n);
    double q = 0.0;
    // Internal vertex at level m contributes the pair (i1,i2) with k_{n-m}.
    for (int m = 0; m < n; ++m) {
        const double k = coef.k[n - m - 1];
        const double inv4k = 0.25 / k;
        const std::size_t pair_base = (std::size_t{1} << (m + 1)) - 2;
        const std::size_t n_pairs = std::size_t{1} << m;
        for (std::size_t r = 0; r < n_pairs; ++r) {
            const auto y1 = y.at(pair_base + 2 * r);
            const auto y2 = y.at(pair_base + 2 * r + 1);
            for (int c = 0; c < y.dim; ++c) {
                const double d = y1[c] - y2[c];
                q += inv4k * (y1[c] * y1[c] + y2[c] * y2[c]) - 0.125 * d * d;
            }
        }
    }
    return q;
}

double quadratic_form_Q_via_covariance(const TreeVector& y, double alpha) {
    const int n = y.height;
    const Coefficients coef = coefficients(alpha, n);
    double q = 0.0;
    for (int m = 0; m < n; ++m) {
        const double k = coef.k[n - m - 1];
        const double inv_diag = (2.0 - k) / (4.0 * k);
        const double inv_off = 0.25;
        const std::size_t pair_base = (std::size_t{1} << (m + 1)) - 2;
        const std::size_t n_pairs = std::size_t{1} << m;
        for (std::size_t r = 0; r < n_pairs; ++r) {
            const auto y1 = y.at(pair_base + 2 * r);
            const auto y2 = y.at(pair_base + 2 * r + 1);
            for (int c = 0; c < y.dim; ++c)
                q += 0.5 * (inv_diag * (y1[c] * y1[c] + y2[c] * y2[c]) +
                            2.0 * inv_off * y1[c] * y2[c]);
        }
    }
    return q;
}

std::vector<double> lineage_map(std::span<const double> x, const TreeAddress& leaf,
                                const TreeVector& y, double alpha) {
    const int n = y.height;
    if (leaf.level() != n) throw TreeError("lineage_map: address is not a leaf");
    if (static_cast<int>(x.size()) != y.dim) throw HeightMismatchError("lineage_map: dim mismatch");
    const Coefficients coef = coefficients(alpha, n);
    const PerfectTree tree(n);
    std::vector<double> out(x.size());
    for (std::size_t c = 0; c < x.size(); ++c) out[c] = coef.kappa[n] * x[c];
    TreeAddress v = leaf;
    for (int m = 0; m < n; ++m) {
        const auto yv = y.at(tree.ordinal(v));
        for (std::size_t c = 0; c < x.size(); ++c) out[c] += coef.kappa[m] * yv[c];
        if (m + 1 < n) v = v.child();
    }
    return out;
}

namespace {

void sample_tree_gaussian_into(const PerfectTree& tree, const Coefficients& coef, int dim,
                               std::uint64_t seed, std::uint64_t index, TreeVector& out) {
    const int n = tree.height;
    const std::uint64_t h0 = mix64(seed, index);
    for (int m = 0; m < n; ++m) {
        const double k = coef.k[n - m - 1];
        const PairCov cv = pair_cov(k);
        // Cholesky factor of [[a,-b],[-b,a]]
        const double l11 = std::sqrt(cv.a);
        const double l21 = -cv.b / l11;
        const double l22 = std::sqrt((cv.a * cv.a - cv.b * cv.b) / cv.a);
        const std::size_t int_base = (std::size_t{1} << m) - 1;
        const std::size_t pair_base = (std::size_t{1} << (m + 1)) - 2;
        const std::size_t n_vertices = std::size_t{1} << m;
        for (std::size_t r = 0; r < n_vertices; ++r) {
            const std::uint64_t hv = mix64(h0, int_base + r);
            auto y1 = out.at(pair_base + 2 * r);
            auto y2 = out.at(pair_base + 2 * r + 1);
            for (int c = 0; c < dim; ++c) {
                const NormalPair z = normal_pair(mix64(hv, static_cast<std::uint64_t>(c)));
                y1[c] = l11 * z.z1;
                y2[c] = l21 * z.z1 + l22 * z.z2;
            }
        }
    }
}

}  // namespace

TreeVector sample_tree_gaussian(int n, double alpha, int dim, std::uint64_t seed,
                                std::uint64_t index) {
    const PerfectTree tree(n);
    const Coefficients coef = coefficients(alpha, n);
    for (double k : coef.k) {
        const PairCov cv = pair_cov(k);
        if (!(cv.a > 0.0) || !(cv.a * cv.a > cv.b * cv.b))
            throw std::logic_error("sample_tree_gaussian: degenerate covariance");  // k in (0,1)
    }
    TreeVector out(n, dim);
    sample_tree_gaussian_into(tree, coef, dim, seed, index, out);
    return out;
}

double leaf_covariance(const TreeAddress& i, const TreeAddress& j, int n, double alpha) {
    if (i.level() != n || j.level() != n) throw TreeError("leaf_covariance: addresses must be leaves");
    const Coefficients coef = coefficients(alpha, n);
    const int meet_level = TreeAddress::meet(i, j).level();
    const auto a_of = [&](int q) { return pair_cov(coef.k[q]).a; };      // a for k_{q+1}
    const auto b_of = [&](int q) { return pair_cov(coef.k[q]).b; };      // b for k_{q+1}
    const auto kap = [&](int q) { return coef.kappa[q]; };

    if (i == j) {
        double s = 0.0;
        for (int q = 0; q < n; ++q) s += kap(q) * kap(q) * a_of(q);
        return s;
    }
    if (meet_level == 0) return -kap(n - 1) * kap(n - 1) * b_of(n - 1);
    double s = -kap(n - meet_level - 1) * kap(n - meet_level - 1) * b_of(n - meet_level - 1);
    for (int q = n - meet_level; q < n; ++q) s += kap(q) * kap(q) * a_of(q);
    return s;
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Sum over leaves of log F0bar(kappa_n x + acc_j) for every requested x,
// where acc_j is the x-free part of the lineage map. Appends one row per x.
struct McAccumulator {
    std::vector<std::vector<double>> log_products;  // [x][sample]
};

}  // namespace

std::vector<McRatio> mc_profile_ratio(std::span<const double> xs, const InitialDatum& f0, int n,
                                      double alpha, std::size_t n_samples, std::uint64_t seed,
                                      std::size_t scalar_budget) {
    const PerfectTree tree(n);
    if (n_samples == 0) throw std::invalid_argument("mc_profile_ratio: n_samples must be > 0");
    if (tree.n_vertices_star() * n_samples > scalar_budget)
        throw TreeTooLargeError("mc_profile_ratio: 2(2^n-1)*n_samples exceeds the scalar budget");

    const Coefficients coef = coefficients(alpha, n);
    const double kn = coef.k[n - 1];
    const double kap_n = coef.kappa[n];
    const std::size_t n_leaves = tree.n_leaves();
    const std::size_t leaf_base = n_leaves - 2;  // ordinal of first leaf

    // Evaluation points: x = 0 (the denominator) first, then the requests.
    std::vector<double> points(1, 0.0);
    points.insert(points.end(), xs.begin(), xs.end());

    std::vector<std::vector<double>> logp(points.size());
    for (auto& row : logp) row.resize(n_samples);

    TreeVector y(n, 1);
    std::vector<double> acc(tree.n_vertices_star());
    for (std::size_t s = 0; s < n_samples; ++s) {
        sample_tree_gaussian_into(tree, coef, 1, seed, s, y);
        // acc(v) = sum_m kappa_m y_{child^m(v)} accumulated root-down;
        // vertex at level t carries weight kappa_{n-t}.
        for (int t = 1; t <= n; ++t) {
            const std::size_t base = (std::size_t{1} << t) - 2;
            const std::size_t parent_base = (std::size_t{1} << (t - 1)) - 2;
            const std::size_t count = std::size_t{1} << t;
            const double w = coef.kappa[n - t];
            for (std::size_t r = 0; r < count; ++r) {
                const double up = (t == 1) ? 0.0 : acc[parent_base + (r >> 1)];
                acc[base + r] = up + w * y.values[base + r];
            }
        }
        for (std::size_t p = 0; p < points.size(); ++p) {
            const double shift = kap_n * points[p];
            double lp = 0.0;
            for (std::size_t r = 0; r < n_leaves; ++r) {
                lp += datum_log_rescaled(f0, alpha, shift + acc[leaf_base + r]);
                if (lp == kNegInf) break;
            }
            logp[p][s] = lp;
        }
    }

    // Shared log-mean-exp shift across all evaluation points.
    double shift = kNegInf;
    for (const auto& row : logp)
        for (double v : row) shift = std::max(shift, v);
    if (shift == kNegInf)
        throw ZeroDensityAtLeafError("mc_profile_ratio: every sampled product vanished");

    std::vector<double> denom(n_samples);
    double denom_mean = 0.0;
    for (std::size_t s = 0; s < n_samples; ++s) {
        denom[s] = std::exp(logp[0][s] - shift);
        denom_mean += denom[s];
    }
    denom_mean /= static_cast<double>(n_samples);
    if (!(denom_mean > 0.0))
        throw ZeroDensityAtLeafError("mc_profile_ratio: denominator samples all vanished");

    std::vector<McRatio> out;
    out.reserve(xs.size());
    for (std::size_t p = 1; p < points.size(); ++p) {
        const double x = points[p];
        if (x == 0.0) {
            out.push_back({0.0, 1.0, 0.0});
            continue;
        }
        double num_mean = 0.0;
        for (std::size_t s = 0; s < n_samples; ++s) num_mean += std::exp(logp[p][s] - shift);
        num_mean /= static_cast<double>(n_samples);
        if (!(num_mean > 0.0))
            throw ZeroDensityAtLeafError("mc_profile_ratio: numerator samples all vanished");

        const double r = num_mean / denom_mean;
        double var = 0.0;
        if (n_samples > 1) {
            for (std::size_t s = 0; s < n_samples; ++s) {
                const double d = std::exp(logp[p][s] - shift) - r * denom[s];
                var += d * d;
            }
            var /= static_cast<double>(n_samples - 1);
        }
        const double se_r = std::sqrt(var / static_cast<double>(n_samples)) / denom_mean;

        const double prefactor = std::exp(-0.5 * (1.0 + alpha - kn) * x * x);
        out.push_back({x, prefactor * r, prefactor * se_r});
    }
    return out;
}

McRatio mc_profile_ratio(double x, const InitialDatum& f0, int n, double alpha,
                         std::size_t n_samples, std::uint64_t seed, std::size_t scalar_budget) {
    const double xs[1] = {x};
    return mc_profile_ratio(std::span<const double>(xs), f0, n, alpha, n_samples, seed,
                            scalar_budget)[0];
}

}  // namespace fim
