#ifndef SGT_SPECTRA_HPP
#define SGT_SPECTRA_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sgt/error.hpp"
#include "sgt/graph.hpp"
#include "sgt/matrix.hpp"
#include "sgt/polynomial.hpp"

namespace sgt {

// ---------------------------------------------------------------------------
// Symmetric eigensolver
// ---------------------------------------------------------------------------

/// Eigenvalues in non-increasing order; column k of `vectors` is a unit
/// eigenvector for values[k].
struct SymmetricEigen {
    std::vector<double> values;
    RealMatrix vectors;
};

namespace detail {

inline double off_diagonal_norm(const RealMatrix& a) {
    double s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            s += 2 * a(i, j) * a(i, j);
    return std::sqrt(s);
}

} // namespace detail

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// 1e-12 (or stops shrinking). Deterministic for a given matrix.
inline SymmetricEigen symmetric_eigen(RealMatrix a) {
    if (!a.square())
        throw Error(ErrorKind::NotSymmetric, "eigensolver needs a square matrix");
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(a(i, j) - a(j, i)) > 1e-12 * (1 + std::abs(a(i, j))))
                throw Error(ErrorKind::NotSymmetric, "eigensolver input is not symmetric at (" +
                                                         std::to_string(i) + "," +
                                                         std::to_string(j) + ")");

    RealMatrix v = RealMatrix::identity(n);
    constexpr double kTolerance = 1e-12;
    constexpr int kMaxSweeps = 100;
    double last_off = detail::off_diagonal_norm(a);
    for (int sweep = 0; sweep < kMaxSweeps && last_off >= kTolerance; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (apq == 0.0)
                    continue;
                double theta = (a(q, q) - a(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
        double off = detail::off_diagonal_norm(a);
        if (off >= last_off)
            break;
        last_off = off;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
    SymmetricEigen out;
    out.values.reserve(n);
    out.vectors = RealMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values.push_back(a(order[k], order[k]));
        for (std::size_t i = 0; i < n; ++i)
            out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

inline std::vector<double> symmetric_eigenvalues(const RealMatrix& a) {
    return symmetric_eigen(a).values;
}

// ---------------------------------------------------------------------------
// Graph spectra
// ---------------------------------------------------------------------------

/// Eigenvalues of a signed graph (or of its adjacency matrix), sorted
/// non-increasing.
class Spectrum {
public:
    Spectrum() = default;
    explicit Spectrum(std::vector<double> values) : values_(std::move(values)) {
        std::sort(values_.begin(), values_.end(), std::greater<>());
    }

    std::span<const double> values() const& noexcept { return values_; }
    // A span into a temporary would dangle in a range-for; hand over the storage.
    std::vector<double> values() && noexcept { return std::move(values_); }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

    /// lambda_1; 0 for the empty spectrum.
    double index() const { return values_.empty() ? 0.0 : values_.front(); }
    double smallest() const { return values_.empty() ? 0.0 : values_.back(); }
    double spectral_radius() const { return std::max(index(), -smallest()); }
    double sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

private:
    std::vector<double> values_;
};

inline Spectrum eigenvalues(const SignedMatrix& m) {
    return Spectrum(symmetric_eigenvalues(m.entries().cast<double>()));
}

inline Spectrum spectrum(const SignedGraph& g) { return eigenvalues(adjacency_matrix(g)); }

inline double index(const SignedGraph& g) {
    if (g.order() < 1)
        throw Error(ErrorKind::ParameterRange, "index needs at least one vertex");
    return spectrum(g).index();
}

inline double spectral_radius(const SignedGraph& g) { return spectrum(g).spectral_radius(); }

/// Index together with a unit eigenvector.
struct LeadingPair {
    double value = 0;
    std::vector<double> vector;
};

/// ||A x - lambda x||_2
inline double eigen_residual(const SignedGraph& g, double lambda, std::span<const double> x) {
    double s = 0;
    for (Vertex i = 0; i < g.order(); ++i) {
        double ax = 0;
        for (Vertex j = 0; j < g.order(); ++j)
            ax += g.sign(i, j) * x[static_cast<std::size_t>(j)];
        double d = ax - lambda * x[static_cast<std::size_t>(i)];
        s += d * d;
    }
    return std::sqrt(s);
}

/// lambda_1 and a unit eigenvector taken from the Jacobi rotation
/// accumulator. The sign is fixed so that the entry-sum is non-negative
/// (first nonzero entry positive on ties). With a repeated lambda_1 any unit
/// vector of the eigenspace is a valid answer.
inline LeadingPair leading_eigenpair(const SignedGraph& g) {
    if (g.order() < 1)
        throw Error(ErrorKind::ParameterRange, "leading eigenvector needs at least one vertex");
    auto eig = symmetric_eigen(adjacency_matrix(g).entries().cast<double>());
    auto n = static_cast<std::size_t>(g.order());
    LeadingPair out{eig.values.front(), std::vector<double>(n)};
    double norm = 0, sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        out.vector[i] = eig.vectors(i, 0);
        norm += out.vector[i] * out.vector[i];
        sum += out.vector[i];
    }
    norm = std::sqrt(norm);
    bool flip = sum < -1e-12;
    if (std::abs(sum) <= 1e-12)
        for (double x : out.vector)
            if (std::abs(x) > 1e-12) {
                flip = x < 0;
                break;
            }
    for (auto& x : out.vector)
        x = (flip ? -x : x) / norm;
    return out;
}

inline std::vector<double> leading_eigenvector(const SignedGraph& g) {
    return leading_eigenpair(g).vector;
}

// ---------------------------------------------------------------------------
// Characteristic polynomials
// ---------------------------------------------------------------------------

/// det(xI - M) by the Faddeev-LeVerrier recurrence in checked 128-bit
/// arithmetic. Each division by k is exact for integer matrices.
inline IntPolynomial char_poly(const IntMatrix& m) {
    if (!m.square())
        throw Error(ErrorKind::ParameterRange, "characteristic polynomial needs a square matrix");
    const std::size_t n = m.rows();
    using detail::checked_add;
    using detail::checked_mul;
    std::vector<wide_int> coeff(n + 1, 0);
    coeff[n] = 1;
    // mk holds M_k; product holds A * M_k.
    std::vector<wide_int> mk(n * n, 0), product(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        mk[i * n + i] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                wide_int s = 0;
                for (std::size_t l = 0; l < n; ++l)
                    if (m(i, l) != 0)
                        s = checked_add(s, checked_mul(m(i, l), mk[l * n + j]));
                product[i * n + j] = s;
            }
        wide_int trace = 0;
        for (std::size_t i = 0; i < n; ++i)
            trace = checked_add(trace, product[i * n + i]);
        if (trace % static_cast<wide_int>(k) != 0)
            throw Error(ErrorKind::Overflow, "Faddeev-LeVerrier division was not exact");
        coeff[n - k] = -trace / static_cast<wide_int>(k);
        mk = product;
        for (std::size_t i = 0; i < n; ++i)
            mk[i * n + i] = checked_add(mk[i * n + i], coeff[n - k]);
    }
    std::vector<std::int64_t> out;
    out.reserve(n + 1);
    for (auto c : coeff)
        out.push_back(detail::narrow(c));
    return IntPolynomial(std::move(out));
}

inline IntPolynomial char_poly(const SignedMatrix& m) { return char_poly(m.entries()); }

// ---------------------------------------------------------------------------
// Equitable partitions
// ---------------------------------------------------------------------------

/// Ordered blocks covering 0..n-1 exactly once, none empty.
class Partition {
public:
    Partition() = default;
    Partition(int n, std::vector<std::vector<Vertex>> blocks) : n_(n), blocks_(std::move(blocks)) {
        std::vector<char> seen(static_cast<std::size_t>(std::max(n, 0)), 0);
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            if (blocks_[b].empty())
                throw Error(ErrorKind::InvalidPartition, "block " + std::to_string(b) + " is empty");
            for (Vertex v : blocks_[b]) {
                if (v < 0 || v >= n)
                    throw Error(ErrorKind::InvalidPartition,
                                "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
                if (seen[v]++)
                    throw Error(ErrorKind::InvalidPartition,
                                "vertex " + std::to_string(v) + " appears in more than one block");
            }
        }
        for (Vertex v = 0; v < n; ++v)
            if (!seen[v])
                throw Error(ErrorKind::InvalidPartition,
                            "vertex " + std::to_string(v) + " is not covered");
    }

    static Partition singletons(int n) {
        std::vector<std::vector<Vertex>> b;
        for (Vertex v = 0; v < n; ++v)
            b.push_back({v});
        return Partition(n, std::move(b));
    }

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return blocks_.size(); }
    const std::vector<std::vector<Vertex>>& blocks() const noexcept { return blocks_; }

private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> blocks_;
};

/// Quotient matrix of an equitable partition: q(i, j) is the common row sum
/// of the block rows V_i against columns V_j. Equitability is checked; the
/// error names the first violating block pair and the two rows that differ.
inline IntMatrix quotient_matrix(const IntMatrix& m, const Partition& p) {
    if (!m.square() || m.rows() != static_cast<std::size_t>(p.order()))
        throw Error(ErrorKind::InvalidPartition, "partition order does not match the matrix");
    const auto& blocks = p.blocks();
    const std::size_t k = blocks.size();
    IntMatrix q(k, k);
    for (std::size_t bi = 0; bi < k; ++bi) {
        for (std::size_t bj = 0; bj < k; ++bj) {
            std::int64_t first = 0;
            for (std::size_t r = 0; r < blocks[bi].size(); ++r) {
                Vertex row = blocks[bi][r];
                std::int64_t s = 0;
                for (Vertex col : blocks[bj])
                    s += m(row, col);
                if (r == 0)
                    first = s;
                else if (s != first)
                    throw Error(ErrorKind::NotEquitable,
                                "partition is not equitable: block pair (" + std::to_string(bi) +
                                    "," + std::to_string(bj) + ") has row " +
                                    std::to_string(blocks[bi][0]) + " summing to " +
                                    std::to_string(first) + " but row " + std::to_string(row) +
                                    " summing to " + std::to_string(s));
            }
            q(bi, bj) = first;
        }
    }
    return q;
}

inline IntMatrix quotient_matrix(const SignedMatrix& m, const Partition& p) {
    return quotient_matrix(m.entries(), p);
}

/// Eigenvalues of the quotient of a symmetric matrix. Q itself need not be
/// symmetric, but D^{1/2} Q D^{-1/2} with D = diag(|V_i|) is, and has the
/// same spectrum.
inline std::vector<double> quotient_eigenvalues(const IntMatrix& q, const Partition& p) {
    const std::size_t k = q.rows();
    RealMatrix s(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            s(i, j) = static_cast<double>(q(i, j)) *
                      std::sqrt(static_cast<double>(p.blocks()[i].size()) /
                                static_cast<double>(p.blocks()[j].size()));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            double avg = (s(i, j) + s(j, i)) / 2;
            if (std::abs(s(i, j) - s(j, i)) > 1e-9 * (1 + std::abs(avg)))
                throw Error(ErrorKind::NotSymmetric, "quotient does not come from a symmetric matrix");
            s(i, j) = s(j, i) = avg;
        }
    return symmetric_eigenvalues(s);
}

// ---------------------------------------------------------------------------
// The cubic whose largest root is the index of the one-negative-edge
// extremal graph, and a bracketed root finder for it.
// ---------------------------------------------------------------------------

/// f(x) = x^3 + (3-n)x^2 + (3-n-r)x + (n+4)r - (r^2+n+7), for 3 <= r <= n-1.
inline IntPolynomial gamma_cubic(std::int64_t n, std::int64_t r) {
    if (r < 3 || r > n - 1)
        throw Error(ErrorKind::ParameterRange,
                    "gamma_cubic needs 3 <= r <= n-1 (got n=" + std::to_string(n) +
                        ", r=" + std::to_string(r) + ")");
    return IntPolynomial{(n + 4) * r - (r * r + n + 7), 3 - n - r, 3 - n, 1};
}

/// The quotient matrix Q1 of the one-negative-edge extremal graph with
/// respect to the blocks {0}, {1}, {2..r-1}, {r..n-1}.
inline IntMatrix gamma_quotient(std::int64_t n, std::int64_t r) {
    return IntMatrix{{0, -1, r - 2, 0},
                     {-1, 0, r - 2, n - r},
                     {1, 1, r - 3, n - r},
                     {0, 1, r - 2, n - r - 1}};
}

/// Largest root of p in [lo, hi]. Works on the square-free part of p so
/// that repeated roots still show a sign change, scans a 1e-3 grid down from
/// hi for the rightmost sign change (or exact zero), then bisects to 1e-12.
inline double largest_real_root(const IntPolynomial& p, double lo, double hi) {
    if (!(lo <= hi))
        throw Error(ErrorKind::ParameterRange, "root bracket needs lo <= hi");
    if (p.is_zero())
        throw Error(ErrorKind::Precondition, "zero polynomial has no isolated roots");
    if (p.evaluate(static_cast<long double>(lo)) == 0 && p.evaluate(static_cast<long double>(hi)) == 0 && lo != hi)
        throw Error(ErrorKind::Precondition, "polynomial vanishes at both ends of the bracket");
    auto q = squarefree_part(p);
    auto eval = [&](long double x) { return q.evaluate(x); };
    auto sgn = [](long double v) { return (v > 0) - (v < 0); };

    constexpr double kGrid = 1e-3;
    auto steps = static_cast<std::int64_t>(std::ceil((hi - lo) / kGrid));
    steps = std::max<std::int64_t>(steps, 1);
    auto point = [&](std::int64_t i) {
        if (i == steps)
            return static_cast<long double>(lo);
        return static_cast<long double>(hi) -
               (static_cast<long double>(hi) - lo) * static_cast<long double>(i) / steps;
    };
    long double right = point(0);
    long double f_right = eval(right);
    if (f_right == 0)
        return static_cast<double>(right);
    for (std::int64_t i = 1; i <= steps; ++i) {
        long double left = point(i);
        long double f_left = eval(left);
        if (f_left == 0)
            return static_cast<double>(left);
        if (sgn(f_left) != sgn(f_right)) {
            long double a = left, b = right;
            int sa = sgn(f_left);
            for (int it = 0; it < 200 && b - a > 1e-13L; ++it) {
                long double mid = (a + b) / 2;
                long double fm = eval(mid);
                if (fm == 0)
                    return static_cast<double>(mid);
                if (sgn(fm) == sa)
                    a = mid;
                else
                    b = mid;
            }
            return static_cast<double>((a + b) / 2);
        }
        right = left;
        f_right = f_left;
    }
    throw Error(ErrorKind::NoSignChange, "no root found in [" + std::to_string(lo) + ", " +
                                             std::to_string(hi) + "]");
}

} // namespace sgt

#endif // SGT_SPECTRA_HPP
