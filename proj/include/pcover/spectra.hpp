/**
 * @brief Dense Hermitian eigenvalues by cyclic Jacobi, spectrum reports, and
 * the interlacing degree bound.
 *
 * Complex Hermitian M = X + iY is handled through the real symmetric
 * embedding [[X, -Y], [Y, X]], whose spectrum is that of M with every
 * eigenvalue doubled.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcover/graph.hpp"

namespace pcover {

using Complex = std::complex<double>;

/// Row-major square matrix.
template <class T>
class DenseMatrix {
  public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, T{}) {}

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix product: size mismatch");
        DenseMatrix c(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const T aik = a(i, k);
                if (aik == T{}) continue;
                for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

  private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using RealMatrix = DenseMatrix<double>;
using HermitianMatrix = DenseMatrix<Complex>;

inline RealMatrix adjacency_matrix(const Graph& g) {
    RealMatrix m(g.vertex_count());
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (auto v : g.neighbors(u)) m(u, v) = 1.0;
    return m;
}

inline double max_hermitian_deviation(const HermitianMatrix& m) {
    double dev = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) dev = std::max(dev, std::abs(m(i, j) - std::conj(m(j, i))));
    return dev;
}

namespace detail {
inline double off_diagonal_norm(const RealMatrix& a) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2 * s);
}
} // namespace detail

/// Eigenvalues of a real symmetric matrix in descending order. Cyclic Jacobi
/// sweeps until the off-diagonal Frobenius norm drops below 1e-12.
inline std::vector<double> symmetric_eigenvalues(RealMatrix a) {
    constexpr double tolerance = 1e-12;
    constexpr int max_sweeps = 100;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (std::abs(a(i, j) - a(j, i)) > 1e-10) throw std::invalid_argument("matrix is not symmetric");

    int sweep = 0;
    while (detail::off_diagonal_norm(a) >= tolerance) {
        if (++sweep > max_sweeps) throw std::runtime_error("Jacobi iteration did not converge");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

struct EigenCluster {
    double value;
    std::size_t multiplicity;
};

struct SpectrumReport {
    std::vector<double> eigenvalues; // descending
    std::vector<EigenCluster> clusters;
    std::string source;

    static constexpr double cluster_tolerance = 1e-6;

    static SpectrumReport from_eigenvalues(std::vector<double> ev, std::string source) {
        std::sort(ev.begin(), ev.end(), std::greater<>());
        SpectrumReport r{std::move(ev), {}, std::move(source)};
        std::size_t start = 0;
        for (std::size_t i = 1; i <= r.eigenvalues.size(); ++i) {
            if (i == r.eigenvalues.size() || r.eigenvalues[i - 1] - r.eigenvalues[i] > cluster_tolerance) {
                double sum = 0;
                for (std::size_t k = start; k < i; ++k) sum += r.eigenvalues[k];
                r.clusters.push_back({sum / static_cast<double>(i - start), i - start});
                start = i;
            }
        }
        return r;
    }

    [[nodiscard]] std::size_t size() const noexcept { return eigenvalues.size(); }
};

/// Eigenvalues of a Hermitian matrix via the real symmetric embedding.
inline SpectrumReport hermitian_eigenvalues(const HermitianMatrix& m, std::string source = "hermitian") {
    constexpr double hermitian_tolerance = 1e-10;
    if (m.size() > 2000) throw std::invalid_argument("hermitian_eigenvalues supports n <= 2000");
    if (max_hermitian_deviation(m) > hermitian_tolerance) throw std::invalid_argument("matrix is not Hermitian");
    const std::size_t n = m.size();
    RealMatrix e(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double re = m(i, j).real(), im = m(i, j).imag();
            e(i, j) = re;
            e(n + i, n + j) = re;
            e(i, n + j) = -im;
            e(n + i, j) = im;
        }
    }
    // Symmetrize away the rounding noise allowed by the Hermitian tolerance.
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = 0; j < i; ++j) e(i, j) = e(j, i) = 0.5 * (e(i, j) + e(j, i));
    const auto doubled = symmetric_eigenvalues(std::move(e));
    std::vector<double> ev;
    ev.reserve(n);
    for (std::size_t i = 0; i < doubled.size(); i += 2) ev.push_back(doubled[i]);
    return SpectrumReport::from_eigenvalues(std::move(ev), std::move(source));
}

inline SpectrumReport graph_spectrum(const Graph& g, std::string source = "adjacency") {
    return SpectrumReport::from_eigenvalues(symmetric_eigenvalues(adjacency_matrix(g)), std::move(source));
}

/// Max over rows of the sum of entry moduli.
inline double max_row_modulus_sum(const HermitianMatrix& m) {
    double best = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        double s = 0;
        for (std::size_t j = 0; j < m.size(); ++j) s += std::abs(m(i, j));
        best = std::max(best, s);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Interlacing degree bound

/// Smallest integer >= x, treating values within 1e-9 of an integer as that integer; never negative.
inline std::int64_t integer_degree_bound(double x) {
    constexpr double snap = 1e-9;
    const double r = std::round(x);
    const double v = std::abs(x - r) <= snap ? r : std::ceil(x);
    return std::max<std::int64_t>(0, static_cast<std::int64_t>(v));
}

/// For each s, any induced subgraph on s vertices has maximum degree at least
/// bound(s) = λ_{n-s+1}: its principal submatrix B has λ_1(B) >= λ_{n-s+1}
/// (Cauchy interlacing) and the degree dominates λ_1(B) because the edge
/// entries have unit modulus.
struct DegreeBoundTable {
    struct Row {
        std::size_t s;
        double bound;
        std::int64_t integer_bound;
    };
    std::vector<Row> rows; // s = n, n-1, ..., 1

    /// Smallest s whose integer bound reaches @p degree.
    [[nodiscard]] std::optional<std::size_t> minimal_size_for_degree(std::int64_t degree) const {
        std::optional<std::size_t> best;
        for (const auto& r : rows)
            if (r.integer_bound >= degree) best = r.s;
        return best;
    }

    [[nodiscard]] std::int64_t max_integer_bound() const {
        std::int64_t m = 0;
        for (const auto& r : rows) m = std::max(m, r.integer_bound);
        return m;
    }
};

inline DegreeBoundTable huang_degree_bound(const SpectrumReport& report) {
    DegreeBoundTable table;
    const std::size_t n = report.size();
    for (std::size_t s = n; s >= 1; --s) {
        const double bound = report.eigenvalues[n - s]; // λ_{n-s+1}, 1-based descending
        table.rows.push_back({s, bound, integer_degree_bound(bound)});
    }
    return table;
}

} // namespace pcover
