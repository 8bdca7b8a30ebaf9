#pragma once

#include <random>
#include <vector>

#include "sisem/builders.hpp"
#include "sisem/matrix.hpp"

namespace sisem::test {

inline CMatrix random_matrix(int n, std::mt19937_64& gen, double scale = 1.0) {
    std::uniform_real_distribution<double> d(-scale, scale);
    CMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Complex(d(gen), d(gen));
    return m;
}

// Modified Gram-Schmidt on the columns of a random matrix; almost surely
// invertible, so the result is unitary.
inline CMatrix random_unitary(int n, std::mt19937_64& gen) {
    while (true) {
        const CMatrix a = random_matrix(n, gen);
        std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            for (int i = 0; i < n; ++i) cols[j][i] = a.at(i, j);
            for (int k = 0; k < j; ++k) {
                Complex proj(0.0, 0.0);
                for (int i = 0; i < n; ++i) proj += std::conj(cols[k][i]) * cols[j][i];
                for (int i = 0; i < n; ++i) cols[j][i] -= proj * cols[k][i];
            }
            double norm2 = 0.0;
            for (int i = 0; i < n; ++i) norm2 += std::norm(cols[j][i]);
            if (norm2 < 1e-12) {
                ok = false;
                break;
            }
            const double inv = 1.0 / std::sqrt(norm2);
            for (int i = 0; i < n; ++i) cols[j][i] *= inv;
        }
        if (!ok) continue;
        CMatrix u(n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) u.at(i, j) = cols[j][i];
        return u;
    }
}

// Generic partial isometry of the given rank: U diag(1..1,0..0) V*.
inline CMatrix random_partial_isometry(int n, int rank, std::mt19937_64& gen) {
    const CMatrix u = random_unitary(n, gen);
    const CMatrix v = random_unitary(n, gen);
    CMatrix d(n);
    for (int i = 0; i < rank; ++i) d.at(i, i) = 1.0;
    return mul(mul(u, d), adjoint(v));
}

inline std::vector<Complex> apply(const CMatrix& a, const std::vector<Complex>& x) {
    std::vector<Complex> y(static_cast<size_t>(a.dim()), Complex(0.0, 0.0));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) y[static_cast<size_t>(i)] += a.at(i, j) * x[static_cast<size_t>(j)];
    return y;
}

// Orthonormal basis of the column space, dropping columns below the cutoff.
inline std::vector<std::vector<Complex>> range_basis(const CMatrix& a, double cutoff = 1e-9) {
    const int n = a.dim();
    std::vector<std::vector<Complex>> basis;
    for (int j = 0; j < n; ++j) {
        std::vector<Complex> v(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = a.at(i, j);
        for (const auto& b : basis) {
            Complex proj(0.0, 0.0);
            for (int i = 0; i < n; ++i) proj += std::conj(b[static_cast<size_t>(i)]) * v[static_cast<size_t>(i)];
            for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] -= proj * b[static_cast<size_t>(i)];
        }
        double norm2 = 0.0;
        for (const Complex& z : v) norm2 += std::norm(z);
        if (norm2 <= cutoff * cutoff) continue;
        const double inv = 1.0 / std::sqrt(norm2);
        for (Complex& z : v) z *= inv;
        basis.push_back(std::move(v));
    }
    return basis;
}

inline double distance_to_span(const std::vector<Complex>& x,
                               const std::vector<std::vector<Complex>>& basis) {
    std::vector<Complex> r = x;
    for (const auto& b : basis) {
        Complex proj(0.0, 0.0);
        for (size_t i = 0; i < r.size(); ++i) proj += std::conj(b[i]) * r[i];
        for (size_t i = 0; i < r.size(); ++i) r[i] -= proj * b[i];
    }
    double norm2 = 0.0;
    for (const Complex& z : r) norm2 += std::norm(z);
    return std::sqrt(norm2);
}

// Independent eigenvalue oracle for A*A: sample det(A*A - xI) on a grid and
// bisect each sign change. Only usable when the eigenvalues are simple.
inline std::vector<double> gram_eigs_by_bisection(const CMatrix& a, int grid = 4000) {
    const CMatrix h = mul(adjoint(a), a);
    const int n = h.dim();
    auto charpoly = [&](double x) {
        CMatrix s = h;
        for (int i = 0; i < n; ++i) s.at(i, i) -= x;
        return det(s).real();
    };
    double hi = 1.0;
    for (int i = 0; i < n; ++i) hi += std::abs(h.at(i, i).real());
    const double lo = -hi * 1e-6;
    std::vector<double> roots;
    double prev_x = lo, prev_f = charpoly(lo);
    for (int k = 1; k <= grid; ++k) {
        const double x = lo + (hi - lo) * k / grid;
        const double f = charpoly(x);
        if ((prev_f < 0 && f > 0) || (prev_f > 0 && f < 0)) {
            double a0 = prev_x, b0 = x;
            for (int it = 0; it < 100; ++it) {
                const double m = 0.5 * (a0 + b0);
                const double fm = charpoly(m);
                if ((fm < 0) == (prev_f < 0))
                    a0 = m;
                else
                    b0 = m;
            }
            roots.push_back(0.5 * (a0 + b0));
        }
        prev_x = x;
        prev_f = f;
    }
    return roots;
}

// All Jordan specs with sizes summing to total_dim and lambdas drawn from the
// grid (ordered compositions, one lambda choice per block).
inline std::vector<JordanSpec> jordan_specs_up_to(int max_dim, const std::vector<Complex>& lambdas) {
    std::vector<JordanSpec> out;
    std::vector<JordanSpec> partial{JordanSpec{}};
    for (int target = 1; target <= max_dim; ++target) {
        std::vector<JordanSpec> stack{JordanSpec{}};
        // Depth-first over compositions of target.
        struct Frame {
            JordanSpec spec;
            int remaining;
        };
        std::vector<Frame> frames{{JordanSpec{}, target}};
        while (!frames.empty()) {
            Frame f = std::move(frames.back());
            frames.pop_back();
            if (f.remaining == 0) {
                out.push_back(std::move(f.spec));
                continue;
            }
            for (int size = f.remaining; size >= 1; --size) {
                for (const Complex& lam : lambdas) {
                    Frame next = f;
                    next.spec.blocks.push_back({lam, size});
                    next.remaining = f.remaining - size;
                    frames.push_back(std::move(next));
                }
            }
        }
    }
    (void)partial;
    return out;
}

// Exhaustive weight tuples from the symbol set for shifts of dim 2..max_dim.
inline std::vector<std::vector<Complex>> shift_weight_grid(int max_dim,
                                                           const std::vector<Complex>& symbols) {
    std::vector<std::vector<Complex>> out;
    for (int n = 2; n <= max_dim; ++n) {
        const int len = n - 1;
        std::vector<size_t> idx(static_cast<size_t>(len), 0);
        while (true) {
            std::vector<Complex> w(static_cast<size_t>(len));
            for (int i = 0; i < len; ++i) w[static_cast<size_t>(i)] = symbols[idx[static_cast<size_t>(i)]];
            out.push_back(std::move(w));
            int i = len - 1;
            while (i >= 0 && ++idx[static_cast<size_t>(i)] == symbols.size()) {
                idx[static_cast<size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
        }
    }
    return out;
}

}  // namespace sisem::test
