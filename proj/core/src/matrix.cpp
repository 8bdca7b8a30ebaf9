#include "sisem/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace sisem {

CMatrix CMatrix::identity(int n) {
    CMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Complex(1.0, 0.0);
    return m;
}

CMatrix CMatrix::from_entries(int n, std::vector<Complex> entries) {
    check_dim(n);
    if (entries.size() != static_cast<size_t>(n) * n)
        throw DimensionMismatch("entry count does not match dimension");
    CMatrix m;
    m.n_ = n;
    m.a_ = std::move(entries);
    if (!m.all_finite()) throw ParseError("matrix has non-finite entries");
    return m;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const int n = static_cast<int>(rows.size());
    check_dim(n);
    std::vector<Complex> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw DimensionMismatch("row length does not match dimension");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return from_entries(n, std::move(entries));
}

bool CMatrix::all_finite() const {
    for (const Complex& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

CMatrix adjoint(const CMatrix& a) {
    const int n = a.dim();
    CMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(j, i) = std::conj(a.at(i, j));
    return r;
}

static void require_same_dim(const CMatrix& a, const CMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("matrix dimensions differ");
}

CMatrix mul(const CMatrix& a, const CMatrix& b) {
    require_same_dim(a, b);
    const int n = a.dim();
    CMatrix r(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            const Complex* brow = b.data() + static_cast<size_t>(k) * n;
            Complex* rrow = r.data() + static_cast<size_t>(i) * n;
            for (int j = 0; j < n; ++j) rrow[j] += aik * brow[j];
        }
    }
    return r;
}

CMatrix add(const CMatrix& a, const CMatrix& b) {
    require_same_dim(a, b);
    const int n = a.dim();
    CMatrix r(n);
    for (int i = 0; i < n * n; ++i) r.data()[i] = a.data()[i] + b.data()[i];
    return r;
}

CMatrix sub(const CMatrix& a, const CMatrix& b) {
    require_same_dim(a, b);
    const int n = a.dim();
    CMatrix r(n);
    for (int i = 0; i < n * n; ++i) r.data()[i] = a.data()[i] - b.data()[i];
    return r;
}

CMatrix scale(Complex c, const CMatrix& a) {
    const int n = a.dim();
    CMatrix r(n);
    for (int i = 0; i < n * n; ++i) r.data()[i] = c * a.data()[i];
    return r;
}

CMatrix pow_int(const CMatrix& a, int k) {
    if (k < 1) throw PreconditionViolated("matrix power requires k >= 1");
    CMatrix r = a;
    for (int i = 1; i < k; ++i) r = mul(r, a);
    return r;
}

CMatrix direct_sum(const CMatrix& a, const CMatrix& b) {
    const int na = a.dim(), nb = b.dim();
    CMatrix r(na + nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) r.at(na + i, na + j) = b.at(i, j);
    return r;
}

CMatrix submatrix(const CMatrix& a, int offset, int size) {
    if (offset < 0 || size < 1 || offset + size > a.dim())
        throw DimensionMismatch("submatrix range out of bounds");
    CMatrix r(size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) r.at(i, j) = a.at(offset + i, offset + j);
    return r;
}

double frobenius_norm(const CMatrix& a) {
    double s = 0.0;
    for (const Complex& z : a.entries()) s += std::norm(z);
    return std::sqrt(s);
}

double max_abs_entry(const CMatrix& a) {
    double m = 0.0;
    for (const Complex& z : a.entries()) m = std::max(m, std::abs(z));
    return m;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    require_same_dim(a, b);
    double m = 0.0;
    const size_t count = a.entries().size();
    for (size_t i = 0; i < count; ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

// Hestenes one-sided Jacobi: orthogonalize column pairs until every Gram
// off-diagonal is negligible; the column norms are then the singular values.
SValues svalues(const CMatrix& a) {
    const int n = a.dim();
    std::vector<Complex> col(static_cast<size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) col[static_cast<size_t>(j) * n + i] = a.at(i, j);

    auto col_ptr = [&](int j) { return col.data() + static_cast<size_t>(j) * n; };

    constexpr double kConvergence = 1e-13;
    constexpr int kMaxSweeps = 60;
    // Columns at the rounding floor never settle under the cosine test; they
    // carry singular values far below any rank cutoff, so deflate them.
    double fro2 = 0.0;
    for (const Complex& z : col) fro2 += std::norm(z);
    const double deflate2 = fro2 * 1e-28;
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        converged = true;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                Complex* cp = col_ptr(p);
                Complex* cq = col_ptr(q);
                double alpha = 0.0, beta = 0.0;
                Complex gamma(0.0, 0.0);
                for (int i = 0; i < n; ++i) {
                    alpha += std::norm(cp[i]);
                    beta += std::norm(cq[i]);
                    gamma += std::conj(cp[i]) * cq[i];
                }
                if (alpha <= deflate2 || beta <= deflate2) continue;
                const double g = std::abs(gamma);
                if (g <= kConvergence * std::sqrt(alpha * beta) || g == 0.0) continue;
                converged = false;
                const Complex phase = gamma / g;
                const double tau = (beta - alpha) / (2.0 * g);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                // Columns [cp cq] <- [cp cq] * R with R unitary; Gram goes diagonal.
                for (int i = 0; i < n; ++i) {
                    const Complex u = cp[i];
                    const Complex v = cq[i];
                    cp[i] = c * u - s * std::conj(phase) * v;
                    cq[i] = s * phase * u + c * v;
                }
            }
        }
    }
    if (!converged) throw NumericalFailure("svalues: Jacobi sweeps did not converge");

    SValues out;
    out.values.resize(n);
    for (int j = 0; j < n; ++j) {
        double s2 = 0.0;
        const Complex* cj = col_ptr(j);
        for (int i = 0; i < n; ++i) s2 += std::norm(cj[i]);
        out.values[j] = std::sqrt(s2);
    }
    std::sort(out.values.begin(), out.values.end(), std::greater<double>());
    return out;
}

int rank(const CMatrix& a, const Tolerance& tol) {
    const SValues s = svalues(a);
    const double cutoff = tol.rank_cutoff * s.values.front();
    int r = 0;
    for (double v : s.values)
        if (v > cutoff && v > 0.0) ++r;
    return r;
}

double op_norm(const CMatrix& a) { return svalues(a).values.front(); }

bool approx_eq(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
    require_same_dim(a, b);
    const double scale = std::max(frobenius_norm(a), frobenius_norm(b));
    return max_abs_diff(a, b) <= tol.eps_abs + tol.eps_rel * scale;
}

bool approx_zero(const CMatrix& a, const Tolerance& tol) {
    return max_abs_entry(a) <= tol.eps_abs + tol.eps_rel * frobenius_norm(a);
}

Complex det(const CMatrix& a) {
    const int n = a.dim();
    std::vector<Complex> lu(a.entries());
    auto at = [&](int i, int j) -> Complex& { return lu[static_cast<size_t>(i) * n + j]; };
    Complex d(1.0, 0.0);
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(at(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(at(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0.0) return Complex(0.0, 0.0);
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(k, j));
            d = -d;
        }
        d *= at(k, k);
        for (int i = k + 1; i < n; ++i) {
            const Complex f = at(i, k) / at(k, k);
            for (int j = k + 1; j < n; ++j) at(i, j) -= f * at(k, j);
        }
    }
    return d;
}

std::vector<std::pair<int, int>> block_partition(const CMatrix& a) {
    const int n = a.dim();
    std::vector<std::pair<int, int>> blocks;
    int start = 0, reach = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (a.at(i, j) != Complex(0.0, 0.0) || a.at(j, i) != Complex(0.0, 0.0))
                reach = std::max(reach, j);
        }
        if (i == reach) {
            blocks.emplace_back(start, i - start + 1);
            start = i + 1;
            reach = i + 1;
        }
    }
    return blocks;
}

}  // namespace sisem
