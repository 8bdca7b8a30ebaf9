#include "sisem/predicates.hpp"

#include <cmath>

namespace sisem {

bool is_selfadjoint(const CMatrix& a, const Tolerance& tol) {
    return approx_eq(a, adjoint(a), tol);
}

bool is_partial_isometry(const CMatrix& a, const Tolerance& tol) {
    const CMatrix astar = adjoint(a);
    return approx_eq(mul(mul(a, astar), a), a, tol);
}

bool is_power_partial_isometry(const CMatrix& a, const Tolerance& tol) {
    CMatrix p = a;
    for (int k = 1; k <= a.dim(); ++k) {
        if (!is_partial_isometry(p, tol)) return false;
        if (k < a.dim()) p = mul(p, a);
    }
    return true;
}

std::optional<int> nilpotency_degree(const CMatrix& a, const Tolerance& tol) {
    CMatrix p = a;
    for (int k = 1; k <= a.dim(); ++k) {
        if (approx_zero(p, tol)) return k;
        if (k < a.dim()) p = mul(p, a);
    }
    return std::nullopt;
}

bool kernel_dichotomy(const CMatrix& a, const Tolerance& tol) {
    return rank(a, tol) == rank(mul(a, a), tol);
}

std::optional<JordanSpec> recognize_jordan(const CMatrix& a) {
    const int n = a.dim();
    const Complex zero(0.0, 0.0);
    const Complex one(1.0, 0.0);

    // Superdiagonal must split the index range into blocks.
    for (int i = 0; i + 1 < n; ++i) {
        const Complex s = a.at(i, i + 1);
        if (s != zero && s != one) return std::nullopt;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == i || j == i + 1) continue;
            if (a.at(i, j) != zero) return std::nullopt;
        }

    JordanSpec spec;
    int start = 0;
    for (int i = 0; i < n; ++i) {
        const bool continues = (i + 1 < n) && a.at(i, i + 1) == one;
        if (a.at(i, i) != a.at(start, start)) return std::nullopt;
        if (!continues) {
            spec.blocks.push_back({a.at(start, start), i - start + 1});
            start = i + 1;
        }
    }
    return spec;
}

std::optional<ShiftSpec> recognize_shift(const CMatrix& a) {
    const int n = a.dim();
    const Complex zero(0.0, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j + 1 && a.at(i, j) != zero) return std::nullopt;
    ShiftSpec spec;
    for (int j = 0; j + 1 < n; ++j) spec.weights.push_back(a.at(j + 1, j));
    return spec;
}

std::optional<JordanPiSplit> jordan_pi_decomposition(const JordanSpec& spec, const Tolerance& tol) {
    JordanPiSplit split;
    for (const auto& b : spec.blocks) {
        const double mod = std::abs(b.lambda);
        if (mod <= tol.eps_abs) {
            split.shift_sizes.push_back(b.size);
        } else if (b.size == 1 && std::abs(mod - 1.0) <= tol.eps_abs) {
            split.unitary_lambdas.push_back(b.lambda);
        } else {
            return std::nullopt;
        }
    }
    return split;
}

}  // namespace sisem
