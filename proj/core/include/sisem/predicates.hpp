#pragma once

#include <optional>
#include <vector>

#include "sisem/matrix.hpp"

namespace sisem {

// Ordered Jordan blocks (lambda, size). Recognition is exact: the structure is
// an input format, not a measurement.
struct JordanSpec {
    struct Block {
        Complex lambda;
        int size = 1;
        bool operator==(const Block& o) const { return lambda == o.lambda && size == o.size; }
    };
    std::vector<Block> blocks;

    int total_dim() const {
        int d = 0;
        for (const auto& b : blocks) d += b.size;
        return d;
    }
    bool operator==(const JordanSpec& o) const { return blocks == o.blocks; }
};

// Weighted shift: T e_j = weights[j-1] e_{j+1}, T e_n = 0.
struct ShiftSpec {
    std::vector<Complex> weights;
    bool operator==(const ShiftSpec& o) const { return weights == o.weights; }
};

// Split of a partially isometric Jordan matrix into a diagonal unitary part
// and a direct sum of shifts (zero blocks of any size).
struct JordanPiSplit {
    std::vector<Complex> unitary_lambdas;
    std::vector<int> shift_sizes;
};

bool is_selfadjoint(const CMatrix& a, const Tolerance& tol = {});

// A A* A == A within tolerance; the zero matrix counts.
bool is_partial_isometry(const CMatrix& a, const Tolerance& tol = {});

// Powers up to the dimension suffice: ranks of powers stabilize by step n and
// nilpotent parts vanish by A^n.
bool is_power_partial_isometry(const CMatrix& a, const Tolerance& tol = {});

// Smallest k <= n with A^k ~ 0, or nullopt.
std::optional<int> nilpotency_degree(const CMatrix& a, const Tolerance& tol = {});

// rank(A) == rank(A^2), equivalent to ker A == ker A^2 by rank-nullity.
bool kernel_dichotomy(const CMatrix& a, const Tolerance& tol = {});

// Exact structural parse: constant diagonal per block, superdiagonal entries
// exactly one inside blocks and zero at boundaries, zero elsewhere.
std::optional<JordanSpec> recognize_jordan(const CMatrix& a);

// Exact structural parse of a subdiagonal-only matrix.
std::optional<ShiftSpec> recognize_shift(const CMatrix& a);

// Present iff every block is 1x1 with |lambda| in {0,1} or has lambda == 0;
// exactly the partially isometric Jordan matrices.
std::optional<JordanPiSplit> jordan_pi_decomposition(const JordanSpec& spec,
                                                     const Tolerance& tol = {});

}  // namespace sisem
