#pragma once

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace sisem {

using Complex = std::complex<double>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct NumericalFailure : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct ZeroLambda : Error {
    using Error::Error;
};
struct PreconditionViolated : Error {
    using Error::Error;
};
struct UnknownCertificateTag : Error {
    using Error::Error;
};

// Comparison tolerances. eps_rel scales with the larger Frobenius norm of the
// matrices being compared; rank_cutoff is a factor applied to s1.
struct Tolerance {
    double eps_abs = 1e-9;
    double eps_rel = 1e-9;
    double rank_cutoff = 1e-10;

    void validate() const {
        if (!(eps_abs > 0.0) || !(eps_rel > 0.0) || !(rank_cutoff > 0.0))
            throw PreconditionViolated("Tolerance fields must be strictly positive");
    }
};

// Dense square complex matrix, row-major, value semantics. Immutable by
// convention once built; every operation below returns a fresh matrix.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(int n) : n_(check_dim(n)), a_(static_cast<size_t>(n) * n) {}

    static CMatrix zero(int n) { return CMatrix(n); }
    static CMatrix identity(int n);

    // Row-major list of n*n entries.
    static CMatrix from_entries(int n, std::vector<Complex> entries);
    static CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    int dim() const { return n_; }
    Complex& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Complex& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    const Complex* data() const { return a_.data(); }
    Complex* data() { return a_.data(); }
    const std::vector<Complex>& entries() const { return a_; }

    bool operator==(const CMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const CMatrix& o) const { return !(*this == o); }

    bool all_finite() const;

private:
    static int check_dim(int n) {
        if (n < 1) throw DimensionMismatch("matrix dimension must be positive");
        return n;
    }

    int n_ = 0;
    std::vector<Complex> a_;
};

// Singular values in nonincreasing order; values[0] is the operator norm.
struct SValues {
    std::vector<double> values;
};

CMatrix adjoint(const CMatrix& a);
CMatrix mul(const CMatrix& a, const CMatrix& b);
CMatrix add(const CMatrix& a, const CMatrix& b);
CMatrix sub(const CMatrix& a, const CMatrix& b);
CMatrix scale(Complex c, const CMatrix& a);
CMatrix pow_int(const CMatrix& a, int k);
CMatrix direct_sum(const CMatrix& a, const CMatrix& b);
CMatrix submatrix(const CMatrix& a, int offset, int size);

inline CMatrix operator*(const CMatrix& a, const CMatrix& b) { return mul(a, b); }

double frobenius_norm(const CMatrix& a);
double max_abs_entry(const CMatrix& a);
// Largest entrywise modulus of a-b.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

// One-sided Jacobi on the columns; small singular values keep full relative
// accuracy, which the rank cutoff depends on. Throws NumericalFailure if the
// sweeps do not converge.
SValues svalues(const CMatrix& a);

// Count of singular values above rank_cutoff * s1. Zero matrix has rank 0.
int rank(const CMatrix& a, const Tolerance& tol = {});

double op_norm(const CMatrix& a);

// Entrywise: max |a_ij - b_ij| <= eps_abs + eps_rel * max(|a|_F, |b|_F).
bool approx_eq(const CMatrix& a, const CMatrix& b, const Tolerance& tol = {});

bool approx_zero(const CMatrix& a, const Tolerance& tol = {});

// Determinant via partial-pivot LU.
Complex det(const CMatrix& a);

// Offsets and sizes of the finest contiguous block-diagonal partition, found
// from exactly-zero off-diagonal entries.
std::vector<std::pair<int, int>> block_partition(const CMatrix& a);

}  // namespace sisem
