#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "sisem/oracle.hpp"
#include "sisem/predicates.hpp"

namespace sisem {

enum class Ternary { Yes, No, Inconclusive };

// Which conclusion a certificate backs; dual-use payloads (e.g. the rank pair
// refuting both the SI property and simplicity) validate differently per
// claim.
enum class Claim { SiYes, SiNo, SimpleYes, SimpleNo, Evidence };

struct Certificate;

struct CertSelfadjointGenerator {
    bool operator==(const CertSelfadjointGenerator&) const = default;
};
struct CertPowerPartialIsometry {
    int max_power_checked = 0;
    bool operator==(const CertPowerPartialIsometry&) const = default;
};
struct CertGroupSimple {
    Word t_inverse;
    Word t_star_inverse;
    bool operator==(const CertGroupSimple&) const = default;
};
struct CertJordanPi {
    std::vector<Complex> unitary_lambdas;
    std::vector<int> shift_sizes;
    bool operator==(const CertJordanPi&) const = default;
};
struct CertJordanNotPi {
    Complex block_lambda;
    int block_size = 0;
    bool operator==(const CertJordanNotPi&) const = default;
};
struct CertKernelDichotomyFail {
    int rank_a = 0;
    int rank_a2 = 0;
    bool operator==(const CertKernelDichotomyFail&) const = default;
};
struct CertDetModulus {
    double value = 0.0;
    bool operator==(const CertDetModulus&) const = default;
};
struct CertNormOneNotPi {
    double offending_s_value = 0.0;
    bool operator==(const CertNormOneNotPi&) const = default;
};
struct CertNonnegEntries {
    double min_nonzero_entry = 0.0;
    bool operator==(const CertNonnegEntries&) const = default;
};
struct CertNilpDeg3SmallSquare {
    double norm_t2 = 0.0;
    bool operator==(const CertNilpDeg3SmallSquare&) const = default;
};
struct CertUnitaryDirectSumZero {
    bool operator==(const CertUnitaryDirectSumZero&) const = default;
};
struct CertDirectSumComponent {
    int index = 0;
    std::shared_ptr<Certificate> inner;

    bool operator==(const CertDirectSumComponent& o) const;
};
struct CertOracleEvidence {
    OracleReport report;
    bool operator==(const CertOracleEvidence&) const = default;
};

using CertificatePayload =
    std::variant<CertSelfadjointGenerator, CertPowerPartialIsometry, CertGroupSimple, CertJordanPi,
                 CertJordanNotPi, CertKernelDichotomyFail, CertDetModulus, CertNormOneNotPi,
                 CertNonnegEntries, CertNilpDeg3SmallSquare, CertUnitaryDirectSumZero,
                 CertDirectSumComponent, CertOracleEvidence>;

// Tagged proof object carrying the numeric data needed to re-check the
// verdict independently of the classifier run.
struct Certificate {
    Claim claim = Claim::Evidence;
    CertificatePayload payload;

    std::string tag() const;
    bool operator==(const Certificate& o) const {
        return claim == o.claim && payload == o.payload;
    }
};

inline bool CertDirectSumComponent::operator==(const CertDirectSumComponent& o) const {
    if (index != o.index) return false;
    if (!inner || !o.inner) return inner == o.inner;
    return *inner == *o.inner;
}

struct Verdict {
    Ternary si = Ternary::Inconclusive;
    Ternary simple = Ternary::Inconclusive;
    Certificate certificate;
    std::vector<std::string> rule_trace;

    bool operator==(const Verdict&) const = default;
};

// Applies the rule ladder in fixed order; the first conclusive rule wins.
// Cheap structural rules run before any bounded search.
Verdict classify_si(const CMatrix& a, const Tolerance& tol = {}, const OracleBounds& budget = {});

Verdict classify_simple(const CMatrix& a, const Tolerance& tol = {},
                        const OracleBounds& budget = {});

// Recomputes the certificate's claims from scratch; false means the verdict
// that carried it must be discarded.
bool validate_certificate(const CMatrix& a, const Certificate& c, const Tolerance& tol = {});

// Product of per-factor minimum nonzero entries: a lower bound for the
// minimum nonzero entry of the product when that product is nonzero. Every
// factor must have all nonzero entries real and greater than one.
double min_nonzero_entry_bound(const std::vector<CMatrix>& factors, const Tolerance& tol = {});

std::string to_string(Ternary t);
std::string to_string(Claim c);

}  // namespace sisem
