#include "sisem/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sisem {

std::string Certificate::tag() const {
    switch (payload.index()) {
        case 0: return "SelfadjointGenerator";
        case 1: return "PowerPartialIsometry";
        case 2: return "GroupSimple";
        case 3: return "JordanPI";
        case 4: return "JordanNotPI";
        case 5: return "KernelDichotomyFail";
        case 6: return "DetModulus";
        case 7: return "NormOneNotPI";
        case 8: return "NonnegEntries";
        case 9: return "NilpDeg3SmallSquare";
        case 10: return "UnitaryDirectSumZero";
        case 11: return "DirectSumComponent";
        case 12: return "OracleEvidence";
    }
    return "?";
}

std::string to_string(Ternary t) {
    switch (t) {
        case Ternary::Yes: return "YES";
        case Ternary::No: return "NO";
        default: return "INCONCLUSIVE";
    }
}

std::string to_string(Claim c) {
    switch (c) {
        case Claim::SiYes: return "SI-YES";
        case Claim::SiNo: return "SI-NO";
        case Claim::SimpleYes: return "SIMPLE-YES";
        case Claim::SimpleNo: return "SIMPLE-NO";
        default: return "EVIDENCE";
    }
}

namespace {

bool quasi_isometry_relation(const CMatrix& a, const Tolerance& tol) {
    return approx_eq(mul(mul(adjoint(a), a), a), a, tol);
}

// All nonzero entries real and uniformly > 1 (or uniformly < -1); returns the
// minimum modulus among them.
std::optional<double> uniform_entries_beyond_one(const CMatrix& a, const Tolerance& tol) {
    bool any = false, all_pos = true, all_neg = true;
    double min_mod = std::numeric_limits<double>::infinity();
    for (const Complex& z : a.entries()) {
        if (std::abs(z) <= tol.eps_abs) continue;
        if (std::abs(z.imag()) > tol.eps_abs) return std::nullopt;
        const double re = z.real();
        if (re > 1.0)
            all_neg = false;
        else if (re < -1.0)
            all_pos = false;
        else
            return std::nullopt;
        any = true;
        min_mod = std::min(min_mod, std::abs(re));
    }
    if (!any || (!all_pos && !all_neg)) return std::nullopt;
    return min_mod;
}

bool block_is_pi_compatible(const JordanSpec::Block& b, const Tolerance& tol) {
    const double mod = std::abs(b.lambda);
    if (mod <= tol.eps_abs) return true;
    return b.size == 1 && std::abs(mod - 1.0) <= tol.eps_abs;
}

// |lambda| strictly inside (1 - eps, 1), where the block rules stay silent.
bool block_in_boundary_band(const JordanSpec::Block& b, const Tolerance& tol) {
    const double mod = std::abs(b.lambda);
    return b.size >= 2 && mod < 1.0 && mod > 1.0 - tol.eps_abs;
}

bool block_matches_unitary_plus_zero(const JordanSpec::Block& b, const Tolerance& tol) {
    if (b.size != 1) return false;
    const double mod = std::abs(b.lambda);
    return mod <= tol.eps_abs || std::abs(mod - 1.0) <= tol.eps_abs;
}

Verdict make_si(Ternary si, Claim claim, CertificatePayload payload,
                std::vector<std::string> trace) {
    Verdict v;
    v.si = si;
    v.certificate = Certificate{claim, std::move(payload)};
    v.rule_trace = std::move(trace);
    return v;
}

}  // namespace

Verdict classify_si(const CMatrix& a, const Tolerance& tol, const OracleBounds& budget) {
    const int n = a.dim();
    std::vector<std::string> trace;

    // R0: selfadjoint generators are automatically SI.
    if (is_selfadjoint(a, tol)) {
        trace.push_back("R0-selfadjoint");
        return make_si(Ternary::Yes, Claim::SiYes, CertSelfadjointGenerator{}, std::move(trace));
    }

    // R1: power partial isometry.
    if (is_power_partial_isometry(a, tol)) {
        trace.push_back("R1-power-partial-isometry");
        return make_si(Ternary::Yes, Claim::SiYes, CertPowerPartialIsometry{n}, std::move(trace));
    }

    const bool pi = is_partial_isometry(a, tol);
    const int rank_a = rank(a, tol);
    const int rank_a2 = rank(mul(a, a), tol);

    // R2: kernel dichotomy fails and not a partial isometry.
    if (rank_a != rank_a2 && !pi) {
        trace.push_back("R2-kernel-dichotomy");
        return make_si(Ternary::No, Claim::SiNo, CertKernelDichotomyFail{rank_a, rank_a2},
                       std::move(trace));
    }

    const std::optional<int> nilp = nilpotency_degree(a, tol);

    // R3: nonzero nilpotent that is not a partial isometry. Subsumed by R2
    // (the rank of a nonzero nilpotent always drops), kept for rule-order
    // fidelity.
    if (nilp && !pi) {
        trace.push_back("R3-nilpotent-not-pi");
        return make_si(Ternary::No, Claim::SiNo, CertKernelDichotomyFail{rank_a, rank_a2},
                       std::move(trace));
    }

    // R4: nilpotency degree 2 reduces SI to the partial isometry test.
    if (nilp && *nilp == 2) {
        trace.push_back("R4-nilpotent-deg2");
        if (pi)
            return make_si(Ternary::Yes, Claim::SiYes, CertPowerPartialIsometry{n},
                           std::move(trace));
        return make_si(Ternary::No, Claim::SiNo, CertKernelDichotomyFail{rank_a, rank_a2},
                       std::move(trace));
    }

    // R5: weighted shifts reduce SI to the partial isometry test.
    if (recognize_shift(a)) {
        trace.push_back("R5-weighted-shift");
        if (pi)
            return make_si(Ternary::Yes, Claim::SiYes, CertPowerPartialIsometry{n},
                           std::move(trace));
        return make_si(Ternary::No, Claim::SiNo, CertKernelDichotomyFail{rank_a, rank_a2},
                       std::move(trace));
    }

    // R6: nilpotent degree 3 partial isometry with a strictly contractive
    // square.
    if (nilp && *nilp == 3 && pi) {
        const double norm_t2 = op_norm(mul(a, a));
        if (norm_t2 < 1.0 - tol.eps_abs) {
            trace.push_back("R6-nilp-deg3-small-square");
            return make_si(Ternary::No, Claim::SiNo, CertNilpDeg3SmallSquare{norm_t2},
                           std::move(trace));
        }
    }

    // R7: invertible with determinant modulus away from one.
    const bool invertible = (rank_a == n);
    if (invertible) {
        const double dm = std::abs(det(a));
        if (std::abs(dm - 1.0) > tol.eps_abs) {
            trace.push_back("R7-det-modulus");
            return make_si(Ternary::No, Claim::SiNo, CertDetModulus{dm}, std::move(trace));
        }
    }

    // R8/R9/R10: Jordan structure.
    bool boundary = false;
    if (const auto spec = recognize_jordan(a)) {
        const bool non_normal =
            std::any_of(spec->blocks.begin(), spec->blocks.end(),
                        [](const JordanSpec::Block& b) { return b.size >= 2; });
        if (non_normal) {
            const char* rule = spec->blocks.size() == 1 ? "R10-jordan-block" : "R8-jordan-pi";
            if (const auto split = jordan_pi_decomposition(*spec, tol)) {
                trace.push_back(rule);
                return make_si(Ternary::Yes, Claim::SiYes,
                               CertJordanPi{split->unitary_lambdas, split->shift_sizes},
                               std::move(trace));
            }
            const auto bad = std::find_if_not(
                spec->blocks.begin(), spec->blocks.end(),
                [&](const JordanSpec::Block& b) { return block_is_pi_compatible(b, tol); });
            if (block_in_boundary_band(*bad, tol)) {
                trace.push_back(std::string(rule) + "-boundary");
                boundary = true;  // eigenvalue just below the unit circle: stay open
            } else {
                trace.push_back(rule);
                return make_si(Ternary::No, Claim::SiNo, CertJordanNotPi{bad->lambda, bad->size},
                               std::move(trace));
            }
        } else if (invertible) {
            // R9: normal invertible Jordan matrix, SI iff unitary.
            const auto bad = std::find_if(
                spec->blocks.begin(), spec->blocks.end(), [&](const JordanSpec::Block& b) {
                    return std::abs(std::abs(b.lambda) - 1.0) > tol.eps_abs;
                });
            if (bad != spec->blocks.end()) {
                trace.push_back("R9-jordan-unitary");
                return make_si(Ternary::No, Claim::SiNo, CertJordanNotPi{bad->lambda, bad->size},
                               std::move(trace));
            }
        }
    }

    // R11: norm one without being a partial isometry.
    if (!pi) {
        const SValues sv = svalues(a);
        if (std::abs(sv.values.front() - 1.0) <= tol.eps_abs) {
            for (double s : sv.values) {
                if (std::min(s, std::abs(s - 1.0)) > tol.eps_abs) {
                    trace.push_back("R11-norm-one-not-pi");
                    return make_si(Ternary::No, Claim::SiNo, CertNormOneNotPi{s},
                                   std::move(trace));
                }
            }
        }
    }

    // R12: all nonzero entries real and beyond one in modulus.
    if (const auto min_entry = uniform_entries_beyond_one(a, tol)) {
        trace.push_back("R12-entries-beyond-one");
        return make_si(Ternary::No, Claim::SiNo, CertNonnegEntries{*min_entry}, std::move(trace));
    }

    // R13: a block-diagonal generator is not SI once any diagonal block
    // fails. One-way only; SI components prove nothing for the sum.
    if (const auto blocks = block_partition(a); blocks.size() >= 2) {
        for (size_t i = 0; i < blocks.size(); ++i) {
            Verdict sub = classify_si(submatrix(a, blocks[i].first, blocks[i].second), tol, budget);
            if (sub.si == Ternary::No) {
                trace.push_back("R13-direct-sum");
                return make_si(Ternary::No, Claim::SiNo,
                               CertDirectSumComponent{
                                   static_cast<int>(i),
                                   std::make_shared<Certificate>(std::move(sub.certificate))},
                               std::move(trace));
            }
        }
    }

    // R14: bounded closure forms a group.
    SemigroupTable table = enumerate_semigroup(a, budget.factor_max_len, budget.enum_limits(), tol);
    if (const auto gw = group_detect(a, table, tol)) {
        trace.push_back("R14-group");
        Verdict v = make_si(Ternary::Yes, Claim::SimpleYes,
                            CertGroupSimple{gw->t_inverse, gw->t_star_inverse}, std::move(trace));
        v.simple = Ternary::Yes;
        return v;
    }

    // R15: the quasi-isometry relation (T*T)T = T forces a simple semigroup.
    if (quasi_isometry_relation(a, tol)) {
        trace.push_back("R15-quasi-isometry");
        Verdict v = make_si(Ternary::Yes, Claim::SimpleYes, CertUnitaryDirectSumZero{},
                            std::move(trace));
        v.simple = Ternary::Yes;
        return v;
    }

    // R16: bounded search evidence only.
    trace.push_back(boundary ? "R16-oracle-boundary" : "R16-oracle");
    OracleReport report = si_scan(a, budget.w_max, table, tol);
    return make_si(Ternary::Inconclusive, Claim::Evidence, CertOracleEvidence{std::move(report)},
                   std::move(trace));
}

Verdict classify_simple(const CMatrix& a, const Tolerance& tol, const OracleBounds& budget) {
    std::vector<std::string> trace;

    // S0: a refuted SI property refutes simplicity (simple semigroups are
    // vacuously SI).
    Verdict si = classify_si(a, tol, budget);
    if (si.si == Ternary::No) {
        si.simple = Ternary::No;
        si.rule_trace.push_back("S0-not-si");
        return si;
    }
    if (si.simple == Ternary::Yes) return si;  // group / quasi-isometry path

    // S1: a rank drop from A to A^2 keeps A out of the principal ideal of
    // A^2.
    const int rank_a = rank(a, tol);
    const int rank_a2 = rank(mul(a, a), tol);
    if (rank_a2 < rank_a) {
        trace.push_back("S1-rank-drop");
        Verdict v;
        v.si = si.si;
        v.simple = Ternary::No;
        v.certificate = Certificate{Claim::SimpleNo, CertKernelDichotomyFail{rank_a, rank_a2}};
        v.rule_trace = std::move(trace);
        return v;
    }

    SemigroupTable table = enumerate_semigroup(a, budget.factor_max_len, budget.enum_limits(), tol);

    // S2: bounded closure forms a group.
    if (const auto gw = group_detect(a, table, tol)) {
        trace.push_back("S2-group");
        Verdict v;
        v.si = Ternary::Yes;
        v.simple = Ternary::Yes;
        v.certificate = Certificate{Claim::SimpleYes, CertGroupSimple{gw->t_inverse, gw->t_star_inverse}};
        v.rule_trace = std::move(trace);
        return v;
    }

    // S3: quasi-isometry relation.
    if (quasi_isometry_relation(a, tol)) {
        trace.push_back("S3-quasi-isometry");
        Verdict v;
        v.si = Ternary::Yes;
        v.simple = Ternary::Yes;
        v.certificate = Certificate{Claim::SimpleYes, CertUnitaryDirectSumZero{}};
        v.rule_trace = std::move(trace);
        return v;
    }

    // S4: simplicity for selfadjoint generators is delegated to the oracle.
    if (is_selfadjoint(a, tol)) {
        trace.push_back("S4-selfadjoint-oracle");
        Verdict v;
        v.si = si.si;
        v.simple = Ternary::Inconclusive;
        v.certificate = Certificate{
            Claim::Evidence, CertOracleEvidence{simplicity_scan(a, budget.w_max, table, tol)}};
        v.rule_trace = std::move(trace);
        return v;
    }

    // S5: nonselfadjoint Jordan generators are simple exactly when the
    // blocks form a diagonal unitary plus a zero summand.
    if (const auto spec = recognize_jordan(a)) {
        bool boundary = false;
        const JordanSpec::Block* offending = nullptr;
        for (const auto& b : spec->blocks) {
            if (block_matches_unitary_plus_zero(b, tol)) continue;
            if (block_in_boundary_band(b, tol)) {
                boundary = true;
                continue;
            }
            offending = &b;
            break;
        }
        if (!offending && !boundary) {
            trace.push_back("S5-jordan-unitary-plus-zero");
            Verdict v;
            v.si = Ternary::Yes;
            v.simple = Ternary::Yes;
            v.certificate = Certificate{Claim::SimpleYes, CertUnitaryDirectSumZero{}};
            v.rule_trace = std::move(trace);
            return v;
        }
        if (offending) {
            trace.push_back("S5-jordan-not-unitary-plus-zero");
            Verdict v;
            v.si = si.si;
            v.simple = Ternary::No;
            v.certificate =
                Certificate{Claim::SimpleNo, CertJordanNotPi{offending->lambda, offending->size}};
            v.rule_trace = std::move(trace);
            return v;
        }
        trace.push_back("S5-jordan-boundary");
    }

    // S6: bounded search evidence only.
    trace.push_back("S6-oracle");
    Verdict v;
    v.si = si.si;
    v.simple = Ternary::Inconclusive;
    v.certificate = Certificate{Claim::Evidence,
                                CertOracleEvidence{simplicity_scan(a, budget.w_max, table, tol)}};
    v.rule_trace = std::move(trace);
    return v;
}

namespace {

bool validate_oracle_evidence(const CMatrix& a, const CertOracleEvidence& ev,
                              const Tolerance& tol) {
    for (const WordOutcome& o : ev.report.outcomes) {
        if (!o.solved) continue;
        const CMatrix wv = eval(o.word, a);
        auto factor = [&](const std::optional<Word>& w) {
            return w ? eval(*w, a) : CMatrix::identity(a.dim());
        };
        if (ev.report.mode == ScanMode::Si) {
            if (!approx_eq(mul(mul(factor(o.x), wv), factor(o.y)), adjoint(wv), tol)) return false;
        } else {
            if (!approx_eq(mul(mul(factor(o.x), wv), factor(o.y)), a, tol)) return false;
            if (!approx_eq(mul(mul(factor(o.x_star), wv), factor(o.y_star)), adjoint(a), tol))
                return false;
        }
    }
    return true;
}

}  // namespace

bool validate_certificate(const CMatrix& a, const Certificate& c, const Tolerance& tol) {
    const int n = a.dim();
    return std::visit(
        [&](const auto& p) -> bool {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, CertSelfadjointGenerator>) {
                return is_selfadjoint(a, tol);
            } else if constexpr (std::is_same_v<P, CertPowerPartialIsometry>) {
                return p.max_power_checked >= n && is_power_partial_isometry(a, tol);
            } else if constexpr (std::is_same_v<P, CertGroupSimple>) {
                const CMatrix ident = CMatrix::identity(n);
                const CMatrix inv_t = eval(p.t_inverse, a);
                const CMatrix inv_ts = eval(p.t_star_inverse, a);
                const CMatrix astar = adjoint(a);
                return approx_eq(mul(a, inv_t), ident, tol) &&
                       approx_eq(mul(inv_t, a), ident, tol) &&
                       approx_eq(mul(astar, inv_ts), ident, tol) &&
                       approx_eq(mul(inv_ts, astar), ident, tol);
            } else if constexpr (std::is_same_v<P, CertJordanPi>) {
                const auto spec = recognize_jordan(a);
                if (!spec) return false;
                const auto split = jordan_pi_decomposition(*spec, tol);
                if (!split) return false;
                auto lam = split->unitary_lambdas, plam = p.unitary_lambdas;
                auto key = [](const Complex& z) { return std::make_pair(z.real(), z.imag()); };
                std::sort(lam.begin(), lam.end(),
                          [&](const Complex& x, const Complex& y) { return key(x) < key(y); });
                std::sort(plam.begin(), plam.end(),
                          [&](const Complex& x, const Complex& y) { return key(x) < key(y); });
                auto sz = split->shift_sizes, psz = p.shift_sizes;
                std::sort(sz.begin(), sz.end());
                std::sort(psz.begin(), psz.end());
                return lam == plam && sz == psz;
            } else if constexpr (std::is_same_v<P, CertJordanNotPi>) {
                const auto spec = recognize_jordan(a);
                if (!spec || is_selfadjoint(a, tol)) return false;
                const auto it = std::find_if(
                    spec->blocks.begin(), spec->blocks.end(), [&](const JordanSpec::Block& b) {
                        return b.lambda == p.block_lambda && b.size == p.block_size;
                    });
                if (it == spec->blocks.end()) return false;
                if (c.claim == Claim::SimpleNo)
                    return !block_matches_unitary_plus_zero(*it, tol) &&
                           !block_in_boundary_band(*it, tol);
                if (block_is_pi_compatible(*it, tol) || block_in_boundary_band(*it, tol))
                    return false;
                const bool non_normal =
                    std::any_of(spec->blocks.begin(), spec->blocks.end(),
                                [](const JordanSpec::Block& b) { return b.size >= 2; });
                if (non_normal) return true;
                // Normal case: a nonzero, non-unimodular diagonal entry.
                return std::abs(p.block_lambda) > tol.eps_abs &&
                       std::abs(std::abs(p.block_lambda) - 1.0) > tol.eps_abs;
            } else if constexpr (std::is_same_v<P, CertKernelDichotomyFail>) {
                if (rank(a, tol) != p.rank_a || rank(mul(a, a), tol) != p.rank_a2) return false;
                if (!(p.rank_a2 < p.rank_a)) return false;
                if (c.claim == Claim::SimpleNo) return true;
                return !is_selfadjoint(a, tol) && !is_partial_isometry(a, tol);
            } else if constexpr (std::is_same_v<P, CertDetModulus>) {
                const double dm = std::abs(det(a));
                return std::abs(dm - p.value) <= tol.eps_abs * std::max(1.0, p.value) &&
                       std::abs(dm - 1.0) > tol.eps_abs && rank(a, tol) == n &&
                       !is_selfadjoint(a, tol);
            } else if constexpr (std::is_same_v<P, CertNormOneNotPi>) {
                if (is_selfadjoint(a, tol)) return false;
                const SValues sv = svalues(a);
                if (std::abs(sv.values.front() - 1.0) > tol.eps_abs) return false;
                for (double s : sv.values)
                    if (std::abs(s - p.offending_s_value) <= tol.eps_abs &&
                        std::min(s, std::abs(s - 1.0)) > tol.eps_abs)
                        return true;
                return false;
            } else if constexpr (std::is_same_v<P, CertNonnegEntries>) {
                const auto min_entry = uniform_entries_beyond_one(a, tol);
                return min_entry && std::abs(*min_entry - p.min_nonzero_entry) <= tol.eps_abs;
            } else if constexpr (std::is_same_v<P, CertNilpDeg3SmallSquare>) {
                const auto deg = nilpotency_degree(a, tol);
                if (!deg || *deg != 3 || !is_partial_isometry(a, tol)) return false;
                const double norm_t2 = op_norm(mul(a, a));
                return std::abs(norm_t2 - p.norm_t2) <= tol.eps_abs &&
                       p.norm_t2 < 1.0 - tol.eps_abs;
            } else if constexpr (std::is_same_v<P, CertUnitaryDirectSumZero>) {
                return quasi_isometry_relation(a, tol);
            } else if constexpr (std::is_same_v<P, CertDirectSumComponent>) {
                const auto blocks = block_partition(a);
                if (p.index < 0 || p.index >= static_cast<int>(blocks.size()) || !p.inner)
                    return false;
                const auto [off, size] = blocks[static_cast<size_t>(p.index)];
                return p.inner->claim == Claim::SiNo &&
                       validate_certificate(submatrix(a, off, size), *p.inner, tol);
            } else if constexpr (std::is_same_v<P, CertOracleEvidence>) {
                return validate_oracle_evidence(a, p, tol);
            }
        },
        c.payload);
}

double min_nonzero_entry_bound(const std::vector<CMatrix>& factors, const Tolerance& tol) {
    if (factors.empty()) throw PreconditionViolated("min_nonzero_entry_bound: no factors");
    double bound = 1.0;
    for (const CMatrix& f : factors) {
        double min_entry = std::numeric_limits<double>::infinity();
        for (const Complex& z : f.entries()) {
            if (std::abs(z) <= tol.eps_abs) continue;
            if (std::abs(z.imag()) > tol.eps_abs)
                throw PreconditionViolated("min_nonzero_entry_bound: non-real entry");
            if (z.real() <= 1.0)
                throw PreconditionViolated("min_nonzero_entry_bound: entry not greater than one");
            min_entry = std::min(min_entry, z.real());
        }
        if (!std::isfinite(min_entry))
            throw PreconditionViolated("min_nonzero_entry_bound: zero factor");
        bound *= min_entry;
    }
    return bound;
}

}  // namespace sisem
