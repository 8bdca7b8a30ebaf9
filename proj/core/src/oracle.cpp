#include "sisem/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace sisem {

namespace {

// One scan factor: an element of the table, or the identity (empty word).
struct Factor {
    Word word;  // empty = identity
    const CMatrix* m = nullptr;
    double fnorm = 0.0;
};

struct PairScanner {
    std::vector<Factor> lex_all;                // sorted by word lex, identity first
    std::vector<std::vector<int>> by_len;       // indices into lex_all per word length
    CMatrix ident;
    int max_factor_len = 0;

    explicit PairScanner(const SemigroupTable& table)
        : ident(CMatrix::identity(table.generator().dim())) {
        lex_all.push_back(Factor{Word{}, &ident, frobenius_norm(ident)});
        for (const TableEntry& e : table.elements())
            lex_all.push_back(Factor{e.witness, &e.m, e.fnorm});
        std::sort(lex_all.begin(), lex_all.end(),
                  [](const Factor& a, const Factor& b) { return word_lex_less(a.word, b.word); });
        for (const Factor& f : lex_all)
            max_factor_len = std::max(max_factor_len, static_cast<int>(f.word.size()));
        by_len.assign(static_cast<size_t>(max_factor_len) + 1, {});
        for (int i = 0; i < static_cast<int>(lex_all.size()); ++i)
            by_len[lex_all[static_cast<size_t>(i)].word.size()].push_back(i);
    }
};

struct TargetState {
    const CMatrix* target;
    double tnorm;
    std::optional<Word> x, y;
    double residual = 0.0;
    bool found = false;
};

// Scans pairs in (|x|+|y|, x lex, y lex) order and records the first pair
// solving X W Y ~ target, per target. Entry-by-entry screening rejects most
// pairs after a handful of flops; a surviving pair is confirmed with the
// exact approx_eq contract, so the screen never changes the result.
void scan_for_targets(const PairScanner& sc, const CMatrix& wv, std::vector<TargetState>& targets,
                      const Tolerance& tol) {
    const int n = wv.dim();
    const size_t nf = sc.lex_all.size();

    std::vector<CMatrix> xw(nf);
    std::vector<double> xw_norm(nf);
    for (size_t i = 0; i < nf; ++i) {
        xw[i] = mul(*sc.lex_all[i].m, wv);
        xw_norm[i] = frobenius_norm(xw[i]);
    }

    auto remaining = [&]() {
        for (const TargetState& t : targets)
            if (!t.found) return true;
        return false;
    };

    CMatrix prod(n);
    for (int total = 0; total <= 2 * sc.max_factor_len && remaining(); ++total) {
        for (size_t xi = 0; xi < nf && remaining(); ++xi) {
            const int ly = total - static_cast<int>(sc.lex_all[xi].word.size());
            if (ly < 0 || ly > sc.max_factor_len) continue;
            const CMatrix& left = xw[xi];
            for (int yi : sc.by_len[static_cast<size_t>(ly)]) {
                const Factor& fy = sc.lex_all[static_cast<size_t>(yi)];
                // |XWY|_F <= |XW|_F |Y|_F, so this tau dominates the
                // approx_eq tolerance for every target.
                const double pbound = xw_norm[xi] * fy.fnorm;
                bool any_alive = false;
                for (TargetState& ts : targets)
                    if (!ts.found) any_alive = true;
                if (!any_alive) break;

                bool computed = false;
                for (TargetState& ts : targets) {
                    if (ts.found) continue;
                    const double tau = tol.eps_abs + tol.eps_rel * std::max(pbound, ts.tnorm);
                    bool rejected = false;
                    if (!computed) {
                        for (int i = 0; i < n && !rejected; ++i) {
                            for (int j = 0; j < n; ++j) {
                                Complex v(0.0, 0.0);
                                for (int k = 0; k < n; ++k) v += left.at(i, k) * fy.m->at(k, j);
                                prod.at(i, j) = v;
                                if (std::abs(v - ts.target->at(i, j)) > tau) {
                                    rejected = true;
                                    break;
                                }
                            }
                        }
                        if (!rejected) computed = true;
                    } else {
                        for (int i = 0; i < n && !rejected; ++i)
                            for (int j = 0; j < n; ++j)
                                if (std::abs(prod.at(i, j) - ts.target->at(i, j)) > tau) {
                                    rejected = true;
                                    break;
                                }
                    }
                    if (rejected) continue;
                    if (!approx_eq(prod, *ts.target, tol)) continue;
                    ts.found = true;
                    ts.residual = max_abs_diff(prod, *ts.target);
                    if (!sc.lex_all[xi].word.empty()) ts.x = sc.lex_all[xi].word;
                    if (!fy.word.empty()) ts.y = fy.word;
                }
            }
        }
    }
}

// Distinct word values of length 1..w_max in (length, lex) order, audited
// against fingerprint collisions.
std::vector<std::pair<Word, CMatrix>> distinct_words(const CMatrix& t, int w_max,
                                                     const Tolerance& tol) {
    std::vector<std::pair<Word, CMatrix>> out;
    std::unordered_map<Fingerprint, std::vector<int>, FingerprintHash> seen;
    for (int len = 1; len <= w_max; ++len) {
        for (const Word& w : words_of_length(len)) {
            CMatrix v = eval(w, t);
            auto& bucket = seen[fingerprint_of(v)];
            bool dup = false;
            for (int idx : bucket)
                if (approx_eq(out[static_cast<size_t>(idx)].second, v, tol)) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            bucket.push_back(static_cast<int>(out.size()));
            out.emplace_back(w, std::move(v));
        }
    }
    return out;
}

}  // namespace

std::optional<BilinearSolution> solve_bilinear(const CMatrix& t, const Word& w,
                                               const SemigroupTable& table, const Tolerance& tol) {
    const CMatrix wv = eval(w, t);
    const CMatrix target = adjoint(wv);
    PairScanner sc(table);
    std::vector<TargetState> ts{TargetState{&target, frobenius_norm(target)}};
    scan_for_targets(sc, wv, ts, tol);
    if (!ts.front().found) return std::nullopt;
    return BilinearSolution{w, ts.front().x, ts.front().y, ts.front().residual};
}

OracleReport si_scan(const CMatrix& t, int w_max, const SemigroupTable& table,
                     const Tolerance& tol, bool stop_on_failure) {
    OracleReport report;
    report.mode = ScanMode::Si;
    report.bounds.w_max = w_max;
    report.bounds.factor_max_len = table.max_len();
    report.table_truncated = table.truncated();

    PairScanner sc(table);
    for (auto& [w, wv] : distinct_words(t, w_max, tol)) {
        const CMatrix target = adjoint(wv);
        std::vector<TargetState> ts{TargetState{&target, frobenius_norm(target)}};
        scan_for_targets(sc, wv, ts, tol);
        WordOutcome out;
        out.word = w;
        out.solved = ts.front().found;
        out.x = ts.front().x;
        out.y = ts.front().y;
        out.residual = ts.front().residual;
        report.outcomes.push_back(std::move(out));
        if (!ts.front().found) {
            report.all_solved = false;
            if (!report.failure_witness) report.failure_witness = w;
            if (stop_on_failure) break;
        }
    }
    return report;
}

std::vector<Fingerprint> ideal_saturate(const CMatrix& t, const Word& w,
                                        const SemigroupTable& table) {
    const CMatrix wv = eval(w, t);
    PairScanner sc(table);
    std::unordered_map<Fingerprint, bool, FingerprintHash> seen;
    std::vector<Fingerprint> out;
    for (size_t xi = 0; xi < sc.lex_all.size(); ++xi) {
        const CMatrix left = mul(*sc.lex_all[xi].m, wv);
        for (size_t yi = 0; yi < sc.lex_all.size(); ++yi) {
            Fingerprint fp = fingerprint_of(mul(left, *sc.lex_all[yi].m));
            if (seen.emplace(fp, true).second) out.push_back(std::move(fp));
        }
    }
    return out;
}

OracleReport simplicity_scan(const CMatrix& t, int w_max, const SemigroupTable& table,
                             const Tolerance& tol, bool stop_on_failure) {
    OracleReport report;
    report.mode = ScanMode::Simplicity;
    report.bounds.w_max = w_max;
    report.bounds.factor_max_len = table.max_len();
    report.table_truncated = table.truncated();

    const CMatrix tstar = adjoint(t);
    PairScanner sc(table);
    for (auto& [w, wv] : distinct_words(t, w_max, tol)) {
        std::vector<TargetState> ts{TargetState{&t, frobenius_norm(t)},
                                    TargetState{&tstar, frobenius_norm(tstar)}};
        scan_for_targets(sc, wv, ts, tol);
        WordOutcome out;
        out.word = w;
        out.solved = ts[0].found && ts[1].found;
        out.x = ts[0].x;
        out.y = ts[0].y;
        out.residual = ts[0].residual;
        out.x_star = ts[1].x;
        out.y_star = ts[1].y;
        out.residual_star = ts[1].residual;
        report.outcomes.push_back(std::move(out));
        if (!report.outcomes.back().solved) {
            report.all_solved = false;
            if (!report.failure_witness) report.failure_witness = w;
            if (stop_on_failure) break;
        }
    }
    return report;
}

std::optional<GroupWitness> group_detect(const CMatrix& t, const SemigroupTable& table,
                                         const Tolerance& tol) {
    const int n = t.dim();
    const CMatrix ident = CMatrix::identity(n);
    if (table.find(ident, tol) < 0) return std::nullopt;

    auto inverse_of = [&](const CMatrix& m) -> int {
        for (int j = 0; j < static_cast<int>(table.size()); ++j) {
            const TableEntry& cand = table.entry(j);
            if (approx_eq(mul(m, cand.m), ident, tol) && approx_eq(mul(cand.m, m), ident, tol))
                return j;
        }
        return -1;
    };

    for (const TableEntry& e : table.elements())
        if (inverse_of(e.m) < 0) return std::nullopt;

    const int it = table.find(t, tol);
    const int its = table.find(adjoint(t), tol);
    if (it < 0 || its < 0) return std::nullopt;
    const int inv_t = inverse_of(table.entry(it).m);
    const int inv_ts = inverse_of(table.entry(its).m);
    if (inv_t < 0 || inv_ts < 0) return std::nullopt;
    return GroupWitness{table.entry(inv_t).witness, table.entry(inv_ts).witness};
}

}  // namespace sisem
