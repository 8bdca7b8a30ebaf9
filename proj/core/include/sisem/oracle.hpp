#pragma once

#include <optional>
#include <vector>

#include "sisem/semigroup.hpp"

namespace sisem {

// Search bounds for the bounded brute-force decision aid. The defaults cover
// every short word class and the example gallery while keeping pair scans
// around 10^7.
struct OracleBounds {
    int w_max = 4;
    int factor_max_len = 8;
    std::size_t element_cap = 100000;
    double norm_cap = 1e12;

    EnumLimits enum_limits() const { return EnumLimits{element_cap, norm_cap, 1}; }
    bool operator==(const OracleBounds&) const = default;
};

// A verified solution of W* = X W Y. Absent factor means the identity.
struct BilinearSolution {
    Word w;
    std::optional<Word> x;
    std::optional<Word> y;
    double residual = 0.0;

    bool operator==(const BilinearSolution&) const = default;
};

enum class ScanMode { Si, Simplicity };

struct WordOutcome {
    Word word;
    bool solved = false;
    // Si mode: X W Y ~ W*. Simplicity mode: X W Y ~ T, and the starred pair
    // places T* in the same ideal.
    std::optional<Word> x, y;
    double residual = 0.0;
    std::optional<Word> x_star, y_star;
    double residual_star = 0.0;

    bool operator==(const WordOutcome&) const = default;
};

struct OracleReport {
    ScanMode mode = ScanMode::Si;
    OracleBounds bounds;
    std::vector<WordOutcome> outcomes;
    bool all_solved = true;
    std::optional<Word> failure_witness;
    bool table_truncated = false;

    bool operator==(const OracleReport&) const = default;
};

// First (by total factor length, then lex on the pair) verified solution of
// W* = X W Y with X, Y drawn from the table plus the identity; absence is
// data, not an error.
std::optional<BilinearSolution> solve_bilinear(const CMatrix& t, const Word& w,
                                               const SemigroupTable& table,
                                               const Tolerance& tol = {});

// Runs solve_bilinear for every word of length <= w_max, deduplicated by the
// fingerprint of the evaluated word. stop_on_failure ends the scan at the
// first unsolved word; the overall outcome is identical either way.
OracleReport si_scan(const CMatrix& t, int w_max, const SemigroupTable& table,
                     const Tolerance& tol = {}, bool stop_on_failure = true);

// Fingerprints of {X eval(w) Y}: the bounded principal ideal of w.
std::vector<Fingerprint> ideal_saturate(const CMatrix& t, const Word& w,
                                        const SemigroupTable& table);

// A word fails when its bounded principal ideal misses T or T*; the first
// failing word is the nonsimplicity evidence.
OracleReport simplicity_scan(const CMatrix& t, int w_max, const SemigroupTable& table,
                             const Tolerance& tol = {}, bool stop_on_failure = true);

struct GroupWitness {
    Word t_inverse;
    Word t_star_inverse;
};

// Table forms a group: identity present and every element has a stored
// two-sided inverse. The returned witnesses invert the generators.
std::optional<GroupWitness> group_detect(const CMatrix& t, const SemigroupTable& table,
                                         const Tolerance& tol = {});

}  // namespace sisem
