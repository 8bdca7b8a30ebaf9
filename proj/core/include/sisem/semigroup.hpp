#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "sisem/matrix.hpp"
#include "sisem/word.hpp"

namespace sisem {

// Quantized snapshot of a matrix: entries rounded to a fixed grid after
// scaling by 1/max(1, |M|_F), plus the quantized log-norm so scalar multiples
// of the same shape stay distinct. Equal fingerprints are only merged after
// an approx_eq audit of the actual matrices.
struct Fingerprint {
    int n = 0;
    std::vector<std::int64_t> q;

    bool operator==(const Fingerprint& o) const { return n == o.n && q == o.q; }
    std::uint64_t hash() const;
    std::string hex() const;
};

struct FingerprintHash {
    std::size_t operator()(const Fingerprint& f) const { return static_cast<std::size_t>(f.hash()); }
};

Fingerprint fingerprint_of(const CMatrix& m);

struct EnumLimits {
    std::size_t element_cap = 100000;
    double norm_cap = 1e12;  // max entry modulus before growth is truncated
    int threads = 1;
};

struct TableEntry {
    CMatrix m;
    Word witness;  // shortest, then lexicographically smallest with g < g*
    double fnorm = 0.0;
};

// Deduplicated closure of words in T and T* up to a length bound. Element
// order is (witness length, witness lex), identical for serial and parallel
// enumeration.
class SemigroupTable {
public:
    SemigroupTable(CMatrix generator, int max_len)
        : generator_(std::move(generator)), max_len_(max_len) {}

    const CMatrix& generator() const { return generator_; }
    int max_len() const { return max_len_; }
    bool truncated() const { return truncated_; }
    // True when a full frontier pass added no new fingerprints, i.e. the
    // listed elements form the whole semigroup.
    bool closed() const { return closed_; }

    std::size_t size() const { return elems_.size(); }
    const std::vector<TableEntry>& elements() const { return elems_; }
    const TableEntry& entry(int i) const { return elems_[static_cast<size_t>(i)]; }

    // Fingerprint lookup audited with approx_eq; -1 when absent.
    int find(const CMatrix& m, const Tolerance& tol = {}) const;
    bool contains(const CMatrix& m, const Tolerance& tol = {}) const { return find(m, tol) >= 0; }

    // Returns the index of the stored element, inserting if new. Used by the
    // enumerator; insertion keeps the deterministic order contract.
    int insert(CMatrix m, Word witness, const Tolerance& tol);

    void set_truncated() { truncated_ = true; }
    void set_closed(bool c) { closed_ = c; }

private:
    CMatrix generator_;
    int max_len_;
    bool truncated_ = false;
    bool closed_ = false;
    std::vector<TableEntry> elems_;
    std::unordered_map<Fingerprint, std::vector<int>, FingerprintHash> index_;
};

// Breadth-first closure over word length 1..max_len with fingerprint
// deduplication. Caps are reported through the truncated flag, never thrown.
// limits.threads > 1 parallelizes frontier evaluation; the committed table is
// identical either way.
SemigroupTable enumerate_semigroup(const CMatrix& t, int max_len, const EnumLimits& limits = {},
                                   const Tolerance& tol = {});

// Distinct nonzero main-diagonal values of eval(w, shift), deduplicated at
// eps_abs. For the constant-weight shift these collapse to at most one value.
std::vector<Complex> word_diag_values(const CMatrix& shift, const Word& w,
                                      const Tolerance& tol = {});

// One line per element: "len=<k> word=<...> norm=<float> fp=<hex>".
std::string dump_table(const SemigroupTable& table);

}  // namespace sisem
