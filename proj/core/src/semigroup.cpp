#include "sisem/semigroup.hpp"

#include <cmath>
#include <cstdio>
#include <thread>

namespace sisem {

namespace {
constexpr double kGrid = 1e-6;
// The norm component only has to separate scale classes (M from c*M), so it
// lives on a much coarser grid than the normalized entries.
constexpr double kLogNormGrid = 1e-2;

std::int64_t quantize(double x) { return std::llround(x / kGrid); }
}  // namespace

std::uint64_t Fingerprint::hash() const {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(n));
    for (std::int64_t v : q) mix(static_cast<std::uint64_t>(v));
    return h;
}

std::string Fingerprint::hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
    return buf;
}

Fingerprint fingerprint_of(const CMatrix& m) {
    Fingerprint f;
    f.n = m.dim();
    const double fnorm = frobenius_norm(m);
    const double s = std::max(1.0, fnorm);
    f.q.reserve(m.entries().size() * 2 + 1);
    f.q.push_back(std::llround(std::log1p(fnorm) / kLogNormGrid));
    for (const Complex& z : m.entries()) {
        f.q.push_back(quantize(z.real() / s));
        f.q.push_back(quantize(z.imag() / s));
    }
    return f;
}

int SemigroupTable::find(const CMatrix& m, const Tolerance& tol) const {
    const auto it = index_.find(fingerprint_of(m));
    if (it == index_.end()) return -1;
    for (int idx : it->second)
        if (approx_eq(elems_[static_cast<size_t>(idx)].m, m, tol)) return idx;
    return -1;
}

int SemigroupTable::insert(CMatrix m, Word witness, const Tolerance& tol) {
    Fingerprint fp = fingerprint_of(m);
    auto& bucket = index_[fp];
    for (int idx : bucket)
        if (approx_eq(elems_[static_cast<size_t>(idx)].m, m, tol)) return idx;
    const int idx = static_cast<int>(elems_.size());
    const double fnorm = frobenius_norm(m);
    elems_.push_back(TableEntry{std::move(m), std::move(witness), fnorm});
    bucket.push_back(idx);
    return idx;
}

SemigroupTable enumerate_semigroup(const CMatrix& t, int max_len, const EnumLimits& limits,
                                   const Tolerance& tol) {
    if (max_len < 1) throw PreconditionViolated("enumerate: max_len must be >= 1");
    SemigroupTable table(t, max_len);
    const CMatrix tstar = adjoint(t);
    auto gen = [&](Letter l) -> const CMatrix& { return l == Letter::G ? t : tstar; };

    auto admissible = [&](const CMatrix& m) { return max_abs_entry(m) <= limits.norm_cap; };

    // Length 1 seeds, g before g*.
    std::vector<int> frontier;
    for (Letter l : {Letter::G, Letter::GStar}) {
        if (table.size() >= limits.element_cap) {
            table.set_truncated();
            break;
        }
        if (!admissible(gen(l))) {
            table.set_truncated();
            continue;
        }
        const size_t before = table.size();
        const int idx = table.insert(gen(l), Word{l}, tol);
        if (table.size() > before) frontier.push_back(idx);
    }

    bool last_pass_inserted = !frontier.empty();
    for (int len = 2; len <= max_len && !frontier.empty() && !table.truncated(); ++len) {
        // Candidates in (frontier order, g before g*) order; this is the lex
        // order of the new witnesses, so first insertion wins the tie-break.
        struct Candidate {
            CMatrix m;
            Word w;
        };
        const size_t count = frontier.size() * 2;
        std::vector<Candidate> cands(count);
        auto build = [&](size_t from, size_t to) {
            for (size_t c = from; c < to; ++c) {
                const TableEntry& e = table.entry(frontier[c / 2]);
                const Letter l = (c % 2 == 0) ? Letter::G : Letter::GStar;
                Word w = e.witness;
                w.push_back(l);
                cands[c] = Candidate{mul(e.m, gen(l)), std::move(w)};
            }
        };
        const int threads = std::max(1, limits.threads);
        if (threads == 1 || count < 16) {
            build(0, count);
        } else {
            std::vector<std::thread> pool;
            const size_t chunk = (count + threads - 1) / threads;
            for (int k = 0; k < threads; ++k) {
                const size_t lo = std::min(count, k * chunk);
                const size_t hi = std::min(count, lo + chunk);
                if (lo < hi) pool.emplace_back(build, lo, hi);
            }
            for (auto& th : pool) th.join();
        }

        std::vector<int> next;
        last_pass_inserted = false;
        for (Candidate& c : cands) {
            if (table.size() >= limits.element_cap) {
                table.set_truncated();
                break;
            }
            if (!admissible(c.m)) {
                table.set_truncated();
                continue;
            }
            const size_t before = table.size();
            const int idx = table.insert(std::move(c.m), std::move(c.w), tol);
            if (table.size() > before) {
                next.push_back(idx);
                last_pass_inserted = true;
            }
        }
        frontier = std::move(next);
    }

    table.set_closed(!table.truncated() && !last_pass_inserted);
    return table;
}

std::vector<Complex> word_diag_values(const CMatrix& shift, const Word& w, const Tolerance& tol) {
    const CMatrix m = eval(w, shift);
    std::vector<Complex> values;
    for (int i = 0; i < m.dim(); ++i) {
        const Complex v = m.at(i, i);
        if (std::abs(v) <= tol.eps_abs) continue;
        bool seen = false;
        for (const Complex& u : values)
            if (std::abs(u - v) <= tol.eps_abs) {
                seen = true;
                break;
            }
        if (!seen) values.push_back(v);
    }
    return values;
}

std::string dump_table(const SemigroupTable& table) {
    std::string out;
    char buf[64];
    for (const TableEntry& e : table.elements()) {
        out += "len=";
        out += std::to_string(e.witness.size());
        out += " word=";
        out += word_to_string(e.witness);
        std::snprintf(buf, sizeof buf, " norm=%.17g fp=", op_norm(e.m));
        out += buf;
        out += fingerprint_of(e.m).hex();
        out += '\n';
    }
    return out;
}

}  // namespace sisem
