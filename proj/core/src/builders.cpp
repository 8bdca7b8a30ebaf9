#include "sisem/builders.hpp"

#include <cctype>
#include <cmath>

namespace sisem {

CMatrix build_jordan(const JordanSpec& spec) {
    if (spec.blocks.empty()) throw PreconditionViolated("build_jordan: no blocks");
    for (const auto& b : spec.blocks)
        if (b.size < 1) throw PreconditionViolated("build_jordan: block size must be >= 1");
    CMatrix m(spec.total_dim());
    int off = 0;
    for (const auto& b : spec.blocks) {
        for (int i = 0; i < b.size; ++i) {
            m.at(off + i, off + i) = b.lambda;
            if (i + 1 < b.size) m.at(off + i, off + i + 1) = Complex(1.0, 0.0);
        }
        off += b.size;
    }
    return m;
}

CMatrix build_shift(const std::vector<Complex>& weights) {
    const int n = static_cast<int>(weights.size()) + 1;
    CMatrix m(n);
    for (int j = 0; j + 1 < n; ++j) m.at(j + 1, j) = weights[static_cast<size_t>(j)];
    return m;
}

CMatrix build_const_shift_W(Complex lambda, int n) {
    if (lambda == Complex(0.0, 0.0)) throw ZeroLambda("constant shift needs lambda != 0");
    if (n < 1) throw DimensionMismatch("dimension must be positive");
    const Complex w = Complex(1.0, 0.0) / std::conj(lambda);
    CMatrix m(n);
    for (int i = 0; i + 1 < n; ++i) m.at(i + 1, i) = w;
    return m;
}

namespace {

// Nearest double to 1/sqrt(2); comparisons on it always go through
// tolerances.
constexpr double kInvSqrt2 = 0.7071067811865476;

std::vector<GalleryEntry> make_gallery() {
    std::vector<GalleryEntry> g;
    const Complex i01(0.0, 1.0);

    {
        CMatrix e1(4);
        e1.at(0, 1) = kInvSqrt2;
        e1.at(0, 3) = kInvSqrt2;
        e1.at(1, 2) = 1.0;
        g.push_back({"E1", e1, Ternary::No, Ternary::No,
                     "4x4 nilpotent partial isometry of degree 3 whose square has norm 1/sqrt(2)"});
    }
    g.push_back({"J3-shift", build_jordan({{{Complex(0.0, 0.0), 3}}}), Ternary::Yes, Ternary::No,
                 "3x3 Jordan block at zero: a power partial isometry"});
    g.push_back({"J2-1", build_jordan({{{Complex(1.0, 0.0), 2}}}), Ternary::No, Ternary::No,
                 "2x2 Jordan block, unit eigenvalue"});
    g.push_back({"J3-1", build_jordan({{{Complex(1.0, 0.0), 3}}}), Ternary::No, Ternary::No,
                 "3x3 Jordan block, unit eigenvalue"});
    g.push_back({"J2-i", build_jordan({{{i01, 2}}}), Ternary::No, Ternary::No,
                 "2x2 Jordan block, eigenvalue i"});
    g.push_back({"group-2x2",
                 CMatrix::from_rows({{Complex(0.0, 0.0), Complex(0.5, 0.0)},
                                     {Complex(2.0, 0.0), Complex(0.0, 0.0)}}),
                 Ternary::Yes, Ternary::Yes,
                 "nonunitary involution: the generated semigroup is a group"});
    g.push_back({"norm-one-not-pi",
                 CMatrix::from_rows({{Complex(0.0, 0.0), Complex(0.5, 0.0)},
                                     {Complex(1.0, 0.0), Complex(0.0, 0.0)}}),
                 Ternary::No, Ternary::No, "norm one but not a partial isometry"});
    g.push_back({"shift-plus-2I",
                 direct_sum(build_jordan({{{Complex(0.0, 0.0), 3}}}),
                            scale(2.0, CMatrix::identity(2))),
                 Ternary::No, Ternary::No,
                 "direct sum of SI pieces that fails as a whole"});
    g.push_back({"entries-gt-1",
                 CMatrix::from_rows({{Complex(2.0, 0.0), Complex(3.0, 0.0)},
                                     {Complex(0.0, 0.0), Complex(5.0, 0.0)}}),
                 Ternary::No, Ternary::No, "all nonzero entries real and greater than one"});
    g.push_back({"diag-i", CMatrix::from_rows({{i01}}), Ternary::Yes, Ternary::Yes,
                 "1x1 unitary generator"});
    g.push_back({"diag-2-2", scale(2.0, CMatrix::identity(2)), Ternary::Yes,
                 Ternary::Inconclusive, "selfadjoint generator"});
    {
        const Complex w = std::polar(1.0, std::acos(-1.0) / 3.0);
        CMatrix u(2);
        u.at(0, 0) = i01;
        u.at(1, 1) = w;
        g.push_back({"diag-unitary-2", u, Ternary::Yes, Ternary::Yes, "2x2 diagonal unitary"});
    }
    {
        CMatrix u(2);
        u.at(0, 0) = i01;
        g.push_back({"unitary-plus-zero", u, Ternary::Yes, Ternary::Yes,
                     "diagonal unitary padded with a zero summand"});
    }
    return g;
}

size_t skip_spaces(const std::string& s, size_t i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return i;
}

double parse_double(const std::string& s) {
    size_t used = 0;
    double v;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ParseError("bad number: '" + s + "'");
    }
    if (used != s.size()) throw ParseError("bad number: '" + s + "'");
    return v;
}

}  // namespace

const std::vector<GalleryEntry>& gallery() {
    static const std::vector<GalleryEntry> g = make_gallery();
    return g;
}

std::optional<GalleryEntry> gallery_find(const std::string& name) {
    for (const GalleryEntry& e : gallery())
        if (e.name == name) return e;
    return std::nullopt;
}

Complex parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty complex literal");

    if (const size_t at = s.find('@'); at != std::string::npos) {
        const double r = parse_double(s.substr(0, at));
        const double theta = parse_double(s.substr(at + 1));
        return std::polar(r, theta);
    }

    // Split "a+bi"/"a-bi" at the last sign that is not an exponent sign.
    size_t split = std::string::npos;
    for (size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }

    auto parse_part = [](std::string part, bool imag) -> double {
        if (imag) {
            if (part.empty() || part.back() != 'i') throw ParseError("bad imaginary part");
            part.pop_back();
            if (part.empty() || part == "+") return 1.0;
            if (part == "-") return -1.0;
        }
        return parse_double(part);
    };

    if (!s.empty() && s.back() == 'i') {
        if (split == std::string::npos) return Complex(0.0, parse_part(s, true));
        return Complex(parse_double(s.substr(0, split)), parse_part(s.substr(split), true));
    }
    if (split != std::string::npos) throw ParseError("bad complex literal: '" + raw + "'");
    return Complex(parse_double(s), 0.0);
}

JordanSpec parse_jordan_spec(const std::string& s) {
    JordanSpec spec;
    size_t i = 0;
    while (i < s.size()) {
        const size_t comma = s.find(',', i);
        const std::string item = s.substr(i, comma == std::string::npos ? std::string::npos
                                                                        : comma - i);
        const size_t colon = item.rfind(':');
        if (colon == std::string::npos) throw ParseError("jordan spec item needs 'lambda:size'");
        const Complex lambda = parse_complex(item.substr(0, colon));
        const std::string size_str = item.substr(colon + 1);
        int size = 0;
        try {
            size = std::stoi(size_str);
        } catch (const std::exception&) {
            throw ParseError("bad block size: '" + size_str + "'");
        }
        if (size < 1) throw ParseError("block size must be positive");
        spec.blocks.push_back({lambda, size});
        if (comma == std::string::npos) break;
        i = skip_spaces(s, comma + 1);
    }
    if (spec.blocks.empty()) throw ParseError("empty jordan spec");
    return spec;
}

std::vector<Complex> parse_weights(const std::string& s) {
    std::vector<Complex> w;
    size_t i = 0;
    if (skip_spaces(s, 0) == s.size()) return w;
    while (i <= s.size()) {
        const size_t comma = s.find(',', i);
        const std::string item = s.substr(i, comma == std::string::npos ? std::string::npos
                                                                        : comma - i);
        w.push_back(parse_complex(item));
        if (comma == std::string::npos) break;
        i = comma + 1;
    }
    return w;
}

}  // namespace sisem
