#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sisem/classifier.hpp"
#include "sisem/predicates.hpp"

namespace sisem {

// Block diagonal of Jordan blocks; recognize_jordan inverts it exactly.
CMatrix build_jordan(const JordanSpec& spec);

// Subdiagonal weighted shift on dim weights.size() + 1.
CMatrix build_shift(const std::vector<Complex>& weights);

// Constant-weight shift with weight 1/conj(lambda), so that
// lambda * (I + W*) reproduces the Jordan block with eigenvalue lambda.
CMatrix build_const_shift_W(Complex lambda, int n);

// Named example with its expected verdicts; the single source of truth for
// the demo and the acceptance run.
struct GalleryEntry {
    std::string name;
    CMatrix matrix;
    Ternary expected_si = Ternary::Inconclusive;
    Ternary expected_simple = Ternary::Inconclusive;  // Inconclusive = unspecified
    std::string provenance;
};

const std::vector<GalleryEntry>& gallery();
std::optional<GalleryEntry> gallery_find(const std::string& name);

// Textual forms used by the CLI: "a+bi" or polar "r@theta".
Complex parse_complex(const std::string& s);
// "lambda:size,lambda:size,..." e.g. "0:3,1:2".
JordanSpec parse_jordan_spec(const std::string& s);
// Comma-separated complex weights.
std::vector<Complex> parse_weights(const std::string& s);

}  // namespace sisem
