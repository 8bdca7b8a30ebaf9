#pragma once

#include <string>

#include "sisem/classifier.hpp"

namespace sisem {

// Matrix JSON schema (bit-exact): {"n": <int>, "entries": [[re, im], ...]}
// row-major with n*n pairs. The parser rejects non-square lengths and
// non-finite values with ParseError.
std::string to_json_string(const CMatrix& m, int indent = -1);
CMatrix matrix_from_json_string(const std::string& text);

std::string to_json_string(const SValues& s, int indent = -1);
SValues svalues_from_json_string(const std::string& text);

std::string to_json_string(const Verdict& v, int indent = -1);
Verdict verdict_from_json_string(const std::string& text);

std::string to_json_string(const OracleReport& r, int indent = -1);
OracleReport report_from_json_string(const std::string& text);

}  // namespace sisem
