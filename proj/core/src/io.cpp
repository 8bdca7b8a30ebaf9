#include "sisem/io.hpp"

#include <cmath>

#include <json.hpp>

namespace sisem {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("complex entry must be an [re, im] pair");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

json word_to_json(const Word& w) { return word_to_string(w); }

std::optional<Word> optional_word_from_json(const json& j) {
    const std::string s = j.get<std::string>();
    if (s == "I") return std::nullopt;
    return word_from_string(s);
}

json optional_word_to_json(const std::optional<Word>& w) {
    return w ? word_to_string(*w) : std::string("I");
}

json matrix_to_json(const CMatrix& m) {
    json entries = json::array();
    for (const Complex& z : m.entries()) entries.push_back(complex_to_json(z));
    return json{{"n", m.dim()}, {"entries", std::move(entries)}};
}

CMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw ParseError("matrix JSON needs fields 'n' and 'entries'");
    if (!j["n"].is_number_integer()) throw ParseError("'n' must be an integer");
    const int n = j["n"].get<int>();
    if (n < 1) throw ParseError("'n' must be positive");
    const json& entries = j["entries"];
    if (!entries.is_array() || entries.size() != static_cast<size_t>(n) * n)
        throw ParseError("'entries' must hold n*n [re, im] pairs");
    std::vector<Complex> data;
    data.reserve(entries.size());
    for (const json& e : entries) {
        const Complex z = complex_from_json(e);
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw ParseError("matrix entries must be finite");
        data.push_back(z);
    }
    return CMatrix::from_entries(n, std::move(data));
}

std::string ternary_str(Ternary t) { return to_string(t); }

Ternary ternary_from(const std::string& s) {
    if (s == "YES") return Ternary::Yes;
    if (s == "NO") return Ternary::No;
    if (s == "INCONCLUSIVE") return Ternary::Inconclusive;
    throw ParseError("bad ternary value: '" + s + "'");
}

Claim claim_from(const std::string& s) {
    if (s == "SI-YES") return Claim::SiYes;
    if (s == "SI-NO") return Claim::SiNo;
    if (s == "SIMPLE-YES") return Claim::SimpleYes;
    if (s == "SIMPLE-NO") return Claim::SimpleNo;
    if (s == "EVIDENCE") return Claim::Evidence;
    throw ParseError("bad claim value: '" + s + "'");
}

json report_to_json(const OracleReport& r);
OracleReport report_from_json(const json& j);

json certificate_to_json(const Certificate& c) {
    json j{{"tag", c.tag()}, {"claim", to_string(c.claim)}};
    std::visit(
        [&](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, CertPowerPartialIsometry>) {
                j["max_power_checked"] = p.max_power_checked;
            } else if constexpr (std::is_same_v<P, CertGroupSimple>) {
                j["t_inverse"] = word_to_json(p.t_inverse);
                j["t_star_inverse"] = word_to_json(p.t_star_inverse);
            } else if constexpr (std::is_same_v<P, CertJordanPi>) {
                json lam = json::array();
                for (const Complex& z : p.unitary_lambdas) lam.push_back(complex_to_json(z));
                j["unitary_lambdas"] = std::move(lam);
                j["shift_sizes"] = p.shift_sizes;
            } else if constexpr (std::is_same_v<P, CertJordanNotPi>) {
                j["block_lambda"] = complex_to_json(p.block_lambda);
                j["block_size"] = p.block_size;
            } else if constexpr (std::is_same_v<P, CertKernelDichotomyFail>) {
                j["rank_a"] = p.rank_a;
                j["rank_a2"] = p.rank_a2;
            } else if constexpr (std::is_same_v<P, CertDetModulus>) {
                j["value"] = p.value;
            } else if constexpr (std::is_same_v<P, CertNormOneNotPi>) {
                j["offending_s_value"] = p.offending_s_value;
            } else if constexpr (std::is_same_v<P, CertNonnegEntries>) {
                j["min_nonzero_entry"] = p.min_nonzero_entry;
            } else if constexpr (std::is_same_v<P, CertNilpDeg3SmallSquare>) {
                j["norm_t2"] = p.norm_t2;
            } else if constexpr (std::is_same_v<P, CertDirectSumComponent>) {
                j["index"] = p.index;
                j["inner"] = p.inner ? certificate_to_json(*p.inner) : json();
            } else if constexpr (std::is_same_v<P, CertOracleEvidence>) {
                j["report"] = report_to_json(p.report);
            }
        },
        c.payload);
    return j;
}

Certificate certificate_from_json(const json& j) {
    Certificate c;
    c.claim = claim_from(j.at("claim").get<std::string>());
    const std::string tag = j.at("tag").get<std::string>();
    if (tag == "SelfadjointGenerator") {
        c.payload = CertSelfadjointGenerator{};
    } else if (tag == "PowerPartialIsometry") {
        c.payload = CertPowerPartialIsometry{j.at("max_power_checked").get<int>()};
    } else if (tag == "GroupSimple") {
        c.payload = CertGroupSimple{word_from_string(j.at("t_inverse").get<std::string>()),
                                    word_from_string(j.at("t_star_inverse").get<std::string>())};
    } else if (tag == "JordanPI") {
        CertJordanPi p;
        for (const json& z : j.at("unitary_lambdas")) p.unitary_lambdas.push_back(complex_from_json(z));
        p.shift_sizes = j.at("shift_sizes").get<std::vector<int>>();
        c.payload = std::move(p);
    } else if (tag == "JordanNotPI") {
        c.payload = CertJordanNotPi{complex_from_json(j.at("block_lambda")),
                                    j.at("block_size").get<int>()};
    } else if (tag == "KernelDichotomyFail") {
        c.payload = CertKernelDichotomyFail{j.at("rank_a").get<int>(), j.at("rank_a2").get<int>()};
    } else if (tag == "DetModulus") {
        c.payload = CertDetModulus{j.at("value").get<double>()};
    } else if (tag == "NormOneNotPI") {
        c.payload = CertNormOneNotPi{j.at("offending_s_value").get<double>()};
    } else if (tag == "NonnegEntries") {
        c.payload = CertNonnegEntries{j.at("min_nonzero_entry").get<double>()};
    } else if (tag == "NilpDeg3SmallSquare") {
        c.payload = CertNilpDeg3SmallSquare{j.at("norm_t2").get<double>()};
    } else if (tag == "UnitaryDirectSumZero") {
        c.payload = CertUnitaryDirectSumZero{};
    } else if (tag == "DirectSumComponent") {
        CertDirectSumComponent p;
        p.index = j.at("index").get<int>();
        p.inner = std::make_shared<Certificate>(certificate_from_json(j.at("inner")));
        c.payload = std::move(p);
    } else if (tag == "OracleEvidence") {
        c.payload = CertOracleEvidence{report_from_json(j.at("report"))};
    } else {
        throw UnknownCertificateTag("unknown certificate tag: '" + tag + "'");
    }
    return c;
}

json report_to_json(const OracleReport& r) {
    json outcomes = json::array();
    for (const WordOutcome& o : r.outcomes) {
        json jo{{"word", word_to_json(o.word)}, {"status", o.solved ? "solved" : "unsolved"}};
        if (o.solved) {
            jo["x"] = optional_word_to_json(o.x);
            jo["y"] = optional_word_to_json(o.y);
            jo["residual"] = o.residual;
            if (r.mode == ScanMode::Simplicity) {
                jo["x_star"] = optional_word_to_json(o.x_star);
                jo["y_star"] = optional_word_to_json(o.y_star);
                jo["residual_star"] = o.residual_star;
            }
        }
        outcomes.push_back(std::move(jo));
    }
    json j{{"mode", r.mode == ScanMode::Si ? "si" : "simplicity"},
           {"bounds",
            {{"w_max", r.bounds.w_max},
             {"factor_max_len", r.bounds.factor_max_len},
             {"element_cap", r.bounds.element_cap},
             {"norm_cap", r.bounds.norm_cap}}},
           {"outcomes", std::move(outcomes)},
           {"overall", r.all_solved ? "ALL-SOLVED" : "FAILURE-WITNESS"},
           {"table_truncated", r.table_truncated}};
    if (r.failure_witness) j["failure_witness"] = word_to_json(*r.failure_witness);
    return j;
}

OracleReport report_from_json(const json& j) {
    OracleReport r;
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "si")
        r.mode = ScanMode::Si;
    else if (mode == "simplicity")
        r.mode = ScanMode::Simplicity;
    else
        throw ParseError("bad oracle mode: '" + mode + "'");
    const json& b = j.at("bounds");
    r.bounds.w_max = b.at("w_max").get<int>();
    r.bounds.factor_max_len = b.at("factor_max_len").get<int>();
    r.bounds.element_cap = b.at("element_cap").get<std::size_t>();
    r.bounds.norm_cap = b.at("norm_cap").get<double>();
    for (const json& jo : j.at("outcomes")) {
        WordOutcome o;
        o.word = word_from_string(jo.at("word").get<std::string>());
        o.solved = jo.at("status").get<std::string>() == "solved";
        if (o.solved) {
            o.x = optional_word_from_json(jo.at("x"));
            o.y = optional_word_from_json(jo.at("y"));
            o.residual = jo.at("residual").get<double>();
            if (r.mode == ScanMode::Simplicity) {
                o.x_star = optional_word_from_json(jo.at("x_star"));
                o.y_star = optional_word_from_json(jo.at("y_star"));
                o.residual_star = jo.at("residual_star").get<double>();
            }
        }
        r.outcomes.push_back(std::move(o));
    }
    r.all_solved = j.at("overall").get<std::string>() == "ALL-SOLVED";
    if (j.contains("failure_witness"))
        r.failure_witness = word_from_string(j.at("failure_witness").get<std::string>());
    r.table_truncated = j.at("table_truncated").get<bool>();
    return r;
}

json parse_or_throw(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

std::string dump(const json& j, int indent) { return j.dump(indent); }

}  // namespace

std::string to_json_string(const CMatrix& m, int indent) { return dump(matrix_to_json(m), indent); }

CMatrix matrix_from_json_string(const std::string& text) {
    try {
        return matrix_from_json(parse_or_throw(text));
    } catch (const json::exception& e) {
        throw ParseError(std::string("matrix JSON: ") + e.what());
    }
}

std::string to_json_string(const SValues& s, int indent) {
    return dump(json{{"values", s.values}}, indent);
}

SValues svalues_from_json_string(const std::string& text) {
    try {
        return SValues{parse_or_throw(text).at("values").get<std::vector<double>>()};
    } catch (const json::exception& e) {
        throw ParseError(std::string("svalues JSON: ") + e.what());
    }
}

std::string to_json_string(const Verdict& v, int indent) {
    return dump(json{{"si", ternary_str(v.si)},
                     {"simple", ternary_str(v.simple)},
                     {"certificate", certificate_to_json(v.certificate)},
                     {"rule_trace", v.rule_trace}},
                indent);
}

Verdict verdict_from_json_string(const std::string& text) {
    try {
        const json j = parse_or_throw(text);
        Verdict v;
        v.si = ternary_from(j.at("si").get<std::string>());
        v.simple = ternary_from(j.at("simple").get<std::string>());
        v.certificate = certificate_from_json(j.at("certificate"));
        v.rule_trace = j.at("rule_trace").get<std::vector<std::string>>();
        return v;
    } catch (const json::exception& e) {
        throw ParseError(std::string("verdict JSON: ") + e.what());
    }
}

std::string to_json_string(const OracleReport& r, int indent) {
    return dump(report_to_json(r), indent);
}

OracleReport report_from_json_string(const std::string& text) {
    try {
        return report_from_json(parse_or_throw(text));
    } catch (const json::exception& e) {
        throw ParseError(std::string("oracle report JSON: ") + e.what());
    }
}

}  // namespace sisem
