#include "sisem/demo.hpp"

#include <chrono>
#include <cstdio>

namespace sisem {

namespace {

bool oracle_matches(Ternary verdict, const OracleReport& report) {
    if (verdict == Ternary::Yes) return report.all_solved;
    if (verdict == Ternary::No) return report.failure_witness.has_value();
    return true;
}

}  // namespace

DemoReport run_demo(const Tolerance& tol, const OracleBounds& budget, const std::string& only) {
    const auto t0 = std::chrono::steady_clock::now();
    DemoReport report;
    for (const GalleryEntry& entry : gallery()) {
        if (!only.empty() && entry.name != only) continue;
        DemoRow row;
        row.name = entry.name;
        row.expected_si = entry.expected_si;
        row.expected_simple = entry.expected_simple;

        const Verdict vsi = classify_si(entry.matrix, tol, budget);
        const Verdict vsimple = classify_simple(entry.matrix, tol, budget);
        row.got_si = vsi.si;
        row.got_simple = vsimple.simple;
        row.rule = vsi.rule_trace.empty() ? "" : vsi.rule_trace.back();
        row.certificate_tag = vsi.certificate.tag();
        row.certificate_valid = validate_certificate(entry.matrix, vsi.certificate, tol) &&
                                validate_certificate(entry.matrix, vsimple.certificate, tol);

        SemigroupTable table =
            enumerate_semigroup(entry.matrix, budget.factor_max_len, budget.enum_limits(), tol);
        row.oracle_agrees = oracle_matches(row.got_si, si_scan(entry.matrix, budget.w_max, table, tol));
        if (row.got_simple != Ternary::Inconclusive)
            row.oracle_agrees =
                row.oracle_agrees &&
                oracle_matches(row.got_simple,
                               simplicity_scan(entry.matrix, budget.w_max, table, tol));

        const bool si_ok = row.got_si == row.expected_si;
        const bool simple_ok =
            row.expected_simple == Ternary::Inconclusive || row.got_simple == row.expected_simple;
        row.pass = si_ok && simple_ok && row.certificate_valid && row.oracle_agrees;
        report.all_pass = report.all_pass && row.pass;
        report.rows.push_back(std::move(row));
    }
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::string format_demo_table(const DemoReport& report) {
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-18s %-6s %-6s %-8s %-8s %-26s %-5s %-6s %s\n", "name",
                  "si", "got", "simple", "got", "rule", "cert", "oracle", "row");
    out += buf;
    auto short3 = [](Ternary t) {
        switch (t) {
            case Ternary::Yes: return "YES";
            case Ternary::No: return "NO";
            default: return "-";
        }
    };
    for (const DemoRow& r : report.rows) {
        std::snprintf(buf, sizeof buf, "%-18s %-6s %-6s %-8s %-8s %-26s %-5s %-6s %s\n",
                      r.name.c_str(), short3(r.expected_si), short3(r.got_si),
                      short3(r.expected_simple), short3(r.got_simple), r.rule.c_str(),
                      r.certificate_valid ? "ok" : "BAD", r.oracle_agrees ? "agree" : "DIFF",
                      r.pass ? "PASS" : "FAIL");
        out += buf;
    }
    std::snprintf(buf, sizeof buf, "%s (%.2fs)\n", report.all_pass ? "ALL PASS" : "FAILURES",
                  report.seconds);
    out += buf;
    return out;
}

}  // namespace sisem
