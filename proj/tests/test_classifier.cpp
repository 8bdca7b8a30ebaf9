#include <doctest.h>

#include "test_support.hpp"

using namespace sisem;
using namespace sisem::test;

namespace {

const Complex kI(0.0, 1.0);

Verdict vsi(const CMatrix& a) { return classify_si(a); }

const CMatrix& from_gallery(const char* name) {
    static std::vector<GalleryEntry> cache;  // keep matrices alive
    const auto e = gallery_find(name);
    REQUIRE(e.has_value());
    cache.push_back(*e);
    return cache.back().matrix;
}

}  // namespace

TEST_CASE("classify_si reproduces the gallery verdicts with the expected rules") {
    {
        const Verdict v = vsi(build_jordan({{{Complex(0.0, 0.0), 3}}}));
        CHECK(v.si == Ternary::Yes);
        CHECK(v.rule_trace.back() == "R1-power-partial-isometry");
        CHECK(v.certificate.tag() == "PowerPartialIsometry");
    }
    {
        const Verdict v = vsi(from_gallery("E1"));
        CHECK(v.si == Ternary::No);
        CHECK(v.rule_trace.back() == "R6-nilp-deg3-small-square");
        CHECK(v.certificate.tag() == "NilpDeg3SmallSquare");
        const auto& p = std::get<CertNilpDeg3SmallSquare>(v.certificate.payload);
        CHECK(p.norm_t2 == doctest::Approx(0.7071067811865476));
    }
    {
        const Verdict v = vsi(from_gallery("J2-1"));
        CHECK(v.si == Ternary::No);
        CHECK(v.rule_trace.back() == "R10-jordan-block");
        CHECK(v.certificate.tag() == "JordanNotPI");
    }
    {
        const Verdict v = vsi(from_gallery("group-2x2"));
        CHECK(v.si == Ternary::Yes);
        CHECK(v.simple == Ternary::Yes);
        CHECK(v.rule_trace.back() == "R14-group");
        CHECK(v.certificate.tag() == "GroupSimple");
    }
    {
        const Verdict v = vsi(scale(2.0, CMatrix::identity(2)));
        CHECK(v.si == Ternary::Yes);
        CHECK(v.rule_trace.back() == "R0-selfadjoint");
    }
    {
        const Verdict v = vsi(from_gallery("shift-plus-2I"));
        CHECK(v.si == Ternary::No);
        CHECK(v.rule_trace.back() == "R2-kernel-dichotomy");
        const auto& p = std::get<CertKernelDichotomyFail>(v.certificate.payload);
        CHECK(p.rank_a == 4);
        CHECK(p.rank_a2 == 3);
    }
    {
        // All entries exceed one, but the determinant rule sits earlier in
        // the ladder and is conclusive first.
        const Verdict v = vsi(from_gallery("entries-gt-1"));
        CHECK(v.si == Ternary::No);
        CHECK(v.rule_trace.back() == "R7-det-modulus");
        CHECK(std::get<CertDetModulus>(v.certificate.payload).value ==
              doctest::Approx(10.0));
    }
}

TEST_CASE("later rules stay reachable on matrices the early ladder skips") {
    {
        // Rank-one flat matrix: only the entry rule applies.
        const CMatrix a = CMatrix::from_rows({{2.0, 4.0}, {2.0, 4.0}});
        const Verdict v = vsi(a);
        CHECK(v.si == Ternary::No);
        CHECK(v.rule_trace.back() == "R12-entries-beyond-one");
        CHECK(std::get<CertNonnegEntries>(v.certificate.payload).min_nonzero_entry ==
              doctest::Approx(2.0));

        const Verdict vneg = vsi(CMatrix::from_rows({{-2.0, -4.0}, {-2.0, -4.0}}));
        CHECK(vneg.si == Ternary::No);
        CHECK(vneg.rule_trace.back() == "R12-entries-beyond-one");
    }
    {
        // Norm-one non partial isometry padded to dodge invertibility.
        const CMatrix a = direct_sum(from_gallery("norm-one-not-pi"), CMatrix::zero(1));
        const Verdict v = vsi(a);
        CHECK(v.si == Ternary::No);
        CHECK(v.rule_trace.back() == "R11-norm-one-not-pi");
        CHECK(std::get<CertNormOneNotPi>(v.certificate.payload).offending_s_value ==
              doctest::Approx(0.5));
    }
    {
        // Diagonal with |det| = 1 but non-unimodular entries.
        CMatrix a(2);
        a.at(0, 0) = Complex(0.0, 2.0);
        a.at(1, 1) = Complex(0.0, 0.5);
        const Verdict v = vsi(a);
        CHECK(v.si == Ternary::No);
        CHECK(v.rule_trace.back() == "R9-jordan-unitary");
    }
    {
        // Non-invertible normal direct sum: the component rule fires.
        CMatrix a(3);
        a.at(0, 0) = Complex(0.0, 2.0);
        a.at(1, 1) = Complex(0.0, 0.5);
        a.at(2, 2) = Complex(0.0, 0.0);
        const Verdict v = vsi(a);
        CHECK(v.si == Ternary::No);
        CHECK(v.rule_trace.back() == "R13-direct-sum");
        const auto& p = std::get<CertDirectSumComponent>(v.certificate.payload);
        CHECK(p.index == 0);
        REQUIRE(p.inner);
        CHECK(p.inner->tag() == "DetModulus");
    }
}

TEST_CASE("the near-unimodular band stays inconclusive") {
    const Verdict v = vsi(build_jordan({{{Complex(1.0 - 2e-10, 0.0), 2}}}));
    CHECK(v.si == Ternary::Inconclusive);
    CHECK(v.certificate.tag() == "OracleEvidence");
    bool saw_boundary = false;
    for (const std::string& r : v.rule_trace)
        if (r.find("boundary") != std::string::npos) saw_boundary = true;
    CHECK(saw_boundary);
}

TEST_CASE("classify_simple verdicts") {
    {
        CMatrix d(2);
        d.at(0, 0) = kI;
        d.at(1, 1) = std::polar(1.0, 1.0);
        const Verdict v = classify_simple(d);
        CHECK(v.simple == Ternary::Yes);
        CHECK(v.si == Ternary::Yes);
    }
    {
        const Verdict v = classify_simple(build_jordan({{{Complex(0.0, 0.0), 2}}}));
        CHECK(v.simple == Ternary::No);
        CHECK(v.si == Ternary::Yes);  // nilpotent degree 2 partial isometry
        CHECK(v.certificate.tag() == "KernelDichotomyFail");
        const auto& p = std::get<CertKernelDichotomyFail>(v.certificate.payload);
        CHECK(p.rank_a == 1);
        CHECK(p.rank_a2 == 0);
    }
    {
        const Verdict v = classify_simple(from_gallery("J3-1"));
        CHECK(v.simple == Ternary::No);  // not SI, so not simple
    }
    {
        const Verdict v = classify_simple(scale(2.0, CMatrix::identity(2)));
        CHECK(v.simple == Ternary::Inconclusive);
        CHECK(v.certificate.tag() == "OracleEvidence");
        const auto& ev = std::get<CertOracleEvidence>(v.certificate.payload);
        CHECK(ev.report.mode == ScanMode::Simplicity);
        CHECK_FALSE(ev.report.all_solved);  // (T^2) misses T at the bound
    }
    {
        // The zero summand keeps the identity out of the table, so the group
        // rule stays silent and the quasi-isometry relation decides.
        const Verdict v = classify_simple(from_gallery("unitary-plus-zero"));
        CHECK(v.simple == Ternary::Yes);
        CHECK(v.certificate.tag() == "UnitaryDirectSumZero");
    }
}

TEST_CASE("validate_certificate accepts honest certificates and rejects tampered ones") {
    const CMatrix j3 = build_jordan({{{Complex(0.0, 0.0), 3}}});
    CHECK(validate_certificate(j3, Certificate{Claim::SiYes, CertPowerPartialIsometry{3}}));

    // |det J_2(1)| = 1, so the determinant certificate cannot back a NO.
    const CMatrix j21 = build_jordan({{{Complex(1.0, 0.0), 2}}});
    CHECK_FALSE(validate_certificate(j21, Certificate{Claim::SiNo, CertDetModulus{1.0}}));

    CHECK(validate_certificate(from_gallery("entries-gt-1"),
                               Certificate{Claim::SiNo, CertNonnegEntries{2.0}}));

    CHECK_FALSE(validate_certificate(j3, Certificate{Claim::SiNo, CertNilpDeg3SmallSquare{1.0}}));
    CHECK_FALSE(validate_certificate(
        j3, Certificate{Claim::SiNo, CertKernelDichotomyFail{2, 2}}));
    CHECK_FALSE(
        validate_certificate(j3, Certificate{Claim::SiYes, CertSelfadjointGenerator{}}));
}

TEST_CASE("emitted certificates always re-validate") {
    for (const GalleryEntry& e : gallery()) {
        const Verdict v1 = classify_si(e.matrix);
        CHECK(validate_certificate(e.matrix, v1.certificate));
        const Verdict v2 = classify_simple(e.matrix);
        CHECK(validate_certificate(e.matrix, v2.certificate));
    }
}

TEST_CASE("min_nonzero_entry_bound") {
    const CMatrix a = from_gallery("entries-gt-1");
    CHECK(min_nonzero_entry_bound({a, a}) == doctest::Approx(4.0));
    const CMatrix a2 = mul(a, a);
    double actual_min = 1e300;
    for (const Complex& z : a2.entries())
        if (std::abs(z) > 1e-9) actual_min = std::min(actual_min, z.real());
    CHECK(actual_min >= 4.0);

    CHECK(min_nonzero_entry_bound({a}) == doctest::Approx(2.0));

    CMatrix b(2);
    b.at(0, 0) = Complex(3.0, 0.0);
    CHECK(min_nonzero_entry_bound({a, b}) == doctest::Approx(6.0));

    CHECK_THROWS_AS(min_nonzero_entry_bound({CMatrix::identity(2)}), PreconditionViolated);
    CMatrix c(2);
    c.at(0, 1) = Complex(2.0, 1.0);
    CHECK_THROWS_AS(min_nonzero_entry_bound({c}), PreconditionViolated);
}

TEST_CASE("classifier and oracle agree on recognized classes (sampled)") {
    const OracleBounds bounds;
    int checked = 0;
    // Shifts over the recognized weight grid (nilpotent partial isometries
    // included via the 0/±1 tuples).
    for (const auto& w : shift_weight_grid(4, {Complex(0.0, 0.0), Complex(1.0, 0.0),
                                               Complex(-1.0, 0.0), Complex(0.5, 0.0),
                                               Complex(-0.5, 0.0)})) {
        const CMatrix t = build_shift(w);
        const Verdict v = classify_si(t);
        const SemigroupTable table = enumerate_semigroup(t, bounds.factor_max_len);
        const OracleReport r = si_scan(t, bounds.w_max, table);
        if (v.si == Ternary::Yes) CHECK(r.all_solved);
        if (v.si == Ternary::No) CHECK(r.failure_witness.has_value());
        ++checked;
    }
    // Jordan specs over the recognized eigenvalue grid.
    for (const auto& spec :
         jordan_specs_up_to(3, {Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(-1.0, 0.0), kI,
                                -kI, Complex(2.0, 0.0), Complex(0.5, 0.0)})) {
        const CMatrix t = build_jordan(spec);
        const Verdict v = classify_si(t);
        const SemigroupTable table = enumerate_semigroup(t, bounds.factor_max_len);
        const OracleReport r = si_scan(t, bounds.w_max, table);
        if (v.si == Ternary::Yes) CHECK(r.all_solved);
        if (v.si == Ternary::No) CHECK(r.failure_witness.has_value());
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("SI verdicts at norm one imply zero-one singular values") {
    for (const GalleryEntry& e : gallery()) {
        const Verdict v = classify_si(e.matrix);
        if (v.si != Ternary::Yes) continue;
        if (is_selfadjoint(e.matrix)) continue;
        const SValues sv = svalues(e.matrix);
        if (std::abs(sv.values.front() - 1.0) > 1e-9) continue;
        CHECK(is_partial_isometry(e.matrix));
        for (double s : sv.values) CHECK(std::min(s, std::abs(s - 1.0)) <= 1e-9);
    }
}

TEST_CASE("the direct-sum rule never concludes SI from SI components") {
    const CMatrix sum = from_gallery("shift-plus-2I");
    const auto blocks = block_partition(sum);
    REQUIRE(blocks.size() >= 2);
    CHECK(classify_si(submatrix(sum, 0, 3)).si == Ternary::Yes);
    CHECK(classify_si(submatrix(sum, 3, 2)).si == Ternary::Yes);
    CHECK(classify_si(sum).si == Ternary::No);
}
