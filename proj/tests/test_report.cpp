#include "doctest.h"
#include "robin/report.hpp"

using namespace robin;

TEST_SUITE("report") {

TEST_CASE("enclosure serialization brackets the value") {
    Enc third = Enc::exact_ui(1, 128).div(Enc::exact_ui(3, 128));
    ordered_json j = enc_json(third);
    REQUIRE(j.contains("lo"));
    REQUIRE(j.contains("hi"));
    CHECK(j["bits"] == 128);
    // parsing the decimal endpoints back yields an interval containing the
    // original: lo rounds down, hi rounds up
    Enc lo_back = Enc::from_decimal(j["lo"].get<std::string>(), 128);
    Enc hi_back = Enc::from_decimal(j["hi"].get<std::string>(), 128);
    CHECK(mpfr_cmp(lo_back.lo_raw(), third.lo_raw()) <= 0);
    CHECK(mpfr_cmp(hi_back.hi_raw(), third.hi_raw()) >= 0);
}

TEST_CASE("verdict serialization carries width only when undecided") {
    ordered_json t = to_json(Verdict3::yes());
    CHECK(t["verdict"] == "TRUE");
    CHECK(!t.contains("width"));
    ordered_json u = to_json(Verdict3::undecided(0.25));
    CHECK(u["verdict"] == "UNDECIDED");
    CHECK(u["width"] == 0.25);
}

TEST_CASE("scan report fields") {
    InequalitySpec spec = InequalitySpec::make(Ineq::ROBIN);
    VerificationReport rep = scan_range(3, 6000, spec, {});
    ordered_json j = to_json(rep);
    CHECK(j["inequality"] == "robin");
    CHECK(j["lo"] == 3);
    CHECK(j["hi"] == 6000);
    CHECK(j["violations"].is_array());
    CHECK(j["violations"].size() == rep.violations.size());
    CHECK(j["holds_count"] == rep.holds_count);
    CHECK(j["config"]["precision"] == 128);
    CHECK(j.contains("wall_time_ms"));
}

TEST_CASE("csv table uses the fixed header") {
    PrimeTable table = sieve_primes(100);
    std::vector<PrimorialRow> rows;
    for (uint64_t k = 2; k <= 4; ++k) {
        PrimorialRow r;
        r.k = k;
        r.p_k = table.primes[k - 1];
        r.theta = theta(r.p_k, table, 128);
        r.r_t = r_t_direct(k, 2, table, 128);
        rows.push_back(std::move(r));
    }
    std::string csv = primorial_csv(rows);
    CHECK(csv.rfind("k,p_k,theta_lo,theta_hi,r2_lo,r2_hi\n", 0) == 0);
    size_t lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == 4);  // header + three rows
    CHECK(csv.find("2,3,") != std::string::npos);
}

TEST_CASE("certificate report serialization") {
    CertificateReport rep = cert_primorial_ratio();
    ordered_json j = to_json(rep);
    CHECK(j["certificate"] == "thm102");
    CHECK(j["overall"]["verdict"] == "TRUE");
    CHECK(j["steps"].is_array());
    CHECK(j["steps"].size() == rep.steps.size());
    for (const auto& s : j["steps"]) {
        CHECK(s.contains("description"));
        CHECK(s.contains("verdict"));
    }
    // no cutoff table on this certificate
    CHECK(!j.contains("cutoff_table"));
    ordered_json j104 = to_json(cert_valuation_cutoffs());
    CHECK(j104["cutoff_table"].is_array());
}

TEST_CASE("ca record serialization") {
    std::vector<CAExponentVector> seq = ca_sequence(9.0);
    ordered_json j = to_json(seq.back());  // 5040
    CHECK(j["n"] == "5040");
    CHECK(j["max_prime"] == 7);
    CHECK(j["epsilon"].is_string());
    CHECK(j["high_exponents"].is_array());
    CHECK(j["log_n"]["bits"] >= 64);
    std::vector<CAExponentVector> longer = ca_sequence(15.0);
    REQUIRE(longer.size() >= 10);
    ordered_json d = to_json(robin_interval_deduction(longer[8], longer[9]));
    CHECK(d.contains("statement"));
}

TEST_CASE("top level envelope shape") {
    ordered_json doc = wrap_report("scan", ordered_json{{"precision", 128}},
                                   ordered_json{{"x", 1}}, 12.5);
    CHECK(doc["tool"] == "robin");
    CHECK(doc["version"].is_string());
    CHECK(doc["command"] == "scan");
    CHECK(doc["config"]["precision"] == 128);
    CHECK(doc["result"]["x"] == 1);
    CHECK(doc["wall_time_ms"] == 12.5);
    // insertion order is preserved so downstream diffs are stable
    std::string s = doc.dump();
    CHECK(s.find("\"tool\"") < s.find("\"version\""));
    CHECK(s.find("\"version\"") < s.find("\"command\""));
    CHECK(s.find("\"command\"") < s.find("\"result\""));
}

}  // TEST_SUITE
