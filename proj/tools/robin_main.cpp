#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "robin/report.hpp"

namespace {

using namespace robin;

struct GlobalOpts {
    unsigned precision = 128;
    uint64_t segment_size = uint64_t{1} << 22;
    unsigned workers = 0;  // 0 = logical cores
    std::string format = "json";
};

void print_table(const ordered_json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            print_table(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    } else if (j.is_array()) {
        bool scalars = true;
        for (const auto& e : j)
            if (e.is_object() || e.is_array()) scalars = false;
        if (scalars) {
            os << prefix << " =";
            for (const auto& e : j) os << ' ' << e.dump();
            os << '\n';
        } else {
            size_t i = 0;
            for (const auto& e : j) print_table(e, prefix + "[" + std::to_string(i++) + "]", os);
        }
    } else {
        os << prefix << " = " << j.dump() << '\n';
    }
}

int emit(const std::string& command, const GlobalOpts& g, ordered_json result, double wall_ms,
         int exit_code) {
    ordered_json config{{"precision", g.precision},
                        {"segment_size", g.segment_size},
                        {"workers", g.workers},
                        {"format", g.format}};
    ordered_json doc = wrap_report(command, std::move(config), std::move(result), wall_ms);
    if (g.format == "table")
        print_table(doc, "", std::cout);
    else
        std::cout << doc.dump(2) << '\n';
    return exit_code;
}

ScanConfig scan_config(const GlobalOpts& g) {
    ScanConfig c;
    c.precision = static_cast<mpfr_prec_t>(g.precision);
    c.segment_size = g.segment_size;
    c.workers = g.workers;
    return c;
}

PrimeTable table_with_k_primes(uint64_t k, uint64_t at_least_limit) {
    uint64_t limit = std::max<uint64_t>(at_least_limit, 64);
    for (;;) {
        PrimeTable t = sieve_primes(limit);
        if (t.primes.size() >= k) return t;
        limit *= 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rigorous checks for Robin-type inequalities, primorial ratios, "
                 "and colossally abundant numbers"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--precision", g.precision, "working precision in bits")
        ->envname("ROBIN_PRECISION_BITS")
        ->check(CLI::Range(16u, 1024u));
    app.add_option("--segment-size", g.segment_size, "sieve segment size")
        ->envname("ROBIN_SEGMENT_SIZE")
        ->check(CLI::Range(uint64_t{1024}, uint64_t{1} << 30));
    app.add_option("--workers", g.workers, "worker threads (0 = logical cores)")
        ->envname("ROBIN_WORKERS");
    app.add_option("--format", g.format, "output format")
        ->envname("ROBIN_FORMAT")
        ->check(CLI::IsMember({"json", "csv", "table"}));

    auto* cmd_sigma = app.add_subcommand("sigma", "divisor-sum arithmetic for a single n");
    uint64_t sigma_n = 0;
    unsigned sigma_t = 2;
    cmd_sigma->add_option("n", sigma_n, "integer to evaluate")->required();
    cmd_sigma->add_option("--t", sigma_t, "Psi index")->check(CLI::Range(2u, 64u));

    auto* cmd_factor = app.add_subcommand("factor", "factor a 64-bit integer");
    uint64_t factor_n = 0;
    cmd_factor->add_option("n", factor_n, "integer to factor")->required();

    auto* cmd_scan = app.add_subcommand("scan", "scan a range for inequality violations");
    std::string scan_ineq;
    uint64_t scan_from = 0, scan_to = 0;
    cmd_scan->add_option("--ineq", scan_ineq, "inequality id")->required();
    cmd_scan->add_option("--from", scan_from, "range start (inclusive, >= 3)")->required();
    cmd_scan->add_option("--to", scan_to, "range end (exclusive)")->required();

    auto* cmd_exc = app.add_subcommand("exceptions", "exception set up to a limit");
    std::string exc_ineq;
    uint64_t exc_limit = 0;
    cmd_exc->add_option("--ineq", exc_ineq, "inequality id")->required();
    cmd_exc->add_option("--limit", exc_limit, "inclusive limit")->required();

    auto* cmd_prim = app.add_subcommand("primorials", "primorial table with normalized ratios");
    uint64_t prim_kmax = 8;
    unsigned prim_t = 2;
    uint64_t prim_tail = 0;
    cmd_prim->add_option("--k-max", prim_kmax, "largest k (table covers k = 2..k-max)")
        ->check(CLI::Range(uint64_t{2}, kPrimorialMaterializeMaxK));
    cmd_prim->add_option("--t", prim_t, "Psi index")->check(CLI::Range(2u, 64u));
    cmd_prim->add_option("--tail-cutoff", prim_tail,
                         "prime cutoff for the product identity (0 = direct evaluation)");

    auto* cmd_cert = app.add_subcommand("certificate", "run a stored certificate chain");
    std::string cert_id;
    cmd_cert->add_option("id", cert_id, "certificate id")
        ->required()
        ->check(CLI::IsMember({"thm102", "thm103", "thm104", "cor104"}));

    auto* cmd_ca = app.add_subcommand("ca-scan", "enumerate colossally abundant numbers and "
                                                 "check the inequality on each");
    double ca_max_log = 1e4;
    cmd_ca->add_option("--max-log-n", ca_max_log, "generate records with log n up to this");

    auto* cmd_champ = app.add_subcommand("champions", "running maxima of Psi_t(n)/n");
    uint64_t champ_limit = 100000;
    unsigned champ_t = 2;
    cmd_champ->add_option("--limit", champ_limit, "scan bound")->required();
    cmd_champ->add_option("--t", champ_t, "Psi index")->check(CLI::Range(2u, 64u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cout, std::cerr);
        return 3;
    }

    auto t0 = std::chrono::steady_clock::now();
    auto wall = [&]() {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    };

    try {
        mpfr_prec_t prec = static_cast<mpfr_prec_t>(g.precision);

        if (*cmd_sigma) {
            Factorization f = factorize(sigma_n);
            ordered_json factors = ordered_json::array();
            for (const auto& fe : f.factors) factors.push_back({{"p", fe.p}, {"e", fe.e}});
            mpq_class sn(sigma(f), mpz_class(sigma_n));
            sn.canonicalize();
            ordered_json result{{"n", sigma_n},
                                {"factors", factors},
                                {"sigma", sigma(f).get_str()},
                                {"phi", phi(f).get_str()},
                                {"sigma_over_n", sn.get_str()},
                                {"t", sigma_t},
                                {"psi_t", psi_t(f, sigma_t).get_str()}};
            return emit("sigma", g, std::move(result), wall(), 0);
        }

        if (*cmd_factor) {
            Factorization f = factorize(factor_n);
            ordered_json factors = ordered_json::array();
            for (const auto& fe : f.factors) factors.push_back({{"p", fe.p}, {"e", fe.e}});
            return emit("factor", g, ordered_json{{"n", factor_n}, {"factors", factors}}, wall(), 0);
        }

        if (*cmd_scan) {
            InequalitySpec spec = InequalitySpec::make(ineq_from_string(scan_ineq));
            VerificationReport rep = scan_range(scan_from, scan_to, spec, scan_config(g));
            int code = !rep.violations.empty() ? 1 : (!rep.undecided.empty() ? 2 : 0);
            return emit("scan", g, to_json(rep), wall(), code);
        }

        if (*cmd_exc) {
            InequalitySpec spec = InequalitySpec::make(ineq_from_string(exc_ineq));
            std::vector<uint64_t> exc = exception_set(exc_limit, spec, scan_config(g));
            if (g.format == "csv") {
                std::cout << "n\n";
                for (uint64_t n : exc) std::cout << n << '\n';
                return 0;
            }
            ordered_json result{{"inequality", ineq_to_string(spec.id)},
                                {"limit", exc_limit},
                                {"exceptions", exc},
                                {"count", exc.size()}};
            return emit("exceptions", g, std::move(result), wall(), 0);
        }

        if (*cmd_prim) {
            PrimeTable table = table_with_k_primes(prim_kmax, std::max<uint64_t>(prim_tail, 1024));
            std::vector<PrimorialRow> rows;
            for (uint64_t k = 2; k <= prim_kmax; ++k) {
                PrimorialRow row;
                row.k = k;
                row.p_k = table.primes[k - 1];
                row.theta = theta(row.p_k, table, prec);
                row.r_t = prim_tail ? r_t_formula(k, prim_t, table, prim_tail, prec)
                                    : r_t_direct(k, prim_t, table, prec);
                rows.push_back(std::move(row));
            }
            if (g.format == "csv") {
                std::cout << primorial_csv(rows);
                return 0;
            }
            ordered_json result{{"t", prim_t},
                                {"method", prim_tail ? "product-identity" : "direct"},
                                {"rows", to_json(rows)}};
            return emit("primorials", g, std::move(result), wall(), 0);
        }

        if (*cmd_cert) {
            CertificateParams params = CertificateParams::defaults();
            CertificateReport rep;
            if (cert_id == "thm102") rep = cert_primorial_ratio(params, prec);
            else if (cert_id == "thm103") rep = cert_growth_chain(params, prec);
            else if (cert_id == "thm104") rep = cert_valuation_cutoffs(params, prec);
            else rep = cert_epsilon_threshold(params, prec);
            int code = rep.overall.is_true() ? 0 : (rep.overall.is_false() ? 1 : 2);
            return emit("certificate " + cert_id, g, to_json(rep), wall(), code);
        }

        if (*cmd_ca) {
            std::vector<CAExponentVector> seq = ca_sequence(ca_max_log);
            Enc log5040 = Enc::from_mpz(mpz_class(5040), prec).log();
            size_t holds = 0, inapplicable = 0;
            ordered_json fails = ordered_json::array();
            ordered_json undecided = ordered_json::array();
            bool fails_beyond_5040 = false;
            for (const auto& rec : seq) {
                Verdict v = robin_check_ca(rec);
                switch (v.status) {
                    case Status::HOLDS: ++holds; break;
                    case Status::INAPPLICABLE: ++inapplicable; break;
                    case Status::FAILS: {
                        fails.push_back(to_json(rec));
                        if (lt(log5040, rec.log_n).is_true()) fails_beyond_5040 = true;
                        break;
                    }
                    case Status::UNDECIDED: undecided.push_back(to_json(rec)); break;
                }
            }
            std::vector<DeductionRecord> chain = deduction_chain(seq);
            ordered_json head = ordered_json::array();
            for (size_t i = 0; i < seq.size() && i < 64; ++i) head.push_back(to_json(seq[i]));
            ordered_json coverage;
            if (!chain.empty())
                coverage = ordered_json{{"intervals", chain.size()},
                                        {"from", to_json(chain.front())},
                                        {"to", enc_json(chain.back().log_n2)}};
            ordered_json result{{"max_log_n", ca_max_log},
                                {"records", seq.size()},
                                {"holds", holds},
                                {"inapplicable", inapplicable},
                                {"fails", fails},
                                {"undecided", undecided},
                                {"first_records", head},
                                {"deduction_coverage", coverage}};
            int code = fails_beyond_5040 ? 1 : (!undecided.empty() ? 2 : 0);
            return emit("ca-scan", g, std::move(result), wall(), code);
        }

        if (*cmd_champ) {
            std::vector<uint64_t> ch = champion_scan(champ_limit, champ_t);
            if (g.format == "csv") {
                std::cout << "n\n";
                for (uint64_t n : ch) std::cout << n << '\n';
                return 0;
            }
            ordered_json result{{"limit", champ_limit}, {"t", champ_t}, {"champions", ch}};
            return emit("champions", g, std::move(result), wall(), 0);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 3;
}
