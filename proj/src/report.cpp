#include "robin/report.hpp"

#include <sstream>

namespace robin {

ordered_json enc_json(const Enc& e) {
    return ordered_json{{"lo", e.lo_str()}, {"hi", e.hi_str()}, {"bits", e.prec()}};
}

ordered_json to_json(const Verdict3& v) {
    ordered_json j{{"verdict", v.str()}};
    if (v.is_undecided()) j["width"] = v.width;
    return j;
}

ordered_json to_json(const Verdict& v) {
    ordered_json j{{"status", status_to_string(v.status)}, {"precision", v.precision}};
    if (v.margin) j["margin"] = enc_json(*v.margin);
    return j;
}

ordered_json to_json(const VerificationReport& r) {
    return ordered_json{
        {"inequality", ineq_to_string(r.id)},
        {"lo", r.lo},
        {"hi", r.hi},
        {"violations", r.violations},
        {"inapplicable", r.inapplicable},
        {"undecided", r.undecided},
        {"holds_count", r.holds_count},
        {"wall_time_ms", r.wall_time_ms},
        {"config",
         {{"precision", r.config.precision},
          {"segment_size", r.config.segment_size},
          {"workers", r.config.workers}}},
    };
}

ordered_json to_json(const CertStep& s) {
    ordered_json j{{"description", s.description}};
    if (s.value) j["value"] = enc_json(*s.value);
    j["verdict"] = to_json(s.verdict);
    return j;
}

ordered_json to_json(const CertificateReport& r) {
    ordered_json steps = ordered_json::array();
    for (const auto& s : r.steps) steps.push_back(to_json(s));
    ordered_json notes = ordered_json::array();
    for (const auto& s : r.notes) notes.push_back(to_json(s));
    ordered_json j{{"certificate", r.id},
                   {"steps", steps},
                   {"notes", notes},
                   {"overall", to_json(r.overall)},
                   {"precision", r.precision}};
    if (!r.cutoff_table.empty()) {
        ordered_json table = ordered_json::array();
        for (const auto& [p, m] : r.cutoff_table) table.push_back({{"p", p}, {"m", m}});
        j["cutoff_table"] = table;
    }
    return j;
}

ordered_json to_json(const MaximalityReport& r) {
    return ordered_json{{"k", r.k},
                        {"t", r.t},
                        {"max_at_primorial", r.max_at_primorial},
                        {"argmax", r.argmax},
                        {"tie_candidates", r.tie_candidates}};
}

ordered_json to_json(const DeductionRecord& d) {
    ordered_json j{{"log_n1", enc_json(d.log_n1)}, {"log_n2", enc_json(d.log_n2)}};
    if (d.n1) j["n1"] = d.n1->get_str();
    if (d.n2) j["n2"] = d.n2->get_str();
    j["statement"] = d.statement;
    return j;
}

ordered_json to_json(const CAExponentVector& v) {
    ordered_json high = ordered_json::array();
    for (const auto& [p, a] : v.high_exponents) high.push_back({{"p", p}, {"a", a}});
    ordered_json j{{"epsilon", v.epsilon.get_str()},
                   {"max_prime", v.max_prime},
                   {"high_exponents", high},
                   {"log_n", enc_json(v.log_n)},
                   {"log_sigma_ratio", enc_json(v.log_sigma_ratio)}};
    if (v.n) j["n"] = v.n->get_str();
    if (v.tie) j["tie"] = true;
    if (v.delta_p) j["delta"] = {{"p", v.delta_p}, {"new_exponent", v.delta_exp}};
    return j;
}

ordered_json to_json(const std::vector<PrimorialRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows)
        arr.push_back(ordered_json{{"k", r.k},
                                   {"p_k", r.p_k},
                                   {"theta", enc_json(r.theta)},
                                   {"r_t", enc_json(r.r_t)}});
    return arr;
}

std::string primorial_csv(const std::vector<PrimorialRow>& rows) {
    std::ostringstream os;
    os << "k,p_k,theta_lo,theta_hi,r2_lo,r2_hi\n";
    for (const auto& r : rows)
        os << r.k << ',' << r.p_k << ',' << r.theta.lo_str() << ',' << r.theta.hi_str() << ','
           << r.r_t.lo_str() << ',' << r.r_t.hi_str() << '\n';
    return os.str();
}

ordered_json wrap_report(const std::string& command, ordered_json config, ordered_json result,
                         double wall_time_ms) {
    return ordered_json{{"tool", "robin"},
                        {"version", "1.0.0"},
                        {"command", command},
                        {"config", std::move(config)},
                        {"result", std::move(result)},
                        {"wall_time_ms", wall_time_ms}};
}

}  // namespace robin
