#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "robin/ca.hpp"
#include "robin/certificates.hpp"
#include "robin/primorial.hpp"
#include "robin/verify.hpp"

namespace robin {

using ordered_json = nlohmann::ordered_json;

// enclosure schema: {"lo": "<decimal>", "hi": "<decimal>", "bits": N};
// endpoint strings are rounded outward, so parsing them back yields an
// interval containing the original
ordered_json enc_json(const Enc& e);

ordered_json to_json(const Verdict3& v);
ordered_json to_json(const Verdict& v);
ordered_json to_json(const VerificationReport& r);
ordered_json to_json(const CertStep& s);
ordered_json to_json(const CertificateReport& r);
ordered_json to_json(const MaximalityReport& r);
ordered_json to_json(const DeductionRecord& d);
// exponents are summarized (max_prime + high entries); n included when small
ordered_json to_json(const CAExponentVector& v);

struct PrimorialRow {
    uint64_t k = 0;
    uint64_t p_k = 0;
    Enc theta;
    Enc r_t;
};

ordered_json to_json(const std::vector<PrimorialRow>& rows);
// fixed column contract: k,p_k,theta_lo,theta_hi,r2_lo,r2_hi
std::string primorial_csv(const std::vector<PrimorialRow>& rows);

// top-level document: tool id/version, command echo, config, result payload,
// wall time
ordered_json wrap_report(const std::string& command, ordered_json config, ordered_json result,
                         double wall_time_ms);

}  // namespace robin
