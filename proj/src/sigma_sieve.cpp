#include "robin/arith.hpp"

#include <cmath>

namespace robin {

// Divisor pairs: every divisor pair (d, q) with d <= q of an n in [L, R) is
// visited exactly once by iterating d up to sqrt(R) and walking multiples
// m = d*q >= max(L, d^2). Incremental q avoids any division in the hot loop.
void sigma_fill_segment(uint64_t L, uint64_t R, std::vector<uint64_t>& out) {
    if (L < 1 || L >= R) throw std::invalid_argument("sigma_fill_segment: need 1 <= L < R");
    if (R - 1 > kSigmaRangeMaxHi) throw budget_error("sigma_fill_segment: range beyond 64-bit sigma safety cap");
    size_t len = static_cast<size_t>(R - L);
    out.assign(len, 0);
    uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(R - 1)));
    while (root * root > R - 1) --root;
    while ((root + 1) * (root + 1) <= R - 1) ++root;
    for (uint64_t d = 1; d <= root; ++d) {
        uint64_t start = std::max((L + d - 1) / d * d, d * d);
        if (start >= R) continue;
        uint64_t q = start / d;
        for (uint64_t m = start; m < R; m += d, ++q) {
            out[m - L] += (q == d) ? d : d + q;
        }
    }
}

std::vector<uint64_t> sigma_range(uint64_t lo, uint64_t hi) {
    if (lo < 1 || lo >= hi) throw std::invalid_argument("sigma_range: need 1 <= lo < hi");
    if (hi - lo > kSigmaRangeMaxSpan) throw budget_error("sigma_range: span exceeds segment budget");
    if (hi - 1 > kSigmaRangeMaxHi) throw budget_error("sigma_range: upper end beyond 64-bit sigma safety cap");
    std::vector<uint64_t> out;
    sigma_fill_segment(lo, hi, out);
    return out;
}

}  // namespace robin
