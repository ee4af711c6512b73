// Acceptance suite: one line per criterion, full scale, pinned
// tolerances and runtime limits. Exit status is nonzero when any
// criterion fails.

#include "badic/checks.hpp"

#include <chrono>
#include <cstdio>
#include <string>

using namespace badic;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int k, const std::string& name, bool pass, const std::string& detail, double seconds,
            double limit_s = 0.0) {
    bool ok = pass;
    std::string extra;
    if (limit_s > 0.0 && seconds > limit_s) {
        ok = false;
        extra = checks::detail::fmt("; RUNTIME %.1fs exceeds %.0fs", seconds, limit_s);
    }
    std::printf("[%d/8] %s %s (%s%s) [%.1fs]\n", k, ok ? "PASS" : "FAIL", name.c_str(),
                detail.c_str(), extra.c_str(), seconds);
    std::fflush(stdout);
    if (!ok) ++failures;
}

template <class F>
void timed(int k, const std::string& name, double limit_s, F&& fn) {
    const auto t0 = Clock::now();
    checks::CheckResult res = fn();
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report(k, name, res.pass, res.detail, secs, limit_s);
}

}  // namespace

int main() {
    const std::uint64_t seed = 20240901;

    // 1. net property: b in {2,3,5}, n <= 6, 10 random patterns, every
    //    split j1 + j2 <= n, exact counts, under 10 s
    timed(1, "net_property", 10.0, [&] { return checks::net_property({2, 3, 5}, 6, 10, seed); });

    // 2. coefficient triple agreement, exact in the cyclotomic backend:
    //    b in {2,3}, n <= 4, 5 random patterns, all indices with
    //    max(j1,j2) <= n+2, under 60 s
    timed(2, "triple_agreement", 60.0, [&] {
        return checks::triple_agreement(
            {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {3, 4}}, 5, 25, seed);
    });

    // 3. digit-sum identities against enumeration: b in {2,3,4}, n <= 4,
    //    all 2^n patterns at b = 2, exact, under 20 s
    timed(3, "digit_sums", 20.0, [&] { return checks::digit_sums({2, 3, 4}, 4); });

    // 4. corner coefficient identity, b <= 5, n <= 6, 20 random patterns
    timed(4, "corner_identity", 0.0, [&] { return checks::corner_identity(5, 6, 20, seed); });

    // 5. truncated Parseval at J = n+5 with analytic tail against the
    //    exact Warnock rational, 1e-10 relative, b in {2,3}, n <= 8
    timed(5, "parseval_vs_warnock", 0.0,
          [&] { return checks::parseval_vs_warnock({2, 3}, 8, 5, 1e-10, seed); });

    // 6. Theorem-1.1 rate diagnostic, b = 2, r = 0, p = q = 2,
    //    n in {8..14}, J = n+4, under 5 min:
    //    balanced ratio max/min < 2; all-identity ratio grows
    //    monotonically and by >= 30%; all-identity ratio against
    //    2^-n n has max/min < 2
    {
        const auto t0 = Clock::now();
        auto d = checks::rate_diagnostics(2, 0.0, 2.0, 2.0, 8, 14);
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        const bool pass_balanced = d.balanced_spread < 2.0;
        const bool pass_growth = d.identity_growth >= 1.30;
        const bool pass_monotone = d.identity_monotone;
        const bool pass_nref = d.identity_n_spread < 2.0;
        report(6, "rate_theorem_1_1", pass_balanced && pass_growth && pass_monotone && pass_nref,
               checks::detail::fmt("balanced max/min = %.4f (< 2: %s); identity growth = %.4f "
                                   "(>= 1.30: %s); identity monotone: %s; identity vs b^-n n "
                                   "max/min = %.4f (< 2: %s)",
                                   d.balanced_spread, pass_balanced ? "yes" : "NO",
                                   d.identity_growth, pass_growth ? "yes" : "NO",
                                   pass_monotone ? "yes" : "NO", d.identity_n_spread,
                                   pass_nref ? "yes" : "NO"),
               secs, 300.0);
    }

    // 7. magnitude audit at b = 2, n = 4: one global measured C <= 4 and
    //    at most b^n regime-(ii) deviations per level pair
    timed(7, "magnitude_audit", 0.0, [&] { return checks::magnitude_audit(2, 4, 4.0, seed); });

    // 8. sum_l |zeta^l - 1|^-2 = (b^2-1)/12 within 1e-12 for b in 2..10
    timed(8, "tail_constant", 0.0, [&] { return checks::tail_constant(10, 1e-12); });

    if (failures == 0) {
        std::printf("acceptance: 8/8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
