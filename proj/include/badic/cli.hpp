#pragma once

// Command-line front end: point-set generation, discrepancy evaluation,
// coefficient tables, norms, scaling studies, QMC error series, and the
// verification suite. Everything prints deterministically; rationals
// cross the boundary as "num/den" strings.

#include "badic/checks.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace badic::cli {

inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string json_coeff_line(const PointSet& ps, const HaarIndex& idx, const CycloValue& value,
                                   bool exact) {
    const ComplexF c = to_complex(value);
    std::ostringstream os;
    os << "{\"j1\":" << idx.j1 << ",\"j2\":" << idx.j2 << ",\"m1\":" << idx.m1 << ",\"m2\":" << idx.m2
       << ",\"l1\":" << idx.l1 << ",\"l2\":" << idx.l2 << ",\"re\":" << fmt_double(c.real())
       << ",\"im\":" << fmt_double(c.imag()) << ",\"regime\":\""
       << regime_name(classify_regime(idx, ps.n)) << "\"";
    if (exact) {
        os << ",\"num_vec\":[";
        for (std::size_t k = 0; k < value.coeffs().size(); ++k)
            os << (k ? "," : "") << "\"" << numerator(value.coeffs()[k]).str() << "\"";
        os << "],\"den_vec\":[";
        for (std::size_t k = 0; k < value.coeffs().size(); ++k)
            os << (k ? "," : "") << "\"" << denominator(value.coeffs()[k]).str() << "\"";
        os << "]";
    }
    os << "}";
    return os.str();
}

struct VerifyOptions {
    bool quick = false;
    std::uint64_t seed = 20240901;
};

// The standard verification run; stays well under a minute, the quick
// variant under ~10 s. Full acceptance scale lives in the acceptance
// binary.
inline int run_verify(const VerifyOptions& opt, std::ostream& out) {
    using namespace badic::checks;
    const std::uint64_t s = opt.seed;
    std::vector<CheckResult> results;
    if (opt.quick) {
        results.push_back(net_property({2, 3}, 4, 3, s));
        results.push_back(triple_agreement({{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}, 2, 10, s));
        results.push_back(digit_sums({2, 3}, 3));
        results.push_back(corner_identity(3, 4, 5, s));
        results.push_back(parseval_vs_warnock({2, 3}, 5, 2, 1e-10, s));
        results.push_back(parseval_exact_identity({2, 3}, 3, 1, s));
        results.push_back(tail_constant(10, 1e-12));
        results.push_back(magnitude_audit(2, 3, 4.0, s));
        results.push_back(cyclo_arithmetic(200, s));
        results.push_back(mc_crosscheck({2}, 4, 20000, s));
        results.push_back(orthonormality(3, 3, 40, s));
        results.push_back(coarse_m_independence(2, 4, 2, s));
        results.push_back(flip_sign_identity(5));
        results.push_back(truncation_honesty({{2, 5}}, s));
        results.push_back(weight_relation({{2, 5}}, s));
    } else {
        results.push_back(net_property({2, 3, 5}, 5, 4, s));
        results.push_back(triple_agreement({{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}},
                                           2, 15, s));
        results.push_back(digit_sums({2, 3, 4}, 3));
        results.push_back(corner_identity(5, 5, 5, s));
        results.push_back(parseval_vs_warnock({2, 3}, 6, 2, 1e-10, s));
        results.push_back(parseval_exact_identity({2, 3}, 4, 2, s));
        results.push_back(tail_constant(10, 1e-12));
        results.push_back(magnitude_audit(2, 4, 4.0, s));
        results.push_back(cyclo_arithmetic(1000, s));
        results.push_back(mc_crosscheck({2, 3}, 4, 30000, s));
        results.push_back(orthonormality(3, 4, 60, s));
        results.push_back(coarse_m_independence(2, 5, 2, s));
        results.push_back(flip_sign_identity(5));
        results.push_back(truncation_honesty({{2, 5}, {3, 3}}, s));
        results.push_back(weight_relation({{2, 6}, {3, 4}}, s));
    }
    bool all = true;
    for (const auto& r : results) {
        out << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
        all = all && r.pass;
    }
    out << (all ? "verify: all checks passed\n" : "verify: FAILURES present\n");
    return all ? 0 : 1;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"generalized Hammersley point sets, b-adic Haar coefficients, Besov norms"};
    app.require_subcommand(1);

    int base = 2, n = 1;
    std::string pattern_str;
    auto add_pointset_opts = [&](CLI::App* cmd, bool need_pattern) {
        cmd->add_option("--base,-b", base, "base b >= 2")->check(CLI::Range(2, 64));
        cmd->add_option("--n", n, "digit count n >= 1")->required()->check(CLI::Range(1, 40));
        auto* p = cmd->add_option("--pattern", pattern_str, "sign pattern over {I,R}, s_1 first");
        if (need_pattern) p->required();
    };
    auto make_ps = [&]() {
        return generate_point_set(base, n, SignPattern::from_string(pattern_str));
    };

    // generate
    auto* c_gen = app.add_subcommand("generate", "emit the point set as CSV (x_num,y_num,den)");
    std::string out_file;
    add_pointset_opts(c_gen, true);
    c_gen->add_option("--out", out_file, "write CSV to a file instead of stdout");
    c_gen->callback([&]() {
        PointSet ps = make_ps();
        if (out_file.empty()) {
            write_points_csv(ps, out);
        } else {
            std::ofstream f(out_file);
            if (!f) throw CLI::ValidationError("--out", "cannot open '" + out_file + "'");
            write_points_csv(ps, f);
        }
    });

    // eval
    auto* c_eval = app.add_subcommand("eval", "exact discrepancy value at a rational point");
    std::string x_str, y_str;
    add_pointset_opts(c_eval, true);
    c_eval->add_option("--x", x_str, "x coordinate, num/den")->required();
    c_eval->add_option("--y", y_str, "y coordinate, num/den")->required();
    c_eval->callback([&]() {
        PointSet ps = make_ps();
        EvalPoint p{parse_rational(x_str), parse_rational(y_str)};
        if (p.x < 0 || p.x > 1 || p.y < 0 || p.y > 1)
            throw CLI::ValidationError("--x/--y", "evaluation point must lie in [0,1]^2");
        out << format_rational(eval_discrepancy(ps, p)) << "\n";
    });

    // coeff
    auto* c_coeff = app.add_subcommand("coeff", "one Haar coefficient of the discrepancy function");
    HaarIndex cidx;
    std::string method = "fast";
    bool exact = false;
    add_pointset_opts(c_coeff, true);
    c_coeff->add_option("--j1", cidx.j1)->required();
    c_coeff->add_option("--j2", cidx.j2)->required();
    c_coeff->add_option("--m1", cidx.m1);
    c_coeff->add_option("--m2", cidx.m2);
    c_coeff->add_option("--l1", cidx.l1);
    c_coeff->add_option("--l2", cidx.l2);
    c_coeff->add_option("--method", method)->check(CLI::IsMember({"fast", "pointwise", "oracle"}));
    c_coeff->add_flag("--exact", exact, "include exact coordinate vectors");
    c_coeff->callback([&]() {
        PointSet ps = make_ps();
        CycloValue v = method == "fast"        ? coeff_discrepancy_fast(ps, cidx)
                       : method == "pointwise" ? coeff_discrepancy_pointwise(ps, cidx)
                                               : coeff_oracle(ps, cidx);
        out << json_coeff_line(ps, cidx, v, exact) << "\n";
    });

    // coeffs-table
    auto* c_table = app.add_subcommand("coeffs-table", "all coefficients up to a level, JSON lines");
    int jmax = 0;
    add_pointset_opts(c_table, true);
    c_table->add_option("--jmax", jmax, "maximum level per axis")->required()->check(CLI::Range(0, 12));
    c_table->add_flag("--exact", exact, "include exact coordinate vectors");
    c_table->callback([&]() {
        PointSet ps = make_ps();
        for (int j1 = -1; j1 <= jmax; ++j1)
            for (int j2 = -1; j2 <= jmax; ++j2) {
                const std::int64_t m1max = j1 == -1 ? 1 : pow_i64(base, j1);
                const std::int64_t m2max = j2 == -1 ? 1 : pow_i64(base, j2);
                const int l1max = j1 == -1 ? 1 : base - 1;
                const int l2max = j2 == -1 ? 1 : base - 1;
                for (std::int64_t m1 = 0; m1 < m1max; ++m1)
                    for (std::int64_t m2 = 0; m2 < m2max; ++m2)
                        for (int l1 = 1; l1 <= l1max; ++l1)
                            for (int l2 = 1; l2 <= l2max; ++l2) {
                                HaarIndex idx{j1, j2, m1, m2, l1, l2};
                                out << json_coeff_line(ps, idx, coeff_discrepancy_fast(ps, idx), exact)
                                    << "\n";
                            }
            }
    });

    // norm
    auto* c_norm = app.add_subcommand("norm", "discrete Besov quasi-norm of the discrepancy");
    std::string p_str = "2", q_str = "2";
    double r_param = 0.0;
    int J_param = -1;
    add_pointset_opts(c_norm, true);
    c_norm->add_option("--p", p_str, "inner exponent in [1,inf], 'inf' allowed");
    c_norm->add_option("--q", q_str, "outer exponent in [1,inf], 'inf' allowed");
    c_norm->add_option("--r", r_param, "smoothness parameter");
    c_norm->add_option("--J", J_param, "truncation level (default n+4)");
    c_norm->callback([&]() {
        auto parse_pq = [](const std::string& s) {
            if (s == "inf" || s == "Inf") return std::numeric_limits<double>::infinity();
            return std::stod(s);
        };
        PointSet ps = make_ps();
        NormParams np{parse_pq(p_str), parse_pq(q_str), r_param, J_param};
        NormResult res = besov_quasi_norm(ps, np);
        out << "norm=" << fmt_double(res.value) << "\n";
        out << "tail_bound=" << fmt_double(res.tail_bound) << "\n";
    });

    // l2
    auto* c_l2 = app.add_subcommand("l2", "Parseval sum vs the exact Warnock L2^2");
    bool l2_exact = false;
    int l2_J = -1;
    add_pointset_opts(c_l2, true);
    c_l2->add_option("--J", l2_J, "truncation level (default n+5)");
    c_l2->add_flag("--exact", l2_exact, "also print the exact rational value");
    c_l2->callback([&]() {
        PointSet ps = make_ps();
        const int J = l2_J < 0 ? ps.n + 5 : l2_J;
        const double par = parseval_l2(ps, J, true);
        const Rational warnock = l2_squared_exact(ps);
        out << "parseval=" << fmt_double(par) << "\n";
        out << "warnock=" << fmt_double(to_double(warnock)) << "\n";
        if (l2_exact) out << "exact=" << format_rational(warnock) << "\n";
        out << "diff=" << fmt_double(par - to_double(warnock)) << "\n";
    });

    // scaling
    auto* c_scal = app.add_subcommand("scaling", "rate study CSV: n,N,norm,reference,ratio");
    int nmin = 4, nmax = 10;
    std::string rule_str = "balanced";
    c_scal->add_option("--base,-b", base)->check(CLI::Range(2, 16));
    c_scal->add_option("--nmin", nmin)->required();
    c_scal->add_option("--nmax", nmax)->required();
    c_scal->add_option("--p", p_str);
    c_scal->add_option("--q", q_str);
    c_scal->add_option("--r", r_param);
    c_scal->add_option("--pattern-rule", rule_str)->check(CLI::IsMember({"balanced", "identity"}));
    c_scal->callback([&]() {
        auto parse_pq = [](const std::string& s) {
            if (s == "inf" || s == "Inf") return std::numeric_limits<double>::infinity();
            return std::stod(s);
        };
        auto rows = rate_report(base, r_param, parse_pq(p_str), parse_pq(q_str), nmin, nmax,
                                rule_str == "balanced" ? PatternRule::Balanced
                                                       : PatternRule::AllIdentity);
        out << "n,N,norm,reference,ratio\n";
        for (const auto& row : rows)
            out << row.n << ',' << row.N << ',' << fmt_double(row.norm) << ','
                << fmt_double(row.reference) << ',' << fmt_double(row.ratio) << "\n";
    });

    // integrate
    auto* c_int = app.add_subcommand("integrate", "QMC integration error CSV: n,N,estimate,exact,error");
    std::string f_id = "xy";
    c_int->add_option("--base,-b", base)->check(CLI::Range(2, 16));
    c_int->add_option("--f", f_id, "integrand id: one, xy, x2y2, gauss")->required();
    c_int->add_option("--nmin", nmin)->required();
    c_int->add_option("--nmax", nmax)->required();
    c_int->add_option("--pattern-rule", rule_str)->check(CLI::IsMember({"balanced", "identity"}));
    c_int->callback([&]() {
        out << "n,N,estimate,exact,error\n";
        for (int nn = nmin; nn <= nmax; ++nn) {
            PointSet ps = generate_point_set(base, nn,
                                             rule_str == "balanced" ? balanced_pattern(nn)
                                                                    : all_identity_pattern(nn));
            QmcResult res = qmc_integrate(ps, f_id);
            out << nn << ',' << ps.size() << ',' << fmt_double(res.estimate) << ','
                << fmt_double(res.exact) << ',' << fmt_double(res.error) << "\n";
        }
    });

    // verify
    auto* c_ver = app.add_subcommand("verify", "run the invariant suites");
    VerifyOptions vopt;
    c_ver->add_flag("--quick", vopt.quick, "reduced scale, a few seconds");
    c_ver->add_option("--seed", vopt.seed, "seed for randomized sampling");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_ver->parsed()) return run_verify(vopt, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace badic::cli
