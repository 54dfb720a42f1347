// Acceptance suite: thirteen exact criteria, one PASS/FAIL line each, with
// the runtime budgets enforced. Exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "nanoban/arith.hpp"
#include "nanoban/coeff_table.hpp"
#include "nanoban/dt.hpp"
#include "nanoban/gwgv.hpp"
#include "nanoban/json_io.hpp"
#include "nanoban/models.hpp"
#include "nanoban/qforms.hpp"
#include "nanoban/siegel.hpp"

using namespace nanoban;

namespace {

int failures = 0;

void run(const std::string& name, double budget_seconds,
         const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("%s %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), dt,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    failures += !ok;
}

bool report_ok(const CheckReport& rep, std::string& detail) {
    if (!rep.all_pass()) {
        for (const auto& item : rep.items)
            if (!item.pass) {
                detail = rep.title + ": " + item.name +
                         (item.detail.empty() ? "" : " [" + item.detail + "]");
                return false;
            }
    }
    return true;
}

} // namespace

int main() {
    const CoeffTable table = build_coeff_table(12, 16);
    // wider table for the DT expansions whose internal p-window exceeds 16
    const CoeffTable table_wide = build_coeff_table(16, 48);

    // 1. coefficient-table soundness
    run("criterion-01 coeff-table a_max=12 m_max=16", 10.0, [&](std::string& detail) {
        const CoeffTable t = build_coeff_table(12, 16);
        if (t.c(-2, 0) != 0 || t.c(-5, 3) != 0) { detail = "c below a=-1"; return false; }
        for (std::int64_t a = -1; a <= 12; ++a) {
            const auto row = t.b_row(a);
            for (std::int64_t m = -16; m <= 16; ++m) {
                Int acc(0);
                for (const auto& [mp, bv] : row)
                    if (m - mp >= 1) acc += bv * (m - mp);
                if (acc != t.c(a, m)) {
                    detail = "refactorization fails at a=" + std::to_string(a) +
                             " m=" + std::to_string(m);
                    return false;
                }
            }
            for (const auto& [mp, bv] : row) {
                if (bv != 0 && (mp > a + 2 || mp < -(a + 2))) {
                    detail = "b support bound violated";
                    return false;
                }
            }
        }
        return true;
    });

    // 2. two-way c_{2g-2}
    run("criterion-02 resum_lambda == extract_cdisc(psi), -1<=d<=12, g<=5", 30.0,
        [&](std::string& detail) {
            for (int g = 0; g <= 5; ++g) {
                const auto cd = extract_cdisc(psi(g, 12, 16));
                for (std::int64_t d = -1; d <= 12; ++d) {
                    const auto r = resum_lambda(table, d, 5);
                    if (r[static_cast<std::size_t>(g)] != cd.at(d)) {
                        detail = "mismatch at g=" + std::to_string(g) +
                                 " d=" + std::to_string(d);
                        return false;
                    }
                }
            }
            return true;
        });

    // 3. Jacobi property, exhaustive window
    run("criterion-03 Jacobi property of phi and psi_g (g<=5) at (12,14)", 120.0,
        [&](std::string& detail) {
            if (jacobi_property_violation(phi_neg2_1(12, 14))) {
                detail = "phi_{-2,1}";
                return false;
            }
            for (int g = 0; g <= 5; ++g) {
                if (jacobi_property_violation(psi(g, 12, 14))) {
                    detail = "psi at g=" + std::to_string(g);
                    return false;
                }
            }
            return true;
        });

    // 4. DT/GW correspondence
    run("criterion-04 check_gw_dt caps(q,Q,y,p)=(3,3,9,8) G=4, all N", 300.0,
        [&](std::string& detail) {
            for (int N : all_N()) {
                const auto rep =
                    check_gw_dt(model_for(N), table_wide, TruncationCaps{8, 3, 3, 9}, 4);
                if (!report_ok(rep, detail)) return false;
            }
            return true;
        });

    // 5. GV consistency + unique calibration
    run("criterion-05 check_gv_dt at the same caps; sigma calibration unique", 300.0,
        [&](std::string& detail) {
            const GVTable gv = gv_table(16);
            for (int N : all_N()) {
                const auto rep =
                    check_gv_dt(model_for(N), table_wide, gv, TruncationCaps{8, 3, 3, 9});
                if (!report_ok(rep, detail)) return false;
            }
            // uniqueness: the builder tries both signs and throws unless
            // exactly one matches the conifold orientation
            if (build_coeff_table(6, 8).sigma() != 1) {
                detail = "unexpected calibration sign";
                return false;
            }
            return true;
        });

    // 6. local-to-global factorization
    run("criterion-06 z_nano == prod_k substituted z_banana_local, all N", 300.0,
        [&](std::string& detail) {
            for (int N : all_N()) {
                const TruncationCaps caps{8, 3, 3, 9};
                if (!(z_nano(model_for(N), table_wide, caps) ==
                      z_nano_via_local(model_for(N), table_wide, caps))) {
                    detail = "N=" + std::to_string(N);
                    return false;
                }
            }
            return true;
        });

    // 7. swap symmetry
    run("criterion-07 check_swap_symmetry g in {2,3}, caps (2,2,6), all N", 120.0,
        [&](std::string& detail) {
            for (int N : all_N()) {
                for (int g : {2, 3}) {
                    const auto rep =
                        check_swap_symmetry(model_for(N), g, PotentialCaps{2, 2, 6});
                    if (!report_ok(rep, detail)) return false;
                }
            }
            return true;
        });

    // 8. group predicates
    run("criterion-08 iota/conjugation/P_N=AND L_{N,k} on 1000 samples per N", 30.0,
        [&](std::string& detail) {
            for (int N : all_N()) {
                const auto& m = model_for(N);
                const QuadField f(N);
                const auto io = iota(m, f);
                if (!(sp_mul(f, io, io) == sp_identity(f)) || !is_symplectic(f, io)) {
                    detail = "iota defect at N=" + std::to_string(N);
                    return false;
                }
                auto rep1 = conj_preserves_PN(m, 1000, 4201u + static_cast<unsigned>(N));
                if (!report_ok(rep1, detail)) return false;
                auto rep2 = check_PN_intersection(m, 1000, 991u + static_cast<unsigned>(N));
                if (!report_ok(rep2, detail)) return false;
            }
            return true;
        });

    // 9. eta-product identities
    run("criterion-09 f_E(q)^2 = f_X(q^2) to 2000; a_1 = 1; multiplicativity <= 200",
        10.0, [&](std::string& detail) {
            for (int N : all_N()) {
                auto rep = verify_eta_square_identity(model_for(N), 2000);
                if (!report_ok(rep, detail)) return false;
                auto rep2 = verify_multiplicativity(model_for(N), 200);
                if (!report_ok(rep2, detail)) return false;
            }
            return true;
        });

    // 10. point-count modularity
    run("criterion-10 verify_ap p_max=1000, all four models", 60.0,
        [&](std::string& detail) {
            for (int N : all_N()) {
                auto rep = verify_ap(model_for(N), 1000);
                if (!report_ok(rep, detail)) return false;
            }
            return true;
        });

    // 11. j-invariant pipeline
    run("criterion-11 singular fibers -> j -> table models, primes <= 300", 300.0,
        [&](std::string& detail) {
            const std::vector<std::int64_t> primes{101, 103, 107, 109, 127, 139, 151, 211, 229, 241};
            const Rat expected[4] = {Rat(488095744, 125), Rat(1556068, 81), Rat(1728), Rat(0)};
            int idx = 0;
            for (int N : all_N()) {
                const auto res = singular_lambdas(model_for(N), primes);
                const Rat j = j_invariant(res.cubic);
                if (j != expected[idx]) {
                    detail = "j mismatch at N=" + std::to_string(N) + ": " + to_string(j);
                    return false;
                }
                auto rep = match_curve(model_for(N), j);
                if (!report_ok(rep, detail)) return false;
                // when the cubic splits over Q the classical cross-ratio
                // formula must agree
                if (auto cr = j_via_cross_ratio(res.cubic)) {
                    if (*cr != j) {
                        detail = "cross-ratio route disagrees at N=" + std::to_string(N);
                        return false;
                    }
                }
                ++idx;
            }
            return true;
        });

    // 12. appendix-B group actions
    run("criterion-12 group actions: 3 primes x 100 samples, orders and invariance",
        300.0, [&](std::string& detail) {
            for (std::int64_t p : {211, 307, 433}) {
                for (int N : all_N()) {
                    auto rep = verify_group_action(model_for(N), p, 100,
                                                   31000u + static_cast<unsigned>(p) +
                                                       static_cast<unsigned>(N));
                    if (!report_ok(rep, detail)) return false;
                }
            }
            return true;
        });

    // 13. intersection-table rederivation
    run("criterion-13 divisor/intersection tables, all (N,k)", 1.0,
        [&](std::string& detail) {
            for (int N : all_N()) {
                auto rep = verify_divisor_tables(model_for(N));
                if (!report_ok(rep, detail)) return false;
            }
            return true;
        });

    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all 13 criteria passed\n");
    return failures ? 1 : 0;
}
