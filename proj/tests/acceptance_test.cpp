// Acceptance suite: runs every registered suite check once, groups the
// results into the named acceptance criteria, and prints one pass/fail line
// per criterion.  Exit status is nonzero when any criterion fails.

#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cremfol/checks.hpp"
#include "cremfol/report.hpp"

using namespace cremfol;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> check_ids;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "involutions reduce to the identity", {"involutions"}},
        {2, "factorization words reproduce rho, tau, psi", {"word_rho", "word_tau", "word_psi"}},
        {3, "generic quadratic pullbacks have degree 6", {"generic_degree_six"}},
        {4,
         "one-singularity models: explicit pullback identities and degrees",
         {"model_psi1_Omega1", "model_psi2_Omega2", "model_psi3_Omega3", "model_psi4_Omega4",
          "model_cubic_Omega1", "model_remark_quadratic"}},
        {5,
         "two-singularity normal form drops to degree <= 3 on all branches",
         {"two_sing_branch_rho", "two_sing_branch_b4", "two_sing_branch_sqrt"}},
        {6, "Darboux first integrals of Omega2 and Omega3", {"darboux_Omega2", "darboux_Omega3"}},
        {7,
         "classification sufficiency: each stated family annihilates its obstructions",
         {"sufficiency_omega1", "sufficiency_omega2", "sufficiency_omega3", "sufficiency_omega4",
          "sufficiency_omega5", "sufficiency_omega6", "sufficiency_omega7", "sufficiency_omega8",
          "sufficiency_omega9", "sufficiency_omega7_sigma", "sufficiency_omega7_rho",
          "sufficiency_omega8_sigma"}},
        {8,
         "computed obstruction spans match the stated condition lists",
         {"span_sigma_x2yz", "span_sigma_x2y2", "span_rho_z4", "span_rho_yz3", "span_rho_y2z2"}},
        {9,
         "infeasible divisors and one-violated-condition sampling",
         {"infeasible_sigma_x4", "infeasible_sigma_x3y", "infeasible_rho_y4",
          "infeasible_rho_y3z", "necessity_sigma_x2yz", "necessity_sigma_x2y2",
          "necessity_rho_z4", "necessity_rho_yz3", "necessity_rho_y2z2", "necessity_tau_x4",
          "necessity_psi_z8"}},
        {10,
         "invariant families make phi* omega wedge omega vanish identically",
         {"invariant_sigma_plus", "invariant_sigma_minus", "invariant_sigma_separated",
          "invariant_sigma_displayed_pullbacks", "invariant_rho_family1", "invariant_rho_family2",
          "invariant_rho_family3", "invariant_rho_family4", "invariant_rho_family5",
          "invariant_tau_family1", "invariant_tau_family2"}},
        {11,
         "transversal structure certificates",
         {"riccati_triplet", "omega3_triplet", "eta_prime_closed", "omega8_closed",
          "sigma_eta_factor"}},
        {12,
         "degree-sequence diagrams",
         {"degseq_rho", "degseq_tau", "degseq_psi", "degseq_xi_s1", "degseq_xi_s2"}},
        {13,
         "singularity structure of the one-singularity models",
         {"singularities_Omega1", "singularities_Omega2", "singularities_Omega3",
          "singularities_Omega4", "radial_detection"}},
        {14, "tau-orbit sampling never drops Omega4 to degree 2", {"tau_orbit_Omega4"}},
    };
    return list;
}

}  // namespace

int main() {
    SuiteReport report = run_suite("", kDefaultSeed);

    std::map<std::string, const CheckResult*> by_id;
    for (const auto& c : report.checks) by_id[c.id] = &c;

    std::set<std::string> grouped;
    for (const auto& crit : criteria())
        for (const auto& id : crit.check_ids) grouped.insert(id);

    int failed_criteria = 0;
    long total_ms = 0;
    for (const auto& crit : criteria()) {
        bool ok = true;
        long ms = 0;
        std::vector<std::string> failing;
        for (const auto& id : crit.check_ids) {
            auto it = by_id.find(id);
            if (it == by_id.end()) {
                ok = false;
                failing.push_back(id + " (missing)");
                continue;
            }
            ms += it->second->elapsed_ms;
            if (it->second->status == "fail") {
                ok = false;
                failing.push_back(id);
            }
        }
        total_ms += ms;
        std::printf("criterion %2d: %s  [%4ld ms] %s\n", crit.number, ok ? "PASS" : "FAIL", ms,
                    crit.title.c_str());
        for (const auto& id : failing) {
            std::printf("              failing check: %s\n", id.c_str());
            auto it = by_id.find(id);
            if (it != by_id.end() && !it->second->details.empty())
                std::printf("              %s\n", it->second->details.c_str());
        }
        if (!ok) ++failed_criteria;
    }

    bool registry_consistent = true;
    for (const auto& c : report.checks) {
        if (!grouped.count(c.id)) {
            std::printf("ungrouped check: %s\n", c.id.c_str());
            registry_consistent = false;
        }
    }

    std::printf("----\n%d of %zu criteria pass, %d fail; %d checks (%d pass, %d evidence, %d "
                "fail), %ld ms total\n",
                (int)criteria().size() - failed_criteria, criteria().size(), failed_criteria,
                (int)report.checks.size(), report.pass_count, report.evidence_count,
                report.fail_count, total_ms);
    if (failed_criteria > 0)
        std::printf("note: the stated rho degree diagram asks for an intermediate degree this "
                    "factorization cannot attain; see the failing check's details\n");
    return (failed_criteria == 0 && registry_consistent) ? 0 : 1;
}
