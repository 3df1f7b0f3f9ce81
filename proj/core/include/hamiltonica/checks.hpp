#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hamiltonica/factors.hpp"
#include "hamiltonica/graph.hpp"
#include "hamiltonica/ham.hpp"

namespace hamiltonica {

// A named, runnable check of one machine-checkable claim, producing a
// machine-readable report with enough evidence to re-verify offline.
struct CheckReport {
    std::string check_id;
    nlohmann::ordered_json parameters;
    enum class Verdict { Pass, Fail, Skipped } verdict = Verdict::Pass;
    std::string skip_reason;  // Skipped only
    nlohmann::ordered_json evidence;
    double wall_time_s = 0.0;

    // Canonical JSON (wall time excluded so reports are byte-stable).
    nlohmann::ordered_json to_json() const;
};

// Human-readable statement of what a check verifies.
std::string claim_statement(const std::string& check_id);

// --- strip-cover-tail ---------------------------------------------------
// No path cover of P_3 [] P_n has (2,k) as an endpoint, k odd, with all
// endpoints confined to row 2 at columns >= k.  Verified by both cover
// engines; Pass iff both report zero.
CheckReport check_strip_cover_tail(int n, int k);
// Constraint builder shared with tests; vertex (row,col) = row*n + col-1,
// rows/cols 1-based as in the row-2 statements.
EndpointConstraint strip_tail_constraint(int n, int k);

// --- strip-cover-parity -------------------------------------------------
// No path cover of P_3 [] P_n has all endpoints in row 2, an odd column k
// endpoint with column k-1 not an endpoint, and below k the odd/even
// column pairs (i, i-1) agreeing on endpoint membership.  The check
// enumerates every consistent membership pattern for every odd k.
CheckReport check_strip_cover_parity(int n);
// One pattern instance: bits of `mask` drive the free membership choices
// below k (bit 0: column 1; bit j>0: tied pair (2j, 2j+1)).
long long strip_parity_pattern_count(int n, int k, unsigned mask,
                                     EndpointConstraint* out = nullptr);
int strip_parity_free_bits(int k);

// --- no-factor-product --------------------------------------------------
// For every connected graph G on <= max_n vertices lacking a path factor
// and every H in `h_factors`, G [] H has no spanning cycle.
CheckReport check_no_factor_product(int max_n, const std::vector<Graph>& h_factors,
                                    long long budget = 1'000'000'000);

// --- tree-family-nonham -------------------------------------------------
// The counterexample family: T_Delta [] P_m has no spanning cycle for each
// m in m_list (all <= 4*Delta-3); also re-checks the family's hypotheses
// (tree, degree census, path factor).  `graph_override` substitutes the
// tree under test (negative controls).
CheckReport check_tree_family_nonham(int delta, const std::vector<int>& m_list,
                                     long long budget = 1'000'000'000,
                                     bool skip_on_budget = false,
                                     const Graph* graph_override = nullptr);

// --- component-counts ---------------------------------------------------
// Deleting the spine columns (a,b,c) x P_m from T_Delta [] P_m leaves
// exactly 2*Delta-2 components of 3m vertices each.
CheckReport check_component_counts(int delta, int m);

// --- positive-side ------------------------------------------------------
// tree [] P_n is hamiltonian when tree has a path factor and n is even
// with n >= 4*max_degree - 2; the found cycle is certified.
CheckReport check_positive_side(const Graph& tree, int n,
                                long long budget = 1'000'000'000);

// --- tree-times-cycle ---------------------------------------------------
// For all trees T on <= max_tree_n vertices and each n in n_list, T [] C_n
// is hamiltonian exactly when max_degree(T) <= n.
CheckReport check_tree_times_cycle(int max_tree_n, const std::vector<int>& n_list,
                                   long long budget = 1'000'000'000);

enum class Profile { Quick, Full };

// The whole harness.  `threads` <= 0 reads HAMILTONICA_THREADS (default 1).
std::vector<CheckReport> run_all(Profile profile, int threads = 0);

// Summary table and exit code per the CLI contract
// (0 all pass, 1 any fail, 2 skipped without fail).
std::string summary_table(const std::vector<CheckReport>& reports);
int summary_exit_code(const std::vector<CheckReport>& reports);

// The 6-vertex double-star (two adjacent degree-3 centers, four leaves),
// the smallest tree with a path factor and max degree 3.
Graph double_star();

}  // namespace hamiltonica
