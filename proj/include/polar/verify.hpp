#pragma once

// Verification suites shared by the command line tool and the acceptance run.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace polar {

struct VerifyOptions {
    std::size_t max_size = 2000;      // largest enumerated instance
    std::size_t axiom_cap = 1000;     // largest instance given the O(N^3) axiom check
    std::size_t search_cap = 500;     // largest instance searched exhaustively
    std::uint64_t seed = 1;
    std::optional<std::filesystem::path> cache_dir;
    bool inject_fault = false;        // corrupt one table to exercise failure reporting
};

struct SuiteReport {
    std::string name;
    long checks = 0;
    long skipped = 0;
    std::vector<std::string> failures;
    double seconds = 0;

    bool ok() const { return failures.empty(); }
};

// Eigenvalue tables: six families, n <= 8, q in {2,3,4,5}.
SuiteReport verify_tables(const VerifyOptions& options);
// Both Q-number identities.
SuiteReport verify_identities(const VerifyOptions& options);
// Enumerated spaces against the closed forms.
SuiteReport verify_oracle(const VerifyOptions& options);
// Bipartite halves of D_3 and D_4 over GF(2).
SuiteReport verify_halves(const VerifyOptions& options);
// Steiner classification over n <= 12 and the sampled q.
SuiteReport verify_steiner(const VerifyOptions& options);
// Exponential bounds on alpha, beta and the product inequalities.
SuiteReport verify_lemma(const VerifyOptions& options);
// LP optima, certificates and searched codes.
SuiteReport verify_lp(const VerifyOptions& options);
// The rank-metric embedding of matrix spaces.
SuiteReport verify_rank_map(const VerifyOptions& options);

std::vector<std::string> suite_names();
// Throws std::invalid_argument for an unknown name; "all" is not a suite.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options);

}  // namespace polar
