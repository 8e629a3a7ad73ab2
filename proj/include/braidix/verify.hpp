#pragma once

#include <string>
#include <vector>

namespace braidix::verify {

struct SuiteResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;  // first few failing checks, described
};

// Run the named property suite ("diagram", "seifert", "skein", "castle",
// "braidindex") or all of them ("all") over every .pd file in `corpus_dir`.
// Each suite checks the library's structural invariants and identities on
// the corpus diagrams; results carry pass/fail counts per suite.  Throws
// computation_error for an unknown suite name or an unusable corpus
// directory.
std::vector<SuiteResult> run_suites(const std::string& suite,
                                    const std::string& corpus_dir);

}  // namespace braidix::verify
