#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "theta/liealg.hpp"
#include "theta/report.hpp"
#include "theta/satake.hpp"

namespace theta {

struct VerifyOptions {
    std::uint64_t seed = 42;
    std::uint64_t cap = kDefaultCap;
    std::vector<int> primes{5, 7, 11};
    int samples = 100;        // random elements per realization and prime
    int max_rank = 8;         // catalog-driven suites
    int lie_max_rank = 4;     // centdim suite
    unsigned threads = 0;     // 0: hardware concurrency
};

struct CaseResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CaseResult> cases;  // sorted by name
    double seconds = 0;
    std::size_t failures() const;
    bool ok() const { return failures() == 0; }
};

const std::vector<std::string>& suite_names();
// Throws UnknownLabelError for an unknown suite.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts = {});
std::string suite_to_json(const SuiteResult& r, int indent = 2);
std::string suite_to_text(const SuiteResult& r);

// Component count predicted by the closing classification of non-irreducible
// classes, read off the class label alone.
int proposition_count(const InvolutionClassEntry& entry);

// Lie-algebra realizations of catalog classes: inner ones Ad(mu(-1)) for the
// fundamental coweights in inner_realization_specs, plus the Chevalley involution.
struct RealizedPair {
    std::string name;  // "D4 DIII [mu=w4]"
    CartanType type;
    std::string label;  // catalog class realized
    SymmetricPairRealization pair;
};
std::vector<RealizedPair> realized_pairs(CartanType type, int p);

}  // namespace theta
