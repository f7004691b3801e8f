#pragma once

// End-to-end classification of sharp polynomials of one odd degree:
// enumerate supports, filter them through GF(2), GF(p) and exact rational
// elimination, keep strictly positive solutions.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "json.hpp"
#include "sharp/enumerate.hpp"
#include "sharp/modmat.hpp"
#include "sharp/poly.hpp"

namespace sharp {

struct ClassifyConfig {
    int degree = 1;
    std::uint32_t prime = 23;
    unsigned threads = 0;  // 0: hardware concurrency
    Filters filters;
    ModularStages stages;
    bool canonical_only = false;
    std::optional<std::filesystem::path> checkpoint;
    // Polled between chunks; returning true ends the run early with
    // complete = false.
    std::function<bool()> stop;
};

/// Throws std::invalid_argument (InvalidPrime for prime problems).
void validate(const ClassifyConfig& config);

struct SharpRecord {
    int degree = 0;
    TriPoly poly;
    std::vector<Monomial> support;  // terms other than x^d, y^d
    bool symmetric = false;
    bool affine_anomaly = false;
    bool canonical = false;
};

nlohmann::json to_json(const SharpRecord& r);

struct RunStats {
    std::uint64_t supports_enumerated = 0;
    std::uint64_t rejected_mod2 = 0;
    std::uint64_t rejected_modp = 0;
    std::uint64_t rejected_exact = 0;
    std::uint64_t rejected_positivity = 0;
    std::uint64_t found = 0;
    std::uint64_t chunks_total = 0;
    std::uint64_t chunks_resumed = 0;
    double wall_seconds = 0;

    RunStats& operator+=(const RunStats& o);
    bool counters_consistent() const {
        return rejected_mod2 + rejected_modp + rejected_exact + rejected_positivity + found == supports_enumerated;
    }
    /// Share of modular rejections made by the GF(2) stage (0 if none).
    double mod2_share() const;
};

nlohmann::json to_json(const RunStats& s);

struct ClassifyResult {
    std::vector<SharpRecord> records;
    RunStats stats;
    bool complete = true;
};

/// Records are closed under swapping x and y (or reduced to canonical
/// representatives with canonical_only) and sorted by term list; the output
/// does not depend on the thread count.
ClassifyResult classify_degree(const ClassifyConfig& config);

/// Brute force over every support: no pruning, no modular stages. Refuses
/// d > 9 unless forced.
std::vector<SharpRecord> oracle_classify(int d, bool force = false);

/// Canonical form and flags for a set of found polynomials; closes the set
/// under swapping, deduplicates and sorts.
std::vector<SharpRecord> finalize_records(int d, const std::vector<std::pair<TriPoly, bool>>& found,
                                          bool canonical_only);

using DegreeClassifier = std::function<std::vector<SharpRecord>(int)>;

/// N-th term (N = 1, 2, ...) counts sharp polynomials of degree 2N-3, swaps
/// counted separately; N = 1 is 0.
std::vector<std::uint64_t> sequence_terms(int max_d, const DegreeClassifier& classify);
std::vector<std::uint64_t> sequence_terms(int max_d);

/// Degrees whose only sharp polynomial up to swapping is the group invariant.
std::vector<int> uniqueness_degrees(int max_d, const DegreeClassifier& classify);
std::vector<int> uniqueness_degrees(int max_d);

struct FixtureSummary {
    int degree = 0;
    std::size_t listed = 0;
    std::size_t distinct_classes = 0;  // up to swapping x and y
    std::size_t symmetric = 0;
    std::size_t raw_count = 0;         // 2 * classes - symmetric
    std::vector<std::pair<std::size_t, std::size_t>> swap_duplicates;  // corpus indices
};

struct FixtureFailure {
    std::size_t index = 0;
    std::string polynomial;
    std::string reason;
};

struct FixtureReport {
    std::map<int, FixtureSummary> by_degree;
    std::vector<FixtureFailure> failures;

    bool all_sharp() const { return failures.empty(); }
};

FixtureReport verify_fixtures(const std::vector<TriPoly>& corpus);

/// Reads line-delimited polynomial documents. Throws ParseError.
std::vector<TriPoly> load_corpus(const std::filesystem::path& path);

}  // namespace sharp
