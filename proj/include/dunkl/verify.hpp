#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dunkl/generators.hpp"
#include "dunkl/operator.hpp"

namespace dunkl {

/// One verifiable relation of the algebra. The builder returns the list
/// of residual operators (left side minus right side, one per index
/// instance) for a given dimension; a relation holds when every residual
/// is zero. Entries with expect_nonzero are deliberate mismatches whose
/// residual must be provably nonzero.
struct IdentitySpec {
    std::string id;
    std::vector<int> dims;
    std::function<std::vector<Operator>(int)> residuals;
    bool expect_nonzero = false;
    bool oracle_fallback = true;
};

enum class CheckStatus { pass_syntactic, pass_oracle, fail };

std::string to_string(CheckStatus s);

struct ReportEntry {
    std::string id;
    int d = 0;
    CheckStatus status = CheckStatus::fail;
    /// Terms left unverified: 0 on any pass; for expect_nonzero entries the
    /// witnessed nonzero term count.
    std::size_t residual_terms = 0;
    /// Terms remaining after syntactic cancellation alone.
    std::size_t syntactic_terms = 0;
    std::int64_t millis = 0;
    bool expected_nonzero = false;

    bool passed() const { return status != CheckStatus::fail; }
};

struct VerificationReport {
    std::string suite;
    std::vector<int> dims;
    std::uint64_t seed = 0;
    std::string version;
    std::vector<ReportEntry> entries;

    bool all_pass() const;
};

/// The full relation catalog, in registration order.
const std::vector<IdentitySpec>& identity_catalog();

/// Runs one catalog entry at one dimension. Residual zero gives
/// pass-syntactic; otherwise the function-space oracle decides on seeded
/// random test functions.
ReportEntry run_identity(const IdentitySpec& spec, int d, std::uint64_t seed);

/// Runs every catalog entry matching the id prefix, for each requested
/// dimension in the entry's dimension list. Entries run in parallel;
/// the report order is sorted by (id, d) regardless of scheduling.
/// An unknown filter prefix is a usage error. With inject_failure a
/// deliberately corrupted relation is appended (test fixture).
VerificationReport run_suite(const std::vector<int>& dims, std::uint64_t seed,
                             const std::string& filter = "", bool parallel = true,
                             bool inject_failure = false);

/// True iff apply(x, f) is exactly zero for n seeded random functions.
bool oracle_check(const Operator& x, int n, std::uint64_t seed);

/// Random monomial triples must associate exactly.
ReportEntry associativity_fuzz(int d, int trials, std::uint64_t seed);

/// The mu -> 0, d = 3 reduction subset of the catalog.
VerificationReport reduction_check(std::uint64_t seed = 0);

std::string to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

}  // namespace dunkl
