#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhowe/partitions.hpp"

namespace qhowe {

/// One row of a decomposition table: an irreducible label with its
/// dimension data and its (integer) contribution to the ambient dimension.
struct DimensionRow {
    StrictPartition lambda;
    long dim_left = 0;        // dim U^lambda on the first factor
    long dim_right = 0;       // dim T^lambda or dim U^lambda on the second factor
    int delta_exponent = 0;   // contribution carries weight 2^{-delta}
    long contribution = 0;    // 2^{-delta} * dim_left * dim_right, an integer
};

/// Structured pass/fail record of one duality or identity check.
struct VerificationReport {
    std::string check_name;
    std::map<std::string, std::string> parameters;
    bool verified = true;
    std::vector<DimensionRow> dimension_table;
    std::string detail;       // first counterexample when failed
    long elapsed_ms = 0;

    void fail(const std::string& why) {
        if (verified) detail = why;
        verified = false;
    }
    void require(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }

    std::string status() const { return verified ? "verified" : "failed"; }

    std::string to_text() const;
    std::string to_json() const;
    std::string to_csv_row() const;
    static std::string csv_header();
};

/// Common knobs for the verifier family.  `tamper` perturbs a single
/// operator entry by +1 before checking; a verifier run under tampering
/// must fail (negative control).
struct VerifyOptions {
    bool tamper = false;
};

} // namespace qhowe
