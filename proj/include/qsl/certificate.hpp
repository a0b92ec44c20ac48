#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace qsl {

inline constexpr const char* kToolkitVersion = "0.1.0";

// PASS: every evidence record within its stated tolerance.
// FAIL: at least one evidence record out of tolerance.
// REPORTED: informational evidence outside the hypotheses of the claim being
// tracked (small-size searches, derived-polynomial findings); never fails a
// run.
enum class Status { PASS, FAIL, REPORTED };

std::string status_name(Status s);

struct Certificate {
    std::string claim_id;
    std::string statement;           // self-contained description of the claim
    nlohmann::json parameters;       // object: ranges, tolerances, inputs
    Status status = Status::FAIL;
    nlohmann::json evidence;         // array of records
    std::string toolkit_version = kToolkitVersion;
    std::string timestamp;           // ISO 8601 UTC, set at construction

    nlohmann::json to_json() const;
};

// Fresh certificate with version and timestamp filled in.
Certificate make_certificate(const std::string& claim_id, const std::string& statement);

// Serializes the array to `path` (indent 2); io_error on failure.
void write_certificates(const std::string& path, const std::vector<Certificate>& certs);

// True when no certificate carries FAIL (REPORTED never fails a run).
bool all_passed(const std::vector<Certificate>& certs);

std::string iso8601_utc_now();

}  // namespace qsl
