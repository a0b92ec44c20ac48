#include "qsl/certificate.hpp"

#include <ctime>
#include <fstream>

#include "qsl/errors.hpp"

namespace qsl {

std::string status_name(Status s) {
    switch (s) {
        case Status::PASS:
            return "PASS";
        case Status::FAIL:
            return "FAIL";
        default:
            return "REPORTED";
    }
}

std::string iso8601_utc_now() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

nlohmann::json Certificate::to_json() const {
    return nlohmann::json{{"claim_id", claim_id},
                          {"statement", statement},
                          {"parameters", parameters},
                          {"status", status_name(status)},
                          {"evidence", evidence},
                          {"toolkit_version", toolkit_version},
                          {"timestamp", timestamp}};
}

Certificate make_certificate(const std::string& claim_id, const std::string& statement) {
    Certificate c;
    c.claim_id = claim_id;
    c.statement = statement;
    c.parameters = nlohmann::json::object();
    c.evidence = nlohmann::json::array();
    c.timestamp = iso8601_utc_now();
    return c;
}

void write_certificates(const std::string& path, const std::vector<Certificate>& certs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : certs) arr.push_back(c.to_json());
    std::ofstream out(path);
    if (!out) throw io_error("cannot open certificate output file: " + path);
    out << arr.dump(2) << "\n";
    if (!out) throw io_error("failed writing certificates to: " + path);
}

bool all_passed(const std::vector<Certificate>& certs) {
    for (const auto& c : certs)
        if (c.status == Status::FAIL) return false;
    return true;
}

}  // namespace qsl
