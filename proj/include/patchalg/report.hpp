#pragma once

// Certificates and reports. Every check emits a certificate naming the law
// it verified, a pass flag, and machine-readable witness data; reports bundle
// certificates with the command and inputs that produced them. JSON
// throughout, with object keys sorted by the library, so reports are
// byte-stable under a fixed seed.

#include <string>
#include <vector>

#include <json.hpp>

namespace patchalg {

struct Certificate {
    std::string name;      ///< stable slug, e.g. "boolean.ideal-join-cover"
    std::string statement; ///< the law in words
    bool pass = false;
    nlohmann::json details = nlohmann::json::object();
};

inline nlohmann::json to_json(const Certificate& c) {
    return nlohmann::json{
        {"name", c.name}, {"statement", c.statement}, {"pass", c.pass}, {"details", c.details}};
}

struct Report {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    std::vector<Certificate> certificates;
    double timing_ms = 0.0;

    bool all_pass() const {
        for (const auto& c : certificates)
            if (!c.pass) return false;
        return true;
    }

    const Certificate* first_failure() const {
        for (const auto& c : certificates)
            if (!c.pass) return &c;
        return nullptr;
    }

    nlohmann::json to_json(bool include_timing = true) const {
        nlohmann::json certs = nlohmann::json::array();
        for (const auto& c : certificates) certs.push_back(patchalg::to_json(c));
        nlohmann::json out{
            {"command", command}, {"inputs", inputs}, {"certificates", certs},
            {"pass", all_pass()}};
        if (include_timing) out["timing_ms"] = timing_ms;
        return out;
    }
};

} // namespace patchalg
