#include "gpa/report.hpp"

#include <sstream>

namespace gpa {

uint64_t fnv1a64(std::string_view bytes) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
    static const char* digits = "0123456789abcdef";
    uint64_t h = fnv1a64(bytes);
    std::string out(16, '0');
    for (size_t i = 16; i-- > 0; h >>= 4) out[i] = digits[h & 0xf];
    return out;
}

bool Report::ok() const {
    if (refused()) return false;
    for (const auto& c : checks_)
        if (!c.pass) return false;
    return true;
}

int Report::exit_code() const {
    if (refused()) return 2;
    return ok() ? 0 : 1;
}

std::string Report::text() const {
    std::ostringstream os;
    os << "== report ==\n";
    os << "command: " << command_ << "\n";
    for (const auto& [label, digest] : inputs_)
        os << "input: " << label << " fnv1a=" << digest << "\n";
    os << "seed: " << seed_ << "\n";
    for (const auto& [title, body] : sections_) {
        os << "\n[" << title << "]\n";
        os << body;
        if (!body.empty() && body.back() != '\n') os << "\n";
    }
    if (!warnings_.empty()) {
        os << "\n";
        for (const auto& w : warnings_) os << "warning: " << w << "\n";
    }
    if (!checks_.empty()) {
        os << "\n";
        for (const auto& c : checks_) {
            os << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL");
            if (!c.detail.empty()) os << " -- " << c.detail;
            os << "\n";
        }
    }
    os << "\n";
    if (refused()) {
        os << "refused: " << refusal_ << "\n";
        os << "verdict: REFUSED (exit 2)\n";
    } else if (ok()) {
        os << "verdict: PASS (exit 0)\n";
    } else {
        os << "verdict: FAIL (exit 1)\n";
    }
    return os.str();
}

std::string Report::structured() const {
    nlohmann::ordered_json j;
    j["command"] = command_;
    j["inputs"] = nlohmann::ordered_json::object();
    for (const auto& [label, digest] : inputs_) j["inputs"][label] = digest;
    j["seed"] = seed_;
    j["results"] = results_;
    j["warnings"] = warnings_;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        j["checks"].push_back(std::move(e));
    }
    if (refused()) j["refusal"] = refusal_;
    j["ok"] = ok();
    j["exit_code"] = exit_code();
    return j.dump(2) + "\n";
}

}  // namespace gpa
