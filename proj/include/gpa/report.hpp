#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gpa {

/// 64-bit FNV-1a digest of a byte string, and its 16-hex-digit rendering.
uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

/// One named verification outcome inside a report.
struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Deterministic run report. Holds no clocks, addresses or environment
/// state, so two runs over identical inputs, flags and seed render
/// byte-identical text and structured output.
///
/// Exit-code contract: 0 when every check passed and nothing was refused,
/// 1 when some check failed (a formula/oracle mismatch), 2 when the run
/// was refused because the input does not meet a hypothesis.
class Report {
public:
    Report(std::string command, uint64_t seed)
        : command_(std::move(command)), seed_(seed) {}

    void add_input(const std::string& label, std::string_view bytes) {
        inputs_.emplace_back(label, fnv1a64_hex(bytes));
    }
    void warn(std::string msg) { warnings_.push_back(std::move(msg)); }
    void check(std::string name, bool pass, std::string detail = "") {
        checks_.push_back({std::move(name), pass, std::move(detail)});
    }
    void refuse(std::string why) { refusal_ = std::move(why); }
    /// Free-form text block shown between the header and the check lines.
    void section(std::string title, std::string body) {
        sections_.emplace_back(std::move(title), std::move(body));
    }
    /// Structured payload; commands mirror their sections into it.
    nlohmann::ordered_json& results() { return results_; }
    const nlohmann::ordered_json& results() const { return results_; }

    const std::string& command() const { return command_; }
    uint64_t seed() const { return seed_; }
    const std::vector<CheckLine>& checks() const { return checks_; }
    const std::vector<std::string>& warnings() const { return warnings_; }
    bool refused() const { return !refusal_.empty(); }
    const std::string& refusal() const { return refusal_; }

    bool ok() const;
    int exit_code() const;

    std::string text() const;
    std::string structured() const;

private:
    std::string command_;
    uint64_t seed_ = 0;
    std::vector<std::pair<std::string, std::string>> inputs_;
    std::vector<std::string> warnings_;
    std::vector<CheckLine> checks_;
    std::string refusal_;
    nlohmann::ordered_json results_ = nlohmann::ordered_json::object();
    std::vector<std::pair<std::string, std::string>> sections_;
};

}  // namespace gpa
