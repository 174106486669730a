#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobcheck/matrix.hpp"

namespace frobcheck {

enum class Status { Pass, Fail, Error };

std::string status_name(Status s);

// Both sides of a failed equation plus the first differing entry.
struct Witness {
    RatMatrix lhs;
    RatMatrix rhs;
    size_t row = 0;
    size_t col = 0;
};

struct ReportEntry {
    std::string suite;
    std::string check;
    std::string location;  // object tuple, morphism labels, or relation column
    Status status = Status::Pass;
    std::optional<Witness> witness;
    std::string detail;
};

struct Report {
    std::vector<ReportEntry> entries;

    bool all_pass() const;
    bool has_fail() const;
    bool has_error() const;
    void add(ReportEntry e) { entries.push_back(std::move(e)); }
    void append(const Report& other);
};

ReportEntry pass_entry(const std::string& suite, const std::string& check,
                       const std::string& location, const std::string& detail = "");
ReportEntry error_entry(const std::string& suite, const std::string& check,
                        const std::string& location, const std::string& detail);
ReportEntry fail_entry(const std::string& suite, const std::string& check,
                       const std::string& location, const RatMatrix& lhs, const RatMatrix& rhs,
                       const std::string& detail = "");

// Appends a pass entry when lhs = rhs, otherwise a fail entry carrying both
// sides and the first differing coordinate. Returns true on pass.
bool report_equation(Report& rep, const std::string& suite, const std::string& check,
                     const std::string& location, const RatMatrix& lhs, const RatMatrix& rhs,
                     const std::string& detail = "");

}  // namespace frobcheck
