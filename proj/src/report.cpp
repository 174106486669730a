#include "frobcheck/report.hpp"

#include <algorithm>

namespace frobcheck {

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Error: return "error";
    }
    return "unknown";
}

bool Report::all_pass() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const ReportEntry& e) { return e.status == Status::Pass; });
}

bool Report::has_fail() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const ReportEntry& e) { return e.status == Status::Fail; });
}

bool Report::has_error() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const ReportEntry& e) { return e.status == Status::Error; });
}

void Report::append(const Report& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

ReportEntry pass_entry(const std::string& suite, const std::string& check,
                       const std::string& location, const std::string& detail) {
    return ReportEntry{suite, check, location, Status::Pass, std::nullopt, detail};
}

ReportEntry error_entry(const std::string& suite, const std::string& check,
                        const std::string& location, const std::string& detail) {
    return ReportEntry{suite, check, location, Status::Error, std::nullopt, detail};
}

ReportEntry fail_entry(const std::string& suite, const std::string& check,
                       const std::string& location, const RatMatrix& lhs, const RatMatrix& rhs,
                       const std::string& detail) {
    Witness w{lhs, rhs, 0, 0};
    std::string extra = detail;
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        std::string shapes = "shape mismatch: " + std::to_string(lhs.rows()) + "x" +
                             std::to_string(lhs.cols()) + " vs " + std::to_string(rhs.rows()) +
                             "x" + std::to_string(rhs.cols());
        extra = extra.empty() ? shapes : extra + "; " + shapes;
    } else {
        RatMatrix::first_difference(lhs, rhs, w.row, w.col);
    }
    return ReportEntry{suite, check, location, Status::Fail, std::move(w), extra};
}

bool report_equation(Report& rep, const std::string& suite, const std::string& check,
                     const std::string& location, const RatMatrix& lhs, const RatMatrix& rhs,
                     const std::string& detail) {
    if (lhs == rhs) {
        rep.add(pass_entry(suite, check, location, detail));
        return true;
    }
    rep.add(fail_entry(suite, check, location, lhs, rhs, detail));
    return false;
}

}  // namespace frobcheck
