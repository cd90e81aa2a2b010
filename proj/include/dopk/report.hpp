#ifndef DOPK_REPORT_HPP
#define DOPK_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "dopk/scalar.hpp"

namespace dopk {

struct ReportClause {
    std::string clause;
    std::string max_residual = "0";
    bool pass = true;
    std::vector<std::string> violations; // first few failing locations
};

/// Outcome of a verification run: one residual per checked clause, plus
/// free-form details (resolved constants, skipped-case counts).
class VerificationReport {
public:
    explicit VerificationReport(std::string name) : name_(std::move(name)) {}

    void add_clause(ReportClause c) { clauses_.push_back(std::move(c)); }
    void add_detail(const std::string& key, const std::string& value) { details_[key] = value; }

    const std::string& name() const { return name_; }
    const std::vector<ReportClause>& clauses() const { return clauses_; }
    const std::map<std::string, std::string>& details() const { return details_; }

    bool pass() const {
        for (const ReportClause& c : clauses_)
            if (!c.pass) return false;
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json clauses = nlohmann::json::array();
        for (const ReportClause& c : clauses_) {
            nlohmann::json jc = {{"clause", c.clause},
                                 {"max_residual", c.max_residual},
                                 {"pass", c.pass}};
            if (!c.violations.empty()) jc["violations"] = c.violations;
            clauses.push_back(std::move(jc));
        }
        nlohmann::json j = {{"report", name_}, {"pass", pass()}, {"clauses", std::move(clauses)}};
        if (!details_.empty()) j["details"] = details_;
        return j;
    }

    std::string to_csv() const {
        std::string out = "clause,max_residual,pass\n";
        for (const ReportClause& c : clauses_) {
            out += "\"" + c.clause + "\"," + c.max_residual + "," + (c.pass ? "true" : "false") + "\n";
        }
        return out;
    }

private:
    std::string name_;
    std::vector<ReportClause> clauses_;
    std::map<std::string, std::string> details_;
};

/// Accumulates the worst residual of one clause across many comparisons.
template <ScalarField T>
class ClauseTracker {
public:
    explicit ClauseTracker(std::string name) { clause_.clause = std::move(name); }

    void check_exact(const T& lhs, const T& rhs, const std::string& where) {
        record(abs(lhs - rhs), (lhs == rhs), where);
    }

    void check_tol(const T& lhs, const T& rhs, const T& tol, const std::string& where) {
        const T resid = abs(lhs - rhs);
        T scale{1};
        if (scale < abs(lhs)) scale = abs(lhs);
        if (scale < abs(rhs)) scale = abs(rhs);
        record(resid, !(tol * scale < resid), where);
    }

    void check_that(bool ok, const std::string& where) {
        if (!ok) {
            clause_.pass = false;
            if (clause_.violations.size() < kMaxViolations) clause_.violations.push_back(where);
        }
    }

    const T& max_residual() const { return max_; }
    bool pass() const { return clause_.pass; }

    ReportClause finish() {
        clause_.max_residual = scalar_traits<T>::to_string(max_);
        return clause_;
    }

private:
    static constexpr std::size_t kMaxViolations = 8;

    void record(const T& resid, bool ok, const std::string& where) {
        if (max_ < resid) max_ = resid;
        if (!ok) {
            clause_.pass = false;
            if (clause_.violations.size() < kMaxViolations) clause_.violations.push_back(where);
        }
    }

    ReportClause clause_;
    T max_{};
};

} // namespace dopk

#endif // DOPK_REPORT_HPP
