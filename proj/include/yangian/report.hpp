#pragma once

#include <functional>
#include <string>
#include <vector>

namespace yangian {

enum class CheckStatus { Pass, Fail, Error };

std::string to_string(CheckStatus s);

struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    /// Offending residual; empty when the check passed.
    std::string residual;
    double seconds = 0;
};

struct Outcome {
    bool passed = true;
    std::string detail;
    std::string residual;
};

/// Runs body and times it. A yangian::Error escaping body turns into an
/// errored record carrying the message.
CheckRecord run_check(std::string name, const std::function<Outcome()>& body);

bool all_passed(const std::vector<CheckRecord>& records);

/// Collects the first failure of a family of sub-checks.
class Tally {
public:
    void add(bool ok, const std::string& what, const std::string& residual);
    Outcome outcome(const std::string& noun) const;
    int count() const { return count_; }
    int failures() const { return failures_; }

private:
    int count_ = 0;
    int failures_ = 0;
    std::string first_;
};

} // namespace yangian
