#include "yangian/report.hpp"

#include <chrono>

#include "yangian/errors.hpp"

namespace yangian {

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    case CheckStatus::Error:
        return "error";
    }
    return "error";
}

CheckRecord run_check(std::string name, const std::function<Outcome()>& body)
{
    CheckRecord rec;
    rec.name = std::move(name);
    const auto start = std::chrono::steady_clock::now();
    try {
        Outcome o = body();
        rec.status = o.passed ? CheckStatus::Pass : CheckStatus::Fail;
        rec.detail = std::move(o.detail);
        if (!o.passed)
            rec.residual = o.residual.empty() ? "nonzero residual" : std::move(o.residual);
    } catch (const Error& e) {
        rec.status = CheckStatus::Error;
        rec.residual = e.what();
    }
    rec.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

bool all_passed(const std::vector<CheckRecord>& records)
{
    for (const auto& r : records) {
        if (r.status != CheckStatus::Pass)
            return false;
    }
    return true;
}

void Tally::add(bool ok, const std::string& what, const std::string& residual)
{
    ++count_;
    if (ok)
        return;
    if (failures_++ == 0)
        first_ = what + ": " + residual;
}

Outcome Tally::outcome(const std::string& noun) const
{
    Outcome o;
    o.passed = failures_ == 0;
    o.detail = std::to_string(count_) + " " + noun;
    if (failures_ > 0) {
        o.detail += ", " + std::to_string(failures_) + " failing";
        o.residual = first_;
    }
    return o;
}

} // namespace yangian
