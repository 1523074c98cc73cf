#pragma once

#include <string>
#include <utility>
#include <vector>

namespace yw {

/// Pass/fail with the names of failed checks.
struct Verdict {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string what)
    {
        ok = false;
        failures.push_back(std::move(what));
    }
    void require(bool cond, const std::string& what)
    {
        if (!cond) fail(what);
    }
    void merge(const Verdict& o, const std::string& prefix = "")
    {
        for (auto& f : o.failures) fail(prefix + f);
    }
};

}  // namespace yw
