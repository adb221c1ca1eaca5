#pragma once

#include <string>
#include <vector>

namespace hspace {

struct CheckEntry {
    std::string check;    // what was verified
    std::string witness;  // where it was verified (or where it broke)
    double residual = 0.0;
    bool pass = true;
};

/// Flat list of check results. Verifiers append one entry per finding;
/// suites merge many verifier reports and add summary entries.
class Report {
  public:
    void add(CheckEntry entry) { entries_.push_back(std::move(entry)); }

    void add_pass(std::string check, std::string witness = "", double residual = 0.0) {
        entries_.push_back({std::move(check), std::move(witness), residual, true});
    }

    void add_fail(std::string check, std::string witness, double residual = 0.0) {
        entries_.push_back({std::move(check), std::move(witness), residual, false});
    }

    void merge(const Report& other) {
        entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
    }

    const std::vector<CheckEntry>& entries() const { return entries_; }

    bool all_pass() const {
        for (const auto& e : entries_) {
            if (!e.pass) return false;
        }
        return true;
    }

    int failures() const {
        int n = 0;
        for (const auto& e : entries_) n += e.pass ? 0 : 1;
        return n;
    }
    bool empty() const { return entries_.empty(); }
    int size() const { return static_cast<int>(entries_.size()); }

  private:
    std::vector<CheckEntry> entries_;
};

}  // namespace hspace
