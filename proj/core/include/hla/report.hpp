#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hla {

/// First failing basis tuple of a check, with both evaluated sides in
/// canonical text form. The strings carry no spaces so they can be embedded
/// in record output verbatim.
struct Counterexample {
    std::vector<std::size_t> indices;
    std::string at;   // e.g. "(e,f)" using basis labels
    std::string lhs;  // e.g. "(0,0,6)" or "[[1,0],[0,1]]"
    std::string rhs;
};

struct CheckEntry {
    std::string name;
    bool pass = true;
    std::optional<Counterexample> cex;
};

/// Ordered list of named checks; a failed entry carries a re-evaluable
/// counterexample.
class CheckReport {
public:
    void add_pass(std::string name) { entries_.push_back({std::move(name), true, std::nullopt}); }
    void add_fail(std::string name, Counterexample cex) {
        entries_.push_back({std::move(name), false, std::move(cex)});
    }
    void add(CheckEntry e) { entries_.push_back(std::move(e)); }
    void append(const CheckReport& other) {
        for (const auto& e : other.entries_) entries_.push_back(e);
    }

    bool all_pass() const {
        for (const auto& e : entries_)
            if (!e.pass) return false;
        return true;
    }

    const std::vector<CheckEntry>& entries() const { return entries_; }

    const CheckEntry* find(std::string_view name) const {
        for (const auto& e : entries_)
            if (e.name == name) return &e;
        return nullptr;
    }

    bool passed(std::string_view name) const {
        const CheckEntry* e = find(name);
        return e != nullptr && e->pass;
    }

private:
    std::vector<CheckEntry> entries_;
};

}  // namespace hla
