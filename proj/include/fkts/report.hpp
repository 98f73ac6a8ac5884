#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fkts {

enum class Status { pass, fail, skipped };

const char* to_string(Status s);

struct ReportEntry {
    std::string check_id;
    Status status = Status::pass;
    std::optional<std::string> witness;
    std::string detail;
};

/// Ordered list of named checks. Order is insertion order, which every
/// producer keeps deterministic.
class VerificationReport {
public:
    void pass(std::string id, std::string detail = {});
    void fail(std::string id, std::string witness, std::string detail = {});
    void skip(std::string id, std::string reason);
    /// Adds a pass or fail entry depending on `ok`.
    void check(bool ok, std::string id, std::string detail = {}, std::string witness = {});
    void append(const VerificationReport& other);
    void append_entry(ReportEntry e);

    const std::vector<ReportEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    std::size_t count(Status s) const;
    bool ok() const { return count(Status::fail) == 0; }

    /// First entry whose id equals `id` or starts with `id` followed by '[' or ".[".
    const ReportEntry* find(const std::string& id) const;
    /// True when some entry with this id (or instance of it) failed.
    bool failed(const std::string& id) const;
    /// True when the id (or any instance of it) is present and none failed or were skipped.
    bool passed(const std::string& id) const;

private:
    std::vector<ReportEntry> entries_;
};

/// Collects pass/fail over many instances of one identity. On destruction-free
/// `finish()`, emits a single pass entry (with the instance count) if nothing
/// failed; every failed instance is its own entry `id.[instance]`.
class Sweep {
public:
    Sweep(VerificationReport& report, std::string id, std::string detail = {});

    /// Records one instance. `witness` is only evaluated on failure.
    void record(bool ok, const std::function<std::string()>& instance, const std::function<std::string()>& witness);
    void record(bool ok, const std::function<std::string()>& instance);
    void finish();

    std::size_t instances() const { return instances_; }
    std::size_t failures() const { return failures_; }

private:
    VerificationReport& report_;
    std::string id_;
    std::string detail_;
    std::size_t instances_ = 0;
    std::size_t failures_ = 0;
    bool finished_ = false;
};

std::string emit_text(const VerificationReport& r);
std::string emit_json(const VerificationReport& r);

}  // namespace fkts
