#include "fkts/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <utility>

namespace fkts {

const char* to_string(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::skipped:
        return "skipped";
    }
    return "?";
}

void VerificationReport::pass(std::string id, std::string detail)
{
    entries_.push_back({std::move(id), Status::pass, std::nullopt, std::move(detail)});
}

void VerificationReport::fail(std::string id, std::string witness, std::string detail)
{
    entries_.push_back({std::move(id), Status::fail, std::move(witness), std::move(detail)});
}

void VerificationReport::skip(std::string id, std::string reason)
{
    entries_.push_back({std::move(id), Status::skipped, std::nullopt, std::move(reason)});
}

void VerificationReport::check(bool ok, std::string id, std::string detail, std::string witness)
{
    if (ok)
        pass(std::move(id), std::move(detail));
    else
        fail(std::move(id), std::move(witness), std::move(detail));
}

void VerificationReport::append_entry(ReportEntry e)
{
    entries_.push_back(std::move(e));
}

void VerificationReport::append(const VerificationReport& other)
{
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

std::size_t VerificationReport::count(Status s) const
{
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [s](const ReportEntry& e) { return e.status == s; }));
}

namespace {

bool matches(const std::string& entry_id, const std::string& id)
{
    if (entry_id == id)
        return true;
    if (entry_id.size() <= id.size() || entry_id.compare(0, id.size(), id) != 0)
        return false;
    const char next = entry_id[id.size()];
    return next == '[' || (next == '.' && entry_id.size() > id.size() + 1 && entry_id[id.size() + 1] == '[');
}

}  // namespace

const ReportEntry* VerificationReport::find(const std::string& id) const
{
    for (const auto& e : entries_)
        if (matches(e.check_id, id))
            return &e;
    return nullptr;
}

bool VerificationReport::failed(const std::string& id) const
{
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const ReportEntry& e) { return matches(e.check_id, id) && e.status == Status::fail; });
}

bool VerificationReport::passed(const std::string& id) const
{
    bool seen = false;
    for (const auto& e : entries_) {
        if (!matches(e.check_id, id))
            continue;
        if (e.status != Status::pass)
            return false;
        seen = true;
    }
    return seen;
}

// ---------------------------------------------------------------------------

Sweep::Sweep(VerificationReport& report, std::string id, std::string detail)
    : report_(report), id_(std::move(id)), detail_(std::move(detail))
{
}

void Sweep::record(bool ok, const std::function<std::string()>& instance,
                   const std::function<std::string()>& witness)
{
    ++instances_;
    if (ok)
        return;
    ++failures_;
    report_.fail(id_ + ".[" + instance() + "]", witness(), detail_);
}

void Sweep::record(bool ok, const std::function<std::string()>& instance)
{
    record(ok, instance, [] { return std::string("nonzero residual"); });
}

void Sweep::finish()
{
    if (finished_)
        return;
    finished_ = true;
    if (failures_ == 0) {
        std::string d = std::to_string(instances_) + " instances";
        if (!detail_.empty())
            d += "; " + detail_;
        report_.pass(id_, d);
    }
}

// ---------------------------------------------------------------------------

std::string emit_text(const VerificationReport& r)
{
    std::ostringstream os;
    for (const auto& e : r.entries()) {
        os << to_string(e.status) << "  " << e.check_id;
        if (!e.detail.empty())
            os << "  -- " << e.detail;
        os << "\n";
        if (e.witness)
            os << "      witness: " << *e.witness << "\n";
    }
    os << "summary: " << r.count(Status::pass) << "/" << r.size() << " passed, " << r.count(Status::fail)
       << " failed, " << r.count(Status::skipped) << " skipped\n";
    return os.str();
}

std::string emit_json(const VerificationReport& r)
{
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& e : r.entries()) {
        nlohmann::ordered_json j;
        j["check_id"] = e.check_id;
        j["status"] = to_string(e.status);
        j["detail"] = e.detail;
        j["witness"] = e.witness ? nlohmann::ordered_json(*e.witness) : nlohmann::ordered_json(nullptr);
        entries.push_back(std::move(j));
    }
    nlohmann::ordered_json out;
    out["entries"] = std::move(entries);
    out["summary"] = {{"total", r.size()},
                      {"passed", r.count(Status::pass)},
                      {"failed", r.count(Status::fail)},
                      {"skipped", r.count(Status::skipped)}};
    return out.dump(2) + "\n";
}

}  // namespace fkts
