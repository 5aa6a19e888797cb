#pragma once
// Entity registry and the append-only interaction log every other module
// feeds from.

#include <iosfwd>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dualrec/errors.hpp"
#include "dualrec/feedback.hpp"
#include "dualrec/ids.hpp"

namespace dualrec {

struct ItemInfo {
    CreatorId creator_id;
    Day upload_day;
};

// Known users, creators, and items. Item -> creator is immutable after
// upload.
class EntityRegistry {
public:
    void add_user(UserId u);
    void add_creator(CreatorId c);
    void add_item(ItemId i, CreatorId c, Day upload_day);

    bool has_user(UserId u) const { return users_.count(u) > 0; }
    bool has_item(ItemId i) const { return items_.count(i) > 0; }
    bool has_creator(CreatorId c) const { return creators_.count(c) > 0; }

    CreatorId creator_of(ItemId i) const;
    Day upload_day(ItemId i) const;

    std::size_t user_count() const { return users_.size(); }
    std::size_t item_count() const { return items_.size(); }

    // Sorted id lists; iteration over these keeps downstream passes
    // deterministic.
    std::vector<UserId> sorted_users() const;
    std::vector<ItemId> sorted_items() const;
    std::vector<CreatorId> sorted_creators() const;

private:
    std::unordered_set<UserId> users_;
    std::unordered_set<CreatorId> creators_;
    std::unordered_map<ItemId, ItemInfo> items_;
};

struct InteractionRecord {
    UserId user_id;
    ItemId item_id;
    Day day;
    FeedbackVector feedback;
    bool exposed = true;
};

// Append-only, ordered by (day, insertion order). Appends are serialized;
// readers take snapshots and never see a half-applied record.
class InteractionLog {
public:
    explicit InteractionLog(const EntityRegistry* registry) : registry_(registry) {}

    const EntityRegistry& registry() const { return *registry_; }

    // Validates ids and day ordering, then appends.
    void append(const InteractionRecord& rec);

    std::size_t size() const;
    std::vector<InteractionRecord> snapshot() const;

    // Single-threaded visitation in log order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        std::shared_lock lock(mutex_);
        for (const auto& r : records_) fn(r);
    }

private:
    const EntityRegistry* registry_;
    std::vector<InteractionRecord> records_;
    mutable std::shared_mutex mutex_;
};

// JSON-lines round trip: one record per line with keys user_id, item_id,
// day, feedback (object of named channels; zero channels omitted), exposed.
void write_log_jsonl(const InteractionLog& log, std::ostream& out);
void read_log_jsonl(std::istream& in, InteractionLog& log);

InteractionRecord record_from_json_line(const std::string& line, long line_number);
std::string record_to_json_line(const InteractionRecord& rec);

}  // namespace dualrec
