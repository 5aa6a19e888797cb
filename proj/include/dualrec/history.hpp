#pragma once
// Positive-interaction histories: for each user the distinct items they
// engaged with, and the mirror view for each item. Both sides are kept in
// lockstep so the symmetry invariant (u in users_of(i) iff i in items_of(u))
// holds even under the recency cap.

#include <cstddef>
#include <deque>
#include <unordered_map>
#include <vector>

#include "dualrec/ids.hpp"
#include "dualrec/interaction_log.hpp"

namespace dualrec {

inline constexpr std::size_t kDefaultHistoryCap = 200;

// Membership change caused by applying a record: the new pair plus any
// pairs evicted to stay under the cap. Events are ordered (evictions first)
// so downstream co-occurrence state can replay them exactly.
struct PairEvent {
    enum class Kind { Added, Removed };
    Kind kind;
    UserId user;
    ItemId item;
};

class PositiveHistory {
public:
    explicit PositiveHistory(std::size_t cap = kDefaultHistoryCap) : cap_(cap) {}

    // Applies one log record; non-positive or already-known pairs are no-ops
    // (empty event list).
    std::vector<PairEvent> apply(const InteractionRecord& rec);

    // First-seen order, oldest first. Empty for cold or unknown entities.
    std::vector<ItemId> items_of(UserId u) const;
    std::vector<UserId> users_of(ItemId i) const;

    std::size_t item_count_of(UserId u) const;
    std::size_t user_count_of(ItemId i) const;

    bool contains(UserId u, ItemId i) const;

    std::size_t cap() const { return cap_; }

    static PositiveHistory from_log(const InteractionLog& log,
                                    std::size_t cap = kDefaultHistoryCap);

private:
    void evict_oldest_item(UserId u);
    void evict_oldest_user(ItemId i);

    std::size_t cap_;
    std::unordered_map<UserId, std::deque<ItemId>> by_user_;
    std::unordered_map<ItemId, std::deque<UserId>> by_item_;
};

}  // namespace dualrec
