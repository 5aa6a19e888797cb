#include "dualrec/history.hpp"

#include <algorithm>

namespace dualrec {

void PositiveHistory::apply(const InteractionRecord& rec) {
    if (!rec.feedback.is_positive()) return;
    auto& items = by_user_[rec.user_id];
    if (std::find(items.begin(), items.end(), rec.item_id) != items.end())
        return;  // distinct entries only; first positive wins
    if (items.size() >= cap_) evict_oldest_item(rec.user_id);
    auto& users = by_item_[rec.item_id];
    if (users.size() >= cap_) evict_oldest_user(rec.item_id);
    by_user_[rec.user_id].push_back(rec.item_id);
    by_item_[rec.item_id].push_back(rec.user_id);
}

void PositiveHistory::evict_oldest_item(UserId u) {
    auto& items = by_user_[u];
    ItemId victim = items.front();
    items.pop_front();
    // Drop the mirrored entry too; symmetry survives eviction.
    auto& users = by_item_[victim];
    users.erase(std::remove(users.begin(), users.end(), u), users.end());
}

void PositiveHistory::evict_oldest_user(ItemId i) {
    auto& users = by_item_[i];
    UserId victim = users.front();
    users.pop_front();
    auto& items = by_user_[victim];
    items.erase(std::remove(items.begin(), items.end(), i), items.end());
}

std::vector<ItemId> PositiveHistory::items_of(UserId u) const {
    auto it = by_user_.find(u);
    if (it == by_user_.end()) return {};
    return {it->second.begin(), it->second.end()};
}

std::vector<UserId> PositiveHistory::users_of(ItemId i) const {
    auto it = by_item_.find(i);
    if (it == by_item_.end()) return {};
    return {it->second.begin(), it->second.end()};
}

std::size_t PositiveHistory::item_count_of(UserId u) const {
    auto it = by_user_.find(u);
    return it == by_user_.end() ? 0 : it->second.size();
}

std::size_t PositiveHistory::user_count_of(ItemId i) const {
    auto it = by_item_.find(i);
    return it == by_item_.end() ? 0 : it->second.size();
}

bool PositiveHistory::contains(UserId u, ItemId i) const {
    auto it = by_user_.find(u);
    if (it == by_user_.end()) return false;
    return std::find(it->second.begin(), it->second.end(), i) != it->second.end();
}

PositiveHistory PositiveHistory::from_log(const InteractionLog& log, std::size_t cap) {
    PositiveHistory h(cap);
    log.for_each([&](const InteractionRecord& rec) { h.apply(rec); });
    return h;
}

}  // namespace dualrec
