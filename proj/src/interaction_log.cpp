#include "dualrec/interaction_log.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace dualrec {

void EntityRegistry::add_user(UserId u) { users_.insert(u); }

void EntityRegistry::add_creator(CreatorId c) { creators_.insert(c); }

void EntityRegistry::add_item(ItemId i, CreatorId c, Day upload_day) {
    if (!creators_.count(c))
        throw IdentityError("unknown creator id " + std::to_string(c));
    auto [it, inserted] = items_.emplace(i, ItemInfo{c, upload_day});
    if (!inserted && it->second.creator_id != c)
        throw IdentityError("item " + std::to_string(i) +
                            " already registered to another creator");
}

CreatorId EntityRegistry::creator_of(ItemId i) const {
    auto it = items_.find(i);
    if (it == items_.end())
        throw IdentityError("unknown item id " + std::to_string(i));
    return it->second.creator_id;
}

Day EntityRegistry::upload_day(ItemId i) const {
    auto it = items_.find(i);
    if (it == items_.end())
        throw IdentityError("unknown item id " + std::to_string(i));
    return it->second.upload_day;
}

namespace {
template <typename Set, typename Id = typename Set::key_type>
std::vector<Id> sorted_keys(const Set& s) {
    std::vector<Id> out;
    out.reserve(s.size());
    for (const auto& k : s) out.push_back(k);
    std::sort(out.begin(), out.end());
    return out;
}
}  // namespace

std::vector<UserId> EntityRegistry::sorted_users() const { return sorted_keys(users_); }
std::vector<CreatorId> EntityRegistry::sorted_creators() const { return sorted_keys(creators_); }

std::vector<ItemId> EntityRegistry::sorted_items() const {
    std::vector<ItemId> out;
    out.reserve(items_.size());
    for (const auto& [id, info] : items_) out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
}

void InteractionLog::append(const InteractionRecord& rec) {
    if (!registry_->has_user(rec.user_id))
        throw IdentityError("unknown user id " + std::to_string(rec.user_id));
    if (!registry_->has_item(rec.item_id))
        throw IdentityError("unknown item id " + std::to_string(rec.item_id));
    if (registry_->upload_day(rec.item_id) > rec.day)
        throw IdentityError("item " + std::to_string(rec.item_id) +
                            " interacted with before its upload day");
    rec.feedback.validate();
    std::unique_lock lock(mutex_);
    if (!records_.empty() && records_.back().day > rec.day)
        throw IdentityError("records must be appended in non-decreasing day order");
    records_.push_back(rec);
}

std::size_t InteractionLog::size() const {
    std::shared_lock lock(mutex_);
    return records_.size();
}

std::vector<InteractionRecord> InteractionLog::snapshot() const {
    std::shared_lock lock(mutex_);
    return records_;
}

std::string record_to_json_line(const InteractionRecord& rec) {
    nlohmann::json fb = nlohmann::json::object();
    for (std::size_t m = 0; m < kNumChannels; ++m) {
        double v = rec.feedback.values[m];
        if (v == 0.0) continue;
        if (m < kNumBinaryChannels)
            fb[std::string(kChannelNames[m])] = 1;
        else
            fb[std::string(kChannelNames[m])] = v;
    }
    nlohmann::json j{{"user_id", rec.user_id},
                     {"item_id", rec.item_id},
                     {"day", rec.day},
                     {"feedback", fb},
                     {"exposed", rec.exposed}};
    return j.dump();
}

InteractionRecord record_from_json_line(const std::string& line, long line_number) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), line_number);
    }
    InteractionRecord rec;
    try {
        rec.user_id = j.at("user_id").get<UserId>();
        rec.item_id = j.at("item_id").get<ItemId>();
        rec.day = j.at("day").get<Day>();
        rec.exposed = j.at("exposed").get<bool>();
        for (auto& [name, value] : j.at("feedback").items())
            rec.feedback[channel_from_name(name)] = value.get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad record field: ") + e.what(), line_number);
    }
    return rec;
}

void write_log_jsonl(const InteractionLog& log, std::ostream& out) {
    log.for_each([&](const InteractionRecord& rec) {
        out << record_to_json_line(rec) << '\n';
    });
}

void read_log_jsonl(std::istream& in, InteractionLog& log) {
    std::string line;
    long line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        log.append(record_from_json_line(line, line_number));
    }
}

}  // namespace dualrec
