#pragma once
// Multi-channel feedback attached to every exposure. Six binary channels plus
// watch time; the channel list is fixed system-wide.

#include <array>
#include <cstddef>
#include <string_view>

#include "dualrec/errors.hpp"

namespace dualrec {

enum class Channel : std::size_t {
    Like = 0,
    Comment,
    Follow,
    Share,
    ProfileVisit,
    EffectiveView,
    WatchTime,
};

inline constexpr std::size_t kNumChannels = 7;
inline constexpr std::size_t kNumBinaryChannels = 6;

inline constexpr std::array<std::string_view, kNumChannels> kChannelNames = {
    "like",   "comment",       "follow",     "share",
    "profile_visit", "effective_view", "watch_time"};

// Channels whose counts creators can see on their items. Watch time is
// invisible to creators and effective views are treated as implicit.
inline constexpr std::array<Channel, 5> kCreatorVisibleChannels = {
    Channel::Like, Channel::Comment, Channel::Follow, Channel::Share,
    Channel::ProfileVisit};

struct FeedbackVector {
    // Binary channels hold 0/1; watch_time holds non-negative seconds.
    std::array<double, kNumChannels> values{};

    double& operator[](Channel c) { return values[static_cast<std::size_t>(c)]; }
    double operator[](Channel c) const { return values[static_cast<std::size_t>(c)]; }

    double watch_time() const { return (*this)[Channel::WatchTime]; }

    // Positive means any binary channel fired. Watch time alone never counts:
    // creators cannot observe it, and positives feed the creator-side
    // histories.
    bool is_positive() const {
        for (std::size_t m = 0; m < kNumBinaryChannels; ++m)
            if (values[m] != 0.0) return true;
        return false;
    }

    void validate() const {
        for (std::size_t m = 0; m < kNumBinaryChannels; ++m)
            if (values[m] != 0.0 && values[m] != 1.0)
                throw ShapeError("binary feedback channel must be 0 or 1");
        if (watch_time() < 0.0)
            throw ShapeError("watch_time must be non-negative");
    }
};

inline Channel channel_from_name(std::string_view name) {
    for (std::size_t m = 0; m < kNumChannels; ++m)
        if (kChannelNames[m] == name) return static_cast<Channel>(m);
    throw ParseError("unknown feedback channel: " + std::string(name));
}

}  // namespace dualrec
