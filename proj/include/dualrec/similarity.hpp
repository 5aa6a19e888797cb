#pragma once
// User-user and item-item similarity services. CF similarity is cosine over
// binary incidence vectors derived from positive histories; item similarity
// can additionally fall back to content-embedding cosine so cold items are
// servable. The same built service answers user-side and creator-side
// queries.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dualrec/errors.hpp"
#include "dualrec/history.hpp"
#include "dualrec/ids.hpp"

namespace dualrec {

enum class EntityKind { User, Item };

struct Neighbor {
    std::int64_t id;
    double score;
};

inline constexpr std::size_t kDefaultKSim = 50;

// Immutable once built; scores non-increasing, ties by ascending id, no
// self-neighbors, at most k_sim entries per list.
class SimilarityIndex {
public:
    SimilarityIndex(EntityKind kind, std::size_t k_sim)
        : kind_(kind), k_sim_(k_sim) {}

    EntityKind kind() const { return kind_; }
    std::size_t k_sim() const { return k_sim_; }

    // Sorted candidates in, truncated list stored.
    void set_list(std::int64_t id, std::vector<Neighbor> sorted_neighbors);

    const std::vector<Neighbor>& neighbors(std::int64_t id) const;
    std::vector<Neighbor> top(std::int64_t id, std::size_t k) const;

    std::vector<std::int64_t> sorted_entity_ids() const;

private:
    EntityKind kind_;
    std::size_t k_sim_;
    std::unordered_map<std::int64_t, std::vector<Neighbor>> lists_;
};

// Sorts by score descending then id ascending and truncates to k.
void finalize_neighbor_list(std::vector<Neighbor>& candidates, std::size_t k);

// Batch CF build from a history snapshot: cosine over co-interaction counts.
// Pairs with zero overlap are omitted.
SimilarityIndex build_cf_similarity(const PositiveHistory& history,
                                    EntityKind kind,
                                    std::size_t k_sim = kDefaultKSim);
SimilarityIndex build_cf_similarity(const InteractionLog& log, EntityKind kind,
                                    std::size_t k_sim = kDefaultKSim);

// Incrementally maintained co-occurrence counts, fed by history mutations.
// materialize() must agree exactly with the batch build on the same state.
class CooccurrenceState {
public:
    explicit CooccurrenceState(EntityKind kind) : kind_(kind) {}

    EntityKind kind() const { return kind_; }

    // entity gained `other` as a co-interactor via one shared counterpart.
    void add_entity(std::int64_t id);
    void remove_entity(std::int64_t id);
    void add_pair(std::int64_t a, std::int64_t b);
    void remove_pair(std::int64_t a, std::int64_t b);

    std::int64_t degree(std::int64_t id) const;
    std::int64_t count(std::int64_t a, std::int64_t b) const;

    SimilarityIndex materialize(std::size_t k_sim = kDefaultKSim) const;

private:
    EntityKind kind_;
    std::unordered_map<std::int64_t, std::int64_t> degree_;
    std::unordered_map<std::int64_t, std::unordered_map<std::int64_t, std::int64_t>> cooc_;
};

// Keeps the two CooccurrenceState sides (user and item) in sync with a
// PositiveHistory as records stream in.
class SimilarityTracker {
public:
    explicit SimilarityTracker(std::size_t history_cap = kDefaultHistoryCap)
        : history_(history_cap),
          user_cooc_(EntityKind::User),
          item_cooc_(EntityKind::Item) {}

    void apply(const InteractionRecord& rec);

    const PositiveHistory& history() const { return history_; }
    const CooccurrenceState& user_cooc() const { return user_cooc_; }
    const CooccurrenceState& item_cooc() const { return item_cooc_; }

    SimilarityIndex build_user_index(std::size_t k_sim = kDefaultKSim) const {
        return user_cooc_.materialize(k_sim);
    }
    SimilarityIndex build_item_index(std::size_t k_sim = kDefaultKSim) const {
        return item_cooc_.materialize(k_sim);
    }

private:
    void on_pair_added(UserId u, ItemId i);
    void on_pair_removed(UserId u, ItemId i);

    PositiveHistory history_;
    CooccurrenceState user_cooc_;
    CooccurrenceState item_cooc_;
};

// Fixed-dimension per-item content embeddings.
class ContentStore {
public:
    explicit ContentStore(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    void set(ItemId i, std::vector<double> vec);
    bool has(ItemId i) const { return vectors_.count(i) > 0; }
    const std::vector<double>& get(ItemId i) const;
    std::size_t size() const { return vectors_.size(); }
    std::vector<ItemId> sorted_item_ids() const;

    static ContentStore load_csv(std::istream& in);
    void write_csv(std::ostream& out) const;

private:
    std::size_t dim_;
    std::unordered_map<ItemId, std::vector<double>> vectors_;
};

// Cosine over content vectors; only strictly positive scores are kept, so
// orthogonal pairs drop out.
SimilarityIndex build_content_similarity(const ContentStore& content,
                                         std::size_t k_sim = kDefaultKSim);

// Incremental content-similarity maintenance for a growing item set.
class ContentSimilarityState {
public:
    ContentSimilarityState(std::size_t dim, std::size_t k_sim = kDefaultKSim)
        : dim_(dim), k_sim_(k_sim) {}

    void add_item(ItemId i, const std::vector<double>& vec);
    SimilarityIndex materialize() const;

private:
    std::size_t dim_;
    std::size_t k_sim_;
    std::vector<ItemId> ids_;
    std::vector<double> unit_vectors_;  // row-major, L2-normalized
    std::unordered_map<ItemId, std::vector<Neighbor>> lists_;
};

inline constexpr double kDefaultContentWeight = 0.8;

// The item similarity service: CF score merged with down-weighted content
// score via max, so cold items are served by content alone.
class ItemSimilarityService {
public:
    ItemSimilarityService(const SimilarityIndex* cf, const SimilarityIndex* content,
                          double content_weight = kDefaultContentWeight)
        : cf_(cf), content_(content), content_weight_(content_weight) {}

    std::vector<Neighbor> similar_items(ItemId i, std::size_t k) const;

private:
    const SimilarityIndex* cf_;
    const SimilarityIndex* content_;
    double content_weight_;
};

class UserSimilarityService {
public:
    explicit UserSimilarityService(const SimilarityIndex* cf) : cf_(cf) {}

    std::vector<Neighbor> similar_users(UserId u, std::size_t k) const {
        return cf_->top(u, k);
    }

private:
    const SimilarityIndex* cf_;
};

// One entity per line: {"id":..., "neighbors":[[id,score],...]}.
void write_similarity_jsonl(const SimilarityIndex& index, std::ostream& out);
SimilarityIndex read_similarity_jsonl(std::istream& in, EntityKind kind,
                                      std::size_t k_sim = kDefaultKSim);

}  // namespace dualrec
