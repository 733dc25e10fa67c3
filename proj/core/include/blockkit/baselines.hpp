#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blockkit/corpus.hpp"
#include "blockkit/partition.hpp"

namespace blockkit {

// Expression tree deciding "declare this pair a non-match". Atoms:
//   dis(field)        field values differ after normalization
//   dis_count(m)      at least m schema fields differ
//   lev(field)>=d     Levenshtein distance of the field values is >= d
//   initial(field)    first characters differ
//   prefix(field,len) byte prefixes of the given length differ
// combined with & and |. prefix() exists so criteria like "decade of birth"
// stay expressible in the same grammar.
struct NonMatchRule {
    enum class Kind {
        Disagree,
        DisagreeCount,
        LevAtLeast,
        InitialDisagree,
        PrefixDisagree,
        And,
        Or,
    };

    Kind kind = Kind::Disagree;
    uint32_t field = 0;
    uint32_t arg = 0;  // m for dis_count, d for lev, len for prefix
    std::vector<NonMatchRule> children;
};

// Grammar: expr := term ('|' term)*; term := factor ('&' factor)*;
// factor := atom | '(' expr ')'. Field names are validated against the schema.
// Throws ParamError on syntax or unknown fields.
NonMatchRule parse_rule(std::string_view expression, const FieldSchema& schema);
std::string rule_to_string(const NonMatchRule& rule, const FieldSchema& schema);

// True iff the pair is declared a non-match.
bool evaluate_rule(const NonMatchRule& rule, const Record& a, const Record& b);

uint32_t levenshtein(std::string_view a, std::string_view b);
// min(levenshtein(a, b), cutoff); early-exits once a row minimum reaches cutoff.
uint32_t levenshtein_bounded(std::string_view a, std::string_view b, uint32_t cutoff);

// The pairs surviving a rule. Backed by a group partition when the rule is a
// pure disjunction of equality atoms (hash-partition fast path), by a lazy
// re-evaluation over the dataset otherwise, or by an explicit sorted list when
// read from a file. count() streams once and caches for the lazy backing.
class CandidatePairSet {
public:
    enum class Backing { Groups, Explicit, LazyRule };

    static CandidatePairSet from_groups(std::vector<uint32_t> group_of_record);
    static CandidatePairSet from_pairs(std::vector<uint64_t> sorted_pair_keys, uint32_t n);
    static CandidatePairSet lazy_rule(const Dataset& ds, NonMatchRule rule, int threads);

    uint32_t n() const { return n_; }
    Backing backing() const { return backing_; }
    uint64_t count() const;
    bool contains(uint32_t a, uint32_t b) const;
    void for_each(const std::function<void(uint32_t, uint32_t)>& fn) const;

private:
    Backing backing_ = Backing::Explicit;
    uint32_t n_ = 0;
    std::vector<uint32_t> groups_;
    std::vector<uint64_t> keys_;
    const Dataset* ds_ = nullptr;
    std::optional<NonMatchRule> rule_;
    int threads_ = 1;
    mutable std::optional<uint64_t> count_;
};

// Pairs NOT eliminated by the rule. Pure disjunctions of dis()/prefix() atoms
// run as an O(n) hash partition; everything else streams all pairs.
CandidatePairSet rule_block(const Dataset& ds, const NonMatchRule& rule, int threads = 1);

// Named criteria presets over the bundled schemas (t1c1..t1c12 for the 5-field
// person schema, t2c1..t2c8 for the 8-field noisy schema).
struct RulePreset {
    std::string_view name;
    std::string_view expression;
    std::string_view summary;
};

std::span<const RulePreset> rule_presets();
const RulePreset* find_rule_preset(std::string_view name);

// Greedy nearest-neighbor clustering over an arbitrary distance.
using DistanceFn = std::function<double(uint32_t, uint32_t)>;

// Grow from the lowest unassigned id, repeatedly absorbing the unassigned
// record nearest to the cluster while that distance stays <= threshold.
BlockingPartition nn_threshold_cluster(uint32_t n, const DistanceFn& dist, double threshold,
                                       int threads = 1);
// Same growth, but absorb nearest neighbors until the cluster reaches
// min_size; a final undersized remainder merges into the nearest cluster.
BlockingPartition nn_minsize_cluster(uint32_t n, const DistanceFn& dist, uint32_t min_size,
                                     int threads = 1);

// Sparse tf-idf vectors with Euclidean distance, the record representation
// used by the nearest-neighbor baselines.
class TfidfVectors {
public:
    TfidfVectors(const Dataset& ds, int shingle_k, int threads = 1);
    double distance(uint32_t a, uint32_t b) const;
    DistanceFn distance_fn() const;

private:
    std::vector<std::vector<std::pair<uint32_t, double>>> rows_;  // sorted by token id
    std::vector<double> norm_sq_;
};

BlockingPartition tnn_block(const Dataset& ds, double threshold, int shingle_k = 2,
                            int threads = 1);
BlockingPartition knn_block(const Dataset& ds, uint32_t min_size, int shingle_k = 2,
                            int threads = 1);

// Possibly-overlapping record groups built with a cheap distance and two
// thresholds t2 <= t1.
struct CanopyCover {
    std::vector<std::vector<uint32_t>> canopies;  // sorted member lists
    double t1 = 0;
    double t2 = 0;
};

// Repeatedly pick a base from the remaining candidate list (lowest id, or
// random with base_seed), form a canopy from the candidates within t1, and
// retire candidates within t2. Throws ParamError when t2 > t1.
CanopyCover canopies_with_distance(uint32_t n, const DistanceFn& dist, double t1, double t2,
                                   std::optional<uint64_t> base_seed = std::nullopt,
                                   int threads = 1);

struct CanopyParams {
    double t1 = 0;
    double t2 = 0;
    std::string distance = "projected";  // "projected" or "tfidf"
    int shingle_k = 2;
    int projections = 100;
    uint64_t seed = 0;
    bool randomize_bases = false;
    int threads = 1;
};

CanopyCover canopies(const Dataset& ds, const CanopyParams& params);

// Blocks = connected components of "shares a canopy".
BlockingPartition canopy_to_blocks(const CanopyCover& cover, uint32_t n);

}  // namespace blockkit
