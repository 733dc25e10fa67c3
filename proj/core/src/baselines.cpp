#include "blockkit/baselines.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "blockkit/errors.hpp"
#include "blockkit/klsh.hpp"
#include "blockkit/parallel.hpp"
#include "blockkit/rng.hpp"
#include "blockkit/shingle.hpp"
#include "blockkit/text.hpp"

namespace blockkit {

namespace {

// --- rule expression parser -------------------------------------------------

struct RuleParser {
    std::string_view src;
    std::size_t pos = 0;
    const FieldSchema& schema;

    explicit RuleParser(std::string_view s, const FieldSchema& sch) : src(s), schema(sch) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw ParamError("rule expression error at offset " + std::to_string(pos) + ": " +
                         what);
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string_view ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected an identifier");
        return src.substr(start, pos - start);
    }

    uint32_t number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        uint32_t v = 0;
        for (std::size_t i = start; i < pos; ++i) v = v * 10 + (src[i] - '0');
        return v;
    }

    uint32_t field_index() {
        std::string_view name = ident();
        auto idx = schema.index_of(name);
        if (!idx) fail("unknown field '" + std::string(name) + "'");
        return *idx;
    }

    NonMatchRule parse_expr() {
        NonMatchRule left = parse_term();
        skip_ws();
        if (pos >= src.size() || src[pos] != '|') return left;
        NonMatchRule node;
        node.kind = NonMatchRule::Kind::Or;
        node.children.push_back(std::move(left));
        while (eat('|')) node.children.push_back(parse_term());
        return node;
    }

    NonMatchRule parse_term() {
        NonMatchRule left = parse_factor();
        skip_ws();
        if (pos >= src.size() || src[pos] != '&') return left;
        NonMatchRule node;
        node.kind = NonMatchRule::Kind::And;
        node.children.push_back(std::move(left));
        while (eat('&')) node.children.push_back(parse_factor());
        return node;
    }

    NonMatchRule parse_factor() {
        skip_ws();
        if (eat('(')) {
            NonMatchRule inner = parse_expr();
            expect(')');
            return inner;
        }
        std::string_view name = ident();
        NonMatchRule node;
        if (name == "dis") {
            expect('(');
            node.kind = NonMatchRule::Kind::Disagree;
            node.field = field_index();
            expect(')');
        } else if (name == "dis_count") {
            expect('(');
            node.kind = NonMatchRule::Kind::DisagreeCount;
            node.arg = number();
            expect(')');
            if (node.arg < 1) fail("dis_count needs a positive field count");
        } else if (name == "lev") {
            expect('(');
            node.kind = NonMatchRule::Kind::LevAtLeast;
            node.field = field_index();
            expect(')');
            expect('>');
            expect('=');
            node.arg = number();
        } else if (name == "initial") {
            expect('(');
            node.kind = NonMatchRule::Kind::InitialDisagree;
            node.field = field_index();
            expect(')');
        } else if (name == "prefix") {
            expect('(');
            node.kind = NonMatchRule::Kind::PrefixDisagree;
            node.field = field_index();
            expect(',');
            node.arg = number();
            expect(')');
            if (node.arg < 1) fail("prefix needs a positive length");
        } else {
            fail("unknown atom '" + std::string(name) + "'");
        }
        return node;
    }
};

}  // namespace

NonMatchRule parse_rule(std::string_view expression, const FieldSchema& schema) {
    RuleParser p(expression, schema);
    NonMatchRule rule = p.parse_expr();
    p.skip_ws();
    if (p.pos != expression.size()) p.fail("trailing input");
    return rule;
}

std::string rule_to_string(const NonMatchRule& rule, const FieldSchema& schema) {
    using Kind = NonMatchRule::Kind;
    switch (rule.kind) {
        case Kind::Disagree:
            return "dis(" + schema.names[rule.field] + ")";
        case Kind::DisagreeCount:
            return "dis_count(" + std::to_string(rule.arg) + ")";
        case Kind::LevAtLeast:
            return "lev(" + schema.names[rule.field] + ")>=" + std::to_string(rule.arg);
        case Kind::InitialDisagree:
            return "initial(" + schema.names[rule.field] + ")";
        case Kind::PrefixDisagree:
            return "prefix(" + schema.names[rule.field] + "," + std::to_string(rule.arg) + ")";
        case Kind::And:
        case Kind::Or: {
            std::string sep = rule.kind == Kind::And ? " & " : " | ";
            std::string out = "(";
            for (std::size_t i = 0; i < rule.children.size(); ++i) {
                if (i) out += sep;
                out += rule_to_string(rule.children[i], schema);
            }
            out += ")";
            return out;
        }
    }
    return {};
}

bool evaluate_rule(const NonMatchRule& rule, const Record& a, const Record& b) {
    using Kind = NonMatchRule::Kind;
    switch (rule.kind) {
        case Kind::Disagree:
            return a.values[rule.field] != b.values[rule.field];
        case Kind::DisagreeCount: {
            uint32_t disagreements = 0;
            for (std::size_t f = 0; f < a.values.size(); ++f) {
                if (a.values[f] != b.values[f] && ++disagreements >= rule.arg) return true;
            }
            return false;
        }
        case Kind::LevAtLeast:
            return levenshtein_bounded(a.values[rule.field], b.values[rule.field], rule.arg) >=
                   rule.arg;
        case Kind::InitialDisagree:
            return first_code_point(a.values[rule.field]) !=
                   first_code_point(b.values[rule.field]);
        case Kind::PrefixDisagree: {
            std::string_view va = a.values[rule.field];
            std::string_view vb = b.values[rule.field];
            return va.substr(0, rule.arg) != vb.substr(0, rule.arg);
        }
        case Kind::And:
            for (const auto& child : rule.children) {
                if (!evaluate_rule(child, a, b)) return false;
            }
            return true;
        case Kind::Or:
            for (const auto& child : rule.children) {
                if (evaluate_rule(child, a, b)) return true;
            }
            return false;
    }
    return false;
}

uint32_t levenshtein(std::string_view a, std::string_view b) {
    return levenshtein_bounded(a, b, std::numeric_limits<uint32_t>::max());
}

uint32_t levenshtein_bounded(std::string_view a, std::string_view b, uint32_t cutoff) {
    if (a.size() > b.size()) std::swap(a, b);
    if (a.empty()) return std::min<uint32_t>(static_cast<uint32_t>(b.size()), cutoff);
    if (b.size() - a.size() >= cutoff) return cutoff;

    std::vector<uint32_t> prev(a.size() + 1), curr(a.size() + 1);
    for (std::size_t i = 0; i <= a.size(); ++i) prev[i] = static_cast<uint32_t>(i);
    for (std::size_t j = 0; j < b.size(); ++j) {
        curr[0] = static_cast<uint32_t>(j) + 1;
        uint32_t row_min = curr[0];
        for (std::size_t i = 0; i < a.size(); ++i) {
            uint32_t del = prev[i + 1] + 1;
            uint32_t ins = curr[i] + 1;
            uint32_t sub = prev[i] + (a[i] == b[j] ? 0u : 1u);
            curr[i + 1] = std::min({del, ins, sub});
            row_min = std::min(row_min, curr[i + 1]);
        }
        if (row_min >= cutoff) return cutoff;
        prev.swap(curr);
    }
    return std::min(prev[a.size()], cutoff);
}

// --- candidate pair sets -----------------------------------------------------

CandidatePairSet CandidatePairSet::from_groups(std::vector<uint32_t> group_of_record) {
    CandidatePairSet s;
    s.backing_ = Backing::Groups;
    s.n_ = static_cast<uint32_t>(group_of_record.size());
    s.groups_ = std::move(group_of_record);
    return s;
}

CandidatePairSet CandidatePairSet::from_pairs(std::vector<uint64_t> sorted_pair_keys,
                                              uint32_t n) {
    CandidatePairSet s;
    s.backing_ = Backing::Explicit;
    s.n_ = n;
    s.keys_ = std::move(sorted_pair_keys);
    std::sort(s.keys_.begin(), s.keys_.end());
    s.keys_.erase(std::unique(s.keys_.begin(), s.keys_.end()), s.keys_.end());
    return s;
}

CandidatePairSet CandidatePairSet::lazy_rule(const Dataset& ds, NonMatchRule rule,
                                             int threads) {
    CandidatePairSet s;
    s.backing_ = Backing::LazyRule;
    s.n_ = ds.n();
    s.ds_ = &ds;
    s.rule_ = std::move(rule);
    s.threads_ = threads;
    return s;
}

uint64_t CandidatePairSet::count() const {
    if (count_) return *count_;
    uint64_t total = 0;
    switch (backing_) {
        case Backing::Groups: {
            std::unordered_map<uint32_t, uint64_t> sizes;
            for (uint32_t g : groups_) ++sizes[g];
            for (const auto& [g, sz] : sizes) total += sz * (sz - 1) / 2;
            break;
        }
        case Backing::Explicit:
            total = keys_.size();
            break;
        case Backing::LazyRule: {
            std::atomic<uint64_t> acc{0};
            const Dataset& ds = *ds_;
            parallel_chunks(n_, threads_, [&](std::size_t lo, std::size_t hi) {
                uint64_t local = 0;
                for (std::size_t i = lo; i < hi; ++i) {
                    for (std::size_t j = i + 1; j < n_; ++j) {
                        if (!evaluate_rule(*rule_, ds[static_cast<uint32_t>(i)],
                                           ds[static_cast<uint32_t>(j)]))
                            ++local;
                    }
                }
                acc.fetch_add(local, std::memory_order_relaxed);
            });
            total = acc.load();
            break;
        }
    }
    count_ = total;
    return total;
}

bool CandidatePairSet::contains(uint32_t a, uint32_t b) const {
    if (a == b) return false;
    switch (backing_) {
        case Backing::Groups:
            return groups_[a] == groups_[b];
        case Backing::Explicit:
            return std::binary_search(keys_.begin(), keys_.end(), pair_key(a, b));
        case Backing::LazyRule:
            return !evaluate_rule(*rule_, (*ds_)[a], (*ds_)[b]);
    }
    return false;
}

void CandidatePairSet::for_each(const std::function<void(uint32_t, uint32_t)>& fn) const {
    switch (backing_) {
        case Backing::Groups: {
            std::unordered_map<uint32_t, std::vector<uint32_t>> members;
            for (uint32_t i = 0; i < n_; ++i) members[groups_[i]].push_back(i);
            for (uint32_t i = 0; i < n_; ++i) {
                for (uint32_t j : members[groups_[i]]) {
                    if (j > i) fn(i, j);
                }
            }
            break;
        }
        case Backing::Explicit:
            for (uint64_t k : keys_)
                fn(static_cast<uint32_t>(k >> 32), static_cast<uint32_t>(k));
            break;
        case Backing::LazyRule:
            for (uint32_t i = 0; i < n_; ++i) {
                for (uint32_t j = i + 1; j < n_; ++j) {
                    if (!evaluate_rule(*rule_, (*ds_)[i], (*ds_)[j])) fn(i, j);
                }
            }
            break;
    }
}

namespace {

// Collects dis()/prefix() atoms of a pure disjunction; nullopt when the rule
// has any other shape.
std::optional<std::vector<const NonMatchRule*>> pure_disjunction_atoms(const NonMatchRule& r) {
    using Kind = NonMatchRule::Kind;
    std::vector<const NonMatchRule*> atoms;
    std::vector<const NonMatchRule*> stack{&r};
    while (!stack.empty()) {
        const NonMatchRule* node = stack.back();
        stack.pop_back();
        switch (node->kind) {
            case Kind::Or:
                for (const auto& c : node->children) stack.push_back(&c);
                break;
            case Kind::Disagree:
            case Kind::PrefixDisagree:
                atoms.push_back(node);
                break;
            default:
                return std::nullopt;
        }
    }
    return atoms;
}

}  // namespace

CandidatePairSet rule_block(const Dataset& ds, const NonMatchRule& rule, int threads) {
    if (auto atoms = pure_disjunction_atoms(rule)) {
        // Survivors agree on every listed atom: hash-partition on the key.
        std::unordered_map<std::string, uint32_t> key_ids;
        std::vector<uint32_t> groups(ds.n());
        std::string key;
        for (uint32_t i = 0; i < ds.n(); ++i) {
            key.clear();
            for (const NonMatchRule* atom : *atoms) {
                const std::string& v = ds[i].values[atom->field];
                if (atom->kind == NonMatchRule::Kind::PrefixDisagree)
                    key.append(v.substr(0, atom->arg));
                else
                    key.append(v);
                key.push_back(kFieldSeparator);
            }
            groups[i] = key_ids.try_emplace(key, static_cast<uint32_t>(key_ids.size()))
                            .first->second;
        }
        return CandidatePairSet::from_groups(std::move(groups));
    }
    return CandidatePairSet::lazy_rule(ds, rule, threads);
}

// --- criteria presets ---------------------------------------------------------

namespace {

constexpr RulePreset kPresets[] = {
    {"t1c1", "dis(first_name)|dis(last_name)", "first or last name disagrees"},
    {"t1c2", "dis(birth_day)|dis(birth_month)|dis(birth_year)",
     "any birth date component disagrees"},
    {"t1c3", "dis(birth_year)", "birth year disagrees"},
    {"t1c4", "dis(birth_day)", "birth day disagrees"},
    {"t1c5", "dis(birth_month)", "birth month disagrees"},
    {"t1c6", "prefix(birth_year,3)", "birth decade disagrees"},
    {"t1c7", "dis(first_name)&dis(last_name)", "first and last name both disagree"},
    {"t1c8",
     "(dis(first_name)&dis(last_name))|(dis(birth_day)&dis(birth_month)&dis(birth_year))",
     "both names disagree, or the full birth date disagrees"},
    {"t1c9", "dis(birth_day)&dis(birth_month)&dis(birth_year)",
     "day, month, and year all disagree"},
    {"t1c10", "dis_count(4)", "more than three fields disagree"},
    {"t1c11", "initial(first_name)|initial(last_name)", "a name initial disagrees"},
    {"t1c12", "dis_count(4)|lev(first_name)>=4|lev(last_name)>=4",
     "more than three fields disagree, or a name is four-plus edits away"},
    {"t2c1", "dis(gender)", "gender disagrees"},
    {"t2c2", "dis(city)", "city disagrees"},
    {"t2c3", "dis(postal_code)", "postal code disagrees"},
    {"t2c4", "dis(first_name)|dis(last_name)", "first or last name disagrees"},
    {"t2c5", "initial(first_name)|initial(last_name)", "a name initial disagrees"},
    {"t2c6", "dis(first_name)&dis(last_name)", "first and last name both disagree"},
    {"t2c7", "dis_count(8)", "all eight fields disagree"},
    {"t2c8", "dis_count(8)|lev(first_name)>=4|lev(last_name)>=4",
     "all fields disagree, or a name is four-plus edits away"},
};

}  // namespace

std::span<const RulePreset> rule_presets() { return kPresets; }

const RulePreset* find_rule_preset(std::string_view name) {
    for (const auto& p : kPresets) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

// --- nearest-neighbor clustering ----------------------------------------------

namespace {

constexpr uint32_t kUnassigned = 0xffffffffu;

struct GrowState {
    std::vector<uint32_t> label;
    std::vector<double> dmin;  // min distance from unassigned record to cluster
    uint32_t assigned = 0;
};

// Adds `member` to the active cluster and refreshes dmin for the unassigned.
void absorb(GrowState& st, uint32_t n, const DistanceFn& dist, uint32_t member,
            uint32_t cluster, int threads) {
    st.label[member] = cluster;
    ++st.assigned;
    st.dmin[member] = std::numeric_limits<double>::infinity();
    parallel_chunks(n, threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t j = lo; j < hi; ++j) {
            if (st.label[j] != kUnassigned) continue;
            double d = dist(static_cast<uint32_t>(j), member);
            if (d < st.dmin[j]) st.dmin[j] = d;
        }
    });
}

uint32_t nearest_unassigned(const GrowState& st, uint32_t n, double& out_d) {
    uint32_t best = kUnassigned;
    double best_d = std::numeric_limits<double>::infinity();
    for (uint32_t j = 0; j < n; ++j) {
        if (st.label[j] != kUnassigned) continue;
        if (st.dmin[j] < best_d) {
            best_d = st.dmin[j];
            best = j;
        }
    }
    out_d = best_d;
    return best;
}

uint32_t lowest_unassigned(const GrowState& st, uint32_t n) {
    for (uint32_t j = 0; j < n; ++j) {
        if (st.label[j] == kUnassigned) return j;
    }
    return kUnassigned;
}

}  // namespace

BlockingPartition nn_threshold_cluster(uint32_t n, const DistanceFn& dist, double threshold,
                                       int threads) {
    if (threshold < 0) throw ParamError("distance threshold must be >= 0");
    GrowState st;
    st.label.assign(n, kUnassigned);
    st.dmin.assign(n, std::numeric_limits<double>::infinity());
    uint32_t cluster = 0;
    while (st.assigned < n) {
        uint32_t base = lowest_unassigned(st, n);
        std::fill(st.dmin.begin(), st.dmin.end(), std::numeric_limits<double>::infinity());
        absorb(st, n, dist, base, cluster, threads);
        while (st.assigned < n) {
            double d = 0;
            uint32_t next = nearest_unassigned(st, n, d);
            if (next == kUnassigned || d > threshold) break;
            absorb(st, n, dist, next, cluster, threads);
        }
        ++cluster;
    }
    BlockingPartition p;
    p.assignment = std::move(st.label);
    p.num_blocks = cluster;
    return p;
}

BlockingPartition nn_minsize_cluster(uint32_t n, const DistanceFn& dist, uint32_t min_size,
                                     int threads) {
    if (min_size < 1) throw ParamError("minimum cluster size must be >= 1");
    if (min_size > n)
        throw ParamError("minimum cluster size " + std::to_string(min_size) +
                         " exceeds record count " + std::to_string(n));
    GrowState st;
    st.label.assign(n, kUnassigned);
    st.dmin.assign(n, std::numeric_limits<double>::infinity());
    uint32_t cluster = 0;
    std::vector<uint32_t> sizes;
    while (st.assigned < n) {
        uint32_t base = lowest_unassigned(st, n);
        std::fill(st.dmin.begin(), st.dmin.end(), std::numeric_limits<double>::infinity());
        absorb(st, n, dist, base, cluster, threads);
        uint32_t size = 1;
        while (size < min_size && st.assigned < n) {
            double d = 0;
            uint32_t next = nearest_unassigned(st, n, d);
            if (next == kUnassigned) break;
            absorb(st, n, dist, next, cluster, threads);
            ++size;
        }
        sizes.push_back(size);
        ++cluster;
    }
    // Merge an undersized trailing cluster into its nearest neighbor cluster.
    if (cluster > 1 && sizes.back() < min_size) {
        uint32_t last = cluster - 1;
        double best_d = std::numeric_limits<double>::infinity();
        uint32_t best_cluster = 0;
        for (uint32_t i = 0; i < n; ++i) {
            if (st.label[i] != last) continue;
            for (uint32_t j = 0; j < n; ++j) {
                if (st.label[j] == last) continue;
                double d = dist(i, j);
                if (d < best_d) {
                    best_d = d;
                    best_cluster = st.label[j];
                }
            }
        }
        for (uint32_t i = 0; i < n; ++i) {
            if (st.label[i] == last) st.label[i] = best_cluster;
        }
        --cluster;
    }
    return BlockingPartition::from_labels(st.label);
}

TfidfVectors::TfidfVectors(const Dataset& ds, int shingle_k, int threads) {
    TokenizedDataset td = tokenize_dataset(ds, shingle_k, threads);
    rows_.resize(td.n());
    norm_sq_.assign(td.n(), 0.0);
    for (uint32_t j = 0; j < td.n(); ++j) {
        const TokenCounts& tc = td.records[j];
        auto& row = rows_[j];
        row.reserve(tc.tokens.size());
        for (std::size_t t = 0; t < tc.tokens.size(); ++t) {
            double w = td.vocab.idf[tc.tokens[t]] * tc.counts[t];
            row.emplace_back(tc.tokens[t], w);
            norm_sq_[j] += w * w;
        }
        std::sort(row.begin(), row.end());
    }
}

double TfidfVectors::distance(uint32_t a, uint32_t b) const {
    const auto& ra = rows_[a];
    const auto& rb = rows_[b];
    double dot = 0.0;
    std::size_t i = 0, j = 0;
    while (i < ra.size() && j < rb.size()) {
        if (ra[i].first == rb[j].first) {
            dot += ra[i].second * rb[j].second;
            ++i;
            ++j;
        } else if (ra[i].first < rb[j].first) {
            ++i;
        } else {
            ++j;
        }
    }
    double d2 = norm_sq_[a] + norm_sq_[b] - 2.0 * dot;
    return d2 > 0.0 ? std::sqrt(d2) : 0.0;
}

DistanceFn TfidfVectors::distance_fn() const {
    return [this](uint32_t a, uint32_t b) { return distance(a, b); };
}

BlockingPartition tnn_block(const Dataset& ds, double threshold, int shingle_k, int threads) {
    TfidfVectors vec(ds, shingle_k, threads);
    return nn_threshold_cluster(ds.n(), vec.distance_fn(), threshold, threads);
}

BlockingPartition knn_block(const Dataset& ds, uint32_t min_size, int shingle_k, int threads) {
    TfidfVectors vec(ds, shingle_k, threads);
    return nn_minsize_cluster(ds.n(), vec.distance_fn(), min_size, threads);
}

CanopyCover canopies_with_distance(uint32_t n, const DistanceFn& dist, double t1, double t2,
                                   std::optional<uint64_t> base_seed, int threads) {
    if (t2 > t1) throw ParamError("canopy thresholds need t2 <= t1");
    if (t2 < 0) throw ParamError("canopy thresholds must be >= 0");

    CanopyCover cover;
    cover.t1 = t1;
    cover.t2 = t2;
    std::vector<uint32_t> candidates(n);
    for (uint32_t i = 0; i < n; ++i) candidates[i] = i;
    std::optional<Rng> rng;
    if (base_seed) rng.emplace(*base_seed);

    std::vector<double> d(n);
    while (!candidates.empty()) {
        std::size_t base_pos = rng ? rng->below(candidates.size()) : 0;
        uint32_t base = candidates[base_pos];

        parallel_chunks(candidates.size(), threads, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) d[i] = dist(candidates[i], base);
        });

        std::vector<uint32_t> canopy, keep;
        keep.reserve(candidates.size());
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (d[i] <= t1) canopy.push_back(candidates[i]);
            if (d[i] > t2) keep.push_back(candidates[i]);
        }
        std::sort(canopy.begin(), canopy.end());
        cover.canopies.push_back(std::move(canopy));
        candidates = std::move(keep);
    }
    return cover;
}

CanopyCover canopies(const Dataset& ds, const CanopyParams& params) {
    std::optional<uint64_t> base_seed;
    if (params.randomize_bases) base_seed = derive_seed(params.seed, 0x63616e6fULL);
    if (params.distance == "tfidf") {
        TfidfVectors vec(ds, params.shingle_k, params.threads);
        return canopies_with_distance(ds.n(), vec.distance_fn(), params.t1, params.t2,
                                      base_seed, params.threads);
    }
    if (params.distance != "projected")
        throw ParamError("unknown canopy distance '" + params.distance +
                         "' (expected 'projected' or 'tfidf')");
    TokenizedDataset td = tokenize_dataset(ds, params.shingle_k, params.threads);
    RandomUnitVectors units =
        random_unit_vectors(std::max<std::size_t>(td.vocab.size(), 1), params.projections,
                            derive_seed(params.seed, 0x70726f6aULL));
    ProjectedMatrix r = project(td, units, params.threads);
    auto dist = [&r](uint32_t a, uint32_t b) {
        double s = 0.0;
        const double* ra = r.row(a).data();
        const double* rb = r.row(b).data();
        for (int m = 0; m < r.p; ++m) {
            double d = ra[m] - rb[m];
            s += d * d;
        }
        return s > 0.0 ? std::sqrt(s) : 0.0;
    };
    return canopies_with_distance(ds.n(), dist, params.t1, params.t2, base_seed,
                                  params.threads);
}

BlockingPartition canopy_to_blocks(const CanopyCover& cover, uint32_t n) {
    // Union-find over shared canopy membership.
    std::vector<uint32_t> parent(n);
    for (uint32_t i = 0; i < n; ++i) parent[i] = i;
    std::function<uint32_t(uint32_t)> find = [&](uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& canopy : cover.canopies) {
        for (std::size_t i = 1; i < canopy.size(); ++i) {
            uint32_t a = find(canopy[0]), b = find(canopy[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<uint32_t> labels(n);
    for (uint32_t i = 0; i < n; ++i) labels[i] = find(i);
    return BlockingPartition::from_labels(labels);
}

}  // namespace blockkit
