#include "blockkit/shingle.hpp"

#include <algorithm>
#include <cmath>

#include "blockkit/errors.hpp"
#include "blockkit/parallel.hpp"

namespace blockkit {

std::size_t ShingleBag::total() const {
    std::size_t t = 0;
    for (const auto& [tok, c] : counts) t += c;
    return t;
}

uint32_t ShingleBag::count_of(std::string_view token) const {
    for (const auto& [tok, c] : counts) {
        if (tok == token) return c;
    }
    return 0;
}

namespace {

// slots is keyed by views into the source string, which outlives the call.
void bag_insert(ShingleBag& bag, std::unordered_map<std::string_view, std::size_t>& slots,
                std::string_view token) {
    auto [it, inserted] = slots.try_emplace(token, bag.counts.size());
    if (!inserted) {
        ++bag.counts[it->second].second;
        return;
    }
    bag.counts.emplace_back(std::string(token), 1);
}

}  // namespace

ShingleBag shingle_string(std::string_view s, int k) {
    if (k < 1) throw ParamError("shingle length must be >= 1, got " + std::to_string(k));
    ShingleBag bag;
    bag.k = k;
    if (s.empty()) return bag;
    std::unordered_map<std::string_view, std::size_t> slots;
    if (s.size() < static_cast<std::size_t>(k)) {
        bag_insert(bag, slots, s);
        return bag;
    }
    std::size_t windows = s.size() - static_cast<std::size_t>(k) + 1;
    bag.counts.reserve(windows);
    for (std::size_t i = 0; i < windows; ++i) {
        bag_insert(bag, slots, s.substr(i, static_cast<std::size_t>(k)));
    }
    return bag;
}

ShingleBag shingle_record(const Record& rec, int k) {
    std::string joined;
    std::size_t len = rec.values.empty() ? 0 : rec.values.size() - 1;
    for (const auto& v : rec.values) len += v.size();
    joined.reserve(len);
    for (std::size_t i = 0; i < rec.values.size(); ++i) {
        if (i > 0) joined.push_back(kFieldSeparator);
        joined += rec.values[i];
    }
    return shingle_string(joined, k);
}

Vocabulary build_vocabulary(std::span<const ShingleBag> bags) {
    Vocabulary vocab;
    for (const ShingleBag& bag : bags) {
        for (const auto& [token, count] : bag.counts) {
            (void)count;
            auto [it, inserted] = vocab.index.try_emplace(token, static_cast<uint32_t>(vocab.tokens.size()));
            if (inserted) {
                vocab.tokens.push_back(token);
                vocab.doc_freq.push_back(1);
            } else {
                ++vocab.doc_freq[it->second];
            }
        }
    }
    double n = static_cast<double>(bags.size());
    vocab.idf.resize(vocab.tokens.size());
    for (std::size_t w = 0; w < vocab.tokens.size(); ++w) {
        vocab.idf[w] = std::log(n / static_cast<double>(vocab.doc_freq[w]));
    }
    return vocab;
}

double jaccard(const ShingleBag& a, const ShingleBag& b) {
    if (a.k != b.k) throw ParamError("jaccard requires bags with equal shingle length");
    if (a.counts.empty() && b.counts.empty()) return 0.0;
    std::vector<std::string_view> sa, sb;
    sa.reserve(a.counts.size());
    sb.reserve(b.counts.size());
    for (const auto& [t, c] : a.counts) sa.push_back(t);
    for (const auto& [t, c] : b.counts) sb.push_back(t);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    std::size_t inter = 0, i = 0, j = 0;
    while (i < sa.size() && j < sb.size()) {
        if (sa[i] == sb[j]) {
            ++inter;
            ++i;
            ++j;
        } else if (sa[i] < sb[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    std::size_t uni = sa.size() + sb.size() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

TokenizedDataset tokenize_dataset(const Dataset& ds, int k, int threads) {
    if (k < 1) throw ParamError("shingle length must be >= 1, got " + std::to_string(k));
    std::vector<ShingleBag> bags(ds.n());
    parallel_chunks(ds.n(), threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) bags[i] = shingle_record(ds[static_cast<uint32_t>(i)], k);
    });

    TokenizedDataset td;
    td.k = k;
    td.vocab = build_vocabulary(bags);
    td.records.resize(ds.n());
    for (uint32_t j = 0; j < ds.n(); ++j) {
        TokenCounts& tc = td.records[j];
        tc.tokens.reserve(bags[j].counts.size());
        tc.counts.reserve(bags[j].counts.size());
        for (const auto& [token, count] : bags[j].counts) {
            tc.tokens.push_back(td.vocab.index.at(token));
            tc.counts.push_back(count);
        }
    }
    return td;
}

IncidenceMatrix incidence_matrix(const TokenizedDataset& td) {
    IncidenceMatrix m;
    m.vocab_size = td.vocab.size();
    m.columns.resize(td.records.size());
    for (std::size_t j = 0; j < td.records.size(); ++j) {
        m.columns[j] = td.records[j].tokens;
        std::sort(m.columns[j].begin(), m.columns[j].end());
    }
    return m;
}

}  // namespace blockkit
