#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "blockkit/corpus.hpp"

namespace blockkit {

// Inserted between field values before shingling so a token can only bridge
// two fields by visibly containing the separator. Outside every field
// alphabet.
inline constexpr char kFieldSeparator = '\x1f';

// Multiset of length-k contiguous substrings. Tokens are kept in first
// appearance order, which downstream vocabulary construction relies on.
// A non-empty string shorter than k contributes itself as a single token.
struct ShingleBag {
    int k = 0;
    std::vector<std::pair<std::string, uint32_t>> counts;

    std::size_t distinct() const { return counts.size(); }
    std::size_t total() const;
    uint32_t count_of(std::string_view token) const;
};

ShingleBag shingle_string(std::string_view s, int k);

// Concatenates the record's values with kFieldSeparator and shingles the
// result.
ShingleBag shingle_record(const Record& rec, int k);

// Distinct tokens across a dataset in first-appearance order, with document
// frequencies and idf_w = ln(n / N_w).
struct Vocabulary {
    std::vector<std::string> tokens;
    std::vector<uint32_t> doc_freq;
    std::vector<double> idf;
    std::unordered_map<std::string, uint32_t> index;

    std::size_t size() const { return tokens.size(); }
};

Vocabulary build_vocabulary(std::span<const ShingleBag> bags);

// Jaccard similarity of the token supports (counts ignored); 0 for two empty
// bags by convention.
double jaccard(const ShingleBag& a, const ShingleBag& b);

// Per-record token ids and counts against a shared vocabulary.
struct TokenCounts {
    std::vector<uint32_t> tokens;
    std::vector<uint32_t> counts;
};

struct TokenizedDataset {
    int k = 0;
    Vocabulary vocab;
    std::vector<TokenCounts> records;

    uint32_t n() const { return static_cast<uint32_t>(records.size()); }
};

// Shingles every record (parallel) and folds the bags into a vocabulary with
// a deterministic record-order merge.
TokenizedDataset tokenize_dataset(const Dataset& ds, int k, int threads = 1);

// Sparse binary matrix M: rows are vocabulary tokens, columns are records.
// Stored column-wise as sorted unique token ids.
struct IncidenceMatrix {
    std::size_t vocab_size = 0;
    std::vector<std::vector<uint32_t>> columns;

    uint32_t n() const { return static_cast<uint32_t>(columns.size()); }
};

IncidenceMatrix incidence_matrix(const TokenizedDataset& td);

}  // namespace blockkit
