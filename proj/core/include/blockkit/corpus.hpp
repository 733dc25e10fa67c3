#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace blockkit {

enum class FieldKind { Text, Categorical, Date, NumericAsText };

std::string_view to_string(FieldKind kind);
std::optional<FieldKind> field_kind_from_string(std::string_view name);

// Ordered field layout shared by every record of a dataset.
struct FieldSchema {
    std::vector<std::string> names;
    std::vector<FieldKind> kinds;

    std::size_t size() const { return names.size(); }
    std::optional<uint32_t> index_of(std::string_view name) const;

    // Throws SchemaError unless names are unique, non-empty, and at least one
    // field is present with a kind per field.
    void validate() const;
};

// One row. `id` is the 0-based row position and is the identifier every
// algorithm works with; `source_id` preserves the id column of the input file
// for round-tripping. Records with equal `entity` are true co-referents.
struct Record {
    uint32_t id = 0;
    int64_t entity = 0;
    std::string source_id;
    std::vector<std::string> values;
};

// Unordered record pair, stored with first < second.
using RecordPair = std::pair<uint32_t, uint32_t>;

inline RecordPair make_record_pair(uint32_t a, uint32_t b) {
    return a < b ? RecordPair{a, b} : RecordPair{b, a};
}

inline uint64_t pair_key(uint32_t a, uint32_t b) {
    if (a > b) std::swap(a, b);
    return (static_cast<uint64_t>(a) << 32) | b;
}

// Immutable after construction; safe for concurrent reads.
class Dataset {
public:
    Dataset() = default;
    // Validates row shape, id sequence, and source id uniqueness; throws
    // IntegrityError on violations.
    Dataset(FieldSchema schema, std::vector<Record> records);

    uint32_t n() const { return static_cast<uint32_t>(records_.size()); }
    const FieldSchema& schema() const { return schema_; }
    const std::vector<Record>& records() const { return records_; }
    const Record& operator[](uint32_t i) const { return records_[i]; }

private:
    FieldSchema schema_;
    std::vector<Record> records_;
};

// Uppercase, trim, collapse internal whitespace runs to one space; Date values
// that are pure digit strings are additionally zero-padded to width 2.
std::string normalize_value(std::string_view raw, FieldKind kind);

// Loads a comma-separated, double-quote escaped, UTF-8 file. The header must
// contain entity_column and every schema field; id_column may be empty, in
// which case the row index is used as the source id. Values are normalized at
// ingestion so all downstream methods see identical strings.
Dataset load_csv(const std::string& path, const FieldSchema& schema,
                 const std::string& id_column, const std::string& entity_column);
Dataset load_csv_stream(std::istream& in, const FieldSchema& schema,
                        const std::string& id_column, const std::string& entity_column,
                        const std::string& origin = "<stream>");

void write_csv(const Dataset& ds, std::ostream& out);
std::string dataset_to_csv(const Dataset& ds);

// All unordered pairs {i, j} with equal entity id, sorted.
std::vector<RecordPair> true_pairs(const Dataset& ds);

}  // namespace blockkit
