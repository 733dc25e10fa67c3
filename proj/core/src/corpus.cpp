#include "blockkit/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "blockkit/errors.hpp"
#include "blockkit/text.hpp"

namespace blockkit {

std::string_view to_string(FieldKind kind) {
    switch (kind) {
        case FieldKind::Text: return "text";
        case FieldKind::Categorical: return "categorical";
        case FieldKind::Date: return "date";
        case FieldKind::NumericAsText: return "numeric";
    }
    return "text";
}

std::optional<FieldKind> field_kind_from_string(std::string_view name) {
    if (name == "text") return FieldKind::Text;
    if (name == "categorical") return FieldKind::Categorical;
    if (name == "date") return FieldKind::Date;
    if (name == "numeric" || name == "numeric-as-text") return FieldKind::NumericAsText;
    return std::nullopt;
}

std::optional<uint32_t> FieldSchema::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return static_cast<uint32_t>(i);
    }
    return std::nullopt;
}

void FieldSchema::validate() const {
    if (names.empty()) throw SchemaError("schema has no fields");
    if (names.size() != kinds.size())
        throw SchemaError("schema has " + std::to_string(names.size()) + " names but " +
                          std::to_string(kinds.size()) + " kinds");
    std::unordered_set<std::string_view> seen;
    for (const auto& name : names) {
        if (name.empty()) throw SchemaError("schema contains an empty field name");
        if (!seen.insert(name).second)
            throw SchemaError("duplicate field name '" + name + "'");
    }
}

Dataset::Dataset(FieldSchema schema, std::vector<Record> records)
    : schema_(std::move(schema)), records_(std::move(records)) {
    schema_.validate();
    std::unordered_set<std::string_view> source_ids;
    source_ids.reserve(records_.size());
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const Record& r = records_[i];
        if (r.id != i)
            throw IntegrityError("record at row " + std::to_string(i) +
                                 " carries id " + std::to_string(r.id));
        if (r.values.size() != schema_.size())
            throw IntegrityError("record " + std::to_string(i) + " has " +
                                 std::to_string(r.values.size()) + " values, schema has " +
                                 std::to_string(schema_.size()));
        if (!r.source_id.empty() && !source_ids.insert(r.source_id).second)
            throw IntegrityError("duplicate record id '" + r.source_id + "'");
    }
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

}  // namespace

std::string normalize_value(std::string_view raw, FieldKind kind) {
    // Trim and collapse whitespace, then uppercase.
    std::string collapsed;
    collapsed.reserve(raw.size());
    std::size_t i = 0, end = raw.size();
    while (i < end && is_space(raw[i])) ++i;
    while (end > i && is_space(raw[end - 1])) --end;
    bool in_run = false;
    for (; i < end; ++i) {
        if (is_space(raw[i])) {
            in_run = true;
            continue;
        }
        if (in_run) {
            collapsed.push_back(' ');
            in_run = false;
        }
        collapsed.push_back(raw[i]);
    }
    std::string up = to_upper_utf8(collapsed);
    if (kind == FieldKind::Date && !up.empty() && up.size() < 2 &&
        std::all_of(up.begin(), up.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        up.insert(up.begin(), 2 - up.size(), '0');
    }
    return up;
}

namespace {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> row_lines;  // physical line where each row starts
};

CsvTable parse_csv(std::istream& in, const std::string& origin) {
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CsvTable table;
    std::vector<std::string> row;
    std::string cell;
    bool quoted = false;
    bool row_has_data = false;
    std::size_t line = 1, row_start_line = 1;

    auto end_cell = [&] {
        row.push_back(std::move(cell));
        cell.clear();
    };
    auto end_row = [&] {
        end_cell();
        if (table.header.empty()) {
            table.header = std::move(row);
        } else {
            table.rows.push_back(std::move(row));
            table.row_lines.push_back(row_start_line);
        }
        row.clear();
        row_has_data = false;
        row_start_line = line;
    };

    for (std::size_t i = 0; i < data.size(); ++i) {
        char c = data[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < data.size() && data[i + 1] == '"') {
                    cell.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                cell.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                if (!cell.empty())
                    throw ParseError(origin + ": line " + std::to_string(line) +
                                     ": quote inside unquoted cell");
                quoted = true;
                row_has_data = true;
                break;
            case ',':
                end_cell();
                row_has_data = true;
                break;
            case '\r':
                break;
            case '\n':
                ++line;
                if (row_has_data || !cell.empty() || !row.empty()) end_row();
                else row_start_line = line;
                break;
            default:
                cell.push_back(c);
                row_has_data = true;
                break;
        }
    }
    if (quoted)
        throw ParseError(origin + ": line " + std::to_string(line) + ": unterminated quote");
    if (row_has_data || !cell.empty() || !row.empty()) end_row();
    return table;
}

int64_t parse_int64(std::string_view s, const std::string& origin, std::size_t line,
                    const char* what) {
    int64_t value = 0;
    // Tolerate surrounding whitespace in id columns.
    std::size_t b = 0, e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    auto [ptr, ec] = std::from_chars(s.data() + b, s.data() + e, value);
    if (ec != std::errc() || ptr != s.data() + e)
        throw ParseError(origin + ": line " + std::to_string(line) + ": cannot parse " +
                         what + " '" + std::string(s) + "'");
    return value;
}

std::string csv_quote(const std::string& v) {
    bool needs = v.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs) return v;
    std::string out = "\"";
    for (char c : v) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

Dataset load_csv_stream(std::istream& in, const FieldSchema& schema,
                        const std::string& id_column, const std::string& entity_column,
                        const std::string& origin) {
    schema.validate();
    CsvTable table = parse_csv(in, origin);
    if (table.header.empty()) throw ParseError(origin + ": empty file");

    std::unordered_map<std::string, std::size_t> columns;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        columns.emplace(normalize_value(table.header[i], FieldKind::Categorical), i);
        columns.emplace(table.header[i], i);
    }
    auto find_column = [&](const std::string& name) -> std::optional<std::size_t> {
        auto it = columns.find(name);
        if (it == columns.end()) return std::nullopt;
        return it->second;
    };

    std::optional<std::size_t> id_col;
    if (!id_column.empty()) {
        id_col = find_column(id_column);
        if (!id_col)
            throw IntegrityError(origin + ": id column '" + id_column + "' not found");
    }
    auto entity_col = find_column(entity_column);
    if (!entity_col)
        throw IntegrityError(origin + ": entity column '" + entity_column + "' not found");

    std::vector<std::size_t> field_cols;
    field_cols.reserve(schema.size());
    for (const auto& f : schema.names) {
        auto col = find_column(f);
        if (!col) throw SchemaError(origin + ": schema field '" + f + "' not found in header");
        field_cols.push_back(*col);
    }

    std::vector<Record> records;
    records.reserve(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        std::size_t line = table.row_lines[r];
        if (row.size() != table.header.size())
            throw ParseError(origin + ": line " + std::to_string(line) + ": expected " +
                             std::to_string(table.header.size()) + " cells, got " +
                             std::to_string(row.size()));
        Record rec;
        rec.id = static_cast<uint32_t>(r);
        rec.source_id = id_col ? row[*id_col] : std::to_string(r);
        rec.entity = parse_int64(row[*entity_col], origin, line, "entity id");
        rec.values.reserve(schema.size());
        for (std::size_t f = 0; f < field_cols.size(); ++f) {
            rec.values.push_back(normalize_value(row[field_cols[f]], schema.kinds[f]));
        }
        records.push_back(std::move(rec));
    }
    return Dataset(schema, std::move(records));
}

Dataset load_csv(const std::string& path, const FieldSchema& schema,
                 const std::string& id_column, const std::string& entity_column) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    return load_csv_stream(in, schema, id_column, entity_column, path);
}

void write_csv(const Dataset& ds, std::ostream& out) {
    out << "rec_id,ent_id";
    for (const auto& name : ds.schema().names) out << ',' << csv_quote(name);
    out << '\n';
    for (const Record& r : ds.records()) {
        out << csv_quote(r.source_id) << ',' << r.entity;
        for (const auto& v : r.values) out << ',' << csv_quote(v);
        out << '\n';
    }
}

std::string dataset_to_csv(const Dataset& ds) {
    std::ostringstream ss;
    write_csv(ds, ss);
    return ss.str();
}

std::vector<RecordPair> true_pairs(const Dataset& ds) {
    std::unordered_map<int64_t, std::vector<uint32_t>> groups;
    for (const Record& r : ds.records()) groups[r.entity].push_back(r.id);
    std::vector<RecordPair> pairs;
    for (const auto& [entity, members] : groups) {
        (void)entity;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                pairs.push_back(make_record_pair(members[i], members[j]));
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

}  // namespace blockkit
