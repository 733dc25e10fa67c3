#include "blockkit/synthgen.hpp"

#include <algorithm>
#include <cmath>

#include "blockkit/errors.hpp"
#include "blockkit/lexicon.hpp"
#include "blockkit/parallel.hpp"
#include "blockkit/text.hpp"

namespace blockkit {

namespace {

constexpr std::string_view kUpperAlpha = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
constexpr std::string_view kDigits = "0123456789";

constexpr uint64_t kStreamOriginal = uint64_t{1} << 40;
constexpr uint64_t kStreamDuplicate = uint64_t{2} << 40;
constexpr uint64_t kStreamSelection = uint64_t{3} << 40;

std::string_view alphabet_for(FieldKind kind) {
    switch (kind) {
        case FieldKind::Date:
        case FieldKind::NumericAsText:
            return kDigits;
        case FieldKind::Text:
        case FieldKind::Categorical:
            return kUpperAlpha;
    }
    return kUpperAlpha;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SubstituteChar: return "substitute-char";
        case ErrorKind::DeleteChar: return "delete-char";
        case ErrorKind::InsertChar: return "insert-char";
        case ErrorKind::TransposeAdjacent: return "transpose-adjacent";
        case ErrorKind::SwapFields: return "swap-fields";
    }
    return "substitute-char";
}

std::vector<std::pair<ErrorKind, double>> CorruptionSpec::default_error_kinds() {
    return {{ErrorKind::SubstituteChar, 1.0},
            {ErrorKind::DeleteChar, 1.0},
            {ErrorKind::InsertChar, 1.0},
            {ErrorKind::TransposeAdjacent, 1.0}};
}

void CorruptionSpec::validate() const {
    if (!(duplicate_fraction > 0.0 && duplicate_fraction < 1.0))
        throw ParamError("duplicate fraction must lie in (0, 1), got " +
                         std::to_string(duplicate_fraction));
    if (errors_per_duplicate < 1)
        throw ParamError("errors per duplicate must be >= 1");
    if (max_duplicates_per_original < 1)
        throw ParamError("max duplicates per original must be >= 1");
    double total = 0.0;
    for (const auto& [kind, w] : error_kinds) {
        (void)kind;
        if (w < 0.0) throw ParamError("error kind weights must be nonnegative");
        total += w;
    }
    if (!error_kinds.empty() && total <= 0.0)
        throw ParamError("error kind weights must not all be zero");
}

std::string FieldPool::sample(Rng& rng) const {
    if (!values.empty()) {
        if (weights.empty()) return values[rng.below(values.size())];
        double total = 0.0;
        for (double w : weights) total += w;
        double target = rng.next_double() * total;
        double acc = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            acc += weights[i];
            if (acc > target) return values[i];
        }
        return values.back();
    }
    std::string out(static_cast<std::size_t>(digit_width), '0');
    for (char& c : out) c = kDigits[rng.below(10)];
    return out;
}

FieldPool FieldPool::zipf(std::vector<std::string> values, double exponent) {
    FieldPool p;
    p.weights.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        p.weights[i] = 1.0 / std::pow(static_cast<double>(i + 1), exponent);
    p.values = std::move(values);
    return p;
}

FieldPool FieldPool::uniform(std::vector<std::string> values) {
    FieldPool p;
    p.values = std::move(values);
    return p;
}

FieldPool FieldPool::digits(int width) {
    FieldPool p;
    p.digit_width = width;
    return p;
}

FieldPool FieldPool::int_range(int lo, int hi, int pad_width) {
    FieldPool p;
    for (int v = lo; v <= hi; ++v) {
        std::string s = std::to_string(v);
        if (static_cast<int>(s.size()) < pad_width)
            s.insert(s.begin(), pad_width - s.size(), '0');
        p.values.push_back(std::move(s));
    }
    return p;
}

std::string apply_char_edit(std::string_view value, ErrorKind kind, std::size_t pos, char ch) {
    auto offs = utf8_offsets(value);
    std::size_t chars = offs.size() - 1;
    std::string out(value);
    switch (kind) {
        case ErrorKind::SubstituteChar: {
            if (pos >= chars) return out;
            out.replace(offs[pos], offs[pos + 1] - offs[pos], 1, ch);
            return out;
        }
        case ErrorKind::DeleteChar: {
            if (pos >= chars) return out;
            out.erase(offs[pos], offs[pos + 1] - offs[pos]);
            return out;
        }
        case ErrorKind::InsertChar: {
            if (pos > chars) pos = chars;
            out.insert(offs[pos], 1, ch);
            return out;
        }
        case ErrorKind::TransposeAdjacent: {
            if (pos + 1 >= chars) return out;
            std::string a(value.substr(offs[pos], offs[pos + 1] - offs[pos]));
            std::string b(value.substr(offs[pos + 1], offs[pos + 2] - offs[pos + 1]));
            out = std::string(value.substr(0, offs[pos]));
            out += b;
            out += a;
            out += value.substr(offs[pos + 2]);
            return out;
        }
        case ErrorKind::SwapFields:
            return out;  // handled at record level
    }
    return out;
}

std::string corrupt_value(std::string_view value, ErrorKind kind, Rng& rng,
                          std::string_view alphabet) {
    auto offs = utf8_offsets(value);
    std::size_t chars = offs.size() - 1;

    if (kind == ErrorKind::TransposeAdjacent) {
        // Collect positions whose swap actually changes the string.
        std::vector<std::size_t> changeable;
        for (std::size_t i = 0; i + 1 < chars; ++i) {
            if (value.substr(offs[i], offs[i + 1] - offs[i]) !=
                value.substr(offs[i + 1], offs[i + 2] - offs[i + 1]))
                changeable.push_back(i);
        }
        if (!changeable.empty())
            return apply_char_edit(value, kind, changeable[rng.below(changeable.size())], 0);
        kind = ErrorKind::SubstituteChar;
    }
    if ((kind == ErrorKind::DeleteChar || kind == ErrorKind::SubstituteChar) && chars == 0)
        kind = ErrorKind::InsertChar;

    switch (kind) {
        case ErrorKind::SubstituteChar: {
            std::size_t pos = rng.below(chars);
            std::string_view current = value.substr(offs[pos], offs[pos + 1] - offs[pos]);
            char ch = alphabet[rng.below(alphabet.size())];
            while (current.size() == 1 && current[0] == ch)
                ch = alphabet[rng.below(alphabet.size())];
            return apply_char_edit(value, kind, pos, ch);
        }
        case ErrorKind::DeleteChar:
            return apply_char_edit(value, kind, rng.below(chars), 0);
        case ErrorKind::InsertChar:
            return apply_char_edit(value, kind, rng.below(chars + 1),
                                   alphabet[rng.below(alphabet.size())]);
        default:
            break;
    }
    return std::string(value);
}

uint32_t duplicate_count(uint32_t n_originals, double duplicate_fraction) {
    // Smallest d with d >= fraction * (n_originals + d).
    double raw = duplicate_fraction * n_originals / (1.0 - duplicate_fraction);
    auto d = static_cast<uint64_t>(std::ceil(raw - 1e-9));
    while (static_cast<double>(d) + 1e-9 < duplicate_fraction * (n_originals + d)) ++d;
    while (d > 0 &&
           static_cast<double>(d - 1) + 1e-9 >= duplicate_fraction * (n_originals + d - 1))
        --d;
    return static_cast<uint32_t>(d);
}

Dataset generate(uint32_t n_originals, const FieldSchema& schema,
                 const std::vector<FieldPool>& pools, const CorruptionSpec& spec,
                 int threads) {
    schema.validate();
    spec.validate();
    if (n_originals < 1) throw ParamError("need at least one original record");
    if (pools.size() != schema.size())
        throw ParamError("need one value pool per schema field");
    for (std::size_t f = 0; f < pools.size(); ++f) {
        if (pools[f].values.empty() && pools[f].digit_width <= 0)
            throw ParamError("value pool for field '" + schema.names[f] + "' is empty");
    }

    const uint32_t dups = duplicate_count(n_originals, spec.duplicate_fraction);
    if (static_cast<uint64_t>(dups) >
        static_cast<uint64_t>(n_originals) * spec.max_duplicates_per_original)
        throw ParamError("duplicate fraction " + std::to_string(spec.duplicate_fraction) +
                         " needs " + std::to_string(dups) + " duplicates, but " +
                         std::to_string(n_originals) + " originals admit at most " +
                         std::to_string(spec.max_duplicates_per_original) + " each");
    const uint32_t total = n_originals + dups;
    const std::size_t fields = schema.size();

    auto kinds = spec.error_kinds.empty() ? CorruptionSpec::default_error_kinds()
                                          : spec.error_kinds;
    double kind_total = 0.0;
    for (const auto& [k, w] : kinds) kind_total += w;

    std::vector<Record> records(total);

    parallel_chunks(n_originals, threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            Rng rng = Rng::substream(spec.seed, kStreamOriginal + i);
            Record& r = records[i];
            r.id = static_cast<uint32_t>(i);
            r.entity = static_cast<int64_t>(i);
            r.source_id = std::to_string(i);
            r.values.resize(fields);
            for (std::size_t f = 0; f < fields; ++f) r.values[f] = pools[f].sample(rng);
        }
    });

    // Which originals receive duplicates: one sequential stream, capped.
    std::vector<uint32_t> origin_of(dups);
    {
        Rng rng = Rng::substream(spec.seed, kStreamSelection);
        std::vector<int> used(n_originals, 0);
        for (uint32_t j = 0; j < dups; ++j) {
            uint32_t pick = 0;
            bool found = false;
            for (int attempt = 0; attempt < 64; ++attempt) {
                pick = rng.below32(n_originals);
                if (used[pick] < spec.max_duplicates_per_original) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                // Nearly saturated; take the next original with room.
                for (uint32_t step = 0; step < n_originals; ++step) {
                    uint32_t cand = (pick + step) % n_originals;
                    if (used[cand] < spec.max_duplicates_per_original) {
                        pick = cand;
                        found = true;
                        break;
                    }
                }
            }
            ++used[pick];
            origin_of[j] = pick;
        }
    }

    parallel_chunks(dups, threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t j = lo; j < hi; ++j) {
            Rng rng = Rng::substream(spec.seed, kStreamDuplicate + j);
            const Record& base = records[origin_of[j]];
            Record& r = records[n_originals + j];
            r.id = static_cast<uint32_t>(n_originals + j);
            r.entity = base.entity;
            r.source_id = std::to_string(n_originals + j);

            // Redraw on the (rare) chance the edits cancel out.
            for (int attempt = 0; attempt < 16; ++attempt) {
                r.values = base.values;
                for (int e = 0; e < spec.errors_per_duplicate; ++e) {
                    std::size_t f = rng.below(fields);
                    double target = rng.next_double() * kind_total;
                    double acc = 0.0;
                    ErrorKind kind = kinds.back().first;
                    for (const auto& [k, w] : kinds) {
                        acc += w;
                        if (acc > target) {
                            kind = k;
                            break;
                        }
                    }
                    if (kind == ErrorKind::SwapFields) {
                        if (fields < 2) continue;
                        std::size_t g = rng.below(fields - 1);
                        if (g >= f) ++g;
                        std::swap(r.values[f], r.values[g]);
                        continue;
                    }
                    // Re-normalize so generated files are ingestion fixpoints
                    // (a delete can shorten a zero-padded date).
                    r.values[f] = normalize_value(
                        corrupt_value(r.values[f], kind, rng, alphabet_for(schema.kinds[f])),
                        schema.kinds[f]);
                }
                if (r.values != base.values) break;
            }
        }
    });

    return Dataset(schema, std::move(records));
}

GeneratorPreset rldata_analog_preset(uint32_t n_total, uint64_t seed) {
    GeneratorPreset p;
    p.name = "rldata-analog";
    p.schema.names = {"first_name", "last_name", "birth_year", "birth_month", "birth_day"};
    p.schema.kinds = {FieldKind::Text, FieldKind::Text, FieldKind::Date, FieldKind::Date,
                      FieldKind::Date};

    auto views_to_strings = [](std::span<const std::string_view> src) {
        std::vector<std::string> out;
        out.reserve(src.size());
        for (auto v : src) out.emplace_back(v);
        return out;
    };
    // Mildly Zipf-weighted names give the repeated-name structure of real
    // person registers (a random pair agrees on a name roughly 1% of the time).
    p.pools.push_back(FieldPool::zipf(views_to_strings(forename_pool()), 0.75));
    p.pools.push_back(FieldPool::zipf(views_to_strings(surname_pool()), 0.75));
    p.pools.push_back(FieldPool::int_range(1890, 1989, 4));
    p.pools.push_back(FieldPool::int_range(1, 12, 2));
    p.pools.push_back(FieldPool::int_range(1, 31, 2));

    p.spec.duplicate_fraction = 0.1;
    p.spec.errors_per_duplicate = 1;
    p.spec.max_duplicates_per_original = 1;
    p.spec.seed = seed;

    uint32_t n_orig = static_cast<uint32_t>(std::lround(n_total * 0.9));
    while (n_orig + duplicate_count(n_orig, 0.1) > n_total && n_orig > 1) --n_orig;
    while (n_orig + duplicate_count(n_orig, 0.1) < n_total) ++n_orig;
    p.n_originals = n_orig;
    return p;
}

GeneratorPreset noisy_analog_preset(uint32_t n_total, double duplicate_fraction,
                                    uint64_t seed) {
    GeneratorPreset p;
    p.name = "noisy-analog";
    p.schema.names = {"first_name", "last_name", "gender", "postal_code",
                      "city",       "telephone", "credit_card", "age"};
    p.schema.kinds = {FieldKind::Text,          FieldKind::Text,
                      FieldKind::Categorical,   FieldKind::NumericAsText,
                      FieldKind::Text,          FieldKind::NumericAsText,
                      FieldKind::NumericAsText, FieldKind::NumericAsText};

    auto views_to_strings = [](std::span<const std::string_view> src) {
        std::vector<std::string> out;
        out.reserve(src.size());
        for (auto v : src) out.emplace_back(v);
        return out;
    };
    p.pools.push_back(FieldPool::zipf(views_to_strings(forename_pool()), 0.75));
    p.pools.push_back(FieldPool::zipf(views_to_strings(surname_pool()), 0.75));
    p.pools.push_back(FieldPool::uniform({"M", "F"}));
    p.pools.push_back(FieldPool::digits(5));
    p.pools.push_back(FieldPool::zipf(views_to_strings(city_pool()), 0.9));
    p.pools.push_back(FieldPool::digits(10));
    p.pools.push_back(FieldPool::digits(16));
    p.pools.push_back(FieldPool::int_range(1, 99, 0));

    p.spec.duplicate_fraction = duplicate_fraction;
    p.spec.errors_per_duplicate = 5;
    p.spec.max_duplicates_per_original = 5;
    p.spec.seed = seed;

    // Solve n_originals so originals + duplicates lands on n_total.
    uint32_t n_orig = static_cast<uint32_t>(std::lround(n_total * (1.0 - duplicate_fraction)));
    while (n_orig + duplicate_count(n_orig, duplicate_fraction) > n_total && n_orig > 1) --n_orig;
    while (n_orig + duplicate_count(n_orig, duplicate_fraction) < n_total) ++n_orig;
    p.n_originals = n_orig;
    return p;
}

GeneratorPreset named_preset(std::string_view name, uint64_t seed) {
    if (name == "rldata500-analog") return rldata_analog_preset(500, seed);
    if (name == "rldata10000-analog") return rldata_analog_preset(10000, seed);
    if (name == "noisy10-analog") return noisy_analog_preset(10000, 0.1, seed);
    if (name == "noisy30-analog") return noisy_analog_preset(10000, 0.3, seed);
    if (name == "noisy50-analog") return noisy_analog_preset(10000, 0.5, seed);
    throw ParamError("unknown generator preset '" + std::string(name) + "'");
}

std::vector<std::string_view> preset_names() {
    return {"rldata500-analog", "rldata10000-analog", "noisy10-analog", "noisy30-analog",
            "noisy50-analog"};
}

Dataset generate_preset(const GeneratorPreset& preset, int threads) {
    return generate(preset.n_originals, preset.schema, preset.pools, preset.spec, threads);
}

}  // namespace blockkit
