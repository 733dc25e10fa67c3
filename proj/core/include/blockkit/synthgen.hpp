#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "blockkit/corpus.hpp"
#include "blockkit/rng.hpp"

namespace blockkit {

enum class ErrorKind {
    SubstituteChar,
    DeleteChar,
    InsertChar,
    TransposeAdjacent,
    SwapFields,
};

std::string_view to_string(ErrorKind kind);

// Controls how duplicates are manufactured from originals.
struct CorruptionSpec {
    double duplicate_fraction = 0.1;        // share of the *total* file, in (0, 1)
    int errors_per_duplicate = 1;
    int max_duplicates_per_original = 1;
    std::vector<std::pair<ErrorKind, double>> error_kinds;  // weighted; empty = default
    uint64_t seed = 0;

    // Uniform over the four character edits; swap-fields excluded.
    static std::vector<std::pair<ErrorKind, double>> default_error_kinds();

    void validate() const;  // throws ParamError on violations
};

// Value source for one field: either an explicit pool (optionally weighted) or
// a random digit string of fixed width.
struct FieldPool {
    std::vector<std::string> values;
    std::vector<double> weights;  // empty = uniform; else same length as values
    int digit_width = 0;          // used when values is empty

    std::string sample(Rng& rng) const;
    static FieldPool zipf(std::vector<std::string> values, double exponent);
    static FieldPool uniform(std::vector<std::string> values);
    static FieldPool digits(int width);
    static FieldPool int_range(int lo, int hi, int pad_width);  // inclusive
};

// Applies one character edit at an explicit position; the deterministic core
// of corrupt_value, exposed for tests.
std::string apply_char_edit(std::string_view value, ErrorKind kind, std::size_t pos, char ch);

// One random edit. Substitution, deletion, and transposition need content and
// a changeable position; when the value cannot support the requested kind the
// edit degrades to substitute-char, then insert-char. Inserted and substituted
// characters come from `alphabet` and always differ from what they replace.
std::string corrupt_value(std::string_view value, ErrorKind kind, Rng& rng,
                          std::string_view alphabet);

// Samples n_originals records, then appends ceil(duplicate_fraction * total)
// corrupted duplicates with the originals' entity ids. Each duplicate carries
// exactly errors_per_duplicate single-field character edits, fields chosen
// uniformly with replacement. Fully determined by spec.seed; per-record
// substreams make the result independent of thread count.
Dataset generate(uint32_t n_originals, const FieldSchema& schema,
                 const std::vector<FieldPool>& pools, const CorruptionSpec& spec,
                 int threads = 1);

// Number of duplicates implied by a fraction of the total file size.
uint32_t duplicate_count(uint32_t n_originals, double duplicate_fraction);

// Bundled generator presets mirroring the shapes of common labeled linkage
// benchmarks: a 5-field person file with one-error duplicates, and an 8-field
// "noisy" file with five-error duplicates.
struct GeneratorPreset {
    std::string name;
    FieldSchema schema;
    std::vector<FieldPool> pools;
    CorruptionSpec spec;
    uint32_t n_originals = 0;
};

GeneratorPreset rldata_analog_preset(uint32_t n_total, uint64_t seed);
GeneratorPreset noisy_analog_preset(uint32_t n_total, double duplicate_fraction, uint64_t seed);

// Named presets for the CLI: rldata500-analog, rldata10000-analog,
// noisy10-analog, noisy30-analog, noisy50-analog.
GeneratorPreset named_preset(std::string_view name, uint64_t seed);
std::vector<std::string_view> preset_names();

Dataset generate_preset(const GeneratorPreset& preset, int threads = 1);

}  // namespace blockkit
