#include "blockkit/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "blockkit/errors.hpp"
#include "blockkit/klsh.hpp"
#include "blockkit/rng.hpp"
#include "blockkit/synthgen.hpp"

namespace blockkit {

namespace {

void fill_rates(EvalReport& r, uint64_t candidate, uint64_t preserved, uint64_t truth,
                uint32_t n) {
    r.candidate_pairs = candidate;
    r.preserved = preserved;
    r.true_pair_count = truth;
    r.n = n;
    r.recall_pct = truth == 0 ? 100.0
                              : 100.0 * static_cast<double>(preserved) /
                                    static_cast<double>(truth);
    uint64_t all = total_pair_count(n);
    r.reduction_ratio_pct =
        all == 0 ? 100.0
                 : 100.0 * (1.0 - static_cast<double>(candidate) / static_cast<double>(all));
}

std::vector<std::pair<uint32_t, uint64_t>> histogram(const BlockingPartition& p) {
    std::map<uint32_t, uint64_t> h;
    for (uint32_t s : p.block_sizes()) ++h[s];
    return {h.begin(), h.end()};
}

}  // namespace

EvalReport score(const BlockingPartition& partition, std::span<const RecordPair> truth,
                 uint32_t n) {
    uint64_t preserved = 0;
    for (const auto& [a, b] : truth) {
        if (partition.assignment[a] == partition.assignment[b]) ++preserved;
    }
    EvalReport r;
    r.num_blocks = partition.num_blocks;
    r.block_size_histogram = histogram(partition);
    fill_rates(r, partition.candidate_pair_count(), preserved, truth.size(), n);
    return r;
}

EvalReport score(const CandidatePairSet& pairs, std::span<const RecordPair> truth,
                 uint32_t n) {
    uint64_t preserved = 0;
    for (const auto& [a, b] : truth) {
        if (pairs.contains(a, b)) ++preserved;
    }
    EvalReport r;
    fill_rates(r, pairs.count(), preserved, truth.size(), n);
    return r;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw ParamError("slope needs at least two (x, y) points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        double lx = std::log(x[i]);
        double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

nlohmann::ordered_json EvalReport::to_json() const {
    nlohmann::ordered_json j;
    j["method"] = method;
    j["params"] = params;
    j["seed"] = seed;
    j["n"] = n;
    j["true_pairs"] = true_pair_count;
    j["candidate_pairs"] = candidate_pairs;
    j["preserved"] = preserved;
    j["recall_pct"] = recall_pct;
    j["reduction_ratio_pct"] = reduction_ratio_pct;
    j["blocks"] = num_blocks;
    nlohmann::ordered_json hist = nlohmann::ordered_json::array();
    for (const auto& [size, count] : block_size_histogram) hist.push_back({size, count});
    j["block_size_histogram"] = hist;
    nlohmann::ordered_json t;
    for (const auto& s : timings) t[s.stage] = s.seconds;
    j["timings_sec"] = t;
    return j;
}

std::string EvalReport::to_text() const {
    std::ostringstream out;
    char line[256];
    out << "method: " << method << "   seed: " << seed << "   n: " << n << "\n";
    if (!params.empty()) out << "params: " << params.dump() << "\n";
    std::snprintf(line, sizeof line,
                  "true pairs: %llu   preserved: %llu   candidate pairs: %llu\n",
                  static_cast<unsigned long long>(true_pair_count),
                  static_cast<unsigned long long>(preserved),
                  static_cast<unsigned long long>(candidate_pairs));
    out << line;
    std::snprintf(line, sizeof line, "recall: %.2f%%   reduction ratio: %.2f%%\n", recall_pct,
                  reduction_ratio_pct);
    out << line;
    if (num_blocks > 0) {
        uint32_t min_size = 0, max_size = 0;
        uint64_t total = 0, cnt = 0;
        for (const auto& [size, count] : block_size_histogram) {
            if (cnt == 0) min_size = size;
            max_size = size;
            total += static_cast<uint64_t>(size) * count;
            cnt += count;
        }
        std::snprintf(line, sizeof line,
                      "blocks: %u   size min/mean/max: %u/%.1f/%u\n", num_blocks, min_size,
                      cnt ? static_cast<double>(total) / static_cast<double>(cnt) : 0.0,
                      max_size);
        out << line;
    }
    if (!timings.empty()) {
        out << "timings:";
        for (const auto& s : timings) {
            std::snprintf(line, sizeof line, " %s %.3fs", s.stage.c_str(), s.seconds);
            out << line;
        }
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------

namespace {

struct ParamReader {
    const nlohmann::ordered_json& src;
    std::vector<std::string> known;

    explicit ParamReader(const nlohmann::ordered_json& j) : src(j) {
        if (!src.is_object() && !src.is_null())
            throw ParamError("method parameters must be a JSON object");
    }

    template <typename T>
    T get(const std::string& key, T fallback) {
        known.push_back(key);
        if (src.is_null() || !src.contains(key)) return fallback;
        try {
            return src.at(key).get<T>();
        } catch (const nlohmann::json::exception&) {
            throw ParamError("parameter '" + key + "' has the wrong type");
        }
    }

    void finish() const {
        if (src.is_null()) return;
        for (auto it = src.begin(); it != src.end(); ++it) {
            if (std::find(known.begin(), known.end(), it.key()) == known.end())
                throw ParamError("unknown parameter '" + it.key() + "'");
        }
    }
};

}  // namespace

MethodOutput run_blocking(const Dataset& ds, const std::string& method,
                          const nlohmann::ordered_json& params) {
    MethodOutput out;
    out.method = method;
    ParamReader rd(params);
    uint64_t seed = rd.get<uint64_t>("seed", 0);
    int threads = rd.get<int>("threads", 1);
    if (threads < 1) throw ParamError("thread count must be >= 1");
    out.seed = seed;

    auto echo = [&](std::initializer_list<std::pair<const char*, nlohmann::ordered_json>> kv) {
        for (const auto& [k, v] : kv) out.params_echo[k] = v;
        out.params_echo["seed"] = seed;
    };

    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    auto elapsed = [&t0] {
        return std::chrono::duration<double>(clock::now() - t0).count();
    };

    if (method == "tlsh") {
        TlshParams p;
        p.shingle_k = rd.get<int>("shingle_k", p.shingle_k);
        p.permutations = rd.get<int>("permutations", p.permutations);
        p.bands = rd.get<int>("bands", p.bands);
        p.max_block = rd.get<uint32_t>("max_block", p.max_block);
        p.seed = seed;
        p.threads = threads;
        rd.finish();
        TlshResult r = tlsh_block(ds, p);
        out.partition = std::move(r.partition);
        out.timings = std::move(r.timings);
        out.vocab_size = r.vocab_size;
        out.edge_count = r.edge_count;
        echo({{"shingle_k", p.shingle_k},
              {"permutations", p.permutations},
              {"bands", p.bands},
              {"max_block", p.max_block}});
    } else if (method == "klsh") {
        KlshParams p;
        p.shingle_k = rd.get<int>("shingle_k", p.shingle_k);
        p.projections = rd.get<int>("projections", p.projections);
        p.num_blocks = rd.get<uint32_t>("num_blocks", p.num_blocks);
        p.avg_block_size = rd.get<uint32_t>("avg_block_size", p.avg_block_size);
        p.max_iter = rd.get<int>("max_iter", p.max_iter);
        p.seed = seed;
        p.threads = threads;
        rd.finish();
        KlshResult r = klsh_block(ds, p);
        out.partition = std::move(r.partition);
        out.timings = std::move(r.timings);
        out.vocab_size = r.vocab_size;
        echo({{"shingle_k", p.shingle_k},
              {"projections", p.projections},
              {"num_blocks", r.clusters},
              {"max_iter", p.max_iter}});
    } else if (method == "rule") {
        std::string rule_text = rd.get<std::string>("rule", "");
        rd.finish();
        if (rule_text.empty()) throw ParamError("rule method needs a 'rule' parameter");
        if (const RulePreset* preset = find_rule_preset(rule_text))
            rule_text = std::string(preset->expression);
        NonMatchRule rule = parse_rule(rule_text, ds.schema());
        out.pairs = rule_block(ds, rule, threads);
        out.pairs->count();
        out.timings.push_back({"total", elapsed()});
        echo({{"rule", rule_text}});
    } else if (method == "tnn") {
        double threshold = rd.get<double>("threshold", 0.0);
        int shingle_k = rd.get<int>("shingle_k", 2);
        rd.finish();
        out.partition = tnn_block(ds, threshold, shingle_k, threads);
        out.timings.push_back({"total", elapsed()});
        echo({{"threshold", threshold}, {"shingle_k", shingle_k}});
    } else if (method == "knn") {
        uint32_t k_min = rd.get<uint32_t>("k_min", 2);
        int shingle_k = rd.get<int>("shingle_k", 2);
        rd.finish();
        out.partition = knn_block(ds, k_min, shingle_k, threads);
        out.timings.push_back({"total", elapsed()});
        echo({{"k_min", k_min}, {"shingle_k", shingle_k}});
    } else if (method == "canopy") {
        CanopyParams p;
        p.t1 = rd.get<double>("t1", 0.0);
        p.t2 = rd.get<double>("t2", 0.0);
        p.distance = rd.get<std::string>("distance", p.distance);
        p.shingle_k = rd.get<int>("shingle_k", p.shingle_k);
        p.projections = rd.get<int>("projections", p.projections);
        p.randomize_bases = rd.get<bool>("randomize_bases", false);
        p.seed = seed;
        p.threads = threads;
        rd.finish();
        CanopyCover cover = canopies(ds, p);
        out.partition = canopy_to_blocks(cover, ds.n());
        out.timings.push_back({"total", elapsed()});
        echo({{"t1", p.t1},
              {"t2", p.t2},
              {"distance", p.distance},
              {"shingle_k", p.shingle_k},
              {"projections", p.projections}});
    } else {
        throw ParamError("unknown method '" + method +
                         "' (expected rule, tnn, knn, canopy, tlsh, or klsh)");
    }
    return out;
}

EvalReport score_output(const MethodOutput& out, std::span<const RecordPair> truth,
                        uint32_t n) {
    EvalReport r;
    if (out.partition) {
        r = score(*out.partition, truth, n);
    } else if (out.pairs) {
        r = score(*out.pairs, truth, n);
    } else {
        throw ParamError("method produced no partition or pair set");
    }
    r.method = out.method;
    r.params = out.params_echo;
    r.seed = out.seed;
    r.timings = out.timings;
    return r;
}

std::vector<EvalReport> sensitivity_sweep(const Dataset& ds, const std::string& method,
                                          const nlohmann::ordered_json& grid,
                                          uint64_t base_seed, int threads) {
    if (!grid.is_object() || grid.empty())
        throw ParamError("sweep grid must be a non-empty JSON object of arrays");

    std::vector<std::string> keys;
    std::vector<std::vector<nlohmann::ordered_json>> values;
    std::size_t points = 1;
    for (auto it = grid.begin(); it != grid.end(); ++it) {
        keys.push_back(it.key());
        std::vector<nlohmann::ordered_json> vals;
        if (it.value().is_array()) {
            for (const auto& v : it.value()) vals.push_back(v);
        } else {
            vals.push_back(it.value());
        }
        if (vals.empty()) throw ParamError("sweep grid entry '" + it.key() + "' is empty");
        points *= vals.size();
        values.push_back(std::move(vals));
    }

    std::vector<RecordPair> truth = true_pairs(ds);
    std::vector<EvalReport> reports(points);
    for (std::size_t idx = 0; idx < points; ++idx) {
        nlohmann::ordered_json params;
        std::size_t rem = idx;
        for (std::size_t k = keys.size(); k-- > 0;) {
            params[keys[k]] = values[k][rem % values[k].size()];
            rem /= values[k].size();
        }
        if (!params.contains("seed")) params["seed"] = derive_seed(base_seed, idx);
        params["threads"] = threads;
        MethodOutput out = run_blocking(ds, method, params);
        reports[idx] = score_output(out, truth, ds.n());
    }
    return reports;
}

std::vector<ScalingPoint> scaling_sweep(const ScalingConfig& config,
                                        std::span<const uint32_t> sizes) {
    if (sizes.size() < 2) throw ParamError("scaling sweep needs at least two sizes");
    for (std::size_t i = 1; i < sizes.size(); ++i) {
        if (sizes[i] <= sizes[i - 1]) throw ParamError("scaling sizes must be ascending");
    }
    std::vector<ScalingPoint> out;
    for (uint32_t n : sizes) {
        GeneratorPreset preset =
            config.generator == "noisy"
                ? noisy_analog_preset(n, 0.1, derive_seed(config.base_seed, n))
                : rldata_analog_preset(n, derive_seed(config.base_seed, n));
        Dataset ds = generate_preset(preset);

        nlohmann::ordered_json params = config.params;
        if (config.method == "klsh" &&
            (!params.contains("num_blocks") || params["num_blocks"].get<uint32_t>() == 0)) {
            params["num_blocks"] =
                static_cast<uint32_t>(std::ceil(std::sqrt(static_cast<double>(ds.n()))));
        }

        ScalingPoint pt;
        pt.n = ds.n();
        pt.seconds = std::numeric_limits<double>::infinity();
        int reps = std::max(1, config.repeats);
        for (int rep = 0; rep < reps; ++rep) {
            auto t0 = std::chrono::steady_clock::now();
            MethodOutput run = run_blocking(ds, config.method, params);
            double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (secs < pt.seconds) {
                pt.seconds = secs;
                pt.vocab_size = run.vocab_size;
                pt.timings = run.timings;
            }
        }
        out.push_back(std::move(pt));
    }
    return out;
}

std::string scaling_csv(const std::string& method, std::span<const ScalingPoint> points) {
    std::ostringstream out;
    out << "method,n,seconds,vocab_size\n";
    for (const auto& pt : points) {
        char line[160];
        std::snprintf(line, sizeof line, "%s,%u,%.6f,%zu\n", method.c_str(), pt.n, pt.seconds,
                      pt.vocab_size);
        out << line;
    }
    return out.str();
}

}  // namespace blockkit
