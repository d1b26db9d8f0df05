#include "ulab/cli.hpp"

#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "ulab/bounds.hpp"
#include "ulab/darray.hpp"
#include "ulab/error.hpp"
#include "ulab/json_io.hpp"
#include "ulab/permutations.hpp"
#include "ulab/random.hpp"
#include "ulab/words.hpp"

namespace ulab::cli {

namespace {

using io::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr const char* kSeedVariable = "UNIVERSALITY_LAB_SEED";

struct Params {
    std::uint32_t q = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    std::size_t n = 0;
    std::vector<std::size_t> n_values;
    std::size_t trials = 0;
    std::size_t length = 0;
    std::vector<double> t_values;
    double epsilon = 0.1;
    bool log2 = false;
    std::string word;
    std::string pattern;
    std::string array;
    std::string array_file;
    std::string pattern_array;
    std::string pattern_file;
    std::string perm;
    std::string dperm;
    std::string dperm_file;
    std::size_t random_order = 0;
    std::string strategy = "auto";
    std::string mode = "auto";
    unsigned long long budget = 1ULL << 26;
    std::size_t attempts = 2000;
    std::size_t max_order = 64;
    std::string format = "json";
    std::string output;
    std::string seed;
    unsigned threads = 1;
};

std::uint64_t parse_seed_text(const std::string& text) {
    if (text.empty() || text.size() > 20 ||
        text.find_first_not_of("0123456789") != std::string::npos) {
        throw UsageError("invalid seed \"" + text + "\": expected an unsigned 64-bit integer");
    }
    errno = 0;
    const unsigned long long value = std::strtoull(text.c_str(), nullptr, 10);
    if (errno == ERANGE) throw UsageError("invalid seed \"" + text + "\": out of range");
    return value;
}

// --seed, else the environment fallback; stochastic commands have no default.
std::uint64_t required_seed(const Params& p) {
    if (!p.seed.empty()) return parse_seed_text(p.seed);
    const char* env = std::getenv(kSeedVariable);
    if (env != nullptr && *env != '\0') return parse_seed_text(env);
    throw UsageError(std::string("a seed is required: pass --seed or set ") + kSeedVariable);
}

std::uint64_t seed_or_zero(const Params& p) {
    if (!p.seed.empty()) return parse_seed_text(p.seed);
    const char* env = std::getenv(kSeedVariable);
    if (env != nullptr && *env != '\0') return parse_seed_text(env);
    return 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string line(const Json& j) { return io::to_canonical_json(j) + '\n'; }

Word input_word(const Params& p) { return parse_word(p.word, p.q); }

void require_array_input(const std::string& inline_text, const std::string& path, const char* flag) {
    if (!inline_text.empty() && !path.empty()) {
        throw UsageError(std::string("pass either --") + flag + " or --" + flag + "-file, not both");
    }
    if (inline_text.empty() && path.empty()) {
        throw UsageError(std::string("--") + flag + " or --" + flag + "-file is required");
    }
}

DArray input_array(const std::string& inline_text, const std::string& path, const char* flag,
                   std::uint32_t q) {
    require_array_input(inline_text, path, flag);
    if (!path.empty()) return io::parse_darray(read_file(path), q);
    return io::parse_darray(inline_text, q);
}

DPermutation input_dperm(const Params& p) {
    const int given = !p.perm.empty() + !p.dperm.empty() + !p.dperm_file.empty();
    if (given != 1) throw UsageError("pass exactly one of --perm, --dperm, --dperm-file");
    if (!p.perm.empty()) return permutation_to_dpermutation(parse_permutation(p.perm));
    const std::string text = p.dperm.empty() ? read_file(p.dperm_file) : p.dperm;
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw DomainError(std::string("invalid d-permutation JSON: ") + e.what());
    }
    return io::dpermutation_from_json(j);
}

std::string records_output(const std::vector<ExperimentRecord>& records, const Params& p,
                           std::optional<Json> extra = std::nullopt) {
    std::string text;
    if (p.format == "csv") {
        text = std::string(io::kRecordCsvHeader) + '\n';
        for (const auto& r : records) text += io::record_to_csv_row(r) + '\n';
    } else if (p.format == "jsonl") {
        for (const auto& r : records) text += line(io::record_to_json(r));
    } else {
        Json j;
        j["generator"] = std::string(kGeneratorName);
        Json list = Json::array();
        for (const auto& r : records) list.push_back(io::record_to_json(r));
        j["records"] = std::move(list);
        if (extra) {
            for (const auto& [key, value] : extra->items()) j[key] = value;
        }
        text = line(j);
    }
    return text;
}

void require_json(const Params& p, const std::string& command) {
    if (p.format != "json") throw UsageError("--format " + p.format + " is not available for " + command);
}

// ---- subcommands ----------------------------------------------------------

std::string cmd_word_check(const Params& p) {
    const Word w = input_word(p);
    const std::size_t nu = universality_index(w);
    Json j;
    j["universal"] = nu >= p.k;
    j["nu"] = nu;
    return line(j);
}

std::string cmd_word_decompose(const Params& p) {
    const auto dec = decompose(input_word(p));
    Json j;
    j["nu"] = dec.index();
    Json blocks = Json::array();
    for (const auto& b : dec.blocks) blocks.push_back(format_word(b));
    j["blocks"] = std::move(blocks);
    j["tail"] = format_word(dec.tail);
    return line(j);
}

std::string cmd_word_witness(const Params& p) {
    Json j;
    j["witness"] = format_word(non_contained_witness(input_word(p), p.k));
    return line(j);
}

std::string cmd_word_gen(const Params& p, bool has_k, bool has_length) {
    if (has_k == has_length) throw UsageError("pass exactly one of --k (minimal universal word) or --length (random word)");
    Json j;
    if (has_k) {
        j["word"] = format_word(minimal_universal_word(p.q, p.k));
    } else {
        const std::uint64_t seed = required_seed(p);
        j["word"] = format_word(sample_uniform_word(p.q, p.length, RandomSource{seed, 0}));
        j["master_seed"] = seed;
        j["generator"] = std::string(kGeneratorName);
    }
    return line(j);
}

std::string cmd_word_count(const Params& p, bool has_k) {
    const Word w = input_word(p);
    if (p.pattern.empty() == !has_k) throw UsageError("pass exactly one of --pattern or --k");
    Json j;
    if (!p.pattern.empty()) {
        const Word u = parse_word(p.pattern, p.q);
        j["pattern"] = format_word(u);
        j["count"] = count_subword_occurrences(w, u).str();
    } else {
        Json counts = Json::object();
        BigCount total = 0;
        for_each_word(p.q, p.k, [&](const Word& u) {
            BigCount c = count_subword_occurrences(w, u);
            total += c;
            counts[format_word(u)] = c.str();
            return true;
        });
        j["k"] = p.k;
        j["counts"] = std::move(counts);
        j["total"] = total.str();
    }
    return line(j);
}

std::string cmd_word_repeat(const Params& p) {
    const Word w = input_word(p);
    const Word u = find_repeated_subword(w, p.k);
    Json j;
    j["subword"] = format_word(u);
    j["count"] = count_subword_occurrences(w, u).str();
    return line(j);
}

std::string cmd_mc_words(const Params& p) {
    const std::uint64_t seed = required_seed(p);
    const auto scan = threshold_scan(p.q, p.k, p.n_values, p.trials, RandomSource{seed, 0}, p.threads);
    Json extra;
    extra["crossing"] = scan.crossing ? Json(*scan.crossing) : Json(nullptr);
    extra["bracketed"] = scan.crossing.has_value();
    return records_output(scan.records, p, extra);
}

std::string cmd_mc_coupon(const Params& p) {
    require_json(p, "mc-coupon");
    const std::uint64_t seed = required_seed(p);
    const auto stats = coupon_time_stats(p.q, p.trials, RandomSource{seed, 0}, p.threads);
    return line(io::coupon_stats_to_json(stats, seed));
}

std::string cmd_mc_deviation(const Params& p) {
    if (p.format == "jsonl") throw UsageError("--format jsonl is not available for mc-deviation");
    const std::uint64_t seed = required_seed(p);
    const auto table = deviation_scan(p.q, p.k, p.trials, p.t_values, RandomSource{seed, 0}, p.threads);
    if (p.format == "csv") {
        std::string text = "t,exceedances,frequency\n";
        for (const auto& r : table.rows) {
            text += io::format_double(r.t) + ',' + std::to_string(r.exceedances) + ',' +
                    io::format_double(r.frequency) + '\n';
        }
        return text;
    }
    return line(io::deviation_to_json(table, seed));
}

std::string cmd_array_check(const Params& p) {
    require_json(p, "array-check");
    require_array_input(p.array, p.array_file, "array");
    require_array_input(p.pattern_array, p.pattern_file, "pattern");
    const DArray host = input_array(p.array, p.array_file, "array", p.q);
    const DArray pattern = input_array(p.pattern_array, p.pattern_file, "pattern", p.q);
    const auto selection = find_embedding_array(host, pattern);
    Json j;
    j["contained"] = selection.has_value();
    j["selection"] = selection ? io::selection_to_json(*selection) : Json(nullptr);
    return line(j);
}

UniversalityStrategy parse_strategy(const std::string& s) {
    if (s == "selection-set") return UniversalityStrategy::kSelectionSet;
    if (s == "per-target") return UniversalityStrategy::kPerTarget;
    return UniversalityStrategy::kAuto;
}

std::string cmd_array_universal(const Params& p) {
    require_json(p, "array-universal");
    const DArray a = input_array(p.array, p.array_file, "array", p.q);
    Json j;
    j["universal"] = is_k_universal_array(a, p.k, parse_strategy(p.strategy));
    j["k"] = p.k;
    return line(j);
}

std::string cmd_array_search(const Params& p, std::ostream& err) {
    require_json(p, "array-search");
    const std::uint64_t seed = seed_or_zero(p);
    MinimalOrderOptions options;
    options.mode = p.mode == "exhaustive"   ? SearchMode::kExhaustive
                   : p.mode == "randomized" ? SearchMode::kRandomized
                                            : SearchMode::kAuto;
    options.exhaustive_budget = p.budget;
    options.random_attempts = p.attempts;
    options.max_order = p.max_order;
    options.source = RandomSource{seed, 0};
    auto last = std::chrono::steady_clock::now();
    options.progress = [&err, &last](const SearchProgress& s) {
        const auto now = std::chrono::steady_clock::now();
        if (now - last < std::chrono::seconds(2)) return;
        last = now;
        err << "array-search: order " << s.order << ", " << s.examined << " / " << s.total << " examined\n";
        err.flush();
    };
    const auto result = minimal_universal_order(p.d, p.q, p.k, options);
    Json j;
    j["d"] = p.d;
    j["q"] = p.q;
    j["k"] = p.k;
    j["order"] = result.order;
    j["exact"] = result.exact;
    j["proven_lower_bound"] = result.proven_lower_bound;
    j["counting_floor"] = result.counting_floor;
    j["ruled_out_through"] = result.ruled_out_through;
    j["witness"] = result.witness ? io::darray_to_json(*result.witness) : Json(nullptr);
    j["mode"] = p.mode;
    j["master_seed"] = seed;
    return line(j);
}

std::string cmd_mc_array(const Params& p) {
    const std::uint64_t seed = required_seed(p);
    std::vector<ExperimentRecord> records;
    for (std::size_t n : p.n_values) {
        records.push_back(estimate_array_universal_probability(p.d, p.q, p.k, n, p.trials,
                                                               RandomSource{seed, n}, p.threads));
    }
    Json extra;
    extra["d"] = p.d;
    return records_output(records, p, extra);
}

std::string cmd_bounds_report(const Params& p) {
    require_json(p, "bounds-report");
    return line(io::second_moment_to_json(second_moment_report(static_cast<std::uint32_t>(p.d), p.q, p.k, p.epsilon), p.log2));
}

std::string cmd_perm_check(const Params& p) {
    require_json(p, "perm-check");
    const DPermutation m = input_dperm(p);
    Json j;
    j["contained"] = dperm_contains_pattern(m, parse_pattern(p.pattern));
    return line(j);
}

std::string cmd_perm_universal(const Params& p) {
    require_json(p, "perm-universal");
    const DPermutation m = input_dperm(p);
    Json j;
    j["universal"] = is_k_pattern_universal(m, p.k);
    j["k"] = p.k;
    return line(j);
}

std::string cmd_perm_lis(const Params& p) {
    require_json(p, "perm-lis");
    Json j;
    if (p.random_order > 0) {
        if (!p.perm.empty() || !p.dperm.empty() || !p.dperm_file.empty()) {
            throw UsageError("--random-order cannot be combined with an input permutation");
        }
        const std::uint64_t seed = required_seed(p);
        const Permutation sigma = sample_random_permutation(p.random_order, RandomSource{seed, 0});
        j["n"] = p.random_order;
        j["length"] = longest_monotone_subsequence(permutation_to_dpermutation(sigma));
        j["master_seed"] = seed;
        j["generator"] = std::string(kGeneratorName);
    } else {
        const DPermutation m = input_dperm(p);
        j["n"] = m.order();
        j["length"] = longest_monotone_subsequence(m);
    }
    return line(j);
}

// ---- option wiring --------------------------------------------------------

CLI::Option* add_q(CLI::App* sub, Params& p, bool required = true) {
    auto* opt = sub->add_option("--q,--alphabet-size", p.q, "alphabet size q")->check(CLI::PositiveNumber);
    if (required) opt->required();
    return opt;
}

void add_format(CLI::App* sub, Params& p, std::vector<std::string> allowed) {
    sub->add_option("--format", p.format, "output format")->check(CLI::IsMember(allowed));
}

void add_output(CLI::App* sub, Params& p) {
    sub->add_option("--output", p.output, "write the result to this file instead of stdout");
}

void add_seed(CLI::App* sub, Params& p) {
    sub->add_option("--seed", p.seed, std::string("master seed (fallback: ") + kSeedVariable + ")");
}

void add_threads(CLI::App* sub, Params& p) {
    sub->add_option("--threads", p.threads, "worker threads; results do not depend on it")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Params p;
    CLI::App app{"Universal words and arrays: exact checks, constructions, bounds and Monte Carlo", "ulab"};
    app.require_subcommand(1, 1);

    std::map<std::string, std::function<std::string()>> actions;
    auto sub = [&](const std::string& name, const std::string& help) { return app.add_subcommand(name, help); };

    {
        auto* s = sub("word-check", "is the word k-universal; reports its universality index");
        add_q(s, p);
        s->add_option("--k", p.k, "universality order")->required();
        s->add_option("--word", p.word, "word over [q]")->required();
        add_format(s, p, {"json"});
        add_output(s, p);
        actions["word-check"] = [&] { return cmd_word_check(p); };
    }
    {
        auto* s = sub("word-decompose", "greedy decomposition into universal blocks and a tail");
        add_q(s, p);
        s->add_option("--word", p.word, "word over [q]")->required();
        add_format(s, p, {"json"});
        add_output(s, p);
        actions["word-decompose"] = [&] { return cmd_word_decompose(p); };
    }
    {
        auto* s = sub("word-witness", "a length-(nu+1) word not contained in a non-k-universal word");
        add_q(s, p);
        s->add_option("--k", p.k, "universality order")->required();
        s->add_option("--word", p.word, "word over [q]")->required();
        add_format(s, p, {"json"});
        add_output(s, p);
        actions["word-witness"] = [&] { return cmd_word_witness(p); };
    }
    {
        auto* s = sub("word-gen", "minimal k-universal word (--k) or a uniform random word (--length, --seed)");
        add_q(s, p);
        auto* k = s->add_option("--k", p.k, "universality order");
        auto* length = s->add_option("--length", p.length, "length of a uniform random word");
        add_seed(s, p);
        add_format(s, p, {"json"});
        add_output(s, p);
        actions["word-gen"] = [&p, k, length] { return cmd_word_gen(p, k->count() > 0, length->count() > 0); };
    }
    {
        auto* s = sub("word-count", "embedding counts of one pattern (--pattern) or of every length-k word (--k)");
        add_q(s, p);
        s->add_option("--word", p.word, "word over [q]")->required();
        s->add_option("--pattern", p.pattern, "subword to count");
        auto* k = s->add_option("--k", p.k, "count every word of this length");
        add_format(s, p, {"json"});
        add_output(s, p);
        actions["word-count"] = [&p, k] { return cmd_word_count(p, k->count() > 0); };
    }
    {
        auto* s = sub("word-repeat", "first length-k subword embedded at least twice");
        add_q(s, p);
        s->add_option("--k", p.k, "subword length")->required();
        s->add_option("--word", p.word, "word over [q]")->required();
        add_format(s, p, {"json"});
        add_output(s, p);
        actions["word-repeat"] = [&] { return cmd_word_repeat(p); };
    }
    {
        auto* s = sub("mc-words", "P[uniform word of length n is k-universal] over a grid of n");
        add_q(s, p);
        s->add_option("--k", p.k, "universality order")->required();
        s->add_option("--n", p.n_values, "word lengths, comma separated")->required()->delimiter(',');
        s->add_option("--trials", p.trials, "trials per length")->required()->check(CLI::PositiveNumber);
        add_seed(s, p);
        add_threads(s, p);
        add_format(s, p, {"json", "csv", "jsonl"});
        add_output(s, p);
        actions["mc-words"] = [&] { return cmd_mc_words(p); };
    }
    {
        auto* s = sub("mc-coupon", "coupon collector time statistics");
        add_q(s, p);
        s->add_option("--trials", p.trials, "number of blocks")->required()->check(CLI::PositiveNumber);
        add_seed(s, p);
        add_threads(s, p);
        add_format(s, p, {"json"});
        add_output(s, p);
        actions["mc-coupon"] = [&] { return cmd_mc_coupon(p); };
    }
    {
        auto* s = sub("mc-deviation", "tail frequencies of | |U^(k)| - c_q k | at the sqrt(k) scale");
        add_q(s, p);
        s->add_option("--k", p.k, "number of coupon blocks")->required();
        s->add_option("--trials", p.trials, "trials")->required()->check(CLI::PositiveNumber);
        s->add_option("--t", p.t_values, "multiples of sqrt(k), comma separated")->required()->delimiter(',');
        add_seed(s, p);
        add_threads(s, p);
        add_format(s, p, {"json", "csv"});
        add_output(s, p);
        actions["mc-deviation"] = [&] { return cmd_mc_deviation(p); };
    }
    {
        auto* s = sub("array-check", "does the array contain the pattern array; reports the least selection");
        add_q(s, p, false)->description("alphabet size for text-grid inputs");
        s->add_option("--array", p.array, "host array: JSON object or text grid");
        s->add_option("--array-file", p.array_file, "file holding the host array");
        s->add_option("--pattern", p.pattern_array, "pattern array: JSON object or text grid");
        s->add_option("--pattern-file", p.pattern_file, "file holding the pattern array");
        add_format(s, p, {"json"});
        add_output(s, p);
        actions["array-check"] = [&] { return cmd_array_check(p); };
    }
    {
        auto* s = sub("array-universal", "is the array k-universal");
        add_q(s, p, false)->description("alphabet size for text-grid inputs");
        s->add_option("--array", p.array, "array: JSON object or text grid");
        s->add_option("--array-file", p.array_file, "file holding the array");
        s->add_option("--k", p.k, "universality order")->required()->check(CLI::PositiveNumber);
        s->add_option("--strategy", p.strategy, "auto, selection-set or per-target")
            ->check(CLI::IsMember({"auto", "selection-set", "per-target"}));
        add_format(s, p, {"json"});
        add_output(s, p);
        actions["array-universal"] = [&] { return cmd_array_universal(p); };
    }
    {
        auto* s = sub("array-search", "smallest order of a k-universal d-array over [q]");
        s->add_option("--d", p.d, "dimension")->required()->check(CLI::PositiveNumber);
        add_q(s, p);
        s->add_option("--k", p.k, "universality order")->required()->check(CLI::PositiveNumber);
        s->add_option("--mode", p.mode, "auto, exhaustive or randomized")
            ->check(CLI::IsMember({"auto", "exhaustive", "randomized"}));
        s->add_option("--budget", p.budget, "largest q^(n^d) swept exhaustively");
        s->add_option("--attempts", p.attempts, "random arrays tried per order");
        s->add_option("--max-order", p.max_order, "give up above this order");
        add_seed(s, p);
        add_format(s, p, {"json"});
        add_output(s, p);
        actions["array-search"] = [&] { return cmd_array_search(p, err); };
    }
    {
        auto* s = sub("mc-array", "P[uniform order-n d-array is k-universal]");
        s->add_option("--d", p.d, "dimension")->required()->check(CLI::PositiveNumber);
        add_q(s, p);
        s->add_option("--k", p.k, "universality order")->required()->check(CLI::PositiveNumber);
        s->add_option("--n", p.n_values, "orders, comma separated")->required()->delimiter(',');
        s->add_option("--trials", p.trials, "trials per order")->required()->check(CLI::PositiveNumber);
        add_seed(s, p);
        add_threads(s, p);
        add_format(s, p, {"json", "csv", "jsonl"});
        add_output(s, p);
        actions["mc-array"] = [&] { return cmd_mc_array(p); };
    }
    {
        auto* s = sub("bounds-report", "second-moment quantities at n = ceil((1+eps)(k/e) q^(k^(d-1)/d))");
        s->add_option("--d", p.d, "dimension")->required()->check(CLI::PositiveNumber);
        add_q(s, p);
        s->add_option("--k", p.k, "pattern order")->required()->check(CLI::PositiveNumber);
        s->add_option("--epsilon", p.epsilon, "epsilon (default 0.1)");
        s->add_flag("--log2", p.log2, "report logarithms in base 2");
        add_format(s, p, {"json"});
        add_output(s, p);
        actions["bounds-report"] = [&] { return cmd_bounds_report(p); };
    }
    auto add_dperm_inputs = [&p](CLI::App* s) {
        s->add_option("--perm", p.perm, "permutation in one-line notation, e.g. 2413");
        s->add_option("--dperm", p.dperm, "d-permutation as JSON");
        s->add_option("--dperm-file", p.dperm_file, "file holding a d-permutation as JSON");
    };
    {
        auto* s = sub("perm-check", "does the d-permutation contain the d-pattern");
        add_dperm_inputs(s);
        s->add_option("--pattern", p.pattern, "d-pattern, components separated by '/', e.g. 21/12")->required();
        add_format(s, p, {"json"});
        add_output(s, p);
        actions["perm-check"] = [&] { return cmd_perm_check(p); };
    }
    {
        auto* s = sub("perm-universal", "does the d-permutation contain every d-pattern of order k");
        add_dperm_inputs(s);
        s->add_option("--k", p.k, "pattern order")->required()->check(CLI::PositiveNumber);
        add_format(s, p, {"json"});
        add_output(s, p);
        actions["perm-universal"] = [&] { return cmd_perm_universal(p); };
    }
    {
        auto* s = sub("perm-lis", "longest monotone subsequence of a d-permutation or of a random permutation");
        add_dperm_inputs(s);
        s->add_option("--random-order", p.random_order, "sample a uniform permutation of this order");
        add_seed(s, p);
        add_format(s, p, {"json"});
        add_output(s, p);
        actions["perm-lis"] = [&] { return cmd_perm_lis(p); };
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        auto parsed = app.get_subcommands();
        const std::string help = parsed.empty() ? app.help() : parsed.back()->help();
        if (e.get_exit_code() == 0) {
            out << help;
            return kExitOk;
        }
        err << e.what() << '\n' << help;
        return kExitUsageError;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        const std::string text = actions.at(name)();
        if (p.output.empty()) {
            out << text;
            out.flush();
        } else {
            std::ofstream file(p.output, std::ios::binary);
            if (!file) throw UsageError("cannot write file \"" + p.output + "\"");
            file << text;
        }
        return kExitOk;
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return kExitUsageError;
    } catch (const DomainError& e) {
        err << e.what() << '\n';
        return kExitDomainError;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return kExitDomainError;
    }
}

}  // namespace ulab::cli
