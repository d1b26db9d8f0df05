#include "ulab/json_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

#include "ulab/error.hpp"

namespace ulab::io {

namespace {

void emit(const Json& j, std::string& out) {
    switch (j.type()) {
    case Json::value_t::object: {
        out += '{';
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) out += ',';
            first = false;
            out += Json(key).dump();
            out += ':';
            emit(value, out);
        }
        out += '}';
        break;
    }
    case Json::value_t::array: {
        out += '[';
        bool first = true;
        for (const auto& value : j) {
            if (!first) out += ',';
            first = false;
            emit(value, out);
        }
        out += ']';
        break;
    }
    case Json::value_t::number_float: {
        const double x = j.get<double>();
        out += std::isfinite(x) ? format_double(x) : std::string("null");
        break;
    }
    default:
        out += j.dump();
    }
}

std::uint64_t get_uint(const Json& j, const char* what) {
    if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
        throw DomainError(std::string("expected a non-negative integer for ") + what);
    }
    return j.get<std::uint64_t>();
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw DomainError(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

Json parse_json_text(std::string_view text, const char* what) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw DomainError(std::string("invalid ") + what + " JSON: " + e.what());
    }
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string to_canonical_json(const Json& value) {
    std::string out;
    emit(value, out);
    return out;
}

Json record_to_json(const ExperimentRecord& r) {
    Json j;
    j["q"] = r.q;
    j["k"] = r.k;
    j["n"] = r.n;
    j["trials"] = r.trials;
    j["successes"] = r.successes;
    j["p_hat"] = r.p_hat;
    j["ci_low"] = r.ci_low;
    j["ci_high"] = r.ci_high;
    j["master_seed"] = r.master_seed;
    return j;
}

std::string record_to_csv_row(const ExperimentRecord& r) {
    return std::to_string(r.q) + ',' + std::to_string(r.k) + ',' + std::to_string(r.n) + ',' +
           std::to_string(r.trials) + ',' + std::to_string(r.successes) + ',' + format_double(r.p_hat) +
           ',' + format_double(r.ci_low) + ',' + format_double(r.ci_high) + ',' +
           std::to_string(r.master_seed);
}

Json darray_to_json(const DArray& a) {
    Json j;
    j["q"] = a.q();
    j["shape"] = a.shape().dims();
    j["cells"] = a.cells();
    return j;
}

DArray darray_from_json(const Json& j) {
    const auto q = get_uint(field(j, "q"), "q");
    if (q < 1 || q > 0xFFFFFFFFULL) throw DomainError("array q must be in [1, 2^32)");
    const Json& shape_json = field(j, "shape");
    const Json& cells_json = field(j, "cells");
    if (!shape_json.is_array() || !cells_json.is_array()) {
        throw DomainError("array \"shape\" and \"cells\" must be JSON arrays");
    }
    std::vector<std::size_t> dims;
    for (const auto& v : shape_json) dims.push_back(get_uint(v, "shape"));
    std::vector<Symbol> cells;
    cells.reserve(cells_json.size());
    for (const auto& v : cells_json) {
        const auto s = get_uint(v, "cells");
        if (s > 0xFFFFFFFFULL) throw DomainError("cell value out of range");
        cells.push_back(static_cast<Symbol>(s));
    }
    return DArray(Alphabet(static_cast<std::uint32_t>(q)), Shape(std::move(dims)), std::move(cells));
}

DArray parse_darray(std::string_view text, std::uint32_t q_for_grid) {
    std::size_t start = 0;
    while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
    if (start < text.size() && text[start] == '{') return darray_from_json(parse_json_text(text, "array"));

    if (q_for_grid < 1 || q_for_grid > 9) throw DomainError("text grids need an alphabet size between 1 and 9");
    std::vector<std::string> rows;
    std::string cur;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) rows.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) rows.push_back(std::move(cur));
    if (rows.empty()) throw DomainError("empty array text");
    const std::size_t width = rows.front().size();
    std::vector<Symbol> cells;
    for (const auto& row : rows) {
        if (row.size() != width) throw DomainError("grid rows have different lengths");
        for (char c : row) {
            if (c < '0' || c > '9') throw DomainError(std::string("invalid grid character '") + c + "'");
            cells.push_back(static_cast<Symbol>(c - '0'));
        }
    }
    return DArray(Alphabet(q_for_grid), Shape({rows.size(), width}), std::move(cells));
}

Json dpermutation_to_json(const DPermutation& m) {
    Json j;
    j["d"] = m.d();
    j["n"] = m.order();
    j["support"] = m.support();
    return j;
}

DPermutation dpermutation_from_json(const Json& j) {
    const auto d = get_uint(field(j, "d"), "d");
    const auto n = get_uint(field(j, "n"), "n");
    const Json& support_json = field(j, "support");
    if (!support_json.is_array()) throw DomainError("\"support\" must be a JSON array");
    std::vector<SupportVector> support;
    for (const auto& v : support_json) {
        if (!v.is_array()) throw DomainError("support entries must be arrays");
        SupportVector s;
        for (const auto& x : v) {
            const auto value = get_uint(x, "support");
            if (value > 0xFFFFFFFFULL) throw DomainError("support value out of range");
            s.push_back(static_cast<std::uint32_t>(value));
        }
        support.push_back(std::move(s));
    }
    return DPermutation(d, n, std::move(support));
}

Json selection_to_json(const IndexSelection& s) { return Json(s.sets); }

Json coupon_stats_to_json(const CouponStats& s, std::uint64_t master_seed) {
    Json j;
    j["q"] = s.q;
    j["trials"] = s.trials;
    j["mean"] = s.mean;
    j["variance"] = s.variance;
    j["standard_error"] = s.standard_error();
    j["c_q"] = threshold_constant(s.q);
    Json cdf = Json::array();
    for (const auto& [t, f] : s.empirical_cdf) cdf.push_back(Json::array({t, f}));
    j["empirical_cdf"] = std::move(cdf);
    j["master_seed"] = master_seed;
    j["generator"] = std::string(kGeneratorName);
    return j;
}

Json deviation_to_json(const DeviationTable& t, std::uint64_t master_seed) {
    Json j;
    j["q"] = t.q;
    j["k"] = t.k;
    j["trials"] = t.trials;
    j["center"] = t.center;
    j["mean_length"] = t.mean_length;
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        Json row;
        row["t"] = r.t;
        row["exceedances"] = r.exceedances;
        row["frequency"] = r.frequency;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["master_seed"] = master_seed;
    j["generator"] = std::string(kGeneratorName);
    return j;
}

Json second_moment_to_json(const SecondMomentReport& r, bool log2) {
    const double scale = log2 ? 1.0 / std::log(2.0) : 1.0;
    Json j;
    j["d"] = r.d;
    j["q"] = r.q;
    j["k"] = r.k;
    j["epsilon"] = r.epsilon;
    j["log_base"] = log2 ? "2" : "e";
    j["log_n"] = r.log_n.log() * scale;
    j["n"] = r.n ? Json(*r.n) : Json(nullptr);
    j["log_mu"] = r.log_mu.log() * scale;
    j["log_mu_floor"] = r.mu_floor.log() * scale;
    j["mu_floor_holds"] = r.mu_floor_holds;
    j["max_Ld_times_kd"] = r.max_Ld_times_kd;
    j["log_max_Ld_times_kd"] = r.log_max_Ld_times_kd * scale;
    j["argmax_i"] = r.argmax_i;
    j["log_delta_over_mu_bound"] = r.log_delta_over_mu_bound.log() * scale;
    j["delta_over_mu_bound_below_one"] = r.log_delta_over_mu_bound.log() < 0;
    j["epsilon_in_proved_regime"] = r.epsilon_in_proved_regime;
    return j;
}

}  // namespace ulab::io
