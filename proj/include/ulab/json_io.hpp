#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ulab/bounds.hpp"
#include "ulab/darray.hpp"
#include "ulab/permutations.hpp"
#include "ulab/random.hpp"

namespace ulab::io {

using Json = nlohmann::ordered_json;

// "%.17g"; non-finite values are rendered by to_canonical_json as null.
std::string format_double(double x);

// Compact single-line JSON with insertion-ordered keys and every float printed
// with 17 significant digits. Parsing the output and emitting it again yields
// the same bytes.
std::string to_canonical_json(const Json& value);

inline constexpr std::string_view kRecordCsvHeader =
    "q,k,n,trials,successes,p_hat,ci_low,ci_high,master_seed";

Json record_to_json(const ExperimentRecord& r);
std::string record_to_csv_row(const ExperimentRecord& r);

// {"q": int, "shape": [ints], "cells": [ints]}
Json darray_to_json(const DArray& a);
DArray darray_from_json(const Json& j);
// JSON object, or for d = 2 and q <= 9 a text grid with one row per line.
DArray parse_darray(std::string_view text, std::uint32_t q_for_grid);

// {"d": int, "n": int, "support": [[ints]]}
Json dpermutation_to_json(const DPermutation& m);
DPermutation dpermutation_from_json(const Json& j);

Json selection_to_json(const IndexSelection& s);
Json coupon_stats_to_json(const CouponStats& s, std::uint64_t master_seed);
Json deviation_to_json(const DeviationTable& t, std::uint64_t master_seed);
// Log quantities in natural log, or base 2 when log2 is set.
Json second_moment_to_json(const SecondMomentReport& r, bool log2);

}  // namespace ulab::io
