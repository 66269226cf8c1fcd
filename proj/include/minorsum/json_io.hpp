#pragma once

#include "minorsum/groups.hpp"
#include "minorsum/index_set.hpp"
#include "minorsum/matrix.hpp"
#include "minorsum/polynomial.hpp"
#include "minorsum/rings.hpp"
#include "minorsum/sums.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace minorsum {

/// Insertion-ordered JSON so emitted documents have a stable field order.
using Json = nlohmann::ordered_json;

/// Raised for malformed instance data; the message names the offending
/// field path so callers can report a usable diagnostic.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& msg) {
    throw ParseError(where + ": " + msg);
}

const Json& require_field(const Json& j, const char* key, const std::string& where);
long require_long(const Json& j, const std::string& where);
std::string require_string(const Json& j, const std::string& where);

Json ring_spec_to_json(const RingSpec& spec);
RingSpec ring_spec_from_json(const Json& j, const std::string& where);

Json index_set_to_json(const IndexSet& s);
IndexSet index_set_from_json(const Json& j, int universe, const std::string& where);

Json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j, const std::string& where);

Json sign_vector_to_json(const SignVector& q);
SignVector sign_vector_from_json(const Json& j, const std::string& where);

/// Reads the "ring" field of a serialized matrix (or any object carrying
/// one) so the caller can build the ring before parsing elements.
RingSpec peek_ring_spec(const Json& j, const std::string& where);

template <Ring R>
typename R::Elem element_from_json(const R& ring, const Json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return ring.parse(j.template get<std::string>());
        } catch (const std::exception& e) {
            parse_fail(where, e.what());
        }
    }
    if (j.is_number_integer())
        return ring.from_integer(BigInt(j.template get<std::int64_t>()));
    parse_fail(where, "expected a ring element (decimal string)");
}

template <Ring R>
Json matrix_to_json(const Matrix<R>& m) {
    Json j;
    j["ring"] = ring_spec_to_json(m.ring().spec());
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json grid = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.ring().to_string(m(i, c)));
        grid.push_back(std::move(row));
    }
    j["entries"] = std::move(grid);
    return j;
}

template <Ring R>
Matrix<R> matrix_from_json(const R& ring, const Json& j, const std::string& where) {
    if (!j.is_object()) parse_fail(where, "expected a matrix object");
    if (ring_spec_from_json(require_field(j, "ring", where), where + ".ring") != ring.spec())
        parse_fail(where + ".ring", "ring does not match the enclosing context");
    const long rows = require_long(require_field(j, "rows", where), where + ".rows");
    const long cols = require_long(require_field(j, "cols", where), where + ".cols");
    if (rows < 1 || cols < 1) parse_fail(where, "rows and cols must be positive");
    const Json& grid = require_field(j, "entries", where);
    if (!grid.is_array() || grid.size() != static_cast<std::size_t>(rows))
        parse_fail(where + ".entries", "expected " + std::to_string(rows) + " rows");
    Matrix<R> m(ring, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Json& row = grid[i];
        const std::string row_where = where + ".entries[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != static_cast<std::size_t>(cols))
            parse_fail(row_where, "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < m.cols(); ++c)
            m.set(i, c, element_from_json(ring, row[c], row_where + "[" + std::to_string(c) + "]"));
    }
    return m;
}

template <Ring R>
Json polynomial_to_json(const R& ring, const Polynomial<R>& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(ring.to_string(c));
    Json j;
    j["coeffs_low_to_high"] = std::move(coeffs);
    return j;
}

Json pair_sum_instance_to_json(const RingSpec& spec, const PairSumInstance& inst);

/// Expects {"ring":…, "n":…, "s":…, "t":…, "u":…, "v":…}; the ring field is
/// peeked separately by the caller to pick R.
PairSumInstance pair_sum_instance_from_json(const Json& j, const std::string& where);

template <Ring R>
Json cycle_config_to_json(const CycleConfig<R>& cfg) {
    Json j;
    j["d"] = cfg.cycle_length();
    j["dims"] = cfg.dims;
    if (!cfg.k.empty()) j["k"] = cfg.k;
    const auto mats = [](const std::vector<Matrix<R>>& v) {
        Json arr = Json::array();
        for (const auto& m : v) arr.push_back(matrix_to_json(m));
        return arr;
    };
    j["A"] = mats(cfg.a_mats);
    if (!cfg.b_mats.empty()) j["B"] = mats(cfg.b_mats);
    if (!cfg.c_mats.empty()) j["C"] = mats(cfg.c_mats);
    if (!cfg.d_mats.empty()) j["D"] = mats(cfg.d_mats);
    const auto sets = [](const std::vector<IndexSet>& v) {
        Json arr = Json::array();
        for (const auto& s : v) arr.push_back(index_set_to_json(s));
        return arr;
    };
    if (!cfg.x_sets.empty()) j["X"] = sets(cfg.x_sets);
    if (!cfg.y_sets.empty()) j["Y"] = sets(cfg.y_sets);
    return j;
}

/// Reads a CycleConfig. B, C, k, X, Y travel together (cycle minor-product
/// sums); D is independent (charpoly sums). Validation of the cyclic
/// dimension constraints happens in the config's validate methods, not here.
template <Ring R>
CycleConfig<R> cycle_config_from_json(const R& ring, const Json& j, const std::string& where) {
    if (!j.is_object()) parse_fail(where, "expected a config object");
    CycleConfig<R> cfg;
    const Json& dims = require_field(j, "dims", where);
    if (!dims.is_array() || dims.empty()) parse_fail(where + ".dims", "expected a nonempty array");
    for (std::size_t i = 0; i < dims.size(); ++i)
        cfg.dims.push_back(static_cast<int>(require_long(dims[i], where + ".dims[" + std::to_string(i) + "]")));
    if (j.contains("d") && require_long(j["d"], where + ".d") != static_cast<long>(cfg.dims.size()))
        parse_fail(where + ".d", "does not match the length of dims");
    const int d = cfg.cycle_length();

    const auto mats = [&](const char* key) {
        std::vector<Matrix<R>> out;
        const Json& arr = require_field(j, key, where);
        const std::string arr_where = where + "." + key;
        if (!arr.is_array() || arr.size() != static_cast<std::size_t>(d))
            parse_fail(arr_where, "expected " + std::to_string(d) + " matrices");
        for (std::size_t i = 0; i < arr.size(); ++i)
            out.push_back(matrix_from_json(ring, arr[i], arr_where + "[" + std::to_string(i) + "]"));
        return out;
    };
    cfg.a_mats = mats("A");
    if (j.contains("D")) cfg.d_mats = mats("D");

    const bool has_windows = j.contains("B") || j.contains("C") || j.contains("k") || j.contains("X") || j.contains("Y");
    if (has_windows) {
        cfg.b_mats = mats("B");
        cfg.c_mats = mats("C");
        const Json& karr = require_field(j, "k", where);
        if (!karr.is_array() || karr.size() != static_cast<std::size_t>(d))
            parse_fail(where + ".k", "expected " + std::to_string(d) + " minor orders");
        for (std::size_t i = 0; i < karr.size(); ++i)
            cfg.k.push_back(static_cast<int>(require_long(karr[i], where + ".k[" + std::to_string(i) + "]")));
        const Json& xs = require_field(j, "X", where);
        const Json& ys = require_field(j, "Y", where);
        if (!xs.is_array() || xs.size() != static_cast<std::size_t>(d)) parse_fail(where + ".X", "expected " + std::to_string(d) + " index sets");
        if (!ys.is_array() || ys.size() != static_cast<std::size_t>(d)) parse_fail(where + ".Y", "expected " + std::to_string(d) + " index sets");
        for (int i = 0; i < d; ++i) {
            const auto iu = static_cast<std::size_t>(i);
            cfg.x_sets.push_back(index_set_from_json(xs[iu], static_cast<int>(cfg.b_mats[iu].rows()),
                                                     where + ".X[" + std::to_string(i) + "]"));
            cfg.y_sets.push_back(index_set_from_json(ys[iu], static_cast<int>(cfg.c_mats[iu].cols()),
                                                     where + ".Y[" + std::to_string(i) + "]"));
        }
    }
    return cfg;
}

/// Finds the ring declared by a config's first matrix so dispatch can
/// happen before element parsing.
RingSpec peek_cycle_config_ring(const Json& j, const std::string& where);

}  // namespace minorsum
