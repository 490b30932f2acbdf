#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "shiftgb/completion.hpp"
#include "shiftgb/groebner.hpp"
#include "shiftgb/matrix.hpp"

namespace shiftgb {

// All JSON emitted by the library uses ordered_json so that key order, and
// with it the serialized byte stream, is deterministic.
using json = nlohmann::ordered_json;

inline json matrix_to_json(const ScalarMatrix& m) {
    json j;
    j["field"] = m.field().token();
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.cols(); ++k) {
            const Scalar& s = m.at(i, k);
            if (m.field().is_rationals())
                row.push_back(s.str());
            else
                row.push_back(s.residue_value());
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

namespace detail {

inline Scalar scalar_from_json(const json& v, const FieldSpec& fs) {
    if (v.is_string())
        return Scalar::parse(v.get<std::string>(), fs);
    if (v.is_number_integer())
        return Scalar::from_int(v.get<long long>(), fs);
    throw value_error("matrix entry must be an integer or a scalar string");
}

inline const json& require_key(const json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end())
        throw value_error("missing key '" + key + "'");
    return *it;
}

inline int int_key(const json& j, const std::string& key) {
    const json& v = require_key(j, key);
    if (!v.is_number_integer())
        throw value_error("key '" + key + "' must be an integer");
    return v.get<int>();
}

} // namespace detail

inline ScalarMatrix matrix_from_json(const json& j) {
    if (!j.is_object())
        throw value_error("matrix JSON must be an object");
    const FieldSpec fs =
        FieldSpec::from_token(detail::require_key(j, "field").get<std::string>());
    const int rows = detail::int_key(j, "rows");
    const int cols = detail::int_key(j, "cols");
    if (rows < 0 || cols <= 0)
        throw value_error("matrix dimensions must be positive (rows may be 0)");
    const json& entries = detail::require_key(j, "entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw value_error("entries must be an array of " + std::to_string(rows) + " rows");
    ScalarMatrix m(rows, cols, fs);
    for (int i = 0; i < rows; ++i) {
        const json& row = entries[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw value_error("row " + std::to_string(i) + " must have " + std::to_string(cols) +
                              " entries");
        for (int k = 0; k < cols; ++k)
            m.set(i, k, detail::scalar_from_json(row[static_cast<std::size_t>(k)], fs));
    }
    return m;
}

// Instance files are the matrix object, optionally annotated with "n" and
// "d". Explicit arguments win only by agreeing: a mismatch between the file
// and the caller is an error, not a silent override.
inline ProblemInstance instance_from_json(const json& j, int n_hint = 0, int d_hint = 0) {
    int n = n_hint;
    int d = d_hint;
    if (j.contains("n")) {
        const int fn = detail::int_key(j, "n");
        if (n != 0 && n != fn)
            throw value_error("n in file (" + std::to_string(fn) + ") conflicts with --n (" +
                              std::to_string(n) + ")");
        n = fn;
    }
    if (j.contains("d")) {
        const int fd = detail::int_key(j, "d");
        if (d != 0 && d != fd)
            throw value_error("d in file (" + std::to_string(fd) + ") conflicts with --d (" +
                              std::to_string(d) + ")");
        d = fd;
    }
    ScalarMatrix F = matrix_from_json(j);
    if (n == 0)
        n = F.cols();
    if (d == 0)
        d = F.rows() + 1;
    return ProblemInstance(ShiftShape(n, d), std::move(F));
}

inline json instance_to_json(const ProblemInstance& inst) {
    json j;
    j["n"] = inst.shape.n;
    j["d"] = inst.shape.d;
    json m = matrix_to_json(inst.F);
    for (auto& [key, value] : m.items())
        j[key] = value;
    return j;
}

inline json completion_to_json(const CompletionResult& r) {
    json j;
    json xs = json::array();
    for (const Scalar& s : r.x)
        xs.push_back(s.str());
    j["x"] = std::move(xs);
    j["det_value"] = r.det_value.str();
    j["attempts"] = r.attempts;
    j["strategy"] = strategy_token(r.strategy);
    return j;
}

inline json report_to_json(const GroebnerReport& r) {
    json j;
    j["n"] = r.shape.n;
    j["d"] = r.shape.d;
    j["order"] = order_token(r.order.kind());
    j["pair_count"] = r.pair_count;
    j["lm_set_complete"] = r.lm_set_complete;
    j["verdict"] = r.verdict();
    json fails = json::array();
    for (const SPairFailure& f : r.failures) {
        json jf;
        jf["pair"] = json::array({f.left.str(), f.right.str()});
        jf["s_polynomial"] = f.s_poly.str();
        jf["remainder"] = f.remainder.str();
        fails.push_back(std::move(jf));
    }
    j["failures"] = std::move(fails);
    return j;
}

} // namespace shiftgb
