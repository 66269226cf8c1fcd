#include "minorsum/json_io.hpp"

#include <limits>

namespace minorsum {

const Json& require_field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) parse_fail(where, std::string("missing field \"") + key + "\"");
    return j[key];
}

long require_long(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) parse_fail(where, "expected an integer");
    return j.get<long>();
}

std::string require_string(const Json& j, const std::string& where) {
    if (!j.is_string()) parse_fail(where, "expected a string");
    return j.get<std::string>();
}

Json ring_spec_to_json(const RingSpec& spec) {
    Json j;
    switch (spec.kind) {
        case RingKind::integers: j["kind"] = "int"; break;
        case RingKind::rationals: j["kind"] = "rat"; break;
        case RingKind::modular:
            j["kind"] = "mod";
            if (spec.modulus <= BigInt(std::numeric_limits<std::int64_t>::max()))
                j["modulus"] = static_cast<std::int64_t>(spec.modulus);
            else
                j["modulus"] = spec.modulus.str();
            break;
    }
    return j;
}

RingSpec ring_spec_from_json(const Json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return RingSpec::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            parse_fail(where, e.what());
        }
    }
    const std::string kind = require_string(require_field(j, "kind", where), where + ".kind");
    if (kind == "int") return RingSpec::integers();
    if (kind == "rat") return RingSpec::rationals();
    if (kind != "mod") parse_fail(where + ".kind", "expected \"int\", \"rat\" or \"mod\"");
    const Json& m = require_field(j, "modulus", where);
    BigInt modulus;
    if (m.is_number_integer()) {
        modulus = BigInt(m.get<std::int64_t>());
    } else if (m.is_string()) {
        try {
            modulus = BigInt(m.get<std::string>());
        } catch (const std::exception&) {
            parse_fail(where + ".modulus", "expected a decimal integer");
        }
    } else {
        parse_fail(where + ".modulus", "expected an integer or decimal string");
    }
    try {
        return RingSpec::modular(modulus);
    } catch (const std::exception& e) {
        parse_fail(where + ".modulus", e.what());
    }
}

Json index_set_to_json(const IndexSet& s) {
    return Json(s.elements());
}

IndexSet index_set_from_json(const Json& j, int universe, const std::string& where) {
    if (!j.is_array()) parse_fail(where, "expected an array of 1-based indices");
    std::vector<int> elems;
    elems.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        elems.push_back(static_cast<int>(require_long(j[i], where + "[" + std::to_string(i) + "]")));
    try {
        return IndexSet(std::move(elems), universe);
    } catch (const std::exception& e) {
        parse_fail(where, e.what());
    }
}

Json permutation_to_json(const Permutation& p) {
    return Json(p.images());
}

Permutation permutation_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) parse_fail(where, "expected a nonempty 1-based image array");
    std::vector<int> images;
    images.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        images.push_back(static_cast<int>(require_long(j[i], where + "[" + std::to_string(i) + "]")));
    try {
        return Permutation(std::move(images));
    } catch (const std::exception& e) {
        parse_fail(where, e.what());
    }
}

Json sign_vector_to_json(const SignVector& q) {
    return Json(q.signs());
}

SignVector sign_vector_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) parse_fail(where, "expected a nonempty array of +1/-1");
    std::vector<int> signs;
    signs.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        signs.push_back(static_cast<int>(require_long(j[i], where + "[" + std::to_string(i) + "]")));
    try {
        return SignVector(std::move(signs));
    } catch (const std::exception& e) {
        parse_fail(where, e.what());
    }
}

RingSpec peek_ring_spec(const Json& j, const std::string& where) {
    return ring_spec_from_json(require_field(j, "ring", where), where + ".ring");
}

Json pair_sum_instance_to_json(const RingSpec& spec, const PairSumInstance& inst) {
    Json j;
    j["ring"] = ring_spec_to_json(spec);
    j["n"] = inst.n;
    j["s"] = index_set_to_json(inst.s);
    j["t"] = index_set_to_json(inst.t);
    j["u"] = index_set_to_json(inst.u);
    j["v"] = index_set_to_json(inst.v);
    return j;
}

PairSumInstance pair_sum_instance_from_json(const Json& j, const std::string& where) {
    if (!j.is_object()) parse_fail(where, "expected an instance object");
    const int n = static_cast<int>(require_long(require_field(j, "n", where), where + ".n"));
    if (n < 1) parse_fail(where + ".n", "n must be >= 1");
    PairSumInstance inst{n, index_set_from_json(require_field(j, "s", where), n, where + ".s"),
                         index_set_from_json(require_field(j, "t", where), n, where + ".t"),
                         index_set_from_json(require_field(j, "u", where), n, where + ".u"),
                         index_set_from_json(require_field(j, "v", where), n, where + ".v")};
    try {
        inst.validate();
    } catch (const std::exception& e) {
        parse_fail(where, e.what());
    }
    return inst;
}

RingSpec peek_cycle_config_ring(const Json& j, const std::string& where) {
    const Json& arr = require_field(j, "A", where);
    if (!arr.is_array() || arr.empty()) parse_fail(where + ".A", "expected a nonempty matrix array");
    return peek_ring_spec(arr[0], where + ".A[0]");
}

}  // namespace minorsum
