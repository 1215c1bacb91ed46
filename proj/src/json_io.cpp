#include "pairsum/json_io.hpp"

#include <string>

namespace pairsum {

using nlohmann::json;

json to_json(const SumSet& set)
{
    return {{"n", set.n()}, {"members", set.members()}};
}

SumSet sumset_from_json(const json& value)
{
    if (!value.is_object() || !value.contains("n") || !value.contains("members")) {
        throw Error(ErrorKind::InvalidInput, R"(a set must be an object {"n": int, "members": [ints]})");
    }
    const json& n = value.at("n");
    const json& members = value.at("members");
    if (!n.is_number_integer() || !members.is_array()) {
        throw Error(ErrorKind::InvalidInput, "\"n\" must be an integer and \"members\" an array");
    }
    SumSet set(n.get<Int>());
    Int previous = 0;
    for (const json& m : members) {
        if (!m.is_number_integer()) {
            throw Error(ErrorKind::InvalidInput, "members must be integers");
        }
        const Int v = m.get<Int>();
        if (v <= previous) {
            throw Error(ErrorKind::InvalidInput, "members must be strictly ascending");
        }
        set.insert(v);
        previous = v;
    }
    return set;
}

SumSet parse_sumset(std::string_view text)
{
    json value;
    try {
        value = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::InvalidInput, std::string("malformed set JSON: ") + e.what());
    }
    return sumset_from_json(value);
}

json to_json(const Certificate& cert)
{
    return {{"outcome", cert.found() ? "found" : "absent"},
            {"witness", cert.found() ? json(cert.witness->values) : json(nullptr)},
            {"universe", {cert.universe.lo, cert.universe.hi}},
            {"examined", cert.examined}};
}

json to_json(const ThresholdResult& r)
{
    return {{"n", r.n},
            {"k", r.k},
            {"mode", to_string(r.mode)},
            {"threshold", r.threshold},
            {"vacuous_above", r.vacuous_above},
            {"extremal_set", to_json(r.extremal_set)},
            {"attestation",
             {{"strategy", to_string(r.strategy)},
              {"nodes", r.nodes},
              {"sum_masks", r.sum_masks},
              {"minimal_masks", r.minimal_masks}}}};
}

json to_json(const FamilyCertificate& c)
{
    return {{"family", to_string(c.family)}, {"n", c.n},           {"k", c.k},
            {"mode", to_string(c.mode)},     {"set", to_json(c.set)}, {"excess", c.excess},
            {"certificate", to_json(c.certificate)}};
}

json to_json(const GrowthReport& report)
{
    json rows = json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"k", r.k},
                        {"samples", r.samples},
                        {"sublinear_failures", r.sublinear_failures},
                        {"envelope_failures", r.envelope_failures},
                        {"monotone_failures", r.monotone_failures}});
    }
    return {{"passed", report.passed()}, {"rows", rows}};
}

} // namespace pairsum
