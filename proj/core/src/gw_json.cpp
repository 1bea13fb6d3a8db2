#include "gwtrop/json_io.hpp"

namespace gwtrop {

nlohmann::json bigint_to_json(const BigInt& v)
{
    if (fits_int64(v))
        return to_int64(v);
    return v.get_str();
}

BigInt bigint_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer())
        return big(j.get<std::int64_t>());
    if (j.is_string()) {
        BigInt v;
        if (v.set_str(j.get<std::string>(), 10) != 0)
            throw InvalidArgument("malformed integer string: " + j.get<std::string>());
        return v;
    }
    throw InvalidArgument("expected integer or decimal string");
}

nlohmann::json gw_to_json(const GWElement& x)
{
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& [rep, m] : x.terms())
        classes.push_back({{"rep", rep}, {"mult", bigint_to_json(m)}});
    return {{"classes", classes}, {"display", render(x)}};
}

GWElement gw_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("classes") || !j["classes"].is_array())
        throw InvalidArgument("GW element JSON must have a \"classes\" array");
    std::vector<std::pair<std::int64_t, BigInt>> terms;
    for (const auto& c : j["classes"]) {
        if (!c.contains("rep") || !c.contains("mult"))
            throw InvalidArgument("class entry needs \"rep\" and \"mult\"");
        std::int64_t rep = c["rep"].get<std::int64_t>();
        if (rep == 0 || square_free_reduce(rep).rep != rep)
            throw InvalidArgument("class rep must be a nonzero square-free integer");
        terms.emplace_back(rep, bigint_from_json(c["mult"]));
    }
    return GWElement::from_association(terms);
}

} // namespace gwtrop
