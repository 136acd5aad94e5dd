#include <modchar/json_io.hpp>

#include <cctype>
#include <limits>
#include <stdexcept>

namespace modchar {

using nlohmann::json;

json weight_to_json(const Weight& w) {
    json a = json::array();
    for (std::size_t i = 0; i < w.rank(); ++i) a.push_back(w[i]);
    return a;
}

Weight weight_from_json(const json& j, int expected_rank, const std::string& context) {
    if (!j.is_array())
        throw std::runtime_error(context + ": weight must be an array of integers");
    std::vector<long long> coords;
    coords.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw std::runtime_error(context + ": weight coordinates must be integers");
        coords.push_back(v.get<long long>());
    }
    if (expected_rank >= 0 && static_cast<int>(coords.size()) != expected_rank)
        throw std::runtime_error(context + ": weight has " + std::to_string(coords.size()) +
                                 " coordinates, expected " + std::to_string(expected_rank));
    return Weight(std::move(coords));
}

json coeff_to_json(const Int& c) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
        return static_cast<long long>(c);
    return c.str();
}

Int coeff_from_json(const json& j, const std::string& context) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
    if (j.is_number_float())
        throw std::runtime_error(context +
                                 ": coefficient is not an exact integer; use a decimal string "
                                 "for values beyond 64 bits");
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start)
            throw std::runtime_error(context + ": empty coefficient string");
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::runtime_error(context + ": coefficient string '" + s +
                                         "' is not a decimal integer");
        return Int(s);
    }
    throw std::runtime_error(context + ": coefficient must be an integer or a decimal string");
}

json character_to_json(const RootSystem& rs, const Character& x) {
    json a = json::array();
    for (const auto& t : canonical_terms(rs, x)) {
        json rec;
        rec["weight"] = weight_to_json(t.weight);
        rec["coeff"] = coeff_to_json(t.coeff);
        a.push_back(std::move(rec));
    }
    return a;
}

Character character_from_json(const json& j, const RootSystem& rs, const std::string& context) {
    if (!j.is_array())
        throw std::runtime_error(context + ": character must be an array of records");
    std::vector<Character::Term> terms;
    std::set<Weight> seen;
    for (const auto& rec : j) {
        if (!rec.is_object() || !rec.contains("weight") || !rec.contains("coeff"))
            throw std::runtime_error(context +
                                     ": character record needs 'weight' and 'coeff' fields");
        Weight w = weight_from_json(rec.at("weight"), rs.rank(), context);
        if (!seen.insert(w).second)
            throw std::runtime_error(context + ": duplicate weight " + w.str() +
                                     " in character");
        terms.push_back({std::move(w), coeff_from_json(rec.at("coeff"), context)});
    }
    return Character::from_terms(std::move(terms));
}

}  // namespace modchar
