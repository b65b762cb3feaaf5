#include "liealg/structure.hpp"

#include "exact/parse.hpp"

namespace liealg {

namespace {

template <typename K>
nlohmann::json to_json_impl(const StructureConstants<K>& f) {
    nlohmann::json brackets = nlohmann::json::array();
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
                if (!is_zero(f(i, j, k)))
                    brackets.push_back({{"i", i},
                                        {"j", j},
                                        {"k", k},
                                        {"c", to_string(f(i, j, k))}});
    return nlohmann::json{{"basis_dim", 3}, {"brackets", brackets}};
}

template <typename K, typename ParseFn>
StructureConstants<K> from_json_impl(const nlohmann::json& j, ParseFn parse) {
    if (!j.is_object())
        throw std::invalid_argument("algebra: expected a JSON object");
    if (!j.contains("basis_dim") || !j["basis_dim"].is_number_integer() ||
        j["basis_dim"].get<int>() != 3)
        throw std::invalid_argument("algebra: basis_dim must be the integer 3");
    if (!j.contains("brackets") || !j["brackets"].is_array())
        throw std::invalid_argument("algebra: brackets must be an array");
    StructureConstants<K> f;
    bool seen[3][3][3] = {};
    for (const auto& item : j["brackets"]) {
        if (!item.is_object())
            throw std::invalid_argument(
                "algebra: bracket entries must be objects");
        for (const char* key : {"i", "j", "k"})
            if (!item.contains(key) || !item[key].is_number_integer())
                throw std::invalid_argument(
                    std::string("algebra: bracket entry needs an integer '") +
                    key + "'");
        int i = item["i"].get<int>();
        int jj = item["j"].get<int>();
        int k = item["k"].get<int>();
        if (i < 1 || i > 3 || jj < 1 || jj > 3 || k < 1 || k > 3)
            throw std::invalid_argument(
                "algebra: bracket indices must lie in 1..3");
        if (i >= jj)
            throw std::invalid_argument(
                "algebra: bracket entries must satisfy i < j");
        if (!item.contains("c") || !item["c"].is_string())
            throw std::invalid_argument(
                "algebra: bracket coefficient 'c' must be a string");
        if (seen[i - 1][jj - 1][k - 1])
            throw std::invalid_argument("algebra: duplicate bracket entry");
        seen[i - 1][jj - 1][k - 1] = true;
        f.set(i, jj, k, parse(item["c"].get<std::string>()));
    }
    return f;
}

}  // namespace

nlohmann::json algebra_to_json(const StructureConstants<exact::Rational>& f) {
    return to_json_impl(f);
}

nlohmann::json algebra_to_json(const StructureConstants<exact::RatFunc>& f) {
    return to_json_impl(f);
}

StructureConstants<exact::Rational> algebra_from_json(const nlohmann::json& j) {
    return from_json_impl<exact::Rational>(
        j, [](const std::string& s) { return exact::Rational::parse(s); });
}

StructureConstants<exact::RatFunc> algebra_from_json_symbolic(
    const nlohmann::json& j) {
    return from_json_impl<exact::RatFunc>(j, [](const std::string& s) {
        try {
            return exact::parse_ratfunc(s);
        } catch (const std::domain_error& e) {
            throw std::invalid_argument(e.what());
        }
    });
}

}  // namespace liealg
