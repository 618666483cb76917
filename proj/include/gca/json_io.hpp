#pragma once

#include "gca/algebra.hpp"
#include "gca/cocycle.hpp"
#include "gca/scalar.hpp"
#include "gca/z2.hpp"

#include <json.hpp>

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace gca {

using AnyAlgebra = std::variant<GradedAlgebra<Rational>, GradedAlgebra<GaussianRational>>;

// Interchange document: an algebra plus, for twisted builds, the bilinear
// exponent matrix of the cocycle that produced it.
struct AlgebraDocument {
    AnyAlgebra algebra;
    std::optional<BilinearFormZ2> cocycle;
};

namespace detail {

using ojson = nlohmann::ordered_json;

inline long long to_int64(const BigInt& v) {
    static const BigInt lo = (std::numeric_limits<long long>::min)();
    static const BigInt hi = (std::numeric_limits<long long>::max)();
    if (v < lo || v > hi)
        throw std::runtime_error("serialize: scalar exceeds the 64-bit JSON integer range");
    return v.convert_to<long long>();
}

inline ojson scalar_json(const Rational& r) {
    ojson j;
    j["num"] = to_int64(numerator(r));
    j["den"] = to_int64(denominator(r));
    return j;
}

inline ojson scalar_json(const GaussianRational& z) {
    ojson j;
    j["re"] = scalar_json(z.re);
    j["im"] = scalar_json(z.im);
    return j;
}

inline Rational parse_rational(const nlohmann::json& j) {
    if (!j.is_object() || j.size() != 2 || !j.contains("num") || !j.contains("den"))
        throw std::runtime_error("parse: rational scalar must be {\"num\": int, \"den\": int}");
    if (!j["num"].is_number_integer() || !j["den"].is_number_integer())
        throw std::runtime_error("parse: rational scalar parts must be integers");
    long long num = j["num"].get<long long>();
    long long den = j["den"].get<long long>();
    if (den == 0) throw std::runtime_error("parse: zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

inline GaussianRational parse_gaussian(const nlohmann::json& j) {
    if (!j.is_object() || j.size() != 2 || !j.contains("re") || !j.contains("im"))
        throw std::runtime_error("parse: gaussian scalar must be {\"re\": {...}, \"im\": {...}}");
    return GaussianRational(parse_rational(j["re"]), parse_rational(j["im"]));
}

template <class K>
K parse_scalar(const nlohmann::json& j);

template <>
inline Rational parse_scalar<Rational>(const nlohmann::json& j) {
    return parse_rational(j);
}

template <>
inline GaussianRational parse_scalar<GaussianRational>(const nlohmann::json& j) {
    return parse_gaussian(j);
}

inline ojson degree_json(const GroupElement& d) {
    ojson arr = ojson::array();
    for (unsigned i = 0; i < d.dim(); ++i) arr.push_back(d.bit(i) ? 1 : 0);
    return arr;
}

inline GroupElement parse_degree(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw std::runtime_error("parse: degree must be a nonempty bit array");
    std::uint64_t bits = 0;
    if (j.size() > GroupElement::max_dim) throw std::runtime_error("parse: degree dimension above 62");
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) throw std::runtime_error("parse: degree entries must be 0 or 1");
        long long b = j[i].get<long long>();
        if (b != 0 && b != 1) throw std::runtime_error("parse: degree entries must be 0 or 1");
        if (b) bits |= std::uint64_t{1} << i;
    }
    return GroupElement(bits, static_cast<unsigned>(j.size()));
}

} // namespace detail

template <class K>
std::string serialize(const GradedAlgebra<K>& a, const std::optional<BilinearFormZ2>& cocycle = std::nullopt) {
    detail::ojson doc;
    doc["field"] = std::string(FieldTraits<K>::tag);
    if (a.graded()) doc["n"] = a.grading_dim();
    else doc["n"] = nullptr;
    detail::ojson basis = detail::ojson::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        detail::ojson entry;
        entry["label"] = a.label(i);
        if (a.graded()) entry["degree"] = detail::degree_json(a.degree(i));
        else entry["degree"] = nullptr;
        basis.push_back(std::move(entry));
    }
    doc["basis"] = std::move(basis);
    detail::ojson unit = detail::ojson::array();
    for (const auto& c : a.unit()) unit.push_back(detail::scalar_json(c));
    doc["unit"] = std::move(unit);
    detail::ojson structure = detail::ojson::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (const auto& t : a.product(i, j)) {
                detail::ojson entry = detail::ojson::array();
                entry.push_back(i);
                entry.push_back(j);
                entry.push_back(t.k);
                entry.push_back(detail::scalar_json(t.c));
                structure.push_back(std::move(entry));
            }
    doc["structure"] = std::move(structure);
    if (cocycle) {
        detail::ojson rows = detail::ojson::array();
        for (unsigned i = 0; i < cocycle->dim(); ++i) {
            detail::ojson row = detail::ojson::array();
            for (unsigned j = 0; j < cocycle->dim(); ++j) row.push_back(cocycle->coeff(i, j) ? 1 : 0);
            rows.push_back(std::move(row));
        }
        doc["cocycle"] = std::move(rows);
    }
    return doc.dump(2) + "\n";
}

inline std::string serialize(const AlgebraDocument& doc) {
    return std::visit([&doc](const auto& a) { return serialize(a, doc.cocycle); }, doc.algebra);
}

namespace detail {

template <class K>
GradedAlgebra<K> parse_algebra(const nlohmann::json& doc) {
    const auto& basis = doc.at("basis");
    if (!basis.is_array() || basis.empty()) throw std::runtime_error("parse: basis must be a nonempty array");

    std::vector<std::string> labels;
    std::vector<GroupElement> degrees;
    std::size_t null_degrees = 0;
    for (const auto& entry : basis) {
        if (!entry.is_object() || !entry.contains("label"))
            throw std::runtime_error("parse: basis entries must be objects with a label");
        labels.push_back(entry.at("label").get<std::string>());
        const auto& deg = entry.contains("degree") ? entry.at("degree") : nlohmann::json(nullptr);
        if (deg.is_null()) ++null_degrees;
        else degrees.push_back(parse_degree(deg));
    }
    std::optional<std::vector<GroupElement>> degree_map;
    if (null_degrees == 0) degree_map = std::move(degrees);
    else if (null_degrees != labels.size())
        throw std::runtime_error("parse: degrees must be given for all basis elements or none");

    const auto& n = doc.at("n");
    if (degree_map) {
        if (!n.is_number_integer() ||
            n.get<long long>() != static_cast<long long>((*degree_map)[0].dim()))
            throw std::runtime_error("parse: \"n\" must equal the degree dimension");
    } else if (!n.is_null()) {
        throw std::runtime_error("parse: \"n\" must be null for an ungraded algebra");
    }

    const auto& unit = doc.at("unit");
    if (!unit.is_array() || unit.size() != labels.size())
        throw std::runtime_error("parse: unit coordinate length mismatch");
    Vec<K> unit_coords;
    for (const auto& c : unit) unit_coords.push_back(parse_scalar<K>(c));

    const auto& structure = doc.at("structure");
    if (!structure.is_array()) throw std::runtime_error("parse: structure must be an array");
    std::vector<typename GradedAlgebra<K>::Entry> entries;
    for (const auto& e : structure) {
        if (!e.is_array() || e.size() != 4) throw std::runtime_error("parse: structure entries are [i, j, k, scalar]");
        for (int t = 0; t < 3; ++t)
            if (!e[t].is_number_integer() || e[t].get<long long>() < 0)
                throw std::runtime_error("parse: structure indices must be nonnegative integers");
        entries.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<std::size_t>(),
                           parse_scalar<K>(e[3])});
    }
    try {
        return GradedAlgebra<K>(std::move(labels), std::move(degree_map), std::move(entries),
                                std::move(unit_coords));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("parse: ") + e.what());
    }
}

} // namespace detail

inline AlgebraDocument parse_document(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("parse: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("field")) throw std::runtime_error("parse: missing \"field\" tag");

    std::optional<BilinearFormZ2> cocycle;
    if (doc.contains("cocycle") && !doc.at("cocycle").is_null()) {
        const auto& rows = doc.at("cocycle");
        if (!rows.is_array() || rows.empty()) throw std::runtime_error("parse: cocycle must be a 0/1 matrix");
        unsigned n = static_cast<unsigned>(rows.size());
        BilinearFormZ2 form(n);
        for (unsigned i = 0; i < n; ++i) {
            if (!rows[i].is_array() || rows[i].size() != n)
                throw std::runtime_error("parse: cocycle matrix must be square");
            for (unsigned j = 0; j < n; ++j) {
                long long b = rows[i][j].get<long long>();
                if (b != 0 && b != 1) throw std::runtime_error("parse: cocycle entries must be 0 or 1");
                form.set_coeff(i, j, b != 0);
            }
        }
        cocycle = std::move(form);
    }

    const std::string field = doc.at("field").get<std::string>();
    AnyAlgebra alg = [&]() -> AnyAlgebra {
        if (field == FieldTraits<Rational>::tag) return detail::parse_algebra<Rational>(doc);
        if (field == FieldTraits<GaussianRational>::tag) return detail::parse_algebra<GaussianRational>(doc);
        throw std::runtime_error("parse: unknown field tag '" + field + "'");
    }();
    if (cocycle) {
        unsigned want = std::visit([](const auto& a) { return a.graded() ? a.grading_dim() : 0u; }, alg);
        if (want != 0 && cocycle->dim() != want)
            throw std::runtime_error("parse: cocycle dimension does not match the grading dimension");
    }
    return {std::move(alg), std::move(cocycle)};
}

} // namespace gca
