#include "orb/groupspec.hpp"

#include <json.hpp>
#include <sstream>

#include "orb/error.hpp"

namespace orb {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw usage_error(msg); }

std::string at_entry(size_t gen, size_t row, size_t col) {
    std::ostringstream os;
    os << "generator " << gen + 1 << ", row " << row + 1 << ", column " << col + 1;
    return os.str();
}

Rational parse_rational(const std::string& s, const std::string& where) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer n(s.substr(0, slash));
        Integer d(s.substr(slash + 1));
        if (d == 0) fail("zero denominator at " + where);
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        fail("malformed rational \"" + s + "\" at " + where);
    }
}

CycNum parse_entry(const json& j, unsigned order, size_t gen, size_t row,
                   size_t col) {
    std::string where = at_entry(gen, row, col);
    if (j.is_number_integer())
        return CycNum(Rational(static_cast<long long>(j.get<long long>())));
    if (j.is_array()) {
        std::vector<Rational> coeffs;
        for (const auto& c : j) {
            if (c.is_number_integer()) {
                coeffs.push_back(Rational(static_cast<long long>(c.get<long long>())));
            } else if (c.is_string()) {
                coeffs.push_back(parse_rational(c.get<std::string>(), where));
            } else {
                fail("coefficient vector entries must be integers or \"p/q\" at " +
                     where);
            }
        }
        return CycNum(order, std::move(coeffs));
    }
    if (!j.is_string()) fail("unsupported entry type at " + where);
    std::string s = j.get<std::string>();
    bool negate = false;
    if (!s.empty() && s[0] == '-' && s.find('z') != std::string::npos) {
        negate = true;
        s = s.substr(1);
    }
    CycNum v;
    if (!s.empty() && s[0] == 'z') {
        long k = 1;
        if (s.size() > 1) {
            if (s[1] != '^' || s.size() < 3)
                fail("malformed root of unity \"" + s + "\" at " + where);
            try {
                k = std::stol(s.substr(2));
            } catch (const std::exception&) {
                fail("malformed exponent in \"" + s + "\" at " + where);
            }
        }
        v = CycNum::zeta(order, k);
    } else {
        v = CycNum(parse_rational(s, where));
    }
    return negate ? -v : v;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // translate the byte offset into a line/column diagnostic
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::ostringstream os;
        os << "JSON syntax error at line " << line << ", column " << col;
        fail(os.str());
    }

    GroupSpec spec;
    if (!j.is_object()) fail("top level must be an object");
    if (j.contains("name")) {
        if (!j["name"].is_string()) fail("\"name\" must be a string");
        spec.name = j["name"].get<std::string>();
    }
    if (!j.contains("cyclotomic_order") || !j["cyclotomic_order"].is_number_integer())
        fail("missing integer field \"cyclotomic_order\"");
    long long order = j["cyclotomic_order"].get<long long>();
    if (order < 1) fail("\"cyclotomic_order\" must be positive");
    spec.cyclotomic_order = static_cast<unsigned>(order);
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        fail("missing integer field \"dimension\"");
    long long dim = j["dimension"].get<long long>();
    if (dim < 1) fail("\"dimension\" must be positive");
    spec.dimension = static_cast<size_t>(dim);
    if (!j.contains("generators") || !j["generators"].is_array() ||
        j["generators"].empty())
        fail("missing nonempty array field \"generators\"");

    size_t n = spec.dimension;
    for (size_t gi = 0; gi < j["generators"].size(); ++gi) {
        const json& gmat = j["generators"][gi];
        if (!gmat.is_array() || gmat.size() != n)
            fail("generator " + std::to_string(gi + 1) + " must have " +
                 std::to_string(n) + " rows");
        std::vector<CycNum> entries;
        for (size_t r = 0; r < n; ++r) {
            const json& row = gmat[r];
            if (!row.is_array() || row.size() != n)
                fail("generator " + std::to_string(gi + 1) + ", row " +
                     std::to_string(r + 1) + " must have " + std::to_string(n) +
                     " entries");
            for (size_t c = 0; c < n; ++c)
                entries.push_back(parse_entry(row[c], spec.cyclotomic_order, gi, r, c));
        }
        spec.generators.push_back(Matrix(n, n, std::move(entries)));
    }
    return spec;
}

}  // namespace orb
