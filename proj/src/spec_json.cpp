#include "avw/spec_json.hpp"

#include <fstream>

namespace avw {

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) {
        try {
            return parse_scalar(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw SpecError(e.what());
        }
    }
    if (j.is_number_integer()) return Scalar(mpz_class(j.dump(), 10));
    throw SpecError("rationals must be strings \"p/q\" or integers, got " + j.dump());
}

Json scalar_to_json(const Scalar& s) { return to_string(s); }

Element element_from_json(const Json& j) {
    if (!j.is_array()) throw SpecError("element must be an array of rationals");
    std::vector<Scalar> coords;
    for (const auto& c : j) coords.push_back(scalar_from_json(c));
    if (!valid_dim(coords.size())) throw SpecError("element must have 1, 2, 4 or 8 coordinates");
    return Element(std::move(coords));
}

Json element_to_json(const Element& e) {
    Json out = Json::array();
    for (const auto& c : e.coords()) out.push_back(scalar_to_json(c));
    return out;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j.front().is_array()) throw SpecError("matrix must be an array of rows");
    Matrix m(j.size(), j.front().size());
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array() || j[r].size() != m.cols()) throw SpecError("matrix rows have unequal length");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = scalar_from_json(j[r][c]);
    }
    return m;
}

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

AlgebraSpec spec_from_json(const Json& j) {
    if (!j.is_object()) throw SpecError("algebra spec must be a JSON object");
    if (!j.contains("family") || !j["family"].is_string()) throw SpecError("spec needs a string field 'family'");
    AlgebraSpec s;
    s.family = parse_family(j["family"].get<std::string>());
    if (j.contains("dim")) {
        if (!j["dim"].is_number_integer()) throw SpecError("'dim' must be an integer");
        const auto d = j["dim"].get<long long>();
        if (d != 1 && d != 2 && d != 4 && d != 8) throw SpecError("'dim' must be 1, 2, 4 or 8");
        s.dim = static_cast<std::size_t>(d);
    } else if (s.is_principal()) {
        s.dim = 4;
    } else {
        throw SpecError("spec needs 'dim'");
    }
    if (j.contains("a")) s.a = element_from_json(j["a"]);
    if (j.contains("b")) s.b = element_from_json(j["b"]);
    if (j.contains("f")) {
        const Json& f = j["f"];
        if (f.is_object()) {
            if (!f.contains("skew")) throw SpecError("isometry seed object needs 'skew'");
            s.f_seed = IsometrySeed{matrix_from_json(f["skew"])};
        } else {
            s.f = matrix_from_json(f);
        }
    }
    if (j.contains("base")) s.base = std::make_shared<const AlgebraSpec>(spec_from_json(j["base"]));
    if (j.contains("e")) s.e = element_from_json(j["e"]);
    return s;
}

Json spec_to_json(const AlgebraSpec& s) {
    Json j;
    j["family"] = family_name(s.family);
    j["dim"] = s.dim;
    if (s.a) j["a"] = element_to_json(*s.a);
    if (s.b) j["b"] = element_to_json(*s.b);
    if (s.f) j["f"] = matrix_to_json(*s.f);
    if (s.f_seed) j["f"] = Json{{"skew", matrix_to_json(s.f_seed->skew)}};
    if (s.base) j["base"] = spec_to_json(*s.base);
    if (s.e) j["e"] = element_to_json(*s.e);
    return j;
}

AlgebraSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open spec file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw SpecError("malformed JSON in '" + path + "': " + e.what());
    }
    return spec_from_json(j);
}

}  // namespace avw
