#include "specfile.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace striphardy {

namespace {

using nlohmann::json;

double number_at(const json& obj, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number())
        fail(ErrorCode::parse_error, std::string("spec field '") + key + "' must be a number");
    return obj[key].get<double>();
}

OuterData parse_outer(const json& obj) {
    OuterData out;
    const std::string kind = obj.value("kind", std::string("constant"));
    const json params = obj.value("params", json::object());
    if (kind == "constant") {
        out.kind = OuterData::Kind::constant;
        out.c = number_at(params, "c", 1.0);
    } else if (kind == "sech_alpha") {
        out.kind = OuterData::Kind::sech_alpha;
        out.alpha = number_at(params, "alpha", 0.5);
    } else if (kind == "gauss_strip") {
        out.kind = OuterData::Kind::gauss_strip;
    } else if (kind == "table") {
        out.kind = OuterData::Kind::table;
        if (!params.contains("u") || !params.contains("log_phi"))
            fail(ErrorCode::parse_error, "outer table needs params.u and params.log_phi arrays");
        out.table_u = params["u"].get<std::vector<double>>();
        out.table_logphi = params["log_phi"].get<std::vector<double>>();
        const std::string decay = params.value("decay", std::string("linear"));
        if (decay == "zero")
            out.decay = OuterData::Decay::zero;
        else if (decay == "linear")
            out.decay = OuterData::Decay::linear;
        else
            fail(ErrorCode::parse_error, "outer table decay must be 'zero' or 'linear'");
    } else {
        fail(ErrorCode::parse_error, "unknown outer kind: " + kind);
    }
    if (obj.contains("admissible") && !obj["admissible"].is_boolean())
        fail(ErrorCode::parse_error, "outer.admissible must be a boolean");
    out.admissible = obj.value("admissible", true);
    return out;
}

LoadedSpec from_json(const json& doc) {
    LoadedSpec loaded;
    SymbolSpec& spec = loaded.spec;
    if (!doc.is_object()) fail(ErrorCode::parse_error, "spec document must be a JSON object");

    if (doc.contains("phase")) {
        spec.phase = cplx(number_at(doc["phase"], "re", 1.0), number_at(doc["phase"], "im", 0.0));
    }
    if (doc.contains("blaschke")) {
        const json& bl = doc["blaschke"];
        spec.blaschke.declared_infinite = bl.value("infinite_tail", false);
        for (const json& z : bl.value("zeros", json::array())) {
            BlaschkeZero zero;
            zero.alpha = cplx(number_at(z, "re", 0.0), number_at(z, "im", 0.0));
            zero.multiplicity = static_cast<int>(number_at(z, "mult", 1.0));
            spec.blaschke.zeros.push_back(zero);
        }
    }
    if (doc.contains("singular")) {
        const json& sg = doc["singular"];
        spec.singular.a0 = number_at(sg, "a0", 0.0);
        spec.singular.a_inf = number_at(sg, "a_inf", 0.0);
        for (const json& atom : sg.value("atoms", json::array()))
            spec.singular.finite_atoms.push_back(
                SingularAtom{number_at(atom, "s", 0.0), number_at(atom, "w", 0.0)});
    }
    if (doc.contains("outer")) spec.outer = parse_outer(doc["outer"]);
    loaded.square_root = doc.value("square_root", false);

    try {
        validate_spec(spec);
    } catch (const Error& e) {
        fail(ErrorCode::parse_error, std::string("invalid spec: ") + e.what());
    }
    return loaded;
}

}  // namespace

LoadedSpec load_spec_json(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::parse_error,
             std::string("JSON parse error at byte ") + std::to_string(e.byte) + ": " + e.what());
    }
    return from_json(doc);
}

LoadedSpec load_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io_error, "cannot open spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_spec_json(buf.str());
}

std::string spec_summary(const SymbolSpec& spec) {
    std::ostringstream os;
    os << "blaschke=" << (spec.blaschke.declared_infinite ? std::string("infinite")
                                                          : std::to_string(spec.blaschke.total_count()));
    os << " singular=" << (spec.singular.nontrivial() ? "nontrivial" : "trivial");
    os << " outer=";
    switch (spec.outer.kind) {
        case OuterData::Kind::constant:
            os << "constant(" << spec.outer.c << ")";
            break;
        case OuterData::Kind::sech_alpha:
            os << "sech_alpha(" << spec.outer.alpha << ")";
            break;
        case OuterData::Kind::gauss_strip:
            os << "gauss_strip";
            break;
        case OuterData::Kind::table:
            os << "table[" << spec.outer.table_u.size() << "]";
            break;
    }
    os << (spec.outer.admissible ? " (admissible)" : " (estimate not declared)");
    return os.str();
}

}  // namespace striphardy
