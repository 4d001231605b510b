#include "gmecert/statespec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gmecert/errors.hpp"

namespace gmecert::cli {

namespace {

using nlohmann::json;

std::vector<int> parse_dims(const json& doc) {
    if (!doc.contains("dims")) throw parse_error("state spec is missing \"dims\"");
    const auto& dims = doc.at("dims");
    if (!dims.is_array() || dims.empty()) {
        throw parse_error("\"dims\" must be a nonempty array of integers");
    }
    std::vector<int> out;
    for (const auto& v : dims) {
        if (!v.is_number_integer()) throw parse_error("\"dims\" entries must be integers");
        out.push_back(v.get<int>());
    }
    return out;
}

std::string dims_string(const std::vector<int>& dims) {
    std::string s = "[";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(dims[i]);
    }
    return s + "]";
}

std::vector<cplx> parse_amplitudes(const json& node, int expected) {
    if (!node.is_array()) throw parse_error("\"amplitudes\" must be an array of [re, im] pairs");
    if (static_cast<int>(node.size()) != expected) {
        throw parse_error("\"amplitudes\" must list exactly one [re, im] pair per basis state");
    }
    std::vector<cplx> out;
    out.reserve(node.size());
    for (const auto& pair : node) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
            !pair[1].is_number()) {
            throw parse_error("each amplitude must be a two-element [re, im] array");
        }
        out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return out;
}

StateSpec parse_document(const json& doc);

StateSpec parse_ket(const json& doc) {
    const SystemShape shape(parse_dims(doc));
    if (!doc.contains("amplitudes")) throw parse_error("ket spec is missing \"amplitudes\"");
    KetVector psi(shape, parse_amplitudes(doc.at("amplitudes"), shape.total_dim()));

    StateSpec spec;
    spec.descriptor = "ket dims=" + dims_string(shape.dims());
    spec.density = DensityMatrix::from_ket(psi);
    spec.ket = std::move(psi);
    return spec;
}

StateSpec parse_mixture(const json& doc) {
    const SystemShape shape(parse_dims(doc));
    if (!doc.contains("components") || !doc.at("components").is_array() ||
        doc.at("components").empty()) {
        throw parse_error("mixture spec requires a nonempty \"components\" array");
    }
    std::vector<std::pair<double, KetVector>> components;
    for (const auto& comp : doc.at("components")) {
        if (!comp.contains("weight") || !comp.at("weight").is_number()) {
            throw parse_error("every mixture component needs a numeric \"weight\"");
        }
        if (!comp.contains("amplitudes")) {
            throw parse_error("every mixture component needs \"amplitudes\"");
        }
        components.emplace_back(
            comp.at("weight").get<double>(),
            KetVector(shape, parse_amplitudes(comp.at("amplitudes"), shape.total_dim())));
    }
    MixtureSpec mixture(std::move(components));

    StateSpec spec;
    spec.descriptor = "mixture(" + std::to_string(mixture.components().size()) +
                      " components) dims=" + dims_string(shape.dims());
    if (mixture.components().size() == 1) {
        spec.ket = mixture.components().front().second;
    }
    spec.density = mixture.to_density();
    return spec;
}

StateSpec parse_builtin(const json& doc) {
    if (!doc.contains("name") || !doc.at("name").is_string()) {
        throw parse_error("builtin spec requires a string \"name\"");
    }
    const std::string name = doc.at("name").get<std::string>();
    const json params = doc.contains("parameters") ? doc.at("parameters") : json::object();

    StateSpec spec;
    if (name == "ghz") {
        const SystemShape shape(parse_dims(doc));
        if (!shape.homogeneous()) {
            throw parse_error("builtin ghz requires equal local dimensions");
        }
        auto psi = ghz(shape.subsystem_count(), shape.local_dim(0));
        spec.descriptor = "builtin ghz dims=" + dims_string(shape.dims());
        spec.density = DensityMatrix::from_ket(psi);
        spec.ket = std::move(psi);
        return spec;
    }
    if (name == "w") {
        const SystemShape shape(parse_dims(doc));
        for (int d : shape.dims()) {
            if (d != 2) throw parse_error("builtin w requires qubit subsystems");
        }
        auto psi = w_state(shape.subsystem_count());
        spec.descriptor = "builtin w dims=" + dims_string(shape.dims());
        spec.density = DensityMatrix::from_ket(psi);
        spec.ket = std::move(psi);
        return spec;
    }
    if (name == "dct") {
        if (doc.contains("dims") && parse_dims(doc) != std::vector<int>{2, 2, 2}) {
            throw parse_error("builtin dct is defined on dims [2,2,2]");
        }
        double l0p = 1.0 / 6.0;
        double l0m = 1.0 / 2.0;
        std::array<double, 3> l123{1.0 / 18.0, 1.0 / 18.0, 1.0 / 18.0};
        if (params.contains("lambda0_plus")) l0p = params.at("lambda0_plus").get<double>();
        if (params.contains("lambda0_minus")) l0m = params.at("lambda0_minus").get<double>();
        if (params.contains("lambda123")) {
            const auto& arr = params.at("lambda123");
            if (!arr.is_array() || arr.size() != 3) {
                throw parse_error("\"lambda123\" must be a three-element array");
            }
            for (int k = 0; k < 3; ++k) {
                l123[static_cast<std::size_t>(k)] = arr[static_cast<std::size_t>(k)].get<double>();
            }
        }
        spec.descriptor = "builtin dct dims=[2,2,2]";
        spec.density = dct_state(l0p, l0m, l123);
        return spec;
    }
    if (name == "white-noise") {
        if (!params.contains("base")) {
            throw parse_error("builtin white-noise requires parameters.base");
        }
        StateSpec base = parse_document(params.at("base"));
        if (!base.density) {
            throw parse_error("white-noise base must be a concrete state, not a family");
        }
        NoisyFamily family(*base.density, "x", "white-noise(" + base.descriptor + ")");
        if (params.contains("x")) {
            const double x = params.at("x").get<double>();
            spec.descriptor = family.label() + " x=" + std::to_string(x);
            spec.density = family.member(x);
        } else {
            spec.descriptor = family.label();
            spec.family = std::move(family);
        }
        return spec;
    }
    throw parse_error("unknown builtin name \"" + name + "\"");
}

StateSpec parse_family(const json& doc) {
    if (!doc.contains("base")) throw parse_error("family spec requires \"base\"");
    StateSpec base = parse_document(doc.at("base"));
    if (!base.density) {
        throw parse_error("family base must be a concrete state, not a nested family");
    }
    StateSpec spec;
    NoisyFamily family(*base.density, "x", "white-noise(" + base.descriptor + ")");
    spec.descriptor = family.label();
    spec.family = std::move(family);
    return spec;
}

StateSpec parse_document(const json& doc) {
    if (!doc.is_object()) throw parse_error("state spec must be a JSON object");
    if (!doc.contains("kind") || !doc.at("kind").is_string()) {
        throw parse_error("state spec requires a string \"kind\"");
    }
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "ket") return parse_ket(doc);
    if (kind == "mixture") return parse_mixture(doc);
    if (kind == "builtin") return parse_builtin(doc);
    if (kind == "family") return parse_family(doc);
    throw parse_error("unknown kind \"" + kind + "\" (expected ket, mixture, builtin or family)");
}

} // namespace

StateSpec parse_state_spec(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    try {
        return parse_document(doc);
    } catch (const json::exception& e) {
        throw parse_error(std::string("malformed state spec: ") + e.what());
    }
}

StateSpec load_state_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open state spec file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state_spec(buffer.str());
}

} // namespace gmecert::cli
