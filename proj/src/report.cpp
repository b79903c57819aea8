#include "semicm/report.hpp"
#include "semicm/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace semicm {

using ordered_json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// JSON encoding. Rationals travel as strings to stay exact.
// ---------------------------------------------------------------------------

ordered_json encode(const Rat& q) { return q.get_str(); }

ordered_json encode(const Int& x) {
    // Fits desk scale; guards against silent truncation on huge values.
    if (!x.fits_slong_p()) return x.get_str();
    return x.get_si();
}

ordered_json encode(const IntVec& v) {
    ordered_json a = ordered_json::array();
    for (const Int& x : v) a.push_back(encode(x));
    return a;
}

ordered_json encode(const RatVec& v) {
    ordered_json a = ordered_json::array();
    for (const Rat& q : v) a.push_back(encode(q));
    return a;
}

template <typename T>
ordered_json encode_list(const std::vector<T>& items) {
    ordered_json a = ordered_json::array();
    for (const T& item : items) a.push_back(encode(item));
    return a;
}

Int decode_int(const ordered_json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw ParseError("expected an integer");
}

Rat decode_rat(const ordered_json& j) {
    if (!j.is_string()) throw ParseError("expected a rational as a string");
    Rat q(j.get<std::string>());
    q.canonicalize();
    return q;
}

IntVec decode_int_vec(const ordered_json& j) {
    if (!j.is_array()) throw ParseError("expected an array of integers");
    IntVec v;
    for (const auto& entry : j) v.push_back(decode_int(entry));
    return v;
}

RatVec decode_rat_vec(const ordered_json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    RatVec v;
    for (const auto& entry : j) v.push_back(decode_rat(entry));
    return v;
}

std::vector<IntVec> decode_int_vecs(const ordered_json& j) {
    std::vector<IntVec> out;
    for (const auto& entry : j) out.push_back(decode_int_vec(entry));
    return out;
}

std::vector<RatVec> decode_rat_vecs(const ordered_json& j) {
    std::vector<RatVec> out;
    for (const auto& entry : j) out.push_back(decode_rat_vec(entry));
    return out;
}

ordered_json spec_to_json(const SemigroupSpec& spec) {
    ordered_json j;
    j["ambient_dim"] = spec.ambient_dim;
    j["generators"] = encode_list(spec.generators);
    if (spec.basis) j["basis"] = *spec.basis;
    if (!spec.warnings.empty()) j["warnings"] = spec.warnings;
    return j;
}

SemigroupSpec spec_from_json(const ordered_json& j) {
    SemigroupSpec spec;
    if (!j.is_object()) throw ParseError("input document must be an object");
    if (!j.contains("ambient_dim") || !j["ambient_dim"].is_number_integer())
        throw ParseError("missing or non-integer ambient_dim");
    spec.ambient_dim = j["ambient_dim"].get<int>();
    if (!j.contains("generators") || !j["generators"].is_array())
        throw ParseError("missing generators array");
    spec.generators = decode_int_vecs(j["generators"]);
    if (j.contains("basis")) {
        if (!j["basis"].is_array()) throw ParseError("basis must be an array of indices");
        std::vector<int> basis;
        for (const auto& entry : j["basis"]) {
            if (!entry.is_number_integer()) throw ParseError("basis indices must be integers");
            basis.push_back(entry.get<int>());
        }
        spec.basis = std::move(basis);
    }
    if (j.contains("warnings"))
        spec.warnings = j["warnings"].get<std::vector<std::string>>();
    return spec;
}

} // namespace

SemigroupSpec parse_spec(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed input document: ") + e.what());
    }
    SemigroupSpec raw = spec_from_json(j);

    if (raw.ambient_dim < 1) throw ValidationError("ambient_dim must be positive");
    if (raw.generators.empty()) throw ValidationError("generators must be nonempty");

    SemigroupSpec spec;
    spec.ambient_dim = raw.ambient_dim;
    std::vector<int> remap(raw.generators.size());
    for (size_t i = 0; i < raw.generators.size(); ++i) {
        const IntVec& v = raw.generators[i];
        if (int(v.size()) != raw.ambient_dim)
            throw ValidationError("generator " + std::to_string(i) + " has wrong dimension");
        bool zero = true;
        for (const Int& x : v)
            if (x != 0) zero = false;
        if (zero) throw ValidationError("generator " + std::to_string(i) + " is the zero vector");
        auto it = std::find(spec.generators.begin(), spec.generators.end(), v);
        remap[i] = int(it - spec.generators.begin());
        if (it == spec.generators.end()) {
            spec.generators.push_back(v);
        } else {
            spec.warnings.push_back("dropped duplicate generator " + to_string(v));
        }
    }
    if (raw.basis) {
        std::vector<int> basis;
        for (int i : *raw.basis) {
            if (i < 0 || i >= int(raw.generators.size()))
                throw ValidationError("basis index " + std::to_string(i) + " out of range");
            basis.push_back(remap[i]);
        }
        spec.basis = std::move(basis);
    }
    return spec;
}

// ---------------------------------------------------------------------------
// Report <-> JSON.
// ---------------------------------------------------------------------------

namespace {

ordered_json class_to_json(const Report::ClassEntry& cls) {
    ordered_json j;
    j["shift_lambda"] = encode(cls.shift_lambda);
    j["shift_ambient"] = encode(cls.shift_ambient);
    j["elements_lambda"] = encode_list(cls.elements_lambda);
    j["elements_ambient"] = encode_list(cls.elements_ambient);
    j["ideal_min_gens"] = encode_list(cls.ideal_min_gens);
    j["ideal_min_gens_ambient"] = encode_list(cls.ideal_min_gens_ambient);
    j["ideal_unit"] = cls.ideal_unit;
    if (cls.height)
        j["height"] = *cls.height;
    else
        j["height"] = "full";
    return j;
}

Report::ClassEntry class_from_json(const ordered_json& j) {
    Report::ClassEntry cls;
    cls.shift_lambda = decode_rat_vec(j.at("shift_lambda"));
    cls.shift_ambient = decode_int_vec(j.at("shift_ambient"));
    cls.elements_lambda = decode_rat_vecs(j.at("elements_lambda"));
    cls.elements_ambient = decode_int_vecs(j.at("elements_ambient"));
    cls.ideal_min_gens = decode_int_vecs(j.at("ideal_min_gens"));
    cls.ideal_min_gens_ambient = decode_int_vecs(j.at("ideal_min_gens_ambient"));
    cls.ideal_unit = j.at("ideal_unit").get<bool>();
    if (j.at("height").is_number_integer()) cls.height = j.at("height").get<int>();
    return cls;
}

} // namespace

std::string render_machine(const Report& report) {
    ordered_json j;
    j["command"] = report.command;
    j["input"] = spec_to_json(report.input);
    j["basis"] = ordered_json{{"indices", report.basis_indices},
                              {"vectors", encode_list(report.basis_vectors)}};
    j["f"] = encode(report.f);
    j["apery"] = ordered_json{{"lambda", encode_list(report.apery_lambda)},
                              {"ambient", encode_list(report.apery_ambient)}};
    ordered_json classes = ordered_json::array();
    for (const auto& cls : report.classes) classes.push_back(class_to_json(cls));
    j["classes"] = classes;

    ordered_json cm;
    cm["is_cm"] = report.cm.is_cm;
    if (report.cm.witness_class) cm["witness_class"] = *report.cm.witness_class;
    if (!report.cm.witness_lambda.empty())
        cm["witness_lambda"] = encode_list(report.cm.witness_lambda);
    if (!report.cm.witness_ambient.empty())
        cm["witness_ambient"] = encode_list(report.cm.witness_ambient);
    if (!report.cm.shifts_ambient.empty())
        cm["shifts_ambient"] = encode_list(report.cm.shifts_ambient);
    j["cm"] = cm;

    if (report.closure)
        j["closure"] = ordered_json{{"generators", encode_list(report.closure->generators)},
                                    {"shifts", encode_list(report.closure->shifts)}};
    if (report.saturation)
        j["saturation"] = ordered_json{{"generators", encode_list(report.saturation->generators)}};
    if (report.chain)
        j["chain"] = ordered_json{{"b_in_closure", report.chain->b_in_closure},
                                  {"closure_in_saturation", report.chain->closure_in_saturation}};
    if (report.verification) {
        ordered_json v;
        v["bound"] = report.verification->bound;
        if (report.verification->decomposition_ok)
            v["decomposition_ok"] = *report.verification->decomposition_ok;
        if (report.verification->saturation_ok)
            v["saturation_ok"] = *report.verification->saturation_ok;
        j["verification"] = v;
    }
    if (report.probe)
        j["probe"] = ordered_json{{"samples", report.probe->samples},
                                  {"seed", report.probe->seed},
                                  {"box_bound", report.probe->box_bound},
                                  {"cm_probes", report.probe->cm_probes},
                                  {"violations", report.probe->violations}};
    return j.dump(2) + "\n";
}

Report report_from_machine(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report document: ") + e.what());
    }
    try {
        Report report;
        report.command = j.at("command").get<std::string>();
        report.input = spec_from_json(j.at("input"));
        report.basis_indices = j.at("basis").at("indices").get<std::vector<int>>();
        report.basis_vectors = decode_int_vecs(j.at("basis").at("vectors"));
        report.f = decode_int(j.at("f"));
        report.apery_lambda = decode_rat_vecs(j.at("apery").at("lambda"));
        report.apery_ambient = decode_int_vecs(j.at("apery").at("ambient"));
        for (const auto& entry : j.at("classes"))
            report.classes.push_back(class_from_json(entry));

        const auto& cm = j.at("cm");
        report.cm.is_cm = cm.at("is_cm").get<bool>();
        if (cm.contains("witness_class"))
            report.cm.witness_class = cm["witness_class"].get<int>();
        if (cm.contains("witness_lambda"))
            report.cm.witness_lambda = decode_rat_vecs(cm["witness_lambda"]);
        if (cm.contains("witness_ambient"))
            report.cm.witness_ambient = decode_int_vecs(cm["witness_ambient"]);
        if (cm.contains("shifts_ambient"))
            report.cm.shifts_ambient = decode_int_vecs(cm["shifts_ambient"]);

        if (j.contains("closure"))
            report.closure = Report::ClosureSection{
                decode_int_vecs(j["closure"].at("generators")),
                decode_int_vecs(j["closure"].at("shifts"))};
        if (j.contains("saturation"))
            report.saturation =
                Report::SaturationSection{decode_int_vecs(j["saturation"].at("generators"))};
        if (j.contains("chain"))
            report.chain = Report::ChainSection{
                j["chain"].at("b_in_closure").get<bool>(),
                j["chain"].at("closure_in_saturation").get<bool>()};
        if (j.contains("verification")) {
            Report::VerificationSection v;
            v.bound = j["verification"].at("bound").get<long>();
            if (j["verification"].contains("decomposition_ok"))
                v.decomposition_ok = j["verification"]["decomposition_ok"].get<bool>();
            if (j["verification"].contains("saturation_ok"))
                v.saturation_ok = j["verification"]["saturation_ok"].get<bool>();
            report.verification = v;
        }
        if (j.contains("probe"))
            report.probe = Report::ProbeSection{j["probe"].at("samples").get<long>(),
                                                j["probe"].at("seed").get<unsigned long>(),
                                                j["probe"].at("box_bound").get<long>(),
                                                j["probe"].at("cm_probes").get<long>(),
                                                j["probe"].at("violations").get<long>()};
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report document missing fields: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Text rendering.
// ---------------------------------------------------------------------------

namespace {

std::string join_vectors(const std::vector<IntVec>& vs) {
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ", ";
        s += to_string(vs[i]);
    }
    return s;
}

std::string join_vectors(const std::vector<RatVec>& vs) {
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ", ";
        s += to_string(vs[i]);
    }
    return s;
}

} // namespace

std::string render_text(const Report& report) {
    std::ostringstream out;
    out << "command: " << report.command << "\n";
    out << "generators: " << join_vectors(report.input.generators) << "\n";
    for (const std::string& w : report.input.warnings) out << "warning: " << w << "\n";
    out << "basis: " << join_vectors(report.basis_vectors) << "\n";
    out << "f = " << report.f.get_str() << "\n";
    out << "apery set (ambient): " << join_vectors(report.apery_ambient) << "\n";
    out << "apery set (lambda):  " << join_vectors(report.apery_lambda) << "\n";
    for (size_t jdx = 0; jdx < report.classes.size(); ++jdx) {
        const auto& cls = report.classes[jdx];
        out << "class " << (jdx + 1) << ": elements " << join_vectors(cls.elements_ambient)
            << "; shift " << to_string(cls.shift_ambient) << "; ideal ";
        if (cls.ideal_unit)
            out << "unit";
        else
            out << "min gens " << join_vectors(cls.ideal_min_gens) << " (height "
                << (cls.height ? std::to_string(*cls.height) : std::string("full")) << ")";
        out << "\n";
    }
    if (report.cm.is_cm) {
        out << "Cohen-Macaulay: yes; free shifts " << join_vectors(report.cm.shifts_ambient)
            << "\n";
    } else {
        out << "Cohen-Macaulay: no; class " << (*report.cm.witness_class + 1)
            << " contains " << join_vectors(report.cm.witness_ambient) << "\n";
    }
    if (report.closure)
        out << "closure generators: " << join_vectors(report.closure->generators)
            << " (shifts " << join_vectors(report.closure->shifts) << ")\n";
    if (report.saturation)
        out << "saturation generators: " << join_vectors(report.saturation->generators) << "\n";
    if (report.chain)
        out << "chain: B in closure: " << (report.chain->b_in_closure ? "yes" : "no")
            << "; closure in saturation: "
            << (report.chain->closure_in_saturation ? "yes" : "no") << "\n";
    if (report.verification) {
        out << "verification (bound " << report.verification->bound << "):";
        if (report.verification->decomposition_ok)
            out << " decomposition "
                << (*report.verification->decomposition_ok ? "ok" : "FAILED");
        if (report.verification->saturation_ok)
            out << " saturation " << (*report.verification->saturation_ok ? "ok" : "FAILED");
        out << "\n";
    }
    if (report.probe)
        out << "minimality probe: " << report.probe->samples << " samples (seed "
            << report.probe->seed << ", box " << report.probe->box_bound << "); "
            << report.probe->cm_probes << " Cohen-Macaulay probes; "
            << report.probe->violations << " violations\n";
    return out.str();
}

} // namespace semicm
