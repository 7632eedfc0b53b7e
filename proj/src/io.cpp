#include "cmtk/io.hpp"

#include "cmtk/version.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace cmtk::io {

int max_frame_order() {
    const char* env = std::getenv("CMTK_MAX_ORDER");
    if (!env || !*env) return 64;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (!end || *end != '\0' || v < 2) throw input_error("CMTK_MAX_ORDER must be an integer >= 2");
    return static_cast<int>(v);
}

json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<int64_t>::min();
    static const Int hi = std::numeric_limits<int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<int64_t>(v);
    return v.str();
}

Int int_from_json(const json& j, const char* what) {
    if (j.is_number_integer()) return Int(j.get<int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw input_error(std::string(what) + ": bad integer string");
        }
    }
    throw input_error(std::string(what) + ": expected an integer");
}

json frame_spec_to_json(const FrameSpec& spec) {
    json j;
    switch (spec.kind) {
        case FrameSpec::Kind::Cyclic:
            j["cyclic"] = spec.cyclic_n;
            break;
        case FrameSpec::Kind::Product:
            j["product"] = spec.moduli;
            j["conj"] = spec.conj_coords;
            break;
        case FrameSpec::Kind::Custom:
            throw input_error("frames built from raw tables have no serializable spec");
    }
    return j;
}

GaloisFrame parse_frame(const json& j) {
    if (!j.is_object()) throw input_error("frame spec must be an object");
    const int cap = max_frame_order();
    if (j.contains("cyclic")) {
        long n = j.at("cyclic").get<long>();
        if (n > cap) throw input_error("frame order exceeds CMTK_MAX_ORDER");
        return GaloisFrame::cyclic(n);
    }
    if (j.contains("product")) {
        auto moduli = j.at("product").get<std::vector<long>>();
        if (!j.contains("conj")) throw input_error("product frame spec needs \"conj\"");
        auto conj = j.at("conj").get<std::vector<long>>();
        long order = 1;
        for (long m : moduli) {
            if (m < 1) throw input_error("cyclic factor must be positive");
            order *= m;
            if (order > cap) throw input_error("frame order exceeds CMTK_MAX_ORDER");
        }
        return GaloisFrame::product(moduli, conj);
    }
    throw input_error("frame spec must contain \"cyclic\" or \"product\"");
}

json cm_type_to_json(const CMType& cm) {
    json j;
    j["frame"] = frame_spec_to_json(cm.frame().spec());
    j["phi"] = cm.phi();
    return j;
}

CMType parse_cm_type(const json& j) {
    if (!j.is_object() || !j.contains("frame"))
        throw input_error("CM type spec needs \"frame\" and \"phi\"");
    return parse_cm_type(j, parse_frame(j.at("frame")));
}

CMType parse_cm_type(const json& j, const GaloisFrame& frame) {
    if (!j.contains("phi")) throw input_error("CM type spec needs \"phi\"");
    return CMType(frame, j.at("phi").get<std::vector<int>>());
}

PairSpec parse_pair_spec(const json& j) {
    if (!j.is_object()) throw input_error("pair spec must be an object");
    if (!j.contains("frame") || !j.contains("phi1") || !j.contains("phi2"))
        throw input_error("pair spec needs \"frame\", \"phi1\", \"phi2\"");
    GaloisFrame frame = parse_frame(j.at("frame"));
    CMType cm1(frame, j.at("phi1").get<std::vector<int>>());
    CMType cm2(frame, j.at("phi2").get<std::vector<int>>());
    std::optional<WitnessBounds> bounds;
    if (j.contains("bounds")) {
        const json& b = j.at("bounds");
        WitnessBounds wb;
        if (b.contains("max_r")) wb.max_r = b.at("max_r").get<long>();
        if (b.contains("max_t")) wb.max_t = b.at("max_t").get<long>();
        bounds = wb;
    }
    return PairSpec{std::move(frame), std::move(cm1), std::move(cm2), bounds};
}

json pair_spec_to_json(const PairSpec& p) {
    json j;
    j["frame"] = frame_spec_to_json(p.frame.spec());
    j["phi1"] = p.cm1.phi();
    j["phi2"] = p.cm2.phi();
    if (p.bounds) {
        json b;
        if (p.bounds->max_r >= 0) b["max_r"] = p.bounds->max_r;
        if (p.bounds->max_t >= 0) b["max_t"] = p.bounds->max_t;
        j["bounds"] = b;
    }
    return j;
}

LowDimDescriptor parse_lowdim_descriptor(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("albert_type"))
        throw input_error("low-dim descriptor needs \"dim\" and \"albert_type\"");
    LowDimDescriptor d;
    d.dim = j.at("dim").get<int>();
    d.albert_type = AlbertType::parse(j.at("albert_type").get<std::string>());
    if (j.contains("cm_type")) d.cm_type = parse_cm_type(j.at("cm_type"));
    if (j.contains("endo_embedding")) d.endo_embedding_flag = j.at("endo_embedding").get<bool>();
    return d;
}

json lowdim_descriptor_to_json(const LowDimDescriptor& d) {
    json j;
    j["dim"] = d.dim;
    j["albert_type"] = d.albert_type.to_string();
    if (d.cm_type) j["cm_type"] = cm_type_to_json(*d.cm_type);
    if (d.endo_embedding_flag) j["endo_embedding"] = *d.endo_embedding_flag;
    return j;
}

LowDimSpec parse_lowdim_spec(const json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b"))
        throw input_error("low-dim spec needs descriptors \"a\" and \"b\"");
    return LowDimSpec{parse_lowdim_descriptor(j.at("a")), parse_lowdim_descriptor(j.at("b"))};
}

json fg_group_to_json(const FgAbelianGroup& g) {
    json j;
    j["free_rank"] = g.free_rank;
    json tors = json::array();
    for (const auto& d : g.torsion) tors.push_back(int_to_json(d));
    j["torsion"] = std::move(tors);
    return j;
}

FgAbelianGroup fg_group_from_json(const json& j) {
    FgAbelianGroup g;
    g.free_rank = j.at("free_rank").get<long>();
    for (const auto& d : j.at("torsion")) g.torsion.push_back(int_from_json(d, "torsion"));
    return g;
}

json lattice_to_json(const CharLattice& lat) {
    json j;
    j["frame"] = frame_spec_to_json(lat.frame().spec());
    json gens = json::array();
    for (const auto& g : lat.generators()) {
        json row = json::array();
        for (const auto& c : g.coeffs) row.push_back(int_to_json(c));
        gens.push_back(std::move(row));
    }
    j["generators"] = std::move(gens);
    return j;
}

json verdict_to_json(const TorsionVerdict& v) {
    json j;
    j["kind"] = torsion_kind_name(v.kind);
    j["qspan_included"] = v.qspan_included;
    if (v.h_group) j["h_group"] = fg_group_to_json(*v.h_group);
    return j;
}

json pair_verdict_to_json(const PairVerdict& v, const MutualReport* ranks) {
    json j;
    j["direction_12"] = verdict_to_json(v.dir12);
    j["direction_21"] = verdict_to_json(v.dir21);
    j["mutual"] = v.mutual_pti();
    if (v.dir12.h_group) j["h12"] = fg_group_to_json(*v.dir12.h_group);
    if (v.dir21.h_group) j["h21"] = fg_group_to_json(*v.dir21.h_group);
    if (ranks) {
        json r;
        r["t1"] = ranks->rank1;
        r["t2"] = ranks->rank2;
        r["t12"] = ranks->rank12;
        j["ranks"] = std::move(r);
    }
    return j;
}

json witness_to_json(const HodgeWitness& w) {
    json j;
    json a = json::array();
    for (const auto& c : w.alpha0.coeffs) a.push_back(int_to_json(c));
    j["alpha0"] = std::move(a);
    j["r"] = int_to_json(w.r);
    j["s"] = int_to_json(w.s);
    j["m"] = int_to_json(w.m);
    j["n"] = int_to_json(w.n);
    j["twist"] = int_to_json(w.twist);
    json coeffs = json::array();
    for (const auto& [wt, e] : w.coeffs) {
        json entry;
        json row = json::array();
        for (const auto& c : wt.coeffs) row.push_back(int_to_json(c));
        entry["weight"] = std::move(row);
        entry["e"] = int_to_json(e);
        coeffs.push_back(std::move(entry));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

HodgeWitness parse_witness(const json& j, const GaloisFrame& frame) {
    const size_t n = static_cast<size_t>(frame.order());
    auto vec_from = [&](const json& arr, const char* what) {
        if (!arr.is_array() || arr.size() != n)
            throw input_error(std::string(what) + ": expected an array of length |G|");
        IntVec v;
        v.reserve(n);
        for (const auto& x : arr) v.push_back(int_from_json(x, what));
        return v;
    };
    HodgeWitness w(frame, GroupRingVector{frame, vec_from(j.at("alpha0"), "alpha0")});
    w.r = int_from_json(j.at("r"), "r");
    w.s = int_from_json(j.at("s"), "s");
    w.m = int_from_json(j.at("m"), "m");
    w.n = int_from_json(j.at("n"), "n");
    w.twist = int_from_json(j.at("twist"), "twist");
    for (const auto& entry : j.at("coeffs")) {
        GroupRingVector wt{frame, vec_from(entry.at("weight"), "coeff weight")};
        w.coeffs.emplace_back(std::move(wt), int_from_json(entry.at("e"), "coeff e"));
    }
    return w;
}

std::string digest(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;  // FNV offset basis
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;  // FNV prime
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << h;
    return os.str();
}

json make_report(const std::string& command, const std::string& input_digest, json result) {
    json j;
    j["command"] = command;
    j["input_digest"] = input_digest;
    j["result"] = std::move(result);
    j["tool"] = kToolName;
    j["version"] = kVersion;
    return j;
}

std::string dump_report(const json& report) {
    // nlohmann orders object keys; dump is deterministic for equal inputs
    return report.dump(2) + "\n";
}

namespace {

void render_text(const json& j, const std::string& prefix, std::ostringstream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || v.is_array()) {
                render_text(v, prefix.empty() ? k : prefix + "." + k, os);
            } else {
                os << (prefix.empty() ? k : prefix + "." + k) << ": " << v.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        size_t i = 0;
        for (const auto& v : j) {
            render_text(v, prefix + "[" + std::to_string(i) + "]", os);
            ++i;
        }
        if (j.empty()) os << prefix << ": []\n";
    } else {
        os << prefix << ": " << j.dump() << "\n";
    }
}

} // namespace

std::string report_to_text(const json& report) {
    std::ostringstream os;
    render_text(report, "", os);
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load_json_file(const std::string& path) {
    std::string text = read_file(path);
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("malformed JSON in " + path);
    return j;
}

} // namespace cmtk::io
