#pragma once

#include "cmtk/hodge.hpp"
#include "cmtk/verdict.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace cmtk::io {

using nlohmann::json;

/// Frame order cap for parsed configs; reads CMTK_MAX_ORDER (default 64).
int max_frame_order();

// ---- scalar encoding ----
// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
json int_to_json(const Int& v);
Int int_from_json(const json& j, const char* what);

// ---- frame / CM type / pair specs ----
// Frame spec: {"cyclic": n} or {"product": [n1,...], "conj": [e1,...]}.
json frame_spec_to_json(const FrameSpec& spec);
GaloisFrame parse_frame(const json& j);

json cm_type_to_json(const CMType& cm);
CMType parse_cm_type(const json& j);
CMType parse_cm_type(const json& j, const GaloisFrame& frame);  // phi only

struct PairSpec {
    GaloisFrame frame;
    CMType cm1;
    CMType cm2;
    std::optional<WitnessBounds> bounds;
};

PairSpec parse_pair_spec(const json& j);
json pair_spec_to_json(const PairSpec& p);

// ---- low-dim descriptors ----
LowDimDescriptor parse_lowdim_descriptor(const json& j);
json lowdim_descriptor_to_json(const LowDimDescriptor& d);

struct LowDimSpec {
    LowDimDescriptor a;
    LowDimDescriptor b;
};
LowDimSpec parse_lowdim_spec(const json& j);

// ---- results ----
json fg_group_to_json(const FgAbelianGroup& g);
FgAbelianGroup fg_group_from_json(const json& j);

json lattice_to_json(const CharLattice& lat);  // frame spec + generator vectors

json verdict_to_json(const TorsionVerdict& v);
json pair_verdict_to_json(const PairVerdict& v, const MutualReport* ranks = nullptr);

json witness_to_json(const HodgeWitness& w);
HodgeWitness parse_witness(const json& j, const GaloisFrame& frame);

/// Deterministic report envelope: identical inputs and version produce
/// byte-identical output.
json make_report(const std::string& command, const std::string& input_digest,
                 json result);

/// FNV-1a 64-bit digest of raw input bytes, as "fnv1a64:<hex>".
std::string digest(const std::string& bytes);

std::string dump_report(const json& report);                // canonical JSON text
std::string report_to_text(const json& report);             // --format text

json load_json_file(const std::string& path);
std::string read_file(const std::string& path);

} // namespace cmtk::io
