#include "cmtk/io.hpp"
#include "cmtk/oracle.hpp"
#include "cmtk/version.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <random>

namespace {

using cmtk::io::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBoundsExhausted = 3;

struct GlobalOpts {
    std::string format = "json";
    uint64_t seed = 0xC0FFEE;
};

void emit(const json& report, const GlobalOpts& g) {
    if (g.format == "text")
        std::cout << cmtk::io::report_to_text(report);
    else
        std::cout << cmtk::io::dump_report(report);
}

json classify_result(const cmtk::GaloisFrame& frame) {
    json orbits = json::array();
    for (const auto& orbit : cmtk::classify_cm_types(frame)) {
        json rec;
        rec["representative"] = orbit.representative.phi();
        rec["size"] = orbit.size;
        rec["primitive"] = cmtk::is_primitive(orbit.representative);
        rec["nondegenerate"] = cmtk::is_nondegenerate(orbit.representative);
        rec["rank"] = cmtk::mt_lattice(orbit.representative).rank();
        orbits.push_back(std::move(rec));
    }
    json result;
    result["frame"] = cmtk::io::frame_spec_to_json(frame.spec());
    result["count"] = orbits.size();
    result["orbits"] = std::move(orbits);
    return result;
}

json oracle_result(uint64_t seed, int cases, int max_order) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-3, 3);
    json checks = json::array();

    // HNF against the naive span checker, plus idempotence
    {
        int ok = 0;
        for (int c = 0; c < cases; ++c) {
            cmtk::IntMat m(3, cmtk::IntVec(3));
            for (auto& row : m)
                for (auto& x : row) x = entry(rng);
            cmtk::IntMat h = cmtk::hermite_form(m);
            bool good = cmtk::oracle::spans_equal_echelon(m, h) && cmtk::hermite_form(h) == h;
            ok += good;
        }
        checks.push_back({{"name", "hnf_vs_naive_span"}, {"cases", cases}, {"ok", ok == cases}});
    }
    // SNF invariants against the minors formula
    {
        int ok = 0;
        for (int c = 0; c < cases; ++c) {
            cmtk::IntMat m(3, cmtk::IntVec(3));
            for (auto& row : m)
                for (auto& x : row) x = entry(rng);
            ok += cmtk::cokernel_invariants(m, 3) == cmtk::oracle::cokernel_via_minors(m, 3);
        }
        checks.push_back({{"name", "snf_vs_minors"}, {"cases", cases}, {"ok", ok == cases}});
    }
    // witness existence matches the verdict, exhaustively per frame order
    {
        long pairs = 0;
        bool all = true;
        for (int n = 2; n <= max_order; n += 2) {
            auto frame = cmtk::GaloisFrame::cyclic(n);
            auto types = cmtk::enumerate_cm_types(frame);
            for (const auto& a : types)
                for (const auto& b : types) {
                    ++pairs;
                    auto res = cmtk::find_witness(a, b);
                    bool pti = cmtk::decide_cm_pair(a, b).dir12.kind ==
                               cmtk::TorsionKind::PotentiallyTorsionInfinite;
                    if (pti != (res.status == cmtk::WitnessStatus::Found)) all = false;
                    if (res.witness && !cmtk::verify_witness(*res.witness, a, b)) all = false;
                }
        }
        checks.push_back({{"name", "witness_iff_verdict"}, {"cases", pairs}, {"ok", all}});
    }
    // lattice sum/intersection vs box enumeration on tiny random lattices
    {
        std::uniform_int_distribution<int> small(-2, 2);
        auto frame = cmtk::GaloisFrame::cyclic(4);
        int ok = 0;
        const int runs = std::min(cases, 100);
        for (int c = 0; c < runs; ++c) {
            auto rand_lattice = [&] {
                std::vector<cmtk::GroupRingVector> gens;
                for (int i = 0; i < 2; ++i) {
                    auto v = cmtk::GroupRingVector::zero(frame);
                    for (auto& x : v.coeffs) x = small(rng);
                    gens.push_back(std::move(v));
                }
                return cmtk::CharLattice(frame, std::move(gens));
            };
            auto a = rand_lattice();
            auto b = rand_lattice();
            auto inter = cmtk::lattice_intersection(a, b);
            auto sum = cmtk::lattice_sum(a, b);
            bool good = inter.rank() + sum.rank() == a.rank() + b.rank();
            cmtk::IntMat ga, gb;
            for (const auto& v : a.generators()) ga.push_back(v.coeffs);
            for (const auto& v : b.generators()) gb.push_back(v.coeffs);
            // each intersection basis vector must lie in both lattices;
            // the Cramer bound 2 * max|v| * max|g| caps the coefficients
            for (const auto& row : inter.basis()) {
                cmtk::Int maxv = 0;
                for (const auto& x : row) maxv = std::max(maxv, cmtk::abs_int(x));
                long bound = 4 * static_cast<long>(maxv) + 2;
                good = good && cmtk::oracle::box_member(ga, row, bound) &&
                       cmtk::oracle::box_member(gb, row, bound);
            }
            ok += good;
        }
        checks.push_back({{"name", "intersection_vs_box"}, {"cases", runs}, {"ok", ok == runs}});
    }

    bool all_ok = true;
    for (const auto& c : checks) all_ok = all_ok && c.at("ok").get<bool>();
    json result;
    result["checks"] = std::move(checks);
    result["ok"] = all_ok;
    result["seed"] = seed;
    return result;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact CM-type torsion toolkit"};
    app.set_version_flag("--version", std::string(cmtk::kToolName) + " " + cmtk::kVersion);
    app.fallthrough();  // allow the global flags after a subcommand name

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", g.seed, "seed for randomized property checks");
    app.require_subcommand(1);

    // classify
    auto* classify = app.add_subcommand("classify", "classify CM types of a frame");
    long cyclic_n = 0;
    std::string frame_file;
    classify->add_option("--cyclic", cyclic_n, "cyclic frame order");
    classify->add_option("--frame", frame_file, "frame spec JSON file");

    // verdict
    auto* verdict = app.add_subcommand("verdict", "decide a CM pair in both directions");
    std::string pair_file;
    verdict->add_option("--pair", pair_file, "pair spec JSON file")->required();

    // witness
    auto* witness = app.add_subcommand("witness", "search for / verify a torsion-infinite Hodge class");
    std::string wpair_file, verify_file;
    long opt_max_r = -1, opt_max_t = -1;
    witness->add_option("--pair", wpair_file, "pair spec JSON file")->required();
    witness->add_option("--verify", verify_file, "verify a witness JSON file instead of searching");
    witness->add_option("--max-r", opt_max_r, "search bound on r (default |G|)");
    witness->add_option("--max-t", opt_max_t, "search bound on the twist (default |G|)");

    // lowdim
    auto* lowdim = app.add_subcommand("lowdim", "decision table for dimensions up to 3");
    std::string lowdim_file;
    lowdim->add_option("--file", lowdim_file, "descriptor pair JSON file")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "run brute-force cross-checks");
    int oracle_cases = 200;
    int oracle_max_order = 8;
    oracle->add_option("--cases", oracle_cases, "random cases per check");
    oracle->add_option("--max-order", oracle_max_order, "largest frame order for exhaustive checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;  // bad flags are input errors
    }

    try {
        if (classify->parsed()) {
            json result;
            std::string digest_src;
            if (!frame_file.empty()) {
                digest_src = cmtk::io::read_file(frame_file);
                result = classify_result(cmtk::io::parse_frame(json::parse(digest_src)));
            } else if (cyclic_n != 0) {
                json spec{{"cyclic", cyclic_n}};
                digest_src = spec.dump();
                result = classify_result(cmtk::io::parse_frame(spec));
            } else {
                throw cmtk::input_error("classify: give --cyclic N or --frame FILE");
            }
            emit(cmtk::io::make_report("classify", cmtk::io::digest(digest_src), result), g);
            return kExitOk;
        }

        if (verdict->parsed()) {
            std::string raw = cmtk::io::read_file(pair_file);
            auto spec = cmtk::io::parse_pair_spec(json::parse(raw));
            auto pv = cmtk::decide_cm_pair(spec.cm1, spec.cm2);
            auto ranks = cmtk::mutual_verdict_equivalences(spec.cm1, spec.cm2);
            json result = cmtk::io::pair_verdict_to_json(pv, &ranks);
            emit(cmtk::io::make_report("verdict", cmtk::io::digest(raw), result), g);
            return kExitOk;
        }

        if (witness->parsed()) {
            std::string raw = cmtk::io::read_file(wpair_file);
            auto spec = cmtk::io::parse_pair_spec(json::parse(raw));
            json result;
            int code = kExitOk;
            if (!verify_file.empty()) {
                std::string wraw = cmtk::io::read_file(verify_file);
                auto w = cmtk::io::parse_witness(json::parse(wraw), spec.frame);
                auto check = cmtk::verify_witness(w, spec.cm1, spec.cm2);
                result["status"] = check.ok ? "verified" : "invalid";
                if (!check.ok) {
                    result["reason"] = cmtk::witness_error_name(check.error);
                    result["detail"] = check.detail;
                }
                result["degree"] = cmtk::degree_descriptor(w);
                raw += wraw;
            } else {
                cmtk::WitnessBounds bounds = spec.bounds.value_or(cmtk::WitnessBounds{});
                if (opt_max_r >= 0) bounds.max_r = opt_max_r;
                if (opt_max_t >= 0) bounds.max_t = opt_max_t;
                auto res = cmtk::find_witness(spec.cm1, spec.cm2, bounds);
                switch (res.status) {
                    case cmtk::WitnessStatus::Found:
                        result["status"] = "found";
                        result["witness"] = cmtk::io::witness_to_json(*res.witness);
                        result["degree"] = cmtk::degree_descriptor(*res.witness);
                        break;
                    case cmtk::WitnessStatus::ProvenAbsent:
                        result["status"] = "proven_absent";
                        break;
                    case cmtk::WitnessStatus::BoundsExhausted:
                        result["status"] = "bounds_exhausted";
                        code = kExitBoundsExhausted;
                        break;
                }
            }
            emit(cmtk::io::make_report("witness", cmtk::io::digest(raw), result), g);
            return code;
        }

        if (lowdim->parsed()) {
            std::string raw = cmtk::io::read_file(lowdim_file);
            auto spec = cmtk::io::parse_lowdim_spec(json::parse(raw));
            auto [ab, ba] = cmtk::low_dim_verdict(spec.a, spec.b);
            json result;
            result["direction_12"] = cmtk::io::verdict_to_json(ab);
            result["direction_21"] = cmtk::io::verdict_to_json(ba);
            result["mutual_essentially_torsion_finite"] =
                ab.kind == cmtk::TorsionKind::EssentiallyTorsionFinite &&
                ba.kind == cmtk::TorsionKind::EssentiallyTorsionFinite;
            emit(cmtk::io::make_report("lowdim", cmtk::io::digest(raw), result), g);
            return kExitOk;
        }

        if (oracle->parsed()) {
            json result = oracle_result(g.seed, oracle_cases, oracle_max_order);
            std::string digest_src = std::to_string(g.seed) + ":" + std::to_string(oracle_cases) +
                                     ":" + std::to_string(oracle_max_order);
            emit(cmtk::io::make_report("oracle", cmtk::io::digest(digest_src), result), g);
            return result.at("ok").get<bool>() ? kExitOk : 1;
        }
    } catch (const cmtk::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
