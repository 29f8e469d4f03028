// Command-line front end. Every subcommand prints a single JSON report on
// standard output. Exit codes: 0 on pass, 1 on a bound violation, 2 on
// input or usage errors.

#include <cstdint>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "simbound/simbound.hpp"

using namespace simbound;
using nlohmann::json;

namespace {

void print_report(const json& j) { std::cout << j.dump(2) << "\n"; }

json bound_report_to_json(const BoundReport& r) {
    json j{{"input", r.input},
           {"witness_degree", r.witness_degree},
           {"bound", r.bound},
           {"actual", r.actual},
           {"betti1", r.betti1},
           {"hypothesis", r.hypothesis},
           {"pass", r.pass}};
    if (!r.note.empty()) j["note"] = r.note;
    if (r.witness) {
        json factors = json::array();
        for (const auto& c : r.witness->factors) factors.push_back(io::cochain_to_json(c));
        j["witness"] = {{"factors", factors},
                        {"product", io::cochain_to_json(r.witness->product)}};
    }
    return j;
}

json sign_vector_to_json(const SignVector& e) {
    json a = json::array();
    for (int v : e.e) a.push_back(v);
    return a;
}

json hn_to_json(const HNElement& h) {
    return json{{"trans", h.trans}, {"perm", h.perm}};
}

GroupAction load_action(const std::string& path, const DeltaSet& ds) {
    auto act = io::action_from_json(io::read_json_file(path));
    validate_action(ds, act);
    return act;
}

int run_construct(const std::string& shape, const std::string& out,
                  const std::string& action_out, std::size_t dim, std::size_t m,
                  std::size_t factors, const std::string& group_spec, std::size_t n_join) {
    json payload;
    json action_payload;
    std::vector<std::size_t> counts;

    if (shape == "crosspolytope") {
        auto sc = crosspolytope_complex(dim);
        payload = io::complex_to_json(sc);
        counts = complex_to_delta(sc).counts;
        if (!action_out.empty()) action_payload = io::action_to_json(antipodal_action(sc));
    } else if (shape == "rp") {
        auto ds = rp_deltaset(dim);
        counts = ds.counts;
        payload = io::delta_to_json(ds);
    } else if (shape == "torus7") {
        auto sc = torus7_complex();
        counts = complex_to_delta(sc).counts;
        payload = io::complex_to_json(sc);
    } else if (shape == "cycle") {
        auto sc = cycle_complex(m);
        counts = complex_to_delta(sc).counts;
        payload = io::complex_to_json(sc);
    } else if (shape == "torus-product") {
        require(factors >= 1, errc::io, "need at least one factor");
        auto sc = cycle_complex(m);
        for (std::size_t i = 1; i < factors; ++i)
            sc = product_triangulation(sc, cycle_complex(m));
        counts = complex_to_delta(sc).counts;
        payload = io::complex_to_json(sc);
    } else if (shape == "eg" || shape == "bg") {
        auto group = io::parse_group_spec(group_spec);
        auto eg = eg_space(group, n_join);
        if (shape == "eg") {
            counts = eg.ds.counts;
            payload = io::delta_to_json(eg.ds);
        } else {
            auto bg = bg_space(eg);
            counts = bg.ds.counts;
            payload = io::delta_to_json(bg.ds);
        }
        // The emitted action is the free translation action on the join;
        // for bg it is the action whose quotient the output is.
        if (!action_out.empty()) action_payload = io::action_to_json(eg.left);
    } else {
        require(false, errc::io, "unknown shape: " + shape);
    }

    if (!action_out.empty()) {
        require(!action_payload.is_null(), errc::io,
                "shape " + shape + " has no action to emit");
        io::write_json_file(action_out, action_payload);
    }

    if (out.empty()) {
        print_report(payload);
    } else {
        io::write_json_file(out, payload);
        json summary{{"shape", shape}, {"counts", counts}, {"output", out}};
        if (!action_out.empty()) summary["action_output"] = action_out;
        print_report(summary);
    }
    return 0;
}

int run_cohomology(const std::string& input, bool ring, std::size_t basis_degree,
                   const std::string& basis_prefix) {
    auto ds = io::load_space(input);
    json j{{"input", input}, {"euler", euler_characteristic(ds)}};
    json betti = json::array();
    for (std::size_t k = 0; k < ds.counts.size(); ++k) betti.push_back(betti_number(ds, k));
    j["betti"] = betti;

    if (ring) {
        json witnesses = json::array();
        for (std::size_t n = 1; n < ds.counts.size(); ++n) {
            auto w = nonzero_product_search(ds, n);
            if (!w) break;
            json factors = json::array();
            for (const auto& c : w->factors) factors.push_back(io::cochain_to_json(c));
            witnesses.push_back({{"degree", n},
                                 {"factors", factors},
                                 {"product", io::cochain_to_json(w->product)}});
        }
        j["ring_witnesses"] = witnesses;
    }

    if (!basis_prefix.empty()) {
        auto basis = cohomology_basis(ds, basis_degree);
        json written = json::array();
        for (std::size_t i = 0; i < basis.representatives.size(); ++i) {
            std::string path = basis_prefix + std::to_string(i) + ".json";
            io::write_json_file(path, io::cochain_to_json(basis.representatives[i]));
            written.push_back(path);
        }
        j["basis_degree"] = basis_degree;
        j["basis_files"] = written;
    }

    print_report(j);
    return 0;
}

int run_cover(const std::string& input, const std::vector<std::string>& cocycle_paths,
              const std::string& out) {
    auto ds = io::load_space(input);
    std::vector<Cochain> zs;
    for (const auto& p : cocycle_paths)
        zs.push_back(io::cochain_from_json(io::read_json_file(p)));
    auto cov = fiberwise_product(ds, zs);
    verify_covering(cov);
    auto payload = io::covering_to_json(cov);
    if (out.empty()) {
        print_report(payload);
    } else {
        io::write_json_file(out, payload);
        print_report(json{{"input", input},
                          {"sheet_bits", cov.sheet_bits},
                          {"base_counts", cov.base.counts},
                          {"total_counts", cov.total.counts},
                          {"deck_order", cov.deck.group.order},
                          {"verified", true},
                          {"output", out}});
    }
    return 0;
}

int run_check_bound(const std::string& input) {
    auto ds = io::load_space(input);
    auto r = check_corollary(ds);
    r.input = input;
    print_report(bound_report_to_json(r));
    return r.pass ? 0 : 1;
}

int run_check_theorem(const std::string& input, const std::string& action_path,
                      const std::string& rep_spec, std::uint64_t seed,
                      std::size_t retries, bool no_verify) {
    auto ds = io::load_space(input);
    auto act = load_action(action_path, ds);
    auto rep = io::parse_representation_spec(rep_spec, act.group);
    TheoremOptions opts;
    opts.seed = seed;
    opts.retries = retries;
    opts.verify = !no_verify;
    auto r = check_theorem(ds, act, rep, opts);
    r.input = input;
    print_report(bound_report_to_json(r));
    return r.pass ? 0 : 1;
}

int run_signflip(const std::string& group_spec, const std::string& rep_spec,
                 std::size_t n_join, std::uint64_t seed, const std::string& mode,
                 std::size_t budget) {
    auto group = io::parse_group_spec(group_spec);
    auto rep = io::parse_representation_spec(rep_spec, group);
    auto cfg = random_configuration(rep, n_join + 1, seed);
    const auto search_mode =
        mode == "sampled" ? SearchMode::sampled : SearchMode::exhaustive;
    require(mode == "sampled" || mode == "exhaustive", errc::io,
            "mode must be exhaustive or sampled");
    auto res = min_support_search(cfg, search_mode, budget, seed);
    print_report(json{{"group_order", group.order},
                      {"N", n_join},
                      {"degree", rep.dim},
                      {"mode", mode},
                      {"seed", seed},
                      {"bound", res.average_closed.str()},
                      {"orbit_count", res.orbit_count},
                      {"face_count", res.face_count},
                      {"e", sign_vector_to_json(res.e)},
                      {"average", res.average_enumerated.str()},
                      {"certified", res.certified},
                      {"inspected", res.inspected}});
    const bool violated =
        res.certified &&
        res.average_closed < Rational(static_cast<std::int64_t>(res.orbit_count));
    return violated ? 1 : 0;
}

int run_claim2(const std::string& group_spec, std::size_t n_join, std::size_t degree,
               std::vector<std::size_t> z_orbits, std::vector<std::size_t> c_orbits,
               std::size_t z_count, std::size_t c_count, std::uint64_t seed,
               std::size_t budget) {
    auto group = io::parse_group_spec(group_spec);
    auto eg = eg_space(group, n_join);
    auto bg = bg_space(eg);
    require(degree < bg.ds.counts.size(), errc::io, "degree exceeds the join");
    const std::size_t orbits = bg.ds.counts[degree];

    std::mt19937_64 rng(seed);
    auto sample = [&](std::size_t count) {
        require(count >= 1 && count <= orbits, errc::io, "orbit count out of range");
        std::vector<std::size_t> all(orbits);
        std::iota(all.begin(), all.end(), 0);
        for (std::size_t i = 0; i < count; ++i)
            std::swap(all[i], all[i + rng() % (orbits - i)]);
        all.resize(count);
        return all;
    };
    if (z_orbits.empty()) z_orbits = sample(z_count);
    if (c_orbits.empty()) c_orbits = sample(c_count);

    auto members_of = [&](const std::vector<std::size_t>& picked) {
        std::vector<bool> in(orbits, false);
        for (auto o : picked) {
            require(o < orbits, errc::io, "orbit index out of range");
            in[o] = true;
        }
        std::vector<std::size_t> members;
        for (std::size_t s = 0; s < eg.ds.counts[degree]; ++s)
            if (in[bg.projection[degree][s]]) members.push_back(s);
        return members;
    };
    auto r = claim2_experiment(eg, bg, degree, members_of(z_orbits), members_of(c_orbits),
                               budget);
    json j{{"group_order", group.order},
           {"N", n_join},
           {"degree", r.degree},
           {"z_orbits", z_orbits},
           {"c_orbits", c_orbits},
           {"z_count", r.z_count},
           {"c_count", r.c_count},
           {"threshold", r.threshold},
           {"average", r.average.str()},
           {"closed_form", r.closed_form.str()},
           {"elements", r.elements}};
    j["disjoint_h"] = r.disjoint_h ? hn_to_json(*r.disjoint_h) : json(nullptr);
    print_report(j);
    const bool below = r.z_count * r.c_count < r.threshold;
    return (below && !r.disjoint_h) ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Face-count bounds for symmetric delta-sets"};
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "Build a named space as JSON");
    std::string shape, out, action_out, group_spec = "Z2";
    std::size_t dim = 3, cycle_m = 3, factors = 2, n_join = 2;
    construct->add_option("--shape", shape,
                          "crosspolytope|rp|torus7|torus-product|eg|bg|cycle")
        ->required();
    construct->add_option("-o,--output", out, "output file (default: print to stdout)");
    construct->add_option("--action-out", action_out,
                          "also write the group action (crosspolytope, eg, bg)");
    construct->add_option("--dim", dim, "dimension for crosspolytope/rp");
    construct->add_option("--m", cycle_m, "cycle length for cycle/torus-product");
    construct->add_option("--factors", factors, "cycle factors for torus-product");
    construct->add_option("--group", group_spec, "group for eg/bg: Zm, Z2^k, or a file");
    construct->add_option("--N", n_join, "join parameter for eg/bg");

    auto* cohomology = app.add_subcommand("cohomology", "Betti numbers and ring witnesses");
    std::string coh_input, basis_prefix;
    bool ring = false;
    std::size_t basis_degree = 1;
    cohomology->add_option("--input", coh_input, "space file")->required();
    cohomology->add_flag("--ring", ring, "search for nonzero products of degree-1 classes");
    cohomology->add_option("--degree", basis_degree, "degree for --emit-basis");
    cohomology->add_option("--emit-basis", basis_prefix,
                           "write basis cocycles to <prefix><i>.json");

    auto* cover = app.add_subcommand("cover", "Covering from degree-1 cocycles");
    std::string cover_input, cover_out;
    std::vector<std::string> cocycle_paths;
    cover->add_option("--input", cover_input, "base space file")->required();
    cover->add_option("--cocycle", cocycle_paths, "cocycle file (repeatable)")->required();
    cover->add_option("-o,--output", cover_out, "covering output file");

    auto* check_bound = app.add_subcommand("check-bound", "Face-count bound from the ring");
    std::string cb_input;
    check_bound->add_option("--input", cb_input, "space file")->required();

    auto* check_thm = app.add_subcommand("check-theorem", "Orbit-count bound for an action");
    std::string ct_input, ct_action, ct_rep;
    std::uint64_t ct_seed = 0;
    std::size_t ct_retries = 8;
    bool no_verify = false;
    check_thm->add_option("--input", ct_input, "space file")->required();
    check_thm->add_option("--action", ct_action, "action file")->required();
    check_thm->add_option("--rep", ct_rep, "representation: sign, neg:<d>, or a file")
        ->required();
    check_thm->add_option("--seed", ct_seed, "seed for the witness configuration");
    check_thm->add_option("--retries", ct_retries, "fresh-seed retries for the witness");
    check_thm->add_flag("--no-verify", no_verify, "skip the witness, report assumed");

    auto* signflip = app.add_subcommand("signflip", "Minimum-support sign vector search");
    std::string sf_group, sf_rep = "sign", sf_mode = "exhaustive";
    std::size_t sf_n = 2, sf_budget = std::size_t(1) << 20;
    std::uint64_t sf_seed = 0;
    signflip->add_option("--group", sf_group, "group: Zm, Z2^k, or a file")->required();
    signflip->add_option("--rep", sf_rep, "representation: sign, neg:<d>, or a file");
    signflip->add_option("--N", sf_n, "join parameter (N+1 factors)")->required();
    signflip->add_option("--seed", sf_seed, "configuration seed");
    signflip->add_option("--mode", sf_mode, "exhaustive|sampled");
    signflip->add_option("--max-enum", sf_budget, "enumeration budget");

    auto* claim2 = app.add_subcommand("claim2", "Averaging experiment over the join symmetries");
    std::string c2_group;
    std::size_t c2_n = 2, c2_degree = 1, c2_zcount = 1, c2_ccount = 1;
    std::size_t c2_budget = 1'000'000;
    std::uint64_t c2_seed = 0;
    std::vector<std::size_t> c2_z, c2_c;
    claim2->add_option("--group", c2_group, "group: Zm, Z2^k, or a file")->required();
    claim2->add_option("--N", c2_n, "join parameter")->required();
    claim2->add_option("--n", c2_degree, "face dimension");
    claim2->add_option("--z-orbit", c2_z, "orbit index for Z (repeatable)");
    claim2->add_option("--c-orbit", c2_c, "orbit index for C (repeatable)");
    claim2->add_option("--z-count", c2_zcount, "random orbits for Z when none given");
    claim2->add_option("--c-count", c2_ccount, "random orbits for C when none given");
    claim2->add_option("--seed", c2_seed, "sampling seed");
    claim2->add_option("--max-enum", c2_budget, "symmetry-group enumeration budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(construct))
            return run_construct(shape, out, action_out, dim, cycle_m, factors, group_spec,
                                 n_join);
        if (app.got_subcommand(cohomology))
            return run_cohomology(coh_input, ring, basis_degree, basis_prefix);
        if (app.got_subcommand(cover)) return run_cover(cover_input, cocycle_paths, cover_out);
        if (app.got_subcommand(check_bound)) return run_check_bound(cb_input);
        if (app.got_subcommand(check_thm))
            return run_check_theorem(ct_input, ct_action, ct_rep, ct_seed, ct_retries,
                                     no_verify);
        if (app.got_subcommand(signflip))
            return run_signflip(sf_group, sf_rep, sf_n, sf_seed, sf_mode, sf_budget);
        if (app.got_subcommand(claim2))
            return run_claim2(c2_group, c2_n, c2_degree, c2_z, c2_c, c2_zcount, c2_ccount,
                              c2_seed, c2_budget);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == errc::contradiction ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
