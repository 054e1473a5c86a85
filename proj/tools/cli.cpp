// Batch front end: load spaces and correspondences, run calculus operations,
// verification suites, homology, certificates, and fixed-set solving.
//
// Exit codes: 0 success, 1 validation failure, 2 bound exceeded,
// 3 malformed input.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mvhom/engine.hpp"
#include "mvhom/errors.hpp"
#include "mvhom/fixedset.hpp"
#include "mvhom/json_io.hpp"

using namespace mvhom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitBound = 2;
constexpr int kExitMalformed = 3;

struct Options {
    std::string format = "json";
    uint64_t seed = 0; // reserved; current subcommands are fully deterministic
    std::size_t enum_bound = 1000000;
};

void print_report(const json& j, const Options& opt, const std::string& text) {
    if (opt.format == "text")
        std::cout << text;
    else
        std::cout << dump_canonical(j);
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::string identity_text(const IdentityReport& report) {
    std::ostringstream os;
    os << "identity                     n   i   j   status\n";
    for (const auto& c : report.checks) {
        os << c.identity;
        for (size_t pad = c.identity.size(); pad < 28; ++pad) os << ' ';
        os << c.n << "   " << (c.i >= 0 ? std::to_string(c.i) : "-") << "   "
           << (c.j >= 0 ? std::to_string(c.j) : "-") << "   " << (c.ok ? "ok" : "FAIL") << "\n";
    }
    os << "checked " << report.checks.size() << " instances, " << report.failures()
       << " failures\n";
    return os.str();
}

int run_validate(const std::string& path, const Options& opt) {
    json j = load_json_file(path);
    FinSpace source, target;
    std::vector<std::pair<int, int>> pairs;
    graph_from_json(j, source, target, pairs);
    Validity v = validate(source, target, pairs);
    std::ostringstream text;
    text << (v.is_valid ? "valid" : "invalid") << "\n";
    for (const auto& f : v.failures) {
        text << "  " << f.criterion << ":";
        for (const auto& w : f.witness) text << " " << w;
        text << "\n";
    }
    print_report(validity_to_json(v), opt, text.str());
    return v.is_valid ? kExitOk : kExitInvalid;
}

int run_binary_op(const std::string& left, const std::string& right, bool is_box,
                  const Options& opt) {
    Corr r = corr_from_json(load_json_file(left));
    Corr s = corr_from_json(load_json_file(right));
    Corr out = is_box ? box(r, s) : compose(r, s);
    std::ostringstream text;
    for (const auto& [x, y] : out.pairs())
        text << out.source().point(x) << " -> " << out.target().point(y) << "\n";
    print_report(corr_to_json(out), opt, text.str());
    return kExitOk;
}

int run_identities(bool affine, bool finite, int max_n, const Options& opt) {
    if (affine == finite) throw InputError("choose exactly one of --affine / --finite");
    IdentityReport report = affine ? verify_prism_identities(max_n) : verify_fin_identities(max_n);
    json j;
    j["suite"] = affine ? "affine" : "finite";
    j["max_n"] = max_n;
    j["checks"] = identity_report_to_json(report);
    j["failures"] = report.failures();
    print_report(j, opt, identity_text(report));
    return report.all_ok() ? kExitOk : kExitInvalid;
}

int run_homology(const std::string& path, int max_n, bool high, const Options& opt) {
    auto space = share(space_from_json(load_json_file(path)));
    HomologyOptions hopt;
    hopt.attempt_high_degrees = high;
    hopt.enumeration.max_basis = opt.enum_bound;
    HomologyReport report = space_homology(space, max_n, hopt);
    std::ostringstream text;
    text << "finite-model homology\n";
    for (const auto& g : report.groups) {
        text << "H_" << g.n << " = ";
        if (!g.computed) {
            text << "(skipped: " << g.skipped_reason << ")\n";
            continue;
        }
        text << "Z^" << g.group.rank;
        for (const auto& t : g.group.torsion) text << " + Z/" << t;
        text << "\n";
    }
    print_report(homology_report_to_json(report), opt, text.str());
    return report.bound_exceeded ? kExitBound : kExitOk;
}

int run_certify(const std::string& path, const std::string& basepoint, const Options& opt) {
    Chain cycle = chain_from_json(load_json_file(path));
    if (cycle.is_zero() && cycle.degree < 1)
        throw InputError("certify: cycle must have positive degree");
    int x0 = 0;
    if (!cycle.is_zero()) x0 = cycle.terms.begin()->first.target().index_of(basepoint);
    Certificate cert = nullhomotopy_certificate(cycle, x0);
    std::ostringstream text;
    text << (cert.verified ? "verified" : "unverified") << " filling with "
         << cert.filling.terms.size() << " terms\n";
    for (const auto& s : cert.steps) text << "  " << s << "\n";
    print_report(certificate_to_json(cert), opt, text.str());
    return cert.verified ? kExitOk : kExitInvalid;
}

int run_fixedset(const std::string& path, const Options& opt) {
    Corr t = corr_from_json(load_json_file(path));
    FixedSetReport report = greatest_fixed_subset(t);
    std::ostringstream text;
    text << "fixed set:";
    for (const auto& name : point_names(t.source(), report.fixed_set)) text << " " << name;
    text << "\nstabilized at iteration " << report.stabilized_at << "\n";
    print_report(fixed_set_report_to_json(report, t.source()), opt, text.str());
    return kExitOk;
}

int run_mpath(const std::string& path, const std::string& from, const std::string& to,
              const Options& opt) {
    auto space = share(space_from_json(load_json_file(path)));
    Corr path_corr = mpath(space, point_indices(*space, split_csv(from)),
                           point_indices(*space, split_csv(to)));
    std::ostringstream text;
    for (const auto& [x, y] : path_corr.pairs())
        text << path_corr.source().point(x) << " -> " << path_corr.target().point(y) << "\n";
    print_report(corr_to_json(path_corr), opt, text.str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus of correspondences and multivalued homology on finite models"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", opt.seed, "seed for randomized subcommands (reserved)");
    app.add_option("--enum-bound", opt.enum_bound, "per-degree basis bound");

    std::string corr_path, corr_path2, space_path, cycle_path, basepoint, from_pts, to_pts;
    int max_n = 3;
    bool affine = false, finite = false, high = false;

    auto* validate_cmd = app.add_subcommand("validate", "check a correspondence, with witnesses");
    validate_cmd->add_option("--corr", corr_path, "correspondence file")->required();

    auto* compose_cmd = app.add_subcommand("compose", "compose two correspondences");
    compose_cmd->add_option("first", corr_path, "R : X -> Y")->required();
    compose_cmd->add_option("second", corr_path2, "S : Y -> Z")->required();

    auto* box_cmd = app.add_subcommand("box", "box product of two correspondences");
    box_cmd->add_option("first", corr_path, "R")->required();
    box_cmd->add_option("second", corr_path2, "R'")->required();

    auto* verify_cmd = app.add_subcommand("verify-identities", "prism/simplicial identity suites");
    verify_cmd->add_flag("--affine", affine, "exact rational suite");
    verify_cmd->add_flag("--finite", finite, "finite-model suite");
    verify_cmd->add_option("--max-n", max_n, "largest n");

    auto* homology_cmd = app.add_subcommand("homology", "finite-model homology of a space");
    homology_cmd->add_option("--space", space_path, "space file")->required();
    homology_cmd->add_option("--max-n", max_n, "largest degree");
    homology_cmd->add_flag("--attempt-snf-high-degrees", high,
                           "compute degrees >= 2 over multi-point spaces");

    auto* certify_cmd = app.add_subcommand("certify", "nullhomotopy certificate for a cycle");
    certify_cmd->add_option("--cycle", cycle_path, "chain file")->required();
    certify_cmd->add_option("--basepoint", basepoint, "contraction basepoint")->required();

    auto* fixed_cmd = app.add_subcommand("fixedset", "greatest fixed subset by image iteration");
    fixed_cmd->add_option("--corr", corr_path, "self-correspondence file")->required();

    auto* mpath_cmd = app.add_subcommand("mpath", "multivalued path between finite subsets");
    mpath_cmd->add_option("--space", space_path, "space file")->required();
    mpath_cmd->add_option("--from", from_pts, "comma-separated points")->required();
    mpath_cmd->add_option("--to", to_pts, "comma-separated points")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(validate_cmd)) return run_validate(corr_path, opt);
        if (app.got_subcommand(compose_cmd)) return run_binary_op(corr_path, corr_path2, false, opt);
        if (app.got_subcommand(box_cmd)) return run_binary_op(corr_path, corr_path2, true, opt);
        if (app.got_subcommand(verify_cmd)) return run_identities(affine, finite, max_n, opt);
        if (app.got_subcommand(homology_cmd)) return run_homology(space_path, max_n, high, opt);
        if (app.got_subcommand(certify_cmd)) return run_certify(cycle_path, basepoint, opt);
        if (app.got_subcommand(fixed_cmd)) return run_fixedset(corr_path, opt);
        if (app.got_subcommand(mpath_cmd)) return run_mpath(space_path, from_pts, to_pts, opt);
    } catch (const BoundError& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return kExitBound;
    } catch (const ValidityError& e) {
        std::cerr << "validation failure: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const InputError& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMalformed;
    }
    return kExitOk;
}
