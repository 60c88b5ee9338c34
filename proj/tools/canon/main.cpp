#include "canon/acceptance.hpp"
#include "canon/compiler.hpp"
#include "canon/config.hpp"
#include "canon/error.hpp"
#include "canon/gallery.hpp"
#include "canon/linear.hpp"
#include "canon/neighbourhoods.hpp"
#include "canon/nonlinear.hpp"
#include "canon/polynomial.hpp"
#include "canon/retraction.hpp"
#include "canon/solve.hpp"
#include "canon/system_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace canon;

namespace {

enum Exit { kOk = 0, kFinding = 1, kUsage = 2, kUnknown = 3 };

struct Run {
    Config cfg = default_config();
    std::string format = "json";
    std::string out;
    std::string command;
    std::optional<std::uint64_t> seed;
    json params = json::object();

    algebra::SolveOptions solve() const {
        algebra::SolveOptions o;
        o.gb_budget = cfg.gb_budget;
        o.box_precision_bits = cfg.box_precision_bits;
        o.max_precision_bits = cfg.max_precision_bits;
        return o;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

void text_dump(std::ostream& os, const json& j, const std::string& prefix) {
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) text_dump(os, v, prefix.empty() ? k : prefix + "." + k);
    } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) text_dump(os, j[i], prefix + "[" + std::to_string(i) + "]");
    } else {
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

int emit(const Run& run, json report, int code) {
    json config = run.cfg.to_json();
    if (run.seed) config["seed"] = *run.seed;
    json doc = {{"schema", 1},
                {"version", CANON_VERSION},
                {"command", run.command},
                {"config", config},
                {"params", run.params},
                {"exit", code},
                {"report", std::move(report)}};
    std::ostringstream os;
    if (run.format == "text") text_dump(os, doc, "");
    else os << doc.dump(2) << '\n';
    if (run.out.empty()) std::cout << os.str();
    else write_file(run.out, os.str());
    return code;
}

json point_json(const algebra::SolutionPoint& p) {
    json coords = json::array();
    for (auto& c : p.coords) {
        auto z = c.approx();
        coords.push_back({{"exact", c.exact},
                          {"value", c.exact ? c.value.str() : ""},
                          {"re", z.real()},
                          {"im", z.imag()}});
    }
    return {{"point", p.str()}, {"real", p.is_real()}, {"coords", coords}};
}

const char* kind_name(algebra::SolutionKind k) {
    switch (k) {
        case algebra::SolutionKind::Inconsistent: return "inconsistent";
        case algebra::SolutionKind::ZeroDimensional: return "zero-dimensional";
        default: return "positive-dimensional";
    }
}

int cmd_solve(Run& run, const std::string& in, const std::string& domain) {
    auto sys = parse_system(read_file(in));
    auto dom = nonlinear::parse_domain(domain);
    auto polys = algebra::system_polys(sys);
    auto kind = algebra::classify(polys, run.cfg.gb_budget);
    json rep = {{"kind", kind_name(kind)}, {"domain", domain}, {"system", system_to_json(sys)}};
    if (kind == algebra::SolutionKind::ZeroDimensional) {
        auto set = algebra::enumerate_solutions(polys, run.solve());
        if (dom == nonlinear::Domain::R) set = algebra::real_points(set);
        json pts = json::array();
        for (auto& p : set.points) pts.push_back(point_json(p));
        rep["count"] = set.size();
        rep["points"] = pts;
    }
    return emit(run, rep, kOk);
}

int cmd_compile(Run& run, const std::string& in, const std::string& out, bool coarse, bool full_h,
                std::size_t verify, std::uint64_t seed) {
    auto sys = parse_poly_system(read_file(in));
    compiler::CompileOptions opt;
    opt.full_h = full_h;
    opt.coarse_cap = run.cfg.coarse_cap;
    auto res = coarse ? compiler::compile_coarse(sys, opt) : compiler::compile(sys, opt);
    if (!out.empty()) write_file(out, serialize_system(res.canonical));
    json rep = res.summary();
    int code = kOk;
    if (verify > 0) {
        run.seed = seed;
        auto v = compiler::verify_compilation(sys, res, verify, seed, run.cfg.jobs);
        rep["verify"] = v.to_json();
        if (!v.ok()) code = kFinding;
    }
    return emit(run, rep, code);
}

nbhd::FixedOptions fixed_options(const Run& run) {
    nbhd::FixedOptions o;
    o.solve = run.solve();
    if (run.seed) o.seed = *run.seed;
    return o;
}

std::vector<BigRational> parse_rationals(const std::string& list) {
    std::vector<BigRational> out;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto b = tok.find_first_not_of(' '), e = tok.find_last_not_of(' ');
        if (b == std::string::npos) throw ParseError("empty element in '" + list + "'");
        out.push_back(parse_rational(tok.substr(b, e - b + 1)));
    }
    return out;
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& raw) {
    std::map<std::string, std::string> out;
    for (auto& p : raw) {
        auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError("expected key=value, got '" + p + "'");
        out[p.substr(0, eq)] = p.substr(eq + 1);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    Run run;
    CLI::App app{"Canonical equation systems: solving, compiling and conjecture testing"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(CANON_VERSION));
    app.add_option("--format", run.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--report", run.out, "Write the report to this path instead of stdout");
    app.add_option("--jobs", run.cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--gb-budget", run.cfg.gb_budget, "S-polynomial reductions per Groebner basis");
    app.add_option("--box-bits", run.cfg.box_precision_bits, "Certified box precision in bits");
    app.add_option("--max-bits", run.cfg.max_precision_bits, "Root refinement ceiling in bits");
    app.add_option("--restart-limit", run.cfg.restart_limit, "Orders tried per seed by probe1");
    app.add_option("--slice-attempts", run.cfg.slice_attempts, "Random slices per real-consistency query");

    std::function<int()> action;

    auto* solve = app.add_subcommand("solve", "Enumerate the solutions of a canonical system");
    std::string solve_in, solve_domain = "C";
    solve->add_option("--in", solve_in, "System file")->required();
    solve->add_option("--domain", solve_domain)->check(CLI::IsMember({"C", "R"}));
    solve->callback([&] { action = [&] { return cmd_solve(run, solve_in, solve_domain); }; });

    auto* comp = app.add_subcommand("compile", "Compile a polynomial system to a canonical one");
    std::string comp_in, comp_out;
    bool comp_coarse = false, comp_full = false;
    std::size_t comp_verify = 0;
    std::uint64_t comp_seed = 1;
    comp->add_option("--in", comp_in, "Polynomial file")->required();
    comp->add_option("--out", comp_out, "Canonical system output");
    comp->add_flag("--coarse", comp_coarse, "Use the coarse construction");
    comp->add_flag("--full-h", comp_full, "Emit every identity among the variable meanings");
    comp->add_option("--verify", comp_verify, "Random verification trials");
    comp->add_option("--seed", comp_seed);
    comp->callback([&] {
        action = [&] { return cmd_compile(run, comp_in, comp_out, comp_coarse, comp_full, comp_verify, comp_seed); };
    });

    // linear
    auto* lin = app.add_subcommand("linear", "Systems without multiplication");
    lin->require_subcommand(1);
    unsigned lin_n = 3;
    std::uint64_t lin_iters = 1000, lin_seed = 42;
    bool lin_exhaustive = false;
    auto* lprobe = lin->add_subcommand("probe", "Random rank completions");
    lprobe->add_option("--n", lin_n)->required()->check(CLI::Range(2u, 64u));
    lprobe->add_option("--iters", lin_iters)->check(CLI::PositiveNumber);
    lprobe->add_option("--seed", lin_seed);
    lprobe->callback([&] {
        action = [&] {
            run.seed = lin_seed;
            auto r = linear::probe_conj3(lin_n, lin_iters, lin_seed, run.cfg.jobs);
            return emit(run, r.to_json(), r.violations.empty() && r.contradictions.empty() ? kOk : kFinding);
        };
    });
    auto* lconj4 = lin->add_subcommand("conj4", "Column-deleted minors of pattern matrices");
    lconj4->add_option("--n", lin_n)->required()->check(CLI::Range(2u, 32u));
    lconj4->add_flag("--exhaustive", lin_exhaustive);
    lconj4->add_option("--iters", lin_iters);
    lconj4->add_option("--seed", lin_seed);
    lconj4->callback([&] {
        action = [&] {
            linear::Conj4Report r;
            if (lin_exhaustive) {
                r = linear::conj4_exhaustive(lin_n, run.cfg.jobs);
            } else {
                run.seed = lin_seed;
                r = linear::conj4_random(lin_n, lin_iters, lin_seed);
            }
            return emit(run, r.to_json(), r.violation_count == 0 ? kOk : kFinding);
        };
    });
    auto* lobs4 = lin->add_subcommand("obs4", "Every unique-solution n-subset of W_n");
    lobs4->add_option("--n", lin_n)->required()->check(CLI::Range(1u, 4u));
    lobs4->callback([&] {
        action = [&] {
            auto r = linear::verify_obs4(lin_n);
            return emit(run, r.to_json(), r.ok() ? kOk : kFinding);
        };
    });

    // nonlinear
    auto* nl = app.add_subcommand("nonlinear", "Systems with multiplication");
    nl->require_subcommand(1);
    std::string nl_domain = "C", nl_out, nl_variant = "with-units";
    unsigned nl_n = 3;
    std::uint64_t nl_seed = 1, nl_iters = 1000;
    bool nl_triples = false, nl_no_prune = false;
    auto* pair = nl->add_subcommand("pairscan", "Pairs of the reduced two-variable equations");
    pair->add_option("--domain", nl_domain)->check(CLI::IsMember({"C", "R"}));
    pair->add_flag("--triples", nl_triples, "Also scan all subsets of size three");
    pair->callback([&] {
        action = [&] {
            auto r = nonlinear::conj1_n3_pair_scan(nonlinear::parse_domain(nl_domain), nl_triples, run.solve());
            json j = r.to_json();
            j["summary"] = r.ok() ? "no out-of-bound pair solutions" : "out-of-bound pair solutions found";
            return emit(run, j, r.ok() ? kOk : kFinding);
        };
    });
    auto* cat = nl->add_subcommand("catalog", "Maximal consistent subsystems of E_n");
    cat->add_option("--n", nl_n)->required()->check(CLI::Range(1u, 3u));
    cat->add_option("--domain", nl_domain)->check(CLI::IsMember({"C", "R"}));
    cat->add_option("--out", nl_out, "Write the catalog JSON here");
    cat->callback([&] {
        action = [&] {
            auto dom = nonlinear::parse_domain(nl_domain);
            auto c = nonlinear::catalog_maximal(nl_n, dom, run.solve(), run.cfg.jobs);
            json full = c.to_json();
            if (!nl_out.empty()) write_file(nl_out, full.dump(2) + "\n");
            auto small = nonlinear::verify_conj1_small(c);
            json rep = {{"n", nl_n},
                        {"domain", nl_domain},
                        {"entries", c.entries.size()},
                        {"complete", c.complete()},
                        {"bounded", small.bounded},
                        {"replacements_found", small.replacements_found},
                        {"max_modulus", small.max_modulus}};
            if (nl_n == 3) {
                auto W = nonlinear::family_W();
                if (dom == nonlinear::Domain::C)
                    for (auto& s : nonlinear::family_W_complex_extra()) W.insert(s);
                rep["family"] = nonlinear::compare_family(c, W).to_json();
            }
            if (nl_out.empty()) rep["catalog"] = full;
            if (!c.complete()) return emit(run, rep, kUnknown);
            return emit(run, rep, small.ok() ? kOk : kFinding);
        };
    });
    auto* p1 = nl->add_subcommand("probe1", "Randomized search for systems with only large solutions");
    p1->add_option("--n", nl_n)->required()->check(CLI::Range(2u, 8u));
    p1->add_option("--seed", nl_seed);
    p1->add_option("--domain", nl_domain)->check(CLI::IsMember({"C", "R"}));
    p1->add_flag("--no-prune", nl_no_prune, "Keep equations sharing a left side");
    p1->callback([&] {
        action = [&] {
            run.seed = nl_seed;
            nonlinear::Conj1ProbeOptions o;
            o.drop_same_left_side = !nl_no_prune;
            o.restart_limit = run.cfg.restart_limit;
            o.slice_attempts = run.cfg.slice_attempts;
            o.solve = run.solve();
            auto r = nonlinear::probe_conj1(nl_n, nl_seed, nonlinear::parse_domain(nl_domain), o);
            int code = r.violation() ? kFinding : (r.found && !r.final_exact) ? kUnknown : kOk;
            return emit(run, r.to_json(), code);
        };
    });
    auto* p21 = nl->add_subcommand("probe21", "Random ideal growth until zero-dimensional");
    p21->add_option("--n", nl_n)->required()->check(CLI::Range(2u, 8u));
    p21->add_option("--iters", nl_iters)->check(CLI::PositiveNumber);
    p21->add_option("--seed", nl_seed);
    p21->add_option("--variant", nl_variant)->check(CLI::IsMember({"with-units", "without-units"}));
    p21->callback([&] {
        action = [&] {
            run.seed = nl_seed;
            auto v = nl_variant == "with-units" ? nonlinear::Conj21Variant::WithUnits
                                                : nonlinear::Conj21Variant::WithoutUnits;
            auto r = nonlinear::probe_conj21(nl_n, nl_iters, nl_seed, v, run.cfg.jobs, run.solve());
            return emit(run, r.to_json(), r.ok() ? kOk : kFinding);
        };
    });

    // gallery
    auto* gal = app.add_subcommand("gallery", "Explicit constructions");
    gal->require_subcommand(1);
    auto* grun = gal->add_subcommand("run", "Verify one item or all of them");
    std::string g_item;
    std::vector<std::string> g_params;
    grun->add_option("--item", g_item)->check(CLI::IsMember(gallery::item_names()));
    grun->add_option("--param", g_params, "key=value, repeatable");
    grun->callback([&] {
        action = [&] {
            auto params = parse_params(g_params);
            for (auto& [k, v] : params) run.params[k] = v;
            json reps = json::array();
            bool ok = true;
            auto items = g_item.empty() ? gallery::item_names() : std::vector<std::string>{g_item};
            for (auto& it : items) {
                auto r = gallery::run_item(it, params);
                ok = ok && r.ok();
                reps.push_back(r.to_json());
            }
            return emit(run, g_item.empty() ? reps : reps[0], ok ? kOk : kFinding);
        };
    });

    // neighbourhoods
    auto* nb = app.add_subcommand("nbhd", "Arithmetic neighbourhoods");
    nb->require_subcommand(1);
    unsigned nb_n = 3, nb_max = 3;
    std::string nb_r, nb_set, nb_target;
    std::uint64_t nb_seed = 1;
    auto* kt = nb->add_subcommand("ktilde", "Rationals fixed by a neighbourhood of at most n elements");
    kt->add_option("--n", nb_n)->required()->check(CLI::Range(1u, 3u));
    kt->callback([&] {
        action = [&] {
            auto r = nbhd::compute_Ktilde(nb_n, fixed_options(run), run.cfg.jobs);
            json j = r.to_json();
            if (nb_n >= 3) j["theorem10"] = nbhd::theorem10_bound_check(nb_n, fixed_options(run)).to_json();
            return emit(run, j, r.unknown ? kUnknown : kOk);
        };
    });
    auto* om = nb->add_subcommand("omega", "Smallest neighbourhood size fixing r");
    om->add_option("--r", nb_r)->required();
    om->add_option("--max-n", nb_max)->check(CLI::Range(1u, 3u));
    om->callback([&] {
        action = [&] {
            auto r = parse_rational(nb_r);
            auto w = nbhd::omega(r, nb_max, fixed_options(run));
            json j = {{"r", r.get_str()}, {"max_n", nb_max}};
            j["omega"] = w ? json(*w) : json(nullptr);
            return emit(run, j, w ? kOk : kUnknown);
        };
    });
    auto* fx = nb->add_subcommand("fixed", "Is the target fixed by every arithmetic map of the set");
    fx->add_option("--set", nb_set, "Comma-separated rationals")->required();
    fx->add_option("--target", nb_target)->required();
    fx->add_option("--seed", nb_seed);
    fx->callback([&] {
        action = [&] {
            run.seed = nb_seed;
            nbhd::Neighbourhood a{parse_rationals(nb_set), parse_rational(nb_target)};
            auto cert = nbhd::is_fixed(a, fixed_options(run));
            return emit(run, cert.to_json(), cert.verdict == nbhd::Verdict::Unknown ? kUnknown : kOk);
        };
    });

    // retraction
    auto* ret = app.add_subcommand("retraction", "The planar retraction onto [-2,2]^2");
    ret->require_subcommand(1);
    auto* rc = ret->add_subcommand("check", "Sampled range, preservation and continuity checks");
    retraction::CheckOptions ropt;
    std::string r_csv;
    std::size_t r_csv_count = 10000;
    rc->add_option("--samples", ropt.samples)->check(CLI::PositiveNumber);
    rc->add_option("--seed", ropt.seed);
    rc->add_option("--tol", ropt.tol)->check(CLI::PositiveNumber);
    rc->add_option("--continuity-points", ropt.continuity_points);
    rc->add_option("--csv", r_csv, "Dump sampled values for plotting");
    rc->add_option("--csv-count", r_csv_count);
    rc->callback([&] {
        action = [&] {
            run.seed = ropt.seed;
            auto r = retraction::check(ropt);
            if (!r_csv.empty()) write_file(r_csv, retraction::sample_csv(r_csv_count, ropt.seed));
            return emit(run, r.to_json(), r.ok() ? kOk : kFinding);
        };
    });

    // acceptance
    auto* va = app.add_subcommand("verify-all", "Run the acceptance suite");
    int va_only = 0;
    va->add_option("--only", va_only, "Run a single criterion")
        ->check(CLI::Range(1, canon::acceptance::criterion_count()));
    va->callback([&] {
        action = [&] {
            acceptance::Options o{run.cfg.jobs};
            std::vector<acceptance::Criterion> results;
            auto print = [](const acceptance::Criterion& c) { std::cerr << c.line() << std::endl; };
            if (va_only) {
                results.push_back(acceptance::run_criterion(va_only, o));
                print(results.back());
            } else {
                results = acceptance::run_all(o, print);
            }
            json j = json::array();
            bool ok = true;
            for (auto& c : results) {
                ok = ok && c.pass;
                j.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"seconds", c.seconds}, {"detail", c.detail}});
            }
            return emit(run, j, ok ? kOk : kFinding);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    run.command = app.get_subcommands().front()->get_name();
    for (auto* sub : app.get_subcommands().front()->get_subcommands()) run.command += " " + sub->get_name();
    try {
        return action();
    } catch (const ParseError& e) {
        std::cerr << "canon: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "canon: budget exhausted: " << e.what() << '\n';
        return kUnknown;
    } catch (const DomainError& e) {
        std::cerr << "canon: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "canon: " << e.what() << '\n';
        return kUnknown;
    }
}
