#include "canon/acceptance.hpp"

#include "canon/compiler.hpp"
#include "canon/error.hpp"
#include "canon/gallery.hpp"
#include "canon/linear.hpp"
#include "canon/neighbourhoods.hpp"
#include "canon/nonlinear.hpp"
#include "canon/retraction.hpp"

#include <chrono>
#include <cstdio>

namespace canon::acceptance {

namespace {

using nlohmann::json;
using nonlinear::Domain;

BigRational q(const char* s) { return BigRational(s); }

std::set<std::string> strs(const std::set<BigRational>& v) {
    std::set<std::string> out;
    for (auto& x : v) out.insert(x.get_str());
    return out;
}

bool pair_scan(const Options&, json& d) {
    auto rep = nonlinear::conj1_n3_pair_scan(Domain::C);
    d = rep.to_json();
    return rep.pairs.size() == 120 && rep.ok();
}

bool e2_list(const Options&, json& d) {
    std::vector<std::vector<BigRational>> list = {{q("0"), q("0")}, {q("0"), q("1")},   {q("1"), q("0")},
                                                  {q("1/2"), q("1")}, {q("1"), q("1/2")}, {q("1"), q("1")},
                                                  {q("1"), q("2")}, {q("2"), q("1")}};
    auto rep = nonlinear::verify_e2_list(list);
    d = {{"subsets", rep.subsets}, {"consistent", rep.consistent}, {"uncovered", rep.uncovered}};
    return rep.subsets == 16384 && rep.ok();
}

bool family(const Options& opt, json& d) {
    auto W = nonlinear::family_W();
    auto cat_r = nonlinear::catalog_maximal(3, Domain::R, {}, opt.jobs);
    auto cmp_r = nonlinear::compare_family(cat_r, W);
    auto WC = W;
    for (auto& s : nonlinear::family_W_complex_extra()) WC.insert(s);
    auto cat_c = nonlinear::catalog_maximal(3, Domain::C, {}, opt.jobs);
    auto cmp_c = nonlinear::compare_family(cat_c, WC);
    auto cmp_c_only_W = nonlinear::compare_family(cat_c, W);
    bool rep_r = cat_r.value_sets() == W, rep_c = cat_c.value_sets() == WC;
    d = {{"R", cmp_r.to_json()},
         {"C", cmp_c.to_json()},
         {"R_value_sets", cat_r.value_sets().size()},
         {"C_value_sets", cat_c.value_sets().size()},
         {"C_needs_extra", !cmp_c_only_W.ok()}};
    return cat_r.complete() && cat_c.complete() && cmp_r.ok() && cmp_c.ok() && !cmp_c_only_W.ok() && rep_r && rep_c;
}

bool ktilde(const Options& opt, json& d) {
    const std::set<std::string> expected[] = {
        {"0", "1"},
        {"0", "1", "2", "1/2"},
        {"0", "1", "2", "1/2", "-1", "-2", "3", "4", "-1/2", "1/3", "2/3", "3/2", "1/4"}};
    bool ok = true;
    for (unsigned n = 1; n <= 3; ++n) {
        auto r = nbhd::compute_Ktilde(n, {}, opt.jobs);
        d["n" + std::to_string(n)] = r.to_json();
        ok = ok && strs(r.values) == expected[n - 1] && r.unknown == 0;
    }
    auto t10 = nbhd::theorem10_bound_check(3);
    d["theorem10"] = t10.to_json();
    return ok && t10.ok && t10.card == 13;
}

bool conj4(const Options& opt, json& d) {
    bool ok = true;
    for (unsigned n = 2; n <= 5; ++n) {
        auto r = linear::conj4_exhaustive(n, opt.jobs);
        d["n" + std::to_string(n)] = r.to_json();
        ok = ok && r.violation_count == 0 && r.max_minor <= (1LL << (n - 1));
    }
    return ok;
}

bool conj3_probe(const Options& opt, json& d) {
    auto a = linear::probe_conj3(5, 1000, 42, opt.jobs);
    auto b = linear::probe_conj3(5, 1000, 42, opt.jobs);
    d = a.to_json();
    d["rerun_identical"] = a.to_json() == b.to_json();
    return a.violations.empty() && a.contradictions.empty() && a.to_json() == b.to_json();
}

bool obs4(const Options&, json& d) {
    bool ok = true;
    for (unsigned n = 1; n <= 4; ++n) {
        auto r = linear::verify_obs4(n);
        d["n" + std::to_string(n)] = {{"subsets", r.subsets}, {"unique", r.unique}, {"max_abs", r.max_abs.get_str()},
                                      {"ok", r.ok()}};
        ok = ok && r.ok();
    }
    return ok;
}

bool gallery_items(const Options&, json& d) {
    std::vector<gallery::GalleryReport> reps = {
        gallery::theorem2_verify(BigInt(273)), gallery::theorem4_verify(),
        gallery::theorem5_verify(BigInt(13)),  gallery::theorem3_verify(BigInt(5), true),
        gallery::lemma1_check(1000),           gallery::lemma2_check({2, 3, 4}),
        gallery::z21_verify()};
    bool ok = true;
    for (auto& r : reps) {
        d[r.item] = r.ok();
        ok = ok && r.ok();
    }
    return ok;
}

bool doubling(const Options&, json& d) {
    bool ok = true;
    for (unsigned n = 2; n <= 4; ++n) {
        bool r = nonlinear::doubling_witness_check(n);
        d["n" + std::to_string(n)] = r;
        ok = ok && r;
    }
    return ok;
}

bool chain(const Options&, json& d) {
    bool ok = true;
    for (unsigned n = 3; n <= 5; ++n) {
        bool r = nonlinear::chain_21d_check(n);
        d["n" + std::to_string(n)] = r;
        ok = ok && r;
    }
    return ok;
}

bool compiler_round_trip(const Options& opt, json& d) {
    Rng rng(11);
    std::size_t passed = 0, count_mismatch = 0;
    for (int i = 0; i < 100; ++i) {
        auto sys = compiler::random_poly_system(rng);
        auto res = compiler::compile(sys);
        if (BigInt(std::to_string(res.total_vars)) != BigInt(std::to_string(sys.n)) + res.p) ++count_mismatch;
        auto rep = compiler::verify_compilation(sys, res, 100, 1000 + static_cast<std::uint64_t>(i), opt.jobs);
        if (rep.ok()) ++passed;
        else if (!d.contains("first_failure"))
            d["first_failure"] = {{"system", serialize_poly_system(sys)}, {"report", rep.to_json()}};
    }
    d["systems"] = 100;
    d["passed"] = passed;
    d["count_mismatch"] = count_mismatch;
    return passed == 100 && count_mismatch == 0;
}

bool probes(const Options& opt, json& d) {
    bool ok = true;
    std::size_t budget_seeds = 0, violations = 0, found = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto r = nonlinear::probe_conj1(4, seed, Domain::R);
        if (r.violation()) ++violations;
        if (r.found) ++found;
        if (r.budget_exceeded > 0) ++budget_seeds;
    }
    d["conj1"] = {{"seeds", 20}, {"found", found}, {"violations", violations}, {"budget_seeds", budget_seeds}};
    ok = violations == 0 && budget_seeds * 5 <= 20;
    for (auto v : {nonlinear::Conj21Variant::WithUnits, nonlinear::Conj21Variant::WithoutUnits}) {
        auto r = nonlinear::probe_conj21(5, 1000, 1, v, opt.jobs);
        d[v == nonlinear::Conj21Variant::WithUnits ? "conj21_with_units" : "conj21_without_units"] = r.to_json();
        ok = ok && r.ok() && r.budget_exceeded * 5 <= r.iterations;
    }
    return ok;
}

bool retraction_check(const Options&, json& d) {
    auto r = retraction::check();
    d = r.to_json();
    return r.ok();
}

struct CriterionDef {
    const char* name;
    double limit;
    bool (*run)(const Options&, json&);
};

const CriterionDef kCriteria[] = {
    {"pair scan over C", 60, pair_scan},
    {"E_2 catalog list", 300, e2_list},
    {"family reproduction", 1800, family},
    {"arithmetic neighbourhood sets", 600, ktilde},
    {"minor bound exhaustive scan", 600, conj4},
    {"linear probe", 600, conj3_probe},
    {"unique-solution subsets of W_n", 600, obs4},
    {"gallery", 300, gallery_items},
    {"doubling witness", 120, doubling},
    {"squaring chain", 120, chain},
    {"compiler round trip", 300, compiler_round_trip},
    {"randomized probes", 1200, probes},
    {"retraction", 120, retraction_check},
};

}  // namespace

std::string Criterion::line() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.1f s)", seconds);
    return std::string(pass ? "[PASS] " : "[FAIL] ") + std::to_string(id) + " " + name + buf;
}

int criterion_count() { return static_cast<int>(std::size(kCriteria)); }

Criterion run_criterion(int id, const Options& opt) {
    if (id < 1 || id > criterion_count()) throw DomainError("no such criterion");
    const CriterionDef& s = kCriteria[id - 1];
    Criterion c;
    c.id = id;
    c.name = s.name;
    c.time_limit = s.limit;
    auto t0 = std::chrono::steady_clock::now();
    try {
        c.pass = s.run(opt, c.detail);
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail["error"] = e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.seconds > c.time_limit) {
        c.pass = false;
        c.detail["time_limit_exceeded"] = true;
    }
    return c;
}

std::vector<Criterion> run_all(const Options& opt, const std::function<void(const Criterion&)>& on_done) {
    std::vector<Criterion> out;
    for (int id = 1; id <= criterion_count(); ++id) {
        out.push_back(run_criterion(id, opt));
        if (on_done) on_done(out.back());
    }
    return out;
}

}  // namespace canon::acceptance
