#pragma once

#include "canon/canonical.hpp"
#include "canon/config.hpp"
#include "canon/solve.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace canon::nonlinear {

using algebra::MultiPoly;
using algebra::SolutionPoint;

enum class Domain { R, C };
Domain parse_domain(std::string_view s);
const char* domain_name(Domain d);

// ---- the sixteen equations in x, y --------------------------------------

struct ReducedEquation {
    std::string text;     // "x*x=y"
    MultiPoly poly;       // in x (variable 0) and y (variable 1)
    CanonicalEquation lifted;  // the E_3 equation it stands for, with x_1 = 1
};

// Fixed order; position k is entry k+1.
const std::vector<ReducedEquation>& reduced_table();

struct PairVerdict {
    std::size_t i = 0, j = 0;  // 1-based entries
    algebra::SolutionKind kind = algebra::SolutionKind::Inconsistent;
    std::size_t points = 0;
    bool out_of_bound = false;
    double max_modulus = 0;
};

struct PairScanReport {
    Domain domain = Domain::C;
    std::vector<PairVerdict> pairs;
    std::size_t violations = 0;
    std::size_t positive_dimensional = 0;
    // Optional sweep over every subset of size <= 3.
    std::size_t subsets_checked = 0;
    std::size_t subset_violations = 0;
    std::size_t subsets_positive = 0;
    bool ok() const { return violations == 0 && positive_dimensional == 0 && subset_violations == 0; }
    nlohmann::json to_json() const;
};

PairScanReport conj1_n3_pair_scan(Domain domain, bool with_triples = false, const algebra::SolveOptions& opt = {});

// ---- catalogs of maximal systems ---------------------------------------

// A system S(v) together with every collected point v inducing it.
struct InducedSystem {
    CanonicalSystem system;
    std::vector<SolutionPoint> points;
};

struct CollectStats {
    std::size_t subsets = 0;
    std::size_t zero_dimensional = 0;
    std::size_t budget_exceeded = 0;
};

// Points of every zero-dimensional subset of E_n of size <= n, filtered by
// domain and grouped by S(v), ordered by system.
std::vector<InducedSystem> collect_points(unsigned n, Domain domain, CollectStats* stats = nullptr,
                                          const algebra::SolveOptions& opt = {}, unsigned jobs = 1);

using ValueSet = std::set<QuadExt>;
std::string value_set_str(const ValueSet& v);

struct CatalogEntry {
    ValueSet values;
    CanonicalSystem system;
    std::vector<SolutionPoint> solutions;  // points of the system within the domain
};

struct Catalog {
    unsigned n = 0;
    std::vector<InducedSystem> induced;  // everything collected, maximal or not
    Domain domain = Domain::C;
    std::vector<CatalogEntry> entries;  // one per maximal system
    CollectStats stats;
    bool complete() const { return stats.budget_exceeded == 0; }
    std::set<ValueSet> value_sets() const;
    std::set<CanonicalSystem> systems() const;
    nlohmann::json to_json() const;
};

Catalog catalog_maximal(unsigned n, Domain domain, const algebra::SolveOptions& opt = {}, unsigned jobs = 1);

// The 23 sets listed for E_3 over R, and the two extra sets over C.
std::set<ValueSet> family_W();
std::set<ValueSet> family_W_complex_extra();

// {S(v) : v in K^n, {v_1..v_n} in sets}.
std::set<CanonicalSystem> systems_from_value_sets(unsigned n, const std::set<ValueSet>& sets);

struct FamilyComparison {
    std::size_t expected = 0, found = 0;
    std::vector<std::string> missing;     // expected systems absent from the catalog
    std::vector<std::string> unexpected;  // catalog systems not induced by the family
    bool ok() const { return missing.empty() && unexpected.empty(); }
    nlohmann::json to_json() const;
};

FamilyComparison compare_family(const Catalog& cat, const std::set<ValueSet>& sets);

struct Conj1SmallReport {
    unsigned n = 0;
    Domain domain = Domain::C;
    bool bounded = false;
    bool replacements_found = false;
    BigInt bound;
    double max_modulus = 0;
    bool ok() const { return bounded && replacements_found; }
};

Conj1SmallReport verify_conj1_small(const Catalog& cat);

// Exhaustive check over all subsets of E_2: every C-consistent one is solved
// by a point of `list`.
struct E2Report {
    std::size_t subsets = 0, consistent = 0, uncovered = 0;
    bool ok() const { return uncovered == 0; }
};
E2Report verify_e2_list(const std::vector<std::vector<BigRational>>& list);

// (1, 2, 4, 16, ..., 2^(2^(n-2))).
std::vector<BigRational> doubling_witness(unsigned n);
bool doubling_witness_check(unsigned n, const algebra::SolveOptions& opt = {});

// x1+x1=x2, x1*x1=x2, x2*x2=x3, ..., x_{n-1}*x_{n-1}=x_n.
CanonicalSystem chain_21d(unsigned n);
bool chain_21d_check(unsigned n, const algebra::SolveOptions& opt = {});

// ---- randomized probes ---------------------------------------------------

enum class Conj21Variant { WithUnits, WithoutUnits };

struct Conj21Report {
    unsigned n = 0;
    std::size_t iterations = 0;
    std::uint64_t seed = 0;
    Conj21Variant variant = Conj21Variant::WithUnits;
    std::size_t pool_size = 0;
    double max_abs_value = 0;
    BigInt bound;
    std::size_t zero_dimensional = 0;
    std::size_t positive_dimensional = 0;  // each one a 21b flag
    std::size_t budget_exceeded = 0;
    std::size_t violations = 0;
    std::vector<std::string> flags;
    std::vector<std::string> violating_systems;
    bool ok() const { return positive_dimensional == 0 && violations == 0; }
    nlohmann::json to_json() const;
};

Conj21Report probe_conj21(unsigned n, std::size_t iterations, std::uint64_t seed, Conj21Variant variant,
                          unsigned jobs = 1, const algebra::SolveOptions& opt = {});

// H_n: E_n minus the removal list of the probe, as equations over x_1..x_n
// that are always solved together with x_1 = 1.
std::vector<CanonicalEquation> probe_pool(unsigned n);

struct Conj1ProbeOptions {
    bool drop_same_left_side = true;
    unsigned restart_limit = default_config().restart_limit;
    unsigned slice_attempts = default_config().slice_attempts;
    algebra::SolveOptions solve;
};

struct Conj1ProbeReport {
    unsigned n = 0;
    std::uint64_t seed = 0;
    Domain domain = Domain::R;
    bool found = false;           // a qualifying system was built
    unsigned orders_tried = 0;
    CanonicalSystem system;       // {x_1 = 1} plus s_1..s_m
    std::optional<std::vector<std::string>> smallest_solution;
    double smallest_norm = 0;
    bool within_bound = false;
    bool final_exact = false;     // final system zero-dimensional
    std::size_t heuristic_decisions = 0;
    std::size_t budget_exceeded = 0;
    std::string verdict;
    bool violation() const { return found && !within_bound; }
    nlohmann::json to_json() const;
};

Conj1ProbeReport probe_conj1(unsigned n, std::uint64_t seed, Domain domain, const Conj1ProbeOptions& opt = {});

}  // namespace canon::nonlinear
