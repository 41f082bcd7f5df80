// polar: command line front end for the polar-space scheme library.
//
// Exit codes: 0 success or resolved, 1 verification failure, 2 usage error,
// 3 open case.

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polar/bounds.hpp"
#include "polar/lp.hpp"
#include "polar/schemes.hpp"
#include "polar/steiner.hpp"
#include "polar/verify.hpp"

using nlohmann::ordered_json;
using namespace polar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOpen = 3;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Config {
    std::string space;
    long n = 0;
    long q = 0;
    long d = 0;
    long t = 0;
    std::string format = "json";
    std::string ordering = "standard";
    std::string suite = "all";
    std::size_t max_size = 2000;
    std::uint64_t seed = 1;
    std::string cache_dir;
    bool inject_fault = false;
};

std::string str(const Rational& r) { return to_string(r); }

ordered_json str_list(const std::vector<Rational>& v)
{
    ordered_json out = ordered_json::array();
    for (const Rational& r : v) out.push_back(str(r));
    return out;
}

ordered_json str_matrix(const std::vector<std::vector<Rational>>& m)
{
    ordered_json out = ordered_json::array();
    for (const auto& row : m) out.push_back(str_list(row));
    return out;
}

SchemeSpec make_spec(const Config& c)
{
    const auto kind = parse_kind(c.space);
    if (!kind) {
        std::string names;
        for (const std::string& s : kind_names()) names += (names.empty() ? "" : ", ") + s;
        throw UsageError("unknown family '" + c.space + "'; valid names: " + names);
    }
    if (c.n < 1) throw UsageError("--n must be at least 1");
    try {
        return SchemeSpec(*kind, c.n, c.q);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

ordered_json space_json(const SchemeSpec& spec)
{
    return ordered_json{{"space", std::string(kind_name(spec.kind()))}, {"n", spec.rank()}, {"q", spec.q()}};
}

// Plain-text rendering: scalars as "key: value", arrays of arrays as aligned tables.
void print_table(const ordered_json& j, std::ostream& out, const std::string& indent = "")
{
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            out << indent << key << ":\n";
            print_table(value, out, indent + "  ");
        } else if (value.is_array() && !value.empty() && value.front().is_array()) {
            out << indent << key << ":\n";
            std::size_t width = 1;
            for (const auto& row : value)
                for (const auto& cell : row) width = std::max(width, cell.get<std::string>().size());
            for (const auto& row : value) {
                out << indent << " ";
                for (const auto& cell : row) out << ' ' << std::setw(static_cast<int>(width)) << cell.get<std::string>();
                out << '\n';
            }
        } else if (value.is_array()) {
            out << indent << key << ":";
            for (const auto& cell : value) out << ' ' << (cell.is_string() ? cell.get<std::string>() : cell.dump());
            out << '\n';
        } else {
            out << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
    }
}

void emit(const ordered_json& j, const Config& c)
{
    if (c.format == "table") print_table(j, std::cout);
    else std::cout << j.dump(2) << '\n';
}

int cmd_params(const Config& c)
{
    const SchemeSpec spec = make_spec(c);
    ordered_json j = space_json(spec);
    j["classes"] = spec.classes();
    j["x_size"] = str(scheme_size(spec));
    if (spec.kind() == PolarKind::HalfHyperbolic) j["e"] = nullptr;
    else {
        Rational e(spec.two_e(), 2);
        e.canonicalize();
        j["e"] = str(e);
    }
    j["p"] = str(spec.p());
    std::vector<Rational> v;
    for (long i = 0; i <= spec.classes(); ++i) v.push_back(valency(spec, i));
    j["valencies"] = str_list(v);
    j["multiplicities"] = str_list(eig_table(spec).multiplicities);
    emit(j, c);
    return kExitOk;
}

Ordering parse_ordering(const std::string& name)
{
    if (name == "standard") return Ordering::Standard;
    if (name == "alternate") return Ordering::HermAlternate;
    if (name == "half-d") return Ordering::HalfD;
    throw UsageError("unknown ordering '" + name + "'");
}

std::string_view ordering_name(Ordering o)
{
    switch (o) {
    case Ordering::Standard: return "standard";
    case Ordering::HermAlternate: return "alternate";
    case Ordering::HalfD: return "half-d";
    }
    return "?";
}

int cmd_eigenvalues(const Config& c)
{
    const SchemeSpec spec = make_spec(c);
    std::optional<Ordering> ordering;
    if (spec.kind() == PolarKind::HalfHyperbolic || spec.kind() == PolarKind::FusedBC) {
        if (c.ordering != "standard" && c.ordering != "half-d") throw UsageError("only the half-d ordering exists here");
    } else {
        ordering = parse_ordering(c.ordering);
        if (*ordering == Ordering::HermAlternate && spec.kind() != PolarKind::HermitianOdd)
            throw UsageError("the alternate ordering is defined for 2A-odd only");
        if (*ordering == Ordering::HalfD) throw UsageError("the half-d ordering applies to half-D and fused-BC");
    }
    const EigTable t = eig_table(spec, ordering);
    ordered_json j = space_json(spec);
    j["ordering"] = std::string(ordering_name(t.ordering));
    j["x_size"] = str(t.x_size);
    j["valencies"] = str_list(t.valencies);
    j["multiplicities"] = str_list(t.multiplicities);
    j["P"] = str_matrix(t.P);
    j["Q"] = str_matrix(t.Q);
    emit(j, c);
    return kExitOk;
}

void require_d(const SchemeSpec& spec, long d, long hi)
{
    if (d < 1 || d > hi)
        throw UsageError("--d must lie in 1.." + std::to_string(hi) + " for " + spec.label() + ", got " + std::to_string(d));
}

int cmd_bound(const Config& c)
{
    const SchemeSpec spec = make_spec(c);
    require_d(spec, c.d, spec.classes());
    const BoundResult b = code_bound(spec, c.d);
    ordered_json j = space_json(spec);
    j["d"] = c.d;
    j["value"] = str(b.value);
    j["floor"] = b.floor_value().get_str();
    j["formula"] = std::string(formula_name(b.formula_used));
    emit(j, c);
    return kExitOk;
}

int cmd_lp(const Config& c)
{
    const SchemeSpec spec = make_spec(c);
    require_d(spec, c.d, spec.classes());
    const LPResult r = lp_bound(spec, c.d);
    ordered_json j = space_json(spec);
    j["d"] = c.d;
    j["status"] = r.status == LPStatus::Optimal ? "optimal" : r.status == LPStatus::Unbounded ? "unbounded" : "infeasible";
    j["optimum"] = str(r.optimum);
    j["primal"] = str_list(r.primal);
    j["dual"] = str_list(r.dual);
    j["certified"] = r.certified;
    j["pivots"] = r.pivots;
    j["code_bound"] = str(code_bound(spec, c.d).value);
    emit(j, c);
    return kExitOk;
}

ordered_json certificate_json(const Certificate& cert)
{
    ordered_json j;
    if (const auto* r = std::get_if<RatioCertificate>(&cert)) {
        j["type"] = "ratio";
        j["B"] = str(r->B);
        j["S"] = str(r->S);
        j["R"] = str(r->R);
        j["formula"] = std::string(formula_name(r->formula));
    } else if (const auto* d = std::get_if<DualCertificate>(&cert)) {
        j["type"] = "dual";
        j["k"] = d->k;
        j["value"] = str(d->value);
        j["normalized"] = str(d->normalized);
        j["negative_indices"] = d->negative_indices;
        j["dual_distribution"] = str_list(d->dual.entries);
    } else if (const auto* l = std::get_if<LiteratureRef>(&cert)) {
        j["type"] = "literature";
        j["fact"] = l->fact;
        j["space"] = std::string(kind_name(l->kind));
        j["n"] = l->rank;
        j["t"] = l->t;
    } else if (std::holds_alternative<HalfHyperbolicConstruction>(cert)) {
        j["type"] = "construction";
        j["fact"] = "either half of the hyperbolic generators";
    } else {
        j = nullptr;
    }
    return j;
}

int cmd_steiner(const Config& c)
{
    const SchemeSpec spec = make_spec(c);
    if (!is_base_kind(spec.kind())) throw UsageError("Steiner systems are defined for the six base families");
    if (c.t < 1 || c.t > spec.rank()) throw UsageError("--t must lie in 1.." + std::to_string(spec.rank()));
    const Verdict v = full_verdict(spec, c.t);
    ordered_json j = space_json(spec);
    j["t"] = c.t;
    j["steiner_size"] = str(steiner_size(spec, c.t));
    j["outcome"] = std::string(outcome_name(v.outcome));
    if (v.tag) j["case"] = std::string(case_name(*v.tag));
    else j["case"] = nullptr;
    j["certificate"] = certificate_json(v.certificate);
    emit(j, c);
    return v.outcome == Outcome::Open ? kExitOpen : kExitOk;
}

int cmd_verify(const Config& c)
{
    VerifyOptions options;
    options.max_size = c.max_size;
    options.seed = c.seed;
    options.inject_fault = c.inject_fault;
    if (!c.cache_dir.empty()) options.cache_dir = c.cache_dir;

    const std::vector<std::string> known = suite_names();
    std::vector<std::string> suites;
    if (c.suite == "all") suites = known;
    else if (std::ranges::find(known, c.suite) != known.end()) suites = {c.suite};
    else throw UsageError("unknown suite '" + c.suite + "'");

    bool all_ok = true;
    ordered_json reports = ordered_json::array();
    for (const std::string& name : suites) {
        std::cerr << "running " << name << "..." << std::endl;
        const SuiteReport r = run_suite(name, options);
        all_ok = all_ok && r.ok();
        std::ostringstream secs;
        secs << std::fixed << std::setprecision(2) << r.seconds;
        reports.push_back(ordered_json{{"suite", r.name},
                                       {"result", r.ok() ? "pass" : "fail"},
                                       {"checks", r.checks},
                                       {"skipped", r.skipped},
                                       {"seconds", secs.str()},
                                       {"failures", r.failures}});
    }
    if (c.format == "table") {
        for (const auto& r : reports) {
            std::cout << std::left << std::setw(12) << r["suite"].get<std::string>() << ' ' << r["result"].get<std::string>()
                      << "  checks=" << r["checks"] << " skipped=" << r["skipped"] << " " << r["seconds"].get<std::string>()
                      << "s\n";
            for (const auto& f : r["failures"]) std::cout << "    " << f.get<std::string>() << '\n';
        }
    } else {
        std::cout << ordered_json{{"result", all_ok ? "pass" : "fail"}, {"suites", reports}}.dump(2) << '\n';
    }
    return all_ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Eigenvalues, code bounds and Steiner system verdicts for polar space schemes"};
    app.require_subcommand(1);
    Config c;

    auto add_space = [&](CLI::App* sub, bool with_d, bool with_t) {
        sub->add_option("--space", c.space, "family: 2A-odd, 2A-even, B, C, D, 2D, half-D, fused-BC or a classical name")
            ->required();
        sub->add_option("--n", c.n, "rank")->required();
        sub->add_option("--q", c.q, "prime power q")->required();
        if (with_d) sub->add_option("--d", c.d, "minimum distance")->required();
        if (with_t) sub->add_option("--t", c.t, "Steiner parameter t")->required();
        sub->add_option("--format", c.format)->check(CLI::IsMember({"json", "table"}));
    };

    auto* params = app.add_subcommand("params", "scheme size, e, p, valencies and multiplicities");
    add_space(params, false, false);
    auto* eig = app.add_subcommand("eigenvalues", "exact P and Q tables");
    add_space(eig, false, false);
    eig->add_option("--ordering", c.ordering, "standard, alternate (2A-odd) or half-d");
    auto* bound = app.add_subcommand("bound", "closed-form upper bound on d-codes");
    add_space(bound, true, false);
    auto* lp = app.add_subcommand("lp", "Delsarte LP bound with certificate");
    add_space(lp, true, false);
    auto* steiner = app.add_subcommand("steiner", "existence verdict for t-Steiner systems");
    add_space(steiner, false, true);
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", c.suite, "suite name or all");
    verify->add_option("--max-size", c.max_size, "largest enumerated instance");
    verify->add_option("--seed", c.seed, "seed for sampled checks");
    verify->add_option("--cache-dir", c.cache_dir, "directory for enumerated instances");
    verify->add_option("--format", c.format)->check(CLI::IsMember({"json", "table"}));
    verify->add_flag("--inject-fault", c.inject_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*params) return cmd_params(c);
        if (*eig) return cmd_eigenvalues(c);
        if (*bound) return cmd_bound(c);
        if (*lp) return cmd_lp(c);
        if (*steiner) return cmd_steiner(c);
        if (*verify) return cmd_verify(c);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BadParameters& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const WrongFamily& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal check failed: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitUsage;
}
