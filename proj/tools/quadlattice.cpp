// quadlattice: classify orders, draw the lattice of F-primary ideals, and
// check the classification against brute force.
//
// Exit status: 0 success, 1 a check failed, 2 bad usage or input.

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "quadlattice/quadlattice.hpp"

namespace ql = quadlattice;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct Options {
    std::string d, f;
    unsigned class_cap = ql::default_class_order_cap;
    bool json = false;

    unsigned layers = 1;
    unsigned depth = 4;
    std::string format = "json";
    std::string out;
    bool top = false;

    unsigned k = 4;
    bool oracle = false;
    unsigned oracle_kmax = 0;
    bool no_oracle = false;
    bool factor_only = false;
    std::string inject;

    std::vector<std::string> d_list, f_list;
};

ql::Integer parse_integer(std::string const& text, char const* what)
{
    try {
        bool neg = !text.empty() && text[0] == '-';
        std::string digits = neg ? text.substr(1) : text;
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument(text);
        ql::Integer v(digits);
        return neg ? ql::Integer(-v) : v;
    } catch (std::exception const&) {
        throw ql::Error(ql::ErrorKind::InvalidFieldParameter, std::string(what) + " is not an integer: " + text);
    }
}

void write_output(std::string const& path, std::string const& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << text;
}

std::string join(std::vector<ql::QuadInt> const& v)
{
    std::string s;
    for (auto const& z : v) s += (s.empty() ? "" : ", ") + ql::to_string(z);
    return s;
}

int cmd_classify(Options const& o)
{
    auto ctx = ql::OrderContext::make(parse_integer(o.d, "d"), parse_integer(o.f, "f"));
    auto lc = ql::LatticeContext::make(ctx, o.class_cap);
    auto const& sd = lc.split;
    std::vector<ql::QuadInt> pgens;
    if (sd.P) {
        auto [b1, b2] = ql::basis(ctx, *sd.P);
        pgens = {b1, b2};
    }
    if (o.json) {
        ql::Json j;
        j["d"] = ql::integer_to_json(ctx.d());
        j["f"] = ql::integer_to_json(ctx.f());
        j["discD"] = ql::integer_to_json(ctx.disc_D());
        j["splitting"] = std::string(ql::splitting_name(sd.stype));
        j["P"] = sd.P ? ql::Json(ql::Json::array({ql::to_string(pgens[0]), ql::to_string(pgens[1])})) : ql::Json(nullptr);
        j["m"] = sd.m ? ql::Json(*sd.m) : ql::Json(nullptr);
        j["beta"] = sd.beta ? ql::Json(ql::to_string(*sd.beta)) : ql::Json(nullptr);
        j["betaNormSign"] = sd.beta ? ql::Json(sd.beta_norm_sign) : ql::Json(nullptr);
        j["tau"] = sd.tau;
        ql::Json reps = ql::Json::array();
        for (auto const& w : lc.units.coset_reps) reps.push_back(ql::to_string(w));
        j["cosetReps"] = reps;
        if (lc.units.kind == ql::UnitKind::RealFundamental) j["fundamentalUnit"] = ql::to_string(*lc.units.fundamental);
        std::cout << j.dump(2) << "\n";
        return exit_ok;
    }
    std::cout << "d        " << ctx.d() << "\n";
    std::cout << "f        " << ctx.f() << "\n";
    std::cout << "disc_D   " << ctx.disc_D() << "\n";
    std::cout << "omega    " << (ctx.omega_kind() == ql::OmegaKind::Sqrt ? "sqrt(d)" : "(1+sqrt(d))/2") << "\n";
    std::cout << "stype    " << ql::splitting_name(sd.stype) << "\n";
    if (sd.P) std::cout << "P        (" << join(pgens) << ")  " << ql::to_string(*sd.P) << "\n";
    if (sd.m) std::cout << "m        " << *sd.m << "\n";
    if (sd.beta) std::cout << "beta     " << ql::to_string(*sd.beta) << "  N = " << ql::norm(ctx, *sd.beta) << "\n";
    else if (sd.stype == ql::SplittingType::Ramified) std::cout << "beta     none (P is not principal)\n";
    if (lc.units.kind == ql::UnitKind::RealFundamental)
        std::cout << "epsilon  " << ql::to_string(*lc.units.fundamental) << "  N = " << lc.units.fundamental_norm << "\n";
    std::cout << "tau      " << sd.tau << "\n";
    std::cout << "cosets   " << join(lc.units.coset_reps) << "\n";
    return exit_ok;
}

int cmd_lattice(Options const& o)
{
    if (o.layers == 0) throw CLI::ValidationError("--layers", "must be at least 1");
    if (o.format != "json" && o.format != "dot") throw CLI::ValidationError("--format", "must be json or dot");
    auto ctx = ql::OrderContext::make(parse_integer(o.d, "d"), parse_integer(o.f, "f"));
    auto lc = ql::LatticeContext::make(ctx, o.class_cap);
    auto doc = ql::make_document(lc, ql::build_lattice(lc, o.layers, o.depth, o.top));
    write_output(o.out, o.format == "json" ? ql::lattice_to_json_text(doc) : ql::lattice_to_dot(doc));
    return exit_ok;
}

ql::IdealRep parse_triple(std::string const& text)
{
    std::vector<ql::Integer> v;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) v.push_back(parse_integer(part, "--inject-node"));
    if (v.size() != 3) throw CLI::ValidationError("--inject-node", "expected q,r,s");
    return {ql::Ring::InO, v[0], v[1], v[2]};
}

int factor_only(Options const& o)
{
    auto ctx = ql::OrderContext::make_any_conductor(parse_integer(o.d, "d"), parse_integer(o.f, "f"));
    auto chk = ql::check_conductor_factorization(ctx);
    ql::Json j;
    j["d"] = ql::integer_to_json(ctx.d());
    j["f"] = ql::integer_to_json(ctx.f());
    j["productIsF"] = chk.product_is_F;
    ql::Json comps = ql::Json::array();
    for (std::size_t i = 0; i < chk.components.size(); ++i) {
        auto const& c = chk.components[i];
        comps.push_back({{"prime", ql::integer_to_json(c.prime)},
                         {"exponent", c.exponent},
                         {"primary", ql::to_string(c.primary)},
                         {"radical", ql::to_string(c.radical)},
                         {"radicalMatches", bool(chk.radical_matches[i])}});
    }
    j["components"] = comps;
    j["passed"] = chk.ok();
    std::string text = j.dump(2) + "\n";
    write_output(o.out, text);
    if (!o.out.empty() && o.out != "-") std::cout << (chk.ok() ? "PASS" : "FAIL") << " factorization of F\n";
    return chk.ok() ? exit_ok : exit_failed;
}

void print_report(ql::ConformanceReport const& r)
{
    for (auto const& c : r.checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.claim;
        if (!c.passed) std::cout << "  (" << c.witness << ")";
        std::cout << "\n";
    }
    std::cout << r.checks.size() - r.failures() << "/" << r.checks.size() << " checks passed\n";
}

int cmd_verify(Options const& o)
{
    if (o.factor_only) return factor_only(o);
    auto ctx = ql::OrderContext::make(parse_integer(o.d, "d"), parse_integer(o.f, "f"));
    ql::VerifyOptions vo;
    vo.with_oracle = o.oracle;
    if (o.oracle_kmax) vo.oracle_kmax = o.oracle_kmax;
    vo.budget = ql::budget_from_env();
    vo.class_cap = o.class_cap;
    if (!o.inject.empty()) vo.inject_formula_node = parse_triple(o.inject);
    auto report = ql::verify_theorems(ctx, o.k, vo);
    if (!o.out.empty()) write_output(o.out, ql::report_to_json(report).dump(2) + "\n");
    print_report(report);
    return report.all_passed() ? exit_ok : exit_failed;
}

int cmd_sweep(Options const& o)
{
    std::vector<ql::OrderContext> cells;
    for (auto const& ds : o.d_list)
        for (auto const& fs : o.f_list)
            if (!ds.empty() && !fs.empty()) cells.push_back(ql::OrderContext::make(parse_integer(ds, "d"), parse_integer(fs, "f")));

    ql::VerifyOptions vo;
    vo.with_oracle = !o.no_oracle;
    if (o.oracle_kmax) vo.oracle_kmax = o.oracle_kmax;
    vo.budget = ql::budget_from_env();
    vo.class_cap = o.class_cap;
    std::vector<std::future<ql::ConformanceReport>> jobs;
    for (auto const& ctx : cells)
        jobs.push_back(std::async(std::launch::async, [&, ctx] { return ql::verify_theorems(ctx, o.k, vo); }));

    ql::Json agg;
    agg["K"] = o.k;
    agg["oracle"] = vo.with_oracle;
    ql::Json jcells = ql::Json::array();
    bool all = true;
    for (auto& job : jobs) {
        auto r = job.get();
        all = all && r.all_passed();
        std::cout << (r.all_passed() ? "PASS " : "FAIL ") << "d=" << r.d << " f=" << r.f << " "
                  << ql::splitting_name(r.stype) << " " << r.checks.size() - r.failures() << "/" << r.checks.size() << "\n";
        jcells.push_back(ql::report_to_json(r));
    }
    agg["cells"] = jcells;
    agg["passed"] = all;
    if (cells.empty()) std::cout << "empty grid\n";
    if (!o.out.empty()) write_output(o.out, agg.dump(2) + "\n");
    return all ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lattices of F-primary ideals of Z[f w] for prime conductors"};
    app.require_subcommand(1);
    Options o;

    auto field = [&o](CLI::App* sub) {
        sub->add_option("--d", o.d, "square-free d, the field is Q(sqrt d)")->required();
        sub->add_option("--f", o.f, "prime conductor f")->required();
        sub->add_option("--class-cap", o.class_cap, "largest power of P tried when computing m");
    };

    auto* classify = app.add_subcommand("classify", "splitting type, P, m, beta, tau");
    field(classify);
    classify->add_flag("--json", o.json, "print JSON");

    auto* lattice = app.add_subcommand("lattice", "Hasse diagram of the first layers");
    field(lattice);
    lattice->add_option("--layers", o.layers, "number of layers")->required();
    lattice->add_option("--depth,-K", o.depth, "split case: basic ideals up to norm f^K");
    lattice->add_option("--format", o.format, "json or dot");
    lattice->add_option("--out,-o", o.out, "output file (default stdout)");
    lattice->add_flag("--top", o.top, "include O itself");

    auto* verify = app.add_subcommand("verify", "check the classification");
    field(verify);
    verify->add_option("--k", o.k, "depth K of the constructed first layer");
    verify->add_flag("--oracle", o.oracle, "compare with brute-force enumeration");
    verify->add_option("--oracle-kmax", o.oracle_kmax, "norm range f^kmax of the enumeration (default K)");
    verify->add_option("--out,-o", o.out, "JSON report file");
    verify->add_flag("--factor-only", o.factor_only, "only check the factorisation of F (any f >= 1)");
    verify->add_option("--inject-node", o.inject, "q,r,s added to the constructed side of the oracle comparison");

    auto* sweep = app.add_subcommand("sweep", "verify every (d, f) of a grid");
    sweep->add_option("--d", o.d_list, "list of d")->expected(0, -1);
    sweep->add_option("--f", o.f_list, "list of f")->expected(0, -1);
    sweep->add_option("--k", o.k, "depth K");
    sweep->add_flag("--no-oracle", o.no_oracle, "skip the brute-force comparison");
    sweep->add_option("--oracle-kmax", o.oracle_kmax, "norm range of the enumeration");
    sweep->add_option("--class-cap", o.class_cap, "largest power of P tried when computing m");
    sweep->add_option("--out,-o", o.out, "aggregate JSON report");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*classify) return cmd_classify(o);
        if (*lattice) return cmd_lattice(o);
        if (*verify) return cmd_verify(o);
        if (*sweep) return cmd_sweep(o);
    } catch (CLI::ParseError const& e) {
        std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
        return exit_usage;
    } catch (ql::Error const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ql::ErrorKind::BudgetExceeded || e.kind() == ql::ErrorKind::IterationCapExceeded ? exit_failed
                                                                                                             : exit_usage;
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failed;
    }
    return exit_usage;
}
