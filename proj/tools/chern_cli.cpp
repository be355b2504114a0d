// Command-line front end for the Chern-number engine: catalog ingestion,
// individual computations, genus queries, invariance analysis, and the
// one-shot verify-paper report.

#include "chern/genera.hpp"
#include "chern/invariance.hpp"
#include "chern/json_io.hpp"
#include "chern/manifolds.hpp"
#include "chern/paper_report.hpp"
#include "chern/projbundle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace chern;

namespace {

constexpr int kExitName = 2;       // name resolution failure
constexpr int kExitParse = 3;      // parse / validation failure
constexpr int kExitPrecond = 4;    // precondition violation

struct Options {
    std::string format = "table";
    std::string catalog_path;
    std::optional<Catalog> catalog;
};

const Catalog& need_catalog(Options& opt) {
    if (!opt.catalog) {
        if (opt.catalog_path.empty())
            throw std::out_of_range("no catalog given (use --catalog PATH)");
        std::ifstream in(opt.catalog_path);
        if (!in)
            throw std::invalid_argument("cannot open catalog: " + opt.catalog_path);
        json doc = json::parse(in);
        opt.catalog = Catalog::parse(doc);
    }
    return *opt.catalog;
}

SurfaceData parse_surface_arg(Options& opt, const std::string& s) {
    auto comma = s.find(',');
    if (comma != std::string::npos) {
        long long a = std::stoll(s.substr(0, comma));
        long long b = std::stoll(s.substr(comma + 1));
        return SurfaceData(a, b);
    }
    return need_catalog(opt).surface(s);
}

// A vector argument is "cpN", a comma-separated list of rationals in
// canonical partition order with an explicit dimension, or a catalog name.
ChernVector parse_vector_arg(Options& opt, const std::string& s) {
    if (s.size() > 2 && s.compare(0, 2, "cp") == 0 &&
        s.find_first_not_of("0123456789", 2) == std::string::npos)
        return cp(std::stoi(s.substr(2)));
    if (s.find(',') != std::string::npos) {
        std::vector<Rational> vals;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) vals.push_back(parse_rational(tok));
        for (int dim = 0; dim <= 12; ++dim)
            if (partition_count(dim) == vals.size() && dim > 0)
                return ChernVector(dim, vals);
        throw std::invalid_argument(
            "value count matches no partition count p(n)");
    }
    return need_catalog(opt).vector(s);
}

ProjBundleData parse_bundle_arg(Options& opt, const std::string& s) {
    std::ifstream in(s);
    if (in) return proj_bundle_from_json(json::parse(in));
    return need_catalog(opt).bundle(s);
}

void print_vector(const Options& opt, const ChernVector& v) {
    if (opt.format == "json") {
        std::cout << to_json(v).dump(2) << "\n";
        return;
    }
    auto parts = partitions_of(v.dim);
    for (std::size_t i = 0; i < parts.size(); ++i)
        std::cout << monomial_name(parts[i]) << " = " << to_string(v.values[i])
                  << "\n";
}

int run_compute(Options& opt, const std::string& op,
                const std::vector<std::string>& args) {
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw std::invalid_argument("compute " + op + ": expected " +
                                        std::to_string(n) + " argument(s)");
    };
    if (op == "cp") {
        need(1);
        print_vector(opt, cp(std::stoi(args[0])));
    } else if (op == "product") {
        need(2);
        print_vector(opt, product(parse_vector_arg(opt, args[0]),
                                  parse_vector_arg(opt, args[1])));
    } else if (op == "times-cp1") {
        need(1);
        print_vector(opt, times_cp1(parse_vector_arg(opt, args[0])));
    } else if (op == "stabilize") {
        need(2);
        print_vector(opt,
                     stabilize(parse_vector_arg(opt, args[0]), std::stoi(args[1])));
    } else if (op == "projectivize") {
        need(1);
        print_vector(opt, projectivize(parse_bundle_arg(opt, args[0])));
    } else if (op == "ruled-tangent") {
        need(1);
        print_vector(opt, ruled_tangent(parse_surface_arg(opt, args[0])));
    } else if (op == "ruled-canonical") {
        need(1);
        print_vector(opt, ruled_canonical(parse_surface_arg(opt, args[0])));
    } else if (op == "fake-partner") {
        need(1);
        auto y = fake_partner(parse_surface_arg(opt, args[0]));
        if (opt.format == "json")
            std::cout << to_json(y).dump(2) << "\n";
        else
            std::cout << "c1^2 = " << y.c1_sq << "\nc2 = " << y.c2 << "\n";
    } else {
        throw std::invalid_argument("unknown compute operation: " + op);
    }
    return 0;
}

int run_genus(Options& opt, const std::string& kind,
              const std::vector<int>& nums, const std::string& eval_arg) {
    ChernPolynomial f(1);
    int n = nums.empty() ? 0 : nums[0];
    std::string note;
    if (kind == "todd") {
        f = todd(n);
    } else if (kind == "chi-p") {
        if (nums.size() < 2) throw std::invalid_argument("chi-p needs N and P");
        f = chi_p_functional(n, nums[1]);
    } else if (kind == "salamon") {
        if (nums.size() < 2) throw std::invalid_argument("salamon needs N and K");
        int k = nums[1];
        f = salamon_combination(n, k);
        note = support_check(f, n - 2 * (k / 2)) ? "support OK" : "support FAIL";
    } else if (kind == "lw") {
        f = lw_functional(n);
        note = lw_support_violations(n).empty() ? "support OK" : "support FAIL";
    } else {
        throw std::invalid_argument("unknown genus kind: " + kind);
    }

    if (!eval_arg.empty()) {
        auto value = f.evaluate(parse_vector_arg(opt, eval_arg));
        if (opt.format == "json")
            std::cout << json{{"value", rational_to_json(value)}}.dump(2) << "\n";
        else
            std::cout << to_string(value) << "\n";
        return 0;
    }
    if (opt.format == "json") {
        json j{{"dim", n}, {"terms", to_json(f)}};
        if (!note.empty()) j["support"] = note;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << f.str() << "\n";
        if (!note.empty()) std::cout << note << "\n";
    }
    return 0;
}

int run_invariants(Options& opt, int dim) {
    const auto& cat = need_catalog(opt);
    std::vector<RationalVector> diffs;
    std::vector<std::string> labels;
    for (const auto& [name, p] : cat.pairs()) {
        const auto& l = cat.vector(p.left);
        if (l.dim != dim) continue;
        diffs.push_back(difference(ExamplePair(name, l, cat.vector(p.right))));
        labels.push_back(name);
    }
    auto basis = annihilator(diffs, dim);

    std::vector<std::pair<std::string, bool>> verdicts;
    verdicts.emplace_back("c" + std::to_string(dim),
                          span_contains(basis, Functional::coordinate({dim}, dim)));
    if (dim % 2 == 0) {
        for (const auto& J : partitions_of(dim / 2)) {
            auto f = Functional::from_polynomial(
                pontryagin_number_functional(J, dim), dim);
            std::string pname = "p_(";
            for (std::size_t i = 0; i < J.size(); ++i)
                pname += (i ? "," : "") + std::to_string(J[i]);
            pname += ")";
            verdicts.emplace_back(pname, span_contains(basis, f));
        }
    }

    if (opt.format == "json") {
        json jd = json::array(), jb = json::array(), jv = json::array();
        for (std::size_t i = 0; i < diffs.size(); ++i)
            jd.push_back(json{{"pair", labels[i]}, {"difference", to_json(diffs[i])}});
        for (const auto& b : basis) jb.push_back(to_json(b));
        for (const auto& [name, ok] : verdicts)
            jv.push_back(json{{"functional", name}, {"invariant", ok}});
        std::cout << json{{"dim", dim},
                          {"differences", jd},
                          {"annihilator_basis", jb},
                          {"membership", jv}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        std::cout << labels[i] << ": (";
        for (std::size_t j = 0; j < diffs[i].size(); ++j)
            std::cout << (j ? ", " : "") << to_string(diffs[i][j]);
        std::cout << ")\n";
    }
    std::cout << "annihilator dimension " << basis.size() << "\n";
    for (const auto& b : basis) {
        std::cout << "basis: (";
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            std::cout << (j ? ", " : "") << to_string(b.coeffs[j]);
        std::cout << ")\n";
    }
    for (const auto& [name, ok] : verdicts)
        std::cout << name << (ok ? " is invariant" : " is not invariant") << "\n";
    return 0;
}

int run_verify_paper(Options& opt, const std::string& seed_arg,
                     unsigned long long rng_seed) {
    SurfaceData seed = parse_surface_arg(opt, seed_arg);
    auto report = run_paper_report(seed, rng_seed);
    if (opt.format == "json") {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        for (const auto& c : report.checks)
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
                      << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
        std::cout << (report.all_pass() ? "all checks passed"
                                        : "some checks FAILED")
                  << "\n";
    }
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic Chern number calculus engine"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    app.add_option("--catalog", opt.catalog_path, "catalog JSON file");

    std::string op;
    std::vector<std::string> compute_args;
    auto* compute = app.add_subcommand("compute", "compute Chern data");
    compute->add_option("op", op,
                        "cp|product|times-cp1|stabilize|projectivize|"
                        "ruled-tangent|ruled-canonical|fake-partner")
        ->required();
    compute->add_option("args", compute_args, "operation arguments");

    std::string genus_kind, eval_arg;
    std::vector<int> genus_nums;
    auto* genus = app.add_subcommand("genus", "genus functionals");
    genus->add_option("kind", genus_kind, "todd|chi-p|salamon|lw")->required();
    genus->add_option("nums", genus_nums, "dimension (and P or K)")->required();
    genus->add_option("--eval", eval_arg, "evaluate on a Chern vector");

    int inv_dim = 3;
    auto* invariants =
        app.add_subcommand("invariants", "annihilator of catalog pairs");
    invariants->add_option("--dim", inv_dim, "dimension")->required();

    std::string seed_arg = "9,3";
    unsigned long long rng_seed = 0;
    auto* verify = app.add_subcommand("verify-paper",
                                      "re-derive every computation as a "
                                      "pass/fail report");
    verify->add_option("--seed", seed_arg, "surface seed C1SQ,C2");
    verify->add_option("--rng-seed", rng_seed, "seed for randomized oracles");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*compute) return run_compute(opt, op, compute_args);
        if (*genus) return run_genus(opt, genus_kind, genus_nums, eval_arg);
        if (*invariants) return run_invariants(opt, inv_dim);
        if (*verify) return run_verify_paper(opt, seed_arg, rng_seed);
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitName;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecond;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return 0;
}
