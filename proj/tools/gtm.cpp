// Command-line front end: word generation, complexity sweeps, factorization
// display, graph export, and the cross-check suites, with scriptable output.

#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gtm/binomial.hpp"
#include "gtm/errors.hpp"
#include "gtm/factorization.hpp"
#include "gtm/factors.hpp"
#include "gtm/formulas.hpp"
#include "gtm/limits.hpp"
#include "gtm/rauzy.hpp"
#include "gtm/verify.hpp"
#include "gtm/word.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitResourceCap = 3;

struct GenerateArgs {
    int m = 2;
    std::size_t length = 0;
    std::string format = "plain";
};

struct ComplexityArgs {
    int m = 2;
    std::string kind;
    int k = 2;
    std::size_t from = 0;
    std::size_t to = 0;
    bool check = false;
    std::string format = "csv";
};

struct FactorizeArgs {
    int m = 2;
    int k = 1;
    std::string word;
    std::string format = "json";
};

struct RauzyArgs {
    int m = 2;
    std::size_t order = 1;
    std::string format = "json";
    bool check = false;
};

struct VerifyArgs {
    std::string suite;
    gtm::SuiteOptions options;
    std::string format = "json";
};

int run_generate(const GenerateArgs& args, std::ostream& out) {
    const gtm::Word prefix = gtm::tm_prefix(args.m, args.length);
    if (args.format == "plain") {
        if (!prefix.empty()) out << prefix.str() << '\n';
        return kExitOk;
    }
    if (args.format == "json") {
        nlohmann::json j;
        j["m"] = args.m;
        j["length"] = args.length;
        j["word"] = prefix.str();
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    throw std::invalid_argument("generate supports formats plain and json");
}

int run_complexity(const ComplexityArgs& args, std::ostream& out) {
    if (args.from > args.to) throw std::invalid_argument("empty range: --from exceeds --to");
    auto computed = [&](std::size_t n) -> std::int64_t {
        if (args.kind == "factor") return gtm::factor_complexity(args.m, n);
        if (args.kind == "abelian") return gtm::abelian_complexity(args.m, n);
        if (args.kind == "binomial") return gtm::kbinomial_complexity(args.m, args.k, n);
        throw std::invalid_argument("unknown kind: " + args.kind);
    };
    auto formula = [&](std::size_t n) -> std::int64_t {
        const auto n64 = static_cast<std::int64_t>(n);
        if (args.kind == "factor") return gtm::factor_count_formula(args.m, n64);
        if (args.kind == "abelian") return gtm::abelian_count_formula(args.m, n64);
        return gtm::kbinomial_formula(args.m, args.k, n64);
    };

    bool all_match = true;
    nlohmann::json rows = nlohmann::json::array();
    if (args.format == "csv") out << (args.check ? "n,computed,formula,match\n" : "n,computed\n");
    for (std::size_t n = args.from; n <= args.to; ++n) {
        const std::int64_t c = computed(n);
        std::int64_t f = 0;
        bool match = true;
        if (args.check) {
            f = formula(n);
            match = c == f;
            all_match = all_match && match;
        }
        if (args.format == "csv") {
            out << n << ',' << c;
            if (args.check) out << ',' << f << ',' << (match ? "true" : "false");
            out << '\n';
        } else if (args.format == "plain") {
            out << n << ' ' << c;
            if (args.check) out << ' ' << f << ' ' << (match ? "true" : "false");
            out << '\n';
        } else if (args.format == "json") {
            nlohmann::json row;
            row["n"] = n;
            row["computed"] = c;
            if (args.check) {
                row["formula"] = f;
                row["match"] = match;
            }
            rows.push_back(row);
        } else {
            throw std::invalid_argument("complexity supports formats csv, json, and plain");
        }
    }
    if (args.format == "json") out << rows.dump(2) << '\n';
    return args.check && !all_match ? kExitMismatch : kExitOk;
}

nlohmann::json decomposition_or_null(int m, int k, const gtm::Word& fragment,
                                     std::optional<gtm::Letter> anchor, bool suffix_side) {
    if (fragment.empty() || !anchor) return nullptr;
    const auto [word, deco] = suffix_side ? gtm::image_suffix(m, k, *anchor, fragment.size())
                                          : gtm::image_prefix(m, k, *anchor, fragment.size());
    if (word != fragment)
        throw gtm::InvariantError("image fragment does not match its decomposition");
    return deco.to_json();
}

int run_factorize(const FactorizeArgs& args, std::ostream& out) {
    const gtm::Word word = gtm::Word::parse(args.m, args.word);
    const auto block = static_cast<std::size_t>(gtm::ipow_checked(args.m, args.k));
    const bool long_enough = word.size() / 2 >= block;

    std::vector<gtm::SigmaFactorization> factorizations;
    if (long_enough) {
        factorizations.push_back(gtm::unique_factorization(args.m, args.k, word));
    } else {
        factorizations = gtm::enumerate_factorizations(args.m, args.k, word);
        if (factorizations.empty()) throw gtm::NotAFactorError("word is not a factor of the infinite word");
    }

    if (args.format == "plain") {
        for (const auto& f : factorizations) {
            out << "x=" << f.x.str() << " u=" << f.u.str() << " y=" << f.y.str();
            if (f.a) out << " a=" << static_cast<int>(*f.a);
            if (f.b) out << " b=" << static_cast<int>(*f.b);
            out << '\n';
        }
        if (long_enough) {
            const auto& f = factorizations.front();
            out << "p=" << f.x.str() << " s=" << f.y.str() << '\n';
        }
        return kExitOk;
    }
    if (args.format != "json") throw std::invalid_argument("factorize supports formats json and plain");

    nlohmann::json j;
    j["m"] = args.m;
    j["k"] = args.k;
    j["word"] = word.str();
    j["unique"] = long_enough;
    j["factorizations"] = nlohmann::json::array();
    for (const auto& f : factorizations) j["factorizations"].push_back(f.to_json());
    if (long_enough) {
        const auto& f = factorizations.front();
        j["pair"] = {{"p", f.x.str()}, {"s", f.y.str()}};
        j["p_decomposition"] = decomposition_or_null(args.m, args.k, f.x, f.a, true);
        j["s_decomposition"] = decomposition_or_null(args.m, args.k, f.y, f.b, false);
    }
    out << j.dump(2) << '\n';
    return kExitOk;
}

int run_rauzy(const RauzyArgs& args, std::ostream& out) {
    const gtm::AbelianRauzyGraph g = gtm::build_graph(args.m, args.order);
    if (!args.check) {
        out << gtm::export_graph(g, args.format);
        return kExitOk;
    }

    const auto m64 = static_cast<std::int64_t>(args.m);
    const auto order64 = static_cast<std::int64_t>(args.order);
    const gtm::YSets y = gtm::y_sets(args.m, args.order);
    nlohmann::json j;
    j["m"] = args.m;
    j["order"] = args.order;
    bool pass = true;

    const auto vertices = static_cast<std::int64_t>(g.vertices.size());
    const std::int64_t expected_vertices = gtm::abelian_count_formula(m64, order64);
    j["vertices"] = vertices;
    j["expected_vertices"] = expected_vertices;
    pass = pass && vertices == expected_vertices;

    const auto edges = static_cast<std::int64_t>(g.edges.size());
    j["edges"] = edges;
    if (order64 <= 2 * m64) {
        const std::int64_t expected_edges = gtm::rauzy_edge_formula(m64, order64);
        j["expected_edges"] = expected_edges;
        pass = pass && edges == expected_edges;
    }

    const auto y_total = static_cast<std::int64_t>(y.total());
    j["y_total"] = y_total;
    j["y_right"] = y.right.size();
    j["y_left"] = y.left.size();
    if (order64 < 2 * m64) {
        const std::int64_t expected_y = gtm::extension_pair_formula(m64, order64);
        j["expected_y_total"] = expected_y;
        pass = pass && y_total == expected_y;
        pass = pass && y.right.size() == y.left.size();
    }

    if (order64 < m64) {
        const bool eulerian = gtm::eulerian_check(g);
        j["eulerian"] = eulerian;
        pass = pass && eulerian;
    }

    j["pass"] = pass;
    out << j.dump(2) << '\n';
    return pass ? kExitOk : kExitMismatch;
}

int run_verify(const VerifyArgs& args, std::ostream& out) {
    const std::vector<gtm::CheckReport> reports = gtm::run_suite(args.suite, args.options);
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.passed();

    if (args.format == "plain") {
        for (const auto& r : reports) {
            out << r.check << ": " << (r.passed() ? "PASS" : "FAIL") << " instances=" << r.instances
                << " failures=" << r.failures.size() << " elapsed_ms=" << r.elapsed_ms << '\n';
        }
    } else if (args.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : reports) j.push_back(r.to_json());
        out << j.dump(2) << '\n';
    } else {
        throw std::invalid_argument("verify supports formats json and plain");
    }
    return pass ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    gtm::apply_env_limits(gtm::limits());

    CLI::App app{"Toolkit for the generalized Thue-Morse words: generation, complexity "
                 "counting, desubstitution, abelian Rauzy graphs, and identity checks"};
    app.require_subcommand(1);

    std::string output_path;
    app.add_option("-o,--output", output_path, "Write the emission to a file instead of stdout");
    app.add_option("--max-prefix", gtm::limits().max_prefix,
                   "Cap on materialized prefix length (env GTM_MAX_PREFIX)");
    app.add_option("--max-signature-domain", gtm::limits().max_signature_domain,
                   "Cap on the subword-count table size (env GTM_MAX_SIGNATURE_DOMAIN)");
    app.add_option("--max-factor-length", gtm::limits().max_factor_length,
                   "Cap on enumerated factor length (env GTM_MAX_FACTOR_LENGTH)");

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand("generate", "Emit a prefix of the infinite word");
    generate->add_option("--m", gen.m, "Alphabet size")->required();
    generate->add_option("--length", gen.length, "Prefix length")->required();
    generate->add_option("--format", gen.format, "plain | json")->capture_default_str();

    ComplexityArgs cx;
    CLI::App* complexity = app.add_subcommand("complexity", "Sweep a complexity function over a length range");
    complexity->add_option("--m", cx.m, "Alphabet size")->required();
    complexity->add_option("--kind", cx.kind, "factor | abelian | binomial")->required();
    complexity->add_option("--k", cx.k, "Order for kind=binomial")->capture_default_str();
    complexity->add_option("--from", cx.from, "First length")->capture_default_str();
    complexity->add_option("--to", cx.to, "Last length (inclusive)")->required();
    complexity->add_flag("--check", cx.check, "Compare against the closed form; exit 1 on mismatch");
    complexity->add_option("--format", cx.format, "csv | json | plain")->capture_default_str();

    FactorizeArgs fz;
    CLI::App* factorize = app.add_subcommand("factorize", "Desubstitute a factor");
    factorize->add_option("--m", fz.m, "Alphabet size")->required();
    factorize->add_option("--k", fz.k, "Substitution power")->capture_default_str();
    factorize->add_option("word", fz.word, "Factor (digit string, or comma-separated letters)")->required();
    factorize->add_option("--format", fz.format, "json | plain")->capture_default_str();

    RauzyArgs rz;
    CLI::App* rauzy = app.add_subcommand("rauzy", "Export or check an abelian Rauzy graph");
    rauzy->add_option("--m", rz.m, "Alphabet size")->required();
    rauzy->add_option("--order", rz.order, "Graph order (factor length at the vertices)")->required();
    rauzy->add_option("--format", rz.format, "dot | json")->capture_default_str();
    rauzy->add_flag("--check", rz.check, "Validate counts and structure; exit 1 on mismatch");

    VerifyArgs vf;
    CLI::App* verify = app.add_subcommand("verify", "Run a cross-check suite");
    verify->add_option("--suite", vf.suite,
                       "all | prop41 | cor42 | bothdir | lemma43 | bigdiff | characterization | "
                       "main-equiv | theorems")
        ->required();
    verify->add_option("--m", vf.options.m, "Alphabet size")->capture_default_str();
    verify->add_option("--k", vf.options.k, "Order")->capture_default_str();
    verify->add_option("--max-n", vf.options.max_n, "Upper length bound (0 = suite default)")->capture_default_str();
    verify->add_option("--seed", vf.options.seed, "Seed for randomized checks")->capture_default_str();
    verify->add_option("--instances", vf.options.instances, "Randomized instances per point")
        ->capture_default_str();
    verify->add_option("--format", vf.format, "json | plain")->capture_default_str();

    // Let the global output and cap options appear after a subcommand name.
    for (CLI::App* sub : {generate, complexity, factorize, rauzy, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!output_path.empty()) {
        file.open(output_path);
        if (!file) {
            std::cerr << "error: cannot open output file: " << output_path << '\n';
            return kExitBadInput;
        }
        out = &file;
    }

    try {
        if (*generate) return run_generate(gen, *out);
        if (*complexity) return run_complexity(cx, *out);
        if (*factorize) return run_factorize(fz, *out);
        if (*rauzy) return run_rauzy(rz, *out);
        if (*verify) return run_verify(vf, *out);
        std::cerr << "error: no subcommand selected\n";
        return kExitBadInput;
    } catch (const gtm::ResourceCapError& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return kExitResourceCap;
    } catch (const gtm::InvariantError& e) {
        std::cerr << "invariant violated: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
}
