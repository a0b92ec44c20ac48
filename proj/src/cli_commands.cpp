#include "qsl/cli_commands.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "qsl/certificate.hpp"
#include "qsl/enumerate.hpp"
#include "qsl/families.hpp"
#include "qsl/graph6.hpp"
#include "qsl/spectral.hpp"

namespace qsl {

namespace {

std::string fixed12(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(12) << v;
    return s.str();
}

}  // namespace

int cmd_family(const FamilyCmdArgs& args, std::ostream& out, std::ostream& err) {
    auto id = parse_family(args.name);
    if (!id) {
        err << "unknown family name: " << args.name << "\n";
        return kExitUsage;
    }
    try {
        FamilyInstance inst = build_family(*id, args.k);
        out << "graph6 " << encode_graph6(inst.graph) << "\n";
        if (args.print_q) out << "q " << fixed12(q_index(inst.graph).q) << "\n";
        if (args.print_dot) out << to_dot(inst.graph);
        return kExitOk;
    } catch (const domain_error& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_verify(const VerifyCmdArgs& args, std::ostream& out, std::ostream& err) {
    if (!is_suite_name(args.suite)) {
        err << "unknown suite: " << args.suite
            << " (expected lemmas, polynomials, theorem12, delta-bound, or all)\n";
        return kExitUsage;
    }
    const SuiteOptions& o = args.options;
    if (o.k_min < 1 || o.k_max < o.k_min || o.k_max > 1000) {
        err << "k range must satisfy 1 <= k-min <= k-max <= 1000\n";
        return kExitUsage;
    }
    if (o.m_max < 3 || o.m_max > 9) {
        err << "m-max must be between 3 and 9\n";
        return kExitUsage;
    }
    if (o.num_tol <= 0 || o.gap_tol <= 0 || o.closed_tol <= 0) {
        err << "tolerances must be positive\n";
        return kExitUsage;
    }
    try {
        std::vector<Certificate> certs = run_suite(args.suite, o);
        int pass = 0, fail = 0, reported = 0;
        for (const Certificate& c : certs) {
            out << status_name(c.status) << " " << c.claim_id << "\n";
            ++(c.status == Status::PASS ? pass : c.status == Status::FAIL ? fail : reported);
        }
        out << certs.size() << " certificates: " << pass << " pass, " << fail << " fail, "
            << reported << " reported\n";
        if (!args.out_path.empty()) {
            write_certificates(args.out_path, certs);
            out << "wrote " << args.out_path << "\n";
        } else {
            nlohmann::json arr = nlohmann::json::array();
            for (const Certificate& c : certs) arr.push_back(c.to_json());
            out << arr.dump(2) << "\n";
        }
        return all_passed(certs) ? kExitOk : kExitVerificationFailed;
    } catch (const io_error& e) {
        err << e.what() << "\n";
        return kExitIo;
    } catch (const capability_error& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_search(const SearchCmdArgs& args, std::ostream& out, std::ostream& err) {
    auto filter = parse_filter(args.filter);
    if (!filter) {
        err << "unknown filter: " << args.filter
            << " (expected all, two-leaves-free, or leaf-free)\n";
        return kExitUsage;
    }
    try {
        SearchResult r = extremal_search(args.m, *filter, args.max_n);
        for (const std::string& g6 : r.argmax) out << g6 << "\n";
        out << "max_q " << fixed12(r.max_q) << "\n";
        if (!args.out_path.empty()) {
            std::ofstream f(args.out_path);
            f << search_result_json(r).dump(2) << "\n";
            if (!f) throw io_error("cannot write search result to " + args.out_path);
            out << "wrote " << args.out_path << "\n";
        }
        return kExitOk;
    } catch (const capability_error& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const io_error& e) {
        err << e.what() << "\n";
        return kExitIo;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"verification toolkit for signless-Laplacian extremal graph families"};
    app.set_version_flag("--version", std::string(kToolkitVersion));
    app.require_subcommand(1);

    FamilyCmdArgs fargs;
    CLI::App* fam = app.add_subcommand("family", "Build a family member and print it");
    fam->add_option("name", fargs.name, "family name, e.g. K1v(kP2+P1) or L2")->required();
    fam->add_option("--k", fargs.k, "family parameter k")->required();
    fam->add_flag("--q", fargs.print_q, "print the Q-index to 12 digits");
    fam->add_flag("--graph6", fargs.print_graph6, "print the graph6 encoding (always on)");
    fam->add_flag("--dot", fargs.print_dot, "print a DOT rendering");

    VerifyCmdArgs vargs;
    CLI::App* ver =
        app.add_subcommand("verify", "Run a verification suite and emit certificates");
    ver->add_option("suite", vargs.suite,
                    "one of: lemmas, polynomials, theorem12, delta-bound, all")
        ->required();
    ver->add_option("--k-min", vargs.options.k_min, "lowest family parameter (default 2)");
    ver->add_option("--k-max", vargs.options.k_max, "highest family parameter (default 40)");
    ver->add_option("--m-max", vargs.options.m_max,
                    "highest edge count for enumeration-backed checks (default 9)");
    ver->add_option("--num-tol", vargs.options.num_tol,
                    "root-vs-eigenvalue agreement tolerance (default 1e-7)");
    ver->add_option("--gap-tol", vargs.options.gap_tol,
                    "strict-inequality margin (default 1e-9)");
    ver->add_option("--closed-tol", vargs.options.closed_tol,
                    "closed-form agreement tolerance (default 1e-8)");
    ver->add_option("--seed", vargs.options.seed,
                    "seed for randomized property checks (default 97)");
    ver->add_option("--out", vargs.out_path, "write the certificate JSON array to this file");

    SearchCmdArgs sargs;
    CLI::App* sea = app.add_subcommand(
        "search", "Exhaustive Q-index maximum over all graphs with a given edge count");
    sea->add_option("m", sargs.m, "edge count (1..10)")->required();
    sea->add_option("--filter", sargs.filter,
                    "all, two-leaves-free, or leaf-free (default all)");
    sea->add_option("--max-n", sargs.max_n, "vertex cap (default min(m+1, 12))");
    sea->add_option("--out", sargs.out_path, "write the search result JSON to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    if (fam->parsed()) return cmd_family(fargs, out, err);
    if (ver->parsed()) return cmd_verify(vargs, out, err);
    return cmd_search(sargs, out, err);
}

}  // namespace qsl
