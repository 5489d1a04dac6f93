#include "graycode/cli.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "graycode/errors.hpp"
#include "graycode/gilbreath.hpp"
#include "graycode/listing.hpp"
#include "graycode/listing_cycle.hpp"
#include "graycode/listing_path.hpp"
#include "graycode/verify.hpp"

namespace graycode::cli {

namespace {

// Generating 2^n lines beyond this point produces multi-gigabyte output,
// so it takes an explicit --force.
constexpr int kGuardrail = 28;

struct GenBinaryOptions {
    std::string variant;
    int n = 0;
    std::string format = "lines";
    bool force = false;
};

struct GenPermOptions {
    std::string variant;
    int n = 0;
    std::string format = "lines";
    bool force = false;
};

struct VerifyOptions {
    std::string variant;
    int n = 0;
    bool from_stdin = false;
    std::string set;
    bool either_order = false;
    bool force = false;
};

struct GapProfileOptions {
    std::string variant;
    int n = 0;
    bool from_stdin = false;
    bool force = false;
};

void check_guardrail(int n, bool force) {
    if (n > kGuardrail && !force) {
        throw std::invalid_argument("refusing to generate 2^" + std::to_string(n) +
                                    " entries without --force");
    }
}

ListingVariant variant_from_name(const std::string& name) {
    if (name == "cycle") {
        return ListingVariant::kCycle;
    }
    if (name == "path") {
        return ListingVariant::kPath;
    }
    throw std::invalid_argument("unknown variant \"" + name + "\"");
}

int run_gen_binary(const GenBinaryOptions& opt, std::ostream& out) {
    check_guardrail(opt.n, opt.force);
    if (opt.variant == "cycle") {
        // The cycle listing streams off the level below, so lines output
        // never materialises the full top level.
        const CycleListingStream stream(opt.n);
        if (opt.format == "lines") {
            for (std::size_t i = 0; i < stream.size(); ++i) {
                out << stream.at(i).str() << '\n';
            }
            return 0;
        }
        nlohmann::ordered_json doc;
        doc["n"] = opt.n;
        doc["variant"] = "cycle";
        auto& entries = doc["entries"] = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < stream.size(); ++i) {
            entries.push_back(stream.at(i).str());
        }
        out << doc.dump() << '\n';
        return 0;
    }
    const Listing listing = path_listing(opt.n);
    if (opt.format == "lines") {
        write_lines(out, listing);
        return 0;
    }
    nlohmann::ordered_json doc;
    doc["n"] = opt.n;
    doc["variant"] = "path";
    auto& entries = doc["entries"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < listing.size(); ++i) {
        entries.push_back(listing.at(i).str());
    }
    out << doc.dump() << '\n';
    return 0;
}

int run_gen_perm(const GenPermOptions& opt, std::ostream& out) {
    // A size-n permutation listing has 2^{n-1} entries, hence n-1 against
    // the line-count guardrail.
    check_guardrail(opt.n - 1, opt.force);
    const std::vector<Permutation> listing =
        perm_listing(opt.n, variant_from_name(opt.variant));
    if (opt.format == "lines") {
        for (const Permutation& p : listing) {
            out << p.str() << '\n';
        }
        return 0;
    }
    nlohmann::ordered_json doc;
    doc["n"] = opt.n;
    doc["variant"] = opt.variant;
    auto& entries = doc["entries"] = nlohmann::ordered_json::array();
    for (const Permutation& p : listing) {
        entries.push_back(p.str());
    }
    out << doc.dump() << '\n';
    return 0;
}

std::vector<Permutation> perms_from_lines(std::istream& in) {
    std::vector<Permutation> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        out.push_back(Permutation::parse(line));
    }
    if (out.empty()) {
        throw std::invalid_argument("no permutations found in input");
    }
    return out;
}

int run_verify(const VerifyOptions& opt, std::istream& in, std::ostream& out) {
    const bool perm_domain = (opt.set == "P" || opt.set == "p" || opt.set == "Q" ||
                              opt.set == "q");
    std::vector<PropertyReport> reports;

    if (perm_domain) {
        std::vector<Permutation> listing;
        if (opt.from_stdin) {
            listing = perms_from_lines(in);
        } else {
            check_guardrail(opt.n - 1, opt.force);
            listing = perm_listing(opt.n, variant_from_name(opt.variant));
        }
        reports = check_perm_properties(listing, property_set_from_name(opt.set));
    } else {
        Listing listing(1);
        if (opt.from_stdin) {
            listing = listing_from_lines(in);
            // Stdin may hold anything, so establish coverage before the
            // set checks, which assume each word appears at most once.
            reports.push_back(check_coverage(listing));
        } else {
            check_guardrail(opt.n, opt.force);
            listing = (opt.variant == "cycle") ? cycle_listing(opt.n)
                                               : path_listing(opt.n);
            if (opt.set == "coverage") {
                reports.push_back(check_coverage(listing));
            }
        }
        const bool stop = (opt.set == "coverage") ||
                          (!reports.empty() && !reports.front().passed);
        if (!stop) {
            const PairOrder order =
                opt.either_order ? PairOrder::kEitherOrder : PairOrder::kOrdered;
            auto more = check_binary_properties(listing,
                                                property_set_from_name(opt.set), order);
            reports.insert(reports.end(), more.begin(), more.end());
        }
    }

    out << render_reports(reports);
    return all_passed(reports) ? 0 : 1;
}

int run_gap_profile(const GapProfileOptions& opt, std::istream& in, std::ostream& out) {
    Listing listing(1);
    if (opt.from_stdin) {
        listing = listing_from_lines(in);
    } else {
        check_guardrail(opt.n, opt.force);
        listing = (opt.variant == "cycle") ? cycle_listing(opt.n) : path_listing(opt.n);
    }
    const GapProfile profile = gap_profile(listing);
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (i > 0) {
            out << ' ';
        }
        out << to_string(profile[i]);
    }
    out << '\n';
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Gray code listings on the augmentation graph and for Gilbreath permutations",
                 "graycode"};
    app.require_subcommand(1);

    GenBinaryOptions gen_binary;
    auto* gen_binary_cmd =
        app.add_subcommand("gen-binary", "Print a Gray code listing of binary words");
    gen_binary_cmd->add_option("--variant", gen_binary.variant, "cycle or path")
        ->required()
        ->check(CLI::IsMember({"cycle", "path"}));
    gen_binary_cmd->add_option("--n", gen_binary.n, "word length")->required();
    gen_binary_cmd->add_option("--format", gen_binary.format, "lines or json")
        ->check(CLI::IsMember({"lines", "json"}));
    gen_binary_cmd->add_flag("--force", gen_binary.force,
                             "allow more than 2^28 output lines");

    GenPermOptions gen_perm;
    auto* gen_perm_cmd = app.add_subcommand(
        "gen-perm", "Print a Gray code listing of Gilbreath permutations");
    gen_perm_cmd->add_option("--variant", gen_perm.variant, "cycle or path")
        ->required()
        ->check(CLI::IsMember({"cycle", "path"}));
    gen_perm_cmd->add_option("--n", gen_perm.n, "permutation size")->required();
    gen_perm_cmd->add_option("--format", gen_perm.format, "lines or json")
        ->check(CLI::IsMember({"lines", "json"}));
    gen_perm_cmd->add_flag("--force", gen_perm.force,
                           "allow more than 2^28 output lines");

    VerifyOptions verify;
    auto* verify_cmd =
        app.add_subcommand("verify", "Check listing properties and report per property");
    auto* verify_variant =
        verify_cmd->add_option("--variant", verify.variant, "cycle or path")
            ->check(CLI::IsMember({"cycle", "path"}));
    auto* verify_n = verify_cmd->add_option("--n", verify.n, "word length (sets L/A/B/C) or permutation size (sets P/Q)");
    auto* verify_stdin =
        verify_cmd->add_flag("--stdin", verify.from_stdin, "read the listing from stdin");
    verify_cmd->add_option("--set", verify.set,
                           "property set: L, A, B, C, P, Q or coverage")
        ->required()
        ->check(CLI::IsMember({"L", "A", "B", "C", "P", "Q", "coverage"}));
    verify_cmd->add_flag("--either-order", verify.either_order,
                         "accept the required word pair in either order");
    verify_cmd->add_flag("--force", verify.force, "allow generation beyond 2^28 entries");
    verify_stdin->excludes(verify_variant);
    verify_stdin->excludes(verify_n);
    verify_variant->needs(verify_n);
    verify_n->needs(verify_variant);

    std::string psi_word;
    auto* psi_cmd =
        app.add_subcommand("psi", "Map a binary word to its Gilbreath permutation");
    psi_cmd->add_option("--word", psi_word, "binary word of length n-1")->required();

    std::string psi_inv_perm;
    auto* psi_inv_cmd =
        app.add_subcommand("psi-inv", "Map a Gilbreath permutation back to its word");
    psi_inv_cmd
        ->add_option("--perm", psi_inv_perm,
                     "permutation, space-separated (quoted) or compact digits")
        ->required();

    int avoiders_size = 0;
    std::string avoiders_patterns;
    auto* avoiders_cmd = app.add_subcommand(
        "avoiders", "Brute-force enumerate pattern-avoiding permutations");
    avoiders_cmd->add_option("--size", avoiders_size, "permutation size (at most 10)")
        ->required();
    avoiders_cmd->add_option("--patterns", avoiders_patterns,
                             "comma-separated patterns, e.g. 132,312");

    std::string distance_u, distance_v;
    auto* distance_cmd = app.add_subcommand(
        "distance", "Exact graph distance between two words (reference BFS)");
    distance_cmd->add_option("--u", distance_u, "first word")->required();
    distance_cmd->add_option("--v", distance_v, "second word")->required();

    GapProfileOptions gap_profile_opt;
    auto* gap_profile_cmd = app.add_subcommand(
        "gap-profile", "Print the consecutive-gap classification of a listing");
    auto* gp_variant =
        gap_profile_cmd->add_option("--variant", gap_profile_opt.variant, "cycle or path")
            ->check(CLI::IsMember({"cycle", "path"}));
    auto* gp_n = gap_profile_cmd->add_option("--n", gap_profile_opt.n, "word length");
    auto* gp_stdin = gap_profile_cmd->add_flag("--stdin", gap_profile_opt.from_stdin,
                                               "read the listing from stdin");
    gap_profile_cmd->add_flag("--force", gap_profile_opt.force,
                              "allow generation beyond 2^28 entries");
    gp_stdin->excludes(gp_variant);
    gp_stdin->excludes(gp_n);
    gp_variant->needs(gp_n);
    gp_n->needs(gp_variant);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(gen_binary_cmd)) {
            return run_gen_binary(gen_binary, out);
        }
        if (app.got_subcommand(gen_perm_cmd)) {
            return run_gen_perm(gen_perm, out);
        }
        if (app.got_subcommand(verify_cmd)) {
            if (!verify.from_stdin && verify.variant.empty()) {
                err << "verify needs either --stdin or --variant/--n\n";
                return 2;
            }
            return run_verify(verify, in, out);
        }
        if (app.got_subcommand(psi_cmd)) {
            out << psi(Word::parse(psi_word)).str() << '\n';
            return 0;
        }
        if (app.got_subcommand(psi_inv_cmd)) {
            out << psi_inv(Permutation::parse(psi_inv_perm)).str() << '\n';
            return 0;
        }
        if (app.got_subcommand(avoiders_cmd)) {
            std::vector<Permutation> patterns;
            std::stringstream tokens(avoiders_patterns);
            std::string token;
            while (std::getline(tokens, token, ',')) {
                if (!token.empty()) {
                    patterns.push_back(Permutation::parse(token));
                }
            }
            for (const Permutation& p : enumerate_avoiders(avoiders_size, patterns)) {
                out << p.str() << '\n';
            }
            return 0;
        }
        if (app.got_subcommand(distance_cmd)) {
            out << distance_bfs(Word::parse(distance_u), Word::parse(distance_v)) << '\n';
            return 0;
        }
        if (app.got_subcommand(gap_profile_cmd)) {
            if (!gap_profile_opt.from_stdin && gap_profile_opt.variant.empty()) {
                err << "gap-profile needs either --stdin or --variant/--n\n";
                return 2;
            }
            return run_gap_profile(gap_profile_opt, in, out);
        }
    } catch (const InvariantError& e) {
        err << "invariant violation: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "no subcommand executed\n";
    return 2;
}

}  // namespace graycode::cli
