#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "subcomp/io.hpp"
#include "subcomp/verify.hpp"

namespace {

using namespace subcomp;

struct SourceArgs {
    std::string builtin;
    std::string input;
};

void add_source_flags(CLI::App* cmd, SourceArgs& args) {
    auto* b = cmd->add_option("--builtin", args.builtin, "builtin language name (see catalog)");
    auto* i = cmd->add_option("--input", args.input, "language spec JSON file");
    b->excludes(i);
}

LanguageSource resolve_source(const SourceArgs& args) {
    if (!args.builtin.empty()) return make_builtin(args.builtin);
    if (!args.input.empty()) return load_language_source(args.input);
    throw std::invalid_argument("one of --builtin or --input is required");
}

// Output is buffered so that nothing but the stderr diagnostic is emitted
// on input or resource errors.
void write_payload(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << payload;
}

struct ProfileRow {
    std::size_t n;
    BigNat p;
    BigNat s;
    bool exact;
};

std::vector<ProfileRow> profile_rows(const LanguageSource& src, std::size_t N,
                                     std::optional<std::size_t> horizon) {
    std::vector<ProfileRow> rows;
    if (src.is_regular()) {
        Dfa fdfa = factor_dfa(std::get<RegularSource>(src.kind).automaton);
        std::vector<BigNat> p = count_words_per_length(fdfa, N);
        std::set<State> branching;
        for (State q = 0; q < fdfa.state_count; ++q)
            if (fdfa.out_degree(q) >= 2) branching.insert(q);
        std::vector<BigNat> s = count_words_reaching(fdfa, branching, N);
        for (std::size_t n = 0; n <= N; ++n) rows.push_back({n, p[n], s[n], true});
        return rows;
    }
    ComplexityProfile prof = profile(src, N, horizon);
    for (std::size_t n = 0; n <= N; ++n) {
        SpecialFactorReport report = special_factors(src, n, horizon);
        rows.push_back({n, prof.p[n], BigNat(report.count()), prof.exact[n] && report.exact});
    }
    return rows;
}

std::string render_rows(const std::vector<ProfileRow>& rows, const std::string& format) {
    std::ostringstream out;
    if (format == "csv") {
        out << "n,p,s,exact\n";
        for (const auto& r : rows)
            out << r.n << "," << r.p << "," << r.s << "," << (r.exact ? "true" : "false") << "\n";
    } else if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows)
            arr.push_back({{"n", r.n},
                           {"p", bignat_json(r.p)},
                           {"s", bignat_json(r.s)},
                           {"exact", r.exact}});
        out << arr.dump() << "\n";
    } else {
        out << "  n           p(n)        s(n)  exact\n";
        for (const auto& r : rows) {
            std::string p = r.p.str(), s = r.s.str();
            out << std::string(r.n < 10 ? 2 : (r.n < 100 ? 1 : 0), ' ') << r.n;
            out << std::string(p.size() < 14 ? 14 - p.size() : 1, ' ') << p;
            out << std::string(s.size() < 11 ? 11 - s.size() : 1, ' ') << s;
            out << (r.exact ? "  yes" : "  window-limited") << "\n";
        }
    }
    return out.str();
}

int cmd_profile(const SourceArgs& args, std::size_t N, std::optional<std::size_t> horizon,
                const std::string& format, const std::string& out_path) {
    LanguageSource src = resolve_source(args);
    write_payload(render_rows(profile_rows(src, N, horizon), format), out_path);
    return 0;
}

int cmd_classify(const SourceArgs& args, std::size_t N, std::optional<std::size_t> horizon,
                 const std::string& out_path) {
    LanguageSource src = resolve_source(args);
    write_payload(verdict_json(classify(src, N, horizon)).dump() + "\n", out_path);
    return 0;
}

int cmd_decompose(const SourceArgs& args, std::size_t N, std::optional<std::size_t> horizon,
                  const std::string& out_path) {
    LanguageSource src = resolve_source(args);
    GapVerdict verdict = classify(src, N, horizon);
    if (const auto* bounded = std::get_if<BoundedProven>(&verdict)) {
        write_payload(verdict_json(verdict).dump() + "\n", out_path);
        (void)bounded;
        return 0;
    }
    std::cerr << "language is not proven bounded: " << verdict_json(verdict).dump() << "\n";
    return 2;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opts, const std::string& out_path) {
    std::vector<CheckReport> reports =
        suite == "all" ? run_all_suites(opts) : run_suite(suite, opts);
    std::ostringstream stream;
    std::map<std::string, std::array<std::size_t, 3>> by_check;
    std::array<std::size_t, 3> totals{0, 0, 0};
    for (const auto& r : reports) {
        stream << report_json_line(r) << "\n";
        std::size_t slot = r.outcome == Outcome::Pass ? 0 : (r.outcome == Outcome::Fail ? 1 : 2);
        ++by_check[r.check][slot];
        ++totals[slot];
    }
    write_payload(stream.str(), out_path);

    std::ostringstream summary;
    summary << "check                                   pass   fail  undet\n";
    for (const auto& [check, counts] : by_check) {
        summary << check << std::string(check.size() < 38 ? 38 - check.size() : 1, ' ');
        for (std::size_t slot = 0; slot < 3; ++slot) {
            std::string v = std::to_string(counts[slot]);
            summary << std::string(v.size() < 7 ? 7 - v.size() : 1, ' ') << v;
        }
        summary << "\n";
    }
    summary << "total: " << reports.size() << "  pass: " << totals[0] << "  fail: " << totals[1]
            << "  undetermined: " << totals[2] << "\n";
    std::cout << summary.str();
    return totals[1] == 0 ? 0 : 1;
}

int cmd_catalog(const std::string& format, const std::string& out_path) {
    std::ostringstream out;
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& info : builtin_catalog())
            arr.push_back({{"name", info.name}, {"description", info.description}});
        out << arr.dump() << "\n";
    } else {
        for (const auto& info : builtin_catalog()) {
            out << info.name << std::string(info.name.size() < 11 ? 11 - info.name.size() : 1, ' ')
                << info.description << "\n";
        }
    }
    write_payload(out.str(), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subword complexity profiles, gap certificates and statement checks"};
    app.require_subcommand(1);

    SourceArgs source_args;
    std::size_t max_length = 16;
    std::optional<std::size_t> horizon;
    std::string format = "table";
    std::string out_path;
    std::uint64_t seed = 42;
    std::string mode = "formal";
    std::string suite = "all";

    auto add_common = [&](CLI::App* cmd, bool with_source) {
        if (with_source) add_source_flags(cmd, source_args);
        cmd->add_option("-n,--max-length", max_length, "largest factor length n");
        cmd->add_option("--horizon", horizon, "materialization horizon for word sources");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json", "table"}));
        cmd->add_option("--out", out_path, "write the payload to a file instead of stdout");
    };

    auto* profile_cmd = app.add_subcommand("profile", "complexity and special-factor counts");
    add_common(profile_cmd, true);
    auto* classify_cmd = app.add_subcommand("classify", "bounded-vs-linear gap verdict");
    add_common(classify_cmd, true);
    auto* decompose_cmd =
        app.add_subcommand("decompose", "triple certificate of a bounded language");
    add_common(decompose_cmd, true);
    auto* verify_cmd = app.add_subcommand("verify", "run statement check suites");
    verify_cmd->add_option("--suite", suite, "suite name or 'all'")
        ->check([](const std::string& s) {
            return subcomp::is_suite_name(s) ? std::string() : std::string("unknown suite: " + s);
        });
    verify_cmd->add_option("--seed", seed, "master seed for the random corpora");
    verify_cmd->add_option("--mode", mode, "cover checking mode")
        ->check(CLI::IsMember({"formal", "sampled"}));
    verify_cmd->add_option("--out", out_path, "write the report stream to a file");
    auto* catalog_cmd = app.add_subcommand("catalog", "list builtin languages");
    catalog_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json", "table"}));
    catalog_cmd->add_option("--out", out_path, "write the payload to a file instead of stdout");

    try {
        app.parse(argc, argv);
        if (profile_cmd->parsed())
            return cmd_profile(source_args, max_length, horizon, format, out_path);
        if (classify_cmd->parsed()) return cmd_classify(source_args, max_length, horizon, out_path);
        if (decompose_cmd->parsed())
            return cmd_decompose(source_args, max_length, horizon, out_path);
        if (verify_cmd->parsed()) {
            subcomp::SuiteOptions opts;
            opts.seed = seed;
            opts.formal_covers = mode == "formal";
            return cmd_verify(suite, opts, out_path);
        }
        if (catalog_cmd->parsed()) return cmd_catalog(format, out_path);
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const subcomp::CapExceededError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
