#include "pss/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <map>
#include <ostream>

#include "pss/enumerator.hpp"
#include "pss/formulas.hpp"
#include "pss/report.hpp"
#include "pss/stack_engine.hpp"

namespace pss {

namespace {

/// Bad flag values found after CLI11 parsing.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

const std::map<std::string, MapId> kMapNames{{"west", MapId::West},
                                             {"s12", MapId::S12},
                                             {"s21", MapId::S21},
                                             {"m12", MapId::Machine12},
                                             {"m21", MapId::Machine21}};

const std::map<std::string, OutputFormat> kFormats{
    {"table", OutputFormat::Table}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};

std::string join(const std::vector<Permutation>& perms, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < perms.size(); ++i) {
        if (i) out += sep;
        out += format(perms[i]);
    }
    return out;
}

nlohmann::json perm_array(const auto& perms) {
    auto arr = nlohmann::json::array();
    for (const auto& p : perms) arr.push_back(format(p));
    return arr;
}

void require_no_csv(OutputFormat f) {
    if (f == OutputFormat::Csv) throw UsageError("csv output is only available for verify");
}

std::string trace_line(const StackEvent& e) {
    return std::to_string(e.step) + ' ' + (e.op == StackEvent::Op::Push ? "push" : "pop") + ' ' +
           std::to_string(e.value);
}

struct SortArgs {
    MapId map = MapId::West;
    std::size_t times = 1;
    bool trace = false;
    std::string perm;
};

int cmd_sort(const SortArgs& a, std::ostream& out) {
    const auto p = parse(a.perm);
    if (a.trace) {
        if (a.times != 1 || is_machine(a.map)) {
            throw UsageError("--trace needs a single pass of west, s12 or s21");
        }
        const auto policy =
            a.map == MapId::West
                ? PushPolicy::west()
                : PushPolicy::dotted(DottedPattern(a.map == MapId::S12 ? BasePattern::Ascent12
                                                                       : BasePattern::Descent21,
                                                   2));
        const auto result = run_pass(p, policy, true);
        for (const auto& e : result.trace->events) out << trace_line(e) << '\n';
        out << format(result.output) << '\n';
        return kExitOk;
    }
    out << format(iterate(a.map, p, a.times)) << '\n';
    return kExitOk;
}

int cmd_runs(const std::string& kind, const std::string& text, std::ostream& out) {
    const auto p = parse(text);
    const auto d = kind == "peak" ? peak_runs(p) : valley_runs(p);
    for (const auto& run : d.runs) {
        out << '[' << format(p.values().subspan(run.start - 1, run.length())) << ']';
    }
    out << '\n';
    return kExitOk;
}

struct VerifyArgs {
    std::string claim;
    std::size_t n_min = 1;
    std::size_t n_max = 9;
    std::size_t jobs = 0;
    bool force = false;
    OutputFormat format = OutputFormat::Table;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<ClaimId> claims;
    if (a.claim == "all") {
        claims = all_claims();
    } else if (auto id = parse_claim_id(a.claim)) {
        claims.push_back(*id);
    } else {
        throw UsageError("unknown claim '" + a.claim + "'");
    }
    const BruteOptions options{a.jobs == 0 ? default_workers() : a.jobs, a.force};
    check_guard(a.n_max, a.force);
    std::vector<VerificationReport> reports;
    bool ok = true;
    for (auto c : claims) {
        reports.push_back(verify(c, a.n_min, a.n_max, options));
        ok = ok && reports.back().overall_pass;
    }
    switch (a.format) {
        case OutputFormat::Json:
            out << (a.claim == "all" ? to_json(reports) : to_json(reports.front())).dump(2)
                << '\n';
            break;
        case OutputFormat::Csv: out << to_csv(reports); break;
        case OutputFormat::Table:
            out << to_table(reports);
            for (const auto& r : reports) {
                err << to_string(r.claim) << " took " << r.elapsed.count() << " s\n";
            }
            break;
    }
    return ok ? kExitOk : kExitCheckFailed;
}

struct ImageArgs {
    MapId map = MapId::S12;
    std::size_t n = 0;
    std::string power = "auto";
    std::size_t jobs = 0;
    bool force = false;
    OutputFormat format = OutputFormat::Table;
};

std::size_t parse_count(const std::string& text, const char* what) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError(std::string("invalid ") + what + " '" + text + "'");
    }
    return v;
}

int cmd_image(const ImageArgs& a, std::ostream& out) {
    require_no_csv(a.format);
    std::size_t power = 0;
    if (a.power == "auto") {
        if (a.map == MapId::S12 && a.n >= 2) {
            power = a.n - 2;
        } else if (a.map == MapId::Machine12 && a.n >= 2) {
            power = a.n / 2 - 1;
        } else {
            throw UsageError("--power auto is defined for s12 (n >= 2) and m12 (n >= 2)");
        }
    } else {
        power = parse_count(a.power, "power");
    }
    const BruteOptions options{a.jobs == 0 ? default_workers() : a.jobs, a.force};
    const auto image = brute_image(a.map, a.n, power, options);
    if (a.format == OutputFormat::Json) {
        nlohmann::json doc{{"map", std::string(to_string(a.map))},
                           {"n", a.n},
                           {"power", power},
                           {"images", perm_array(image.members)},
                           {"overflow", image.overflow}};
        out << doc.dump(2) << '\n';
    } else {
        for (const auto& p : image.members) out << format(p) << '\n';
        if (image.overflow) out << "(truncated)\n";
    }
    return kExitOk;
}

struct FixedArgs {
    MapId machine = MapId::Machine21;
    std::size_t n = 0;
    bool list = false;
    std::size_t jobs = 0;
    bool force = false;
    OutputFormat format = OutputFormat::Table;
};

int cmd_fixed_points(const FixedArgs& a, std::ostream& out) {
    require_no_csv(a.format);
    const BruteOptions options{a.jobs == 0 ? default_workers() : a.jobs, a.force};
    const auto result = brute_fixed_points(a.machine, a.n, a.list, options);
    if (a.format == OutputFormat::Json) {
        nlohmann::json doc{{"map", std::string(to_string(a.machine))},
                           {"n", a.n},
                           {"count", result.count.str()}};
        if (result.members) doc["members"] = perm_array(*result.members);
        out << doc.dump(2) << '\n';
    } else {
        out << result.count.str();
        if (result.members) out << ": " << join(*result.members, " | ");
        out << '\n';
    }
    return kExitOk;
}

int cmd_orbit(MapId map, const std::string& text, OutputFormat f, std::ostream& out) {
    require_no_csv(f);
    const auto r = orbit(map, parse(text));
    if (f == OutputFormat::Json) {
        nlohmann::json doc{{"map", std::string(to_string(map))},
                           {"start", format(parse(text))},
                           {"tail_length", r.tail_length},
                           {"cycle_length", r.cycle_length},
                           {"reaches_identity_at", nullptr},
                           {"is_periodic_point", r.is_periodic_point}};
        if (r.reaches_identity_at) doc["reaches_identity_at"] = *r.reaches_identity_at;
        out << doc.dump(2) << '\n';
    } else {
        out << "tail_length=" << r.tail_length << " cycle_length=" << r.cycle_length
            << " reaches_identity_at="
            << (r.reaches_identity_at ? std::to_string(*r.reaches_identity_at) : "none")
            << " periodic=" << (r.is_periodic_point ? "true" : "false") << '\n';
    }
    return kExitOk;
}

int cmd_witness(const std::string& family_name, std::size_t n, bool check, std::ostream& out) {
    const auto family = parse_witness_family(family_name);
    if (!family) throw UsageError("unknown witness family '" + family_name + "'");
    if (!witness_family_accepts(*family, n)) {
        throw UsageError("n = " + std::to_string(n) + " is not valid for family " + family_name);
    }
    const auto claim = witness_claim(*family, n);
    out << format(claim.start);
    if (!check) {
        out << '\n';
        return kExitOk;
    }
    const auto reached = iterate(MapId::Machine12, claim.start, claim.passes);
    const bool pass = reached == claim.target;
    out << " → " << format(reached) << (pass ? " PASS" : " FAIL") << '\n';
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_count(const std::string& claim_name, std::size_t n, std::optional<std::size_t> t,
              std::ostream& out) {
    const auto claim = parse_claim_id(claim_name);
    if (!claim) throw UsageError("unknown claim '" + claim_name + "'");
    auto need_t = [&] {
        if (!t) throw UsageError("claim " + claim_name + " needs --t");
        return *t;
    };
    switch (*claim) {
        case ClaimId::T3_4: out << count_t_sortable_s12(n, need_t()).str(); break;
        case ClaimId::T3_6: out << count_t_sortable_s21(n).str(); break;
        case ClaimId::T4_2: out << count_machine21_sortable(n).str(); break;
        case ClaimId::T4_4: out << count_machine21_fixed_points(n).str(); break;
        case ClaimId::C5_1_min: out << count_min_sorted_s12(n).str(); break;
        case ClaimId::C5_1_high: out << count_highly_sorted_s12(n).str(); break;
        case ClaimId::L5_3: out << machine12_bound(n); break;
        default: throw UsageError("claim " + claim_name + " has no closed-form count");
    }
    out << '\n';
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stack-sorting maps for length-2 dotted patterns, West's map, and their "
                 "machines"};
    app.require_subcommand(1);

    const auto map_check = CLI::IsMember(kMapNames);
    const auto format_check = CLI::IsMember(kFormats);
    // Option values land in these strings and are converted after parsing.
    std::string sort_map, image_map, fixed_map, orbit_map_name;
    std::string verify_format = "table", image_format = "table", fixed_format = "table",
                orbit_format_name = "table";

    SortArgs sort_args;
    auto* sort = app.add_subcommand("sort", "Apply a map (or iterate it) to a permutation");
    sort->add_option("--map", sort_map, "west, s12, s21, m12 or m21")
        ->required()
        ->check(map_check);
    sort->add_option("--times", sort_args.times, "Number of applications")->capture_default_str();
    sort->add_flag("--trace", sort_args.trace, "Print the push/pop log of a single pass");
    sort->add_option("perm", sort_args.perm, "Permutation, e.g. 2,4,1,3")->required();

    std::string run_kind, run_perm;
    auto* runs = app.add_subcommand("runs", "Print the peak or valley run decomposition");
    runs->add_option("--kind", run_kind)->required()->check(CLI::IsMember({"peak", "valley"}));
    runs->add_option("perm", run_perm)->required();

    VerifyArgs verify_args;
    auto* ver = app.add_subcommand("verify", "Compare closed forms against exhaustive counts");
    ver->add_option("--claim", verify_args.claim, "Claim id, or 'all'")->required();
    ver->add_option("--n-min", verify_args.n_min)->capture_default_str();
    ver->add_option("--n-max", verify_args.n_max)->capture_default_str();
    ver->add_option("--jobs", verify_args.jobs, "Worker threads (default: all cores)");
    ver->add_flag("--force", verify_args.force, "Ignore the brute-force size guard");
    ver->add_option("--format", verify_format)->check(format_check);

    ImageArgs image_args;
    auto* img = app.add_subcommand("image", "Exhaustive image of a power of a map");
    img->add_option("--map", image_map)->required()->check(map_check);
    img->add_option("--n", image_args.n)->required()->check(CLI::PositiveNumber);
    img->add_option("--power", image_args.power, "Number of applications, or 'auto'")
        ->capture_default_str();
    img->add_option("--jobs", image_args.jobs);
    img->add_flag("--force", image_args.force);
    img->add_option("--format", image_format)->check(format_check);

    FixedArgs fixed_args;
    auto* fix = app.add_subcommand("fixed-points", "Count (and list) fixed points of a map");
    fix->add_option("--machine", fixed_map)->required()->check(map_check);
    fix->add_option("--n", fixed_args.n)->required()->check(CLI::PositiveNumber);
    fix->add_flag("--list", fixed_args.list);
    fix->add_option("--jobs", fixed_args.jobs);
    fix->add_flag("--force", fixed_args.force);
    fix->add_option("--format", fixed_format)->check(format_check);

    std::string orbit_perm;
    auto* orb = app.add_subcommand("orbit", "Tail and cycle length of a permutation's orbit");
    orb->add_option("--map", orbit_map_name)->required()->check(map_check);
    orb->add_option("perm", orbit_perm)->required();
    orb->add_option("--format", orbit_format_name)->check(format_check);

    std::string witness_family;
    std::size_t witness_n = 0;
    bool witness_check = false;
    auto* wit = app.add_subcommand("witness", "Build a witness permutation for the 12 machine");
    wit->add_option("--family", witness_family, "even, cycle, pi213, pi132 or pi312")
        ->required();
    wit->add_option("--n", witness_n)->required();
    wit->add_flag("--check", witness_check, "Run the machine and compare with the claimed image");

    std::string count_claim;
    std::size_t count_n = 0;
    std::optional<std::size_t> count_t;
    auto* cnt = app.add_subcommand("count", "Evaluate a closed-form count");
    cnt->add_option("--claim", count_claim)->required();
    cnt->add_option("--n", count_n)->required()->check(CLI::PositiveNumber);
    cnt->add_option("--t", count_t);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!reversed.empty()) reversed.pop_back();
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    auto map_of = [](const std::string& name) { return kMapNames.at(name); };
    auto format_of = [](const std::string& name) { return kFormats.at(name); };

    try {
        if (*sort) sort_args.map = map_of(sort_map);
        if (*ver) verify_args.format = format_of(verify_format);
        if (*img) {
            image_args.map = map_of(image_map);
            image_args.format = format_of(image_format);
        }
        if (*fix) {
            fixed_args.machine = map_of(fixed_map);
            fixed_args.format = format_of(fixed_format);
        }
        if (*sort) return cmd_sort(sort_args, out);
        if (*runs) return cmd_runs(run_kind, run_perm, out);
        if (*ver) return cmd_verify(verify_args, out, err);
        if (*img) return cmd_image(image_args, out);
        if (*fix) return cmd_fixed_points(fixed_args, out);
        if (*orb) return cmd_orbit(map_of(orbit_map_name), orbit_perm, format_of(orbit_format_name), out);
        if (*wit) return cmd_witness(witness_family, witness_n, witness_check, out);
        if (*cnt) return cmd_count(count_claim, count_n, count_t, out);
    } catch (const GuardError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace pss
