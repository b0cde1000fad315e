#include "fuzzytop/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "fuzzytop/bitopology.hpp"
#include "fuzzytop/closed_forms.hpp"
#include "fuzzytop/errors.hpp"
#include "fuzzytop/report.hpp"
#include "fuzzytop/topology.hpp"

namespace fuzzytop {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
    int n = 0;
    int m = 0;
    std::uint64_t k = 0;
    std::string n_range;
    std::string m_range;
    std::string k_range;
    std::string method;
    std::string convention = "paper";
    std::string format;
    std::string output;
    bool rational = false;
    bool timing = false;
    int max_n = 3;
    int max_m = 3;
    std::uint64_t max_k = 5;
    int threads = 0;
    EnumBudget budget;
};

ojson big_json(const BigInt& v)
{
    if (auto u = to_u64(v)) {
        return *u;
    }
    return v.str();
}

std::string cell_label(const Options& o)
{
    return "n=" + std::to_string(o.n) + ", m=" + std::to_string(o.m) + ", k=" + std::to_string(o.k);
}

int cmd_count(const Options& o, std::ostream& out, std::ostream& err)
{
    const bool want_formula = o.method != "enumerate";
    const bool want_enum = o.method != "formula";
    check_nm(o.n, o.m);

    std::optional<FormulaResult> formula;
    if (want_formula) {
        formula = try_closed_form(o.n, o.m, BigInt(o.k));
        if (!formula && !want_enum) {
            err << "no closed form covers (" << cell_label(o) << "); rerun with --method enumerate\n";
            return kExitInvalidArgs;
        }
    }
    std::optional<std::uint64_t> enumerated;
    if (want_enum) {
        enumerated = enumerate_topologies(LatticeContext(o.n, o.m), o.k, o.budget);
    }
    const bool compared = formula && enumerated;
    const bool match = compared && formula->value == *enumerated;

    if (o.format == "json") {
        ojson j;
        j["n"] = o.n;
        j["m"] = o.m;
        j["k"] = o.k;
        if (want_formula) {
            j["formula"] = formula ? big_json(formula->value) : ojson(nullptr);
            j["source"] = formula ? ojson(std::string(to_string(formula->source))) : ojson("not-covered");
        }
        if (want_enum) {
            j["enumeration"] = *enumerated;
        }
        if (compared) {
            j["match"] = match;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "tau_F(" << cell_label(o) << ")\n";
        if (want_formula) {
            if (formula) {
                out << "formula: " << formula->value << " (" << to_string(formula->source) << ")\n";
            } else {
                out << "formula: not-covered\n";
            }
        }
        if (want_enum) {
            out << "enumeration: " << *enumerated << '\n';
        }
        if (o.method == "both") {
            out << "verdict: " << (compared ? (match ? "match" : "MISMATCH") : "not-compared") << '\n';
        }
    }
    return compared && !match ? kExitMismatch : kExitOk;
}

int cmd_list(const Options& o, std::ostream& out)
{
    const LatticeContext ctx(o.n, o.m);
    check_enumerable(ctx, o.k, o.budget);
    const bool json = o.format == "json";
    std::uint64_t count = 0;
    if (json) {
        out << '[';
    }
    enumerate_topologies(ctx, o.k, o.budget, [&](const TopologyFamily& f) {
        if (json) {
            out << (count == 0 ? "\n  " : ",\n  ") << family_json(f, o.rational);
        } else {
            out << format_family(f, o.rational) << '\n';
        }
        ++count;
    });
    if (json) {
        out << (count == 0 ? "]\n" : "\n]\n");
    } else {
        out << "# " << count << " families\n";
    }
    return kExitOk;
}

int cmd_bitop(const Options& o, std::ostream& out)
{
    const auto conv = parse_convention(o.convention).value_or(PairConvention::paper);
    std::vector<BitopCountResult> results;
    if (o.method != "enumerate") {
        results.push_back(bitop_count(o.n, o.m, o.k, conv, CountMethod::formula, o.budget));
    }
    if (o.method != "formula") {
        results.push_back(bitop_count(o.n, o.m, o.k, conv, CountMethod::enumerate, o.budget));
    }
    const bool match = results.size() == 2 && results[0].pair_count == results[1].pair_count;

    if (o.format == "json") {
        ojson j;
        j["n"] = o.n;
        j["m"] = o.m;
        j["k"] = o.k;
        j["convention"] = std::string(to_string(conv));
        for (const auto& r : results) {
            j[std::string(to_string(r.method))] = {{"topologies", big_json(r.topology_count)},
                                                   {"pairs", big_json(r.pair_count)}};
        }
        if (results.size() == 2) {
            j["match"] = match;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "bitop(" << cell_label(o) << ") convention=" << to_string(conv) << '\n';
        for (const auto& r : results) {
            out << to_string(r.method) << ": topologies=" << r.topology_count << " pairs=" << r.pair_count << '\n';
        }
        if (results.size() == 2) {
            out << "verdict: " << (match ? "match" : "MISMATCH") << '\n';
        }
    }
    return results.size() == 2 && !match ? kExitMismatch : kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const VerificationReport report = verify(o.max_n, o.max_m, o.max_k, o.budget);
    if (o.format == "json") {
        write_verify_json(out, report, o.timing);
    } else {
        write_verify_text(out, report, o.timing);
    }
    return report.ok() ? kExitOk : kExitMismatch;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto pick = [](const std::string& range, int single, const char* name) {
        if (!range.empty()) {
            return parse_range(range);
        }
        if (single != 0) {
            return IntRange{single, single};
        }
        throw InvalidArgs(std::string("table needs --") + name + " or --" + name + "-range");
    };
    const IntRange n_range = pick(o.n_range, o.n, "n");
    const IntRange m_range = pick(o.m_range, o.m, "m");
    const IntRange k_range = !o.k_range.empty() ? parse_range(o.k_range)
                             : o.k != 0        ? IntRange{static_cast<std::int64_t>(o.k), static_cast<std::int64_t>(o.k)}
                                               : IntRange{2, 5};
    const std::string method = o.method.empty() ? "both" : o.method;
    const auto rows =
        build_table(n_range, m_range, k_range, method != "enumerate", method != "formula", o.budget);

    std::ostringstream buf;
    if (o.format == "json") {
        write_table_json(buf, rows);
    } else {
        write_table_csv(buf, rows);
    }
    if (o.output.empty() || o.output == "-") {
        out << buf.str();
        return kExitOk;
    }
    std::ofstream file(o.output, std::ios::binary | std::ios::trunc);
    if (file) {
        file << buf.str();
        file.flush();
    }
    if (!file) {
        err << "cannot write " << o.output << '\n';
        return kExitIo;
    }
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact counts of fuzzy topologies and fuzzy bitopological spaces on finite sets", "fuzzytop"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--max-candidates", o.budget.max_candidates, "cap on C(m^n-2, k-2) for enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-lattice-size", o.budget.max_lattice_size, "cap on m^n for enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", o.threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);

    const auto add_nmk = [&](CLI::App* sub, bool required) {
        auto* n = sub->add_option("--n", o.n, "points in X")->check(CLI::PositiveNumber);
        auto* m = sub->add_option("--m", o.m, "grades in the chain M")->check(CLI::Range(2, 1 << 20));
        auto* k = sub->add_option("--k", o.k, "open sets per topology")->check(CLI::Range(2ULL, ~0ULL));
        if (required) {
            n->required();
            m->required();
            k->required();
        }
    };
    const std::vector<std::string> methods{"formula", "enumerate", "both"};

    auto* count = app.add_subcommand("count", "count topologies with k open sets");
    add_nmk(count, true);
    count->add_option("--method", o.method, "formula|enumerate|both")->check(CLI::IsMember(methods));
    count->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* list = app.add_subcommand("list", "list every topology with k open sets");
    add_nmk(list, true);
    list->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    list->add_flag("--rational-grades", o.rational, "print grades as fractions i/(m-1)");

    auto* bitop = app.add_subcommand("bitop", "count bitopological spaces with k open sets on both sides");
    add_nmk(bitop, true);
    bitop->add_option("--convention", o.convention, "paper|ordered|distinct")
        ->check(CLI::IsMember({"paper", "ordered", "distinct"}));
    bitop->add_option("--method", o.method, "formula|enumerate|both")->check(CLI::IsMember(methods));
    bitop->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* ver = app.add_subcommand("verify", "compare closed forms with enumeration");
    ver->add_option("--max-n", o.max_n, "largest n")->check(CLI::PositiveNumber);
    ver->add_option("--max-m", o.max_m, "largest m")->check(CLI::Range(2, 1 << 20));
    ver->add_option("--max-k", o.max_k, "largest k")->check(CLI::Range(2ULL, ~0ULL));
    ver->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    ver->add_flag("--timing", o.timing, "include per-cell wall time (output no longer reproducible)");

    auto* table = app.add_subcommand("table", "export a table of counts");
    add_nmk(table, false);
    table->add_option("--n-range", o.n_range, "A..B");
    table->add_option("--m-range", o.m_range, "A..B");
    table->add_option("--k-range", o.k_range, "A..B (default 2..5)");
    table->add_option("--method", o.method, "formula|enumerate|both")->check(CLI::IsMember(methods));
    table->add_option("--format", o.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--output", o.output, "output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidArgs;
    }
    if (o.method.empty() && !table->parsed()) {
        o.method = "formula";
    }
    if (o.threads > 0) {
        omp_set_num_threads(o.threads);
    }

    try {
        if (count->parsed()) {
            return cmd_count(o, out, err);
        }
        if (list->parsed()) {
            return cmd_list(o, out);
        }
        if (bitop->parsed()) {
            return cmd_bitop(o, out);
        }
        if (ver->parsed()) {
            return cmd_verify(o, out);
        }
        return cmd_table(o, out, err);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const NotCovered& e) {
        err << e.what() << '\n';
        return kExitInvalidArgs;
    } catch (const Error& e) {
        err << "invalid arguments: " << e.what() << '\n';
        return kExitInvalidArgs;
    }
}

} // namespace fuzzytop
