#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nctrace/connect.hpp"
#include "nctrace/enumerate.hpp"
#include "nctrace/errors.hpp"
#include "nctrace/permutation.hpp"
#include "nctrace/trace_engine.hpp"
#include "nctrace/verify.hpp"
#include "wordparse.hpp"

namespace nctrace {

namespace {

/// Flag wins over NCTRACE_WORKERS; -1 means the flag was not given.
/// 0 = hardware concurrency, k >= 1 = k threads.
int resolve_worker_request(int flag) {
    if (flag >= 0) return flag;
    if (const char* env = std::getenv("NCTRACE_WORKERS")) {
        const std::string text(env);
        size_t used = 0;
        int value = -1;
        try {
            value = std::stoi(text, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("NCTRACE_WORKERS is not an integer: " + text);
        }
        if (used != text.size() || value < 0)
            throw std::invalid_argument("NCTRACE_WORKERS must be a nonnegative integer: " + text);
        return value;
    }
    return 0;
}

std::string word_display(const TraceWord& w) {
    std::string s;
    for (size_t i = 0; i < w.factors().size(); ++i) {
        if (i > 0) s += ", ";
        s += format_factor(w.factors()[i]);
    }
    return s;
}

std::vector<int> parse_parts_list(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("composition: not an integer: " + tok);
        }
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
        if (used != tok.size()) throw std::invalid_argument("composition: bad part: " + tok);
        parts.push_back(value);
    }
    if (parts.empty()) throw std::invalid_argument("composition: empty");
    return parts;
}

int cmd_nc_list(int p, bool pairings, const std::string& connecting, std::ostream& out) {
    std::optional<Composition> comp;
    std::vector<int> marked;
    std::vector<signed char> is_marked;
    if (!connecting.empty()) {
        comp.emplace(parse_parts_list(connecting));
        if (comp->total() != p)
            throw std::invalid_argument("--connecting parts must sum to --p");
        marked = marked_points(*comp);
        is_marked.assign(static_cast<size_t>(p) + 1, 0);
        for (int m : marked) is_marked[static_cast<size_t>(m)] = 1;
    }
    auto emit = [&](const PartitionView& view) {
        if (comp && !is_connecting(view, is_marked, marked)) return;
        out << to_json(view.materialize()) << "\n";
    };
    if (pairings)
        for_each_noncrossing_pairing(p, emit);
    else
        for_each_noncrossing(p, emit);
    return 0;
}

int cmd_nc_kreweras(int p, const std::string& blocks_text, std::ostream& out) {
    const nlohmann::json parsed = nlohmann::json::parse(blocks_text, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_array())
        throw std::invalid_argument("--blocks must be a JSON array of arrays");
    std::vector<std::vector<int>> blocks;
    for (const auto& item : parsed) {
        if (!item.is_array()) throw std::invalid_argument("--blocks must be a JSON array of arrays");
        std::vector<int> block;
        for (const auto& v : item) {
            if (!v.is_number_integer()) throw std::invalid_argument("--blocks entries must be integers");
            block.push_back(v.get<int>());
        }
        blocks.push_back(std::move(block));
    }
    const NcPartition pi(SetPartition(p, std::move(blocks)));
    out << to_json(kreweras(pi)) << "\n";
    return 0;
}

int cmd_cumulant(const std::string& word_text, long at_n, int enumeration_limit, int workers_flag,
                 std::ostream& out) {
    const TraceWord w = parse_word(word_text);
    EngineOptions opts;
    opts.enumeration_limit = enumeration_limit;
    opts.workers = resolve_worker_request(workers_flag);
    const CumulantReport report = trace_cumulant_brown(w, opts);
    out << to_json(report) << "\n";
    if (at_n >= 1)
        out << "{\"n\":" << at_n << ",\"value\":\"" << report.value.eval(at_n).str() << "\"}\n";
    return 0;
}

void write_verify_csv(const CompareReport& cmp, const CircularityReport& circ, std::ostream& out) {
    out << "suite,metric,value\n";
    out << "oracle,checked," << cmp.checked << "\n";
    out << "oracle,mismatches," << cmp.mismatches.size() << "\n";
    out << "circularity,words_checked," << circ.words_checked << "\n";
    out << "circularity,violations," << circ.violations.size() << "\n";
    for (const auto& m : cmp.mismatches)
        out << "oracle,mismatch,\"" << word_display(m.word) << " | n=" << m.n << " | engine="
            << m.engine_value.str() << " | oracle=" << m.oracle_value.str() << "\"\n";
    for (const auto& v : circ.violations)
        out << "circularity,violation,\"" << word_display(v.word) << " | " << v.reason << "\"\n";
}

int cmd_verify(int max_p, int max_s, const std::vector<long>& n_values, const std::string& format,
               int workers_flag, std::ostream& out) {
    if (n_values.empty()) throw std::invalid_argument("--n needs at least one dimension");
    for (long n : n_values)
        if (n < 1) throw std::invalid_argument("--n dimensions must be >= 1");

    EngineOptions opts;
    opts.workers = resolve_worker_request(workers_flag);

    OracleBudget budget;
    budget.max_total_power = max_p;
    budget.max_n = *std::max_element(n_values.begin(), n_values.end());
    budget.max_entry_length = std::max(budget.max_entry_length, max_p);

    const CompareReport cmp = compare_engine_oracle(max_p, n_values, opts, budget);
    const CircularityReport circ = circularity_report(max_p, max_s, opts);

    if (format == "csv") {
        write_verify_csv(cmp, circ, out);
    } else {
        std::string combined = to_json(cmp);
        combined.insert(combined.size() - 1, ",\"circularity\":" + to_json(circ));
        out << combined << "\n";
    }
    return cmp.ok() && circ.ok() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact joint free cumulants of traces of powers of the Brown unitary matrix"};
    app.require_subcommand(1);

    CLI::App* nc = app.add_subcommand("nc", "Noncrossing partition utilities");
    nc->require_subcommand(1);

    int list_p = 0;
    bool list_pairings = false;
    std::string list_connecting;
    CLI::App* nc_list = nc->add_subcommand("list", "Stream NC(p) as one JSON object per line");
    nc_list->add_option("--p", list_p, "Ground set size")
        ->required()
        ->check(CLI::PositiveNumber);
    nc_list->add_flag("--pairings", list_pairings, "Only noncrossing pair partitions");
    nc_list->add_option("--connecting", list_connecting,
                        "Keep partitions whose join with this composition's interval "
                        "partition is the one-block partition (comma-separated parts)");

    int krew_p = 0;
    std::string krew_blocks;
    CLI::App* nc_krew = nc->add_subcommand("kreweras", "Kreweras complement of one partition");
    nc_krew->add_option("--p", krew_p, "Ground set size")->required()->check(CLI::PositiveNumber);
    nc_krew->add_option("--blocks", krew_blocks, "Partition blocks as JSON, e.g. [[1,2],[3]]")
        ->required();

    std::string word_text;
    long at_n = 0;
    int enumeration_limit = 14;
    int cumulant_workers = -1;
    CLI::App* cumulant =
        app.add_subcommand("cumulant", "Joint free cumulant of one trace word, exact in n");
    cumulant->add_option("--word", word_text, "Comma-separated factors: u^<p> with optional *")
        ->required();
    cumulant->add_option("--at-n", at_n, "Also evaluate at this dimension")
        ->check(CLI::PositiveNumber);
    cumulant->add_option("--enumeration-limit", enumeration_limit, "Largest total power allowed")
        ->check(CLI::PositiveNumber);
    cumulant->add_option("--workers", cumulant_workers, "Worker threads (0 = hardware)")
        ->check(CLI::NonNegativeNumber);

    int verify_max_p = 6;
    int verify_max_s = 4;
    std::vector<long> verify_n = {1, 2, 3};
    std::string verify_format = "json";
    int verify_workers = -1;
    CLI::App* verify =
        app.add_subcommand("verify", "Engine vs oracle comparison plus the circularity certificate");
    verify->add_option("--max-p", verify_max_p, "Largest total power checked")
        ->check(CLI::PositiveNumber);
    verify->add_option("--max-s", verify_max_s, "Largest factor count for the certificate")
        ->check(CLI::PositiveNumber);
    verify->add_option("--n", verify_n, "Dimensions for the oracle comparison")->delimiter(',');
    verify->add_option("--format", verify_format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--workers", verify_workers, "Worker threads (0 = hardware)")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (nc_list->parsed()) return cmd_nc_list(list_p, list_pairings, list_connecting, out);
        if (nc_krew->parsed()) return cmd_nc_kreweras(krew_p, krew_blocks, out);
        if (cumulant->parsed())
            return cmd_cumulant(word_text, at_n, enumeration_limit, cumulant_workers, out);
        if (verify->parsed())
            return cmd_verify(verify_max_p, verify_max_s, verify_n, verify_format, verify_workers,
                              out);
        err << "no subcommand selected\n";
        return 2;
    } catch (const budget_exceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace nctrace
