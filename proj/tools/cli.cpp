#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "numerosity/axioms.hpp"
#include "numerosity/counting.hpp"
#include "numerosity/dsl.hpp"
#include "numerosity/error.hpp"
#include "numerosity/numerosity.hpp"
#include "numerosity/series.hpp"

namespace numerosity::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
    std::size_t horizon = kDefaultHorizon;
    std::size_t window = kDefaultWindow;
    std::string chain = "identity";
    std::string oracle = "eventual-sign";
    std::string format;
    std::vector<std::string> exprs;
    std::string support = "0..3";
    std::optional<std::size_t> degcap;
    std::string catalog;
    std::size_t threads = 1;
    bool timing = false;
    bool dump_catalog = false;
};

Natural parse_natural(std::string_view text, std::string_view what) {
    Natural value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw Error("bad " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

std::vector<Natural> parse_list(std::string_view text, std::string_view what) {
    std::vector<Natural> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        out.push_back(parse_natural(piece, what));
        if (comma == std::string_view::npos) return out;
        start = comma + 1;
    }
}

// "identity" or "perm:3,1,2"
Chain parse_chain(std::string_view text) {
    if (text == "identity") return Chain::identity();
    if (text.substr(0, 5) == "perm:") return Chain::reordered(parse_list(text.substr(5), "chain entry"));
    throw Error("bad chain '" + std::string(text) + "' (expected identity or perm:<list>)");
}

// "{0,2,5}", "0,2,5", "{}" or an interval "0..5".
FiniteSupport parse_support(std::string text) {
    text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }),
               text.end());
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const auto lo = parse_natural(std::string_view(text).substr(0, dots), "support bound");
        const auto hi = parse_natural(std::string_view(text).substr(dots + 2), "support bound");
        if (lo > hi) throw Error("empty support interval '" + text + "'");
        return FiniteSupport::interval(lo, hi);
    }
    std::string_view body = text;
    if (!body.empty() && body.front() == '{') {
        if (body.back() != '}') throw Error("unbalanced braces in support '" + text + "'");
        body = body.substr(1, body.size() - 2);
    }
    return FiniteSupport(parse_list(body, "support element"));
}

std::size_t default_horizon() {
    const char* env = std::getenv("NUMEROSITY_HORIZON");
    if (env == nullptr || *env == '\0') return kDefaultHorizon;
    return static_cast<std::size_t>(parse_natural(env, "NUMEROSITY_HORIZON"));
}

void require_format(const std::string& format, std::initializer_list<std::string_view> allowed) {
    for (auto a : allowed) {
        if (format == a) return;
    }
    throw Error("format '" + format + "' is not supported by this command");
}

int cmd_count(const Options& o, std::ostream& out) {
    const auto x = parse_expr(o.exprs.at(0));
    const auto chain = parse_chain(o.chain);
    const auto format = o.format.empty() ? "csv" : o.format;
    require_format(format, {"csv", "json", "text"});
    if (format == "csv") {
        out << counting_csv(x, chain, o.horizon);
        return kOk;
    }
    CountingFunction counter(x);
    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (std::size_t k = 0; k <= o.horizon; ++k) {
            const auto stage = chain.stage(k);
            rows.push_back({{"k", k}, {"H_k", stage.to_string()}, {"count", counter(stage)}});
        }
        out << rows.dump(2) << '\n';
        return kOk;
    }
    out << x.to_string() << " along " << chain.to_string() << '\n';
    for (std::size_t k = 0; k <= o.horizon; ++k) {
        out << std::setw(4) << k << "  " << counter(chain.stage(k)) << '\n';
    }
    return kOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
    const auto a = parse_expr(o.exprs.at(0));
    const auto b = parse_expr(o.exprs.at(1));
    const auto chain = parse_chain(o.chain);
    const auto oracle = make_oracle(o.oracle, o.window);
    const auto result = compare(Numerosity::of(a, chain, o.horizon), Numerosity::of(b, chain, o.horizon), *oracle);
    const auto format = o.format.empty() ? "text" : o.format;
    require_format(format, {"json", "text"});
    if (format == "json") {
        ordered_json j;
        j["a"] = a.to_string();
        j["b"] = b.to_string();
        j["oracle"] = oracle->name();
        j["horizon"] = o.horizon;
        j["outcome"] = std::string(to_string(result.outcome));
        j["tail_index"] = result.tail_index ? ordered_json(*result.tail_index) : ordered_json(nullptr);
        out << j.dump(2) << '\n';
    } else {
        out << result.to_string() << '\n';
    }
    return result.outcome == Comparison::Undecided ? kUndecided : kOk;
}

int cmd_series(const Options& o, std::ostream& out) {
    const auto x = parse_expr(o.exprs.at(0));
    const auto f = parse_support(o.support);
    auto window = window_for(x, f);
    if (o.degcap) {
        if (*o.degcap == 0) throw Error("--degcap must be positive");
        window.degree_cap = static_cast<std::uint32_t>(*o.degcap);
    }
    const auto s = char_series(x, window);
    const auto sq = squarefree(s);
    const auto at_ones = evaluate(s, Assignment::indicator(f));
    const bool characteristic = is_characteristic(s);
    const auto format = o.format.empty() ? "text" : o.format;
    require_format(format, {"json", "text"});
    if (format == "json") {
        ordered_json j;
        j["expr"] = x.to_string();
        j["window"] = window.to_string();
        j["series"] = s.to_string();
        j["squarefree"] = sq.to_string();
        j["characteristic"] = characteristic;
        j["value_at_ones"] = at_ones.str();
        out << j.dump(2) << '\n';
    } else {
        out << "window: " << window.to_string() << '\n'
            << "series: " << s.to_string() << '\n'
            << "squarefree: " << sq.to_string() << '\n'
            << "characteristic: " << (characteristic ? "yes" : "no") << '\n'
            << "value at x_F: " << at_ones.str() << '\n';
    }
    return kOk;
}

int cmd_congruence(const Options& o, std::ostream& out, std::ostream& err) {
    const auto x = parse_expr(o.exprs.at(0));
    const auto y = parse_expr(o.exprs.at(1));
    const auto chain = parse_chain(o.chain);
    const auto format = o.format.empty() ? "text" : o.format;
    require_format(format, {"csv", "json", "text"});
    Congruence tau;
    try {
        tau = build_congruence(x, y, chain, o.horizon);
    } catch (const CountMismatchError& e) {
        err << "error: " << e.what() << '\n' << "mismatch index: " << e.stage() << '\n';
        return kError;
    }
    if (!verify_congruence(tau, x, y, chain, o.horizon)) {
        err << "error: glued map failed verification\n";
        return kError;
    }
    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < tau.pairs.size(); ++i) {
            rows.push_back({{"k", tau.layer[i]},
                            {"x", tau.pairs[i].first.to_string()},
                            {"tau_x", tau.pairs[i].second.to_string()}});
        }
        out << rows.dump(2) << '\n';
    } else if (format == "csv") {
        out << "k,x,tau_x\n";
        for (std::size_t i = 0; i < tau.pairs.size(); ++i) {
            out << tau.layer[i] << ",\"" << tau.pairs[i].first.to_string() << "\",\""
                << tau.pairs[i].second.to_string() << "\"\n";
        }
    } else {
        for (std::size_t i = 0; i < tau.pairs.size(); ++i) {
            out << std::setw(4) << tau.layer[i] << "  " << tau.pairs[i].first.to_string() << " -> "
                << tau.pairs[i].second.to_string() << '\n';
        }
    }
    return kOk;
}

int cmd_axioms(const Options& o, std::ostream& out) {
    const auto catalog = o.catalog.empty() ? default_catalog() : load_catalog(o.catalog);
    if (o.dump_catalog) {
        out << catalog_to_json(catalog);
        return kOk;
    }
    CheckContext ctx;
    ctx.horizon = o.horizon;
    ctx.chain = parse_chain(o.chain);
    ctx.oracle = make_oracle(o.oracle, o.window);
    const auto reports = run_catalog(catalog, ctx, o.threads);
    const auto format = o.format.empty() ? "json" : o.format;
    require_format(format, {"json", "text"});
    if (format == "json") {
        out << reports_to_json(reports, o.timing);
    } else {
        out << reports_to_table(reports);
    }
    bool undecided = false;
    for (const auto& r : reports) {
        if (r.verdict == Verdict::Fail) return kError;
        undecided = undecided || r.verdict == Verdict::Undecided;
    }
    return undecided ? kUndecided : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact numerosities of finitary point sets", "numerosity"};
    app.require_subcommand(1);
    try {
        o.horizon = default_horizon();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }

    auto common = [&](CLI::App* sub) {
        sub->add_option("--horizon,-K", o.horizon, "Largest chain stage (env NUMEROSITY_HORIZON)")
            ->capture_default_str();
        sub->add_option("--chain", o.chain, "identity or perm:<comma list prefix>")->capture_default_str();
        sub->add_option("--format", o.format, "csv, json or text");
    };
    auto oracle_opts = [&](CLI::App* sub) {
        sub->add_option("--oracle", o.oracle, "eventual-sign or eventual-sign-mod:<p>:<r>")
            ->capture_default_str();
        sub->add_option("--window,-W", o.window, "Stabilization window")->capture_default_str();
    };

    auto* count_cmd = app.add_subcommand("count", "Counting sequence |X_{H_k}| (default format csv)");
    count_cmd->add_option("expr", o.exprs, "Set expression")->required()->expected(1);
    common(count_cmd);

    auto* compare_cmd = app.add_subcommand("compare", "Compare two numerosities");
    compare_cmd->add_option("exprs", o.exprs, "Two set expressions")->required()->expected(2);
    common(compare_cmd);
    oracle_opts(compare_cmd);

    auto* series_cmd = app.add_subcommand("series", "Characteristic series on a truncation window");
    series_cmd->add_option("expr", o.exprs, "Set expression")->required()->expected(1);
    series_cmd->add_option("--support,-F", o.support, "Support: {0,2,5}, 0,2,5 or 0..5")->capture_default_str();
    series_cmd->add_option("--degcap,-D", o.degcap, "Per-variable degree cap (default max arity)");
    series_cmd->add_option("--format", o.format, "json or text");

    auto* congruence_cmd = app.add_subcommand("congruence", "Glue a bijection X -> Y along the chain");
    congruence_cmd->add_option("exprs", o.exprs, "Two set expressions")->required()->expected(2);
    common(congruence_cmd);

    auto* axioms_cmd = app.add_subcommand("axioms", "Run the axiom harness (default format json)");
    axioms_cmd->add_option("--catalog", o.catalog, "Catalog JSON file (default: built-in catalog)");
    axioms_cmd->add_option("--threads", o.threads, "Worker threads (0 = hardware)")->capture_default_str();
    axioms_cmd->add_flag("--timing", o.timing, "Report millis (otherwise null, for reproducible output)");
    axioms_cmd->add_flag("--dump-catalog", o.dump_catalog, "Print the catalog as JSON and exit");
    common(axioms_cmd);
    oracle_opts(axioms_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kOk;
        }
        err << "error: " << e.what() << '\n';
        return kError;
    }

    try {
        if (*count_cmd) return cmd_count(o, out);
        if (*compare_cmd) return cmd_compare(o, out);
        if (*series_cmd) return cmd_series(o, out);
        if (*congruence_cmd) return cmd_congruence(o, out, err);
        if (*axioms_cmd) return cmd_axioms(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}

}  // namespace numerosity::cli
