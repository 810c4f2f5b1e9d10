#include "pepys/cli.hpp"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pepys/approx.hpp"
#include "pepys/binomial.hpp"
#include "pepys/enumeration.hpp"
#include "pepys/errors.hpp"
#include "pepys/median_mode.hpp"
#include "pepys/newton_argument.hpp"
#include "pepys/ordering.hpp"
#include "pepys/simulation.hpp"

namespace pepys::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Bad flag value discovered after CLI11 accepted the syntax.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    unsigned dice = 6;
    unsigned threshold = 1;
    std::string prob = "1/6";
    unsigned unit = 6;
    unsigned k_max = 3;
    int digits = 3;
    std::string tol = "1/1000000000";
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = SimConfig{}.seed;
    unsigned workers = 0;
    std::string format = "plain";
    std::optional<std::uint64_t> cap;
    unsigned faces = 6;
    unsigned success_faces = 1;
    unsigned k1 = 1;
    unsigned k2 = 2;
    std::vector<std::string> probs{"1/6", "1/4"};
};

struct Report {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
};

Probability parse_probability(std::string const& text, char const* flag) {
    try {
        return Probability::parse(text);
    } catch (std::exception const& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

std::uint64_t enumeration_cap(Options const& o) {
    if (o.cap) return *o.cap;
    if (char const* env = std::getenv("PEPYS_ENUM_CAP"); env != nullptr && *env != '\0') {
        try {
            std::size_t used = 0;
            std::uint64_t const cap = std::stoull(env, &used);
            if (used != std::strlen(env)) throw std::invalid_argument(env);
            return cap;
        } catch (std::exception const&) {
            throw UsageError(std::string("PEPYS_ENUM_CAP is not a count: '") + env + "'");
        }
    }
    return kDefaultEnumerationCap;
}

std::string proposition_label(unsigned k) {
    if (k >= 1 && k <= 26) return std::string(1, static_cast<char>('A' + k - 1));
    return "k=" + std::to_string(k);
}

Json rational_pair(ExactRational const& x, int digits) {
    return Json{{"fraction", x.to_string()}, {"decimal", render_decimal(x, digits)}};
}

// ---------------------------------------------------------------------------
// Commands

Report cmd_solve(Options const& o) {
    Probability const p = parse_probability(o.prob, "--prob");
    Wager const wager{o.dice, o.threshold, p};
    Probability const value = wager_probability(wager);

    Report r{"solve"};
    r.inputs = {{"dice", o.dice}, {"threshold", o.threshold}, {"prob", p.to_string()},
                {"digits", o.digits}};
    r.results["probability"] = value.to_string();
    r.results["outcome_space_fraction"] =
        value.value().to_fraction_string_over(outcome_space_size(o.dice, p));
    r.results["decimal"] = render_decimal(value.value(), o.digits);
    ExactRational const mean = binom_mean(o.dice, p);
    r.results["mean"] = mean.to_string();
    r.results["integer_mean"] = mean.is_integer();
    if (mean.is_integer()) {
        IntegerMeanTails const t = integer_mean_tails(o.dice, p);
        ExactRational const half(1, 2);
        r.results["upper_tail_at_mean"] = t.upper.to_string();
        r.results["lower_tail_at_mean"] = t.lower.to_string();
        r.results["upper_tail_at_least_half"] = t.upper.value() >= half;
        r.results["lower_tail_at_least_half"] = t.lower.value() >= half;
    }
    return r;
}

Report cmd_sequence(Options const& o) {
    PepysFamily const family{o.unit, o.k_max, parse_probability(o.prob, "--prob")};
    std::vector<Probability> const seq = pepys_sequence(family);

    Report r{"sequence"};
    r.inputs = {{"unit", o.unit}, {"kmax", o.k_max}, {"prob", family.success_prob.to_string()},
                {"digits", o.digits}};
    Json rows = Json::array();
    for (unsigned k = 1; k <= seq.size(); ++k) {
        Probability const& v = seq[k - 1];
        rows.push_back({{"k", k},
                        {"label", proposition_label(k)},
                        {"dice", o.unit * k},
                        {"probability", v.to_string()},
                        {"decimal", render_decimal(v.value(), o.digits)}});
    }
    r.results["rows"] = std::move(rows);
    if (seq.size() >= 2)
        r.results["strictly_decreasing"] = is_strictly_decreasing(seq);
    else
        r.results["strictly_decreasing"] = nullptr;
    std::vector<unsigned> const ranking = rank_units(seq);
    r.results["ranking"] = ranking;
    r.results["most_likely"] = proposition_label(ranking.front());
    return r;
}

Report cmd_ordering(Options const& o) {
    std::vector<Probability> grid;
    for (auto const& text : o.probs) grid.push_back(parse_probability(text, "--probs"));
    PepysFamily const family{o.unit, o.k_max, Probability(1, 6)};
    auto const table = ordering_table(family, grid);

    Report r{"ordering"};
    Json probs = Json::array();
    for (auto const& p : grid) probs.push_back(p.to_string());
    r.inputs = {{"unit", o.unit}, {"kmax", o.k_max}, {"probs", probs}, {"digits", o.digits}};
    Json rows = Json::array();
    for (auto const& row : table) {
        std::string ranking;
        for (unsigned k : row.ranking) ranking += (ranking.empty() ? "" : ">") + proposition_label(k);
        Json entry{{"prob", row.p.to_string()}, {"ranking", ranking}};
        for (unsigned k = 1; k <= row.tails.size(); ++k)
            entry[proposition_label(k)] = render_decimal(row.tails[k - 1].value(), o.digits);
        rows.push_back(std::move(entry));
    }
    r.results["rows"] = std::move(rows);
    return r;
}

Report cmd_approx(Options const& o) {
    Probability const p = parse_probability(o.prob, "--prob");
    ApproxReport const a = approx_report(o.dice, p);

    Report r{"approx"};
    r.inputs = {{"dice", o.dice}, {"prob", p.to_string()}, {"digits", o.digits}};
    r.results["exact"] = a.exact.to_string();
    r.results["exact_decimal"] = render_decimal(a.exact, o.digits);
    r.results["exact_2dp"] = render_decimal(a.exact, 2);
    r.results["modal"] = a.modal.to_string();
    r.results["stigler"] = a.stigler;
    r.results["stigler_abs_error"] = a.stigler_abs_error;
    r.results["demoivre_modal"] = a.demoivre_modal;
    r.results["demoivre_abs_error"] = a.demoivre_abs_error;
    if (a.chained) {
        r.results["chained"] = *a.chained;
        r.results["chained_2dp"] = render_decimal(*a.chained, 2);
        r.results["chained_abs_error"] = *a.chained_abs_error;
    }
    return r;
}

Report cmd_median(Options const& o) {
    Probability const p = parse_probability(o.prob, "--prob");
    CentralSummary const s = central_summary(o.dice, p);

    Report r{"median"};
    r.inputs = {{"dice", o.dice}, {"prob", p.to_string()}, {"digits", o.digits}};
    r.results["mean"] = s.mean.to_string();
    r.results["median"] = s.median;
    r.results["modes"] = s.modes;
    r.results["mean_median_gap"] = s.mean_median_gap.to_string();
    r.results["gap_below_7_10"] = s.gap_below_seven_tenths;
    r.results["gap_below_ln2"] = s.gap_below_ln2;
    r.results["integer_mean"] = s.mean.is_integer();
    if (s.mean.is_integer()) {
        IntegerMeanTails const t = integer_mean_tails(o.dice, p);
        r.results["upper_tail"] = rational_pair(t.upper.value(), o.digits);
        r.results["lower_tail"] = rational_pair(t.lower.value(), o.digits);
        r.results["modal"] = rational_pair(t.modal.value(), o.digits);
    }
    return r;
}

Report cmd_crossover(Options const& o) {
    ExactRational tol;
    try {
        tol = ExactRational::parse(o.tol);
    } catch (std::exception const& e) {
        throw UsageError(std::string("--tol: ") + e.what());
    }
    if (tol.sign() <= 0) throw UsageError("--tol must be positive");
    CrossoverResult const c = crossover_probability(o.k1, o.k2, o.unit, tol);

    Report r{"crossover"};
    r.inputs = {{"k1", o.k1}, {"k2", o.k2}, {"unit", o.unit}, {"tol", tol.to_string()}};
    r.results["p_low"] = c.p_low.to_string();
    r.results["p_high"] = c.p_high.to_string();
    r.results["width"] = (c.p_high - c.p_low).to_string();
    r.results["sign_low"] = c.sign_low;
    r.results["sign_high"] = c.sign_high;
    r.results["midpoint"] = c.midpoint;
    r.results["midpoint_decimal"] = render_decimal(c.midpoint, 6);
    r.results["iterations"] = c.iterations;
    return r;
}

Report cmd_argument(Options const& o) {
    Probability const p = parse_probability(o.prob, "--prob");
    ArgumentDecomposition const d = decompose_argument(p);

    Report r{"argument"};
    r.inputs = {{"prob", p.to_string()}, {"digits", o.digits}};
    r.results["peter_win"] = d.peter_win.to_string();
    r.results["peter_multi"] = d.peter_multi.to_string();
    r.results["peter_multi_share"] = d.peter_multi_share.to_string();
    r.results["peter_multi_share_decimal"] = render_decimal(d.peter_multi_share, o.digits);
    r.results["peter_multi_share_2dp"] = render_decimal(d.peter_multi_share, 2);
    r.results["james_win"] = d.james_win.to_string();
    r.results["james_lopsided"] = d.james_lopsided.to_string();
    r.results["james_lopsided_share"] = d.james_lopsided_share.to_string();
    r.results["james_lopsided_share_decimal"] = render_decimal(d.james_lopsided_share, o.digits);
    r.results["james_lopsided_share_2dp"] = render_decimal(d.james_lopsided_share, 2);

    SequenceScore const s = score_sequence(dominance_counterexample());
    r.results["counterexample"] = dominance_counterexample().throws;
    r.results["counterexample_peter_rate"] = s.peter_rate().to_string();
    r.results["counterexample_james_rate"] = s.james_rate().to_string();
    return r;
}

Json estimate_json(Estimate const& e, std::optional<ExactRational> const& exact) {
    Json j{{"estimate", e.value}, {"std_error", e.std_error}, {"successes", e.successes},
           {"base", e.base}};
    if (exact) {
        j["exact"] = exact->to_string();
        double const diff = e.value - exact->to_double();
        j["z"] = e.std_error > 0.0 ? Json(diff / e.std_error) : Json(nullptr);
    }
    return j;
}

Report cmd_simulate(Options const& o) {
    Probability const p = parse_probability(o.prob, "--prob");
    SimConfig cfg;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    SimReport const s = monte_carlo_decomposition(p, cfg, o.workers);

    std::optional<ArgumentDecomposition> exact;
    if (!p.is_degenerate()) exact = decompose_argument(p);
    auto field = [&](auto member) -> std::optional<ExactRational> {
        if (!exact) return std::nullopt;
        return member(*exact);
    };

    Report r{"simulate"};
    r.inputs = {{"prob", p.to_string()}, {"trials", cfg.trials}, {"seed", cfg.seed},
                {"generator_id", cfg.generator_id}};
    r.results["peter_win"] = estimate_json(
        s.peter_win, field([](auto const& d) { return d.peter_win.value(); }));
    r.results["peter_multi_share"] = estimate_json(
        s.peter_multi_share, field([](auto const& d) { return d.peter_multi_share; }));
    r.results["james_win"] = estimate_json(
        s.james_win, field([](auto const& d) { return d.james_win.value(); }));
    r.results["james_lopsided_share"] = estimate_json(
        s.james_lopsided_share, field([](auto const& d) { return d.james_lopsided_share; }));
    return r;
}

Report cmd_oracle(Options const& o) {
    DiceSpace const space{o.dice, o.faces, o.success_faces};
    space.validate();
    std::uint64_t const cap = enumeration_cap(o);
    Probability const enumerated = brute_force_tail(space, o.threshold, cap);
    Probability const formula = binom_tail(o.dice, o.threshold, space.success_probability());

    Report r{"oracle"};
    r.inputs = {{"dice", o.dice}, {"faces", o.faces}, {"success_faces", o.success_faces},
                {"threshold", o.threshold}, {"cap", cap}};
    r.results["probability"] = enumerated.to_string();
    r.results["outcome_space_fraction"] =
        enumerated.value().to_fraction_string_over(space.outcome_count());
    r.results["decimal"] = render_decimal(enumerated.value(), o.digits);
    r.results["outcomes"] = space.outcome_count().str();
    r.results["formula_probability"] = formula.to_string();
    r.results["agrees_with_formula"] = enumerated == formula;
    return r;
}

// ---------------------------------------------------------------------------
// Output

std::string scalar_text(Json const& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "n/a";
    if (v.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
        return s + "]";
    }
    return v.dump();
}

bool is_table(Json const& v) { return v.is_array() && !v.empty() && v.front().is_object(); }

void write_plain_table(std::ostream& out, Json const& rows) {
    std::vector<std::string> keys;
    for (auto const& [k, _] : rows.front().items()) keys.push_back(k);
    std::vector<std::size_t> width(keys.size());
    for (std::size_t c = 0; c < keys.size(); ++c) {
        width[c] = keys[c].size();
        for (auto const& row : rows) width[c] = std::max(width[c], scalar_text(row[keys[c]]).size());
    }
    auto line = [&](auto cell) {
        out << " ";
        for (std::size_t c = 0; c < keys.size(); ++c) {
            std::string const s = cell(c);
            out << " " << s << std::string(width[c] - s.size(), ' ');
        }
        out << "\n";
    };
    line([&](std::size_t c) { return keys[c]; });
    for (auto const& row : rows) line([&](std::size_t c) { return scalar_text(row[keys[c]]); });
}

void write_plain(std::ostream& out, Json const& obj, std::string const& prefix) {
    for (auto const& [key, value] : obj.items()) {
        if (value.is_object()) {
            write_plain(out, value, prefix + key + ".");
        } else if (is_table(value)) {
            out << prefix << key << ":\n";
            write_plain_table(out, value);
        } else {
            out << prefix << key << ": " << scalar_text(value) << "\n";
        }
    }
}

std::string csv_field(std::string const& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
}

void flatten(Json const& obj, std::string const& prefix, Json& flat) {
    for (auto const& [key, value] : obj.items()) {
        if (value.is_object())
            flatten(value, prefix + key + ".", flat);
        else
            flat[prefix + key] = value;
    }
}

std::string csv_cell(Json const& v) {
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + scalar_text(v[i]);
        return csv_field(s);
    }
    return csv_field(scalar_text(v));
}

void write_csv(std::ostream& out, Json const& results) {
    if (results.contains("rows") && is_table(results["rows"])) {
        Json const& rows = results["rows"];
        bool first = true;
        for (auto const& [k, _] : rows.front().items()) {
            out << (first ? "" : ",") << csv_field(k);
            first = false;
        }
        out << "\n";
        for (auto const& row : rows) {
            first = true;
            for (auto const& [_, v] : row.items()) {
                out << (first ? "" : ",") << csv_cell(v);
                first = false;
            }
            out << "\n";
        }
        return;
    }
    Json flat = Json::object();
    flatten(results, "", flat);
    bool first = true;
    for (auto const& [k, _] : flat.items()) {
        out << (first ? "" : ",") << csv_field(k);
        first = false;
    }
    out << "\n";
    first = true;
    for (auto const& [_, v] : flat.items()) {
        out << (first ? "" : ",") << csv_cell(v);
        first = false;
    }
    out << "\n";
}

void emit(std::ostream& out, Report const& r, std::string const& format) {
    if (format == "json") {
        Json doc{{"command", r.command},
                 {"inputs", r.inputs},
                 {"results", r.results},
                 {"exact_fractions_as_strings", true}};
        out << doc.dump(2) << "\n";
    } else if (format == "csv") {
        write_csv(out, r.results);
    } else {
        out << r.command << "\n";
        write_plain(out, r.results, "");
    }
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact binomial tails, approximations and Newton-Pepys diagnostics", "pepys"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"plain", "json", "csv"}))
            ->capture_default_str();
    };
    auto add_digits = [&](CLI::App* sub) {
        sub->add_option("--digits", o.digits, "Fractional digits in decimal renderings")
            ->check(CLI::Range(1, 1000))
            ->capture_default_str();
    };
    auto add_prob = [&](CLI::App* sub) {
        sub->add_option("--prob", o.prob, "Success probability, a/b or decimal")
            ->capture_default_str();
    };
    auto add_dice = [&](CLI::App* sub) {
        sub->add_option("--dice", o.dice, "Number of dice N")->check(CLI::Range(1u, 100000u));
    };

    auto* solve = app.add_subcommand("solve", "Exact P(X >= k) for N dice");
    add_dice(solve);
    solve->get_option("--dice")->required();
    solve->add_option("--threshold", o.threshold, "Minimum number of successes k")->required();
    add_prob(solve);
    add_digits(solve);
    add_format(solve);

    auto* sequence = app.add_subcommand("sequence", "P(X >= k | N = r*k) for k = 1..kmax");
    sequence->add_option("--unit", o.unit, "Dice per unit r")
        ->check(CLI::Range(1u, 10000u))
        ->capture_default_str();
    sequence->add_option("--kmax", o.k_max, "Largest k")
        ->check(CLI::Range(1u, 10000u))
        ->capture_default_str();
    add_prob(sequence);
    add_digits(sequence);
    add_format(sequence);

    auto* ordering = app.add_subcommand("ordering", "Ranking of the sequence over a grid of p");
    ordering->add_option("--unit", o.unit, "Dice per unit r")
        ->check(CLI::Range(1u, 10000u))
        ->capture_default_str();
    ordering->add_option("--kmax", o.k_max, "Largest k")
        ->check(CLI::Range(1u, 10000u))
        ->capture_default_str();
    ordering->add_option("--probs", o.probs, "Comma-separated success probabilities")
        ->delimiter(',');
    add_digits(ordering);
    add_format(ordering);

    auto* approx = app.add_subcommand("approx", "Approximations to P(X >= Np)");
    add_dice(approx);
    approx->get_option("--dice")->required();
    add_prob(approx);
    add_digits(approx);
    add_format(approx);

    auto* median = app.add_subcommand("median", "Mean, median and mode");
    add_dice(median);
    median->get_option("--dice")->required();
    add_prob(median);
    add_digits(median);
    add_format(median);

    auto* crossover = app.add_subcommand("crossover", "Success probability where k1 and k2 swap");
    crossover->add_option("--k1", o.k1)->check(CLI::PositiveNumber)->capture_default_str();
    crossover->add_option("--k2", o.k2)->check(CLI::PositiveNumber)->capture_default_str();
    crossover->add_option("--unit", o.unit, "Dice per unit r")
        ->check(CLI::Range(1u, 10000u))
        ->capture_default_str();
    crossover->add_option("--tol", o.tol, "Bracket width, a/b or decimal")->capture_default_str();
    add_format(crossover);

    auto* argument = app.add_subcommand("argument", "Exact Peter/James decomposition");
    add_prob(argument);
    add_digits(argument);
    add_format(argument);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo check of the decomposition");
    add_prob(simulate);
    simulate->add_option("--trials", o.trials)->check(CLI::PositiveNumber)->capture_default_str();
    simulate->add_option("--seed", o.seed)->capture_default_str();
    simulate->add_option("--workers", o.workers, "Worker threads, 0 = all cores");
    add_format(simulate);

    auto* oracle = app.add_subcommand("oracle", "Brute-force enumeration of a dice space");
    add_dice(oracle);
    oracle->get_option("--dice")->required();
    oracle->add_option("--faces", o.faces)->check(CLI::Range(2u, 1000u))->capture_default_str();
    oracle->add_option("--success-faces", o.success_faces)
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    oracle->add_option("--threshold", o.threshold)->required();
    oracle->add_option("--cap", o.cap, "Enumeration cap (overrides PEPYS_ENUM_CAP)");
    add_digits(oracle);
    add_format(oracle);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    std::vector<std::pair<CLI::App*, std::function<Report(Options const&)>>> const table{
        {solve, cmd_solve},         {sequence, cmd_sequence},   {ordering, cmd_ordering},
        {approx, cmd_approx},       {median, cmd_median},       {crossover, cmd_crossover},
        {argument, cmd_argument},   {simulate, cmd_simulate},   {oracle, cmd_oracle},
    };
    try {
        for (auto const& [sub, command] : table) {
            if (!sub->parsed()) continue;
            Report const report = command(o);
            emit(out, report, o.format);
            return kExitOk;
        }
    } catch (UsageError const& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (std::exception const& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}

}  // namespace pepys::cli
