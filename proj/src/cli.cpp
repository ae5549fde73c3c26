#include "weyltasep/cli.hpp"

#include "weyltasep/alcove.hpp"
#include "weyltasep/closedform.hpp"
#include "weyltasep/errors.hpp"
#include "weyltasep/lumping.hpp"
#include "weyltasep/models.hpp"
#include "weyltasep/reference.hpp"
#include "weyltasep/serialize.hpp"
#include "weyltasep/tworow.hpp"
#include "weyltasep/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <sstream>

namespace wt {

namespace {

struct Global {
    std::string format = "text";
    int decimal = -1;
    std::uint64_t seed = 1;
};

struct Common {
    std::string kind;
    int n = 0;
    int n0 = -1;
    std::string alpha = "1", alpha_star = "1", beta = "1", beta_star = "1";
};

// Output sink for one command: JSON gets the whole result, CSV gets rows,
// text gets free-form lines.
class Emitter {
public:
    Emitter(const Global& g, std::ostream& out) : g_(g), out_(out) {}

    Json params = Json::object();
    Json result;

    void text(const std::string& line) { text_ += line + "\n"; }
    void csv(const std::vector<std::string>& row) { rows_.push_back(row); }

    std::string rat(const Rational& r) const
    {
        return g_.decimal < 0 ? to_string(r) : to_string(r) + " (" + to_decimal(r, g_.decimal) + ")";
    }

    std::vector<std::string> rat_cells(const Rational& r) const
    {
        std::vector<std::string> c{to_string(r)};
        if (g_.decimal >= 0)
            c.push_back(to_decimal(r, g_.decimal));
        return c;
    }

    void flush()
    {
        if (g_.format == "json") {
            Json j;
            j["version"] = kVersion;
            j["seed"] = g_.seed;
            j["parameters"] = params;
            j["result"] = result;
            out_ << j.dump(2) << "\n";
        } else if (g_.format == "csv") {
            for (const auto& r : rows_)
                write_csv_row(out_, r);
        } else {
            out_ << text_;
        }
    }

private:
    const Global& g_;
    std::ostream& out_;
    std::string text_;
    std::vector<std::vector<std::string>> rows_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ")
{
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i)
        s += (i ? sep : "") + parts[i];
    return s;
}

DStarParams parse_params(const Common& c)
{
    return {parse_rational(c.alpha), parse_rational(c.alpha_star), parse_rational(c.beta), parse_rational(c.beta_star)};
}

void add_common(CLI::App* sub, Common& c, bool rates)
{
    sub->add_option("--kind", c.kind, "B, C, D, Cdual or Bdual");
    sub->add_option("--n", c.n, "number of sites")->check(CLI::PositiveNumber);
    sub->add_option("--n0", c.n0, "number of zeros")->check(CLI::NonNegativeNumber);
    if (rates) {
        sub->add_option("--alpha", c.alpha, "rate as p/q");
        sub->add_option("--alpha-star", c.alpha_star, "rate as p/q");
        sub->add_option("--beta", c.beta, "rate as p/q");
        sub->add_option("--beta-star", c.beta_star, "rate as p/q");
    }
}

void record_common(Emitter& e, const Common& c)
{
    if (!c.kind.empty())
        e.params["kind"] = c.kind;
    e.params["n"] = c.n;
    if (c.n0 >= 0)
        e.params["n0"] = c.n0;
}

int need_n0(const Common& c)
{
    if (c.n0 < 0)
        throw InvalidCounts("--n0 is required");
    return c.n0;
}

// ---------------------------------------------------------------- stationary

struct StationaryOpts {
    Common c;
    std::string model = "multi";
    std::string method = "exact";
    std::uint64_t steps = 100000, burn_in = 1000;
    int trials = 4;
};

Kernel stationary_kernel(const StationaryOpts& o)
{
    if (o.model == "multi")
        return build_multi(parse_kind(o.c.kind), o.c.n);
    if (o.model == "two-species")
        return build_two_species(parse_kind(o.c.kind), o.c.n, need_n0(o.c));
    if (o.model == "dstar")
        return build_dstar(o.c.n, need_n0(o.c), parse_params(o.c));
    if (o.model == "tworow")
        return tworow::kernel(o.c.n, need_n0(o.c), parse_params(o.c));
    throw InvalidParameter("unknown model " + o.model);
}

std::string show_state(const StationaryOpts& o, const State& s)
{
    if (o.model == "tworow")
        return tworow::to_string(tworow::decode(s));
    return state_to_string(s);
}

int cmd_stationary(const Global& g, const StationaryOpts& o, std::ostream& out)
{
    Emitter e(g, out);
    record_common(e, o.c);
    e.params["model"] = o.model;
    e.params["method"] = o.method;
    if (o.model == "dstar" || o.model == "tworow")
        e.params["rates"] = {o.c.alpha, o.c.alpha_star, o.c.beta, o.c.beta_star};
    Kernel k = stationary_kernel(o);
    if (o.method == "exact") {
        Dist d = o.model == "tworow" ? tworow::stationary(o.c.n, o.c.n0, parse_params(o.c)) : exact_stationary(k);
        e.result = {{"states", dist_json(d, g.decimal)}};
        std::vector<std::string> head{"state", "p"};
        if (g.decimal >= 0)
            head.push_back("decimal");
        e.csv(head);
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d.p[i] == 0)
                continue;
            e.text(show_state(o, d.states[i]) + "  " + e.rat(d.p[i]));
            std::vector<std::string> row{show_state(o, d.states[i])};
            for (auto& c : e.rat_cells(d.p[i]))
                row.push_back(c);
            e.csv(row);
        }
    } else if (o.method == "mc") {
        e.params["steps"] = o.steps;
        e.params["burn_in"] = o.burn_in;
        e.params["trials"] = o.trials;
        EmpiricalDist d = mc_estimate(k, o.steps, o.burn_in, g.seed, o.trials);
        Json arr = Json::array();
        e.csv({"state", "frequency"});
        for (std::size_t i = 0; i < d.states.size(); ++i) {
            if (d.p[i] == 0)
                continue;
            arr.push_back({{"state", state_json(d.states[i])}, {"frequency", d.p[i]}});
            std::ostringstream f;
            f << d.p[i];
            e.text(show_state(o, d.states[i]) + "  " + f.str());
            e.csv({show_state(o, d.states[i]), f.str()});
        }
        e.result = {{"states", arr}};
    } else {
        throw InvalidParameter("unknown method " + o.method);
    }
    e.flush();
    return 0;
}

// ---------------------------------------------------------------- corr

struct CorrOpts {
    Common c;
    std::string method = "exact";
    bool table = false;
    bool sums = false;
};

std::string species(int v) { return v < 0 ? "-" + std::to_string(-v) : std::to_string(v); }

int cmd_corr(const Global& g, const CorrOpts& o, std::ostream& out)
{
    Emitter e(g, out);
    record_common(e, o.c);
    e.params["method"] = o.method;
    WeylKind kind = o.table ? WeylKind::B : parse_kind(o.c.kind);
    const int n = o.table ? 4 : o.c.n;

    if (o.table) {
        // <i,-j> for the B chain with n = 4, laid out as the published table.
        e.params["table"] = "B pair correlations n=4";
        Dist pairs = project_distribution(exact_stationary(build_multi(WeylKind::B, 4)),
                                          [](const State& s) { return State(s.end() - 2, s.end()); });
        std::vector<std::string> head{"i\\j"};
        for (int j : reference::kBPairCols)
            head.push_back("-" + std::to_string(j));
        e.csv(head);
        e.text(join(head, "\t"));
        Json rows = Json::array();
        for (int i : reference::kBPairRows) {
            std::vector<std::string> row{species(i)};
            Json jr = Json::array();
            for (int j : reference::kBPairCols) {
                Rational v = pairs[State{i, -j}];
                row.push_back(to_string(v));
                jr.push_back(rational_json(v, g.decimal));
            }
            e.csv(row);
            e.text(join(row, "\t"));
            rows.push_back({{"i", i}, {"values", jr}});
        }
        e.result = {{"columns", Json(std::vector<int>(reference::kBPairCols.begin(), reference::kBPairCols.end()))},
                    {"rows", rows}};
        e.flush();
        return 0;
    }

    if (o.sums) {
        MultiSums s = o.method == "closed" ? multi_sums(kind, n) : multi_sums_exact(kind, n);
        e.csv({"i", "row", "col", "hd", "hu"});
        e.text("i\trow\tcol\thd\thu");
        Json arr = Json::array();
        for (int i = -n; i <= n; ++i) {
            if (i == 0)
                continue;
            Json j = {{"i", i}, {"row", rational_json(s.row[i], g.decimal)}, {"col", rational_json(s.col[i], g.decimal)}};
            std::vector<std::string> row{species(i), to_string(s.row[i]), to_string(s.col[i])};
            if (i > 0) {
                j["hd"] = rational_json(s.hd[i], g.decimal);
                j["hu"] = rational_json(s.hu[i], g.decimal);
                row.push_back(to_string(s.hd[i]));
                row.push_back(to_string(s.hu[i]));
            } else {
                row.push_back("");
                row.push_back("");
            }
            arr.push_back(j);
            e.csv(row);
            e.text(join(row, "\t"));
        }
        e.result = {{"sums", arr}};
        e.flush();
        return 0;
    }

    if (o.c.n0 >= 0) {
        // Last-two-site table of the two-species chain.
        PairTable t;
        if (o.method == "closed") {
            if (kind == WeylKind::B)
                t = b_pair_table(n, o.c.n0);
            else if (kind == WeylKind::D)
                t = d_pair_table(n, o.c.n0);
            else if (kind == WeylKind::BDual)
                t = bdual_pair_table(n, o.c.n0);
            else
                throw UnsupportedRange("closed pair tables exist for B, D and Bdual");
        } else {
            Dist pairs = project_distribution(exact_stationary(build_two_species(kind, n, o.c.n0)),
                                              [](const State& s) { return State(s.end() - 2, s.end()); });
            for (int a = -1; a <= 1; ++a)
                for (int b = -1; b <= 1; ++b)
                    t[static_cast<std::size_t>(a + 1)][static_cast<std::size_t>(b + 1)] = pairs[State{a, b}];
        }
        e.csv({"a", "b", "p"});
        Json arr = Json::array();
        for (int a = -1; a <= 1; ++a) {
            std::vector<std::string> line{species(a)};
            for (int b = -1; b <= 1; ++b) {
                const Rational& v = t[static_cast<std::size_t>(a + 1)][static_cast<std::size_t>(b + 1)];
                line.push_back(e.rat(v));
                e.csv({species(a), species(b), to_string(v)});
                arr.push_back({{"a", a}, {"b", b}, {"p", rational_json(v, g.decimal)}});
            }
            e.text(join(line, "\t"));
        }
        e.result = {{"pairs", arr}};
        e.flush();
        return 0;
    }

    // Multispecies last-two-site correlations.
    std::map<std::pair<int, int>, Rational> cells;
    bool conjectural = o.method == "closed";
    if (conjectural) {
        if (kind != WeylKind::B)
            throw UnsupportedRange("closed multispecies correlations are known for B only");
        for (int x = -n; x <= n; ++x)
            for (int y = -n; y <= n; ++y)
                if (x && y)
                    if (auto v = conjecture_b_value(n, x, y))
                        cells[{x, y}] = *v;
        e.params["conjecture"] = true;
    } else {
        Dist pairs = project_distribution(exact_stationary(build_multi(kind, n)),
                                          [](const State& s) { return State(s.end() - 2, s.end()); });
        for (std::size_t i = 0; i < pairs.size(); ++i)
            cells[{pairs.states[i][0], pairs.states[i][1]}] = pairs.p[i];
    }
    e.csv({"i", "j", "p"});
    Json arr = Json::array();
    for (auto& [k, v] : cells) {
        e.csv({species(k.first), species(k.second), to_string(v)});
        e.text("<" + species(k.first) + "," + species(k.second) + ">  " + e.rat(v) + (conjectural ? "  (conjecture)" : ""));
        arr.push_back({{"i", k.first}, {"j", k.second}, {"p", rational_json(v, g.decimal)}});
    }
    e.result = {{"pairs", arr}};
    e.flush();
    return 0;
}

// ---------------------------------------------------------------- partition

struct PartitionOpts {
    Common c;
    std::string model = "b";
};

int cmd_partition(const Global& g, const PartitionOpts& o, std::ostream& out)
{
    Emitter e(g, out);
    record_common(e, o.c);
    e.params["model"] = o.model;
    int n0 = need_n0(o.c);
    Rational z;
    if (o.model == "b")
        z = Rational(z_b(o.c.n, n0));
    else if (o.model == "d")
        z = Rational(z_d(o.c.n, n0));
    else if (o.model == "semiperm")
        z = z_semiperm(o.c.n, n0, parse_rational(o.c.alpha), parse_rational(o.c.beta));
    else if (o.model == "tworow")
        z = tworow::partition(o.c.n, n0, parse_params(o.c));
    else
        throw InvalidParameter("unknown model " + o.model);
    if (o.model == "semiperm" || o.model == "tworow")
        e.params["rates"] = {o.c.alpha, o.c.alpha_star, o.c.beta, o.c.beta_star};
    e.result = {{"Z", rational_json(z, g.decimal)}};
    e.csv({"Z"});
    e.csv(e.rat_cells(z));
    e.text(e.rat(z));
    e.flush();
    return 0;
}

// ---------------------------------------------------------------- limdir

struct LimdirOpts {
    Common c;
    std::string method = "closed";
    bool normalize = false;
    bool table = false;
    std::uint64_t steps = 1000000;
    int trials = 10;
};

int cmd_limdir(const Global& g, const LimdirOpts& o, std::ostream& out)
{
    Emitter e(g, out);
    record_common(e, o.c);
    e.params["method"] = o.method;
    WeylKind kind = parse_kind(o.c.kind);

    auto emit_row = [&](int n, const std::vector<Rational>& c, Json& sink) {
        std::vector<Rational> v = o.normalize ? normalize_direction(c) : c;
        std::vector<std::string> parts;
        std::vector<std::string> row{std::to_string(n)};
        for (const auto& x : v) {
            parts.push_back(e.rat(x));
            row.push_back(to_string(x));
        }
        e.text(o.table ? std::to_string(n) + ": " + join(parts) : join(parts));
        e.csv(row);
        sink.push_back({{"n", n}, {"c", vector_json(v, g.decimal)}});
    };

    if (o.table) {
        const std::vector<reference::DirectionRow>* rows = nullptr;
        if (kind == WeylKind::D)
            rows = &reference::kDirectionD;
        else if (kind == WeylKind::BDual)
            rows = &reference::kDirectionBDual;
        else if (kind == WeylKind::C)
            rows = &reference::kDirectionC;
        else
            throw UnsupportedRange("published direction tables exist for D, Bdual and C");
        e.params["table"] = true;
        Json sink = Json::array();
        for (const auto& r : *rows)
            emit_row(r.n, limdir_closed(kind, r.n), sink);
        e.result = {{"rows", sink}};
        e.flush();
        return 0;
    }

    if (o.method == "walk") {
        e.params["steps"] = o.steps;
        e.params["trials"] = o.trials;
        DirectionEstimate est = estimate_direction(kind, o.c.n, o.steps, o.trials, g.seed);
        std::vector<std::string> parts;
        for (double x : est.direction) {
            std::ostringstream s;
            s.precision(6);
            s << x;
            parts.push_back(s.str());
        }
        e.text(join(parts));
        e.csv(parts);
        e.result = {{"direction", est.direction}, {"cosine", est.cosine}};
        e.flush();
        return 0;
    }

    std::vector<Rational> c;
    if (o.method == "closed")
        c = limdir_closed(kind, o.c.n);
    else if (o.method == "exact")
        c = limdir_exact_lam(kind, o.c.n);
    else
        throw InvalidParameter("unknown method " + o.method);
    Json sink = Json::array();
    emit_row(o.c.n, c, sink);
    e.result = sink.front();
    e.flush();
    return 0;
}

// ---------------------------------------------------------------- walk

struct WalkOpts {
    Common c;
    std::uint64_t steps = 1000000;
    int trials = 10;
};

int cmd_walk(const Global& g, const WalkOpts& o, std::ostream& out)
{
    Emitter e(g, out);
    record_common(e, o.c);
    e.params["steps"] = o.steps;
    e.params["trials"] = o.trials;
    WeylKind kind = parse_kind(o.c.kind);
    DirectionEstimate est = estimate_direction(kind, o.c.n, o.steps, o.trials, g.seed);
    auto fmt = [](const std::vector<double>& v) {
        std::vector<std::string> parts;
        for (double x : v) {
            std::ostringstream s;
            s.precision(6);
            s << x;
            parts.push_back(s.str());
        }
        return join(parts);
    };
    std::ostringstream cosine;
    cosine.precision(8);
    cosine << est.cosine;
    e.text("direction  " + fmt(est.direction));
    e.text("closed     " + fmt(est.reference));
    e.text("cosine     " + cosine.str());
    Json trials = Json::array();
    e.csv({"trial", "accepted", "chamber"});
    for (std::size_t t = 0; t < est.trials.size(); ++t) {
        const WalkResult& r = est.trials[t];
        trials.push_back({{"accepted", r.accepted}, {"chamber", r.chamber}, {"final_point", vector_json(r.final_point)}});
        e.text("trial " + std::to_string(t) + "  accepted " + std::to_string(r.accepted) + "  chamber " + r.chamber);
        e.csv({std::to_string(t), std::to_string(r.accepted), r.chamber});
    }
    Json chambers = Json::object();
    for (auto& [k, v] : est.chambers)
        chambers[k] = v;
    double accepted = 0;
    for (const auto& r : est.trials)
        accepted += static_cast<double>(r.accepted);
    double rate = accepted / static_cast<double>(o.steps * est.trials.size());
    e.result = {{"direction_estimate", est.direction}, {"closed_form", est.reference},
                {"cosine_vs_closed_form", est.cosine}, {"acceptance_rate", rate},
                {"chambers", chambers}, {"trials", trials}};
    e.flush();
    return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyOpts {
    std::string suite;
    int n_max = 4;
    int k_max = 12;
};

int cmd_verify(const Global& g, const VerifyOpts& o, std::ostream& out)
{
    Emitter e(g, out);
    e.params["suite"] = o.suite;
    e.params["n_max"] = o.n_max;
    e.params["k_max"] = o.k_max;
    SuiteOptions opt;
    opt.n_max = o.n_max;
    opt.k_max = o.k_max;
    opt.seed = g.seed;
    std::vector<Check> checks = run_suite(o.suite, opt);
    Json arr = Json::array();
    e.csv({"check", "ok", "detail"});
    int failed = 0;
    for (const auto& c : checks) {
        failed += !c.ok;
        e.text(std::string(c.ok ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : ": " + c.detail));
        e.csv({c.name, c.ok ? "true" : "false", c.detail});
        arr.push_back({{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    }
    e.text(std::to_string(checks.size() - static_cast<std::size_t>(failed)) + "/" + std::to_string(checks.size()) + " passed");
    e.result = {{"checks", arr}, {"passed", failed == 0}};
    e.flush();
    return failed ? 1 : 0;
}

std::uint64_t default_seed()
{
    if (const char* s = std::getenv("WEYLTASEP_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact and Monte Carlo computations for TASEPs on affine Weyl groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Global g;
    g.seed = default_seed();
    app.add_option("--format", g.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--decimal", g.decimal, "also print decimals with this many digits")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", g.seed, "random seed (default from WEYLTASEP_SEED)");

    StationaryOpts so;
    auto* st = app.add_subcommand("stationary", "stationary distribution of a chain");
    add_common(st, so.c, true);
    st->add_option("--model", so.model, "multi, two-species, dstar or tworow")
        ->check(CLI::IsMember({"multi", "two-species", "dstar", "tworow"}));
    st->add_option("--method", so.method, "exact or mc")->check(CLI::IsMember({"exact", "mc"}));
    st->add_option("--steps", so.steps);
    st->add_option("--burn-in", so.burn_in);
    st->add_option("--trials", so.trials)->check(CLI::PositiveNumber);

    CorrOpts co;
    auto* corr = app.add_subcommand("corr", "correlations at the last two sites");
    add_common(corr, co.c, false);
    corr->add_option("--method", co.method, "exact or closed")->check(CLI::IsMember({"exact", "closed"}));
    corr->add_flag("--table", co.table, "the B table of <i,-j> for n = 4");
    corr->add_flag("--sums", co.sums, "row, column and hook sums");

    PartitionOpts po;
    auto* part = app.add_subcommand("partition", "partition functions");
    add_common(part, po.c, true);
    part->add_option("--model", po.model, "b, d, semiperm or tworow")->check(CLI::IsMember({"b", "d", "semiperm", "tworow"}));

    LimdirOpts lo;
    auto* lim = app.add_subcommand("limdir", "limiting direction of the reduced alcove walk");
    add_common(lim, lo.c, false);
    lim->add_option("--method", lo.method, "closed, exact or walk")->check(CLI::IsMember({"closed", "exact", "walk"}));
    lim->add_flag("--normalize", lo.normalize, "divide by the coefficient sum");
    lim->add_flag("--table", lo.table, "all rows of the published table for this kind");
    lim->add_option("--steps", lo.steps);
    lim->add_option("--trials", lo.trials)->check(CLI::PositiveNumber);

    WalkOpts wo;
    auto* walk = app.add_subcommand("walk", "simulate the reduced alcove walk");
    add_common(walk, wo.c, false);
    walk->add_option("--steps", wo.steps);
    walk->add_option("--trials", wo.trials)->check(CLI::PositiveNumber);

    VerifyOpts vo;
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", vo.suite)->required()->check(CLI::IsMember(suite_names()));
    ver->add_option("--n-max", vo.n_max, "largest exact chain size")->check(CLI::Range(2, 5));
    ver->add_option("--k-max", vo.k_max, "identity range")->check(CLI::Range(1, 30));

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    if (argv.empty())
        argv.push_back("weyltasep");
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    auto needs = [&](const Common& c, bool kind) {
        if (kind && c.kind.empty())
            throw InvalidParameter("--kind is required");
        if (c.n <= 0)
            throw InvalidParameter("--n is required");
    };

    try {
        if (st->parsed()) {
            needs(so.c, so.model == "multi" || so.model == "two-species");
            return cmd_stationary(g, so, out);
        }
        if (corr->parsed()) {
            if (!co.table)
                needs(co.c, true);
            return cmd_corr(g, co, out);
        }
        if (part->parsed()) {
            needs(po.c, false);
            return cmd_partition(g, po, out);
        }
        if (lim->parsed()) {
            if (lo.table) {
                if (lo.c.kind.empty())
                    throw InvalidParameter("--kind is required");
            } else {
                needs(lo.c, true);
            }
            return cmd_limdir(g, lo, out);
        }
        if (walk->parsed()) {
            needs(wo.c, true);
            return cmd_walk(g, wo, out);
        }
        if (ver->parsed())
            return cmd_verify(g, vo, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace wt
