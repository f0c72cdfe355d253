#include "nbrw/cli.hpp"

#include "nbrw/amenability.hpp"
#include "nbrw/cogrowth.hpp"
#include "nbrw/error.hpp"
#include "nbrw/generators.hpp"
#include "nbrw/walks.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace nbrw {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";

struct CommandName {
    Command c;
    const char* name;
};

constexpr CommandName kCommands[] = {
    {Command::analyze, "analyze"},   {Command::limits, "limits"},     {Command::spectral, "spectral"},
    {Command::cogrowth, "cogrowth"}, {Command::simulate, "simulate"}, {Command::amenability, "amenability"},
    {Command::check, "check"},
};

OutputFormat default_format(Command c)
{
    return c == Command::limits || c == Command::cogrowth ? OutputFormat::csv : OutputFormat::json;
}

std::string mode_name(NumericMode m) { return m == NumericMode::rational ? "rational" : "float"; }

json scalar(const Rational& q) { return to_string(q); }
json scalar(double x) { return x; }

template <class T>
std::string cell(const T& v)
{
    return format_scalar(v);
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json config_json(const RunConfig& c)
{
    json j;
    j["command"] = to_string(c.command);
    if (c.graph_file) j["graph"] = *c.graph_file;
    if (c.builtin) j["builtin"] = *c.builtin;
    j["numeric_mode"] = mode_name(c.numeric_mode);
    j["from"] = c.from ? json(*c.from) : json(nullptr);
    j["to"] = c.to ? json(*c.to) : json(nullptr);
    j["nmax"] = c.nmax;
    j["rmax"] = c.rmax;
    j["k"] = c.k;
    j["trials"] = c.trials;
    j["seed"] = c.seed ? json(*c.seed) : json(nullptr);
    j["format"] = c.format.value_or(default_format(c.command)) == OutputFormat::json ? "json" : "csv";
    j["mode"] = c.cogrowth_mode == CogrowthMode::ordinary ? "ordinary" : "weighted";
    j["check_functional_equation"] = c.check_functional_equation;
    j["walk"] = c.walk == WalkKind::nbrw ? "nbrw" : "srw";
    j["budget"] = c.budget;
    return j;
}

// Report under construction: a JSON result plus an optional CSV table.
struct Report {
    json result = json::object();
    std::vector<std::string> csv_notes;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    int exit_code = 0;
};

void write_report(const RunConfig& cfg, const Report& rep, std::ostream& out)
{
    const auto fmt = cfg.format.value_or(default_format(cfg.command));
    if (fmt == OutputFormat::json) {
        json doc;
        doc["tool"] = "nbrw";
        doc["version"] = kVersion;
        doc["config"] = config_json(cfg);
        doc["result"] = rep.result;
        out << doc.dump(2) << '\n';
        return;
    }
    out << "# nbrw " << kVersion << '\n';
    out << "# config " << config_json(cfg).dump() << '\n';
    out << "# numeric_mode " << mode_name(cfg.numeric_mode) << '\n';
    for (const auto& n : rep.csv_notes) out << "# " << n << '\n';
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << '\n';
    };
    line(rep.csv_header);
    for (const auto& r : rep.csv_rows) line(r);
}

AnyGraph load_graph(const RunConfig& cfg, std::istream& in)
{
    if (cfg.graph_file.has_value() == cfg.builtin.has_value())
        throw BadParams("give exactly one of --graph and --builtin");
    if (cfg.builtin) return builtin_graph(*cfg.builtin);
    if (*cfg.graph_file == "-") return load_multigraph(in);
    return load_multigraph_file(*cfg.graph_file);
}

const Multigraph& require_finite(const AnyGraph& g, const char* what)
{
    if (!std::holds_alternative<Multigraph>(g))
        throw BadParams(std::string(what) + " needs a finite graph");
    return std::get<Multigraph>(g);
}

Vertex from_vertex(const RunConfig& cfg, const Multigraph& g)
{
    return cfg.from ? g.vertex(*cfg.from) : Vertex{0};
}

Vertex to_vertex(const RunConfig& cfg, const Multigraph& g, Vertex fallback)
{
    return cfg.to ? g.vertex(*cfg.to) : fallback;
}

std::string from_label(const RunConfig& cfg, const GraphSource& s) { return cfg.from.value_or(s.root()); }

// Rational arithmetic on a source is only allowed inside the ball budget.
void require_exact_ball(const RunConfig& cfg, const GraphSource& s, const std::string& x, int radius)
{
    if (cfg.numeric_mode != NumericMode::rational) return;
    const auto b = ball_capped(s, x, radius, cfg.exact_ball_cap);
    if (b.radius < radius)
        throw BudgetExceeded("rational mode needs B(" + x + ", " + std::to_string(radius) + ") which exceeds " +
                             std::to_string(cfg.exact_ball_cap) + " vertices");
}

json estimate_json(const SpectralEstimate& e)
{
    json j;
    j["value"] = e.value;
    j["method"] = to_string(e.method);
    j["n_used"] = e.n_used;
    j["residue_class"] = optional_int(e.residue_class);
    j["monotonicity_note"] = e.monotonicity_note;
    j["exact_value"] = e.exact_value ? json(to_string(*e.exact_value)) : json(nullptr);
    json roots = json::array();
    for (const auto& [n, r] : e.roots) roots.push_back(json::array({n, r}));
    j["roots"] = roots;
    return j;
}

void estimate_csv(const SpectralEstimate& e, Report& rep)
{
    rep.csv_notes.push_back("estimate " + format_double(e.value) + " method " + to_string(e.method));
    rep.csv_header = {"n", "root"};
    for (const auto& [n, r] : e.roots) rep.csv_rows.push_back({std::to_string(n), format_double(r)});
}

// --- analyze -------------------------------------------------------------

Report cmd_analyze(const AnyGraph& graph)
{
    const Multigraph& g = require_finite(graph, "analyze");
    const NbrwKernel kernel(g);
    const auto st = analyze_structure(kernel);
    Report rep;
    auto& r = rep.result;
    r["num_vertices"] = g.num_vertices();
    r["num_edges"] = g.num_edges();
    r["num_oriented_edges"] = g.num_oriented_edges();
    r["irreducible"] = st.irreducible;
    r["period"] = optional_int(st.period);
    r["essential_classes"] = st.num_essential();
    json comps = json::array();
    for (const auto& c : st.components)
        comps.push_back({{"size", c.members.size()}, {"essential", c.essential}, {"period", c.period}});
    r["components"] = comps;
    r["turnaround_L"] = optional_int(turnaround_bound(kernel));
    r["bipartite"] = is_bipartite(g).bipartite;
    r["small_cycle_radius"] = optional_int(small_cycle_radius(g));
    r["min_degree"] = g.min_degree();
    r["max_degree"] = g.max_degree();
    r["regular_degree"] = optional_int(g.regular_degree());
    rep.csv_header = {"key", "value"};
    for (const auto& [key, value] : r.items())
        if (!value.is_structured()) rep.csv_rows.push_back({key, value.dump()});
    return rep;
}

// --- limits --------------------------------------------------------------

template <class T>
Report limits_report(const RunConfig& cfg, const Multigraph& g, Vertex x)
{
    const auto p = cfg.walk == WalkKind::nbrw ? nbrw_limit_profile<T>(g, x, cfg.nmax)
                                              : srw_limit_profile<T>(g, x, cfg.nmax);
    Report rep;
    auto& r = rep.result;
    r["walk"] = cfg.walk == WalkKind::nbrw ? "nbrw" : "srw";
    r["from"] = g.label(x);
    r["period"] = p.period;
    r["converged_at"] = optional_int(p.converged_at);
    r["max_final_residual"] = p.max_final_residual;
    r["max_final_cesaro_residual"] = p.max_final_cesaro_residual;
    json vertices = json::array();
    rep.csv_notes.push_back("period " + std::to_string(p.period));
    for (Vertex y = 0; y < static_cast<Vertex>(g.num_vertices()); ++y) {
        json lims = json::array();
        std::string note = "limits " + g.label(y) + ":";
        for (const auto& q : p.residue_limits[y]) {
            lims.push_back(to_string(q));
            note += " " + to_string(q);
        }
        note += " cesaro " + to_string(p.cesaro_targets[y]);
        rep.csv_notes.push_back(note);
        vertices.push_back({{"vertex", g.label(y)},
                            {"residue_limits", lims},
                            {"cesaro_target", to_string(p.cesaro_targets[y])}});
    }
    r["vertices"] = vertices;
    json rows = json::array();
    rep.csv_header = {"n", "vertex", "q", "cesaro", "target", "residual"};
    for (const auto& row : p.rows) {
        rows.push_back({{"n", row.n},
                        {"vertex", g.label(row.vertex)},
                        {"q", scalar(row.value)},
                        {"cesaro", row.cesaro ? scalar(*row.cesaro) : json(nullptr)},
                        {"target", scalar(row.target)},
                        {"residual", scalar(row.residual)}});
        rep.csv_rows.push_back({std::to_string(row.n), g.label(row.vertex), cell(row.value),
                                row.cesaro ? cell(*row.cesaro) : std::string(), cell(row.target),
                                cell(row.residual)});
    }
    r["rows"] = rows;
    return rep;
}

Report cmd_limits(const RunConfig& cfg, const AnyGraph& graph)
{
    const Multigraph& g = require_finite(graph, "limits");
    const Vertex x = from_vertex(cfg, g);
    return cfg.numeric_mode == NumericMode::rational ? limits_report<Rational>(cfg, g, x)
                                                     : limits_report<double>(cfg, g, x);
}

// --- spectral ------------------------------------------------------------

Report cmd_spectral(const RunConfig& cfg, const AnyGraph& graph)
{
    SpectralEstimate e;
    if (const auto* g = std::get_if<Multigraph>(&graph)) {
        const Vertex x = from_vertex(cfg, *g);
        e = cfg.walk == WalkKind::nbrw ? spectral_radius_nbrw(*g, x, to_vertex(cfg, *g, x), cfg.nmax)
                                       : spectral_radius_srw(*g);
    } else {
        const auto& s = *std::get<SourcePtr>(graph);
        const std::string x = from_label(cfg, s);
        const std::string y = cfg.to.value_or(x);
        SourceWalkOptions opt;
        opt.mode = cfg.numeric_mode;
        if (cfg.numeric_mode == NumericMode::rational) opt.max_ball_vertices = cfg.exact_ball_cap;
        if (cfg.walk == WalkKind::nbrw) {
            require_exact_ball(cfg, s, x, x == y ? (cfg.nmax + 1) / 2 : cfg.nmax);
            e = spectral_radius_nbrw(s, x, y, cfg.nmax, opt);
        } else {
            require_exact_ball(cfg, s, x, (cfg.nmax + 1) / 2);
            e = spectral_radius_srw(s, x, cfg.nmax, opt);
        }
    }
    Report rep;
    rep.result = estimate_json(e);
    estimate_csv(e, rep);
    return rep;
}

// --- cogrowth ------------------------------------------------------------

template <class T>
Report cogrowth_report(const RunConfig& cfg, const AnyGraph& graph)
{
    CogrowthSeries<T> series;
    std::string xl, yl;
    const Multigraph* finite = std::get_if<Multigraph>(&graph);
    if (finite) {
        const Vertex x = from_vertex(cfg, *finite);
        const Vertex y = to_vertex(cfg, *finite, x);
        series = cogrowth_series<T>(*finite, x, y, cfg.nmax, cfg.cogrowth_mode);
        xl = finite->label(x);
        yl = finite->label(y);
    } else {
        const auto& s = *std::get<SourcePtr>(graph);
        xl = from_label(cfg, s);
        yl = cfg.to.value_or(xl);
        require_exact_ball(cfg, s, xl, cfg.nmax);
        series = cogrowth_series<T>(s, xl, yl, cfg.nmax, cfg.cogrowth_mode);
    }
    Report rep;
    auto& r = rep.result;
    r["from"] = xl;
    r["to"] = yl;
    r["mode"] = to_string(cfg.cogrowth_mode);
    json coeffs = json::array();
    json spheres = json::array();
    rep.csv_header = {"n", "coefficient", "sphere_size"};
    for (std::size_t n = 0; n < series.coefficients.size(); ++n) {
        coeffs.push_back(scalar(series.coefficients[n]));
        spheres.push_back(to_string(series.sphere_sizes[n]));
        rep.csv_rows.push_back(
            {std::to_string(n), cell(series.coefficients[n]), to_string(series.sphere_sizes[n])});
    }
    r["coefficients"] = coeffs;
    r["sphere_sizes"] = spheres;
    try {
        const auto rate = cogrowth_rate(series);
        r["rate"] = estimate_json(rate);
        rep.csv_notes.push_back("rate " + format_double(rate.value));
    } catch (const AllZero&) {
        r["rate"] = nullptr;
        rep.csv_notes.push_back("rate undefined: no positive coefficient with n >= 1");
    }
    if (cfg.check_functional_equation) {
        if (!finite) throw BadParams("the functional equation check needs a finite regular graph");
        const auto fe = functional_equation_check(*finite, finite->vertex(xl), finite->vertex(yl), cfg.nmax);
        json lhs = json::array(), rhs = json::array();
        for (const auto& q : fe.lhs) lhs.push_back(to_string(q));
        for (const auto& q : fe.rhs) rhs.push_back(to_string(q));
        r["functional_equation"] = {{"d", fe.d},
                                    {"N", fe.N},
                                    {"max_residual", to_string(fe.max_residual)},
                                    {"exact_zero", fe.exact_zero()},
                                    {"lhs", lhs},
                                    {"rhs", rhs}};
        rep.csv_notes.push_back("functional_equation d " + std::to_string(fe.d) + " N " + std::to_string(fe.N) +
                                " max_residual " + to_string(fe.max_residual));
        if (!fe.exact_zero()) rep.exit_code = 1;
    }
    return rep;
}

Report cmd_cogrowth(const RunConfig& cfg, const AnyGraph& graph)
{
    return cfg.numeric_mode == NumericMode::rational ? cogrowth_report<Rational>(cfg, graph)
                                                     : cogrowth_report<double>(cfg, graph);
}

// --- simulate ------------------------------------------------------------

Report cmd_simulate(const RunConfig& cfg, const AnyGraph& graph)
{
    if (cfg.trials < 1) throw BadParams("simulate needs --trials >= 1");
    if (!cfg.seed) throw BadParams("simulate needs --seed");
    // A walk of n steps from x makes its choices inside B(x, n-1), so a
    // ball of radius n is exact for sources.
    Multigraph g;
    Vertex x = 0;
    if (const auto* f = std::get_if<Multigraph>(&graph)) {
        g = *f;
        x = from_vertex(cfg, g);
    } else {
        const auto& s = *std::get<SourcePtr>(graph);
        auto b = ball(s, from_label(cfg, s), cfg.nmax);
        g = std::move(b.graph);
        x = b.center;
    }
    const NbrwKernel kernel(g);
    const auto mc = monte_carlo_nbrw(kernel, x, cfg.nmax, cfg.trials, *cfg.seed);
    const auto exact = nbrw_nstep<double>(kernel, x, cfg.nmax).values;
    Report rep;
    auto& r = rep.result;
    r["from"] = g.label(x);
    r["n"] = cfg.nmax;
    r["trials"] = mc.trials;
    r["total_variation"] = total_variation(exact, mc.frequencies);
    json rows = json::array();
    rep.csv_header = {"vertex", "count", "frequency", "exact"};
    for (Vertex y = 0; y < static_cast<Vertex>(g.num_vertices()); ++y) {
        if (mc.counts[y] == 0 && exact[y] == 0.0) continue;
        rows.push_back({{"vertex", g.label(y)},
                        {"count", mc.counts[y]},
                        {"frequency", mc.frequencies[y]},
                        {"exact", exact[y]}});
        rep.csv_rows.push_back({g.label(y), std::to_string(mc.counts[y]), format_double(mc.frequencies[y]),
                                format_double(exact[y])});
    }
    r["vertices"] = rows;
    rep.csv_notes.push_back("total_variation " + format_double(r["total_variation"].get<double>()));
    return rep;
}

// --- amenability ---------------------------------------------------------

Report cmd_amenability(const RunConfig& cfg, const AnyGraph& graph)
{
    DiagnoseOptions opt;
    opt.budget = cfg.budget;
    const std::string x =
        std::holds_alternative<SourcePtr>(graph) ? from_label(cfg, *std::get<SourcePtr>(graph)) : cfg.from.value_or("");
    const auto d = diagnose(graph, x, cfg.nmax, cfg.rmax, cfg.k, opt);
    Report rep;
    auto& r = rep.result;
    r["verdict"] = to_string(d.verdict);
    r["prerequisite_verified"] = d.prerequisite_verified;
    r["small_cycle_radius"] = optional_int(d.small_cycle_radius);
    r["evidence"] = {{"folner_to_zero", d.folner_to_zero},
                     {"rho_near_one", d.rho_near_one},
                     {"iota_positive", d.iota_positive},
                     {"rho_below_one", d.rho_below_one}};
    r["rho_sequence"] = d.rho_sequence;
    r["rho_estimate"] = estimate_json(d.rho_estimate);
    const auto& iota = d.iota_report;
    json bounds = json::array();
    for (const auto& w : iota.upper_bounds) {
        json b{{"description", w.description},
               {"size", w.set.size()},
               {"area", w.area},
               {"vol", w.vol},
               {"ratio", to_string(w.ratio())}};
        b["set"] = w.set;
        bounds.push_back(b);
    }
    json trend = json::array();
    rep.csv_header = {"radius", "area", "vol", "ratio"};
    for (const auto& p : iota.folner_trend) {
        trend.push_back({{"radius", p.radius}, {"area", p.area}, {"vol", p.vol}, {"ratio", p.ratio}});
        rep.csv_rows.push_back({std::to_string(p.radius), std::to_string(p.area), std::to_string(p.vol),
                                format_double(p.ratio)});
    }
    r["iota_report"] = {
        {"lower_bound_exact", iota.lower_bound_exact ? json(to_string(*iota.lower_bound_exact)) : json(nullptr)},
        {"scope", iota.scope},
        {"k", iota.k},
        {"subsets_visited", iota.subsets_visited},
        {"upper_bounds", bounds},
        {"folner_trend", trend}};
    r["notes"] = d.notes;
    rep.csv_notes.push_back("verdict " + to_string(d.verdict));
    rep.csv_notes.push_back("rho_estimate " + format_double(d.rho_estimate.value));
    for (const auto& n : d.notes) rep.csv_notes.push_back(n);
    return rep;
}

// --- check ---------------------------------------------------------------

struct CheckResult {
    std::string name;
    bool ok;
    std::string detail;
};

std::vector<CheckResult> run_checks(const Multigraph& g, int nmax)
{
    std::vector<CheckResult> out;
    const NbrwKernel kernel(g);
    const auto nv = static_cast<Vertex>(g.num_vertices());

    {
        const auto m = kernel.matrix<Rational>();
        bool rows = true, cols = true;
        for (const auto& s : m.row_sums()) rows &= s == 1;
        for (const auto& s : m.col_sums()) cols &= s == 1;
        out.push_back({"kernel_row_sums", rows, "every row of Q_E sums to 1"});
        out.push_back({"kernel_column_sums", cols, "counting measure is invariant"});
    }
    {
        bool ok = true;
        std::string detail = "n = 0.." + std::to_string(nmax);
        for (int n = 0; n <= nmax && ok; ++n) {
            const auto r = check_reversal_symmetry(kernel, n);
            if (!r.ok()) {
                ok = false;
                detail = "fails at n = " + std::to_string(n);
            }
        }
        out.push_back({"reversal_symmetry", ok, detail});
    }
    {
        bool conserve = true, cog = true;
        for (Vertex x = 0; x < nv; ++x) {
            const auto traj = nbrw_trajectory<Rational>(kernel, x, nmax);
            const auto table = cogrowth_table<Rational>(g, x, nmax, CogrowthMode::nbrw_weighted);
            for (int n = 0; n <= nmax; ++n) {
                conserve &= traj[n].total() == 1;
                cog &= table.table[n] == traj[n].values;
            }
        }
        out.push_back({"probability_conservation", conserve, "q^(n)(x, .) sums to 1 for all x"});
        out.push_back({"weighted_cogrowth_equals_nbrw", cog, "exact for all x and n <= " + std::to_string(nmax)});
    }
    {
        const auto p = srw_matrix<Rational>(g);
        bool ok = true;
        for (Vertex x = 0; x < nv; ++x)
            for (Vertex y = 0; y < nv; ++y) ok &= g.degree(x) * p.at(x, y) == g.degree(y) * p.at(y, x);
        out.push_back({"srw_reversible", ok, "deg(x) p(x,y) = deg(y) p(y,x)"});
    }
    {
        const auto st = analyze_structure(kernel);
        const bool cycle = g.regular_degree() == 2;
        out.push_back({"irreducible_unless_cycle", st.irreducible != cycle,
                       cycle ? "cycle graph: two essential classes expected" : "irreducible expected"});
        if (cycle) out.push_back({"cycle_has_two_essential_classes", st.num_essential() == 2, ""});
        if (g.min_degree() >= 3) {
            const bool bip = is_bipartite(g).bipartite;
            out.push_back({"period_two_iff_bipartite", (st.period == 2) == bip && st.period <= 2,
                           "period " + (st.period ? std::to_string(*st.period) : std::string("none"))});
        }
    }
    {
        const auto norm = qe_operator_norm(kernel);
        out.push_back({"operator_norm_one", std::abs(norm.value - 1.0) <= 1e-10, format_double(norm.value)});
    }
    const auto d = g.regular_degree();
    if (d && *d >= 3) {
        const Vertex y = nv > 1 ? 1 : 0;
        bool ok = true;
        for (Vertex to : {Vertex{0}, y}) ok &= functional_equation_check(g, 0, to, nmax).exact_zero();
        out.push_back({"functional_equation", ok, "x = y and x != y through degree " + std::to_string(nmax)});
    }
    return out;
}

Report cmd_check(const RunConfig& cfg, const AnyGraph& graph)
{
    const Multigraph& g = require_finite(graph, "check");
    const auto checks = run_checks(g, cfg.nmax);
    Report rep;
    json arr = json::array();
    bool all = true;
    rep.csv_header = {"check", "ok", "detail"};
    for (const auto& c : checks) {
        arr.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        rep.csv_rows.push_back({c.name, c.ok ? "true" : "false", c.detail});
        all &= c.ok;
    }
    rep.result["all_ok"] = all;
    rep.result["checks"] = arr;
    if (!all) rep.exit_code = 1;
    return rep;
}

} // namespace

std::string to_string(Command c)
{
    for (const auto& e : kCommands)
        if (e.c == c) return e.name;
    return "analyze";
}

Command parse_command(const std::string& text)
{
    for (const auto& e : kCommands)
        if (text == e.name) return e.c;
    throw BadParams("unknown command '" + text + "'");
}

std::string library_version() { return kVersion; }

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err)
{
    try {
        if (config.nmax < 0 || config.rmax < 0 || config.k < 1) throw BadParams("nmax, rmax >= 0 and k >= 1");
        if (config.trials > 0 && !config.seed) throw BadParams("--seed is required whenever --trials > 0");
        const AnyGraph graph = load_graph(config, in);
        Report rep;
        switch (config.command) {
        case Command::analyze: rep = cmd_analyze(graph); break;
        case Command::limits: rep = cmd_limits(config, graph); break;
        case Command::spectral: rep = cmd_spectral(config, graph); break;
        case Command::cogrowth: rep = cmd_cogrowth(config, graph); break;
        case Command::simulate: rep = cmd_simulate(config, graph); break;
        case Command::amenability: rep = cmd_amenability(config, graph); break;
        case Command::check: rep = cmd_check(config, graph); break;
        }
        if (config.output) {
            std::ofstream f(*config.output);
            if (!f) throw Error("cannot write '" + *config.output + "'");
            write_report(config, rep, f);
        } else {
            write_report(config, rep, out);
        }
        if (rep.exit_code == 1) err << "nbrw: invariant violation\n";
        return rep.exit_code;
    } catch (const BudgetExceeded& e) {
        err << "nbrw: budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const NoConvergence& e) {
        err << "nbrw: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "nbrw: " << e.what() << '\n';
        return 2;
    }
}

} // namespace nbrw
