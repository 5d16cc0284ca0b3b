#include "evencycle/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>

#include "evencycle/bounds.hpp"
#include "evencycle/certificates.hpp"
#include "evencycle/hypercube.hpp"
#include "evencycle/wenger.hpp"

namespace evencycle {

namespace {

struct UsageError : std::runtime_error {
    UsageError(const std::string& field, const std::string& what) : std::runtime_error(field + ": " + what) {}
};

std::string shortest(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

std::string fixed9(double x) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(9);
    s << x;
    return s.str();
}

const char* flag(bool b) { return b ? "1" : "0"; }

using Config = std::vector<std::pair<std::string, std::string>>;

std::vector<std::string> header_lines(const std::string& command, const Config& config) {
    std::string line = "# command=" + command;
    for (const auto& [k, v] : config) line += " " + k + "=" + v;
    return {std::string("# ") + kToolName + " " + kToolVersion, line};
}

// Output destination: a file, or the fallback stream for "-".
class Sink {
  public:
    Sink(const std::string& field, const std::string& path, std::ostream& fallback) {
        if (path.empty() || path == "-") {
            stream_ = &fallback;
            return;
        }
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw UsageError(field, "cannot open '" + path + "' for writing");
        stream_ = file_.get();
    }
    std::ostream& operator*() { return *stream_; }

  private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

void write_headers(std::ostream& o, const std::vector<std::string>& headers) {
    for (const auto& h : headers) o << h << '\n';
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct PlotPoint {
    double x;
    double y;
};

void write_svg(std::ostream& o, const std::vector<std::string>& headers, const std::string& title,
               const std::vector<PlotPoint>& pts) {
    constexpr double kW = 640, kH = 400, kPad = 50;
    o << "<!--\n";
    write_headers(o, headers);
    o << "-->\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" viewBox=\"0 0 640 400\">\n";
    o << "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
    o << "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << title
      << "</text>\n";
    o << "<line x1=\"50\" y1=\"350\" x2=\"590\" y2=\"350\" stroke=\"black\"/>\n";
    o << "<line x1=\"50\" y1=\"50\" x2=\"50\" y2=\"350\" stroke=\"black\"/>\n";
    if (pts.empty()) {
        o << "</svg>\n";
        return;
    }
    auto [xmin_it, xmax_it] = std::minmax_element(pts.begin(), pts.end(), [](auto a, auto b) { return a.x < b.x; });
    auto [ymin_it, ymax_it] = std::minmax_element(pts.begin(), pts.end(), [](auto a, auto b) { return a.y < b.y; });
    const double x0 = xmin_it->x, x1 = xmax_it->x, y0 = ymin_it->y, y1 = ymax_it->y;
    auto sx = [&](double x) { return x1 > x0 ? kPad + (x - x0) / (x1 - x0) * (kW - 2 * kPad) : kW / 2; };
    auto sy = [&](double y) { return y1 > y0 ? kH - kPad - (y - y0) / (y1 - y0) * (kH - 2 * kPad) : kH / 2; };
    o << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        o << (i ? " " : "") << fixed9(sx(pts[i].x)) << ',' << fixed9(sy(pts[i].y));
    }
    o << "\"/>\n";
    o << "<text x=\"50\" y=\"368\" font-family=\"sans-serif\" font-size=\"11\">" << shortest(x0) << "</text>\n";
    o << "<text x=\"590\" y=\"368\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << shortest(x1)
      << "</text>\n";
    o << "<text x=\"46\" y=\"350\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fixed9(y0)
      << "</text>\n";
    o << "<text x=\"46\" y=\"54\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fixed9(y1)
      << "</text>\n";
    o << "</svg>\n";
}

// CSV with x,y columns, or an SVG line chart when the path ends in .svg.
void write_plot(const std::string& path, std::ostream& fallback, const std::vector<std::string>& headers,
                const std::string& title, const std::vector<PlotPoint>& pts) {
    if (path.empty()) return;
    Sink sink("--plot-out", path, fallback);
    if (ends_with(path, ".svg")) {
        write_svg(*sink, headers, title, pts);
        return;
    }
    write_headers(*sink, headers);
    *sink << "x,y\n";
    for (const auto& p : pts) *sink << shortest(p.x) << ',' << fixed9(p.y) << '\n';
}

unsigned workers_from_env() {
    const char* raw = std::getenv(kWorkersEnv);
    if (!raw || !*raw) return 1;
    const std::string s(raw);
    unsigned value = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || end != s.data() + s.size() || value == 0 || value > 256) {
        throw UsageError(kWorkersEnv, "expected an integer in [1, 256], got '" + s + "'");
    }
    return value;
}

const CLI::Validator kPrimePower(
    [](std::string& s) -> std::string {
        std::uint64_t q = 0;
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), q);
        if (ec != std::errc() || end != s.data() + s.size() || !prime_power_decomposition(q)) {
            return "value " + s + " is not a prime power";
        }
        return {};
    },
    "PRIME_POWER");

void check_wenger_size(std::uint64_t q, unsigned k) {
    std::uint64_t edges = 1;
    for (unsigned i = 0; i <= k; ++i) {
        edges *= q;
        if (edges > WengerGeometry::kMaxEdges) {
            throw UsageError("--q", "W_" + std::to_string(k) + "(" + std::to_string(q) +
                                        ") exceeds the edge budget of " + std::to_string(WengerGeometry::kMaxEdges));
        }
    }
}

WengerGeometry make_geometry(std::uint64_t q, unsigned k) {
    check_wenger_size(q, k);
    return WengerGeometry(FieldSpec::for_order(static_cast<std::uint32_t>(q)), k);
}

struct Options {
    std::string out = "-";
    std::string graph_out;
    std::string plot_out;
    std::string witness_out;
    std::uint64_t q = 0;
    unsigned k = 5;
    std::size_t trials = 20;
    std::uint64_t seed = 1;
    double keep = 0.5;
    std::uint64_t qmin = 4;
    std::uint64_t qmax = 64;
    std::string mode = "aux";
    std::string order = "random";
    std::uint64_t budget = 0;
    std::size_t min_found = 0;
    unsigned n = 0;
    unsigned r = 3;
    std::uint32_t v0 = 1;
    std::string tier = "fast";
};

struct Context {
    Options o;
    unsigned workers = 1;
    std::ostream& out;
    std::ostream& err;
};

int cmd_build_wenger(Context& c) {
    const auto& o = c.o;
    const WengerGeometry geom = make_geometry(o.q, o.k);
    const Config config{{"q", std::to_string(o.q)}, {"k", std::to_string(o.k)}};
    const auto headers = header_lines("build-wenger", config);

    const BigInt q_pow_k = boost::multiprecision::pow(BigInt(o.q), o.k);
    const BigInt points = geom.point_count();
    const BigInt edges = geom.edge_count();
    const bool counts = points == q_pow_k && BigInt(geom.line_count()) == q_pow_k &&
                        BigInt(geom.class_size()) * o.q == q_pow_k && edges == q_pow_k * o.q;
    // e = N^{(k+1)/k} exactly: e^k = N^{k+1}.
    const bool exponent = boost::multiprecision::pow(edges, o.k) == boost::multiprecision::pow(points, o.k + 1);

    Sink sink("--out", o.out, c.out);
    write_headers(*sink, headers);
    *sink << "k,q,p,e,modulus,points,lines,classes,class_size,edges,counts_ok,edge_exponent_ok\n";
    *sink << o.k << ',' << o.q << ',' << geom.field().p() << ',' << geom.field().e() << ",\""
          << geom.field().modulus_string() << "\"," << geom.point_count() << ',' << geom.line_count() << ',' << o.q
          << ',' << geom.class_size() << ',' << geom.edge_count() << ',' << flag(counts) << ',' << flag(exponent)
          << '\n';
    if (!o.graph_out.empty()) {
        Sink g("--graph-out", o.graph_out, c.out);
        auto extra = headers;
        for (const auto& h : geom.file_headers()) extra.push_back(h);
        write_graph(*g, geom.graph(), extra);
    }
    return counts && exponent ? kExitOk : kExitCheckFailed;
}

int cmd_verify_kqq(Context& c) {
    const auto& o = c.o;
    const WengerGeometry geom = make_geometry(o.q, o.k);
    const auto headers = header_lines("verify-kqq", {{"q", std::to_string(o.q)}, {"k", std::to_string(o.k)}});
    Sink sink("--out", o.out, c.out);
    write_headers(*sink, headers);
    *sink << "q,i,j,components,expected,intersecting_pairs,all_kqq,planes_match,summary\n";
    bool ok = true;
    for (std::uint32_t i = 0; i < o.q; ++i) {
        for (std::uint32_t j = i + 1; j < o.q; ++j) {
            const KqqReport rep = geom.verify_kqq_decomposition(FieldElem{i}, FieldElem{j});
            ok = ok && rep.ok();
            const std::string kqq = "K_{" + std::to_string(o.q) + "," + std::to_string(o.q) + "}";
            const std::string summary = std::to_string(rep.component_count) + " components, " +
                                        (rep.ok() ? "all " + kqq : "NOT all " + kqq);
            *sink << o.q << ',' << i << ',' << j << ',' << rep.component_count << ',' << rep.expected_components
                  << ',' << rep.intersecting_pairs << ',' << flag(rep.all_components_are_kqq) << ','
                  << flag(rep.components_match_planes) << ",\"" << summary << "\"\n";
        }
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_psi_identity(Context& c) {
    const auto& o = c.o;
    const WengerGeometry geom = make_geometry(o.q, 5);
    const auto headers = header_lines("psi-identity", {{"q", std::to_string(o.q)},
                                                       {"trials", std::to_string(o.trials)},
                                                       {"seed", std::to_string(o.seed)},
                                                       {"keep", shortest(o.keep)}});
    Sink sink("--out", o.out, c.out);
    write_headers(*sink, headers);
    *sink << "q,trial,seed,m,psi_degrees,psi_planes,lower_bound_num,lower_bound_den,identity,lower_bound_holds\n";
    bool ok = true;
    for (std::size_t t = 0; t < o.trials; ++t) {
        const std::uint64_t s = split_seed(o.seed, t);
        const EdgeMask h = random_edge_mask(geom.edge_count(), o.keep, s);
        const std::uint64_t pd = cherry_count_degrees(geom, h);
        const std::uint64_t pp = cherry_count_planes(geom, h);
        const Rational lb = convexity_lower_bound(BigInt(h.count()), o.q);
        const bool identity = pd == pp;
        const bool holds = lb <= Rational(pd);
        ok = ok && identity && holds;
        *sink << o.q << ',' << t << ',' << s << ',' << h.count() << ',' << pd << ',' << pp << ','
              << boost::multiprecision::numerator(lb) << ',' << boost::multiprecision::denominator(lb) << ','
              << flag(identity) << ',' << flag(holds) << '\n';
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_bound_table(Context& c) {
    const auto& o = c.o;
    if (o.qmax < o.qmin) throw UsageError("--qmax", "must be at least --qmin");
    const auto rows = bound_table(o.qmin, o.qmax);
    const auto headers =
        header_lines("bound-table", {{"qmin", std::to_string(o.qmin)}, {"qmax", std::to_string(o.qmax)}});
    Sink sink("--out", o.out, c.out);
    write_headers(*sink, headers);
    *sink << "q,bound,ratio,chain_tight\n";
    bool tight = true;
    std::vector<PlotPoint> pts;
    for (const auto& r : rows) {
        tight = tight && r.chain_tight;
        *sink << r.q << ',' << r.bound << ',' << decimal(r.ratio, 12) << ',' << flag(r.chain_tight) << '\n';
        pts.push_back({static_cast<double>(r.q), r.ratio.convert_to<double>()});
    }
    write_plot(o.plot_out, c.out, headers, "B(q) / q^6", pts);
    const std::uint64_t cross = ratio_crossover(rows);
    const bool decreasing = cross != 0 && ratio_strictly_decreasing_from(rows, cross);
    c.err << "crossover q=" << cross << " strictly_decreasing=" << flag(decreasing) << '\n';
    return tight && decreasing ? kExitOk : kExitCheckFailed;
}

int cmd_extract_c8(Context& c) {
    const auto& o = c.o;
    if (o.min_found > o.trials) throw UsageError("--min-found", "cannot exceed --trials");
    const WengerGeometry geom = make_geometry(o.q, 5);
    const auto headers = header_lines("extract-c8", {{"q", std::to_string(o.q)},
                                                     {"keep", shortest(o.keep)},
                                                     {"trials", std::to_string(o.trials)},
                                                     {"seed", std::to_string(o.seed)},
                                                     {"mode", o.mode},
                                                     {"budget", std::to_string(o.budget)},
                                                     {"min-found", std::to_string(o.min_found)}});
    const ExtractionMode mode = o.mode == "aux" ? ExtractionMode::AuxiliaryOnly : ExtractionMode::AuxiliaryThenGeneric;
    const SearchOptions generic{o.budget, c.workers};
    Sink sink("--out", o.out, c.out);
    std::unique_ptr<Sink> witnesses;
    if (!o.witness_out.empty()) {
        witnesses = std::make_unique<Sink>("--witness-out", o.witness_out, c.out);
        write_headers(**witnesses, headers);
    }
    write_headers(*sink, headers);
    *sink << "q,trial,seed,m,status,i,j,plane,witness_valid\n";
    std::size_t found = 0;
    bool all_valid = true;
    bool inconclusive = false;
    for (std::size_t t = 0; t < o.trials; ++t) {
        const std::uint64_t s = split_seed(o.seed, t);
        const EdgeMask h = random_edge_mask(geom.edge_count(), o.keep, s);
        const C8Extraction ex = extract_c8(geom, h, mode, generic);
        std::string valid;
        if (ex.witness) {
            ++found;
            const bool v = is_valid_cycle(geom.graph().subgraph(h), *ex.witness, 8);
            all_valid = all_valid && v;
            valid = flag(v);
            if (witnesses) {
                **witnesses << "# trial=" << t << " seed=" << s << '\n' << format_witness(geom, *ex.witness) << '\n';
            }
        }
        inconclusive = inconclusive || ex.status == ExtractionStatus::Inconclusive;
        *sink << o.q << ',' << t << ',' << s << ',' << h.count() << ',' << to_string(ex.status) << ',';
        if (ex.provenance) {
            *sink << ex.provenance->i.index << ',' << ex.provenance->j.index << ',' << ex.provenance->plane_index;
        } else {
            *sink << ",,";
        }
        *sink << ',' << valid << '\n';
    }
    c.err << "found " << found << "/" << o.trials << '\n';
    if (!all_valid || found < o.min_found) return kExitCheckFailed;
    return inconclusive ? kExitBudget : kExitOk;
}

int cmd_greedy(Context& c) {
    const auto& o = c.o;
    const WengerGeometry geom = make_geometry(o.q, 5);
    const auto headers = header_lines("greedy-c8free", {{"q", std::to_string(o.q)},
                                                        {"seed", std::to_string(o.seed)},
                                                        {"order", o.order},
                                                        {"budget", std::to_string(o.budget)}});
    const GreedyOrder order = o.order == "random" ? GreedyOrder::Random : GreedyOrder::ClassRoundRobin;
    const GreedyResult res = greedy_c8free_subgraph(geom, o.seed, order, o.budget);
    Sink sink("--out", o.out, c.out);
    write_headers(*sink, headers);
    *sink << certificate_csv_header() << '\n' << certificate_csv_row(res.report) << '\n';
    if (!o.graph_out.empty()) {
        Sink g("--graph-out", o.graph_out, c.out);
        auto extra = headers;
        for (const auto& h : geom.file_headers()) extra.push_back(h);
        write_graph(*g, geom.graph().subgraph(res.h), extra);
    }
    c.err << "edges=" << res.h.count() << " rejected_by_budget=" << res.rejected_by_budget
          << " verified_c8_free=" << flag(res.verified_c8_free) << '\n';
    return res.report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_exact_ex(Context& c) {
    const auto& o = c.o;
    const ExactHypercube ex = exact_ex_qn_c8(o.n);
    const auto headers = header_lines("exact-ex", {{"n", std::to_string(o.n)}});
    Sink sink("--out", o.out, c.out);
    write_headers(*sink, headers);
    *sink << "n,cube_edges,ex_c8,exhaustive,hitting_set,c8_count,ratio\n";
    *sink << ex.n << ',' << ex.edges << ',' << ex.ex_c8 << ','
          << (ex.exhaustive ? std::to_string(*ex.exhaustive) : std::string()) << ',' << ex.hitting_set << ','
          << ex.c8_count << ',' << decimal(Rational(ex.ex_c8, ex.edges), 9) << '\n';
    if (!o.graph_out.empty()) {
        Sink g("--graph-out", o.graph_out, c.out);
        write_graph(*g, build_hypercube(o.n).graph.subgraph(ex.witness), headers);
    }
    const bool agree = !ex.exhaustive || *ex.exhaustive == ex.hitting_set;
    return agree ? kExitOk : kExitCheckFailed;
}

void check_gm(const Options& o) {
    if (o.r % 2 == 0) throw UsageError("--r", "must be odd");
    if (o.r > o.n) throw UsageError("--r", "must not exceed --n");
    if (o.v0 == 0 || o.v0 >= (std::uint32_t{1} << o.r)) throw UsageError("--v0", "must be a nonzero vector of F_2^r");
}

int cmd_gm_sample(Context& c) {
    const auto& o = c.o;
    check_gm(o);
    const auto headers = header_lines("gm-sample", {{"n", std::to_string(o.n)},
                                                    {"r", std::to_string(o.r)},
                                                    {"seed", std::to_string(o.seed)},
                                                    {"v0", std::to_string(o.v0)}});
    const GmTrial t = gm_trial(o.n, o.r, 0, o.seed, o.v0);
    Sink sink("--out", o.out, c.out);
    write_headers(*sink, headers);
    *sink << gm_csv_header() << '\n' << gm_csv_row(o.n, o.r, t) << '\n';
    if (!o.graph_out.empty()) {
        const GmSample s = gm_sample(GmParams{o.n, o.r, o.seed, o.v0});
        Sink g("--graph-out", o.graph_out, c.out);
        auto extra = headers;
        extra.push_back("# gm n=" + std::to_string(o.n) + " r=" + std::to_string(o.r) +
                        " seed=" + std::to_string(o.seed));
        write_graph(*g, s.layer_subgraph.graph, extra);
    }
    return t.c6_free && t.c6_minus_free ? kExitOk : kExitCheckFailed;
}

int cmd_gm_density(Context& c) {
    const auto& o = c.o;
    check_gm(o);
    const auto headers = header_lines("gm-density", {{"n", std::to_string(o.n)},
                                                     {"r", std::to_string(o.r)},
                                                     {"trials", std::to_string(o.trials)},
                                                     {"seed", std::to_string(o.seed)}});
    const GmDensityStats stats = gm_density_stats(o.n, o.r, o.trials, o.seed);
    Sink sink("--out", o.out, c.out);
    write_headers(*sink, headers);
    *sink << gm_csv_header() << '\n';
    bool ok = true;
    std::vector<PlotPoint> pts;
    for (const auto& t : stats.per_trial) {
        ok = ok && t.c6_free && t.c6_minus_free;
        *sink << gm_csv_row(o.n, o.r, t) << '\n';
        pts.push_back({static_cast<double>(t.trial), t.density});
    }
    write_plot(o.plot_out, c.out, headers, "G_r density by trial", pts);
    c.err << "mean_density=" << fixed9(stats.mean_density) << " stdev=" << fixed9(stats.stdev) << '\n';
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_c10_probe(Context& c) {
    const auto& o = c.o;
    const auto headers = header_lines("c10-probe", {{"n", std::to_string(o.n)},
                                                    {"seed", std::to_string(o.seed)},
                                                    {"budget", std::to_string(o.budget)}});
    const C10Probe p = union_layers_c10_probe(o.n, o.seed, o.budget);
    Sink sink("--out", o.out, c.out);
    write_headers(*sink, headers);
    *sink << "kind,r,edges,host_edges,density,c10\n";
    for (const auto& l : p.layers) {
        *sink << "layer," << l.r << ',' << l.edges << ',' << l.layer_edges << ',' << fixed9(l.density) << ",\n";
    }
    *sink << "union,," << p.union_edges << ',' << p.cube_edges << ',' << fixed9(p.global_density) << ','
          << to_string(p.c10) << '\n';
    return p.c10 == SearchStatus::Inconclusive ? kExitBudget : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliHooks& hooks) {
    CLI::App app{"Even-cycle extremal experiments on Wenger graphs and hypercube layers", kToolName};
    app.set_config("--config", "", "INI/TOML config file; command-line flags take precedence");
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    Options o;
    auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", o.out, "CSV output path ('-' for stdout)"); };
    auto q_opt = [&](CLI::App* sub) {
        sub->add_option("--q", o.q, "field order (prime power)")->required()->check(kPrimePower);
    };
    auto seed_opt = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "top-level seed"); };

    auto* build = app.add_subcommand("build-wenger", "build W_k(q) and check its counts");
    q_opt(build);
    build->add_option("--k", o.k, "dimension")->check(CLI::Range(2u, 8u));
    build->add_option("--graph-out", o.graph_out, "graph file path");
    out_opt(build);

    auto* kqq = app.add_subcommand("verify-kqq", "check the K_{q,q} decomposition for every class pair");
    q_opt(kqq);
    kqq->add_option("--k", o.k, "dimension")->check(CLI::Range(2u, 8u));
    out_opt(kqq);

    auto* psi = app.add_subcommand("psi-identity", "cherry count identity on random subgraphs of W_5(q)");
    q_opt(psi);
    psi->add_option("--trials", o.trials, "number of subgraphs")->check(CLI::Range(1, 100000));
    seed_opt(psi);
    psi->add_option("--keep", o.keep, "edge keep probability")->check(CLI::Range(0.0, 1.0));
    out_opt(psi);

    auto* bounds = app.add_subcommand("bound-table", "exact upper bound B(q) for prime powers q");
    bounds->add_option("--qmin", o.qmin, "smallest q")->check(CLI::Range(2, 1 << 16));
    bounds->add_option("--qmax", o.qmax, "largest q")->check(CLI::Range(2, 1 << 16));
    bounds->add_option("--plot-out", o.plot_out, "plot data path (.csv or .svg)");
    out_opt(bounds);

    auto* extract = app.add_subcommand("extract-c8", "find C8 witnesses in random subgraphs of W_5(q)");
    q_opt(extract);
    extract->add_option("--keep", o.keep, "edge keep probability")->check(CLI::Range(0.0, 1.0));
    extract->add_option("--trials", o.trials, "number of subgraphs")->check(CLI::Range(1, 100000));
    seed_opt(extract);
    extract->add_option("--mode", o.mode, "aux (auxiliary C4 only) or generic (fallback search)")
        ->check(CLI::IsMember({"aux", "generic"}));
    extract->add_option("--budget", o.budget, "expansion cap for the generic search (0 = none)");
    extract->add_option("--min-found", o.min_found, "fail unless at least this many trials find a C8");
    extract->add_option("--witness-out", o.witness_out, "witness file path");
    out_opt(extract);

    auto* greedy = app.add_subcommand("greedy-c8free", "greedy C8-free subgraph of W_5(q) with certificate");
    q_opt(greedy);
    seed_opt(greedy);
    greedy->add_option("--order", o.order, "random or round-robin")->check(CLI::IsMember({"random", "round-robin"}));
    greedy->add_option("--budget", o.budget, "expansion cap per edge check (0 = none)");
    greedy->add_option("--graph-out", o.graph_out, "graph file path");
    out_opt(greedy);

    auto* exact = app.add_subcommand("exact-ex", "exact ex(Q_n, C8)");
    exact->add_option("--n", o.n, "cube dimension")->required()->check(CLI::IsMember({3u, 4u}));
    exact->add_option("--graph-out", o.graph_out, "extremal subgraph path");
    out_opt(exact);

    auto* gms = app.add_subcommand("gm-sample", "one sampled layer subgraph G_r of Q_n");
    gms->add_option("--n", o.n, "cube dimension")->required()->check(CLI::Range(1u, 20u));
    gms->add_option("--r", o.r, "odd layer index")->check(CLI::Range(1u, 20u));
    seed_opt(gms);
    gms->add_option("--v0", o.v0, "fixed vector v0 as a bitmask");
    gms->add_option("--graph-out", o.graph_out, "graph file path");
    out_opt(gms);

    auto* gmd = app.add_subcommand("gm-density", "density statistics of G_r over seeded trials");
    gmd->add_option("--n", o.n, "cube dimension")->required()->check(CLI::Range(1u, 20u));
    gmd->add_option("--r", o.r, "odd layer index")->check(CLI::Range(1u, 20u));
    gmd->add_option("--trials", o.trials, "number of samples")->check(CLI::Range(1, 100000));
    seed_opt(gmd);
    gmd->add_option("--plot-out", o.plot_out, "plot data path (.csv or .svg)");
    out_opt(gmd);

    auto* probe = app.add_subcommand("c10-probe", "union of sampled layers and a budgeted C10 search");
    probe->add_option("--n", o.n, "cube dimension")->required()->check(CLI::Range(2u, 8u));
    seed_opt(probe);
    probe->add_option("--budget", o.budget, "expansion cap (0 = none)");
    out_opt(probe);

    auto* accept = app.add_subcommand("accept", "run the acceptance suite");
    accept->add_option("--tier", o.tier, "fast, slow or all")->check(CLI::IsMember({"fast", "slow", "all"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Context ctx{o, workers_from_env(), out, err};
        if (*build) return cmd_build_wenger(ctx);
        if (*kqq) return cmd_verify_kqq(ctx);
        if (*psi) return cmd_psi_identity(ctx);
        if (*bounds) return cmd_bound_table(ctx);
        if (*extract) return cmd_extract_c8(ctx);
        if (*greedy) return cmd_greedy(ctx);
        if (*exact) return cmd_exact_ex(ctx);
        if (*gms) return cmd_gm_sample(ctx);
        if (*gmd) return cmd_gm_density(ctx);
        if (*probe) return cmd_c10_probe(ctx);
        if (*accept) {
            if (!hooks.accept) {
                err << "accept: the acceptance suite is not linked into this binary\n";
                return kExitUsage;
            }
            return hooks.accept(o.tier, out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace evencycle
