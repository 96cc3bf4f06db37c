// pcover: build, verify and report on the extraspecial, Heisenberg and gain-graph covers.
//
// Exit codes: 0 all checks pass, 1 certificate failure, 2 usage or parameter error.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcover/convolution.hpp"
#include "pcover/covers.hpp"
#include "pcover/gain.hpp"
#include "pcover/report.hpp"

namespace {

using namespace pcover;

constexpr int exit_ok = 0;
constexpr int exit_certificate = 1;
constexpr int exit_usage = 2;

constexpr std::size_t girth_cap = 16;
constexpr std::size_t spectrum_vertex_limit = 1024;
constexpr std::size_t report_spectrum_limit = 250;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::uint32_t p = 3;
    std::optional<std::size_t> d;
    std::optional<std::size_t> dims;
    std::string sign = "plus";
    std::optional<std::uint32_t> twist;
    bool heisenberg = false;
    bool girth = false;
    std::string out_dir;
    std::string format = "edges";
};

std::vector<GroupSign> signs_of(const std::string& s) {
    if (s == "plus") return {GroupSign::plus};
    if (s == "minus") return {GroupSign::minus};
    if (s == "both") return {GroupSign::plus, GroupSign::minus};
    throw UsageError("--sign must be plus, minus or both");
}

/// Base dimension m of C_p^m from --d (m = 2d) or --dims.
std::size_t base_dims(const RunConfig& cfg) {
    if (cfg.d && cfg.dims) throw UsageError("give --d or --dims, not both");
    if (cfg.dims) {
        if (*cfg.dims == 0) throw UsageError("--dims must be at least 1");
        return *cfg.dims;
    }
    if (cfg.d) {
        if (*cfg.d == 0) throw UsageError("--d must be at least 1");
        return 2 * *cfg.d;
    }
    throw UsageError("--d or --dims is required");
}

std::size_t heisenberg_d(const RunConfig& cfg) {
    if (!cfg.d) throw UsageError("--heisenberg needs --d");
    if (cfg.dims) throw UsageError("--heisenberg takes --d, not --dims");
    return *cfg.d;
}

struct Target {
    std::string tag;
    json construction;
    CoveringMap cm;
    Prime p;
    std::size_t dims = 0;
    std::optional<GroupSign> sign; // unset for the Heisenberg cover
};

Target extraspecial_target(Prime p, std::size_t dims, GroupSign sign) {
    require_odd_prime(p);
    const std::size_t d = (dims + 1) / 2;
    Target t{"", json::object(), {}, p, dims, sign};
    t.cm = dims % 2 == 0 ? build_cover(p, d, sign) : induced_odd_cover(p, d, sign);
    t.tag = "ext_p" + std::to_string(p.value()) + "_dims" + std::to_string(dims) + "_" + to_string(sign);
    t.construction = {{"kind", dims % 2 == 0 ? "extraspecial" : "extraspecial_induced"},
                      {"p", p.value()},
                      {"d", d},
                      {"dims", dims},
                      {"sign", to_string(sign)}};
    return t;
}

Target heisenberg_target(std::size_t d) {
    Target t{"heis_d" + std::to_string(d), {{"kind", "heisenberg"}, {"p", 2}, {"d", d}, {"dims", d}}, heisenberg_cover(d),
             Prime(2), d, std::nullopt};
    return t;
}

std::vector<Target> targets(const RunConfig& cfg) {
    if (cfg.heisenberg) return {heisenberg_target(heisenberg_d(cfg))};
    const Prime p(cfg.p);
    require_odd_prime(p);
    const auto dims = base_dims(cfg);
    std::vector<Target> out;
    for (auto s : signs_of(cfg.sign)) out.push_back(extraspecial_target(p, dims, s));
    return out;
}

json edges_json(const Graph& g) {
    json a = json::array();
    for (auto [u, v] : g.edges()) a.push_back({u, v});
    return a;
}

json graph_json(const Target& t) {
    return {{"construction", t.construction},
            {"total", {{"n", t.cm.total.vertex_count()}, {"edges", edges_json(t.cm.total)}}},
            {"base", {{"n", t.cm.base.vertex_count()}, {"edges", edges_json(t.cm.base)}}},
            {"gamma", vertex_list(t.cm.gamma)}};
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << text;
}

std::string edge_text(const Graph& g) {
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

int cmd_build(const RunConfig& cfg) {
    if (cfg.format != "edges" && cfg.format != "json") throw UsageError("--format must be edges or json");
    const auto ts = targets(cfg);
    if (cfg.out_dir.empty()) {
        if (ts.size() != 1) throw UsageError("--sign both needs --out");
        if (cfg.format == "json") std::cout << graph_json(ts.front()).dump(2) << '\n';
        else write_edge_list(std::cout, ts.front().cm.total);
        return exit_ok;
    }
    // Render everything first, then write.
    std::vector<std::pair<std::filesystem::path, std::string>> files;
    const std::filesystem::path dir(cfg.out_dir);
    for (const auto& t : ts) {
        if (cfg.format == "json") {
            files.emplace_back(dir / (t.tag + ".json"), graph_json(t).dump(2) + "\n");
            continue;
        }
        std::ostringstream fibers;
        write_fiber_map(fibers, t.cm);
        files.emplace_back(dir / (t.tag + "_total.edges"), edge_text(t.cm.total));
        files.emplace_back(dir / (t.tag + "_base.edges"), edge_text(t.cm.base));
        files.emplace_back(dir / (t.tag + "_fibers.txt"), fibers.str());
    }
    std::filesystem::create_directories(dir);
    for (const auto& [path, text] : files) {
        write_file(path, text);
        std::cout << path.string() << '\n';
    }
    return exit_ok;
}

json cycle_witness(const std::optional<std::vector<VertexId>>& c) { return c ? vertex_list(*c) : json(nullptr); }

json verify_target(const Target& t, bool with_girth) {
    json r;
    json checks;
    const auto& total = t.cm.total;
    r["construction"] = t.construction;
    r["vertices"] = total.vertex_count();
    r["edges"] = total.edge_count();
    const auto reg = total.regular_degree();
    r["degree"] = reg ? json(*reg) : json(nullptr);

    const auto cover = verify_cover(t.cm);
    r["cover"] = to_json(cover);
    r["fold"] = cover.fold ? json(*cover.fold) : json(nullptr);
    const std::size_t expected_fold = t.p.value();
    checks["cover"] = cover.ok() && cover.fold == expected_fold;

    const auto four = find_4cycle(total);
    r["four_cycle_free"] = !four.has_value();
    r["four_cycle"] = {{"scan", "exhaustive"}, {"witness", cycle_witness(four)}};
    checks["four_cycle_free"] = !four.has_value();

    if (t.sign) {
        const auto p = t.p.value();
        const auto pc = find_cycle_of_length(total, p);
        const bool expected = *t.sign == GroupSign::plus;
        r["p_cycle_present"] = pc.has_value();
        r["p_cycle"] = {{"length", p}, {"scan", "exhaustive"}, {"expected", expected}, {"witness", cycle_witness(pc)}};
        checks["p_cycle"] = pc.has_value() == expected;

        const std::size_t d = (t.dims + 1) / 2;
        const auto cert = certify_connection_set(t.p, d, *t.sign);
        json table = json::array();
        for (const auto& row : cert.commutators.table) table.push_back(row);
        json pair = cert.commutators.commuting_pair
                        ? json({cert.commutators.commuting_pair->first, cert.commutators.commuting_pair->second})
                        : json(nullptr);
        r["connection_set"] = {{"rank", cert.rank},
                               {"full_rank", cert.full_rank},
                               {"pairwise_noncommuting", cert.commutators.passed},
                               {"commuting_pair", pair},
                               {"ordered_form", cert.ordered_form},
                               {"commutator_table", table}};
        checks["connection_set"] = cert.ok();

        const std::uint64_t order = *t.sign == GroupSign::plus ? p : std::uint64_t{p} * p;
        json orders = json::array();
        bool orders_ok = true;
        for (const auto& s : lifted_connection(t.p, d, *t.sign)) {
            const auto o = element_order(*t.sign, s);
            orders.push_back(o);
            orders_ok = orders_ok && o == order;
        }
        r["generator_orders"] = {{"expected", order}, {"orders", orders}};
        checks["generator_orders"] = orders_ok;
    }

    if (with_girth) {
        const auto g = girth(total, girth_cap);
        r["girth"] = {{"cap", girth_cap}, {"value", g ? json(*g) : json(nullptr)}};
    }

    if (total.vertex_count() <= report_spectrum_limit) {
        r["spectrum"] = to_json(graph_spectrum(total, "cover adjacency"))["clusters"];
    } else {
        r["spectrum"] = "skipped: more than " + std::to_string(report_spectrum_limit) + " vertices";
    }

    if (t.sign && t.cm.base.vertex_count() <= report_spectrum_limit) {
        const auto search = degree_bound_search(t.p, t.dims, std::nullopt, {*t.sign});
        r["degree_bound"] = to_json(search)["best"];
    }

    bool passed = true;
    for (const auto& [k, v] : checks.items()) passed = passed && v.get<bool>();
    r["checks"] = checks;
    r["passed"] = passed;
    return r;
}

int cmd_verify(const RunConfig& cfg) {
    const auto ts = targets(cfg);
    json reports = json::array();
    bool passed = true;
    for (const auto& t : ts) {
        auto r = verify_target(t, cfg.girth);
        passed = passed && r["passed"].get<bool>();
        reports.push_back(std::move(r));
    }
    std::cout << json({{"command", "verify"}, {"reports", reports}, {"passed", passed}}).dump(2) << '\n';
    return passed ? exit_ok : exit_certificate;
}

int cmd_bound(const RunConfig& cfg) {
    if (cfg.heisenberg) throw UsageError("bound works on C_p^m bases; drop --heisenberg");
    const Prime p(cfg.p);
    require_odd_prime(p);
    const auto dims = base_dims(cfg);
    if (cfg.twist && *cfg.twist >= p.value()) throw UsageError("--twist must lie in [0, p)");
    const auto search = degree_bound_search(p, dims, cfg.twist, signs_of(cfg.sign));
    std::cout << to_json(search, cfg.format == "json").dump(2) << '\n';
    return exit_ok;
}

int cmd_spectrum(const RunConfig& cfg) {
    json reports = json::array();
    if (cfg.heisenberg || !cfg.twist) {
        for (const auto& t : targets(cfg)) {
            if (t.cm.total.vertex_count() > spectrum_vertex_limit)
                throw UsageError("spectrum limited to " + std::to_string(spectrum_vertex_limit) + " vertices");
            reports.push_back({{"construction", t.construction}, {"spectrum", to_json(graph_spectrum(t.cm.total, "cover adjacency"))}});
        }
    } else {
        const Prime p(cfg.p);
        require_odd_prime(p);
        const auto dims = base_dims(cfg);
        if (*cfg.twist >= p.value()) throw UsageError("--twist must lie in [0, p)");
        checked_power(p.value(), dims, spectrum_vertex_limit);
        for (auto s : signs_of(cfg.sign)) {
            const auto gg = gain_graph_for_dims(p, dims, s);
            const auto spec = hermitian_eigenvalues(twisted_adjacency(gg, *cfg.twist),
                                                    std::string(to_string(s)) + " twist " + std::to_string(*cfg.twist));
            reports.push_back({{"construction", {{"p", p.value()}, {"dims", dims}, {"sign", to_string(s)}, {"twist", *cfg.twist}}},
                               {"spectrum", to_json(spec)}});
        }
    }
    std::cout << json({{"command", "spectrum"}, {"reports", reports}}).dump(2) << '\n';
    return exit_ok;
}

int cmd_gain(const RunConfig& cfg) {
    if (cfg.heisenberg) throw UsageError("gain works on C_p^m bases; drop --heisenberg");
    const Prime p(cfg.p);
    require_odd_prime(p);
    const auto dims = base_dims(cfg);
    checked_power(p.value(), dims, max_cover_vertices);
    const auto signs = signs_of(cfg.sign);
    if (cfg.format == "json") {
        json reports = json::array();
        for (auto s : signs) {
            const auto gg = gain_graph_for_dims(p, dims, s);
            json arcs = json::array();
            for (VertexId u = 0; u < gg.base.vertex_count(); ++u) {
                const auto nbrs = gg.base.neighbors(u);
                for (std::size_t k = 0; k < nbrs.size(); ++k) arcs.push_back({u, nbrs[k], gg.gains[u][k]});
            }
            reports.push_back({{"p", p.value()}, {"dims", dims}, {"sign", to_string(s)}, {"n", gg.base.vertex_count()},
                               {"antisymmetric", gg.is_antisymmetric()}, {"arcs", arcs}});
        }
        std::cout << json({{"command", "gain"}, {"reports", reports}}).dump(2) << '\n';
        return exit_ok;
    }
    if (signs.size() != 1) throw UsageError("text gain output takes a single --sign; use --format json for both");
    const auto gg = gain_graph_for_dims(p, dims, signs.front());
    std::size_t arcs = 0;
    for (VertexId u = 0; u < gg.base.vertex_count(); ++u) arcs += gg.base.degree(u);
    std::cout << gg.base.vertex_count() << ' ' << arcs << '\n';
    for (VertexId u = 0; u < gg.base.vertex_count(); ++u) {
        const auto nbrs = gg.base.neighbors(u);
        for (std::size_t k = 0; k < nbrs.size(); ++k) std::cout << u << ' ' << nbrs[k] << ' ' << gg.gains[u][k] << '\n';
    }
    return exit_ok;
}

int cmd_convolve_check(const RunConfig& cfg) {
    const std::size_t d = cfg.d.value_or(4);
    if (d == 0 || d > 8) throw UsageError("convolve-check takes 1 <= --d <= 8");
    using Fn = GroupFunction<ElementaryAbelianGroup, long long>;
    const ElementaryAbelianGroup grp(Prime(2), d);

    std::size_t pairs = 0;
    bool central_ok = true, full_sum_ok = true;
    auto check = [&](const Fn& f, const Fn& g) {
        const auto rhs = lift_L(twisted_convolve(f, g));
        const auto lf = lift_L(f), lg = lift_L(g);
        central_ok = central_ok && central_convolve(lf, lg) == rhs;
        auto doubled = rhs;
        for (auto& v : doubled.values) v *= 2;
        full_sum_ok = full_sum_ok && convolve(lf, lg) == doubled;
        ++pairs;
    };
    const bool exhaustive = d <= 3;
    if (exhaustive) {
        for (std::size_t i = 0; i < grp.order(); ++i)
            for (std::size_t j = 0; j < grp.order(); ++j) check(Fn::delta(grp, i), Fn::delta(grp, j));
    }
    std::mt19937_64 rng(20240611);
    for (int rep = 0; rep < 100; ++rep) {
        Fn f(grp), g(grp);
        for (auto& v : f.values) v = static_cast<long long>(rng() % 11) - 5;
        for (auto& v : g.values) v = static_cast<long long>(rng() % 11) - 5;
        check(f, g);
    }

    const auto spec = SpectrumReport::from_eigenvalues(symmetric_eigenvalues(twisted_adjacency_operator(d)), "A_beta");
    const double root = std::sqrt(static_cast<double>(d));
    const std::size_t half = std::size_t{1} << (d - 1);
    const bool spectrum_ok = spec.clusters.size() == 2 && std::abs(spec.clusters[0].value - root) < 1e-8 &&
                             std::abs(spec.clusters[1].value + root) < 1e-8 && spec.clusters[0].multiplicity == half &&
                             spec.clusters[1].multiplicity == half;

    const bool passed = central_ok && full_sum_ok && spectrum_ok;
    json out = {{"command", "convolve-check"},
                {"d", d},
                {"delta_bases", exhaustive ? "exhaustive" : "skipped"},
                {"pairs_checked", pairs},
                {"intertwining_central", central_ok},
                {"intertwining_full_sum_is_twice", full_sum_ok},
                {"twisted_operator_spectrum", to_json(spec)["clusters"]},
                {"spectrum_ok", spectrum_ok},
                {"passed", passed}};
    std::cout << out.dump(2) << '\n';
    return passed ? exit_ok : exit_certificate;
}

void add_shared_options(CLI::App* sub, RunConfig& cfg, bool sign_default_both) {
    sub->add_option("--p", cfg.p, "prime modulus (2..13)");
    sub->add_option("--d", cfg.d, "half dimension d (base C_p^{2d}) or Heisenberg dimension");
    sub->add_option("--dims", cfg.dims, "base dimension m of C_p^m; odd m uses the induced cover");
    if (sign_default_both) cfg.sign = "both";
    sub->add_option("--sign", cfg.sign, "plus, minus or both")->capture_default_str();
    sub->add_option("--twist", cfg.twist, "twist k in [0, p)");
    sub->add_flag("--heisenberg", cfg.heisenberg, "use the Heisenberg cover of Q_d");
    sub->add_flag("--girth", cfg.girth, "report girth (cap 16)");
    sub->add_option("--out", cfg.out_dir, "output directory");
    sub->add_option("--format", cfg.format, "edges or json")->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Covers of Cartesian products of cycles from extraspecial p-groups"};
    app.require_subcommand(1);

    RunConfig build_cfg, verify_cfg, bound_cfg, spectrum_cfg, gain_cfg, conv_cfg;
    auto* build = app.add_subcommand("build", "write total/base edge lists and the fiber map");
    add_shared_options(build, build_cfg, false);
    auto* verify = app.add_subcommand("verify", "certify covering, 4-cycle freeness and p-cycles");
    add_shared_options(verify, verify_cfg, true);
    auto* bound = app.add_subcommand("bound", "interlacing degree bounds over signs and twists");
    add_shared_options(bound, bound_cfg, true);
    auto* spectrum = app.add_subcommand("spectrum", "cover or twisted adjacency spectrum");
    add_shared_options(spectrum, spectrum_cfg, true);
    auto* gain = app.add_subcommand("gain", "gain graph arcs u v gain");
    add_shared_options(gain, gain_cfg, false);
    auto* conv = app.add_subcommand("convolve-check", "lift and twisted convolution identities");
    conv->add_option("--d", conv_cfg.d, "dimension of Z_2^d (default 4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*build) return cmd_build(build_cfg);
        if (*verify) return cmd_verify(verify_cfg);
        if (*bound) return cmd_bound(bound_cfg);
        if (*spectrum) return cmd_spectrum(spectrum_cfg);
        if (*gain) return cmd_gain(gain_cfg);
        if (*conv) return cmd_convolve_check(conv_cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_certificate;
    }
    return exit_usage;
}
