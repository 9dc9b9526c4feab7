#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "favard/csv.hpp"
#include "favard/estimators.hpp"
#include "favard/multiscale.hpp"
#include "favard/parallel.hpp"
#include "favard/svg.hpp"

namespace {

using favard::BoundarySet;
using favard::ExtendedGraphCurve;
using favard::Interval;
using favard::SquareSet;
using favard::Vec2;

// Flat key=value config file; command-line flags override file values.
class RunConfig {
  public:
    void load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open config file: " + path);
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            auto trim = [](std::string s) {
                const auto b = s.find_first_not_of(" \t\r");
                const auto e = s.find_last_not_of(" \t\r");
                return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
            };
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (!key.empty()) values_[key] = value;
        }
    }

    // CLI flag wins, then the file, then the built-in default.
    std::string resolve(const CLI::Option* opt, const std::string& cli_value,
                        const std::string& key, const std::string& fallback) {
        std::string out = fallback;
        if (auto it = values_.find(key); it != values_.end()) out = it->second;
        if (opt != nullptr && opt->count() > 0) out = cli_value;
        resolved_[key] = out;
        return out;
    }

    double resolve_real(const CLI::Option* opt, double cli_value, const std::string& key,
                        double fallback) {
        return std::stod(resolve(opt, favard::format_g17(cli_value), key,
                                 favard::format_g17(fallback)));
    }

    std::int64_t resolve_count(const CLI::Option* opt, double cli_value, const std::string& key,
                               double fallback) {
        return static_cast<std::int64_t>(
            std::llround(resolve_real(opt, cli_value, key, fallback)));
    }

    void note(const std::string& key, const std::string& value) { resolved_[key] = value; }

    void log(const std::string& command) const {
        std::cerr << "# resolved " << command;
        for (const auto& [k, v] : resolved_) std::cerr << ' ' << k << '=' << v;
        std::cerr << '\n';
    }

  private:
    std::map<std::string, std::string> values_;
    std::map<std::string, std::string> resolved_;
};

// Splits "a=1,b=[2,3]" at top-level commas.
std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

Interval parse_interval(std::string s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
        throw std::invalid_argument("expected an interval like [-1,1], got: " + s);
    }
    s = s.substr(1, s.size() - 2);
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("interval needs two endpoints");
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

std::map<std::string, std::string> parse_kv(const std::string& s) {
    std::map<std::string, std::string> kv;
    for (const std::string& part : split_top_level(s)) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected key=value in: " + part);
        kv[part.substr(0, eq)] = part.substr(eq + 1);
    }
    return kv;
}

// "parabola:c=0.5,I=[-0.9,0.9]" or "circle-arc:R=2,I=[-1,1]".
ExtendedGraphCurve parse_curve(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("curve spec needs kind:params, got: " + spec);
    }
    const std::string kind = spec.substr(0, colon);
    const auto kv = parse_kv(spec.substr(colon + 1));
    const auto need = [&](const std::string& key) {
        const auto it = kv.find(key);
        if (it == kv.end()) throw std::invalid_argument("curve spec missing " + key);
        return it->second;
    };
    if (kind == "parabola") {
        return favard::extend_curve(
            favard::make_parabola(std::stod(need("c")), parse_interval(need("I"))));
    }
    if (kind == "circle-arc") {
        return favard::extend_curve(
            favard::make_circle_arc(std::stod(need("R")), parse_interval(need("I"))));
    }
    throw std::invalid_argument("unknown curve kind: " + kind + " (use parabola | circle-arc)");
}

// "cantor:3", "ifs:n=2,base=4,digits=0|3", or "file:squares.csv".
SquareSet parse_set(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("set spec needs kind:params, got: " + spec);
    }
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    if (kind == "cantor") return favard::cantor_generation(std::stoi(rest));
    if (kind == "ifs") {
        const auto kv = parse_kv(rest);
        std::vector<int> digits;
        std::stringstream ss(kv.at("digits"));
        std::string d;
        while (std::getline(ss, d, '|')) digits.push_back(std::stoi(d));
        return favard::corner_ifs_generation(std::stoi(kv.at("n")), digits,
                                             std::stoi(kv.at("base")));
    }
    if (kind == "file") {
        const favard::CsvTable table = favard::read_csv(rest);
        const std::size_t ci = table.column("i");
        const std::size_t cj = table.column("j");
        const std::size_t cn = table.column("n");
        if (table.rows.empty()) return SquareSet(0, 4, {});
        const int n = static_cast<int>(table.rows.front()[cn]);
        std::vector<std::pair<std::int64_t, std::int64_t>> squares;
        squares.reserve(table.rows.size());
        for (const auto& row : table.rows) {
            squares.emplace_back(static_cast<std::int64_t>(row[ci]),
                                 static_cast<std::int64_t>(row[cj]));
        }
        return SquareSet(n, 4, std::move(squares));
    }
    throw std::invalid_argument("unknown set kind: " + kind + " (use cantor | ifs | file)");
}

Vec2 parse_point(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("point needs x,y, got: " + s);
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

favard::WeightedPointCloud read_cloud(const std::string& path) {
    const favard::CsvTable table = favard::read_csv(path);
    const std::size_t cx = table.column("x");
    const std::size_t cy = table.column("y");
    std::optional<std::size_t> cw;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (table.header[i] == "w") cw = i;
    }
    favard::WeightedPointCloud cloud;
    cloud.points.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        cloud.points.push_back({row[cx], row[cy], cw ? row[*cw] : 1.0});
    }
    return cloud;
}

std::vector<favard::PlotSeries> reference_series(
    const std::vector<std::pair<double, double>>& data) {
    std::vector<favard::PlotSeries> out;
    if (data.empty()) return out;
    // Shapes normalized to match the first data point; constants are unknown.
    const double n0 = data.front().first;
    const double v0 = data.front().second;
    struct Shape {
        const char* label;
        double (*f)(double);
        const char* color;
    };
    const Shape shapes[] = {
        {"n^-1/6 (upper-bound shape)", [](double n) { return std::pow(n, -1.0 / 6.0); },
         "#777777"},
        {"n^-1 log n (lower-bound shape)", [](double n) { return std::log(n) / n; }, "#2ca02c"},
        {"n^-1 (lower-bound shape)", [](double n) { return 1.0 / n; }, "#d62728"},
        {"(log* n)^-1/100 (upper-bound shape)",
         [](double n) { return std::pow(static_cast<double>(favard::log_star(n)), -0.01); },
         "#9467bd"},
    };
    for (const Shape& shape : shapes) {
        favard::PlotSeries series;
        series.label = shape.label;
        series.color = shape.color;
        series.dashed = true;
        double base = 0.0;
        for (const auto& [n, v] : data) {
            (void)v;
            if (n < 2.0) continue;
            if (base == 0.0) base = shape.f(n0 >= 2.0 ? n0 : n);
            series.points.push_back({n, v0 * shape.f(n) / base});
        }
        if (!series.points.empty()) out.push_back(std::move(series));
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Favard length and Favard curve length laboratory"};
    app.require_subcommand(1);

    std::string config_path, curve_spec, set_spec, out_path, in_path, json_path, plot_path;
    std::string e_point, masses_path, cloud_path, digits = "0,3";
    double quad_tol = 1e-4, samples = 1e6, seed = 0, alpha = 0.0, sector_r = 0.0, sector_m = 0.0;
    double eps = 0.0, r_minus = 0.0, r_plus = 0.0, rc_r = 0.0, rc_m = 0.0;
    double n_min = -1e300, n_max = 1e300;
    int gen_n = 0, max_refine = 14, t_grid = 512, refine_depth = 3, threads = 0, base = 4;
    bool use_boundary = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "flat key=value config file; flags override it");
        cmd->add_option("--threads", threads, "worker pool size (default: FAVARD_LAB_THREADS)");
    };

    CLI::App* gen = app.add_subcommand("gen-cantor", "write a Cantor generation as CSV (n,i,j)");
    gen->add_option("--n", gen_n, "generation index")->required();
    gen->add_option("--digits", digits, "comma-separated digit set (default 0,3)");
    gen->add_option("--base", base, "subdivision base (default 4)");
    gen->add_option("--out", out_path, "output CSV path")->required();
    add_common(gen);

    CLI::App* fav = app.add_subcommand("favard", "Favard length of a square set");
    fav->add_option("--set", set_spec, "cantor:n | ifs:... | file:path")->required();
    fav->add_option("--quad-tol", quad_tol, "quadrature relative tolerance");
    fav->add_option("--max-refine", max_refine, "max panel doublings");
    fav->add_flag("--boundary", use_boundary, "project the boundary segments instead");
    fav->add_option("--out", out_path, "output CSV path (n,value,tol)");
    add_common(fav);

    CLI::App* favc = app.add_subcommand("favc", "Favard curve length of a square set");
    favc->add_option("--curve", curve_spec, "parabola:c=..,I=[..] | circle-arc:R=..,I=[..]")
        ->required();
    favc->add_option("--set", set_spec, "cantor:n | ifs:... | file:path")->required();
    favc->add_option("--quad-tol", quad_tol, "quadrature relative tolerance");
    favc->add_option("--max-refine", max_refine, "max panel doublings");
    favc->add_flag("--boundary", use_boundary, "project the boundary segments instead");
    favc->add_option("--out", out_path, "output CSV path (n,value,tol)");
    add_common(favc);

    CLI::App* buffon = app.add_subcommand("buffon", "Buffon curve-drop Monte Carlo");
    buffon->add_option("--curve", curve_spec, "curve spec")->required();
    buffon->add_option("--set", set_spec, "set spec")->required();
    buffon->add_option("--samples", samples, "sample count (accepts 1e7)");
    buffon->add_option("--seed", seed, "RNG seed");
    buffon->add_option("--t-grid", t_grid, "coarse t-grid nodes");
    buffon->add_option("--refine-depth", refine_depth, "bisection refinement passes");
    buffon->add_option("--out", out_path, "output CSV path (n,value,std_error)");
    add_common(buffon);

    CLI::App* decay = app.add_subcommand("decay", "fit a power-law decay to n,value rows");
    decay->add_option("--in", in_path, "input CSV with columns n,value")->required();
    decay->add_option("--n-min", n_min, "ignore rows with n below this");
    decay->add_option("--n-max", n_max, "ignore rows with n above this");
    decay->add_option("--json", json_path, "write the DecayFit as JSON here");
    decay->add_option("--plot", plot_path, "write a log-log SVG with reference overlays");
    add_common(decay);

    CLI::App* sector = app.add_subcommand("sector-check", "verify the double-sector lemmas");
    sector->add_option("--curve", curve_spec, "curve spec")->required();
    sector->add_option("--e", e_point, "sector center x,y")->required();
    sector->add_option("--alpha", alpha, "translation parameter")->required();
    sector->add_option("--r", sector_r, "sector radius")->required();
    sector->add_option("--M", sector_m, "sector Lipschitz parameter")->required();
    sector->add_option("--samples", samples, "samples per inclusion");
    sector->add_option("--seed", seed, "RNG seed");
    sector->add_option("--out", out_path, "JSON-lines report path (default stdout)");
    add_common(sector);

    CLI::App* ph = app.add_subcommand("pigeonhole", "sliding pigeonhole window selection");
    ph->add_option("--masses", masses_path, "CSV with a 'mass' column, rows = E_0..E_N")
        ->required();
    ph->add_option("--eps", eps, "window fraction in [1/N, 1/2]")->required();
    ph->add_option("--out", out_path, "JSON output path (default stdout)");
    add_common(ph);

    CLI::App* content = app.add_subcommand("content", "restricted Hausdorff content cover");
    content->add_option("--set", set_spec, "set spec")->required();
    content->add_flag("--boundary", use_boundary, "cover the boundary segments instead");
    content->add_option("--rminus", r_minus, "lower radius bound")->required();
    content->add_option("--rplus", r_plus, "upper radius bound")->required();
    content->add_option("--out", out_path, "ball CSV path (cx,cy,radius)");
    add_common(content);

    CLI::App* rc = app.add_subcommand("rect-const", "rectifiability constant lower bound");
    rc->add_option("--cloud", cloud_path, "CSV with columns x,y[,w]")->required();
    rc->add_option("--eps", eps, "vertical tolerance")->required();
    rc->add_option("--r", rc_r, "minimum interval length")->required();
    rc->add_option("--M", rc_m, "Lipschitz bound")->required();
    rc->add_option("--out", out_path, "JSON output path (default stdout)");
    add_common(rc);

    CLI::App* plot = app.add_subcommand("plot", "log-log plot of n,value rows with overlays");
    plot->add_option("--in", in_path, "input CSV with columns n,value")->required();
    plot->add_option("--out", plot_path, "output SVG path")->required();
    add_common(plot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    RunConfig cfg;
    if (!config_path.empty()) cfg.load(config_path);

    const auto write_rows = [&](const std::string& path, const std::vector<std::string>& header,
                                const std::vector<std::vector<double>>& rows) {
        if (path.empty()) {
            for (std::size_t i = 0; i < header.size(); ++i) {
                std::cout << header[i] << (i + 1 < header.size() ? "," : "\n");
            }
            for (const auto& row : rows) {
                for (std::size_t i = 0; i < row.size(); ++i) {
                    std::cout << favard::format_g17(row[i]) << (i + 1 < row.size() ? "," : "\n");
                }
            }
        } else {
            favard::write_csv(path, header, rows);
        }
    };
    const auto write_json = [&](const std::string& path, const nlohmann::json& j) {
        if (path.empty()) {
            std::cout << j.dump() << '\n';
        } else {
            std::ofstream out(path);
            if (!out) throw std::invalid_argument("cannot write " + path);
            out << j.dump() << '\n';
        }
    };

    if (*gen) {
        const int n = static_cast<int>(cfg.resolve_count(gen->get_option("--n"), gen_n, "n", gen_n));
        const std::string digit_str =
            cfg.resolve(gen->get_option("--digits"), digits, "digits", digits);
        const int b =
            static_cast<int>(cfg.resolve_count(gen->get_option("--base"), base, "base", base));
        cfg.note("out", out_path);
        cfg.log("gen-cantor");
        std::vector<int> digit_set;
        std::stringstream ss(digit_str);
        std::string d;
        while (std::getline(ss, d, ',')) digit_set.push_back(std::stoi(d));
        const SquareSet s = favard::corner_ifs_generation(n, digit_set, b);
        std::vector<std::vector<double>> rows;
        rows.reserve(s.count());
        for (const auto& [i, j] : s.squares()) {
            rows.push_back({static_cast<double>(n), static_cast<double>(i),
                            static_cast<double>(j)});
        }
        write_rows(out_path, {"n", "i", "j"}, rows);
        return 0;
    }

    if (*fav || *favc) {
        CLI::App* cmd = *fav ? fav : favc;
        favard::QuadratureSpec quad;
        quad.rel_tol = cfg.resolve_real(cmd->get_option("--quad-tol"), quad_tol, "quad-tol", 1e-4);
        quad.max_refinements = static_cast<int>(
            cfg.resolve_count(cmd->get_option("--max-refine"), max_refine, "max-refine", 14));
        quad.workers = static_cast<int>(
            cfg.resolve_count(cmd->get_option("--threads"), threads, "threads", 0));
        cfg.note("set", set_spec);
        if (*favc) cfg.note("curve", curve_spec);
        cfg.note("boundary", use_boundary ? "1" : "0");
        cfg.note("out", out_path);
        cfg.log(*fav ? "favard" : "favc");
        const SquareSet s = parse_set(set_spec);
        favard::QuadratureResult result;
        if (*fav) {
            result = use_boundary ? favard_length(favard::boundary(s), quad)
                                  : favard_length(s, quad);
        } else {
            const ExtendedGraphCurve curve = parse_curve(curve_spec);
            result = use_boundary ? favard_curve_length(curve, favard::boundary(s), quad)
                                  : favard_curve_length(curve, s, quad);
        }
        write_rows(out_path, {"n", "value", "tol"},
                   {{static_cast<double>(s.generation()), result.value, result.achieved_rel}});
        if (!result.converged) {
            std::cerr << "warning: quadrature did not reach rel_tol (achieved "
                      << favard::format_g17(result.achieved_rel) << ")\n";
            return 3;
        }
        return 0;
    }

    if (*buffon) {
        favard::McSpec mc;
        mc.samples = cfg.resolve_count(buffon->get_option("--samples"), samples, "samples", 1e6);
        mc.seed = static_cast<std::uint64_t>(
            cfg.resolve_count(buffon->get_option("--seed"), seed, "seed", 0));
        mc.t_grid = static_cast<int>(
            cfg.resolve_count(buffon->get_option("--t-grid"), t_grid, "t-grid", 512));
        mc.refine_depth = static_cast<int>(cfg.resolve_count(buffon->get_option("--refine-depth"),
                                                             refine_depth, "refine-depth", 3));
        mc.workers = static_cast<int>(
            cfg.resolve_count(buffon->get_option("--threads"), threads, "threads", 0));
        cfg.note("curve", curve_spec);
        cfg.note("set", set_spec);
        cfg.note("out", out_path);
        cfg.log("buffon");
        const ExtendedGraphCurve curve = parse_curve(curve_spec);
        const SquareSet s = parse_set(set_spec);
        const auto [alpha_range, beta_range] = favard::difference_bbox(curve, s);
        favard::BuffonEstimate est;
        bool product = true;
        favard::ProductMembership member;
        try {
            member = favard::product_membership(s);
        } catch (const std::invalid_argument&) {
            product = false;
        }
        if (product) {
            est = favard::buffon_curve_mc(curve, member, mc, alpha_range, beta_range);
        } else {
            est = favard::buffon_curve_mc(
                curve, [&s](double x, double y) { return s.contains_point(x, y); }, mc,
                alpha_range, beta_range);
        }
        write_rows(out_path, {"n", "value", "std_error"},
                   {{static_cast<double>(s.generation()), est.estimate, est.std_error}});
        return 0;
    }

    if (*decay) {
        cfg.note("in", in_path);
        cfg.note("json", json_path);
        cfg.note("plot", plot_path);
        cfg.log("decay");
        const favard::CsvTable table = favard::read_csv(in_path);
        const std::size_t cn = table.column("n");
        const std::size_t cv = table.column("value");
        std::vector<std::pair<double, double>> data;
        for (const auto& row : table.rows) {
            if (row[cn] < n_min || row[cn] > n_max) continue;
            data.push_back({row[cn], row[cv]});
        }
        const favard::DecayFit fit = favard::fit_decay(data);
        write_json(json_path, nlohmann::json{{"exponent", fit.exponent},
                                             {"log_intercept", fit.log_intercept},
                                             {"residual", fit.residual}});
        if (!plot_path.empty()) {
            std::vector<favard::PlotSeries> series;
            favard::PlotSeries main;
            main.label = "data";
            main.points = data;
            series.push_back(main);
            for (auto& ref : reference_series(data)) series.push_back(std::move(ref));
            favard::write_loglog_svg(plot_path,
                                     "decay fit: p = " + favard::format_g17(fit.exponent), series);
        }
        return 0;
    }

    if (*sector) {
        const std::int64_t n_samples =
            cfg.resolve_count(sector->get_option("--samples"), samples, "samples", 1e4);
        const std::uint64_t rng_seed = static_cast<std::uint64_t>(
            cfg.resolve_count(sector->get_option("--seed"), seed, "seed", 0));
        cfg.note("curve", curve_spec);
        cfg.note("e", e_point);
        cfg.note("alpha", favard::format_g17(alpha));
        cfg.note("r", favard::format_g17(sector_r));
        cfg.note("M", favard::format_g17(sector_m));
        cfg.note("out", out_path);
        cfg.log("sector-check");
        const ExtendedGraphCurve curve = parse_curve(curve_spec);
        favard::SectorSpec spec;
        spec.curve = &curve;
        spec.e = parse_point(e_point);
        spec.alpha = alpha;
        spec.r = sector_r;
        spec.M = sector_m;
        const auto comp = favard::verify_sector_comparability(spec, n_samples, rng_seed);
        const auto strip = favard::verify_strip_containment(spec, n_samples, rng_seed + 1);
        std::ostringstream lines;
        lines << nlohmann::json{{"check", "comparability"},
                                {"checked_inner", comp.checked_inner},
                                {"inner_violations", comp.inner_violations},
                                {"checked_outer", comp.checked_outer},
                                {"outer_violations", comp.outer_violations},
                                {"c1", comp.c1},
                                {"max_vertical_slice", comp.max_vertical_slice},
                                {"vertical_slice_bound", comp.vertical_slice_bound},
                                {"slice_bound_applicable", comp.slice_bound_applicable}}
                     .dump()
              << '\n';
        lines << nlohmann::json{{"check", "strip"},
                                {"checked", strip.checked},
                                {"violations", strip.violations},
                                {"strip_lo", strip.strip.lo},
                                {"strip_hi", strip.strip.hi}}
                     .dump()
              << '\n';
        if (out_path.empty()) {
            std::cout << lines.str();
        } else {
            std::ofstream out(out_path);
            if (!out) throw std::invalid_argument("cannot write " + out_path);
            out << lines.str();
        }
        return comp.inner_violations + comp.outer_violations + strip.violations == 0 ? 0 : 1;
    }

    if (*ph) {
        cfg.note("masses", masses_path);
        cfg.note("eps", favard::format_g17(eps));
        cfg.log("pigeonhole");
        const favard::CsvTable table = favard::read_csv(masses_path);
        const std::size_t cm = table.column("mass");
        std::vector<double> masses;
        masses.reserve(table.rows.size());
        for (const auto& row : table.rows) masses.push_back(row[cm]);
        const auto pick = favard::sliding_pigeonhole(masses, eps);
        write_json(out_path,
                   nlohmann::json{{"n", pick.n}, {"m", pick.m}, {"deficiency", pick.deficiency}});
        return 0;
    }

    if (*content) {
        cfg.note("set", set_spec);
        cfg.note("boundary", use_boundary ? "1" : "0");
        cfg.note("rminus", favard::format_g17(r_minus));
        cfg.note("rplus", favard::format_g17(r_plus));
        cfg.note("out", out_path);
        cfg.log("content");
        const SquareSet s = parse_set(set_spec);
        const favard::CoverResult cover =
            use_boundary ? hausdorff_content_cover(favard::boundary(s), r_minus, r_plus)
                         : hausdorff_content_cover(s, r_minus, r_plus);
        std::cout << nlohmann::json{{"content_upper", cover.content_upper},
                                    {"balls", cover.balls.size()}}
                         .dump()
                  << '\n';
        if (!out_path.empty()) {
            std::vector<std::vector<double>> rows;
            rows.reserve(cover.balls.size());
            for (const auto& ball : cover.balls) {
                rows.push_back({ball.center.x, ball.center.y, ball.radius});
            }
            favard::write_csv(out_path, {"cx", "cy", "radius"}, rows);
        }
        return 0;
    }

    if (*rc) {
        cfg.note("cloud", cloud_path);
        cfg.note("eps", favard::format_g17(eps));
        cfg.note("r", favard::format_g17(rc_r));
        cfg.note("M", favard::format_g17(rc_m));
        cfg.log("rect-const");
        const auto cloud = read_cloud(cloud_path);
        const double value = favard::rectifiability_constant_lower(cloud, eps, rc_r, rc_m);
        write_json(out_path, nlohmann::json{{"lower_bound", value}});
        return 0;
    }

    if (*plot) {
        cfg.note("in", in_path);
        cfg.note("out", plot_path);
        cfg.log("plot");
        const favard::CsvTable table = favard::read_csv(in_path);
        const std::size_t cn = table.column("n");
        const std::size_t cv = table.column("value");
        std::vector<std::pair<double, double>> data;
        for (const auto& row : table.rows) data.push_back({row[cn], row[cv]});
        std::vector<favard::PlotSeries> series;
        favard::PlotSeries main;
        main.label = "data";
        main.points = data;
        series.push_back(main);
        for (auto& ref : reference_series(data)) series.push_back(std::move(ref));
        favard::write_loglog_svg(plot_path, "Favard decay", series);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
