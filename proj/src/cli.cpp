#include "isoperim/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "isoperim/counterex.hpp"
#include "isoperim/errors.hpp"
#include "isoperim/functional.hpp"
#include "isoperim/geometry.hpp"
#include "isoperim/orthant.hpp"
#include "isoperim/rearrange.hpp"
#include "isoperim/regions.hpp"
#include "isoperim/spectral.hpp"
#include "isoperim/verify.hpp"

namespace isoperim::cli {

namespace {

using nlohmann::json;

struct usage_error {
    std::string message;
};

// Shared flags; every subcommand sees them through CLI11 fallthrough.
struct Common {
    std::string out_path;
    std::string format = "json";
    int grid = 0;
    double tol = 0.0;
    bool tol_set = false;
    unsigned long long seed = 20260814ull;
};

// What a handler produced.  text_report (if any) is the default rendering;
// csv (if any) replaces the generic flattening of doc for --format csv.
struct Emitted {
    json doc;
    std::string text_report;
    std::string csv;
    int exit_code = 0;
};

// Deterministic xorshift generator, identical across platforms.
struct Rng {
    unsigned long long state;

    explicit Rng(unsigned long long seed) : state(seed ? seed : 0x9e3779b9ull) {}

    unsigned long long next()
    {
        unsigned long long x = state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        state = x;
        return x;
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

std::string num17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_cell(const json& v)
{
    if (v.is_null())
        return "";
    if (v.is_boolean())
        return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    if (v.is_number_float())
        return num17(v.get<double>());
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array()) {
        std::string cell;
        for (const auto& e : v) {
            if (!cell.empty())
                cell += ';';
            cell += csv_cell(e);
        }
        return cell;
    }
    return "";
}

void flatten(const json& obj, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& cols)
{
    for (const auto& [key, value] : obj.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object())
            flatten(value, name, cols);
        else
            cols.emplace_back(name, csv_cell(value));
    }
}

// One header row and one data row covering inputs, results, tolerances and
// the status, with nested objects dot-qualified.
std::string doc_to_csv(const json& doc)
{
    std::vector<std::pair<std::string, std::string>> cols;
    for (const char* section : {"inputs", "results", "tolerances"})
        if (doc.contains(section))
            flatten(doc.at(section), "", cols);
    cols.emplace_back("status", doc.value("status", "ok"));
    std::string header, row;
    for (const auto& [name, cell] : cols) {
        if (!header.empty()) {
            header += ',';
            row += ',';
        }
        header += name;
        row += cell;
    }
    return header + "\n" + row + "\n";
}

json base_doc()
{
    json doc;
    doc["inputs"] = json::object();
    doc["results"] = json::object();
    doc["tolerances"] = json::object();
    doc["status"] = "ok";
    return doc;
}

// The random star-shaped profile used by the demonstration subcommands:
// a positive base radius plus three low harmonics.
geometry::StarSet random_star_set(Rng& rng, int dim, double alpha, int nodes)
{
    const double base = rng.uniform(0.5, 2.0);
    const double c1 = rng.uniform(-0.25, 0.25) * base;
    const double c2 = rng.uniform(-0.15, 0.15) * base;
    const double c3 = rng.uniform(-0.1, 0.1) * base;
    return geometry::make_star_set(dim, alpha, nodes, [=](double th) {
        return base + c1 * std::sin(th) + c2 * std::cos(2.0 * th) +
               c3 * std::sin(3.0 * th);
    });
}

// --- single-shot subcommands -------------------------------------------------

Emitted do_classify(double k, double l, int dim, double alpha)
{
    const auto v = regions::classify({k, l, dim, alpha});
    Emitted e;
    e.doc = base_doc();
    e.doc["inputs"] = {{"k", k}, {"l", l}, {"N", dim}, {"alpha", alpha}};
    e.doc["results"] = {
        {"label", regions::label_name(v.label)},
        {"sufficient_case", regions::case_name(v.sufficient_case)},
        {"constant_positive", v.constant_positive},
        {"unique_halfball", v.unique_halfball},
        {"on_positivity_boundary", v.on_positivity_boundary},
        {"thresholds",
         {{"l1", v.thresholds.l1},
          {"l_break", v.thresholds.l_break},
          {"l_positivity", v.thresholds.l_positivity}}}};
    return e;
}

Emitted do_crad(double k, double l, int dim, double alpha)
{
    const geometry::WeightParams p{k, l, dim, alpha};
    Emitted e;
    e.doc = base_doc();
    e.doc["inputs"] = {{"k", k}, {"l", l}, {"N", dim}, {"alpha", alpha}};
    e.doc["results"] = {{"crad", geometry::crad(p)},
                        {"perimeter_order", p.perimeter_order()},
                        {"volume_order", p.volume_order()}};
    return e;
}

Emitted do_rayleigh(double k, double l, int dim, double alpha, const Common& c)
{
    const geometry::WeightParams p{k, l, dim, alpha};
    p.validate_for_ratio();
    const int nodes = c.grid > 0 ? c.grid : (dim == 2 ? 256 : 64);
    Rng rng(c.seed);
    const auto set = random_star_set(rng, dim, alpha, nodes);
    const double ratio = geometry::rayleigh_ratio(set, p);
    const double constant = geometry::crad(p);
    Emitted e;
    e.doc = base_doc();
    e.doc["inputs"] = {{"k", k},       {"l", l},       {"N", dim},
                       {"alpha", alpha}, {"seed", c.seed}, {"grid", nodes}};
    e.doc["results"] = {{"rayleigh_ratio", ratio},
                        {"crad", constant},
                        {"margin", ratio - constant}};
    return e;
}

Emitted do_symmetrize(double k, double l, int dim, double alpha,
                      const Common& c)
{
    const geometry::WeightParams p{k, l, dim, alpha};
    const int nr = c.grid > 0 ? c.grid : 64;
    const int nt = std::max(8, nr / 2);
    Rng rng(c.seed);
    const double pi = 3.14159265358979323846;
    const double lo = dim == 2 ? -pi / 2.0 : 0.0;
    struct Bump {
        double a, r0, th0, sr, st;
    };
    Bump bumps[3];
    for (auto& b : bumps) {
        b.a = rng.uniform(0.2, 1.0);
        b.r0 = rng.uniform(0.3, 1.6);
        b.th0 = rng.uniform(lo + 0.2, pi / 2.0 - 0.2);
        b.sr = rng.uniform(0.2, 0.7);
        b.st = rng.uniform(0.25, 0.8);
    }
    const auto u = rearrange::make_gridded(
        dim, alpha, nr, nt, 2.0, [&](double r, double th) {
            double v = 0.0;
            for (const auto& b : bumps) {
                const double dr = (r - b.r0) / b.sr;
                const double dt = (th - b.th0) / b.st;
                v += b.a * std::exp(-dr * dr - dt * dt);
            }
            const double x = std::clamp((1.84 - r) / 0.16, 0.0, 1.0);
            return v * x * x * (3.0 - 2.0 * x);
        });
    const auto star = rearrange::schwarz_symmetrize(u, p);
    double peak = 0.0;
    for (const auto& ring : u.values)
        for (double v : ring)
            peak = std::max(peak, v);
    double deviation = 0.0;
    for (int j = 0; j < 20; ++j) {
        const double t = peak * (j + 0.5) / 20.0;
        const double a = rearrange::measure_above(u, t, p);
        const double b = rearrange::measure_above(star, t, p);
        deviation = std::max(
            deviation, std::fabs(a - b) / (1.0 + std::max(a, b)));
    }
    if (c.tol_set && deviation > c.tol)
        throw convergence_error(
            "symmetrization level-set deviation " + num17(deviation) +
            " exceeds the requested tolerance " + num17(c.tol));
    Emitted e;
    e.doc = base_doc();
    e.doc["inputs"] = {{"k", k},       {"l", l},       {"N", dim},
                       {"alpha", alpha}, {"seed", c.seed}, {"grid", nr}};
    e.doc["results"] = {{"peak_value", peak},
                        {"profile_cells", star.values.size()},
                        {"support_radius", star.edges.back()},
                        {"total_measure", rearrange::measure_above(star, 0.0, p)},
                        {"max_measure_deviation", deviation}};
    e.doc["tolerances"] = {{"levels_checked", 20}};
    return e;
}

Emitted do_starshape(double k, double l, int dim, double alpha,
                     const Common& c)
{
    const geometry::WeightParams p{k, l, dim, alpha};
    const int nodes = c.grid > 0 ? c.grid : (dim == 2 ? 256 : 64);
    Rng rng(c.seed);
    const auto set = random_star_set(rng, dim, alpha, nodes);
    const auto check = rearrange::starshaped_holder_check(set, p);
    Emitted e;
    e.doc = base_doc();
    e.doc["inputs"] = {{"k", k},       {"l", l},       {"N", dim},
                       {"alpha", alpha}, {"seed", c.seed}, {"grid", nodes}};
    e.doc["results"] = {{"lhs", check.lhs},
                        {"rhs", check.rhs},
                        {"d1", check.d1},
                        {"slack", check.rhs - check.lhs}};
    return e;
}

Emitted do_secvar(double k, double l, int dim, double alpha, const Common& c)
{
    const geometry::WeightParams p{k, l, dim, alpha};
    const int nodes = c.grid > 0 ? c.grid : 128;
    const auto u = spectral::sample_angular(
        dim, alpha, nodes, [](double th) { return std::sin(th); },
        [](double th) { return std::cos(th); });
    const double sv = spectral::second_variation(u, p);
    const auto report = spectral::stability_verdict(p);
    Emitted e;
    e.doc = base_doc();
    e.doc["inputs"] = {{"k", k}, {"l", l}, {"N", dim}, {"alpha", alpha},
                       {"grid", nodes}};
    e.doc["results"] = {
        {"second_variation_first_mode", sv},
        {"coefficient", report.coefficient},
        {"poincare_min", report.poincare_min},
        {"gap", report.gap},
        {"verdict", spectral::stability_name(report.verdict)},
        {"l_break", regions::breaking_threshold(k, dim, alpha)}};
    return e;
}

Emitted do_eigen(const std::string& problem, int dim, double alpha,
                 const Common& c)
{
    const int grid = c.grid > 0 ? c.grid : 2000;
    const auto solve = [&](int n) {
        return problem == "wirtinger" ? spectral::wirtinger_min_eig(alpha, n)
                                      : spectral::poincare_min_eig(dim, alpha, n);
    };
    const auto fine = solve(grid);
    const auto coarse = solve(std::max(8, grid / 2));
    const double grid_error =
        std::fabs(fine.min_eigenvalue - coarse.min_eigenvalue);
    const double reference = problem == "wirtinger" ? 1.0 + alpha
                                                    : dim + alpha - 1.0;
    if (c.tol_set && grid_error > c.tol)
        throw convergence_error("eigenvalue grid error " + num17(grid_error) +
                                " exceeds the requested tolerance " +
                                num17(c.tol));
    Emitted e;
    e.doc = base_doc();
    e.doc["inputs"] = {{"problem", problem}, {"N", dim}, {"alpha", alpha},
                       {"grid", grid}};
    e.doc["results"] = {{"min_eigenvalue", fine.min_eigenvalue},
                        {"reference", reference},
                        {"reference_gap", fine.min_eigenvalue - reference}};
    e.doc["tolerances"] = {{"grid_error", grid_error},
                           {"residual", fine.residual}};
    return e;
}

Emitted do_hardy(double p_exp, double k, int dim, double alpha, double eps)
{
    const double constant = functional::hardy_constant(p_exp, k, alpha, dim);
    const double witness =
        functional::hardy_witness_ratio(eps, p_exp, k, alpha, dim);
    Emitted e;
    e.doc = base_doc();
    e.doc["inputs"] = {{"p", p_exp}, {"k", k}, {"N", dim}, {"alpha", alpha},
                       {"eps", eps}};
    e.doc["results"] = {{"constant", constant},
                        {"witness_ratio", witness},
                        {"excess", witness - constant}};
    return e;
}

Emitted do_ckn(double a, double p_exp, double q_exp, int dim, double alpha)
{
    const functional::CknParams params{a, p_exp, q_exp, dim, alpha};
    params.validate();
    Emitted e;
    e.doc = base_doc();
    e.doc["inputs"] = {{"a", a}, {"p", p_exp}, {"q", q_exp}, {"N", dim},
                       {"alpha", alpha}};
    json& res = e.doc["results"];
    res["b"] = params.b();
    res["p_star"] = params.p_star();
    if (p_exp == q_exp) {
        // The quotient degenerates to the Hardy inequality; the ground
        // state is closed-form.
        res["srad"] = functional::srad(params);
        res["minimizer_family"] = "hardy";
    } else if (p_exp == 1.0) {
        // p = 1 with p < q sits outside the explicit minimizer family;
        // report the exclusion rather than a wrong profile.
        res["minimizer_family"] = "excluded";
        res["note"] =
            "p = 1 with p < q lies outside the explicit minimizer family";
    } else {
        const auto th = functional::ckn_thresholds(p_exp, q_exp, dim, alpha);
        const auto report = functional::ckn_symmetry_range(params);
        res["a1"] = th.a1;
        res["a2"] = th.a2;
        res["k"] = report.k;
        res["l"] = report.l;
        res["range"] = report.range == functional::SymmetryRange::guaranteed_radial
                           ? "guaranteed_radial"
                           : "not_covered";
        res["label"] = regions::label_name(report.verdict.label);
        res["srad"] = functional::srad(params);
        res["minimizer_family"] = "explicit";
    }
    return e;
}

Emitted do_counterexample(double alpha, double eps)
{
    const auto rect = counterex::vanishing_sequence(alpha, eps);
    Emitted e;
    e.doc = base_doc();
    e.doc["inputs"] = {{"alpha", alpha}, {"eps", eps}};
    e.doc["results"] = {{"a", rect.a},
                        {"b", rect.b},
                        {"u", rect.u},
                        {"v", rect.v},
                        {"area", counterex::rect_area(rect)},
                        {"perimeter", counterex::rect_perimeter(rect)},
                        {"ratio", counterex::rect_ratio(rect)}};
    return e;
}

Emitted do_orthant(double k, double l, int dim, const std::vector<double>& a,
                   const Common& c)
{
    orthant::MonomialWeight w;
    w.exponents = a;
    w.validate();
    detail::require(static_cast<int>(a.size()) == dim,
                    "the monomial weight needs one exponent per coordinate");
    const double kappa = orthant::orthant_kappa(dim, w);
    const double constant = orthant::orthant_constant(k, l, dim, w);
    const auto verdict = orthant::orthant_classify(k, l, dim, w);
    Emitted e;
    e.doc = base_doc();
    e.doc["inputs"] = {{"k", k}, {"l", l}, {"N", dim}, {"a", a},
                       {"seed", c.seed}};
    json& res = e.doc["results"];
    res["kappa"] = kappa;
    res["constant"] = constant;
    res["label"] = regions::label_name(verdict.label);
    res["sufficient_case"] = regions::case_name(verdict.sufficient_case);
    if (dim == 2 || dim == 3) {
        const int nodes = c.grid > 0 ? c.grid : (dim == 2 ? 256 : 64);
        Rng rng(c.seed);
        const double base = rng.uniform(0.5, 2.0);
        const double c1 = rng.uniform(-0.25, 0.25) * base;
        const double c2 = rng.uniform(-0.15, 0.15) * base;
        const auto set =
            dim == 2 ? orthant::make_sector_set(
                           w, nodes,
                           [=](double th) {
                               return base + c1 * std::sin(th) +
                                      c2 * std::cos(2.0 * th);
                           })
                     : orthant::make_octant_set(
                           w, nodes, [=](double phi, double th) {
                               return base + c1 * std::sin(phi) * std::cos(th) +
                                      c2 * std::cos(phi);
                           });
        const double ratio = orthant::rayleigh_ratio(set, k, l);
        res["rayleigh_ratio"] = ratio;
        res["margin"] = ratio - constant;
        e.doc["inputs"]["grid"] = nodes;
    }
    return e;
}

// --- verify -------------------------------------------------------------------

Emitted do_verify(const std::string& suite, const Common& c)
{
    verify::Options options;
    options.seed = c.seed;
    options.grid = c.grid;
    const auto suites = verify::run_suites(suite, options);

    int total = 0;
    int failures = 0;
    std::ostringstream text;
    json jsuites = json::array();
    for (const auto& s : suites) {
        json jprops = json::array();
        for (const auto& p : s.properties) {
            ++total;
            if (!p.passed)
                ++failures;
            char margin[32];
            std::snprintf(margin, sizeof margin, "%.3e", p.margin);
            text << (p.passed ? "[PASS] " : "[FAIL] ") << s.suite << "/"
                 << p.name << " (margin " << margin << ")\n";
            jprops.push_back(
                {{"name", p.name}, {"passed", p.passed}, {"margin", p.margin}});
        }
        jsuites.push_back({{"suite", s.suite},
                           {"all_passed", s.all_passed()},
                           {"properties", jprops}});
    }
    text << "verify: " << (total - failures) << "/" << total
         << " properties passed (seed " << c.seed << ")\n";

    Emitted e;
    e.doc = base_doc();
    e.doc["inputs"] = {{"suite", suite}, {"seed", c.seed}, {"grid", c.grid}};
    e.doc["results"] = {{"suites", jsuites},
                        {"total", total},
                        {"failures", failures}};
    e.doc["status"] = failures == 0 ? "ok" : "property_violation";
    e.text_report = text.str();
    e.exit_code = failures == 0 ? 0 : 4;
    return e;
}

// --- sweep ---------------------------------------------------------------------

struct VarySpec {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    int steps = 0;
    bool log = false;
};

// "name=min:max:steps" with an optional ":log" suffix.
VarySpec parse_vary(const std::string& s)
{
    VarySpec v;
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
        throw usage_error{"--vary expects name=min:max:steps, got '" + s + "'"};
    v.name = s.substr(0, eq);
    std::string rest = s.substr(eq + 1);
    if (rest.size() >= 4 && rest.substr(rest.size() - 4) == ":log") {
        v.log = true;
        rest = rest.substr(0, rest.size() - 4);
    }
    const auto c1 = rest.find(':');
    const auto c2 = rest.find(':', c1 == std::string::npos ? 0 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw usage_error{"--vary expects name=min:max:steps, got '" + s + "'"};
    try {
        std::size_t used = 0;
        v.lo = std::stod(rest.substr(0, c1));
        v.hi = std::stod(rest.substr(c1 + 1, c2 - c1 - 1));
        const std::string steps = rest.substr(c2 + 1);
        v.steps = std::stoi(steps, &used);
        if (used != steps.size())
            throw usage_error{"--vary steps must be an integer"};
    } catch (const usage_error&) {
        throw;
    } catch (const std::exception&) {
        throw usage_error{"--vary expects numeric min:max:steps, got '" + s +
                          "'"};
    }
    if (v.steps < 2)
        throw usage_error{"--vary needs at least 2 steps"};
    if (v.log && (v.lo <= 0.0 || v.hi <= 0.0))
        throw usage_error{"log spacing needs positive endpoints"};
    if (!std::isfinite(v.lo) || !std::isfinite(v.hi))
        throw usage_error{"--vary endpoints must be finite"};
    return v;
}

double vary_point(const VarySpec& v, int i)
{
    const double u = static_cast<double>(i) / (v.steps - 1);
    if (v.log)
        return std::exp(std::log(v.lo) + u * (std::log(v.hi) - std::log(v.lo)));
    return v.lo + u * (v.hi - v.lo);
}

int thread_cap()
{
    if (const char* env = std::getenv("ISOPERIM_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1)
            return static_cast<int>(std::min(v, 64L));
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(std::min(hc, 8u)) : 4;
}

Emitted do_sweep(const std::string& quantity,
                 const std::vector<std::string>& vary_args,
                 std::map<std::string, double> fixed, int dim,
                 const Common& c)
{
    static const std::vector<std::string> quantities = {
        "classify", "crad", "hardy_witness_ratio", "wirtinger_min_eig",
        "poincare_min_eig"};
    if (std::find(quantities.begin(), quantities.end(), quantity) ==
        quantities.end()) {
        std::string known;
        for (const auto& q : quantities)
            known += (known.empty() ? "" : ", ") + q;
        throw usage_error{"unknown sweep quantity '" + quantity +
                          "' (known: " + known + ")"};
    }
    if (vary_args.empty() || vary_args.size() > 2)
        throw usage_error{"sweep needs one or two --vary parameters"};
    std::vector<VarySpec> vary;
    for (const auto& s : vary_args) {
        vary.push_back(parse_vary(s));
        if (fixed.find(vary.back().name) == fixed.end())
            throw usage_error{"unknown sweep parameter '" + vary.back().name +
                              "' (known: k, l, alpha, eps, p, q)"};
    }
    if (vary.size() == 2 && vary[0].name == vary[1].name)
        throw usage_error{"the two --vary parameters must differ"};

    const int grid = c.grid > 0 ? c.grid : 2000;
    const std::size_t inner = vary.size() == 2 ? vary[1].steps : 1;
    const std::size_t rows = vary[0].steps * inner;

    struct Row {
        double v0 = 0.0, v1 = 0.0;
        json value;
        std::string status = "ok";
    };
    std::vector<Row> table(rows);

    const auto evaluate = [&](std::size_t index, Row& row) {
        auto params = fixed;
        row.v0 = vary_point(vary[0], static_cast<int>(index / inner));
        params[vary[0].name] = row.v0;
        if (vary.size() == 2) {
            row.v1 = vary_point(vary[1], static_cast<int>(index % inner));
            params[vary[1].name] = row.v1;
        }
        try {
            if (quantity == "classify") {
                const auto v = regions::classify(
                    {params["k"], params["l"], dim, params["alpha"]});
                row.value = regions::label_name(v.label);
            } else if (quantity == "crad") {
                row.value = geometry::crad(
                    {params["k"], params["l"], dim, params["alpha"]});
            } else if (quantity == "hardy_witness_ratio") {
                row.value = functional::hardy_witness_ratio(
                    params["eps"], params["p"], params["k"], params["alpha"],
                    dim);
            } else if (quantity == "wirtinger_min_eig") {
                row.value =
                    spectral::wirtinger_min_eig(params["alpha"], grid)
                        .min_eigenvalue;
            } else {
                row.value =
                    spectral::poincare_min_eig(dim, params["alpha"], grid)
                        .min_eigenvalue;
            }
        } catch (const domain_error&) {
            row.status = "domain_error";
        } catch (const convergence_error&) {
            row.status = "convergence_error";
        }
    };

    // Grid points are independent; rows are slotted by index, so the output
    // order never depends on scheduling.
    const int workers =
        static_cast<int>(std::min<std::size_t>(thread_cap(), rows));
    if (workers > 1) {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = cursor.fetch_add(1); i < rows;
                     i = cursor.fetch_add(1))
                    evaluate(i, table[i]);
            });
        for (auto& th : pool)
            th.join();
    } else {
        for (std::size_t i = 0; i < rows; ++i)
            evaluate(i, table[i]);
    }

    Emitted e;
    e.doc = base_doc();
    json& in = e.doc["inputs"];
    in["quantity"] = quantity;
    in["vary"] = vary_args;
    in["N"] = dim;
    in["grid"] = grid;
    for (const auto& [name, value] : fixed) {
        bool varied = false;
        for (const auto& v : vary)
            varied = varied || v.name == name;
        if (!varied)
            in[name] = value;
    }

    json jrows = json::array();
    std::string csv = vary[0].name;
    if (vary.size() == 2)
        csv += "," + vary[1].name;
    csv += "," + quantity + ",status\n";
    for (const auto& row : table) {
        json jrow;
        jrow[vary[0].name] = row.v0;
        csv += num17(row.v0);
        if (vary.size() == 2) {
            jrow[vary[1].name] = row.v1;
            csv += "," + num17(row.v1);
        }
        jrow["value"] = row.value;
        jrow["status"] = row.status;
        jrows.push_back(jrow);
        csv += "," + csv_cell(row.value) + "," + row.status + "\n";
    }
    e.doc["results"] = {{"rows", jrows},
                        {"row_count", rows},
                        {"columns", vary.size() == 2 ? 4 : 3}};
    e.csv = csv;
    return e;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err)
{
    CLI::App app{"weighted isoperimetry on the half-space: constants, "
                 "classifications, spectra and counterexamples"};
    app.name("isoperim");
    app.require_subcommand(1);

    Common common;
    app.add_option("--out", common.out_path,
                   "write the document to this file instead of stdout");
    app.add_option("--format", common.format, "output encoding")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--grid", common.grid, "override discretization sizes")
        ->check(CLI::Range(8, 1 << 20));
    auto* tol_opt =
        app.add_option("--tol", common.tol,
                       "fail (exit 3) unless the achieved error meets this")
            ->check(CLI::PositiveNumber);
    app.add_option("--seed", common.seed, "seed for randomized draws")
        ->capture_default_str();

    struct {
        double k = 0.0, l = 0.0, alpha = 0.0;
        int dim = 2;
    } cls, crd, ray, sym, str, sec;
    const auto add_weight_flags = [](CLI::App* sub, auto& p) {
        sub->fallthrough();
        sub->add_option("--k", p.k, "perimeter weight exponent")->required();
        sub->add_option("--l", p.l, "volume weight exponent")->required();
        sub->add_option("--N", p.dim, "ambient dimension")
            ->capture_default_str();
        sub->add_option("--alpha", p.alpha, "vertical weight exponent")
            ->capture_default_str();
    };

    auto* cls_sub = app.add_subcommand(
        "classify", "classify a weight pair against the sharp thresholds");
    add_weight_flags(cls_sub, cls);
    auto* crd_sub = app.add_subcommand(
        "crad", "closed-form isoperimetric constant of the half-ball family");
    add_weight_flags(crd_sub, crd);
    auto* ray_sub = app.add_subcommand(
        "rayleigh", "isoperimetric ratio of a seeded random star-shaped set");
    add_weight_flags(ray_sub, ray);
    auto* sym_sub = app.add_subcommand(
        "symmetrize", "weighted Schwarz symmetrization of a random function");
    add_weight_flags(sym_sub, sym);
    auto* str_sub = app.add_subcommand(
        "starshape", "Hoelder comparison bound on a random star-shaped set");
    add_weight_flags(str_sub, str);
    auto* sec_sub = app.add_subcommand(
        "secvar", "second variation at the half-ball and stability verdict");
    add_weight_flags(sec_sub, sec);

    struct {
        std::string problem;
        double alpha = 0.0;
        int dim = 2;
    } eig;
    auto* eig_sub = app.add_subcommand(
        "eigen", "minimum eigenvalue of a hemisphere pencil");
    eig_sub->fallthrough();
    eig_sub->add_option("--problem", eig.problem, "which pencil")
        ->check(CLI::IsMember({"wirtinger", "poincare"}))
        ->required();
    eig_sub->add_option("--alpha", eig.alpha, "vertical weight exponent")
        ->required();
    eig_sub->add_option("--N", eig.dim, "ambient dimension")
        ->capture_default_str();

    struct {
        double p = 2.0, k = 0.0, alpha = 0.0, eps = 0.1;
        int dim = 2;
    } hrd;
    auto* hrd_sub = app.add_subcommand(
        "hardy", "sharp Hardy constant and a witness ratio");
    hrd_sub->fallthrough();
    hrd_sub->add_option("--p", hrd.p, "integrability exponent")->required();
    hrd_sub->add_option("--k", hrd.k, "radial weight exponent")->required();
    hrd_sub->add_option("--N", hrd.dim, "ambient dimension")
        ->capture_default_str();
    hrd_sub->add_option("--alpha", hrd.alpha, "vertical weight exponent")
        ->capture_default_str();
    hrd_sub->add_option("--eps", hrd.eps, "witness family parameter")
        ->capture_default_str();

    struct {
        double a = 0.0, p = 2.0, q = 2.0, alpha = 0.0;
        int dim = 2;
    } ckn;
    auto* ckn_sub = app.add_subcommand(
        "ckn", "interpolation inequality thresholds and ground state");
    ckn_sub->fallthrough();
    ckn_sub->add_option("--a", ckn.a, "gradient weight parameter")->required();
    ckn_sub->add_option("--p", ckn.p, "gradient exponent")->required();
    ckn_sub->add_option("--q", ckn.q, "norm exponent")->required();
    ckn_sub->add_option("--N", ckn.dim, "ambient dimension")
        ->capture_default_str();
    ckn_sub->add_option("--alpha", ckn.alpha, "vertical weight exponent")
        ->capture_default_str();

    struct {
        double alpha = -0.5, eps = 0.1;
    } cex;
    auto* cex_sub = app.add_subcommand(
        "counterexample",
        "witness strip pushing the isoperimetric quotient below a target");
    cex_sub->fallthrough();
    cex_sub->add_option("--alpha", cex.alpha, "weight exponent in (-1,0)")
        ->required();
    cex_sub->add_option("--eps", cex.eps, "target quotient")->required();

    struct {
        double k = 0.0, l = 0.0;
        int dim = 2;
        std::vector<double> a;
    } ort;
    auto* ort_sub = app.add_subcommand(
        "orthant", "monomial-weight isoperimetry on the positive orthant");
    ort_sub->fallthrough();
    ort_sub->add_option("--k", ort.k, "perimeter weight exponent")->required();
    ort_sub->add_option("--l", ort.l, "volume weight exponent")->required();
    ort_sub->add_option("--N", ort.dim, "ambient dimension")
        ->capture_default_str();
    ort_sub->add_option("--a", ort.a, "monomial exponents, comma separated")
        ->required()
        ->delimiter(',');

    struct {
        std::string quantity;
        std::vector<std::string> vary;
        double k = 0.0, l = 0.0, alpha = 0.0, eps = 0.1, p = 2.0, q = 4.0;
        int dim = 2;
    } swp;
    auto* swp_sub = app.add_subcommand(
        "sweep", "tabulate a quantity over one or two parameter ranges");
    swp_sub->fallthrough();
    swp_sub->add_option("--quantity", swp.quantity,
                        "classify, crad, hardy_witness_ratio, "
                        "wirtinger_min_eig or poincare_min_eig")
        ->required();
    swp_sub->add_option("--vary", swp.vary,
                        "name=min:max:steps[:log]; repeat for a 2-D grid");
    swp_sub->add_option("--k", swp.k, "fixed perimeter exponent")
        ->capture_default_str();
    swp_sub->add_option("--l", swp.l, "fixed volume exponent")
        ->capture_default_str();
    swp_sub->add_option("--alpha", swp.alpha, "fixed vertical exponent")
        ->capture_default_str();
    swp_sub->add_option("--eps", swp.eps, "fixed witness parameter")
        ->capture_default_str();
    swp_sub->add_option("--p", swp.p, "fixed integrability exponent")
        ->capture_default_str();
    swp_sub->add_option("--q", swp.q, "fixed norm exponent")
        ->capture_default_str();
    swp_sub->add_option("--N", swp.dim, "ambient dimension (fixed)")
        ->capture_default_str();

    struct {
        std::string suite;
    } ver;
    auto* ver_sub = app.add_subcommand(
        "verify", "run a property suite and report margins");
    ver_sub->fallthrough();
    ver_sub->add_option("suite", ver.suite,
                        "geometry, rearrange, spectral, functional, "
                        "counterex, orthant or all")
        ->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    common.tol_set = tol_opt->count() > 0;

    Emitted emitted;
    try {
        if (cls_sub->parsed())
            emitted = do_classify(cls.k, cls.l, cls.dim, cls.alpha);
        else if (crd_sub->parsed())
            emitted = do_crad(crd.k, crd.l, crd.dim, crd.alpha);
        else if (ray_sub->parsed())
            emitted = do_rayleigh(ray.k, ray.l, ray.dim, ray.alpha, common);
        else if (sym_sub->parsed())
            emitted = do_symmetrize(sym.k, sym.l, sym.dim, sym.alpha, common);
        else if (str_sub->parsed())
            emitted = do_starshape(str.k, str.l, str.dim, str.alpha, common);
        else if (sec_sub->parsed())
            emitted = do_secvar(sec.k, sec.l, sec.dim, sec.alpha, common);
        else if (eig_sub->parsed())
            emitted = do_eigen(eig.problem, eig.dim, eig.alpha, common);
        else if (hrd_sub->parsed())
            emitted = do_hardy(hrd.p, hrd.k, hrd.dim, hrd.alpha, hrd.eps);
        else if (ckn_sub->parsed())
            emitted = do_ckn(ckn.a, ckn.p, ckn.q, ckn.dim, ckn.alpha);
        else if (cex_sub->parsed())
            emitted = do_counterexample(cex.alpha, cex.eps);
        else if (ort_sub->parsed())
            emitted = do_orthant(ort.k, ort.l, ort.dim, ort.a, common);
        else if (swp_sub->parsed()) {
            std::map<std::string, double> fixed = {
                {"k", swp.k},     {"l", swp.l}, {"alpha", swp.alpha},
                {"eps", swp.eps}, {"p", swp.p}, {"q", swp.q}};
            emitted = do_sweep(swp.quantity, swp.vary, fixed, swp.dim, common);
        } else if (ver_sub->parsed()) {
            const auto& names = verify::suite_names();
            if (ver.suite != "all" &&
                std::find(names.begin(), names.end(), ver.suite) ==
                    names.end()) {
                err << "error: unknown verification suite '" << ver.suite
                    << "' (known: geometry, rearrange, spectral, functional, "
                       "counterex, orthant, all)\n";
                return 1;
            }
            emitted = do_verify(ver.suite, common);
        }
    } catch (const usage_error& e) {
        err << "error: " << e.message << "\n";
        return 1;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const convergence_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }

    std::string payload;
    if (!emitted.text_report.empty() && common.format != "json")
        payload = emitted.text_report;
    else if (common.format == "csv")
        payload = emitted.csv.empty() ? doc_to_csv(emitted.doc) : emitted.csv;
    else
        payload = emitted.doc.dump(2) + "\n";

    if (!common.out_path.empty()) {
        std::ofstream file(common.out_path);
        if (!file) {
            err << "error: cannot open '" << common.out_path
                << "' for writing\n";
            return 1;
        }
        file << payload;
    } else {
        out << payload;
    }
    return emitted.exit_code;
}

}  // namespace isoperim::cli
