// wdc: exact closures, covering numbers, and witnesses for weight-determined
// sets of uniform grids, on the command line.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wdc/algebra_oracle.hpp"
#include "wdc/constructions.hpp"
#include "wdc/covers.hpp"
#include "wdc/errors.hpp"
#include "wdc/grid.hpp"
#include "wdc/hyperplane_oracle.hpp"
#include "wdc/parallel.hpp"
#include "wdc/verify.hpp"
#include "wdc/weightset.hpp"

using njson = nlohmann::ordered_json;
using namespace wdc;

namespace {

// ---------------------------------------------------------------- output

std::string csv_escape(const std::string& cell)
{
    if (cell.find_first_of(",\"\n") == std::string::npos)
        return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void emit_table(const Table& t, bool csv)
{
    if (csv) {
        for (std::size_t i = 0; i < t.header.size(); ++i)
            std::cout << (i ? "," : "") << csv_escape(t.header[i]);
        std::cout << '\n';
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                std::cout << (i ? "," : "") << csv_escape(row[i]);
            std::cout << '\n';
        }
        return;
    }
    std::vector<std::size_t> width(t.header.size());
    for (std::size_t i = 0; i < t.header.size(); ++i)
        width[i] = t.header[i].size();
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            std::cout << cells[i] << std::string(width[i] - cells[i].size(), ' ');
            std::cout << (i + 1 < cells.size() ? "  " : "");
        }
        std::cout << '\n';
    };
    line(t.header);
    for (const auto& row : t.rows)
        line(row);
}

// ---------------------------------------------------------------- parsing

// Set expressions: plain lists/ranges ("1,3,5", "0-2,4-6"), the named
// two-tails sets "t:i", residue classes "parity:0|1" and "mod:m,i".
WeightSet parse_set_expr(int n_max, const std::string& text)
{
    if (text.rfind("t:", 0) == 0)
        return two_tails(n_max, std::stoi(text.substr(2)));
    if (text.rfind("parity:", 0) == 0) {
        const int p = std::stoi(text.substr(7));
        if (p != 0 && p != 1)
            throw std::invalid_argument("parity must be 0 or 1");
        WeightSet e(n_max);
        for (int j = p; j <= n_max; j += 2)
            e.set(j);
        return e;
    }
    if (text.rfind("mod:", 0) == 0) {
        const std::string rest = text.substr(4);
        const std::size_t comma = rest.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("mod form is mod:m,i");
        const int m = std::stoi(rest.substr(0, comma));
        const int i = std::stoi(rest.substr(comma + 1));
        if (m < 1 || i < 0 || i >= m)
            throw std::invalid_argument("mod:m,i needs 0 <= i < m");
        WeightSet e(n_max);
        for (int j = i; j <= n_max; j += m)
            e.set(j);
        return e;
    }
    return WeightSet::parse(n_max, text);
}

algebra::OracleLimits algebra_limits()
{
    algebra::OracleLimits limits;
    if (const char* cap = std::getenv("WDC_MAX_GRID_POINTS"))
        limits.max_grid_points = static_cast<std::size_t>(std::stoull(cap));
    return limits;
}

hyper::SectionLimits section_limits()
{
    hyper::SectionLimits limits;
    if (const char* cap = std::getenv("WDC_MAX_GRID_POINTS"))
        limits.max_grid_points = static_cast<std::size_t>(std::stoull(cap));
    return limits;
}

std::string coords_string(const std::vector<long>& coords)
{
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(coords[i]);
    }
    out += ')';
    return out;
}

njson poly_json(const Poly& p)
{
    njson terms = njson::array();
    for (const auto& [m, c] : p.terms()) {
        njson term;
        term["exps"] = m.exps;
        term["coef"] = Rational(c).get_str();
        terms.push_back(term);
    }
    return terms;
}

// Hyperplane forms serialize as degree-1 term lists, same shape as
// polynomials.
njson form_json(const LinearForm& f)
{
    return poly_json(f.to_poly());
}

// Every proper subset of [0,N], in mask order; refused when the sweep would
// be unreasonably large.
std::vector<WeightSet> sweep_sets(int n_max)
{
    if (n_max > 20)
        throw unsupported_domain("exhaustive sweeps are capped at N = 20");
    std::vector<WeightSet> out;
    const std::uint64_t sets = std::uint64_t{1} << (n_max + 1);
    out.reserve(sets - 1);
    for (std::uint64_t bits = 0; bits + 1 < sets; ++bits) {
        WeightSet e(n_max);
        for (int w = 0; w <= n_max; ++w)
            if (bits & (std::uint64_t{1} << w))
                e.set(w);
        out.push_back(std::move(e));
    }
    return out;
}

// ---------------------------------------------------------------- commands

int cmd_layers(const std::string& grid_spec, bool csv, bool json)
{
    const Grid g = Grid::parse(grid_spec);
    if (json) {
        njson out;
        out["grid"] = g.spec_string();
        out["N"] = g.top_weight();
        std::vector<std::string> sizes;
        for (int j = 0; j <= g.top_weight(); ++j)
            sizes.push_back(g.layer_size(j).get_str());
        out["sizes"] = sizes;
        out["points"] = g.point_count().get_str();
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    Table t;
    t.header = {"weight", "size"};
    for (int j = 0; j <= g.top_weight(); ++j)
        t.rows.push_back({std::to_string(j), g.layer_size(j).get_str()});
    emit_table(t, csv);
    if (!csv)
        std::cout << "N = " << g.top_weight() << ", points = " << g.point_count().get_str()
                  << '\n';
    return 0;
}

int cmd_su2(const std::string& grid_spec, bool csv, bool json)
{
    const Grid g = Grid::parse(grid_spec);
    const bool su2 = g.is_strictly_unimodal();
    if (json) {
        njson out;
        out["grid"] = g.spec_string();
        out["strictly_unimodal"] = su2;
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    if (csv) {
        std::cout << "grid,strictly_unimodal\n"
                  << csv_escape(g.spec_string()) << ',' << (su2 ? "true" : "false") << '\n';
        return 0;
    }
    std::string profile;
    for (int j = 0; j <= g.top_weight(); ++j) {
        if (j)
            profile += ',';
        profile += g.layer_size(j).get_str();
    }
    std::cout << "grid " << g.spec_string() << ": strictly unimodal: " << (su2 ? "yes" : "no")
              << " (layer sizes " << profile << ")\n";
    return 0;
}

int cmd_lbar(int n_max, int degree, const std::string& set_expr, bool naive, bool csv, bool json)
{
    const WeightSet e = parse_set_expr(n_max, set_expr);
    const WeightSet step = fill_step(degree, e);
    const WeightSet closure = naive ? fill_closure_naive(degree, e) : fill_closure(degree, e);
    const int steps = fill_stabilization_index(degree, e);
    if (json) {
        njson out;
        out["N"] = n_max;
        out["d"] = degree;
        out["set"] = e.to_vector();
        out["step"] = step.to_vector();
        out["closure"] = closure.to_vector();
        out["stabilization_index"] = steps;
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    if (csv) {
        std::cout << "N,d,set,step,closure,steps\n"
                  << n_max << ',' << degree << ',' << csv_escape(e.to_string()) << ','
                  << csv_escape(step.to_string()) << ',' << csv_escape(closure.to_string()) << ','
                  << steps << '\n';
        return 0;
    }
    std::cout << step.to_string() << " → fixpoint " << closure.to_string() << '\n';
    std::cout << "stabilized after " << steps << " step" << (steps == 1 ? "" : "s") << '\n';
    return 0;
}

int cmd_admitting(int n_max, int degree, const std::string& set_expr, bool csv, bool json)
{
    const WeightSet e = parse_set_expr(n_max, set_expr);
    const AdmittingCertificate cert = admitting_certificate(degree, e);
    if (json) {
        njson out;
        out["N"] = n_max;
        out["d"] = degree;
        out["set"] = e.to_vector();
        out["witnessed"] = cert.witnessed;
        out["i"] = cert.i;
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    if (csv) {
        std::cout << "N,d,set,witnessed,i\n"
                  << n_max << ',' << degree << ',' << csv_escape(e.to_string()) << ','
                  << (cert.witnessed ? "true" : "false") << ',' << cert.i << '\n';
        return 0;
    }
    if (cert.witnessed)
        std::cout << e.to_string() << " is " << degree << "-admitting, least witness i = "
                  << cert.i << '\n';
    else
        std::cout << e.to_string() << " is not " << degree << "-admitting\n";
    return 0;
}

int cmd_closure(const std::string& grid_spec, int degree, const std::string& set_expr,
                const std::string& mode, bool witness, bool csv, bool json)
{
    const Grid g = Grid::parse(grid_spec);
    const int n = g.top_weight();
    const WeightSet e = parse_set_expr(n, set_expr);
    const algebra::OracleLimits limits = algebra_limits();
    const PointSet base = g.weight_set_points(e);

    njson out;
    out["grid"] = g.spec_string();
    out["d"] = degree;
    out["set"] = e.to_vector();

    if (mode == "zstar") {
        const WeightSet closed = algebra::z_star_closure(g, degree, e, limits);
        if (csv) {
            std::cout << "grid,d,set,zstar\n"
                      << csv_escape(g.spec_string()) << ',' << degree << ','
                      << csv_escape(e.to_string()) << ',' << csv_escape(closed.to_string())
                      << '\n';
            return 0;
        }
        if (json) {
            out["zstar"] = closed.to_vector();
            if (witness) {
                njson basis = njson::array();
                for (const Poly& p : algebra::vanishing_basis(g, degree, base, limits))
                    basis.push_back(poly_json(p));
                out["witness_basis"] = basis;
            }
            std::cout << out.dump(2) << '\n';
            return 0;
        }
        std::cout << "Z*-closure(d=" << degree << ") of " << e.to_string() << " on "
                  << g.spec_string() << " = " << closed.to_string() << '\n';
        if (witness)
            for (const Poly& p : algebra::vanishing_basis(g, degree, base, limits))
                std::cout << "  vanishing: " << p.to_string() << '\n';
        return 0;
    }
    if (mode == "z") {
        const PointSet closure = algebra::z_closure(g, degree, base, limits);
        PointSet gained;
        std::set_difference(closure.begin(), closure.end(), base.begin(), base.end(),
                            std::back_inserter(gained));
        if (csv) {
            std::string gained_cell;
            for (PointIndex p : gained) {
                if (!gained_cell.empty())
                    gained_cell += ' ';
                gained_cell += coords_string(g.coords_at(p));
            }
            std::cout << "grid,d,set,set_points,closure_points,gained\n"
                      << csv_escape(g.spec_string()) << ',' << degree << ','
                      << csv_escape(e.to_string()) << ',' << base.size() << ','
                      << closure.size() << ',' << csv_escape(gained_cell) << '\n';
            return 0;
        }
        if (json) {
            njson pts = njson::array();
            for (PointIndex p : closure)
                pts.push_back(g.coords_at(p));
            out["closure_size"] = closure.size();
            out["closure"] = pts;
            njson extra = njson::array();
            for (PointIndex p : gained)
                extra.push_back(g.coords_at(p));
            out["gained"] = extra;
            if (witness) {
                njson basis = njson::array();
                for (const Poly& p : algebra::vanishing_basis(g, degree, base, limits))
                    basis.push_back(poly_json(p));
                out["witness_basis"] = basis;
            }
            std::cout << out.dump(2) << '\n';
            return 0;
        }
        std::cout << "Z-closure(d=" << degree << ") of " << e.to_string() << " on "
                  << g.spec_string() << ": " << base.size() << " -> " << closure.size()
                  << " points\n";
        if (gained.empty()) {
            std::cout << "fixpoint: no points gained\n";
        } else {
            std::cout << "gained:";
            for (PointIndex p : gained)
                std::cout << ' ' << coords_string(g.coords_at(p));
            std::cout << '\n';
        }
        if (witness)
            for (const Poly& p : algebra::vanishing_basis(g, degree, base, limits))
                std::cout << "  vanishing: " << p.to_string() << '\n';
        return 0;
    }
    if (mode == "hilbert") {
        const algebra::HilbertProfile profile = algebra::hilbert_fn(g, degree, base, limits);
        if (csv) {
            std::cout << "grid,d,set,hilbert\n"
                      << csv_escape(g.spec_string()) << ',' << degree << ','
                      << csv_escape(e.to_string()) << ',' << profile.value.get_str() << '\n';
            return 0;
        }
        if (json) {
            out["hilbert"] = profile.value.get_str();
            if (profile.cube_closed_form) {
                const auto& cf = *profile.cube_closed_form;
                out["closed_form"] = {{"r", cf.r},
                                      {"ell", cf.ell},
                                      {"jplus", cf.jplus},
                                      {"jminus", cf.jminus},
                                      {"value", cf.value.get_str()}};
            }
            std::cout << out.dump(2) << '\n';
            return 0;
        }
        std::cout << "H_" << degree << " of " << e.to_string() << " on " << g.spec_string()
                  << " = " << profile.value.get_str() << '\n';
        if (profile.cube_closed_form)
            std::cout << "closed form agrees: " << profile.cube_closed_form->value.get_str()
                      << " (r=" << profile.cube_closed_form->r
                      << ", ell=" << profile.cube_closed_form->ell << ")\n";
        return 0;
    }
    throw CLI::ValidationError("--mode must be zstar, z, or hilbert");
}

std::vector<std::string> covers_row(const Grid& g, const WeightSet& e)
{
    std::vector<std::string> row;
    row.push_back(g.spec_string());
    row.push_back(e.to_string());
    row.push_back(std::to_string(g.top_weight()));
    row.push_back(std::to_string(covers::pc(g, e)));
    row.push_back(std::to_string(covers::ppc(g, e)));
    if (g.is_cube()) {
        row.push_back(std::to_string(covers::hc(g, e)));
        row.push_back(std::to_string(covers::phc(g, e)));
        row.push_back(std::to_string(covers::epc(g, e)));
    } else {
        row.insert(row.end(), {"-", "-", "-"});
    }
    const covers::EhcBounds b = covers::ehc_bounds(g, e);
    row.push_back(std::to_string(b.lower));
    row.push_back(std::to_string(b.upper));
    if (b.exact) {
        row.push_back(std::to_string(*b.exact));
        row.push_back("proven");
    } else if (b.conjectured) {
        row.push_back(std::to_string(*b.conjectured));
        row.push_back("conjectured");
    } else {
        row.push_back("");
        row.push_back("open");
    }
    return row;
}

int cmd_covers(const std::string& grid_spec, const std::string& set_expr, bool all, bool csv,
               bool json, int threads)
{
    const Grid g = Grid::parse(grid_spec);
    const int n = g.top_weight();
    std::vector<WeightSet> sets;
    if (all)
        sets = sweep_sets(n);
    else
        sets.push_back(parse_set_expr(n, set_expr));

    std::vector<std::vector<std::string>> rows(sets.size());
    parallel_for(sets.size(), threads,
                 [&](std::size_t i) { rows[i] = covers_row(g, sets[i]); });

    Table t;
    t.header = {"grid", "E", "N", "pc", "ppc", "hc", "phc", "epc",
                "ehc_lower", "ehc_upper", "ehc_exact", "ehc_status"};
    t.rows = std::move(rows);
    if (json) {
        njson arr = njson::array();
        for (const auto& row : t.rows) {
            njson obj;
            for (std::size_t i = 0; i < t.header.size(); ++i)
                obj[t.header[i]] = row[i];
            arr.push_back(obj);
        }
        std::cout << arr.dump(2) << '\n';
        return 0;
    }
    emit_table(t, csv);
    return 0;
}

int cmd_hcover(const std::string& grid_spec, const std::string& set_expr, bool all, bool csv,
               bool json, int threads)
{
    const Grid g = Grid::parse(grid_spec);
    const int n = g.top_weight();
    const hyper::SectionSet ss = hyper::enumerate_sections(g, section_limits());
    std::vector<WeightSet> sets;
    if (all)
        sets = sweep_sets(n);
    else
        sets.push_back(parse_set_expr(n, set_expr));

    std::vector<std::vector<std::string>> rows(sets.size());
    parallel_for(sets.size(), threads, [&](std::size_t i) {
        const WeightSet& e = sets[i];
        rows[i] = {g.spec_string(),
                   e.to_string(),
                   std::to_string(n),
                   std::to_string(hyper::hc_oracle(ss, e)),
                   std::to_string(hyper::phc_oracle(ss, e)),
                   std::to_string(hyper::ehc_oracle(ss, e))};
    });

    Table t;
    t.header = {"grid", "E", "N", "oracle_hc", "oracle_phc", "oracle_ehc"};
    t.rows = std::move(rows);
    if (json) {
        njson arr = njson::array();
        for (const auto& row : t.rows) {
            njson obj;
            for (std::size_t i = 0; i < t.header.size(); ++i)
                obj[t.header[i]] = row[i];
            arr.push_back(obj);
        }
        std::cout << arr.dump(2) << '\n';
        return 0;
    }
    emit_table(t, csv);
    return 0;
}

int cmd_witness(const std::string& grid_spec, const std::string& set_expr,
                const std::string& kind, int pair_index, bool json)
{
    const Grid g = Grid::parse(grid_spec);
    const int n = g.top_weight();
    const algebra::OracleLimits limits = algebra_limits();
    njson out;
    out["grid"] = g.spec_string();
    out["kind"] = kind;

    if (kind == "level" || kind == "ppc") {
        const WeightSet e = parse_set_expr(n, set_expr);
        const Poly p = kind == "level" ? construct::level_product(g, e, limits)
                                       : construct::ppc_witness(g, e, limits);
        if (json) {
            out["set"] = e.to_vector();
            out["degree"] = p.degree();
            out["poly"] = poly_json(p);
            std::cout << out.dump(2) << '\n';
            return 0;
        }
        std::cout << kind << " witness for " << e.to_string() << " on " << g.spec_string()
                  << " (degree " << p.degree() << "):\n  " << p.to_string() << '\n';
        return 0;
    }
    if (kind == "pairing") {
        if (!g.is_cube())
            throw unsupported_domain("pairing witnesses live on the Boolean cube");
        const Poly p = construct::pairing_poly(g.dimension(), pair_index);
        if (json) {
            out["i"] = pair_index;
            out["degree"] = p.degree();
            out["poly"] = poly_json(p);
            std::cout << out.dump(2) << '\n';
            return 0;
        }
        std::cout << "pairing witness (i=" << pair_index << "):\n  " << p.to_string() << '\n';
        return 0;
    }
    if (kind == "ehc-t2") {
        if (!g.is_cube())
            throw unsupported_domain("the two-tails family lives on the Boolean cube");
        const HyperplaneFamily family = construct::ehc_t2_family(g.dimension());
        if (json) {
            njson forms = njson::array();
            for (const LinearForm& f : family.forms)
                forms.push_back(form_json(f));
            out["forms"] = forms;
            std::cout << out.dump(2) << '\n';
            return 0;
        }
        std::cout << "exact cover of the double tails on " << g.spec_string() << ":\n";
        for (const LinearForm& f : family.forms)
            std::cout << "  " << f.to_string() << " = 0\n";
        return 0;
    }
    if (kind == "ehc-t1") {
        const LinearForm f = construct::ehc_t1_form(g, limits);
        if (json) {
            out["form"] = form_json(f);
            std::cout << out.dump(2) << '\n';
            return 0;
        }
        std::cout << "corner-pair hyperplane on " << g.spec_string() << ":\n  " << f.to_string()
                  << " = 0\n";
        return 0;
    }
    throw CLI::ValidationError("--kind must be level, ppc, pairing, ehc-t2, or ehc-t1");
}

int cmd_verify(bool slow, bool no_perf, int threads)
{
    verify::Options options;
    options.slow = slow;
    options.perf = !no_perf;
    options.threads = threads;
    const auto results = verify::run_acceptance(options);
    for (const auto& r : results)
        std::printf("[%s] %2d: %s — %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str(), r.seconds);
    return verify::all_passed(results) ? 0 : 3;
}

int cmd_bench(const std::vector<long>& sizes)
{
    using Clock = std::chrono::steady_clock;
    std::mt19937_64 rng(0x77dcbe9c);
    Table t;
    t.header = {"N", "draws", "ms_per_call", "ns_per_weight"};
    std::vector<double> per_call(sizes.size());
    // Random sets with density one half; times are averaged over several
    // (set, degree) draws because single instances stabilize after wildly
    // different step counts.
    const int draws = 16;
    for (std::size_t s = 0; s < sizes.size(); ++s) {
        const long n = sizes[s];
        const int reps = std::max(1, static_cast<int>(2000000 / n));
        double total = 0;
        for (int i = 0; i < draws; ++i) {
            WeightSet e(static_cast<int>(n));
            for (long w = 0; w <= n; ++w)
                if (rng() & 1)
                    e.set(static_cast<int>(w));
            const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
            const auto t0 = Clock::now();
            for (int r = 0; r < reps; ++r) {
                const WeightSet c = fill_closure(d, e);
                if (c.n_max() != e.n_max())
                    throw std::logic_error("bench: closure universe changed");
            }
            total += std::chrono::duration<double>(Clock::now() - t0).count() /
                     static_cast<double>(reps);
        }
        const double dt = total / draws;
        per_call[s] = dt;
        char ms[32], ns[32];
        std::snprintf(ms, sizeof ms, "%.4f", dt * 1e3);
        std::snprintf(ns, sizeof ns, "%.2f", dt * 1e9 / static_cast<double>(n));
        t.rows.push_back({std::to_string(n), std::to_string(draws), ms, ns});
    }
    emit_table(t, false);
    // scaling contract between the largest two sizes
    if (sizes.size() >= 2) {
        const double ratio = per_call[sizes.size() - 1] / per_call[sizes.size() - 2];
        const double span = static_cast<double>(sizes[sizes.size() - 1]) /
                            static_cast<double>(sizes[sizes.size() - 2]);
        std::printf("scaling ratio (x%.0f input): %.2f\n", span, ratio);
        if (ratio >= 2.0 * span) {
            std::fprintf(stderr, "scaling looks superlinear (ratio %.2f >= %.2f)\n", ratio,
                         2.0 * span);
            return 3;
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact closures and covering numbers for weight-determined sets"};
    app.require_subcommand(1);

    std::string grid_spec, set_expr, mode = "zstar", kind;
    int n_max = 0, degree = 0, pair_index = 0, threads = 0;
    bool csv = false, json = false, naive = false, witness = false, all = false;
    bool slow = false, no_perf = false;
    std::vector<long> sizes{10000, 100000, 1000000};

    auto add_formats = [&](CLI::App* cmd) {
        cmd->add_flag("--csv", csv, "CSV output");
        cmd->add_flag("--json", json, "JSON output");
    };

    CLI::App* layers = app.add_subcommand("layers", "layer sizes of a grid");
    layers->add_option("--grid", grid_spec, "grid spec, e.g. 3,3,3 / cube:4 / 0,1,3|0,1,3")
        ->required();
    add_formats(layers);

    CLI::App* su2 = app.add_subcommand("su2", "strict unimodality test");
    su2->add_option("--grid", grid_spec)->required();
    add_formats(su2);

    CLI::App* lbar = app.add_subcommand("lbar", "interval-fill closure of a weight set");
    lbar->add_option("--N", n_max, "top weight")->required();
    lbar->add_option("--d", degree, "degree")->required();
    lbar->add_option("--set", set_expr, "weight set expression")->required();
    lbar->add_flag("--naive", naive, "use the naive fixpoint iteration");
    add_formats(lbar);

    CLI::App* admitting = app.add_subcommand("admitting", "admitting certificate scan");
    admitting->add_option("--N", n_max)->required();
    admitting->add_option("--d", degree)->required();
    admitting->add_option("--set", set_expr)->required();
    add_formats(admitting);

    CLI::App* closure = app.add_subcommand("closure", "brute-force closures via exact ranks");
    closure->add_option("--grid", grid_spec)->required();
    closure->add_option("--d", degree)->required();
    closure->add_option("--set", set_expr)->required();
    closure->add_option("--mode", mode, "zstar | z | hilbert");
    closure->add_flag("--witness", witness, "include the vanishing basis");
    add_formats(closure);

    CLI::App* covers_cmd = app.add_subcommand("covers", "cover numbers from the closed forms");
    covers_cmd->add_option("--grid", grid_spec)->required();
    covers_cmd->add_option("--set", set_expr);
    covers_cmd->add_flag("--all", all, "every proper weight set");
    covers_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
    add_formats(covers_cmd);

    CLI::App* hcover = app.add_subcommand("hcover", "cover numbers from the hyperplane oracle");
    hcover->add_option("--grid", grid_spec)->required();
    hcover->add_option("--set", set_expr);
    hcover->add_flag("--all", all, "every proper weight set");
    hcover->add_option("--threads", threads, "worker threads (0 = hardware)");
    add_formats(hcover);

    CLI::App* witness_cmd = app.add_subcommand("witness", "explicit verified witnesses");
    witness_cmd->add_option("--grid", grid_spec)->required();
    witness_cmd->add_option("--set", set_expr);
    witness_cmd->add_option("--kind", kind, "level | ppc | pairing | ehc-t2 | ehc-t1")
        ->required();
    witness_cmd->add_option("--i", pair_index, "pair count for --kind pairing");
    witness_cmd->add_flag("--json", json, "JSON output");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
    verify_cmd->add_flag("--slow", slow, "include the n=5 cube closure sweep");
    verify_cmd->add_flag("--no-perf", no_perf, "skip the timing criterion");
    verify_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

    CLI::App* bench = app.add_subcommand("bench", "interval-fill closure timing");
    bench->add_option("--sizes", sizes, "input sizes")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(layers))
            return cmd_layers(grid_spec, csv, json);
        if (app.got_subcommand(su2))
            return cmd_su2(grid_spec, csv, json);
        if (app.got_subcommand(lbar))
            return cmd_lbar(n_max, degree, set_expr, naive, csv, json);
        if (app.got_subcommand(admitting))
            return cmd_admitting(n_max, degree, set_expr, csv, json);
        if (app.got_subcommand(closure))
            return cmd_closure(grid_spec, degree, set_expr, mode, witness, csv, json);
        if (app.got_subcommand(covers_cmd)) {
            if (!all && set_expr.empty())
                throw CLI::ValidationError("covers needs --set or --all");
            return cmd_covers(grid_spec, set_expr, all, csv, json, threads);
        }
        if (app.got_subcommand(hcover)) {
            if (!all && set_expr.empty())
                throw CLI::ValidationError("hcover needs --set or --all");
            return cmd_hcover(grid_spec, set_expr, all, csv, json, threads);
        }
        if (app.got_subcommand(witness_cmd))
            return cmd_witness(grid_spec, set_expr, kind, pair_index, json);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(slow, no_perf, threads);
        if (app.got_subcommand(bench))
            return cmd_bench(sizes);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const unsupported_domain& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 1;
    } catch (const limit_exceeded& e) {
        std::cerr << "limit error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
