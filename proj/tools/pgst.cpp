// pgst: decide, simulate, and certify pretty good state transfer on
// uniformly coupled path chains.
//
// Verbs:
//   classify N | A..B   arithmetic verdict with witnesses, JSON lines
//   curve N             fidelity samples, CSV
//   figure1             earliest-crossing table for n = 2..7, CSV or SVG
//   certify N           positive or negative certificate, JSON
//   control N           walk-matrix controllability and cospectrality, JSON

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgst/classifier.hpp"
#include "pgst/control.hpp"
#include "pgst/evolution.hpp"
#include "pgst/relations.hpp"
#include "pgst/search.hpp"
#include "pgst/spectrum.hpp"

using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;
constexpr int kExitNoConvergence = 5;

struct RunConfig {
    double epsilon = 0.01;
    double t_max = 0.0;  // 0 = adaptive / verb default
    double grid_step = 0.0;  // 0 = per-spectrum default
    std::string format = "csv";
    std::string out_path;
    int digits = 12;
};

std::string fmt(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

// All output funnels through here so --out failures map to one exit code.
void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw std::ios_base::failure("cannot open " + cfg.out_path);
    f << text;
    if (!f.good()) throw std::ios_base::failure("write failed: " + cfg.out_path);
}

json classification_json(const pgst::Classification& c) {
    json j;
    j["n"] = c.n;
    j["pgst"] = c.pgst;
    if (c.form) {
        j["form"] = pgst::to_string(*c.form);
        if (*c.form == pgst::PgstForm::PowerOfTwoMinusOne)
            j["witness"] = {{"m", c.form_param}};
        else
            j["witness"] = {{"p", c.form_param}};
    } else {
        j["form"] = nullptr;
        j["witness"] = {{"m", c.witness->m}, {"p", c.witness->p}};
    }
    j["theta_degree"] = c.theta_degree;
    if (c.theta_degree_flagged) j["theta_degree_flagged"] = true;
    return j;
}

int cmd_classify(const RunConfig& cfg, const std::string& range) {
    std::uint64_t lo = 0, hi = 0;
    const auto dots = range.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoull(range);
        } else {
            lo = std::stoull(range.substr(0, dots));
            hi = std::stoull(range.substr(dots + 2));
        }
    } catch (const std::exception&) {
        std::cerr << "malformed n or range: " << range << "\n";
        return kExitUsage;
    }
    if (hi < lo) {
        std::cerr << "empty range: " << range << "\n";
        return kExitUsage;
    }
    std::ostringstream out;
    for (std::uint64_t n = lo; n <= hi; ++n)
        out << classification_json(pgst::classify(n)).dump() << "\n";
    emit(cfg, out.str());
    return 0;
}

int cmd_curve(const RunConfig& cfg, int n) {
    pgst::PathSpectrum spec(n);
    const double t_max = cfg.t_max > 0 ? cfg.t_max : 100.0;
    const double step = cfg.grid_step > 0 ? cfg.grid_step : pgst::default_grid_step(spec);
    if (!(t_max > 0) || !(step > 0)) throw std::domain_error("t_max and grid_step must be positive");
    std::ostringstream out;
    out << "t,fidelity\n";
    const long long rows = static_cast<long long>(std::floor(t_max / step + 1e-9));
    for (long long i = 0; i <= rows; ++i) {
        const double t = i * step;
        out << fmt(t, cfg.digits) << "," << fmt(pgst::fidelity(spec, t), cfg.digits) << "\n";
    }
    emit(cfg, out.str());
    return 0;
}

std::string figure1_svg(const std::vector<pgst::Figure1Row>& rows, int digits) {
    // Minimal self-contained chart: axes, polyline, point markers.
    const double w = 480, h = 320, ml = 60, mr = 20, mt = 20, mb = 40;
    double ymin = 1e300, ymax = -1e300;
    for (const auto& r : rows)
        if (r.converged) {
            ymin = std::min(ymin, r.log_t_star);
            ymax = std::max(ymax, r.log_t_star);
        }
    if (ymax <= ymin) ymax = ymin + 1;
    auto x_of = [&](double n) { return ml + (n - 2.0) / 5.0 * (w - ml - mr); };
    auto y_of = [&](double v) { return h - mb - (v - ymin) / (ymax - ymin) * (h - mt - mb); };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    s << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr << "\" y2=\""
      << h - mb << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << h - mb
      << "\" stroke=\"black\"/>\n";
    s << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
    for (const auto& r : rows)
        if (r.converged) s << x_of(r.n) << "," << y_of(r.log_t_star) << " ";
    s << "\"/>\n";
    for (const auto& r : rows) {
        if (!r.converged) continue;
        s << "<circle cx=\"" << x_of(r.n) << "\" cy=\"" << y_of(r.log_t_star)
          << "\" r=\"3\" fill=\"steelblue\"/>\n";
        s << "<text x=\"" << x_of(r.n) << "\" y=\"" << h - mb + 16
          << "\" font-size=\"11\" text-anchor=\"middle\">" << r.n << "</text>\n";
    }
    s << "<text x=\"" << ml - 8 << "\" y=\"" << y_of(ymin)
      << "\" font-size=\"10\" text-anchor=\"end\">" << fmt(ymin, digits > 4 ? 4 : digits)
      << "</text>\n";
    s << "<text x=\"" << ml - 8 << "\" y=\"" << y_of(ymax)
      << "\" font-size=\"10\" text-anchor=\"end\">" << fmt(ymax, digits > 4 ? 4 : digits)
      << "</text>\n";
    s << "<text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << h - 6
      << "\" font-size=\"11\" text-anchor=\"middle\">n</text>\n";
    s << "</svg>\n";
    return s.str();
}

int cmd_figure1(const RunConfig& cfg) {
    const auto rows = pgst::figure1_table(cfg.epsilon);
    bool any_ok = false;
    for (const auto& r : rows) any_ok = any_ok || r.converged;
    if (cfg.format == "svg") {
        emit(cfg, figure1_svg(rows, cfg.digits));
    } else {
        std::ostringstream out;
        out << "n,t_star,log_t_star\n";
        for (const auto& r : rows) {
            if (r.converged)
                out << r.n << "," << fmt(r.t_star, cfg.digits) << ","
                    << fmt(r.log_t_star, cfg.digits) << "\n";
            else
                out << r.n << ",error,error\n";
        }
        emit(cfg, out.str());
    }
    return any_ok ? 0 : kExitNoConvergence;
}

int cmd_certify(const RunConfig& cfg, int n) {
    const auto c = pgst::classify(n);
    json j = classification_json(c);
    if (!c.pgst) {
        const auto w = pgst::dependence_witness(n);
        json coeffs = json::object();
        for (const auto& [r, cr] : w.coefficients) coeffs[std::to_string(r)] = cr;
        j["dependence"] = {{"m", w.m}, {"p", w.p}, {"coefficients", coeffs},
                           {"residual", w.residual}};
        const int k = (n - 2) / 3;
        if (n >= 8 && 3 * k + 2 == n && k % 2 == 0) {
            const auto b = pgst::bound_report(n);
            j["bound_report"] = {
                {"k", b.k},
                {"a1", b.a1},
                {"ak", b.ak},
                {"ak2", b.ak2},
                {"an", b.an},
                {"identity_residual", b.identity_residual},
                {"deficiencies", {b.deficiencies[0], b.deficiencies[1], b.deficiencies[2]}},
                {"claimed_ceiling", b.claimed_ceiling},
                {"case_a_bound", b.case_a_bound},
                {"case_b_bound_raw", b.case_b_bound_raw},
                {"case_b_bound_simplified", b.case_b_bound_simplified},
                {"case_c_bound", b.case_c_bound},
            };
        }
    } else {
        pgst::PathSpectrum spec(n);
        const double step =
            cfg.grid_step > 0 ? cfg.grid_step : pgst::default_grid_step(spec);
        pgst::SearchResult res;
        for (double t_max = cfg.t_max > 0 ? cfg.t_max : 64.0; t_max <= 1e7; t_max *= 2.0) {
            res = pgst::earliest_time(spec, cfg.epsilon, t_max, step);
            if (res.converged || cfg.t_max > 0) break;
        }
        if (!res.converged) {
            j["search"] = {{"converged", false}, {"scan_ceiling", res.scan_ceiling}};
            emit(cfg, j.dump() + "\n");
            return kExitNoConvergence;
        }
        j["search"] = {{"converged", true},
                       {"t", res.t_star},
                       {"fidelity", res.fidelity_at_t},
                       {"epsilon", res.epsilon},
                       {"phase_residual", res.phase_residual}};
    }
    emit(cfg, j.dump() + "\n");
    return 0;
}

int cmd_control(const RunConfig& cfg, int n, const std::vector<int>& subset) {
    const auto w = pgst::walk_matrix(n, subset);
    json j;
    j["n"] = n;
    j["subset"] = w.subset;
    j["controllable"] = (w.determinant != 0);
    j["determinant"] = w.determinant.get_str();  // decimal string, arbitrary size
    if (w.subset.size() == 1) {
        const int k = w.subset.front();
        const int mirror = n + 1 - k;
        j["cospectral_pair"] = {{"u", k},
                                {"v", mirror},
                                {"cospectral", pgst::cospectral_diagonal(n, k, mirror)},
                                {"strongly_cospectral", pgst::strongly_cospectral(n, k, mirror)}};
        const auto imp = pgst::internal_transfer_implication(n, k);
        j["transfer_implication"] = {{"central_vertex", imp.central_vertex},
                                     {"implied", imp.implied},
                                     {"flip_commutation_verified", imp.flip_commutation_verified}};
    }
    emit(cfg, j.dump() + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pretty good state transfer on uniformly coupled chains"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    RunConfig cfg;
    app.add_option("--epsilon", cfg.epsilon, "fidelity tolerance")->check(CLI::Range(1e-12, 0.999999));
    app.add_option("--t-max", cfg.t_max, "scan horizon (0 = adaptive)");
    app.add_option("--grid-step", cfg.grid_step, "scan step (0 = automatic)");
    app.add_option("--format", cfg.format, "csv|json|svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    app.add_option("--out", cfg.out_path, "output path (default stdout)");
    app.add_option("--digits", cfg.digits, "significant digits")->check(CLI::Range(6, 17));

    std::string range;
    auto* c_classify = app.add_subcommand("classify", "PGST verdict for n or a..b range");
    c_classify->add_option("n", range, "chain length or inclusive range a..b")->required();

    int curve_n = 0;
    auto* c_curve = app.add_subcommand("curve", "fidelity curve CSV");
    c_curve->add_option("n", curve_n, "chain length")->required();

    auto* c_fig = app.add_subcommand("figure1", "earliest-crossing table, n = 2..7");

    int certify_n = 0;
    auto* c_certify = app.add_subcommand("certify", "positive/negative certificate");
    c_certify->add_option("n", certify_n, "chain length")->required();

    int control_n = 0;
    std::vector<int> subset;
    auto* c_control = app.add_subcommand("control", "walk-matrix controllability");
    c_control->add_option("n", control_n, "chain length")->required();
    c_control->add_option("--vertex,--subset", subset, "vertex or vertex subset")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitUsage;
    }

    try {
        if (cfg.t_max < 0) throw std::domain_error("t_max must be nonnegative");
        if (cfg.grid_step < 0) throw std::domain_error("grid_step must be nonnegative");
        if (*c_classify) return cmd_classify(cfg, range);
        if (*c_curve) return cmd_curve(cfg, curve_n);
        if (*c_fig) return cmd_figure1(cfg);
        if (*c_certify) return cmd_certify(cfg, certify_n);
        if (*c_control) return cmd_control(cfg, control_n, subset);
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
