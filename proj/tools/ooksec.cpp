// ooksec: capacity, secrecy-rate, and finite-length planning for an
// on-off-keyed free-space optical wiretap link.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "svg_plot.hpp"
#include "wiretap/channel.hpp"
#include "wiretap/exponents.hpp"
#include "wiretap/info.hpp"
#include "wiretap/montecarlo.hpp"
#include "wiretap/optimize.hpp"

using nlohmann::json;
using namespace wiretap;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
    // link configuration (user units)
    double power_mw = 10.0;
    double dcr_bob_cps = 10e3;
    double dcr_eve_cps = 1.0;
    double slot_ns = 1.0;
    double pulse_ns = 0.1;
    double f0_thz = 200.0;
    double eta_zy = 0.9;
    double alpha_db = 70.0;
    std::string alpha_range = "0:160:2";

    // strategy / rate inputs
    double q = 0.5;
    bool q_set = false;
    double na = 0.0;
    bool na_set = false;
    bool aux = false;
    double aux_a = -1.0;
    double aux_b = -1.0;
    double rb_bps = -1.0;
    double rb_frac = 0.5;
    double re_bps = -1.0;
    double eps = 1e-9;
    double delta = 1e-9;
    double floor_bps = 1.0;
    std::string mode = "secrecy";

    // simulation
    std::uint64_t seed = 12345;
    std::uint64_t slots = 1000000;

    // outputs
    std::string out_path;
    std::string svg_path;
    std::string json_path;
};

PhysicalParams to_params(const Options& o) {
    PhysicalParams p;
    p.power_watts = o.power_mw * 1e-3;
    p.dcr_bob_cps = o.dcr_bob_cps;
    p.dcr_eve_cps = o.dcr_eve_cps;
    p.slot_seconds = o.slot_ns * 1e-9;
    p.pulse_seconds = o.pulse_ns * 1e-9;
    p.optical_freq_hz = o.f0_thz * 1e12;
    p.validate();
    return p;
}

LinkGeometry to_geometry(const Options& o) {
    LinkGeometry g{o.alpha_db, o.eta_zy};
    g.validate();
    return g;
}

OptMode parse_mode(const std::string& mode, bool allow_capacity) {
    if (mode == "secrecy") return OptMode::secrecy;
    if (mode == "secrecy-aux") return OptMode::secrecy_aux;
    if (mode == "capacity" && allow_capacity) return OptMode::capacity;
    throw DomainError("unknown mode: " + mode);
}

// "start:stop:step" inclusive, or a single value.
std::vector<double> parse_range(const std::string& text) {
    auto number = [](const std::string& s) {
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used != s.size()) throw DomainError("trailing characters in number: " + s);
            return v;
        } catch (const std::logic_error&) {
            throw DomainError("not a number: " + s);
        }
    };
    const auto c1 = text.find(':');
    if (c1 == std::string::npos) return {number(text)};
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) throw DomainError("range must be start:stop:step");
    const double start = number(text.substr(0, c1));
    const double stop = number(text.substr(c1 + 1, c2 - c1 - 1));
    const double step = number(text.substr(c2 + 1));
    if (!(step > 0) || stop < start) throw DomainError("range must satisfy stop >= start, step > 0");
    std::vector<double> vals;
    for (double v = start; v <= stop + 1e-9 * step; v += step) vals.push_back(v);
    return vals;
}

std::string fmt_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json config_json(const Options& o, const std::string& command) {
    return json{{"command", command},
                {"power_mw", o.power_mw},
                {"dcr_bob_cps", o.dcr_bob_cps},
                {"dcr_eve_cps", o.dcr_eve_cps},
                {"slot_ns", o.slot_ns},
                {"pulse_ns", o.pulse_ns},
                {"f0_thz", o.f0_thz},
                {"eta_zy", o.eta_zy},
                {"alpha_db", o.alpha_db}};
}

json rate_json(const RateValue& r) {
    return json{{"bps", r.bps()}, {"bits_per_use", r.bits()}, {"nats_per_use", r.nats()}};
}

json opt_json(const OptResult& r) {
    json j{{"rate_bps", r.objective.bps()},
           {"rate_bits_per_use", r.objective.bits()},
           {"rate_nats_per_use", r.objective.nats()},
           {"q_star", r.strategy.q_on},
           {"n_a_star", r.strategy.n_a},
           {"n_b_star", r.n_b_star},
           {"n_e_star", r.n_e_star},
           {"power_used_w", r.power_used_w},
           {"boundary_active", r.boundary_active},
           {"regime", to_string(r.regime)},
           {"clamped_to_zero", r.clamped},
           {"raw_nats_per_use", r.raw_nats}};
    if (r.strategy.aux) {
        j["aux"] = json{{"p_xv_1_given_0", r.strategy.aux->a},
                        {"p_xv_1_given_1", r.strategy.aux->b},
                        {"p_xv_0_given_1", 1.0 - r.strategy.aux->b}};
    }
    return j;
}

void emit(const Options& o, const std::string& command, json result) {
    json doc{{"config", config_json(o, command)},
             {"result", std::move(result)},
             {"provenance", {{"version", kVersion}, {"seed", o.seed}}}};
    std::cout << doc.dump(2) << "\n";
    if (!o.json_path.empty()) {
        std::ofstream f(o.json_path);
        if (!f) throw std::runtime_error("cannot write " + o.json_path);
        f << doc.dump(2) << "\n";
    }
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << "alpha_db,rate_bps,rate_bits_per_use,q_star,n_a_star,n_b_star,power_used_w,"
         "boundary_active\n";
    for (const auto& row : rows) {
        f << fmt_full(row.attenuation_db) << ',' << fmt_full(row.opt.objective.bps()) << ','
          << fmt_full(row.opt.objective.bits()) << ',' << fmt_full(row.opt.strategy.q_on) << ','
          << fmt_full(row.opt.strategy.n_a) << ',' << fmt_full(row.opt.n_b_star) << ','
          << fmt_full(row.opt.power_used_w) << ',' << (row.opt.boundary_active ? "true" : "false")
          << '\n';
    }
}

// Operating point for the finite-length commands: explicit --q/--na when
// given, otherwise the secrecy-rate optimum.
struct OperatingPoint {
    double q = 0.0;
    double na = 0.0;
    RateValue secrecy_rate;
};

OperatingPoint operating_point(const Options& o, const PhysicalParams& params,
                               const LinkGeometry& geom) {
    OperatingPoint op;
    if (o.q_set && o.na_set) {
        op.q = o.q;
        op.na = o.na;
        const double nats = secrecy_objective_nats(params, geom, {op.q, op.na, {}});
        op.secrecy_rate = RateValue::from_nats(std::max(nats, 0.0), params.slot_seconds);
        return op;
    }
    const OptResult r = maximize_secrecy_rate(params, geom);
    op.q = o.q_set ? o.q : r.strategy.q_on;
    op.na = o.na_set ? o.na : r.strategy.n_a;
    op.secrecy_rate = r.objective;
    return op;
}

RateValue coding_rate(const Options& o, const OperatingPoint& op, double slot) {
    if (o.rb_bps >= 0) return RateValue::from_bps(o.rb_bps, slot);
    detail::require(o.rb_frac >= 0, "--rb-frac must be >= 0");
    return RateValue::from_nats(o.rb_frac * op.secrecy_rate.nats(), slot);
}

json operating_json(const OperatingPoint& op) {
    return json{{"q", op.q}, {"n_a", op.na}, {"secrecy_rate", rate_json(op.secrecy_rate)}};
}

json exponent_json(const ExponentValue& v) {
    return json{{"value", v.value}, {"rho", v.rho}, {"r", v.r}};
}

// ---------------------------------------------------------------- commands

void cmd_channel(const Options& o) {
    const PhysicalParams params = to_params(o);
    const LinkGeometry geom = to_geometry(o);
    detail::require(o.na_set, "channel: --na is required");
    auto [bob, eve] = build_channels(params, geom, o.na);
    const double q = o.q;
    json result{
        {"w_b", {{"p1_given_0", bob.p1_given_0}, {"p1_given_1", bob.p1_given_1}}},
        {"w_e", {{"p1_given_0", eve.p1_given_0}, {"p1_given_1", eve.p1_given_1}}},
        {"n_a", o.na},
        {"q", q},
        {"mi_bob", rate_json(mutual_information(bob, q, params.slot_seconds))},
        {"mi_eve", rate_json(mutual_information(eve, q, params.slot_seconds))},
        {"power_used_w", power_used(q, o.na, params)},
        {"eta_y", geom.eta_bob()},
        {"eta_z", geom.eta_eve()}};
    emit(o, "channel", std::move(result));
}

void cmd_point_opt(const Options& o, OptMode mode, const char* name) {
    const PhysicalParams params = to_params(o);
    const LinkGeometry geom = to_geometry(o);
    emit(o, name, opt_json(maximize_rate(params, geom, mode)));
}

void cmd_threshold(const Options& o) {
    const PhysicalParams params = to_params(o);
    const OptMode mode = parse_mode(o.mode, false);
    const std::optional<double> th = find_zero_threshold(params, o.eta_zy, mode, o.floor_bps);
    json result{{"mode", to_string(mode)},
                {"floor_bps", o.floor_bps},
                {"threshold_db", th ? json(*th) : json(nullptr)}};
    emit(o, "threshold", std::move(result));
}

void cmd_sweep(const Options& o) {
    const PhysicalParams params = to_params(o);
    const OptMode mode = parse_mode(o.mode, true);
    const std::vector<double> alphas = parse_range(o.alpha_range);
    const std::vector<SweepRow> rows = sweep_attenuation(params, alphas, mode, o.eta_zy);

    if (!o.out_path.empty()) write_sweep_csv(o.out_path, rows);
    if (!o.svg_path.empty()) {
        svgplot::Series s{to_string(mode), {}};
        for (const auto& row : rows) s.points.emplace_back(row.attenuation_db, row.opt.objective.bps());
        svgplot::PlotSpec spec{"Optimized rate vs attenuation", "Attenuation [dB]", "Rate [bps]",
                               false, true, {std::move(s)}};
        svgplot::write_line_plot(o.svg_path, spec);
    }
    json result{{"mode", to_string(mode)},
                {"rows", rows.size()},
                {"alpha_first_db", rows.front().attenuation_db},
                {"alpha_last_db", rows.back().attenuation_db},
                {"rate_first_bps", rows.front().opt.objective.bps()},
                {"rate_last_bps", rows.back().opt.objective.bps()}};
    if (!o.out_path.empty()) result["csv"] = o.out_path;
    if (!o.svg_path.empty()) result["svg"] = o.svg_path;
    emit(o, "sweep", std::move(result));
}

void cmd_exponents(const Options& o) {
    const PhysicalParams params = to_params(o);
    const LinkGeometry geom = to_geometry(o);
    detail::require(o.re_bps >= 0, "exponents: --re-bps is required");
    const OperatingPoint op = operating_point(o, params, geom);
    const RateValue rb = coding_rate(o, op, params.slot_seconds);
    const RateValue re = RateValue::from_bps(o.re_bps, params.slot_seconds);
    ExponentReport report;
    report.q = op.q;
    report.n_a = op.na;
    report.f_c = error_exponent(params, geom, op.q, op.na, {rb, re});
    report.h_c = secrecy_exponent(params, geom, op.q, op.na, re);
    emit(o, "exponents",
         json{{"operating_point", operating_json(op)},
              {"r_b", rate_json(rb)},
              {"r_e", rate_json(re)},
              {"f_c", exponent_json(report.f_c)},
              {"h_c", exponent_json(report.h_c)}});
}

void cmd_balance(const Options& o) {
    const PhysicalParams params = to_params(o);
    const LinkGeometry geom = to_geometry(o);
    const OperatingPoint op = operating_point(o, params, geom);
    const RateValue rb = coding_rate(o, op, params.slot_seconds);
    const BalancedRates bal = balance_randomness_rate(params, geom, op.q, op.na, rb);
    emit(o, "balance",
         json{{"operating_point", operating_json(op)},
              {"r_b", rate_json(rb)},
              {"r_e_star", rate_json(bal.r_e_star)},
              {"f_c", exponent_json(bal.f_c)},
              {"h_c", exponent_json(bal.h_c)}});
}

void cmd_codelength(const Options& o) {
    const PhysicalParams params = to_params(o);
    const LinkGeometry geom = to_geometry(o);
    const OperatingPoint op = operating_point(o, params, geom);
    const RateValue rb = coding_rate(o, op, params.slot_seconds);
    const BalancedRates bal = balance_randomness_rate(params, geom, op.q, op.na, rb);
    const std::int64_t n = required_length(bal.f_c.value, bal.h_c.value, o.eps, o.delta);

    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path);
        if (!f) throw std::runtime_error("cannot write " + o.out_path);
        f << "n,eps_bound,delta_bound\n";
        for (int i = 0; i <= 50; ++i) {
            const auto len = static_cast<std::int64_t>(std::pow(10.0, 2.0 + 5.0 * i / 50.0));
            const FiniteLengthBound b = bounds_at_length(bal.f_c.value, bal.h_c.value, len);
            f << len << ',' << fmt_full(b.eps_bound) << ',' << fmt_full(b.delta_bound) << '\n';
        }
    }
    if (!o.svg_path.empty()) {
        svgplot::Series se{"error bound", {}}, sd{"leak bound", {}};
        for (int i = 0; i <= 50; ++i) {
            const auto len = static_cast<std::int64_t>(std::pow(10.0, 2.0 + 5.0 * i / 50.0));
            const FiniteLengthBound b = bounds_at_length(bal.f_c.value, bal.h_c.value, len);
            se.points.emplace_back(static_cast<double>(len), b.eps_bound);
            sd.points.emplace_back(static_cast<double>(len), b.delta_bound);
        }
        svgplot::PlotSpec spec{"Finite-length bounds", "Code length n", "Upper bound",
                               true, true, {std::move(se), std::move(sd)}};
        svgplot::write_line_plot(o.svg_path, spec);
    }

    const FiniteLengthBound at_n = bounds_at_length(bal.f_c.value, bal.h_c.value, n);
    json result{{"operating_point", operating_json(op)},
                {"r_b", rate_json(rb)},
                {"r_e_star", rate_json(bal.r_e_star)},
                {"f_c", exponent_json(bal.f_c)},
                {"h_c", exponent_json(bal.h_c)},
                {"eps_target", o.eps},
                {"delta_target", o.delta},
                {"n_required", n},
                {"duration_s", static_cast<double>(n) * params.slot_seconds},
                {"eps_bound_at_n", at_n.eps_bound},
                {"delta_bound_at_n", at_n.delta_bound}};
    if (!o.out_path.empty()) result["csv"] = o.out_path;
    if (!o.svg_path.empty()) result["svg"] = o.svg_path;
    emit(o, "codelength", std::move(result));
}

void cmd_simulate(const Options& o) {
    const PhysicalParams params = to_params(o);
    const LinkGeometry geom = to_geometry(o);

    InputStrategy strategy;
    if (o.aux_a >= 0 || o.aux_b >= 0) {
        detail::require(o.aux_a >= 0 && o.aux_b >= 0,
                        "simulate: --aux-a and --aux-b must be given together");
        const OperatingPoint op = operating_point(o, params, geom);
        strategy = {op.q, op.na, AuxChannel{o.aux_a, o.aux_b}};
    } else if (o.aux) {
        const OptResult r = maximize_secrecy_capacity(params, geom);
        strategy = r.strategy;
        if (o.q_set) strategy.q_on = o.q;
        if (o.na_set) strategy.n_a = o.na;
    } else {
        const OperatingPoint op = operating_point(o, params, geom);
        strategy = {op.q, op.na, {}};
    }

    const SimulationResult sim = simulate_clicks(params, geom, strategy, o.slots, o.seed);
    auto [wb, we] = build_channels(params, geom, strategy.n_a);
    if (strategy.aux) {
        wb = concatenate(*strategy.aux, wb);
        we = concatenate(*strategy.aux, we);
    }
    const MiEstimate mi_bob = empirical_mutual_information(sim.bob, params.slot_seconds);
    const MiEstimate mi_eve = empirical_mutual_information(sim.eve, params.slot_seconds);

    auto tally_json = [](const ClickTally& t) {
        return json{{"n00", t.counts[0][0]},
                    {"n01", t.counts[0][1]},
                    {"n10", t.counts[1][0]},
                    {"n11", t.counts[1][1]},
                    {"trials_0", t.trials_for(0)},
                    {"trials_1", t.trials_for(1)}};
    };
    auto empirical = [](const ClickTally& t) {
        return json{
            {"p1_given_0", static_cast<double>(t.counts[0][1]) / std::max<std::uint64_t>(1, t.trials_for(0))},
            {"p1_given_1", static_cast<double>(t.counts[1][1]) / std::max<std::uint64_t>(1, t.trials_for(1))}};
    };

    json strat{{"q", strategy.q_on}, {"n_a", strategy.n_a}};
    if (strategy.aux) strat["aux"] = json{{"a", strategy.aux->a}, {"b", strategy.aux->b}};

    emit(o, "simulate",
         json{{"strategy", strat},
              {"slots", o.slots},
              {"rng", std::string(kRngAlgorithm)},
              {"bob",
               {{"tally", tally_json(sim.bob)},
                {"empirical", empirical(sim.bob)},
                {"analytic", {{"p1_given_0", wb.p1_given_0}, {"p1_given_1", wb.p1_given_1}}},
                {"mi", rate_json(mi_bob.value)},
                {"mi_std_error_nats", mi_bob.std_error_nats}}},
              {"eve",
               {{"tally", tally_json(sim.eve)},
                {"empirical", empirical(sim.eve)},
                {"analytic", {{"p1_given_0", we.p1_given_0}, {"p1_given_1", we.p1_given_1}}},
                {"mi", rate_json(mi_eve.value)},
                {"mi_std_error_nats", mi_eve.std_error_nats}}}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"OOK free-space-optical wiretap link planner"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool ranged_alpha = false) {
        sub->add_option("--power-mw", o.power_mw, "available average power [mW]")
            ->capture_default_str();
        sub->add_option("--dcr-bob-cps", o.dcr_bob_cps, "Bob dark-count rate [cps]")
            ->capture_default_str();
        sub->add_option("--dcr-eve-cps", o.dcr_eve_cps, "Eve dark-count rate [cps]")
            ->capture_default_str();
        sub->add_option("--slot-ns", o.slot_ns, "detector slot width [ns]")->capture_default_str();
        sub->add_option("--pulse-ns", o.pulse_ns, "laser pulse width [ns]")->capture_default_str();
        sub->add_option("--f0-thz", o.f0_thz, "optical carrier frequency [THz]")
            ->capture_default_str();
        sub->add_option("--eta-zy", o.eta_zy, "relative transmittance eta_z/eta_y")
            ->capture_default_str();
        if (ranged_alpha)
            sub->add_option("--alpha-db", o.alpha_range, "attenuation range start:stop:step [dB]")
                ->capture_default_str();
        else
            sub->add_option("--alpha-db", o.alpha_db, "attenuation [dB]")->capture_default_str();
        sub->add_option("--json", o.json_path, "also write the JSON document to this file");
        sub->add_option("--out", o.out_path, "CSV output path");
        sub->add_option("--svg", o.svg_path, "SVG plot output path");
    };
    auto add_point = [&](CLI::App* sub) {
        sub->add_option("--q", o.q, "on-probability")->each([&](const std::string&) { o.q_set = true; });
        sub->add_option("--na", o.na, "photons per on-pulse")
            ->each([&](const std::string&) { o.na_set = true; });
    };
    auto add_rates = [&](CLI::App* sub) {
        sub->add_option("--rb-bps", o.rb_bps, "coding rate R_B [bps]");
        sub->add_option("--rb-frac", o.rb_frac, "R_B as a fraction of the secrecy rate")
            ->capture_default_str();
    };

    CLI::App* channel = app.add_subcommand("channel", "channel matrices at a given pulse brightness");
    add_common(channel);
    add_point(channel);

    CLI::App* capacity = app.add_subcommand("capacity", "power-constrained channel capacity");
    add_common(capacity);
    CLI::App* secrecy = app.add_subcommand("secrecy-rate", "secrecy rate without the auxiliary channel");
    add_common(secrecy);
    CLI::App* scap = app.add_subcommand("secrecy-capacity", "secrecy capacity with the auxiliary channel");
    add_common(scap);

    CLI::App* threshold = app.add_subcommand("threshold", "largest attenuation with usable secrecy");
    add_common(threshold);
    threshold->add_option("--mode", o.mode, "secrecy | secrecy-aux")->capture_default_str();
    threshold->add_option("--floor-bps", o.floor_bps, "rate floor defining 'usable'")
        ->capture_default_str();

    CLI::App* sweep = app.add_subcommand("sweep", "rate vs attenuation table");
    add_common(sweep, true);
    sweep->add_option("--mode", o.mode, "capacity | secrecy | secrecy-aux")->capture_default_str();

    CLI::App* exponents = app.add_subcommand("exponents", "error and secrecy exponents at given rates");
    add_common(exponents);
    add_point(exponents);
    add_rates(exponents);
    exponents->add_option("--re-bps", o.re_bps, "randomness rate R_E [bps]");

    CLI::App* balance = app.add_subcommand("balance", "randomness rate balancing both exponents");
    add_common(balance);
    add_point(balance);
    add_rates(balance);

    CLI::App* codelength = app.add_subcommand("codelength", "required code length for target bounds");
    add_common(codelength);
    add_point(codelength);
    add_rates(codelength);
    codelength->add_option("--eps", o.eps, "decoding-error target")->capture_default_str();
    codelength->add_option("--delta", o.delta, "leaked-information target")->capture_default_str();

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo click simulation");
    add_common(simulate);
    add_point(simulate);
    simulate->add_flag("--aux", o.aux, "simulate the secrecy-capacity optimal auxiliary channel");
    simulate->add_option("--aux-a", o.aux_a, "auxiliary flip probability P(X=1|V=0)");
    simulate->add_option("--aux-b", o.aux_b, "auxiliary keep probability P(X=1|V=1)");
    simulate->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
    simulate->add_option("--slots", o.slots, "number of simulated slots")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (channel->parsed()) cmd_channel(o);
        if (capacity->parsed()) cmd_point_opt(o, OptMode::capacity, "capacity");
        if (secrecy->parsed()) cmd_point_opt(o, OptMode::secrecy, "secrecy-rate");
        if (scap->parsed()) cmd_point_opt(o, OptMode::secrecy_aux, "secrecy-capacity");
        if (threshold->parsed()) cmd_threshold(o);
        if (sweep->parsed()) cmd_sweep(o);
        if (exponents->parsed()) cmd_exponents(o);
        if (balance->parsed()) cmd_balance(o);
        if (codelength->parsed()) cmd_codelength(o);
        if (simulate->parsed()) cmd_simulate(o);
    } catch (const DomainError& e) {
        std::cout << json{{"error", {{"type", "domain"}, {"message", e.what()}}}}.dump(2) << "\n";
        return 2;
    } catch (const InfeasibleError& e) {
        std::cout << json{{"error", {{"type", "infeasible"}, {"message", e.what()}}}}.dump(2)
                  << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << json{{"error", {{"type", "runtime"}, {"message", e.what()}}}}.dump(2) << "\n";
        return 1;
    }
    return 0;
}
