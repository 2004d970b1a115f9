#include "wiretap/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "wiretap/channel.hpp"
#include "wiretap/info.hpp"

namespace wiretap {
namespace {

constexpr double kRhoEveMax = 1.0 - 1e-6;
constexpr double kInf = std::numeric_limits<double>::infinity();

double logsumexp2(double la, double lb) {
    if (la == -kInf) return lb;
    if (lb == -kInf) return la;
    const double m = std::max(la, lb);
    return m + std::log(std::exp(la - m) + std::exp(lb - m));
}

// ln(q p^inv w); -inf terms drop out of the sums.
double log_term(double q, double p, double inv, double log_w) {
    if (q <= 0.0 || p <= 0.0) return -kInf;
    return std::log(q) + inv * std::log(p) + log_w;
}

// Shared body of Eqs. phi(rho|W_B) / phi(-rho|W_E): outer power s = 1 +/- rho.
double phi_signed(double s, const BinaryChannel& ch, double q, double log_w0, double log_w1) {
    const double inv = 1.0 / s;
    const double click = logsumexp2(log_term(q, ch.p1_given_1, inv, log_w1),
                                    log_term(1.0 - q, ch.p1_given_0, inv, log_w0));
    const double no_click = logsumexp2(log_term(q, 1.0 - ch.p1_given_1, inv, log_w1),
                                       log_term(1.0 - q, 1.0 - ch.p1_given_0, inv, log_w0));
    return -logsumexp2(s * click, s * no_click);
}

struct PhiContext {
    BinaryChannel bob;
    BinaryChannel eve;
    double power = 0.0;
    double pulse_cost = 0.0;  // n_a h f0 / slot [W]

    PhiContext(const PhysicalParams& params, const LinkGeometry& geom, double q, double n_a) {
        params.validate();
        geom.validate();
        detail::require(detail::is_probability(q), "q must be in [0,1]");
        detail::require(std::isfinite(n_a) && n_a >= 0, "n_a must be >= 0");
        auto [wb, we] = build_channels(params, geom, n_a);
        bob = wb;
        eve = we;
        power = params.power_watts;
        pulse_cost = n_a * params.photon_energy_j() / params.slot_seconds;
    }

    double bob_phi(double rho, double q, double r) const {
        return phi_signed(1.0 + rho, bob, q, r * power, r * (power - pulse_cost));
    }
    double eve_phi(double rho, double q, double r) const {
        rho = std::min(rho, kRhoEveMax);
        return phi_signed(1.0 - rho, eve, q, r * power, r * (power - pulse_cost));
    }
};

// Golden-section maximization on [lo, hi]; assumes the bracket came from a grid.
double golden_max(const std::function<double(double)>& f, double lo, double hi, double& arg) {
    constexpr double kGolden = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - kGolden * (b - a), d = a + kGolden * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < 80; ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kGolden * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kGolden * (b - a);
            fd = f(d);
        }
    }
    arg = 0.5 * (a + b);
    return f(arg);
}

struct InnerMax {
    double value = -kInf;
    double rho = 0.0;
};

// sup over rho on [rho_lo, rho_hi]: 200-point grid + golden refinement.
InnerMax sup_rho(const std::function<double(double)>& f, double rho_lo, double rho_hi) {
    constexpr int kGridPoints = 200;
    InnerMax best;
    for (int i = 0; i < kGridPoints; ++i) {
        const double rho = rho_lo + (rho_hi - rho_lo) * i / (kGridPoints - 1);
        const double v = f(rho);
        if (v > best.value) best = {v, rho};
    }
    const double step = (rho_hi - rho_lo) / (kGridPoints - 1);
    const double lo = std::max(rho_lo, best.rho - step);
    const double hi = std::min(rho_hi, best.rho + step);
    double arg = best.rho;
    const double refined = golden_max(f, lo, hi, arg);
    if (refined > best.value) best = {refined, arg};
    return best;
}

// sup over r >= 0: expanding doubling bracket from r0 = 1/P, then golden
// refinement around the best sample. Concavity in r is not assumed.
ExponentValue sup_rho_r(const std::function<InnerMax(double)>& inner, double power) {
    const double r0 = 1.0 / power;
    std::vector<double> rs{0.0};
    for (int k = 0; k <= 24; ++k) rs.push_back(r0 * std::pow(2.0, k));

    std::vector<InnerMax> vals(rs.size());
    std::size_t best_i = 0;
    int drops = 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        vals[i] = inner(rs[i]);
        count = i + 1;
        if (vals[i].value > vals[best_i].value) {
            best_i = i;
            drops = 0;
        } else if (++drops >= 3 && i >= 3) {
            break;
        }
    }

    const double lo = best_i > 0 ? rs[best_i - 1] : 0.0;
    const double hi = best_i + 1 < count ? rs[best_i + 1] : rs[best_i] * 2.0 + r0;
    InnerMax at_arg;
    double arg = rs[best_i];
    golden_max([&](double r) { return (at_arg = inner(r)).value; }, lo, hi, arg);

    ExponentValue out{vals[best_i].value, vals[best_i].rho, rs[best_i]};
    if (at_arg.value > out.value) out = {at_arg.value, at_arg.rho, arg};
    return out;
}

}  // namespace

double phi_bob(double rho, const PhysicalParams& params, const LinkGeometry& geom, double q,
               double n_a, double r) {
    detail::require(std::isfinite(rho) && rho >= 0.0 && rho <= 1.0, "phi_bob: rho must be in [0,1]");
    detail::require(std::isfinite(r) && r >= 0.0, "phi_bob: r must be >= 0");
    return PhiContext(params, geom, q, n_a).bob_phi(rho, q, r);
}

double phi_eve(double rho, const PhysicalParams& params, const LinkGeometry& geom, double q,
               double n_a, double r) {
    detail::require(std::isfinite(rho) && rho > 0.0 && rho < 1.0, "phi_eve: rho must be in (0,1)");
    detail::require(std::isfinite(r) && r >= 0.0, "phi_eve: r must be >= 0");
    return PhiContext(params, geom, q, n_a).eve_phi(rho, q, r);
}

ExponentValue error_exponent(const PhysicalParams& params, const LinkGeometry& geom, double q,
                             double n_a, const RatePair& rates) {
    rates.validate();
    const PhiContext ctx(params, geom, q, n_a);
    const double rate_nats = rates.r_b.nats() + rates.r_e.nats();
    auto inner = [&](double r) {
        return sup_rho([&](double rho) { return ctx.bob_phi(rho, q, r) - rho * rate_nats; }, 0.0,
                       1.0);
    };
    ExponentValue v = sup_rho_r(inner, ctx.power);
    v.value = std::max(v.value, 0.0) / kLn2;  // rho = 0 attains 0 exactly
    return v;
}

ExponentValue secrecy_exponent(const PhysicalParams& params, const LinkGeometry& geom, double q,
                               double n_a, const RateValue& r_e) {
    detail::require(r_e.nats() >= 0, "R_E must be >= 0");
    const PhiContext ctx(params, geom, q, n_a);
    const double rate_nats = r_e.nats();
    auto inner = [&](double r) {
        return sup_rho([&](double rho) { return ctx.eve_phi(rho, q, r) + rho * rate_nats; }, 1e-9,
                       kRhoEveMax);
    };
    ExponentValue v = sup_rho_r(inner, ctx.power);
    v.value = std::max(v.value, 0.0) / kLn2;
    return v;
}

FiniteLengthBound bounds_at_length(double f_c, double h_c, std::int64_t n) {
    detail::require(std::isfinite(f_c) && f_c >= 0, "f_c must be >= 0");
    detail::require(std::isfinite(h_c) && h_c >= 0, "h_c must be >= 0");
    detail::require(n >= 1, "n must be >= 1");
    const double nn = static_cast<double>(n);
    return {n, 2.0 * std::exp(-nn * f_c), 2.0 * std::exp(-nn * h_c)};
}

std::int64_t required_length(double f_c, double h_c, double eps_target, double delta_target) {
    detail::require(std::isfinite(f_c) && f_c >= 0, "f_c must be >= 0");
    detail::require(std::isfinite(h_c) && h_c >= 0, "h_c must be >= 0");
    detail::require(eps_target > 0 && eps_target <= 2.0, "eps target must be in (0, 2]");
    detail::require(delta_target > 0 && delta_target <= 2.0, "delta target must be in (0, 2]");

    double need = 0.0;
    for (auto [exponent, target] : {std::pair{f_c, eps_target}, std::pair{h_c, delta_target}}) {
        if (target >= 2.0) continue;
        if (exponent <= 0.0)
            throw InfeasibleError("exponent is 0: the requested bound is unattainable");
        need = std::max(need, std::log(2.0 / target) / exponent);
    }
    if (need > 4.6e18) throw InfeasibleError("required length exceeds the representable range");
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(need)));
}

BalancedRates balance_randomness_rate(const PhysicalParams& params, const LinkGeometry& geom,
                                      double q, double n_a, const RateValue& r_b) {
    detail::require(r_b.nats() >= 0, "R_B must be >= 0");
    const PhiContext ctx(params, geom, q, n_a);
    const double i_bob = mutual_information_nats(ctx.bob, q);
    const double i_eve = mutual_information_nats(ctx.eve, q);
    const double slot = params.slot_seconds;

    double lo = i_eve;                  // H_c = 0 here, F_c > 0
    double hi = i_bob - r_b.nats();     // F_c = 0 here, H_c > 0
    if (!(lo < hi))
        throw InfeasibleError(
            "no balanced randomness rate: I(X;Z) >= I(X;Y) - R_B at this operating point");

    auto diff = [&](double re_nats) {
        const RateValue re = RateValue::from_nats(re_nats, slot);
        const double f = error_exponent(params, geom, q, n_a, {r_b, re}).value;
        const double h = secrecy_exponent(params, geom, q, n_a, re).value;
        return f - h;
    };
    while (hi - lo > 1e-6 * hi) {
        const double mid = 0.5 * (lo + hi);
        (diff(mid) > 0.0 ? lo : hi) = mid;
    }
    const double re_star = 0.5 * (lo + hi);
    const RateValue re = RateValue::from_nats(re_star, slot);
    return {re, error_exponent(params, geom, q, n_a, {r_b, re}),
            secrecy_exponent(params, geom, q, n_a, re)};
}

}  // namespace wiretap
