#include "wiretap/optimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "wiretap/channel.hpp"

namespace wiretap {
namespace {

constexpr double kBoundaryRelTol = 1e-6;   // |power - P| / P below this counts as active
constexpr double kValueTieTol = 1e-12;     // objectives closer than this are "equal"
constexpr double kPlateauRelTol = 1e-4;    // capacity insensitive to doubling P -> plateau

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double logit(double p) {
    p = std::clamp(p, 1e-15, 1.0 - 1e-15);  // keep both endpoints representable
    return std::log(p / (1.0 - p));
}

// Channel row with its per-symbol output entropies cached.
struct EntRow {
    double a = 0.0, b = 0.0;  // p(1|0), p(1|1)
    double h_a = 0.0, h_b = 0.0;

    static EntRow from(const BinaryChannel& ch) {
        return {ch.p1_given_0, ch.p1_given_1, binary_entropy(ch.p1_given_0),
                binary_entropy(ch.p1_given_1)};
    }
    double mi(double q) const {
        const double p_on = std::clamp((1.0 - q) * a + q * b, 0.0, 1.0);
        return std::max(binary_entropy(p_on) - (1.0 - q) * h_a - q * h_b, 0.0);
    }
    EntRow concat(double ca, double cb) const {
        return from(BinaryChannel{std::clamp((1.0 - ca) * a + ca * b, 0.0, 1.0),
                                  std::clamp((1.0 - cb) * a + cb * b, 0.0, 1.0)});
    }
};

struct Candidate {
    double value = -std::numeric_limits<double>::infinity();
    double q = 0.5, n_a = 0.0, a = 0.0, b = 1.0;
};

bool better(const Candidate& lhs, const Candidate& rhs) {
    if (lhs.value != rhs.value) {
        if (!std::isfinite(lhs.value) || !std::isfinite(rhs.value)) return lhs.value > rhs.value;
        const double tol =
            kValueTieTol * std::max({1.0, std::fabs(lhs.value), std::fabs(rhs.value)});
        if (lhs.value > rhs.value + tol) return true;
        if (rhs.value > lhs.value + tol) return false;
    }
    if (lhs.n_a != rhs.n_a) return lhs.n_a < rhs.n_a;  // prefer lower transmit power
    return lhs.q < rhs.q;
}

class Problem {
  public:
    Problem(const PhysicalParams& params, const LinkGeometry& geom, OptMode mode)
        : params_(params), geom_(geom), mode_(mode),
          photon_budget_(params.max_photons_per_slot()) {
        na_grid_.reserve(301);
        for (int i = 0; i <= 300; ++i) na_grid_.push_back(std::pow(10.0, -3.0 + i / 20.0));
        bob_.reserve(na_grid_.size());
        eve_.reserve(na_grid_.size());
        for (double na : na_grid_) {
            auto [wb, we] = build_channels(params_, geom_, na);
            bob_.push_back(EntRow::from(wb));
            eve_.push_back(EntRow::from(we));
        }
        // q: log-spaced up to 0.1, then linear up to 1
        for (int j = 0; j <= 64; ++j) q_grid_.push_back(std::pow(10.0, -9.0 + j / 8.0));
        for (int k = 1; k <= 36; ++k) q_grid_.push_back(0.1 + 0.025 * k);
    }

    OptMode mode() const { return mode_; }
    bool has_aux() const { return mode_ == OptMode::secrecy_aux; }
    bool boundary_only() const { return mode_ == OptMode::capacity; }
    int dim() const { return has_aux() ? 4 : (boundary_only() ? 1 : 2); }

    double q_x(double q, double a, double b) const {
        return has_aux() ? (1.0 - q) * a + q * b : q;
    }
    double na_cap(double qx) const {
        return qx > 0.0 ? photon_budget_ / qx : std::numeric_limits<double>::infinity();
    }

    // Objective at an already-feasible point.
    double eval(double q, double n_a, double a, double b) const {
        auto [wb, we] = build_channels(params_, geom_, n_a);
        EntRow rb = EntRow::from(wb);
        if (mode_ == OptMode::capacity) return rb.mi(q);
        EntRow re = EntRow::from(we);
        if (has_aux()) {
            rb = rb.concat(a, b);
            re = re.concat(a, b);
        }
        return rb.mi(q) - re.mi(q);
    }

    // Feasibility projection: pull n_a down to the power boundary if needed.
    // The capacity objective is strictly increasing in n_a, so its optimum
    // always sits on the boundary and the search pins n_a there.
    double project(double q, double n_a, double a, double b) const {
        const double cap = na_cap(q_x(q, a, b));
        if (boundary_only()) return std::isfinite(cap) ? cap : n_a;
        return std::min(n_a, cap);
    }

    std::vector<Candidate> coarse_seeds(int top_k) const {
        std::vector<Candidate> all;
        if (has_aux()) {
            std::vector<double> a_grid{0.0};
            for (int m = 0; m <= 11; ++m) a_grid.push_back(std::pow(10.0, -6.0 + 0.5 * m));
            const std::array<double, 2> b_grid{1.0, 0.999};
            for (double b : b_grid)
                for (double a : a_grid) scan_column(a, b, all);
        } else {
            scan_column(0.0, 1.0, all);
        }
        std::sort(all.begin(), all.end(), better);
        if (static_cast<int>(all.size()) > top_k) all.resize(top_k);
        return all;
    }

  private:
    // Best point over (q, n_a) at fixed aux entries, appended per q so the
    // refinement sees distinct basins rather than five neighbors of one peak.
    void scan_column(double a, double b, std::vector<Candidate>& out) const {
        std::vector<EntRow> cb, ce;
        const bool aux = has_aux();
        if (aux) {
            cb.reserve(bob_.size());
            ce.reserve(eve_.size());
            for (std::size_t i = 0; i < bob_.size(); ++i) {
                cb.push_back(bob_[i].concat(a, b));
                ce.push_back(eve_[i].concat(a, b));
            }
        }
        const std::vector<EntRow>& rb = aux ? cb : bob_;
        const std::vector<EntRow>& re = aux ? ce : eve_;
        for (double q : q_grid_) {
            const double cap = na_cap(q_x(q, a, b));
            Candidate best;
            if (!boundary_only()) {
                for (std::size_t i = 0; i < na_grid_.size(); ++i) {
                    const double na = na_grid_[i];
                    if (na > cap) break;
                    const double v = rb[i].mi(q) - re[i].mi(q);
                    Candidate c{v, q, na, a, b};
                    if (better(c, best)) best = c;
                }
            }
            if (std::isfinite(cap) && cap >= 0.0) {
                Candidate c{eval(q, cap, a, b), q, cap, a, b};
                if (better(c, best)) best = c;
            }
            if (std::isfinite(best.value)) out.push_back(best);
        }
    }

    PhysicalParams params_;
    LinkGeometry geom_;
    OptMode mode_;
    double photon_budget_;
    std::vector<double> na_grid_;
    std::vector<double> q_grid_;
    std::vector<EntRow> bob_, eve_;
};

// Coordinates: x = (logit q [, ln n_a, logit a, logit b]); capacity mode is
// one-dimensional because n_a is pinned to the power boundary.
Candidate decode(const Problem& prob, const std::vector<double>& x) {
    Candidate c;
    c.q = sigmoid(std::clamp(x[0], -45.0, 45.0));
    c.n_a = prob.boundary_only() ? 0.0 : std::exp(std::clamp(x[1], -40.0, 50.0));
    if (prob.has_aux()) {
        c.a = sigmoid(std::clamp(x[2], -45.0, 45.0));
        c.b = sigmoid(std::clamp(x[3], -45.0, 45.0));
    }
    c.n_a = prob.project(c.q, c.n_a, c.a, c.b);
    c.value = prob.eval(c.q, c.n_a, c.a, c.b);
    return c;
}

std::vector<double> encode(const Problem& prob, const Candidate& c) {
    std::vector<double> x{logit(c.q)};
    if (!prob.boundary_only()) x.push_back(std::log(std::max(c.n_a, 1e-12)));
    if (prob.has_aux()) {
        x.push_back(logit(c.a));
        x.push_back(logit(c.b));
    }
    return x;
}

// Nelder-Mead on the transformed coordinates; maximizes prob.eval.
Candidate refine(const Problem& prob, const Candidate& seed) {
    const int n = prob.dim();
    struct Vertex {
        std::vector<double> x;
        Candidate c;
    };
    auto make_vertex = [&](std::vector<double> x) {
        Vertex v{std::move(x), {}};
        v.c = decode(prob, v.x);
        return v;
    };
    auto worse_vertex = [](const Vertex& l, const Vertex& r) { return better(l.c, r.c); };

    std::vector<Vertex> s;
    s.push_back(make_vertex(encode(prob, seed)));
    for (int i = 0; i < n; ++i) {
        auto x = s[0].x;
        x[i] += 0.3;
        s.push_back(make_vertex(std::move(x)));
    }

    const int max_iter = 600 * n;
    for (int iter = 0; iter < max_iter; ++iter) {
        std::sort(s.begin(), s.end(), worse_vertex);  // s[0] best
        const double f_best = s.front().c.value;
        const double f_worst = s.back().c.value;
        double diam = 0.0;
        for (const auto& v : s)
            for (int i = 0; i < n; ++i) diam = std::max(diam, std::fabs(v.x[i] - s[0].x[i]));
        if (std::fabs(f_worst - f_best) < 1e-8 * std::max(1.0, std::fabs(f_best)) && diam < 1e-6)
            break;

        std::vector<double> centroid(n, 0.0);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < n; ++i) centroid[i] += s[v].x[i] / n;

        auto blend = [&](double t) {
            std::vector<double> x(n);
            for (int i = 0; i < n; ++i) x[i] = centroid[i] + t * (s.back().x[i] - centroid[i]);
            return make_vertex(std::move(x));
        };

        Vertex refl = blend(-1.0);
        if (better(refl.c, s.front().c)) {
            Vertex exp_v = blend(-2.0);
            s.back() = better(exp_v.c, refl.c) ? std::move(exp_v) : std::move(refl);
            continue;
        }
        if (better(refl.c, s[n - 1].c)) {
            s.back() = std::move(refl);
            continue;
        }
        Vertex contr = better(refl.c, s.back().c) ? blend(-0.5) : blend(0.5);
        if (better(contr.c, s.back().c)) {
            s.back() = std::move(contr);
            continue;
        }
        for (int v = 1; v <= n; ++v) {  // shrink toward the best vertex
            std::vector<double> x(n);
            for (int i = 0; i < n; ++i) x[i] = 0.5 * (s[0].x[i] + s[v].x[i]);
            s[v] = make_vertex(std::move(x));
        }
    }
    std::sort(s.begin(), s.end(), worse_vertex);
    return s.front().c;
}

OptResult finalize(const PhysicalParams& params, const LinkGeometry& geom, OptMode mode,
                   const Candidate& c) {
    OptResult res;
    res.strategy.q_on = c.q;
    res.strategy.n_a = c.n_a;
    if (mode == OptMode::secrecy_aux) res.strategy.aux = AuxChannel{c.a, c.b};

    res.raw_nats = mode == OptMode::capacity
                       ? mutual_information_nats(build_channels(params, geom, c.n_a).first, c.q)
                       : secrecy_objective_nats(params, geom, res.strategy);
    res.clamped = mode != OptMode::capacity && res.raw_nats < 0.0;
    res.objective =
        RateValue::from_nats(res.clamped ? 0.0 : res.raw_nats, params.slot_seconds);
    res.n_b_star = geom.eta_bob() * c.n_a;
    res.n_e_star = geom.eta_eve() * c.n_a;
    res.power_used_w = power_used(res.strategy, params);
    res.boundary_active =
        std::fabs(res.power_used_w - params.power_watts) < kBoundaryRelTol * params.power_watts;
    return res;
}

Candidate solve(const Problem& prob, const std::vector<InputStrategy>& extra_seeds) {
    std::vector<Candidate> seeds = prob.coarse_seeds(prob.has_aux() ? 6 : 5);
    for (const auto& st : extra_seeds) {
        Candidate c;
        c.q = st.q_on;
        c.a = st.aux ? st.aux->a : 0.0;
        c.b = st.aux ? st.aux->b : 1.0;
        c.n_a = prob.project(c.q, st.n_a, c.a, c.b);
        c.value = prob.eval(c.q, c.n_a, c.a, c.b);
        seeds.push_back(c);
    }
    Candidate best;
    for (const auto& seed : seeds) {
        Candidate r = refine(prob, seed);
        if (better(r, best)) best = r;
        if (better(seed, best)) best = seed;
    }
    return best;
}

}  // namespace

const char* to_string(OptMode mode) {
    switch (mode) {
        case OptMode::capacity: return "capacity";
        case OptMode::secrecy: return "secrecy";
        case OptMode::secrecy_aux: return "secrecy-aux";
    }
    return "?";
}

const char* to_string(Regime regime) {
    return regime == Regime::loss_independent ? "loss-independent" : "noise-limited";
}

OptResult maximize_rate(const PhysicalParams& params, const LinkGeometry& geom, OptMode mode,
                        const std::vector<InputStrategy>& extra_seeds) {
    params.validate();
    geom.validate();
    Problem prob(params, geom, mode);
    OptResult res = finalize(params, geom, mode, solve(prob, extra_seeds));

    if (mode == OptMode::capacity) {
        // Plateau membership: on the loss-independent plateau the capacity is
        // insensitive to the power budget, so doubling P must not move it.
        PhysicalParams doubled = params;
        doubled.power_watts *= 2.0;
        Problem prob2(doubled, geom, mode);
        const double c2 = solve(prob2, {}).value;
        const bool plateau =
            std::fabs(c2 - res.raw_nats) <= kPlateauRelTol * std::max(res.raw_nats, 1e-300);
        res.regime = plateau ? Regime::loss_independent : Regime::noise_limited;
    } else {
        // numerically-zero optima past the collapse count as noise-limited
        const bool effectively_zero = res.clamped || res.raw_nats <= 1e-12;
        res.regime = (res.boundary_active || effectively_zero) ? Regime::noise_limited
                                                               : Regime::loss_independent;
    }
    return res;
}

OptResult maximize_capacity(const PhysicalParams& params, const LinkGeometry& geom) {
    return maximize_rate(params, geom, OptMode::capacity);
}

OptResult maximize_secrecy_rate(const PhysicalParams& params, const LinkGeometry& geom) {
    return maximize_rate(params, geom, OptMode::secrecy);
}

OptResult maximize_secrecy_capacity(const PhysicalParams& params, const LinkGeometry& geom) {
    return maximize_rate(params, geom, OptMode::secrecy_aux);
}

std::vector<SweepRow> sweep_attenuation(const PhysicalParams& params, std::vector<double> alphas,
                                        OptMode mode, double eta_zy) {
    detail::require(!alphas.empty(), "sweep: alphas must be nonempty");
    for (double a : alphas) detail::require(std::isfinite(a) && a >= 0, "sweep: alpha must be >= 0");
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());

    std::vector<SweepRow> rows;
    rows.reserve(alphas.size());
    std::vector<InputStrategy> warm;
    for (double alpha : alphas) {
        LinkGeometry geom{alpha, eta_zy};
        OptResult r = maximize_rate(params, geom, mode, warm);
        warm = {r.strategy};
        rows.push_back({alpha, std::move(r)});
    }
    return rows;
}

std::optional<double> find_zero_threshold(const PhysicalParams& params, double eta_zy,
                                          OptMode mode, double floor_bps) {
    detail::require(mode != OptMode::capacity, "threshold search applies to secrecy modes");
    detail::require(std::isfinite(floor_bps) && floor_bps > 0, "floor_bps must be > 0");
    params.validate();

    std::vector<InputStrategy> warm;
    auto rate_bps = [&](double alpha) {
        LinkGeometry geom{alpha, eta_zy};
        OptResult r = maximize_rate(params, geom, mode, warm);
        if (!r.clamped) warm = {r.strategy};
        return r.objective.bps();
    };

    double lo = 0.0, hi = 200.0;
    if (rate_bps(lo) < floor_bps)
        throw InfeasibleError("rate at 0 dB is already below the requested floor");
    if (rate_bps(hi) >= floor_bps) return std::nullopt;
    while (hi - lo > 0.05) {
        const double mid = 0.5 * (lo + hi);
        (rate_bps(mid) >= floor_bps ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace wiretap
