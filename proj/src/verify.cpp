#include "zetak/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include <json.hpp>

#include "zetak/argtrack.hpp"
#include "zetak/errors.hpp"
#include "zetak/funceq.hpp"

namespace zetak {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// settle T off zero ordinates of both zeta and zeta^(k): the tracked paths
// to 1/2 + iT must be zero-free for S(T) and arg G_k
double settle_for_args(int k, double T, const EvalContext& ctx) {
    double tt = settle_height(k, T, ctx);
    for (int attempt = 0; attempt < 200; ++attempt) {
        try {
            (void)S_of_T(tt, ctx);
            (void)arg_Gk_at_half(tt, k, ctx);
            return tt;
        } catch (const ZeroOnPath&) {
            tt = settle_height(k, tt + 1e-3, ctx);
        }
    }
    throw SubdivisionLimit("prop6: cannot settle T off zero ordinates");
}

double fit_envelope(const std::vector<ResidualRow>& rows) {
    double num = 0.0, den = 0.0;
    for (const auto& r : rows) {
        num += std::fabs(r.residual) * r.envelope_value;
        den += r.envelope_value * r.envelope_value;
    }
    return den > 0.0 ? num / den : 0.0;
}

} // namespace

double berndt_main(double T) {
    if (!(T > 0.0)) throw DomainError("berndt_main: requires T > 0");
    return T / kTwoPi * std::log(T / (2.0 * kTwoPi)) - T / kTwoPi;
}

double theorem1_main(int k, double T) {
    if (k < 1) throw DomainError("theorem1_main: requires k >= 1");
    if (!(T > 2.0 * kTwoPi)) throw DomainError("theorem1_main: requires T > 4 pi");
    const double x = T / kTwoPi;
    return k * T / kTwoPi * std::log(std::log(x)) +
           (0.5 * std::log(2.0) - k * std::log(std::log(2.0))) * T / kTwoPi -
           k * li_from_2(x);
}

double cor2_main(int k, double T, double U) {
    if (k < 1) throw DomainError("cor2_main: requires k >= 1");
    if (!(T > kTwoPi)) throw DomainError("cor2_main: requires T > 2 pi");
    if (U < 0.0) throw DomainError("cor2_main: requires U >= 0");
    return k * U / kTwoPi * std::log(std::log(T / kTwoPi)) +
           (0.5 * std::log(2.0) - k * std::log(std::log(2.0))) * U / kTwoPi;
}

double prop6_residual(int k, double T, const EvalContext& ctx,
                      const std::vector<ZeroRecord>& zeros, double* settled_T) {
    if (k < 0 || k > 12)
        throw std::invalid_argument("prop6_residual: k must be in [0, 12]");
    if (T < 2.0) throw DomainError("prop6_residual: requires T >= 2");
    const double tt = settle_for_args(k, T, ctx);
    if (settled_T) *settled_T = tt;
    long nk = 0;
    for (const auto& z : zeros)
        if (z.gamma <= tt) nk += z.multiplicity;
    const double argg = arg_Gk_at_half(tt, k, ctx);
    const double s = S_of_T(tt, ctx);
    return static_cast<double>(nk) -
           (berndt_main(tt) + argg / kTwoPi + 0.5 * s);
}

double prop6_residual(int k, double T, const EvalContext& ctx) {
    const auto zeros = locate_zeros(k, 1e-3, T + 0.5, ctx);
    return prop6_residual(k, T, ctx, zeros, nullptr);
}

std::array<ResidualReport, 3> residual_suite(int k, std::span<const double> T_grid,
                                             const EvalContext& ctx) {
    std::array<ResidualReport, 3> reps;
    reps[0] = {k, Quantity::COUNT, "log T", 0.0, {}};
    reps[1] = {k, Quantity::DIST_SUM, "(log log T)^2", 0.0, {}};
    reps[2] = {k, Quantity::PROP6, "const", 0.0, {}};
    if (T_grid.empty()) return reps;

    std::vector<double> grid(T_grid.begin(), T_grid.end());
    std::sort(grid.begin(), grid.end());
    const double t_max = grid.back();

    // one scan feeds every row
    const auto zeros = locate_zeros(k, 1e-3, t_max + 0.5, ctx);

    for (const double T : grid) {
        long nk = 0;
        double ds = 0.0;
        for (const auto& z : zeros) {
            if (z.gamma <= T) {
                nk += z.multiplicity;
                ds += z.multiplicity * (z.beta - 0.5);
            }
        }
        {
            ResidualRow r;
            r.T = T;
            r.empirical = static_cast<double>(nk);
            r.main_term = berndt_main(T);
            r.residual = r.empirical - r.main_term;
            r.envelope_value = std::log(T);
            reps[0].rows.push_back(r);
        }
        if (k >= 1 && T > 2.0 * kTwoPi) {
            ResidualRow r;
            r.T = T;
            r.empirical = ds;
            r.main_term = theorem1_main(k, T);
            r.residual = r.empirical - r.main_term;
            r.envelope_value = std::pow(std::log(std::log(T)), 2.0);
            reps[1].rows.push_back(r);
        }
        {
            ResidualRow r;
            double tt = T;
            r.residual = prop6_residual(k, T, ctx, zeros, &tt);
            r.T = T;
            long nk_tt = 0;
            for (const auto& z : zeros)
                if (z.gamma <= tt) nk_tt += z.multiplicity;
            r.empirical = static_cast<double>(nk_tt);
            r.main_term = r.empirical - r.residual;
            r.envelope_value = 1.0;
            reps[2].rows.push_back(r);
        }
    }
    for (auto& rep : reps) rep.fitted_constant = fit_envelope(rep.rows);
    return reps;
}

std::string quantity_name(Quantity q) {
    switch (q) {
        case Quantity::COUNT: return "COUNT";
        case Quantity::DIST_SUM: return "DIST_SUM";
        case Quantity::PROP6: return "PROP6";
    }
    return "?";
}

namespace {

void put12(std::ostream& os, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    os << buf;
}

} // namespace

void write_csv(const ResidualReport& rep, std::ostream& os) {
    os << "T,empirical,main_term,residual,envelope_value\n";
    for (const auto& r : rep.rows) {
        put12(os, r.T);
        os << ',';
        put12(os, r.empirical);
        os << ',';
        put12(os, r.main_term);
        os << ',';
        put12(os, r.residual);
        os << ',';
        put12(os, r.envelope_value);
        os << '\n';
    }
}

void write_json(const ResidualReport& rep, std::ostream& os) {
    nlohmann::json j;
    j["k"] = rep.k;
    j["quantity"] = quantity_name(rep.quantity);
    j["envelope_id"] = rep.envelope_id;
    j["fitted_constant"] = rep.fitted_constant;
    auto rows = nlohmann::json::array();
    for (const auto& r : rep.rows) {
        rows.push_back({{"T", r.T},
                        {"empirical", r.empirical},
                        {"main_term", r.main_term},
                        {"residual", r.residual},
                        {"envelope_value", r.envelope_value}});
    }
    j["rows"] = std::move(rows);
    os << j.dump(2) << '\n';
}

} // namespace zetak
