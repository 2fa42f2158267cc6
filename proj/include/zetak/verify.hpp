#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "zetak/eval_context.hpp"
#include "zetak/zeroscan.hpp"

namespace zetak {

// Main terms of the classical asymptotics for the zero counts and the
// real-part distribution sums of zeta^(k), and residual reports comparing
// them against the empirical zero data.

/// (T/2pi) log(T/4pi) - T/2pi; the k-independent count main term.
double berndt_main(double T);

/// (kT/2pi) log log(T/2pi) + (1/2pi)(log2/2 - k log log 2) T - k Li(T/2pi),
/// for T > 4pi and k >= 1. Note log log 2 < 0, so the middle coefficient
/// grows with k.
double theorem1_main(int k, double T);

/// Window form: (kU/2pi) log log(T/2pi) + (1/2pi)(log2/2 - k log log 2) U,
/// for 0 <= U, T > 2pi.
double cor2_main(int k, double T, double U);

/// N_k(T) minus [berndt_main + (1/2pi) arg G_k(1/2+iT) + (1/2) S(T)], the
/// empirically measured bounded term of the exact decomposition. T is
/// settled off zero ordinates of both zeta and zeta^(k) first; the settled
/// height is reported alongside when requested.
double prop6_residual(int k, double T, const EvalContext& ctx);
double prop6_residual(int k, double T, const EvalContext& ctx,
                      const std::vector<ZeroRecord>& zeros, double* settled_T);

enum class Quantity { COUNT, DIST_SUM, PROP6 };

struct ResidualRow {
    double T = 0.0;
    double empirical = 0.0;
    double main_term = 0.0;
    double residual = 0.0;       // empirical - main_term
    double envelope_value = 0.0; // envelope basis function at T
};

struct ResidualReport {
    int k = 0;
    Quantity quantity = Quantity::COUNT;
    std::string envelope_id; // "log T", "(log log T)^2", "const"
    double fitted_constant = 0.0;
    std::vector<ResidualRow> rows; // sorted by T
};

/// Three reports over the grid: COUNT (N_k vs berndt_main, envelope log T),
/// DIST_SUM (dist_sum vs theorem1_main, envelope (log log T)^2), and PROP6
/// (prop6_residual, envelope const). One scan to max(T) feeds all rows.
/// The fitted constant is the least-squares fit of |residual| against the
/// envelope. An empty grid yields empty reports.
std::array<ResidualReport, 3> residual_suite(int k, std::span<const double> T_grid,
                                             const EvalContext& ctx);

/// CSV columns: T, empirical, main_term, residual, envelope_value.
void write_csv(const ResidualReport& rep, std::ostream& os);
void write_json(const ResidualReport& rep, std::ostream& os);
std::string quantity_name(Quantity q);

} // namespace zetak
