#include "zetak/zeroscan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <future>
#include <numbers>
#include <thread>

#include <json.hpp>

#include "internal.hpp"
#include "zetak/argtrack.hpp"
#include "zetak/errors.hpp"
#include "zetak/funceq.hpp"

namespace zetak {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSigmaLo = -2.0;
constexpr double kWindingGate = 0.05;

std::atomic<int> g_threads{0};

int effective_threads() {
    int n = g_threads.load(std::memory_order_relaxed);
    if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
    return std::max(1, n);
}

// Counting only needs phase, not digits: shorter sums, a lighter ring and
// loose tolerances make subdivision ~6x cheaper than refinement evals.
EvalContext winding_context(const EvalContext& ctx, int k) {
    EvalContext w = ctx;
    w.em_terms_factor = std::min(ctx.em_terms_factor, 1.0);
    w.em_correction_order = std::min(ctx.em_correction_order, 10);
    int lo = std::max(16, 4 * (k + 1));
    lo += lo % 2;
    w.ring_nodes = std::clamp(ctx.ring_nodes, lo, std::max(lo, 24));
    w.abs_tol = std::max(ctx.abs_tol, 1e-8);
    w.rel_tol = std::max(ctx.rel_tol, 1e-5);
    return w;
}

double winding_raw(int k, const Rectangle& r, const EvalContext& wctx) {
    const Complex path[5] = {{r.sigma_lo, r.t_lo},
                             {r.sigma_hi, r.t_lo},
                             {r.sigma_hi, r.t_hi},
                             {r.sigma_lo, r.t_hi},
                             {r.sigma_lo, r.t_lo}};
    const BranchTrace tr = track_arg(FunctionId::G_K, k, path, wctx);
    return (tr.final_arg() - tr.start_arg()) / kTwoPi;
}

int winding_count(int k, const Rectangle& r, const EvalContext& wctx) {
    const double w = winding_raw(k, r, wctx);
    const long n = std::lround(w);
    if (std::fabs(w - static_cast<double>(n)) > kWindingGate)
        throw NonIntegerWinding("winding not within 0.05 of an integer", w);
    if (n < 0)
        throw NonIntegerWinding("negative winding in a pole-free rectangle", w);
    return static_cast<int>(n);
}

void validate_rect(const Rectangle& r) {
    if (!(r.sigma_lo < r.sigma_hi) || !(0.0 < r.t_lo) || !(r.t_lo < r.t_hi))
        throw std::invalid_argument(
            "rectangle: requires sigma_lo < sigma_hi and 0 < t_lo < t_hi");
}

// --------------------------------------------------------------------------
// subdivision scan
// --------------------------------------------------------------------------

struct Scan {
    int k = 0;
    EvalContext ctx;  // refinement precision
    EvalContext wctx; // winding precision
    std::vector<ZeroRecord> found;

    void emit(double beta, double gamma, int mult, double residual) {
        found.push_back({k, beta, gamma, mult, residual, std::string{}});
    }

    double residual_at(Complex z) {
        const auto d = detail::zeta_derivs_ld(detail::to_ld(z), k, ctx);
        return static_cast<double>(std::abs(d[k].value));
    }

    // Newton on zeta^(k) with derivative zeta^(k+1); returns false when the
    // iteration escapes the cell or stalls, in which case the caller splits.
    bool newton(const Rectangle& cell, int depth);
    void subdivide(const Rectangle& cell, int count, int depth);
    void descend(const Rectangle& cell, int count, int depth);
};

bool Scan::newton(const Rectangle& cell, int depth) {
    Complex z{0.5 * (cell.sigma_lo + cell.sigma_hi),
              0.5 * (cell.t_lo + cell.t_hi)};
    double prev_step = std::numeric_limits<double>::infinity();
    int growing = 0;
    for (int it = 0; it < 60; ++it) {
        const auto d = detail::zeta_derivs_ld(detail::to_ld(z), k + 1, ctx);
        const auto fz = d[k].value;
        const auto fpz = d[k + 1].value;
        if (std::abs(fpz) < 1e-280L) return false;
        const Complex step = detail::to_d(fz / fpz);
        z -= step;
        const double mag = std::abs(step);
        if (mag < 1e-12 * std::max(1.0, std::abs(z))) {
            if (z.real() < cell.sigma_lo - 1e-9 || z.real() > cell.sigma_hi + 1e-9 ||
                z.imag() < cell.t_lo - 1e-9 || z.imag() > cell.t_hi + 1e-9)
                return false; // converged to a neighbouring zero
            double res = residual_at(z);
            emit(z.real(), z.imag(), 1, res);
            return true;
        }
        if (mag > prev_step) {
            if (++growing >= 3) return false;
        } else {
            growing = 0;
        }
        prev_step = mag;
        (void)depth;
    }
    return false;
}

void Scan::subdivide(const Rectangle& cell, int count, int depth) {
    // split lines are nudged until all children have stable windings that
    // add up to the parent count
    const bool split_sigma = (cell.sigma_hi - cell.sigma_lo) >
                             0.6 * (cell.t_hi - cell.t_lo);
    const bool split_t = (cell.t_hi - cell.t_lo) >
                         0.6 * (cell.sigma_hi - cell.sigma_lo);
    for (int attempt = 0; attempt < 40; ++attempt) {
        const double nudge = 1e-3 * attempt * (attempt % 2 == 0 ? 1.0 : -1.3);
        const double sm = 0.5 * (cell.sigma_lo + cell.sigma_hi) + nudge;
        const double tm = 0.5 * (cell.t_lo + cell.t_hi) + nudge;
        std::vector<Rectangle> kids;
        if (split_sigma && split_t) {
            kids = {{cell.sigma_lo, sm, cell.t_lo, tm},
                    {sm, cell.sigma_hi, cell.t_lo, tm},
                    {cell.sigma_lo, sm, tm, cell.t_hi},
                    {sm, cell.sigma_hi, tm, cell.t_hi}};
        } else if (split_t) {
            kids = {{cell.sigma_lo, cell.sigma_hi, cell.t_lo, tm},
                    {cell.sigma_lo, cell.sigma_hi, tm, cell.t_hi}};
        } else {
            kids = {{cell.sigma_lo, sm, cell.t_lo, cell.t_hi},
                    {sm, cell.sigma_hi, cell.t_lo, cell.t_hi}};
        }
        try {
            std::vector<int> counts;
            counts.reserve(kids.size());
            int total = 0;
            for (const auto& kd : kids) {
                const int c = winding_count(k, kd, wctx);
                counts.push_back(c);
                total += c;
            }
            if (total != count) continue; // a zero sits on a split line; renudge
            for (std::size_t i = 0; i < kids.size(); ++i)
                if (counts[i] > 0) descend(kids[i], counts[i], depth + 1);
            return;
        } catch (const ZeroOnPath&) {
            continue;
        } catch (const NonIntegerWinding&) {
            continue;
        }
    }
    throw SubdivisionLimit("subdivide: could not place zero-free split lines");
}

void Scan::descend(const Rectangle& cell, int count, int depth) {
    if (count == 0) return;
    if (depth > 60) throw SubdivisionLimit("scan: subdivision depth exceeded");
    const double dsig = cell.sigma_hi - cell.sigma_lo;
    const double dt = cell.t_hi - cell.t_lo;
    const double diam = std::hypot(dsig, dt);
    if (diam < 1e-6) {
        const Complex z{0.5 * (cell.sigma_lo + cell.sigma_hi),
                        0.5 * (cell.t_lo + cell.t_hi)};
        emit(z.real(), z.imag(), count, residual_at(z));
        return;
    }
    if (count == 1 && diam < 0.5 && newton(cell, depth)) return;
    subdivide(cell, count, depth);
}

} // namespace

double scan_sigma_hi(int k) { return 1.75 * k + 3.0; }

double settle_height(int k, double t, const EvalContext& ctx) {
    const EvalContext wctx = winding_context(ctx, k);
    const double shi = scan_sigma_hi(k);
    for (int attempt = 0; attempt <= 200; ++attempt) {
        const double tt = t + 1e-3 * attempt;
        try {
            const Complex path[2] = {{kSigmaLo, tt}, {shi, tt}};
            const BranchTrace tr = track_arg(FunctionId::G_K, k, path, wctx);
            if (tr.min_modulus > 1e-6) return tt;
        } catch (const Error&) {
            // fall through and nudge upward
        }
    }
    throw SubdivisionLimit("settle_height: no zero-free line within +0.2");
}

int count_zeros_rect(int k, Rectangle rect, const EvalContext& ctx) {
    if (k < 0 || k > 12)
        throw std::invalid_argument("count_zeros_rect: k must be in [0, 12]");
    validate_rect(rect);
    ctx.validate(k);
    const EvalContext wctx = winding_context(ctx, k);
    try {
        return winding_count(k, rect, wctx);
    } catch (const ZeroOnPath& z) {
        throw ZeroOnBoundary("count_zeros_rect: zero near rectangle boundary",
                             z.where());
    }
}

std::vector<ZeroRecord> locate_zeros(int k, double t_lo, double t_hi,
                                     const EvalContext& ctx) {
    if (k < 0 || k > 12)
        throw std::invalid_argument("locate_zeros: k must be in [0, 12]");
    if (!(0.0 < t_lo) || !(t_lo < t_hi) || t_hi > 5000.0)
        throw std::invalid_argument("locate_zeros: requires 0 < t_lo < t_hi <= 5000");
    ctx.validate(k + 1);

    const double shi = scan_sigma_hi(k);
    const EvalContext wctx = winding_context(ctx, k);

    // settle band edges once, globally, so bands tile exactly
    const double band_height = 25.0;
    const int nb = std::max(1, static_cast<int>(std::ceil((t_hi - t_lo) / band_height)));
    std::vector<double> edges(nb + 1);
    for (int i = 0; i <= nb; ++i) {
        const double raw = t_lo + (t_hi - t_lo) * i / nb;
        edges[i] = settle_height(k, raw, ctx);
    }

    auto scan_band = [&](int band) {
        Scan sc;
        sc.k = k;
        sc.ctx = ctx;
        sc.wctx = wctx;
        const Rectangle r{kSigmaLo, shi, edges[band], edges[band + 1]};
        if (!(r.t_lo < r.t_hi)) return sc.found; // band swallowed by settling
        const int count = winding_count(k, r, wctx);
        sc.descend(r, count, 0);
        return sc.found;
    };

    std::vector<ZeroRecord> all;
    const int workers = std::min(effective_threads(), nb);
    if (workers <= 1) {
        for (int b = 0; b < nb; ++b) {
            auto part = scan_band(b);
            all.insert(all.end(), part.begin(), part.end());
        }
    } else {
        std::vector<std::future<void>> futs;
        std::atomic<int> next{0};
        std::vector<std::vector<ZeroRecord>> parts(nb);
        auto worker = [&]() {
            for (;;) {
                const int b = next.fetch_add(1);
                if (b >= nb) return;
                parts[b] = scan_band(b);
            }
        };
        for (int w = 0; w < workers; ++w)
            futs.push_back(std::async(std::launch::async, worker));
        for (auto& f : futs) f.get();
        for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    }

    // coarse guard: nothing hides left of the strip
    {
        const Rectangle left{-10.0, kSigmaLo, edges.front(), edges.back()};
        if (left.t_lo < left.t_hi && winding_count(k, left, wctx) != 0)
            throw Error("locate_zeros: zeros detected left of the scan strip");
    }

    std::sort(all.begin(), all.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
        return a.gamma != b.gamma ? a.gamma < b.gamma : a.beta < b.beta;
    });
    const std::string digest = ctx.digest();
    for (auto& z : all) z.ctx_digest = digest;
    return all;
}

long Nk_empirical(int k, double T, const EvalContext& ctx) {
    if (T > 5000.0) throw std::invalid_argument("Nk_empirical: T <= 5000 required");
    long n = 0;
    for (const auto& z : locate_zeros(k, 1e-3, T, ctx)) n += z.multiplicity;
    return n;
}

double dist_sum(int k, double T, const EvalContext& ctx) {
    double s = 0.0;
    for (const auto& z : locate_zeros(k, 1e-3, T, ctx))
        s += z.multiplicity * (z.beta - 0.5);
    return s;
}

std::vector<ZeroRecord> left_of_line_report(int k, double T,
                                            const EvalContext& ctx) {
    std::vector<ZeroRecord> out;
    for (const auto& z : locate_zeros(k, 1e-3, T, ctx))
        if (z.beta < 0.5 - 1e-9) out.push_back(z);
    return out;
}

// --------------------------------------------------------------------------
// cache
// --------------------------------------------------------------------------

CacheLoad load_zero_cache(const std::string& path,
                          const std::string& expect_digest) {
    CacheLoad out;
    std::ifstream in(path);
    if (!in) throw DomainError("zero cache: cannot open " + path);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            ZeroRecord z;
            z.k = j.at("k").get<int>();
            z.beta = j.at("beta").get<double>();
            z.gamma = j.at("gamma").get<double>();
            z.multiplicity = j.at("multiplicity").get<int>();
            z.residual = j.at("residual").get<double>();
            z.ctx_digest = j.at("ctx_digest").get<std::string>();
            if (z.multiplicity < 1 || !(z.gamma > 0.0))
                throw std::runtime_error("invariant violation");
            if (z.ctx_digest == expect_digest)
                out.fresh.push_back(std::move(z));
            else
                out.stale.push_back(std::move(z));
        } catch (const std::exception& e) {
            out.warnings.push_back("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

void append_zero_cache(const std::string& path,
                       const std::vector<ZeroRecord>& records) {
    std::ofstream outf(path, std::ios::app);
    if (!outf) throw DomainError("zero cache: cannot open " + path + " for append");
    for (const auto& z : records) {
        nlohmann::json j;
        j["k"] = z.k;
        j["beta"] = z.beta;
        j["gamma"] = z.gamma;
        j["multiplicity"] = z.multiplicity;
        j["residual"] = z.residual;
        j["ctx_digest"] = z.ctx_digest;
        outf << j.dump() << '\n';
    }
}

void set_scan_threads(int n) { g_threads.store(n, std::memory_order_relaxed); }

int scan_threads() { return effective_threads(); }

} // namespace zetak
