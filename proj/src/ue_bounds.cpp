#include "pue/ue_bounds.hpp"

#include "pue/combinatorics.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>

namespace pue {
namespace {

void check_dims(std::size_t n, std::size_t k) {
    if (k < 1 || k > n) throw ParameterError("need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
}

void check_z(double z) {
    if (!(z >= 0.0 && z <= 1.0)) throw DomainError("z = " + std::to_string(z) + " outside [0, 1]");
}

double ipow(double b, std::size_t e) {
    double r = 1.0;
    for (std::size_t i = 0; i < e; ++i) r *= b;
    return r;
}

std::string format_value(double v) {
    if (v == 0.0) v = 0.0;  // no "-0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

ChannelParameter::ChannelParameter(double p, unsigned q) : p_(p), q_(q) {
    if (q < 2) throw DomainError("alphabet size must be at least 2");
    if (!(p >= 0.0 && p <= max_p(q))) {
        throw DomainError("p = " + format_value(p) + " outside [0, " + format_value(max_p(q)) + "]");
    }
}

double enumerator_argument(const ChannelParameter& p) noexcept {
    if (p.at_endpoint()) return 1.0;
    return p.p() / (static_cast<double>(p.q() - 1) * (1.0 - p.p()));
}

double p_ue(const WeightDistribution& w, const ChannelParameter& p) {
    if (w.q != p.q()) throw DimensionMismatch("channel alphabet differs from code alphabet");
    return ipow(1.0 - p.p(), w.n) * (evaluate(w, enumerator_argument(p)) - 1.0);
}

double general_bound(std::size_t n, std::size_t k, unsigned q, double p) {
    check_dims(n, k);
    const ChannelParameter cp(p, q);
    return ipow(1.0 - cp.p(), n - k) - ipow(1.0 - cp.p(), n);
}

double full_support_bound(std::size_t n, std::size_t k, unsigned q, double p) {
    check_dims(n, k);
    const ChannelParameter cp(p, q);
    const std::size_t r = n - k + 1;
    return ipow(1.0 - cp.p(), r) + ipow(cp.p(), r) / ipow(q - 1.0, n - k) - ipow(1.0 - cp.p(), n);
}

double improvement(std::size_t n, std::size_t k, unsigned q, double p) {
    check_dims(n, k);
    const ChannelParameter cp(p, q);
    const double z = enumerator_argument(cp);
    return cp.p() * ipow(1.0 - cp.p(), n - k) * (1.0 - ipow(z, n - k));
}

double f_bound(std::size_t k, unsigned q, double z) {
    check_z(z);
    const double qm1 = q - 1.0;
    return (ipow(1.0 + qm1 * z, k + 1) + qm1 * ipow(1.0 - z, k + 1)) / q;
}

double g_bound(std::size_t k, unsigned q, double z) {
    check_z(z);
    const double qm1 = q - 1.0;
    return ipow(1.0 + qm1 * z, k) + static_cast<double>(k) * qm1 * (z * z - z);
}

double g_minus_f_closed(std::size_t k, unsigned q, double z) {
    check_z(z);
    const double qm1 = q - 1.0;
    double sum = 0.0;
    for (std::size_t j = 2; j <= k; ++j) {
        const double sign = (j % 2) ? -1.0 : 1.0;
        sum += binomial_real(k, j) * (ipow(qm1, j) - sign) * ipow(z, j);
    }
    return qm1 / q * (1.0 - z) * sum;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
    if (points < 2) throw ParameterError("grid needs at least 2 points");
    std::vector<double> g(points);
    for (std::size_t i = 0; i < points; ++i) g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    g.back() = hi;
    return g;
}

std::vector<double> p_grid(unsigned q, std::size_t points) { return uniform_grid(0.0, ChannelParameter::max_p(q), points); }

std::vector<double> z_grid(std::size_t points) { return uniform_grid(0.0, 1.0, points); }

void BoundCurve::add_column(std::string label, std::vector<double> values) {
    if (values.size() != grid.size()) throw DimensionMismatch("column length differs from grid");
    labels.push_back(std::move(label));
    columns.push_back(std::move(values));
}

std::string BoundCurve::to_csv() const {
    std::ostringstream os;
    os << grid_label;
    for (const auto& l : labels) os << ',' << l;
    os << '\n';
    for (std::size_t i = 0; i < grid.size(); ++i) {
        os << format_value(grid[i]);
        for (const auto& c : columns) os << ',' << format_value(c[i]);
        os << '\n';
    }
    return os.str();
}

BoundCurve p_bound_curve(std::size_t n, std::size_t k, unsigned q, const std::vector<double>& grid) {
    BoundCurve c{"p", grid, {}, {}};
    std::vector<double> gb, fb, im;
    for (double p : grid) {
        gb.push_back(general_bound(n, k, q, p));
        fb.push_back(full_support_bound(n, k, q, p));
        im.push_back(improvement(n, k, q, p));
    }
    c.add_column("general_bound", std::move(gb));
    c.add_column("full_support_bound", std::move(fb));
    c.add_column("improvement", std::move(im));
    return c;
}

BoundCurve z_bound_curve(std::size_t k, unsigned q, const std::vector<double>& grid) {
    BoundCurve c{"z", grid, {}, {}};
    std::vector<double> f, g, d;
    for (double z : grid) {
        f.push_back(f_bound(k, q, z));
        g.push_back(g_bound(k, q, z));
        d.push_back(g_minus_f_closed(k, q, z));
    }
    c.add_column("f", std::move(f));
    c.add_column("g", std::move(g));
    c.add_column("g_minus_f", std::move(d));
    return c;
}

}  // namespace pue
