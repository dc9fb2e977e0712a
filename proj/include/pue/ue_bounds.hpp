#ifndef PUE_UE_BOUNDS_HPP
#define PUE_UE_BOUNDS_HPP

#include "pue/weight_enum.hpp"

#include <string>
#include <vector>

namespace pue {

/// Symbol error probability of the q-ary symmetric channel, 0 <= p <= (q-1)/q.
class ChannelParameter {
public:
    /// Throws DomainError outside the legal range.
    ChannelParameter(double p, unsigned q);

    double p() const noexcept { return p_; }
    unsigned q() const noexcept { return q_; }
    double max() const noexcept { return max_p(q_); }
    /// p == (q-1)/q, where the enumerator argument is exactly 1.
    bool at_endpoint() const noexcept { return p_ == max_p(q_); }

    static double max_p(unsigned q) noexcept { return static_cast<double>(q - 1) / static_cast<double>(q); }

private:
    double p_;
    unsigned q_;
};

/// p / ((q-1)(1-p)), returned as exactly 1 at the endpoint.
double enumerator_argument(const ChannelParameter& p) noexcept;

/// P_ue(C,p) = (1-p)^n (A_C(z) - 1).
double p_ue(const WeightDistribution& w, const ChannelParameter& p);

/// (1-p)^(n-k) - (1-p)^n, valid for every [n,k;q] code.
double general_bound(std::size_t n, std::size_t k, unsigned q, double p);

/// (1-p)^(n-k+1) + (q-1)^(k-n) p^(n-k+1) - (1-p)^n, valid for codes of full support.
double full_support_bound(std::size_t n, std::size_t k, unsigned q, double p);

/// p (1-p)^(n-k) {1 - z^(n-k)}, the gap between the two bounds above.
double improvement(std::size_t n, std::size_t k, unsigned q, double p);

/// (1/q){(1+(q-1)z)^(k+1) + (q-1)(1-z)^(k+1)}, the sharp bound on A_C(z) for [n,k,2;q] codes.
double f_bound(std::size_t k, unsigned q, double z);

/// (1+(q-1)z)^k + k(q-1)(z^2 - z), the older bound for [n,k,2;q] codes.
double g_bound(std::size_t k, unsigned q, double z);

/// ((q-1)/q)(1-z) sum_{j=2..k} C(k,j)((q-1)^j - (-1)^j) z^j.
double g_minus_f_closed(std::size_t k, unsigned q, double z);

/// `points` uniformly spaced values from lo to hi inclusive, last point exactly hi.
std::vector<double> uniform_grid(double lo, double hi, std::size_t points);

/// p-grid on [0, (q-1)/q].
std::vector<double> p_grid(unsigned q, std::size_t points = 101);
/// z-grid on [0, 1].
std::vector<double> z_grid(std::size_t points = 101);

/// Sampled curves over one grid; columns[i][j] is labels[i] at grid[j].
struct BoundCurve {
    std::string grid_label;
    std::vector<double> grid;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> columns;

    void add_column(std::string label, std::vector<double> values);
    /// Header plus one row per grid point, values printed with %.12g.
    std::string to_csv() const;
};

/// p, general_bound, full_support_bound, improvement.
BoundCurve p_bound_curve(std::size_t n, std::size_t k, unsigned q, const std::vector<double>& grid);
/// z, f, g, g_minus_f.
BoundCurve z_bound_curve(std::size_t k, unsigned q, const std::vector<double>& grid);

}  // namespace pue

#endif  // PUE_UE_BOUNDS_HPP
