#include "cobga/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cobga {

double mean_of(const std::vector<double>& xs) {
    if (xs.empty()) throw std::invalid_argument("mean_of: empty input");
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double sample_sd(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    double m = mean_of(xs);
    double acc = 0.0;
    for (double x : xs) acc += (x - m) * (x - m);
    return std::sqrt(acc / static_cast<double>(xs.size() - 1));
}

double quantile(std::vector<double> xs, double p) {
    if (xs.empty()) throw std::invalid_argument("quantile: empty input");
    std::sort(xs.begin(), xs.end());
    double rank = p * static_cast<double>(xs.size() - 1);
    size_t lo = static_cast<size_t>(rank);
    double frac = rank - static_cast<double>(lo);
    if (lo + 1 >= xs.size()) return xs.back();
    return xs[lo] + frac * (xs[lo + 1] - xs[lo]);
}

Quartiles quartiles(const std::vector<double>& xs) {
    return {quantile(xs, 0.25), quantile(xs, 0.50), quantile(xs, 0.75)};
}

}  // namespace cobga
