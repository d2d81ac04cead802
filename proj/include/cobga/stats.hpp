#pragma once

#include <vector>

namespace cobga {

double mean_of(const std::vector<double>& xs);

// Sample standard deviation (n-1 denominator); 0 for fewer than two values.
double sample_sd(const std::vector<double>& xs);

// Quantile by linear interpolation between closest ranks (the inclusive
// median method): rank = p * (m - 1) on the sorted values.
double quantile(std::vector<double> xs, double p);

struct Quartiles {
    double q1, q2, q3;
};

Quartiles quartiles(const std::vector<double>& xs);

}  // namespace cobga
