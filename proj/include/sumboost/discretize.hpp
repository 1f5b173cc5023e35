#pragma once

#include <string>
#include <vector>

namespace sumboost {

enum class Scheme { bins_quantified, bins_plain, percentile, std_dev, quartiles };

Scheme scheme_from_string(const std::string& name);
std::string scheme_to_string(Scheme s);

struct Encoding {
    Scheme scheme = Scheme::bins_quantified;
    int bin_count = 5;                      // bin schemes only
    std::vector<std::string> quantifiers;   // bins_quantified: one name per bin
};

/// The stock quantifier ladders for 4/5/7/9 bins.
std::vector<std::string> default_quantifiers(int bin_count);

/// 5 bins with quantifiers [very low, low, medium, high, very high].
Encoding default_encoding();

/// Per-column state fitted on training values only. Immutable once fitted;
/// encode() is pure.
struct BinBoundaries {
    std::string column;
    std::vector<double> edges;          // bin schemes: quantiles at i/bin_count
    double mean = 0.0, stddev = 0.0;    // std_dev scheme
    double q1 = 0.0, median = 0.0, q3 = 0.0;  // quartiles scheme
    std::vector<double> sorted_values;  // percentile scheme: full sorted sample
    std::string fitted_on;              // fingerprint of the fitted sample
    bool fitted = false;
};

/// Fits boundaries on training values. Quantiles use the nearest-rank rule
/// (no interpolation): the q-quantile of n sorted values is element
/// ceil(q*n) - 1.
BinBoundaries fit(const std::vector<double>& train_values, const Encoding& enc,
                  const std::string& column = "");

/// 0-based level index of a value; monotone in the value for every scheme.
/// Out-of-range values clamp to the extreme level.
int level_index(double value, const BinBoundaries& b, const Encoding& enc);

/// Descriptive text for the value's level.
std::string encode(double value, const BinBoundaries& b, const Encoding& enc);

/// Number of distinct levels a scheme can produce.
int level_count(const Encoding& enc);

}  // namespace sumboost
