#include "sumboost/discretize.hpp"

#include <algorithm>
#include <cmath>

#include "sumboost/errors.hpp"
#include "sumboost/util.hpp"

namespace sumboost {

Scheme scheme_from_string(const std::string& name) {
    if (name == "bins_quantified") return Scheme::bins_quantified;
    if (name == "bins_plain") return Scheme::bins_plain;
    if (name == "percentile") return Scheme::percentile;
    if (name == "std_dev") return Scheme::std_dev;
    if (name == "quartiles") return Scheme::quartiles;
    throw DataError("unknown encoding scheme: " + name);
}

std::string scheme_to_string(Scheme s) {
    switch (s) {
        case Scheme::bins_quantified: return "bins_quantified";
        case Scheme::bins_plain: return "bins_plain";
        case Scheme::percentile: return "percentile";
        case Scheme::std_dev: return "std_dev";
        case Scheme::quartiles: return "quartiles";
    }
    throw DataError("invalid scheme value");
}

std::vector<std::string> default_quantifiers(int bin_count) {
    switch (bin_count) {
        case 4: return {"very low", "low", "high", "very high"};
        case 5: return {"very low", "low", "medium", "high", "very high"};
        case 7:
            return {"extremely low", "very low", "low", "medium",
                    "high", "very high", "extremely high"};
        case 9:
            return {"lowest", "extremely low", "very low", "low", "medium",
                    "high", "very high", "extremely high", "highest"};
        default:
            throw DataError("no stock quantifier ladder for " + std::to_string(bin_count) +
                            " bins");
    }
}

Encoding default_encoding() {
    Encoding enc;
    enc.scheme = Scheme::bins_quantified;
    enc.bin_count = 5;
    enc.quantifiers = default_quantifiers(5);
    return enc;
}

namespace {

bool is_bin_scheme(Scheme s) {
    return s == Scheme::bins_quantified || s == Scheme::bins_plain;
}

void validate(const Encoding& enc) {
    if (is_bin_scheme(enc.scheme)) {
        const int n = enc.bin_count;
        if (n != 4 && n != 5 && n != 7 && n != 9 && n != 10)
            throw DataError("bin_count must be one of 4, 5, 7, 9, 10");
        if (enc.scheme == Scheme::bins_quantified) {
            if (static_cast<int>(enc.quantifiers.size()) != n)
                throw DataError("quantifier list size must equal bin_count");
            for (const auto& q : enc.quantifiers)
                if (q.empty()) throw DataError("quantifier names must be nonempty");
        }
    }
}

/// Nearest-rank quantile of a sorted sample: element ceil(q*n) - 1.
double nearest_rank(const std::vector<double>& sorted, double q) {
    const auto n = static_cast<long long>(sorted.size());
    long long rank = static_cast<long long>(std::ceil(q * static_cast<double>(n)));
    rank = std::clamp(rank, 1LL, n);
    return sorted[rank - 1];
}

}  // namespace

BinBoundaries fit(const std::vector<double>& train_values, const Encoding& enc,
                  const std::string& column) {
    validate(enc);
    if (train_values.empty()) throw EmptyColumn("cannot fit an encoding on an empty column");

    std::vector<double> sorted = train_values;
    std::sort(sorted.begin(), sorted.end());

    BinBoundaries b;
    b.column = column;
    b.fitted = true;
    Fnv64 h;
    for (double v : sorted) h.update_f64(v);
    b.fitted_on = hex64(h.digest());

    switch (enc.scheme) {
        case Scheme::bins_quantified:
        case Scheme::bins_plain: {
            const long long n = static_cast<long long>(sorted.size());
            for (int i = 1; i < enc.bin_count; ++i) {
                // ceil(i*n/bin_count) in integer arithmetic
                const long long rank = (static_cast<long long>(i) * n + enc.bin_count - 1) /
                                       enc.bin_count;
                b.edges.push_back(sorted[std::max(rank, 1LL) - 1]);
            }
            break;
        }
        case Scheme::percentile:
            b.sorted_values = std::move(sorted);
            break;
        case Scheme::std_dev: {
            double mean = 0.0;
            for (double v : sorted) mean += v;
            mean /= static_cast<double>(sorted.size());
            double ss = 0.0;
            for (double v : sorted) ss += (v - mean) * (v - mean);
            b.mean = mean;
            b.stddev = sorted.size() > 1
                           ? std::sqrt(ss / static_cast<double>(sorted.size() - 1))
                           : 0.0;
            break;
        }
        case Scheme::quartiles:
            b.q1 = nearest_rank(sorted, 0.25);
            b.median = nearest_rank(sorted, 0.5);
            b.q3 = nearest_rank(sorted, 0.75);
            break;
    }
    return b;
}

int level_count(const Encoding& enc) {
    switch (enc.scheme) {
        case Scheme::bins_quantified:
        case Scheme::bins_plain: return enc.bin_count;
        case Scheme::percentile: return 101;
        case Scheme::std_dev: return 6;
        case Scheme::quartiles: return 4;
    }
    throw DataError("invalid scheme value");
}

int level_index(double value, const BinBoundaries& b, const Encoding& enc) {
    if (!b.fitted) throw NotFitted("encode() called before fit()");
    validate(enc);
    switch (enc.scheme) {
        case Scheme::bins_quantified:
        case Scheme::bins_plain: {
            // A fully collapsed edge list means the fitted column was constant;
            // everything lands in the middle bin.
            if (b.edges.empty() || b.edges.front() == b.edges.back()) return enc.bin_count / 2;
            // Half-open bins [e_i, e_{i+1}); below-range clamps to bin 0 and
            // the last bin is closed above.
            int level = 0;
            for (double e : b.edges)
                if (value >= e) ++level;
            return level;
        }
        case Scheme::percentile: {
            const auto less = std::lower_bound(b.sorted_values.begin(), b.sorted_values.end(),
                                               value) -
                              b.sorted_values.begin();
            return static_cast<int>(100 * static_cast<long long>(less) /
                                    static_cast<long long>(b.sorted_values.size()));
        }
        case Scheme::std_dev: {
            const double z = b.stddev > 0.0 ? (value - b.mean) / b.stddev : 0.0;
            if (z < -2.0) return 0;
            if (z < -1.0) return 1;
            if (z < 0.0) return 2;
            if (z <= 1.0) return 3;
            if (z <= 2.0) return 4;
            return 5;
        }
        case Scheme::quartiles: {
            if (value < b.q1) return 0;
            if (value < b.median) return 1;
            if (value <= b.q3) return 2;
            return 3;
        }
    }
    throw DataError("invalid scheme value");
}

std::string encode(double value, const BinBoundaries& b, const Encoding& enc) {
    const int level = level_index(value, b, enc);
    switch (enc.scheme) {
        case Scheme::bins_quantified:
            return enc.quantifiers[level];
        case Scheme::bins_plain:
            return "falls in the " + ordinal_words(level + 1) + " out of " +
                   cardinal_words(enc.bin_count) + " bins of values";
        case Scheme::percentile:
            return "falls in the " + ordinal_words(level) + " percentile";
        case Scheme::std_dev: {
            static const char* kPhrases[6] = {
                "is three std-dev below the mean value", "is two std-dev below the mean value",
                "is within one std-dev below the mean value",
                "is within one std-dev above the mean value",
                "is two std-dev above the mean value", "is three std-dev above the mean value"};
            return kPhrases[level];
        }
        case Scheme::quartiles: {
            static const char* kPhrases[4] = {
                "is less than the first quartile value",
                "is between the first quartile and median values",
                "is between median and third quartile values",
                "is more than the third quartile value"};
            return kPhrases[level];
        }
    }
    throw DataError("invalid scheme value");
}

}  // namespace sumboost
