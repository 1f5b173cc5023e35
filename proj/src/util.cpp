#include "sumboost/util.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace sumboost {

Fnv64& Fnv64::update_f64(double v) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(v));
    std::memcpy(&bits, &v, sizeof(bits));
    return update_u64(bits);
}

std::uint64_t fnv64(std::string_view s) {
    Fnv64 h;
    h.update(s);
    return h.digest();
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view label, std::uint64_t index) {
    std::uint64_t state = base ^ fnv64(label) ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    splitmix64(state);
    return splitmix64(state);
}

std::size_t Rng::uniform_index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform_index: n must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % n);
}

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_words(std::string_view s) {
    std::vector<std::string> words;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) words.emplace_back(s.substr(start, i - start));
    }
    return words;
}

int word_count(std::string_view s) {
    return static_cast<int>(split_words(s).size());
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

namespace {

const char* kOnesCardinal[] = {
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
    "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen",
    "seventeen", "eighteen", "nineteen"};

const char* kTensCardinal[] = {"", "", "twenty", "thirty", "forty", "fifty",
                               "sixty", "seventy", "eighty", "ninety"};

const char* kOnesOrdinal[] = {
    "zeroth", "first", "second", "third", "fourth", "fifth", "sixth", "seventh",
    "eighth", "ninth", "tenth", "eleventh", "twelfth", "thirteenth", "fourteenth",
    "fifteenth", "sixteenth", "seventeenth", "eighteenth", "nineteenth"};

const char* kTensOrdinal[] = {"", "", "twentieth", "thirtieth", "fortieth", "fiftieth",
                              "sixtieth", "seventieth", "eightieth", "ninetieth"};

void check_range(int n) {
    if (n < 0 || n > 100) throw std::invalid_argument("number words supported for 0..100 only");
}

}  // namespace

std::string cardinal_words(int n) {
    check_range(n);
    if (n == 100) return "one hundred";
    if (n < 20) return kOnesCardinal[n];
    std::string out = kTensCardinal[n / 10];
    if (n % 10) out += std::string("-") + kOnesCardinal[n % 10];
    return out;
}

std::string ordinal_words(int n) {
    check_range(n);
    if (n == 100) return "hundredth";
    if (n < 20) return kOnesOrdinal[n];
    if (n % 10 == 0) return kTensOrdinal[n / 10];
    return std::string(kTensCardinal[n / 10]) + "-" + kOnesOrdinal[n % 10];
}

}  // namespace sumboost
