#include "qecsyn/rng.hpp"

#include <cmath>

namespace qecsyn {

double SeqRng::next_normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    double u1 = 0.0;
    do {
        u1 = next_double();
    } while (u1 <= 0.0);
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
}

uint64_t binomial_draw(SeqRng& rng, uint64_t n, double p) {
    if (n == 0 || p <= 0.0) return 0;
    if (p >= 1.0) return n;
    double mean = double(n) * p;
    double var = mean * (1.0 - p);
    if (var > 100.0) {
        double x = std::round(mean + std::sqrt(var) * rng.next_normal());
        if (x < 0.0) x = 0.0;
        if (x > double(n)) x = double(n);
        return uint64_t(x);
    }
    if (mean < 32.0) {
        // geometric skip sampling: count successes via gaps between them
        double log1mp = std::log1p(-p);
        uint64_t count = 0, pos = 0;
        while (true) {
            double u = rng.next_double();
            uint64_t gap = uint64_t(std::floor(std::log1p(-u) / log1mp));
            pos += gap + 1;
            if (pos > n) break;
            ++count;
        }
        return count;
    }
    // small-variance middle ground: direct Bernoulli loop
    uint64_t count = 0;
    for (uint64_t i = 0; i < n; ++i)
        if (rng.next_double() < p) ++count;
    return count;
}

}  // namespace qecsyn
