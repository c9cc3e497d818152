#include "treelim/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace treelim {

namespace {

using cd = std::complex<double>;

// Initial guesses at the tropical root magnitudes: one circle per edge of the
// upper convex hull of (k, log|a_k|).
std::vector<cd> tropical_start(const std::vector<cd>& a) {
    int n = static_cast<int>(a.size()) - 1;
    std::vector<std::pair<int, double>> pts;
    for (int k = 0; k <= n; ++k) {
        if (std::abs(a[k]) > 0.0) pts.emplace_back(k, std::log(std::abs(a[k])));
    }
    // Upper hull, left to right.
    std::vector<std::pair<int, double>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& q = hull[hull.size() - 1];
            const auto& r = hull[hull.size() - 2];
            double cross = (q.first - r.first) * (p.second - r.second) -
                           (q.second - r.second) * (p.first - r.first);
            if (cross >= 0) hull.pop_back();
            else break;
        }
        hull.push_back(p);
    }
    std::vector<cd> z;
    z.reserve(static_cast<size_t>(n));
    for (size_t e = 0; e + 1 < hull.size(); ++e) {
        int k1 = hull[e].first, k2 = hull[e + 1].first;
        double radius = std::exp((hull[e].second - hull[e + 1].second) / (k2 - k1));
        int count = k2 - k1;
        for (int j = 0; j < count; ++j) {
            double angle = 2.0 * M_PI * (j + 0.37) / count + 0.5 * static_cast<double>(e);
            z.push_back(std::polar(radius, angle));
        }
    }
    return z;
}

}  // namespace

std::vector<cd> find_roots(std::vector<cd> coeffs) {
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.size() <= 1) return {};

    std::vector<cd> zero_roots;
    while (std::abs(coeffs.front()) == 0.0) {
        zero_roots.emplace_back(0.0, 0.0);
        coeffs.erase(coeffs.begin());
    }
    int n = static_cast<int>(coeffs.size()) - 1;
    if (n == 0) return zero_roots;

    double scale = 0.0;
    for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
    for (auto& c : coeffs) c /= scale;

    std::vector<cd> z = tropical_start(coeffs);
    if (static_cast<int>(z.size()) != n) throw std::logic_error("tropical start size mismatch");

    std::vector<cd> dcoeffs(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) dcoeffs[static_cast<size_t>(k - 1)] = coeffs[static_cast<size_t>(k)] * static_cast<double>(k);

    auto horner = [](const std::vector<cd>& c, cd x) {
        cd acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    };

    for (int iter = 0; iter < 400; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            cd p = horner(coeffs, z[static_cast<size_t>(i)]);
            cd dp = horner(dcoeffs, z[static_cast<size_t>(i)]);
            if (std::abs(dp) == 0.0) { z[static_cast<size_t>(i)] *= cd(1.0 + 1e-8, 1e-8); continue; }
            cd newton = p / dp;
            cd repulse = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j != i) repulse += 1.0 / (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
            }
            cd step = newton / (1.0 - newton * repulse);
            z[static_cast<size_t>(i)] -= step;
            worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[static_cast<size_t>(i)])));
        }
        if (worst < 1e-14) break;
    }

    z.insert(z.end(), zero_roots.begin(), zero_roots.end());
    return z;
}

}  // namespace treelim
