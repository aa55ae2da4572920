#include "lfmra/approx.hpp"

#include <cmath>
#include <numbers>

namespace lfmra {

ApproxMask approx_mask_from_tree(const FieldParams& f, const RootedTree& t,
                                 const PhaseAssignment& phases) {
    int q = f.order();
    ApproxMask m;
    m.q = q;
    m.lam.assign(static_cast<size_t>(q) * q, 0.0);
    m.at(0, 0) = 1.0;
    for (int v = 1; v < q; ++v) m.at(v, t.parent[v]) = 1.0;
    for (auto [v, ph] : phases) {
        if (v <= 0 || v >= q)
            throw ValidationError("phase assignment: key is not a nonzero vertex");
        m.at(v, t.parent[v]) =
            std::polar(1.0, 2.0 * std::numbers::pi * ph);
    }
    return m;
}

std::map<std::vector<int>, std::complex<double>>
approx_spectrum_from_tree(const FieldParams& f, const RootedTree& t,
                          const ApproxMask& m) {
    std::map<std::vector<int>, std::complex<double>> s;
    int M = t.height - 2;
    s[std::vector<int>(M + 1, 0)] = 1.0;
    for (int v = 1; v < f.order(); ++v) {
        auto path = tree_path(t, v);
        std::vector<int> digits(M + 1, 0);
        std::complex<double> val = 1.0;
        for (size_t i = 1; i < path.size(); ++i) {
            digits[path.size() - 1 - i] = path[i];
            val *= m.at(path[i], t.parent[path[i]]);
        }
        s[digits] = val;
    }
    return s;
}

bool approx_check(const FieldParams& f, const ApproxMask& m,
                  const std::map<std::vector<int>, std::complex<double>>& spec,
                  double tol) {
    int q = f.order();
    for (int i = 0; i < q; ++i) {
        double row = 0;
        for (int j = 0; j < q; ++j) {
            double a = std::abs(m.at(i, j));
            if (a > tol && std::fabs(a - 1.0) > tol) return false;
            row += a * a;
        }
        if (std::fabs(row - 1.0) > tol) return false;
    }
    std::vector<double> xi(q, 0.0);
    for (const auto& [d, v] : spec) xi[d[0]] += std::norm(v);
    for (int a = 0; a < q; ++a)
        if (std::fabs(xi[a] - 1.0) > tol) return false;
    return true;
}

} // namespace lfmra
