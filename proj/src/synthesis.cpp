#include "lfmra/synthesis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace lfmra {

StepFn scaling_from_spectrum(const FieldParams& f, const SpectrumTable& spec) {
    StepFn phi = StepFn::zero(f, 1, spec.M);
    for (long long i = 0; i < phi.grid.size(); ++i) {
        LocalElem x = phi.grid.local(i);
        Cyclo sum(f.p());
        for (const auto& [d, e] : spec.vals) {
            Character zeta = make_character(-1, d);
            int exp = (e + char_eval(f, zeta, x).exponent) % f.p();
            sum = sum + Cyclo::from_root(RootOfUnity{f.p(), exp});
        }
        phi.vals[i] = sum.scaled(f.s());
    }
    return phi;
}

std::optional<std::vector<IndicatorCell>> extract_indicator(const StepFn& phi) {
    const auto& g = phi.grid;
    // cells at level L are keyed by their digits at indices -Nw..L-1
    std::set<std::vector<int>> cells;
    for (long long i = 0; i < g.size(); ++i) {
        if (phi.vals[i].is_zero()) continue;
        if (!phi.vals[i].equals_rational(1, 0)) return std::nullopt;
        cells.insert(g.point(i));
    }
    int q = g.f->order();
    std::vector<IndicatorCell> out;
    for (int level = g.M; level > -g.Nw; --level) {
        // group by the digits below the top one and merge complete families
        std::map<std::vector<int>, int> family;
        for (const auto& d : cells)
            if (static_cast<int>(d.size()) == g.Nw + level)
                ++family[std::vector<int>(d.begin(), d.end() - 1)];
        std::set<std::vector<int>> next;
        for (const auto& d : cells) {
            if (static_cast<int>(d.size()) != g.Nw + level) {
                next.insert(d);
                continue;
            }
            std::vector<int> prefix(d.begin(), d.end() - 1);
            if (family[prefix] == q)
                next.insert(prefix); // merged into the parent once per sibling
            else
                out.push_back({make_local(-g.Nw, d), level});
        }
        cells = std::move(next);
    }
    for (const auto& d : cells) // fully merged down to K_{-Nw}
        out.push_back({make_local(-g.Nw, d), -g.Nw});
    std::sort(out.begin(), out.end(), [](const IndicatorCell& a, const IndicatorCell& b) {
        if (a.level != b.level) return a.level < b.level;
        return a.offset.digits < b.offset.digits;
    });
    return out;
}

namespace {

std::string fmt_gf(const FieldParams& f, int idx) {
    auto e = f.elem(idx);
    std::string s = "(";
    for (size_t i = 0; i < e.d.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e.d[i]);
    }
    return s + ")";
}

} // namespace

std::string indicator_to_string(const FieldParams& f,
                                const std::vector<IndicatorCell>& cells) {
    std::string s;
    for (size_t k = 0; k < cells.size(); ++k) {
        if (k) s += " U ";
        const auto& c = cells[k];
        for (int n = c.offset.lo; n < c.offset.hi(); ++n)
            if (c.offset.at(n) != 0)
                s += fmt_gf(f, c.offset.at(n)) + "g_" + std::to_string(n) + "+";
        s += "K_" + std::to_string(c.level);
    }
    if (cells.empty()) s = "{}";
    return s;
}

namespace {

std::string render(const FieldParams& f, int width,
                   const std::function<std::pair<int, int>(const std::vector<int>&)>& axes,
                   const std::function<bool(const std::vector<int>&)>& on) {
    if (f.s() != 2)
        throw ValidationError("grid rendering is defined for s = 2 only");
    int side = 1;
    for (int i = 0; i < width; ++i) side *= f.p();
    std::vector<std::vector<char>> mat(side, std::vector<char>(side, 0));
    std::vector<int> d(width, 0);
    long long total = 1;
    for (int i = 0; i < width; ++i) total *= f.order();
    for (long long c = 0; c < total; ++c) {
        long long t = c;
        for (int i = 0; i < width; ++i) {
            d[i] = static_cast<int>(t % f.order());
            t /= f.order();
        }
        if (!on(d)) continue;
        auto [r, col] = axes(d);
        mat[r][col] = 1;
    }
    std::string s;
    for (int r = 0; r < side; ++r) {
        for (int c = 0; c < side; ++c) {
            if (c) s += ' ';
            s += mat[r][c] ? '1' : '0';
        }
        s += '\n';
    }
    return s;
}

} // namespace

std::string grid_render(const StepFn& phi) {
    const FieldParams& f = *phi.grid.f;
    int width = phi.grid.Nw + phi.grid.M;
    return render(
        f, width,
        [&](const std::vector<int>& d) {
            int r = 0, c = 0; // most negative index first = most significant
            for (int i = 0; i < width; ++i) {
                auto e = f.elem(d[i]);
                r = r * f.p() + e.d[0];
                c = c * f.p() + e.d[1];
            }
            return std::pair<int, int>{r, c};
        },
        [&](const std::vector<int>& d) { return !phi.vals[phi.grid.index(d)].is_zero(); });
}

std::string grid_render_spectrum(const FieldParams& f, const SpectrumTable& spec) {
    int width = spec.M + 1;
    return render(
        f, width,
        [&](const std::vector<int>& d) {
            int r = 0, c = 0; // highest index first = most significant
            for (int i = width - 1; i >= 0; --i) {
                auto e = f.elem(d[i]);
                r = r * f.p() + e.d[0];
                c = c * f.p() + e.d[1];
            }
            return std::pair<int, int>{r, c};
        },
        [&](const std::vector<int>& d) { return spec.vals.count(d) > 0; });
}

} // namespace lfmra
