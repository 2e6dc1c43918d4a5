#include "c2ring/spectral_names.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace c2ring {

TauStatus TauStatus::torsion(std::int64_t k) {
    if (k < 0) throw std::invalid_argument("TauStatus::torsion: k must be >= 0");
    return {Kind::Torsion, k};
}

namespace {

std::string power(const std::string& base, std::int64_t e) {
    return e == 1 ? base : base + "^" + std::to_string(e);
}

// "rho^a tau^b" with zero exponents omitted, parenthesized when both appear.
std::string denominator(std::int64_t a, std::int64_t b) {
    if (a > 0 && b > 0) return "(" + power("rho", a) + " " + power("tau", b) + ")";
    if (a > 0) return power("rho", a);
    if (b > 0) return power("tau", b);
    return "";
}

}  // namespace

std::string E1MinusClass::name() const {
    std::string head = kind == Kind::Gamma ? "gamma" : "Q";
    const std::string den = denominator(a, b);
    if (!den.empty()) head += "/" + den;
    if (base != "1") head += "*" + base;
    return head;
}

std::vector<E1MinusClass> enumerate_e1_minus(const std::vector<ExtCGenerator>& catalog,
                                             const TriWindow& window) {
    for (const auto& g : catalog) {
        if (g.degree.stem < 0)
            throw std::invalid_argument("enumerate_e1_minus: generator '" + g.label +
                                        "' has stem < 0 (Ext_C is concentrated in "
                                        "nonnegative stems)");
        if (g.degree.filtration < 0)
            throw std::invalid_argument("enumerate_e1_minus: generator '" + g.label +
                                        "' has filtration < 0");
    }

    std::vector<E1MinusClass> out;
    const auto in_window = [&](TriDegree d) {
        return window.smin <= d.stem && d.stem <= window.smax && window.fmin <= d.filtration &&
               d.filtration <= window.fmax && window.wmin <= d.weight && d.weight <= window.wmax;
    };

    for (const auto& g : catalog) {
        const auto [s, f, w] = g.degree;
        if (g.tau.kind == TauStatus::Kind::Free) {
            // gamma/(rho^a tau^b): degree (s+a, f, w+a+b+1), b >= 1
            const std::int64_t amax = std::min(window.smax - s, window.wmax - w - 2);
            for (std::int64_t a = 0; a <= amax; ++a)
                for (std::int64_t b = 1; w + a + b + 1 <= window.wmax; ++b) {
                    const TriDegree d{s + a, f, w + a + b + 1};
                    if (in_window(d)) out.push_back({E1MinusClass::Kind::Gamma, a, b, g.label, d});
                }
        } else {
            // Q/(rho^a tau^b): degree (s+a+1, f-1, w+a+b+1), 0 <= b <= k
            const std::int64_t amax = std::min(window.smax - s - 1, window.wmax - w - 1);
            for (std::int64_t a = 0; a <= amax; ++a)
                for (std::int64_t b = 0; b <= g.tau.k && w + a + b + 1 <= window.wmax; ++b) {
                    const TriDegree d{s + a + 1, f - 1, w + a + b + 1};
                    if (in_window(d)) out.push_back({E1MinusClass::Kind::Q, a, b, g.label, d});
                }
        }
    }

    std::sort(out.begin(), out.end(), [](const E1MinusClass& x, const E1MinusClass& y) {
        if (x.degree != y.degree) return x.degree < y.degree;
        if (x.kind != y.kind) return x.kind < y.kind;
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.base < y.base;
    });
    return out;
}

CheckReport validate_e1_support(const std::vector<E1MinusClass>& classes) {
    CheckReport report;
    bool nonneg = true, no_minus_one = true;
    std::string offender;
    for (const auto& c : classes) {
        if (c.degree.stem < 0) {
            nonneg = false;
            if (offender.empty()) offender = c.name() + " at " + to_string(c.degree);
        }
        if (c.degree.stem == -1) no_minus_one = false;
    }
    report.add("e1-support/stems nonnegative", nonneg, offender);
    report.add("e1-support/(-1)-stem empty", no_minus_one,
               no_minus_one ? "" : "a class sits in stem -1");
    return report;
}

std::string AdamsName::str() const {
    switch (kind) {
        case Kind::H0: return "h0";
        case Kind::TauPowH0: return power("tau", tau) + " h0";
        case Kind::GammaOverTau: return "gamma/" + power("tau", tau);
        case Kind::H1: return "h1";
        default: return "Q/" + power("rho", rho) + " " + power("h1", h1);
    }
}

std::optional<AdamsName> adams_name(const BasisElement& b) {
    switch (b.tag()) {
        case BasisTag::Omega: {
            const std::int64_t n = b.index();
            if (n == 0) return AdamsName{AdamsName::Kind::H0, 0, 0, 0};
            if (n > 0) return AdamsName{AdamsName::Kind::TauPowH0, 2 * n, 0, 0};
            return AdamsName{AdamsName::Kind::GammaOverTau, -2 * n - 1, 0, 0};
        }
        case BasisTag::XClass: {
            const std::int64_t i = b.index();
            if (i == 1) return AdamsName{AdamsName::Kind::H1, 0, 0, 0};
            if (i % 8 == 7) {  // i = 8k-1
                const std::int64_t k = (i + 1) / 8;
                return AdamsName{AdamsName::Kind::QOverRho, 0, 4 * k - 2, 4 * k};
            }
            if (i % 8 == 1) {  // i = 8k+1
                const std::int64_t k = (i - 1) / 8;
                return AdamsName{AdamsName::Kind::QOverRho, 0, 4 * k - 1, 4 * k + 1};
            }
            return std::nullopt;  // the table names no other x[i]
        }
        default: return std::nullopt;
    }
}

std::vector<ExtCGenerator> parse_catalog(std::istream& in) {
    std::vector<ExtCGenerator> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string label;
        if (!(fields >> label)) continue;  // blank / comment-only line
        ExtCGenerator g;
        g.label = label;
        std::string status;
        if (!(fields >> g.degree.stem >> g.degree.filtration >> g.degree.weight >> status))
            throw std::runtime_error("catalog line " + std::to_string(lineno) +
                                     ": expected 'label s f w tau_status'");
        std::string extra;
        if (fields >> extra)
            throw std::runtime_error("catalog line " + std::to_string(lineno) +
                                     ": trailing field '" + extra + "'");
        if (status == "free") {
            g.tau = TauStatus::free();
        } else if (status.rfind("torsion:", 0) == 0) {
            const std::string order = status.substr(8);
            std::int64_t k = -1;
            std::size_t consumed = 0;
            try {
                k = std::stoll(order, &consumed);
            } catch (const std::exception&) {
                consumed = 0;
            }
            if (consumed != order.size() || k < 0)
                throw std::runtime_error("catalog line " + std::to_string(lineno) +
                                         ": bad torsion order in '" + status + "'");
            g.tau = TauStatus::torsion(k);
        } else {
            throw std::runtime_error("catalog line " + std::to_string(lineno) +
                                     ": tau_status must be 'free' or 'torsion:k', got '" +
                                     status + "'");
        }
        if (g.degree.stem < 0)
            throw std::runtime_error("catalog line " + std::to_string(lineno) +
                                     ": stem must be >= 0");
        if (g.degree.filtration < 0)
            throw std::runtime_error("catalog line " + std::to_string(lineno) +
                                     ": filtration must be >= 0");
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<ExtCGenerator> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file: " + path);
    return parse_catalog(in);
}

const std::vector<ExtCGenerator>& bundled_catalog() {
    static const std::vector<ExtCGenerator> catalog = {
        {"1", {0, 0, 0}, TauStatus::free()},
        {"h0", {0, 1, 0}, TauStatus::free()},
        {"h1", {1, 1, 1}, TauStatus::free()},
    };
    return catalog;
}

}  // namespace c2ring
