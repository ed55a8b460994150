#include "graphmax/exact_norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "graphmax/covering.hpp"
#include "graphmax/numeric_norms.hpp"

namespace graphmax {

NormKind parse_norm_kind(const std::string& name) {
    if (name == "strong") return NormKind::Strong;
    if (name == "weak") return NormKind::Weak;
    if (name == "restricted") return NormKind::Restricted;
    if (name == "isoclass") return NormKind::Isoclass;
    throw InputError("unknown norm kind: " + name);
}

std::string norm_kind_name(NormKind k) {
    switch (k) {
        case NormKind::Strong: return "strong";
        case NormKind::Weak: return "weak";
        case NormKind::Restricted: return "restricted";
        case NormKind::Isoclass: return "isoclass";
    }
    return "?";
}

std::string result_kind_name(ResultKind k) {
    switch (k) {
        case ResultKind::Exact: return "exact";
        case ResultKind::LowerBound: return "lower_bound";
        case ResultKind::UpperBound: return "upper_bound";
        case ResultKind::Estimate: return "estimate";
    }
    return "?";
}

namespace {

void require_p_in_0_1(const Exponent& p) {
    if (!(p.value > 0.0) || p.value > 1.0)
        throw InvalidExponent("this norm is exact only for 0 < p <= 1");
}

std::vector<double> delta_witness(int n, int k) {
    std::vector<double> w(n + 1, 0.0);
    w[k] = 1.0;
    return w;
}

// max_k of either the rational 1-norm or the double p-quasinorm of M_G delta_k,
// given the per-delta image columns.
NormResult delta_lemma_norm(int n, const Exponent& p,
                            const std::function<RatVec(int)>& column) {
    NormResult r;
    r.p = p.value;
    r.kind = ResultKind::Exact;
    if (p.is_one()) {
        Rat best(-1);
        for (int k = 1; k <= n; ++k) {
            RatVec col = column(k);
            Rat sum(0);
            for (int j = 1; j <= n; ++j) sum += col[j];
            if (sum > best) {
                best = sum;
                r.delta_index = k;
            }
        }
        r.exact = best;
        r.value = to_double(best);
    } else {
        double best = -1.0;
        for (int k = 1; k <= n; ++k) {
            RatVec col = column(k);
            double sum = 0.0;
            for (int j = 1; j <= n; ++j) sum += std::pow(to_double(col[j]), p.value);
            double v = std::pow(sum, 1.0 / p.value);
            if (v > best) {
                best = v;
                r.delta_index = k;
            }
        }
        r.value = best;
    }
    r.witness = delta_witness(n, r.delta_index);
    return r;
}

}  // namespace

NormResult strong_norm_exact(const Graph& g, const Exponent& p) {
    require_p_in_0_1(p);
    DeltaResponseMatrix m = delta_response_matrix(g);
    const int n = g.size();
    return delta_lemma_norm(n, p, [&](int k) {
        RatVec col(n + 1, Rat(0));
        for (int j = 1; j <= n; ++j) col[j] = m.at(j, k);
        return col;
    });
}

NormResult isoclass_norm_exact(const Graph& g, const Exponent& p, int cap) {
    require_p_in_0_1(p);
    const int n = g.size();
    return delta_lemma_norm(
        n, p, [&](int k) { return eval_isoclass_maximal(g, delta<Rat>(n, k), cap); });
}

NormResult restricted_norm(const Graph& g, const Exponent& p, int subset_cap) {
    const int n = g.size();
    if (n > subset_cap)
        throw CapExceeded("restricted norm subset scan: n = " + std::to_string(n) +
                          " exceeds cap " + std::to_string(subset_cap));
    NormResult r;
    r.p = p.value;
    r.kind = ResultKind::Exact;
    double best = -1.0;
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<double> f(n + 1, 0.0);
        int size = 0;
        for (int v = 1; v <= n; ++v)
            if (mask >> (v - 1) & 1) {
                f[v] = 1.0;
                ++size;
            }
        std::vector<double> mf = eval_maximal(g, std::move(f));
        double sum = 0.0;
        for (int j = 1; j <= n; ++j) sum += std::pow(mf[j], p.value);
        double ratio = std::pow(sum / size, 1.0 / p.value);
        if (ratio > best) {
            best = ratio;
            best_mask = mask;
        }
    }
    r.value = best;
    r.witness.assign(n + 1, 0.0);
    for (int v = 1; v <= n; ++v)
        if (best_mask >> (v - 1) & 1) r.witness[v] = 1.0;
    return r;
}

NormResult restricted_norm_complete_closed_form(int n, const Exponent& p) {
    if (n < 2) throw UnsupportedSize("restricted closed form needs n >= 2");
    if (!(p.value > 1.0)) throw InvalidExponent("restricted closed form needs p > 1");
    const double pv = p.value;
    NormResult r;
    r.p = pv;
    r.kind = ResultKind::Exact;

    // n <= p' iff n(num-den) <= num; n <= p iff n*den <= num (exact when the
    // exponent came in as a fraction).
    bool n_le_conj, n_le_p;
    if (p.from_fraction) {
        n_le_conj = n * (p.num - p.den) <= p.num;
        n_le_p = static_cast<std::int64_t>(n) * p.den <= p.num;
    } else {
        n_le_conj = n <= p.conjugate() + 1e-12;
        n_le_p = n <= pv + 1e-12;
    }

    double inner;
    if (n_le_conj) {
        inner = 1.0 + (n - 1) / std::pow(n, pv);
    } else if (n_le_p) {
        inner = 1.0 + std::pow(n - 1, pv - 1.0) / std::pow(n, pv);
    } else {
        auto integ = p.n_over_conjugate(n);
        if (!integ.exact)
            r.notes.push_back("integrality of n/p' decided within 1e-9 (p given as decimal)");
        if (integ.integral) {
            inner = 1.0 + std::pow(pv - 1.0, pv - 1.0) / std::pow(pv, pv);
        } else {
            double q = static_cast<double>(integ.floor);
            double a = (n - q) * std::pow(q, pv - 1.0);
            double b = (n - 1 - q) * std::pow(q + 1.0, pv - 1.0);
            inner = 1.0 + std::max(a, b) / std::pow(n, pv);
        }
    }
    r.value = std::pow(inner, 1.0 / pv);
    return r;
}

double weak_quasinorm(const std::vector<double>& f, double p) {
    if (!(p > 0.0)) throw InvalidExponent("weak quasinorm needs p > 0");
    std::vector<double> sorted(f.begin() + 1, f.end());
    for (auto& x : sorted) x = std::abs(x);
    std::sort(sorted.rbegin(), sorted.rend());
    const int n = static_cast<int>(sorted.size());

    double by_rearrangement = 0.0;
    for (int j = 1; j <= n; ++j)
        by_rearrangement = std::max(by_rearrangement, std::pow(j, 1.0 / p) * sorted[j - 1]);

    // sup_t t |{f > t}|^{1/p}: on [f*_{j+1}, f*_j) the count is j, so the sup
    // is approached at t -> f*_j from below.
    double by_threshold = 0.0;
    for (int j = 1; j <= n; ++j) {
        if (j < n && sorted[j] == sorted[j - 1]) continue;  // not the last tied rank
        by_threshold = std::max(by_threshold, sorted[j - 1] * std::pow(j, 1.0 / p));
    }
    if (std::abs(by_rearrangement - by_threshold) >
        1e-12 * std::max(1.0, by_rearrangement))
        throw Error("weak quasinorm formulas disagree");
    return by_rearrangement;
}

Rat weak_quasinorm_p1(const RatVec& f) {
    RatVec sorted(f.begin() + 1, f.end());
    for (auto& x : sorted)
        if (x < 0) x = -x;
    std::sort(sorted.rbegin(), sorted.rend());
    Rat best(0);
    for (size_t j = 1; j <= sorted.size(); ++j) best = std::max(best, Rat(j) * sorted[j - 1]);
    return best;
}

NormResult weak_norm_delta_lower(const Graph& g, const Exponent& p) {
    if (!(p.value > 0.0)) throw InvalidExponent("weak norm needs p > 0");
    const int n = g.size();
    DeltaResponseMatrix m = delta_response_matrix(g);
    NormResult r;
    r.p = p.value;
    r.kind = ResultKind::LowerBound;
    if (p.is_one()) {
        Rat best(-1);
        for (int k = 1; k <= n; ++k) {
            RatVec col(n + 1, Rat(0));
            for (int j = 1; j <= n; ++j) col[j] = m.at(j, k);
            Rat v = weak_quasinorm_p1(col);
            if (v > best) {
                best = v;
                r.delta_index = k;
            }
        }
        r.exact = best;
        r.value = to_double(best);
    } else {
        double best = -1.0;
        for (int k = 1; k <= n; ++k) {
            std::vector<double> col(n + 1, 0.0);
            for (int j = 1; j <= n; ++j) col[j] = to_double(m.at(j, k));
            double v = weak_quasinorm(col, p.value);
            if (v > best) {
                best = v;
                r.delta_index = k;
            }
        }
        r.value = best;
    }
    r.witness = delta_witness(n, r.delta_index);
    return r;
}

namespace {

ClosedFormConstant exact_value(double v, std::optional<Rat> rat = std::nullopt) {
    ClosedFormConstant c;
    c.lo = c.hi = v;
    c.is_exact = true;
    c.exact_rat = std::move(rat);
    return c;
}

ClosedFormConstant bound_pair(double lo, double hi) {
    ClosedFormConstant c;
    c.lo = lo;
    c.hi = hi;
    return c;
}

ClosedFormConstant comparator(double v) {
    ClosedFormConstant c;
    c.lo = c.hi = v;
    c.is_comparator = true;
    return c;
}

}  // namespace

ClosedFormConstant closed_form_constants(Family family, int n, const Exponent& p, NormKind kind) {
    if (n < 2) throw UnsupportedSize("closed forms need n >= 2");
    if (!(p.value > 0.0)) throw InvalidExponent("closed forms need p > 0");
    const double pv = p.value;
    const double nn = n;

    if (family == Family::Complete && kind == NormKind::Strong) {
        double lower = std::pow(1.0 + (nn - 1.0) / std::pow(nn, pv), 1.0 / pv);
        if (pv <= 1.0) {
            if (p.is_one()) return exact_value(lower, Rat(2 * n - 1, n));
            return exact_value(lower);
        }
        if (n == 2) return exact_value(k2_norm(pv));  // unique root of the alpha equation
        return bound_pair(lower, std::pow(1.0 + (nn - 1.0) / nn, 1.0 / pv));
    }
    if (family == Family::Complete && kind == NormKind::Weak) {
        if (pv <= 1.0) {
            double v = std::pow(nn, 1.0 / pv - 1.0);
            if (p.is_one()) return exact_value(1.0, Rat(1));
            return exact_value(v);
        }
        return exact_value(1.0, Rat(1));
    }
    if (family == Family::Star && kind == NormKind::Strong) {
        double lower = std::pow(1.0 + (nn - 1.0) / std::pow(2.0, pv), 1.0 / pv);
        if (pv <= 1.0) {
            if (p.is_one()) return exact_value(lower, Rat(n + 1, 2));
            return exact_value(lower);
        }
        return bound_pair(lower, std::pow((nn + 5.0) / 2.0, 1.0 / pv));
    }
    if (family == Family::Star && kind == NormKind::Weak) {
        double root = std::pow(nn, 1.0 / pv);
        return bound_pair(std::max(root / 2.0, 1.0), root);
    }
    if (family == Family::Path && kind == NormKind::Strong) {
        if (p.is_one()) return comparator(std::log(nn));
        if (pv < 1.0)
            return comparator(std::pow((std::pow(nn, 1.0 - pv) - 1.0) / (1.0 - pv), 1.0 / pv));
        throw UnsupportedCombination("no path strong-norm closed form for p > 1");
    }
    if (family == Family::Path && kind == NormKind::Weak) {
        if (pv < 1.0) throw UnsupportedCombination("no path weak-norm closed form for p < 1");
        double hi = p.is_one() ? 2.0 : interpolation_bound(pv, 2.0, 1.0);
        return bound_pair(1.0, std::min(3.0, hi));
    }
    throw UnsupportedCombination("no closed form for family " + family_name(family) +
                                 ", norm kind " + norm_kind_name(kind));
}

}  // namespace graphmax
