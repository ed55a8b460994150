#pragma once

#include <optional>
#include <vector>

#include "graphmax/exponent.hpp"
#include "graphmax/graph.hpp"
#include "graphmax/maximal.hpp"
#include "graphmax/rational.hpp"

namespace graphmax {

enum class NormKind { Strong, Weak, Restricted, Isoclass };
enum class ResultKind { Exact, LowerBound, UpperBound, Estimate };

NormKind parse_norm_kind(const std::string& name);
std::string norm_kind_name(NormKind k);
std::string result_kind_name(ResultKind k);

struct OptimizerStats {
    int restarts = 0;
    long long iterations = 0;
    std::uint64_t seed = 0;
};

struct NormResult {
    double value = 0.0;
    std::optional<Rat> exact;  // set when the value is exactly rational
    ResultKind kind = ResultKind::Exact;
    double p = 1.0;
    std::vector<double> witness;  // length n+1, entry 0 unused; empty if none
    int delta_index = 0;          // > 0 when the witness is a Kronecker delta
    std::optional<OptimizerStats> optimizer;
    std::vector<std::string> notes;  // e.g. inexact case selection, non-convergence
};

inline constexpr double kTolerance = 1e-9;  // floating comparisons at irrational p

// ||M_G||_p for 0 < p <= 1 via the delta lemma; exact rational at p = 1.
NormResult strong_norm_exact(const Graph& g, const Exponent& p);

// ||M_[G]||_p for 0 < p <= 1.
NormResult isoclass_norm_exact(const Graph& g, const Exponent& p, int cap = kPermutationCap);

// max over nonempty A of ||M_G chi_A||_p / |A|^{1/p}, by 2^n subset scan.
NormResult restricted_norm(const Graph& g, const Exponent& p, int subset_cap = 20);

// The four-case closed form for ||M_{K_n}||_{p,rest}, p > 1.
NormResult restricted_norm_complete_closed_form(int n, const Exponent& p);

// ||f||_{p,inf} = max_j j^{1/p} f*_j; computed both by rearrangement and as
// sup_t t |{f > t}|^{1/p}, which must agree.
double weak_quasinorm(const std::vector<double>& f, double p);
Rat weak_quasinorm_p1(const RatVec& f);  // exact at p = 1

// max_k ||M_G delta_k||_{p,inf}: a lower bound for the weak norm (the delta
// lemma is not claimed for weak quasinorms).
NormResult weak_norm_delta_lower(const Graph& g, const Exponent& p);

// Closed-form constants and bound pairs for the named families.
struct ClosedFormConstant {
    double lo = 0.0, hi = 0.0;      // lo == hi when exact
    bool is_exact = false;
    bool is_comparator = false;     // an asymptotic comparator, not a bound
    std::optional<Rat> exact_rat;   // set when exact and rational
};

ClosedFormConstant closed_form_constants(Family family, int n, const Exponent& p, NormKind kind);

}  // namespace graphmax
