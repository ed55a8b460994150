#pragma once

#include <cstdint>

#include "graphmax/exact_norms.hpp"
#include "graphmax/graph.hpp"

namespace graphmax {

// Multistart projected coordinate ascent on {f >= 0, ||f||_p = 1}.
struct OptimizerConfig {
    int restarts = 0;  // 0 means the default 16 + n
    int max_iters = 5000;
    double initial_step = 0.25;
    double step_decay = 0.5;
    double tolerance = 1e-10;
    std::uint64_t seed = 0;
};

// Certified lower bound for ||M_G||_p, p > 1: the returned witness achieves
// the value under direct re-evaluation.
NormResult strong_norm_estimate(const Graph& g, const Exponent& p, OptimizerConfig cfg = {});

// Certified lower bound for ||M_G||_{p,inf}, p > 0.
NormResult weak_norm_estimate(const Graph& g, const Exponent& p, OptimizerConfig cfg = {});

// The unique root alpha_p in (0,1) of (1+a)^{p-1} = 2^p a^{p-1} / (1 - a^{p-1}),
// to 1e-12, and the resulting exact value of ||M_{K_2}||_p.
double k2_alpha_root(double p);
double k2_norm(double p);

}  // namespace graphmax
