#include "graphmax/cli_commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "graphmax/covering.hpp"
#include "graphmax/enumerate.hpp"
#include "graphmax/maximal.hpp"
#include "graphmax/numeric_norms.hpp"

namespace graphmax::cli {

using nlohmann::json;

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "table") return Format::Table;
    throw InputError("unknown format: " + name);
}

Graph load_graph(const GraphSource& src) {
    if (src.family) return Graph::named(*src.family, src.n);
    if (src.edges_file.empty()) throw InputError("either --family/--n or --edges is required");
    std::ifstream in(src.edges_file);
    if (!in) throw InputError("cannot open graph file: " + src.edges_file);
    return Graph::read_text(in);
}

int worker_count() {
    if (const char* env = std::getenv("GM_THREADS")) {
        int k = std::atoi(env);
        if (k >= 1) return k;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace {

// Static split; fn(i) must be independent across i and write only to slot i.
void parallel_for(int total, const std::function<void(int)>& fn) {
    int workers = std::min(worker_count(), total);
    if (workers <= 1) {
        for (int i = 0; i < total; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < total; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

std::string decimal(double v) {
    std::ostringstream os;
    os << std::setprecision(15) << v;
    return os.str();
}

std::string value_string(const NormResult& r) {
    if (r.exact) return rat_to_string(*r.exact);
    return decimal(r.value);
}

json graph_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"n", g.size()}, {"edges", edges}};
}

json result_json(const Graph& g, NormKind kind, const NormResult& r) {
    json j{{"schema_version", 1},
           {"graph", graph_json(g)},
           {"p", r.p},
           {"norm_kind", norm_kind_name(kind)},
           {"kind", result_kind_name(r.kind)},
           {"value", value_string(r)}};
    if (!r.witness.empty()) {
        json w = json::array();
        for (size_t v = 1; v < r.witness.size(); ++v) w.push_back(r.witness[v]);
        j["witness"] = w;
    }
    if (r.delta_index > 0) j["witness_delta_index"] = r.delta_index;
    if (r.optimizer)
        j["optimizer"] = json{{"restarts", r.optimizer->restarts},
                              {"iterations", r.optimizer->iterations},
                              {"seed", r.optimizer->seed}};
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

void print_result(std::ostream& out, Format format, const Graph& g, NormKind kind,
                  const NormResult& r) {
    if (format == Format::Json) {
        out << result_json(g, kind, r).dump(2) << "\n";
        return;
    }
    out << norm_kind_name(kind) << " norm, p = " << r.p << "\n"
        << "  kind:  " << result_kind_name(r.kind) << "\n"
        << "  value: " << value_string(r) << "\n";
    if (r.delta_index > 0) out << "  witness: delta_" << r.delta_index << "\n";
    for (const auto& note : r.notes) out << "  note: " << note << "\n";
}

NormResult compute_norm(const Graph& g, const Exponent& p, NormKind kind, std::uint64_t seed,
                        int cap) {
    switch (kind) {
        case NormKind::Strong:
            if (p.value <= 1.0) return strong_norm_exact(g, p);
            {
                OptimizerConfig cfg;
                cfg.seed = seed;
                return strong_norm_estimate(g, p, cfg);
            }
        case NormKind::Isoclass:
            return isoclass_norm_exact(g, p, cap > 0 ? cap : kPermutationCap);
        case NormKind::Restricted:
            return restricted_norm(g, p, cap > 0 ? cap : 20);
        case NormKind::Weak: {
            NormResult lower = weak_norm_delta_lower(g, p);
            OptimizerConfig cfg;
            cfg.seed = seed;
            NormResult est = weak_norm_estimate(g, p, cfg);
            if (est.value > lower.value + kTolerance) {
                est.notes.push_back("optimizer beat the delta lower bound " +
                                    value_string(lower));
                return est;
            }
            lower.notes.push_back("delta witness; optimizer agreed to " +
                                  decimal(est.value));
            return lower;
        }
    }
    throw InputError("unsupported norm kind");
}

}  // namespace

int cmd_norm(const NormOptions& opt, std::ostream& out) {
    Graph g = load_graph(opt.source);
    NormResult r = compute_norm(g, opt.p, opt.kind, opt.seed, opt.cap);
    print_result(out, opt.format, g, opt.kind, r);
    return kExitOk;
}

int cmd_indices(const IndicesOptions& opt, std::ostream& out) {
    Graph g = load_graph(opt.source);
    IndexReport report = weak11_upper_bound(g, opt.skip_overlap, opt.cap > 0 ? opt.cap : kOverlapCap);
    json j{{"schema_version", 1},
           {"graph", graph_json(g)},
           {"dilation", rat_to_string(report.dilation)},
           {"dilation_witness",
            {{"vertex", report.dilation_witness.first}, {"radius", report.dilation_witness.second}}},
           {"weak11_upper", rat_to_string(report.weak11_upper)}};
    if (report.overlapping_skipped) {
        j["overlapping"] = nullptr;
        j["overlapping_skipped"] = true;
    } else {
        j["overlapping"] = report.overlapping;
        json fam = json::array();
        for (const Ball& b : report.overlap_witness)
            fam.push_back(json{{"center", b.center}, {"radius", b.radius}, {"members", b.members}});
        j["overlap_witness"] = fam;
    }
    if (opt.format == Format::Json) {
        out << j.dump(2) << "\n";
    } else {
        out << "dilation index:    " << rat_to_string(report.dilation) << "  (at vertex "
            << report.dilation_witness.first << ", radius " << report.dilation_witness.second
            << ")\n";
        if (report.overlapping_skipped)
            out << "overlapping index: skipped\n";
        else
            out << "overlapping index: " << report.overlapping << "\n";
        out << "weak (1,1) upper:  " << rat_to_string(report.weak11_upper) << "\n";
    }
    return kExitOk;
}

namespace {

struct GraphChecks {
    bool sandwich = true;
    bool reconstruction = true;
    bool minimality = true;
    bool index_bound = true;
    std::string detail;
};

GraphChecks verify_one(const Graph& g, std::uint64_t seed) {
    GraphChecks c;
    const int n = g.size();
    std::ostringstream detail;

    const bool is_complete = g.edge_count() == n * (n - 1) / 2;
    bool is_star = false;
    if (n == 2) {
        is_star = true;
    } else {
        int leaves = 0, centers = 0;
        for (int v = 1; v <= n; ++v) {
            if (g.degree(v) == 1) ++leaves;
            if (g.degree(v) == n - 1) ++centers;
        }
        is_star = centers == 1 && leaves == n - 1;
    }

    for (double pv : {0.5, 1.0}) {
        Exponent p = pv == 1.0 ? Exponent::fraction(1, 1) : Exponent::fraction(1, 2);
        NormResult r = strong_norm_exact(g, p);
        if (p.is_one()) {
            Rat lower = Rat(2 * n - 1, n);
            Rat upper = Rat(n + 1, 2);
            const Rat& v = *r.exact;
            if (v < lower || v > upper) c.sandwich = false;
            if ((v == lower) != is_complete) c.sandwich = false;
            if ((v == upper) != is_star) c.sandwich = false;
        } else {
            double lower = std::pow(1.0 + (n - 1.0) / std::pow(n, pv), 1.0 / pv);
            double upper = std::pow(1.0 + (n - 1.0) / std::pow(2.0, pv), 1.0 / pv);
            if (r.value < lower - kTolerance || r.value > upper + kTolerance) c.sandwich = false;
            if ((std::abs(r.value - lower) < kTolerance) != is_complete) c.sandwich = false;
            if ((std::abs(r.value - upper) < kTolerance) != is_star) c.sandwich = false;
        }
        if (!c.sandwich) detail << "sandwich failed at p=" << pv << "; ";
    }

    if (!reconstruct_from_deltas(delta_response_matrix(g)).same_edges(g)) {
        c.reconstruction = false;
        detail << "reconstruction mismatch; ";
    }

    Graph kn = Graph::named(Family::Complete, n);
    std::mt19937_64 rng(seed ^ edge_mask(g));
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::bernoulli_distribution spike(0.5);
    for (int trial = 0; trial < 20 && c.minimality; ++trial) {
        std::vector<double> f(n + 1, 0.0);
        for (int v = 1; v <= n; ++v) f[v] = spike(rng) ? 0.0 : uni(rng);
        std::vector<double> mg = eval_maximal(g, f);
        std::vector<double> mk = eval_maximal(kn, f);
        for (int v = 1; v <= n; ++v)
            if (mk[v] > mg[v] + 1e-12) {
                c.minimality = false;
                detail << "K_n minimality failed at vertex " << v << "; ";
                break;
            }
    }

    IndexReport report = weak11_upper_bound(g);
    NormResult weak_lower = weak_norm_delta_lower(g, Exponent::fraction(1, 1));
    if (weak_lower.value > to_double(report.weak11_upper) + kTolerance) {
        c.index_bound = false;
        detail << "weak (1,1) delta bound exceeds min{D,O}; ";
    }

    c.detail = detail.str();
    return c;
}

}  // namespace

int cmd_verify(int n_max, std::uint64_t seed, std::ostream& out) {
    if (n_max < 2 || n_max > 7) throw InputError("verify supports 2 <= n_max <= 7");
    out << "verify up to n = " << n_max << ", seed = " << seed
        << ", threads = " << worker_count() << "\n";
    bool all_ok = true;
    for (int n = 2; n <= n_max; ++n) {
        std::vector<Graph> graphs = enumerate_connected_all(n, /*up_to_iso=*/true);
        std::vector<GraphChecks> checks(graphs.size());
        parallel_for(static_cast<int>(graphs.size()),
                     [&](int i) { checks[i] = verify_one(graphs[i], seed); });

        int sandwich = 0, reconstruction = 0, minimality = 0, index_bound = 0;
        for (size_t i = 0; i < graphs.size(); ++i) {
            const GraphChecks& c = checks[i];
            sandwich += c.sandwich;
            reconstruction += c.reconstruction;
            minimality += c.minimality;
            index_bound += c.index_bound;
            if (!c.detail.empty()) {
                all_ok = false;
                out << "FAIL n=" << n << " graph #" << i << " (" << c.detail << ") edges:";
                for (auto [u, v] : graphs[i].edges()) out << " " << u << "-" << v;
                out << "\n";
            }
        }
        const int total = static_cast<int>(graphs.size());
        auto line = [&](const char* name, int passed) {
            out << (passed == total ? "PASS" : "FAIL") << " n=" << n << " " << name << " ("
                << passed << "/" << total << " classes)\n";
        };
        line("extremal sandwich + characterization", sandwich);
        line("reconstruction round-trip", reconstruction);
        line("pointwise K_n minimality", minimality);
        line("index bound min{D,O}", index_bound);
    }
    out << (all_ok ? "verify: ALL PASS\n" : "verify: FAILURES FOUND\n");
    return all_ok ? kExitOk : kExitVerifyFailed;
}

int cmd_search_monotonicity(int n_max, std::ostream& out) {
    if (n_max < 2 || n_max > 7) throw InputError("monotonicity search supports 2 <= n_max <= 7");
    out << "monotonicity search up to n = " << n_max << " (edge-chain scan)\n";
    bool found = false;
    for (int n = 2; n <= n_max; ++n) {
        std::unordered_map<std::uint64_t, Rat> norm_of;
        std::vector<std::uint64_t> masks;
        enumerate_connected(n, /*up_to_iso=*/false, [&](const Graph& g) {
            std::uint64_t mask = edge_mask(g);
            masks.push_back(mask);
            norm_of[mask] = *strong_norm_exact(g, Exponent::fraction(1, 1)).exact;
        });
        long long pairs = 0;
        for (std::uint64_t mask : masks) {
            for (int bit = 0; bit < n * (n - 1) / 2; ++bit) {
                if (mask >> bit & 1) continue;
                std::uint64_t super = mask | (std::uint64_t{1} << bit);
                auto it = norm_of.find(super);
                if (it == norm_of.end()) continue;  // cannot happen: supergraphs stay connected
                ++pairs;
                if (it->second > norm_of[mask]) {
                    found = true;
                    out << "counterexample at n=" << n << ": masks " << mask << " < " << super
                        << ", norms " << rat_to_string(norm_of[mask]) << " -> "
                        << rat_to_string(it->second) << "\n";
                }
            }
        }
        out << "n=" << n << ": " << masks.size() << " labeled graphs, " << pairs
            << " single-edge pairs scanned\n";
    }
    out << (found ? "counterexamples found\n" : "no counterexample up to n_max\n");
    return kExitOk;
}

namespace {

struct SweepRow {
    int n;
    Family family;
    double p;
    NormKind kind;
    std::string value_lo, value_hi;
    std::string comp_log_n, comp_power_law, comp_weak_limit;
};

SweepRow sweep_row(Family family, int n, const Exponent& p, NormKind kind, std::uint64_t seed) {
    Graph g = Graph::named(family, n);
    SweepRow row{n, family, p.value, kind, "", "", "", "", ""};
    row.comp_log_n = decimal(std::log(static_cast<double>(n)));
    if (p.value < 1.0)
        row.comp_power_law =
            decimal(std::pow((std::pow(n, 1.0 - p.value) - 1.0) / (1.0 - p.value), 1.0 / p.value));
    row.comp_weak_limit = rat_to_string(Rat(2 * n, n - 1));

    switch (kind) {
        case NormKind::Strong:
            if (p.value <= 1.0) {
                NormResult r = strong_norm_exact(g, p);
                row.value_lo = row.value_hi = value_string(r);
            } else {
                OptimizerConfig cfg;
                cfg.seed = seed;
                NormResult r = strong_norm_estimate(g, p, cfg);
                row.value_lo = value_string(r);
                try {
                    ClosedFormConstant c = closed_form_constants(family, n, p, NormKind::Strong);
                    row.value_hi = c.is_exact ? row.value_lo : decimal(c.hi);
                } catch (const UnsupportedCombination&) {
                    row.value_hi = row.value_lo;
                }
            }
            break;
        case NormKind::Weak: {
            NormResult lower = weak_norm_delta_lower(g, p);
            row.value_lo = value_string(lower);
            if (p.is_one()) {
                IndexReport rep = weak11_upper_bound(g, /*skip_overlap=*/g.size() > kOverlapCap);
                row.value_hi = rat_to_string(rep.weak11_upper);
            } else {
                double trivial = std::pow(n, 1.0 / p.value);
                try {
                    ClosedFormConstant c = closed_form_constants(family, n, p, NormKind::Weak);
                    row.value_hi = decimal(std::min(trivial, c.hi));
                } catch (const UnsupportedCombination&) {
                    row.value_hi = decimal(trivial);
                }
            }
            break;
        }
        case NormKind::Restricted: {
            NormResult r = restricted_norm(g, p);
            row.value_lo = row.value_hi = value_string(r);
            break;
        }
        case NormKind::Isoclass: {
            NormResult r = isoclass_norm_exact(g, p);
            row.value_lo = row.value_hi = value_string(r);
            break;
        }
    }
    return row;
}

}  // namespace

int cmd_sweep(const SweepSpec& spec, std::ostream& log) {
    if (spec.p_grid.empty()) throw InputError("sweep needs a nonempty p grid");
    if (spec.families.empty()) throw InputError("sweep needs at least one family");
    if (spec.n_min < 2 || spec.n_min > spec.n_max) throw InputError("bad n range");
    for (const Exponent& p : spec.p_grid)
        if (!(p.value > 0.0)) throw InputError("sweep p grid entries must be positive");

    struct Task {
        Family family;
        int n;
        Exponent p;
        NormKind kind;
    };
    std::vector<Task> tasks;
    for (Family family : spec.families)
        for (int n = spec.n_min; n <= spec.n_max; ++n) {
            if (family == Family::Cycle && n < 3) continue;
            for (const Exponent& p : spec.p_grid)
                for (NormKind kind : spec.kinds) tasks.push_back({family, n, p, kind});
        }

    std::vector<SweepRow> rows(tasks.size());
    parallel_for(static_cast<int>(tasks.size()), [&](int i) {
        rows[i] = sweep_row(tasks[i].family, tasks[i].n, tasks[i].p, tasks[i].kind, spec.seed);
    });

    std::ofstream file;
    std::ostream* out = &log;
    if (spec.out_path != "-") {
        file.open(spec.out_path);
        if (!file) throw Error("cannot open output file: " + spec.out_path);
        out = &file;
    }

    log << "sweep: " << rows.size() << " rows, seed = " << spec.seed << "\n";
    if (spec.format == Format::Json) {
        json arr = json::array();
        for (const SweepRow& r : rows)
            arr.push_back(json{{"n", r.n},
                               {"family", family_name(r.family)},
                               {"p", r.p},
                               {"norm_kind", norm_kind_name(r.kind)},
                               {"value_lo", r.value_lo},
                               {"value_hi", r.value_hi},
                               {"comparator_log_n", r.comp_log_n},
                               {"comparator_power_law", r.comp_power_law},
                               {"comparator_weak_limit", r.comp_weak_limit}});
        *out << arr.dump(2) << "\n";
    } else {
        *out << "n,family,p,norm_kind,value_lo,value_hi,comparator_log_n,comparator_power_law,"
                "comparator_weak_limit\n";
        for (const SweepRow& r : rows)
            *out << r.n << "," << family_name(r.family) << "," << r.p << ","
                 << norm_kind_name(r.kind) << "," << r.value_lo << "," << r.value_hi << ","
                 << r.comp_log_n << "," << r.comp_power_law << "," << r.comp_weak_limit << "\n";
    }
    if (out == &file && !file.good()) throw Error("write failed: " + spec.out_path);
    return kExitOk;
}

}  // namespace graphmax::cli

#include <CLI11.hpp>

namespace graphmax::cli {

namespace {

void add_graph_flags(CLI::App* cmd, GraphSource& src, std::string& family_name_opt) {
    cmd->add_option("--family", family_name_opt, "named family: complete, star, path, cycle");
    cmd->add_option("--n", src.n, "vertex count for --family");
    cmd->add_option("--edges", src.edges_file, "graph text file: 'n m' then m edge lines");
}

void finish_graph_flags(GraphSource& src, const std::string& family_name_opt) {
    if (!family_name_opt.empty()) {
        src.family = parse_family(family_name_opt);
        if (src.n < 2) throw InputError("--family requires --n >= 2");
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"graph maximal-operator norms, covering indices, and verification sweeps"};
    app.require_subcommand(1);

    NormOptions norm_opt;
    std::string norm_family, norm_p = "1", norm_kind = "strong", norm_format = "table";
    CLI::App* norm_cmd = app.add_subcommand("norm", "compute one operator norm");
    add_graph_flags(norm_cmd, norm_opt.source, norm_family);
    norm_cmd->add_option("--p", norm_p, "exponent, decimal or \"a/b\"");
    norm_cmd->add_option("--kind", norm_kind, "strong, weak, restricted, isoclass");
    norm_cmd->add_option("--format", norm_format, "json or table");
    norm_cmd->add_option("--seed", norm_opt.seed, "optimizer seed");
    norm_cmd->add_option("--cap", norm_opt.cap, "search cap override");

    IndicesOptions idx_opt;
    std::string idx_family, idx_format = "json";
    CLI::App* idx_cmd = app.add_subcommand("indices", "dilation and overlapping indices");
    add_graph_flags(idx_cmd, idx_opt.source, idx_family);
    idx_cmd->add_flag("--skip-overlap", idx_opt.skip_overlap, "skip the overlapping-index search");
    idx_cmd->add_option("--cap", idx_opt.cap, "overlapping search cap");
    idx_cmd->add_option("--format", idx_format, "json or table");

    int verify_n_max = 4;
    std::uint64_t verify_seed = 0;
    CLI::App* verify_cmd = app.add_subcommand("verify", "exhaustive checks over iso classes");
    verify_cmd->add_option("--n-max", verify_n_max, "largest vertex count (<= 7)");
    verify_cmd->add_option("--seed", verify_seed, "seed for random test functions");

    int mono_n_max = 4;
    CLI::App* mono_cmd = app.add_subcommand("search-monotonicity",
                                            "scan subgraph pairs for norm monotonicity violations");
    mono_cmd->add_option("--n-max", mono_n_max, "largest vertex count (<= 7)");

    SweepSpec sweep;
    std::vector<std::string> sweep_families{"path"}, sweep_ps{"1"}, sweep_kinds{"strong"};
    std::string sweep_format = "csv";
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "norm/index tables over families");
    sweep_cmd->add_option("--families", sweep_families, "families to sweep");
    sweep_cmd->add_option("--n-min", sweep.n_min, "smallest vertex count");
    sweep_cmd->add_option("--n-max", sweep.n_max, "largest vertex count");
    sweep_cmd->add_option("--p", sweep_ps, "exponent grid, decimal or \"a/b\"");
    sweep_cmd->add_option("--kind", sweep_kinds, "norm kinds to sweep");
    sweep_cmd->add_option("--out", sweep.out_path, "output path, '-' for stdout");
    sweep_cmd->add_option("--format", sweep_format, "csv or json");
    sweep_cmd->add_option("--seed", sweep.seed, "optimizer seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << e.what() << "\n";
        return kExitBadInput;
    }

    try {
        if (*norm_cmd) {
            finish_graph_flags(norm_opt.source, norm_family);
            norm_opt.p = Exponent::parse(norm_p);
            norm_opt.kind = parse_norm_kind(norm_kind);
            norm_opt.format = parse_format(norm_format);
            return cmd_norm(norm_opt, out);
        }
        if (*idx_cmd) {
            finish_graph_flags(idx_opt.source, idx_family);
            idx_opt.format = parse_format(idx_format);
            return cmd_indices(idx_opt, out);
        }
        if (*verify_cmd) return cmd_verify(verify_n_max, verify_seed, out);
        if (*mono_cmd) return cmd_search_monotonicity(mono_n_max, out);
        if (*sweep_cmd) {
            sweep.families.clear();
            for (const auto& f : sweep_families) sweep.families.push_back(parse_family(f));
            sweep.p_grid.clear();
            for (const auto& s : sweep_ps) sweep.p_grid.push_back(Exponent::parse(s));
            sweep.kinds.clear();
            for (const auto& k : sweep_kinds) sweep.kinds.push_back(parse_norm_kind(k));
            sweep.format = parse_format(sweep_format);
            return cmd_sweep(sweep, out);
        }
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitBadInput;
}

}  // namespace graphmax::cli
