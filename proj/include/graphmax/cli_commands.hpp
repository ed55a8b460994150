#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graphmax/exact_norms.hpp"
#include "graphmax/exponent.hpp"
#include "graphmax/graph.hpp"

namespace graphmax::cli {

// Exit-code contract, fixed for CI use.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitCapExceeded = 3;
inline constexpr int kExitIo = 4;

enum class Format { Json, Csv, Table };
Format parse_format(const std::string& name);

struct GraphSource {
    std::optional<Family> family;
    int n = 0;
    std::string edges_file;  // used when family is not set
};
Graph load_graph(const GraphSource& src);

struct NormOptions {
    GraphSource source;
    Exponent p;
    NormKind kind = NormKind::Strong;
    Format format = Format::Table;
    std::uint64_t seed = 0;
    int cap = 0;  // 0 = module default
};
int cmd_norm(const NormOptions& opt, std::ostream& out);

struct IndicesOptions {
    GraphSource source;
    bool skip_overlap = false;
    int cap = 0;
    Format format = Format::Json;
};
int cmd_indices(const IndicesOptions& opt, std::ostream& out);

// Exhaustive verification harness over isomorphism classes, n <= n_max <= 7.
int cmd_verify(int n_max, std::uint64_t seed, std::ostream& out);

// Scans single-edge extensions G and G+e of labeled connected graphs (any
// violating pair implies a violating single-edge pair along an edge chain).
int cmd_search_monotonicity(int n_max, std::ostream& out);

struct SweepSpec {
    std::vector<Family> families;
    int n_min = 3, n_max = 16;
    std::vector<Exponent> p_grid;
    std::vector<NormKind> kinds;
    std::string out_path = "-";  // "-" = stdout
    Format format = Format::Csv;
    std::uint64_t seed = 0;
};
int cmd_sweep(const SweepSpec& spec, std::ostream& log);

// Number of worker threads: GM_THREADS when set, else hardware concurrency.
int worker_count();

// Full argv entry point used by the binary; maps errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace graphmax::cli
