#ifndef FBSHARE_GRAPH_HPP
#define FBSHARE_GRAPH_HPP

#include <string>
#include <vector>

#include "fbshare/cost.hpp"
#include "fbshare/eval.hpp"

namespace fbshare {

enum class NodeKind { tap, subset_acc, add, sub, mac, output };

struct GraphNode {
    int id = 0;
    NodeKind kind = NodeKind::tap;
    int group = -1; // -1 for the shared delay line
    int stage = 0;  // topological depth: taps 0, subset accumulators 1, ...
};

struct GraphEdge {
    int src = 0;
    int dst = 0;
    int sign = 1;
};

/// Two-stage dataflow netlist: M shared tap nodes, one subset accumulator
/// per occupied pattern per group, then per-filter recombination (balanced
/// add/sub tree or MAC chain) into K output nodes. Node ids are dense from
/// 0 and every edge points forward (src < dst), so id order is a
/// topological order. Output nodes come last, in bank filter order.
struct DataflowGraph {
    int filters = 0;     // K
    int taps = 0;        // M
    int group_count = 0; // G
    CostMode mode = CostMode::mac;
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
    std::vector<int> latency; // per output, cycles relative to direct form

    std::int64_t count_kind(NodeKind kind) const noexcept;
};

DataflowGraph build_graph(const FilterBank& bank, const GroupingPlan& plan,
                          CostMode mode);

/// Per-output pipeline delay: depth of the add/sub tree feeding each output
/// (pyramid mode), or 0 (MAC mode, matching the direct form).
std::vector<int> latency_of(const DataflowGraph& graph);

/// Depth of a balanced two-input tree over `operands` inputs.
int pyramid_depth(int operands);

/// Deterministic serialization; identical graphs give identical bytes.
std::string export_graph(const DataflowGraph& graph);

DataflowGraph import_graph(const std::string& text);

/// Serializes and writes atomically (temp file + rename).
void write_graph_file(const DataflowGraph& graph, const std::string& path);

/// Runs the netlist over a signal in topological order with signs on edges;
/// reproduces shared_evaluate bit-exactly.
OutputFrame evaluate_graph(const DataflowGraph& graph, const SignalFrame& signal);

} // namespace fbshare

#endif
