#include "fbshare/graph.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "fbshare/io.hpp"

namespace fbshare {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Operand {
    int node = 0;
    int sign = 1;
};

const char* kind_name(NodeKind kind) {
    switch (kind) {
    case NodeKind::tap: return "tap";
    case NodeKind::subset_acc: return "subset_acc";
    case NodeKind::add: return "add";
    case NodeKind::sub: return "sub";
    case NodeKind::mac: return "mac";
    case NodeKind::output: return "output";
    }
    return "?";
}

NodeKind kind_from_name(const std::string& name) {
    if (name == "tap") return NodeKind::tap;
    if (name == "subset_acc") return NodeKind::subset_acc;
    if (name == "add") return NodeKind::add;
    if (name == "sub") return NodeKind::sub;
    if (name == "mac") return NodeKind::mac;
    if (name == "output") return NodeKind::output;
    throw ParseError("unknown node kind '" + name + "'");
}

} // namespace

std::int64_t DataflowGraph::count_kind(NodeKind kind) const noexcept {
    return std::count_if(nodes.begin(), nodes.end(),
                         [kind](const GraphNode& n) { return n.kind == kind; });
}

int pyramid_depth(int operands) {
    int depth = 0;
    for (int width = operands; width > 1; width = (width + 1) / 2)
        ++depth;
    return depth;
}

DataflowGraph build_graph(const FilterBank& bank, const GroupingPlan& plan,
                          CostMode mode) {
    const auto partitions = partition_grouped(bank, plan);

    DataflowGraph graph;
    graph.filters = bank.filters();
    graph.taps = bank.taps();
    graph.group_count = plan.group_count;
    graph.mode = mode;

    const auto add_node = [&graph](NodeKind kind, int group, int stage) {
        const int id = static_cast<int>(graph.nodes.size());
        graph.nodes.push_back({id, kind, group, stage});
        return id;
    };
    const auto add_edge = [&graph](int src, int dst, int sign) {
        graph.edges.push_back({src, dst, sign});
    };

    for (int m = 0; m < bank.taps(); ++m)
        add_node(NodeKind::tap, -1, 0);

    // Stage 1: one accumulator per occupied pattern, fed by its taps.
    std::vector<std::vector<std::pair<BitPattern, int>>> group_accs(partitions.size());
    for (std::size_t g = 0; g < partitions.size(); ++g) {
        for (const auto& [pattern, taps] : partitions[g].subsets) {
            const int acc = add_node(NodeKind::subset_acc, static_cast<int>(g), 1);
            for (int m : taps)
                add_edge(m, acc, +1);
            group_accs[g].emplace_back(pattern, acc);
        }
    }

    // Stage 2: signed recombination per filter; outputs appended afterwards
    // so they carry the highest ids.
    std::vector<Operand> final_of(static_cast<std::size_t>(bank.filters()));
    for (std::size_t g = 0; g < partitions.size(); ++g) {
        const auto& members = plan.groups[g];
        for (std::size_t j = 0; j < members.size(); ++j) {
            std::vector<Operand> level;
            level.reserve(group_accs[g].size());
            for (const auto& [pattern, acc] : group_accs[g])
                level.push_back({acc, sign_of(static_cast<int>(j), pattern)});

            if (mode == CostMode::mac) {
                Operand prev{-1, 1};
                for (std::size_t i = 0; i < level.size(); ++i) {
                    const int node = add_node(NodeKind::mac, static_cast<int>(g),
                                              2 + static_cast<int>(i));
                    add_edge(level[i].node, node, level[i].sign);
                    if (prev.node >= 0)
                        add_edge(prev.node, node, +1);
                    prev = {node, 1};
                }
                final_of[members[j]] = prev;
            } else {
                int stage = 2;
                while (level.size() > 1) {
                    std::vector<Operand> next;
                    next.reserve((level.size() + 1) / 2);
                    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
                        const bool negates = level[i].sign < 0 || level[i + 1].sign < 0;
                        const int node = add_node(negates ? NodeKind::sub : NodeKind::add,
                                                  static_cast<int>(g), stage);
                        add_edge(level[i].node, node, level[i].sign);
                        add_edge(level[i + 1].node, node, level[i + 1].sign);
                        next.push_back({node, 1});
                    }
                    if (level.size() % 2 == 1)
                        next.push_back(level.back()); // promoted unchanged
                    level = std::move(next);
                    ++stage;
                }
                final_of[members[j]] = level.front();
            }
        }
    }

    for (int k = 0; k < bank.filters(); ++k) {
        int group = 0;
        for (std::size_t g = 0; g < plan.groups.size(); ++g)
            if (std::find(plan.groups[g].begin(), plan.groups[g].end(), k) !=
                plan.groups[g].end())
                group = static_cast<int>(g);
        const Operand fin = final_of[k];
        const int out = add_node(NodeKind::output, group,
                                 graph.nodes[fin.node].stage + 1);
        add_edge(fin.node, out, fin.sign);
    }

    graph.latency = latency_of(graph);
    return graph;
}

std::vector<int> latency_of(const DataflowGraph& graph) {
    std::vector<int> latency;
    latency.reserve(static_cast<std::size_t>(graph.filters));
    if (graph.mode == CostMode::mac) {
        latency.assign(static_cast<std::size_t>(graph.filters), 0);
        return latency;
    }

    // Longest add/sub chain from the accumulators to each output.
    std::vector<int> depth(graph.nodes.size(), 0);
    std::vector<int> out_depth(graph.nodes.size(), 0);
    for (const auto& edge : graph.edges) {
        if (edge.src >= edge.dst)
            throw ParseError("edge does not point forward; graph is not in build order");
        const auto& dst = graph.nodes[edge.dst];
        const int reach = depth[edge.src];
        if (dst.kind == NodeKind::add || dst.kind == NodeKind::sub)
            depth[edge.dst] = std::max(depth[edge.dst], reach + 1);
        else if (dst.kind == NodeKind::output)
            out_depth[edge.dst] = std::max(out_depth[edge.dst], reach);
        else
            depth[edge.dst] = std::max(depth[edge.dst], reach);
    }
    for (const auto& node : graph.nodes)
        if (node.kind == NodeKind::output)
            latency.push_back(out_depth[node.id]);
    return latency;
}

std::string export_graph(const DataflowGraph& graph) {
    ordered_json doc;
    doc["meta"] = {{"K", graph.filters},
                   {"M", graph.taps},
                   {"G", graph.group_count},
                   {"mode", graph.mode == CostMode::mac ? "mac" : "pyramid"}};
    doc["nodes"] = ordered_json::array();
    for (const auto& node : graph.nodes)
        doc["nodes"].push_back({{"id", node.id},
                                {"kind", kind_name(node.kind)},
                                {"group", node.group},
                                {"stage", node.stage}});
    doc["edges"] = ordered_json::array();
    for (const auto& edge : graph.edges)
        doc["edges"].push_back({{"src", edge.src}, {"dst", edge.dst}, {"sign", edge.sign}});
    doc["latency"] = graph.latency;
    return doc.dump(2) + "\n";
}

DataflowGraph import_graph(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(std::string("graph document: ") + err.what());
    }
    try {
        DataflowGraph graph;
        graph.filters = doc.at("meta").at("K").get<int>();
        graph.taps = doc.at("meta").at("M").get<int>();
        graph.group_count = doc.at("meta").at("G").get<int>();
        const std::string mode = doc.at("meta").at("mode").get<std::string>();
        if (mode != "mac" && mode != "pyramid")
            throw ParseError("unknown mode '" + mode + "'");
        graph.mode = mode == "mac" ? CostMode::mac : CostMode::pyramid;

        for (const auto& item : doc.at("nodes")) {
            GraphNode node;
            node.id = item.at("id").get<int>();
            node.kind = kind_from_name(item.at("kind").get<std::string>());
            node.group = item.at("group").get<int>();
            node.stage = item.at("stage").get<int>();
            if (node.id != static_cast<int>(graph.nodes.size()))
                throw ParseError("node ids must be dense from 0");
            graph.nodes.push_back(node);
        }
        for (const auto& item : doc.at("edges")) {
            GraphEdge edge{item.at("src").get<int>(), item.at("dst").get<int>(),
                           item.at("sign").get<int>()};
            if (edge.src < 0 || edge.dst >= static_cast<int>(graph.nodes.size()) ||
                edge.src >= edge.dst)
                throw ParseError("edge endpoints out of order or out of range");
            if (edge.sign != 1 && edge.sign != -1)
                throw ParseError("edge sign must be +1 or -1");
            graph.edges.push_back(edge);
        }
        graph.latency = doc.at("latency").get<std::vector<int>>();
        if (graph.latency.size() != static_cast<std::size_t>(graph.filters))
            throw ParseError("latency list must have one entry per output");
        return graph;
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(std::string("graph document: ") + err.what());
    }
}

void write_graph_file(const DataflowGraph& graph, const std::string& path) {
    write_file_atomic(path, export_graph(graph));
}

OutputFrame evaluate_graph(const DataflowGraph& graph, const SignalFrame& signal) {
    std::vector<std::vector<std::pair<int, int>>> incoming(graph.nodes.size());
    for (const auto& edge : graph.edges) {
        if (edge.src >= edge.dst)
            throw ParseError("edge does not point forward; graph is not in build order");
        incoming[edge.dst].emplace_back(edge.src, edge.sign);
    }

    std::vector<int> output_nodes;
    for (const auto& node : graph.nodes)
        if (node.kind == NodeKind::output)
            output_nodes.push_back(node.id);

    const auto& x = signal.samples;
    const int length = static_cast<int>(x.size());
    OutputFrame frame;
    frame.outputs.assign(output_nodes.size(), std::vector<std::int64_t>(length, 0));

    std::vector<std::int64_t> value(graph.nodes.size(), 0);
    for (int n = 0; n < length; ++n) {
        for (int m = 0; m < graph.taps; ++m)
            value[m] = m <= n ? x[n - m] : 0;
        for (std::size_t id = static_cast<std::size_t>(graph.taps);
             id < graph.nodes.size(); ++id) {
            std::int64_t acc = 0;
            for (const auto& [src, sign] : incoming[id])
                acc += sign > 0 ? value[src] : -value[src];
            value[id] = acc;
        }
        for (std::size_t k = 0; k < output_nodes.size(); ++k)
            frame.outputs[k][n] = value[output_nodes[k]];
    }
    return frame;
}

} // namespace fbshare
