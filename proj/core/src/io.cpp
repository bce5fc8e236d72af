#include "cge/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "cge/errors.hpp"

namespace cge {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream is(body);
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

long long to_int(const std::string& tok, int line) {
    size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
    return v;
}

void expect_args(const std::vector<std::string>& t, size_t n, int line) {
    if (t.size() != n + 1) throw ParseError(line, "'" + t[0] + "' takes " + std::to_string(n) + " argument(s)");
}

}  // namespace

InstanceDocument parse_instance(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int ln = 0;
    InstanceDocument doc;
    bool have_kind = false;
    std::optional<long long> nodes, init, robots, budget, capacity, bins, exact;
    std::vector<std::pair<long long, long long>> edges;
    std::vector<int> edge_lines;
    std::vector<long long> items;

    while (std::getline(is, line)) {
        ++ln;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto t = tokens(line);
        if (t.empty()) continue;
        const std::string& key = t[0];
        if (!have_kind) {
            if ((key != "cge" && key != "binpack") || t.size() != 2 || t[1] != "1")
                throw ParseError(ln, "expected header 'cge 1' or 'binpack 1'");
            doc.kind = key == "cge" ? InstanceDocument::Kind::Cge : InstanceDocument::Kind::Binpack;
            have_kind = true;
            continue;
        }
        auto once = [&](std::optional<long long>& slot) {
            expect_args(t, 1, ln);
            if (slot) throw ParseError(ln, "duplicate '" + key + "'");
            slot = to_int(t[1], ln);
        };
        if (doc.kind == InstanceDocument::Kind::Cge) {
            if (key == "nodes") once(nodes);
            else if (key == "init") once(init);
            else if (key == "robots") once(robots);
            else if (key == "budget") once(budget);
            else if (key == "edge") {
                expect_args(t, 2, ln);
                edges.push_back({to_int(t[1], ln), to_int(t[2], ln)});
                edge_lines.push_back(ln);
            } else {
                throw ParseError(ln, "unknown keyword '" + key + "'");
            }
        } else {
            if (key == "capacity") once(capacity);
            else if (key == "bins") once(bins);
            else if (key == "exact") once(exact);
            else if (key == "item") {
                expect_args(t, 1, ln);
                items.push_back(to_int(t[1], ln));
            } else {
                throw ParseError(ln, "unknown keyword '" + key + "'");
            }
        }
    }
    if (!have_kind) throw ParseError(ln, "missing header");

    if (doc.kind == InstanceDocument::Kind::Cge) {
        if (!nodes) throw ParseError(ln, "missing 'nodes'");
        if (!init) throw ParseError(ln, "missing 'init'");
        if (!robots) throw ParseError(ln, "missing 'robots'");
        if (*nodes < 1 || *nodes > 1'000'000) throw ParseError(ln, "'nodes' out of range");
        if (*init < 0 || *init >= *nodes) throw ParseError(ln, "'init' out of range");
        if (*robots < 1 || *robots > 1'000'000) throw ParseError(ln, "'robots' must be positive");
        if (budget && *budget < 0) throw ParseError(ln, "'budget' must be non-negative");
        auto& inst = doc.cge;
        inst.graph = Multigraph(static_cast<int>(*nodes));
        std::set<Edge> seen;
        for (size_t i = 0; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            if (u < 0 || v < 0 || u >= *nodes || v >= *nodes) throw ParseError(edge_lines[i], "edge endpoint out of range");
            if (u == v) throw SelfLoop("line " + std::to_string(edge_lines[i]) + ": self-loop at " + std::to_string(u));
            Edge e = make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
            if (!seen.insert(e).second) throw ParseError(edge_lines[i], "duplicate edge");
            inst.graph.add_edge(e.first, e.second);
        }
        inst.v_init = static_cast<Vertex>(*init);
        inst.k = static_cast<int>(*robots);
        if (budget) inst.budget = static_cast<int>(*budget);
        if (!inst.graph.connected()) throw NotConnected("instance graph is not connected");
    } else {
        if (!capacity) throw ParseError(ln, "missing 'capacity'");
        if (!bins) throw ParseError(ln, "missing 'bins'");
        if (!exact) throw ParseError(ln, "missing 'exact'");
        if (*exact != 0 && *exact != 1) throw ParseError(ln, "'exact' must be 0 or 1");
        if (*capacity < 0 || *bins < 1) throw ParseError(ln, "capacity/bins out of range");
        auto& bp = doc.binpack;
        bp.capacity = static_cast<int>(*capacity);
        bp.bins = static_cast<int>(*bins);
        bp.exact = *exact == 1;
        for (long long s : items) {
            if (s < 1) throw ParseError(ln, "item sizes must be positive");
            bp.sizes.push_back(static_cast<int>(s));
        }
    }
    return doc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

InstanceDocument read_instance_file(const std::string& path) {
    auto doc = parse_instance(read_file(path));
    doc.source_path = path;
    return doc;
}

std::string format_instance(const ExplorationInstance& inst) {
    std::ostringstream os;
    os << "cge 1\nnodes " << inst.graph.n() << "\ninit " << inst.v_init << "\nrobots " << inst.k << "\n";
    if (inst.budget) os << "budget " << *inst.budget << "\n";
    for (const auto& [e, m] : inst.graph.edges()) os << "edge " << e.first << " " << e.second << "\n";
    return os.str();
}

std::string format_binpacking(const BinPackingInstance& inst) {
    std::ostringstream os;
    os << "binpack 1\ncapacity " << inst.capacity << "\nbins " << inst.bins << "\nexact " << (inst.exact ? 1 : 0) << "\n";
    for (int s : inst.sizes) os << "item " << s << "\n";
    return os.str();
}

std::string format_solution(const Solution& sol) {
    std::ostringstream os;
    os << "value " << sol.value << "\n";
    for (size_t i = 0; i < sol.cycles.size(); ++i) {
        os << "robot " << i + 1 << ":";
        for (Vertex v : sol.cycles[i].walk) os << " " << v;
        os << "\n";
    }
    return os.str();
}

Solution parse_solution(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int ln = 0;
    std::optional<long long> value;
    std::vector<RobotCycle> cycles;
    while (std::getline(is, line)) {
        ++ln;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto t = tokens(line);
        if (t.empty()) continue;
        if (t[0] == "value") {
            expect_args(t, 1, ln);
            value = to_int(t[1], ln);
        } else if (t[0] == "robot") {
            if (t.size() < 3 || t[1].empty() || t[1].back() != ':') throw ParseError(ln, "expected 'robot <i>: <walk>'");
            long long idx = to_int(t[1].substr(0, t[1].size() - 1), ln);
            if (idx != static_cast<long long>(cycles.size()) + 1) throw ParseError(ln, "robots must be numbered 1, 2, ...");
            RobotCycle rc;
            for (size_t i = 2; i < t.size(); ++i) rc.walk.push_back(static_cast<Vertex>(to_int(t[i], ln)));
            cycles.push_back(std::move(rc));
        } else {
            throw ParseError(ln, "unknown keyword '" + t[0] + "'");
        }
    }
    if (!value) throw ParseError(ln, "missing 'value'");
    Solution sol;
    sol.cycles = std::move(cycles);
    for (const auto& rc : sol.cycles) {
        Multigraph m;
        for (size_t i = 0; i + 1 < rc.walk.size(); ++i) {
            if (rc.walk[i] == rc.walk[i + 1]) throw ParseError(ln, "walk repeats a vertex in place");
            m.add_edge(rc.walk[i], rc.walk[i + 1]);
        }
        sol.multisets.push_back(std::move(m));
    }
    sol.value = static_cast<int>(*value);
    return sol;
}

}  // namespace cge
