#include "msnum/classify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "msnum/graphstate.hpp"

namespace msnum {

namespace {

struct RepCandidate {
    std::size_t edges;
    std::string graph6;

    auto operator<=>(const RepCandidate&) const = default;
};

}  // namespace

ClassificationReport classify_stream(std::istream& in, std::size_t representative_cap) {
    ClassificationReport report;
    std::map<ClassKey, std::set<RepCandidate>> reps;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view record = line;
        while (!record.empty() && (record.back() == '\r' || record.back() == ' ')) {
            record.remove_suffix(1);
        }
        if (record.empty() || record == ">>graph6<<") continue;
        Graph g;
        try {
            g = parse_graph6(record);
        } catch (const ParseError& e) {
            ++report.malformed;
            report.errors.push_back({line_no, e.what()});
            continue;
        }
        ++report.total;
        const ClassKey key{g.vertex_count(), ms_number(g)};
        auto& cls = report.classes[key];
        ++cls.count;
        auto& pool = reps[key];
        pool.insert({g.edge_count(), to_graph6(g)});
        if (pool.size() > representative_cap) {
            pool.erase(std::prev(pool.end()));
        }
    }

    for (auto& [key, cls] : report.classes) {
        for (const auto& cand : reps[key]) {
            cls.representatives.push_back(cand.graph6);
        }
    }
    return report;
}

std::string render_tsv(const ClassificationReport& report) {
    std::string out;
    for (const auto& [key, cls] : report.classes) {
        out += std::to_string(key.n);
        out += '\t';
        out += key.w.str();
        out += '\t';
        out += std::to_string(cls.count);
        out += '\t';
        for (std::size_t i = 0; i < cls.representatives.size(); ++i) {
            if (i > 0) out += ',';
            out += cls.representatives[i];
        }
        out += '\n';
    }
    if (report.malformed > 0) {
        out += "#malformed\t" + std::to_string(report.malformed) + "\n";
    }
    return out;
}

std::string render_structured(const ClassificationReport& report) {
    std::string out = "classes:\n";
    for (const auto& [key, cls] : report.classes) {
        out += "  - n: " + std::to_string(key.n) + "\n";
        out += "    w: " + key.w.str() + "\n";
        out += "    count: " + std::to_string(cls.count) + "\n";
        out += "    representatives:";
        for (const auto& rep : cls.representatives) {
            out += ' ' + rep;
        }
        out += '\n';
    }
    out += "total: " + std::to_string(report.total) + "\n";
    out += "malformed: " + std::to_string(report.malformed) + "\n";
    for (const auto& err : report.errors) {
        out += "error: line " + std::to_string(err.line) + ": " + err.message + "\n";
    }
    return out;
}

std::vector<Graph> pivot_orbit(const Graph& g) {
    if (g.vertex_count() > 12) {
        throw std::invalid_argument("pivot_orbit: order cap of 12 exceeded");
    }
    std::map<std::string, Graph> seen;
    std::vector<Graph> frontier{g};
    seen.emplace(to_graph6(g), g);
    while (!frontier.empty()) {
        const Graph current = std::move(frontier.back());
        frontier.pop_back();
        for (std::size_t u = 0; u < current.vertex_count(); ++u) {
            for (std::size_t v = u + 1; v < current.vertex_count(); ++v) {
                if (!current.has_edge(u, v)) continue;
                Graph next = pivot(current, u, v);
                const std::string key = to_graph6(next);
                if (seen.emplace(key, next).second) {
                    frontier.push_back(std::move(next));
                }
            }
        }
    }
    std::vector<Graph> orbit;
    orbit.reserve(seen.size());
    for (auto& [key, member] : seen) {
        orbit.push_back(std::move(member));
    }
    return orbit;
}

}  // namespace msnum
