#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "msnum/graph.hpp"
#include "msnum/quadform.hpp"

// Streaming classifier: groups graph6 records by (order, MS-number). Feeding
// an isomorph-free stream reproduces per-isomorphism-class tables; feeding
// labeled streams counts labeled graphs. Isomorphism reduction itself is left
// to the stream producer.

namespace msnum {

struct ClassKey {
    std::size_t n;
    BigInt w;

    bool operator==(const ClassKey& o) const { return n == o.n && w == o.w; }
    bool operator<(const ClassKey& o) const {
        return n != o.n ? n < o.n : w < o.w;
    }
};

struct GraphClass {
    std::size_t count = 0;
    // Up to the representative cap, ordered by (edge count, graph6 lex).
    std::vector<std::string> representatives;
};

struct StreamError {
    std::size_t line;  // 1-based input line
    std::string message;
};

struct ClassificationReport {
    std::map<ClassKey, GraphClass> classes;
    std::size_t total = 0;      // well-formed graphs consumed
    std::size_t malformed = 0;  // records that failed to parse
    std::vector<StreamError> errors;
};

// One graph6 record per line; blank lines and ">>graph6<<" headers are
// skipped; malformed lines are recorded and processing continues. The report
// is canonical: independent of input order.
ClassificationReport classify_stream(std::istream& in, std::size_t representative_cap = 4);

// "n<TAB>w<TAB>count<TAB>rep1,rep2,..." sorted by (n, w); a trailing
// "#malformed<TAB>k" line appears when any record failed.
std::string render_tsv(const ClassificationReport& report);

// Nested key-value rendering including totals and per-line errors.
std::string render_structured(const ClassificationReport& report);

// Closure of {G} under pivoting on every edge, deduplicated by labeled
// adjacency equality and ordered by graph6 string. Guarded to n <= 12.
std::vector<Graph> pivot_orbit(const Graph& g);

}  // namespace msnum
