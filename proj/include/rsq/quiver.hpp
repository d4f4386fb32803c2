#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsq {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct Arrow {
    std::string id;
    int src = -1;
    int tgt = -1;
};

// Finite quiver; loops and parallel arrows allowed. Immutable after construction.
class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<std::tuple<std::string, std::string, std::string>> arrows);

    int num_vertices() const { return (int)vertex_ids_.size(); }
    int num_arrows() const { return (int)arrows_.size(); }
    const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    int vertex_index(const std::string& id) const; // -1 if absent
    int arrow_index(const std::string& id) const;

    int undirected_degree(int v) const; // loops count twice
    std::vector<int> arrows_out(int v) const;
    std::vector<int> arrows_in(int v) const;
    std::vector<int> incident_arrows(int v) const; // loops listed once

    // lexicographically least vertex id (the fixed base vertex of component computations)
    int base_vertex() const;

    bool is_connected() const;
    bool has_directed_cycle() const;

private:
    std::vector<std::string> vertex_ids_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vindex_;
    std::map<std::string, int> aindex_;
};

Quiver parse_quiver(const std::string& text);
std::string render_quiver(const Quiver& q); // quiver text format, reparses to the same quiver

// Partition of vertices by connectivity of the underlying multigraph, each part sorted by id,
// parts ordered by least id.
std::vector<std::vector<int>> connected_components(const Quiver& q);

// Quiver induced on a vertex subset (ids preserved).
Quiver induced_subquiver(const Quiver& q, const std::vector<int>& vertices);
Quiver reverse_all_arrows(const Quiver& q);

enum class Direction { Direct, Inverse };

struct Letter {
    int arrow;
    Direction dir;
    bool operator==(const Letter& o) const { return arrow == o.arrow && dir == o.dir; }
};

struct Walk {
    int start = -1;
    std::vector<Letter> letters;
};

int letter_source(const Quiver& q, const Letter& l);
int letter_target(const Quiver& q, const Letter& l);
bool walk_is_valid(const Quiver& q, const Walk& w);
bool walk_is_closed(const Quiver& q, const Walk& w);
int walk_end(const Quiver& q, const Walk& w);
std::string walk_str(const Quiver& q, const Walk& w);

// epsilon^+(w) - epsilon^-(w)
long signed_weight(const Walk& w);

// All closed walks of length 1..L, unreduced, deterministic order.
std::vector<Walk> closed_walks_upto(const Quiver& q, int L);

enum class ShapeTag { A, D, E6, E7, E8, ACycle, Dt, E6t, E7t, E8t, Other };

struct GraphShape {
    ShapeTag tag = ShapeTag::Other;
    int n = 0;            // rank for A/D/Dt (vertex count; Dt: n+1 vertices)
    int cycle_length = 0; // for ACycle: number of edges = number of vertices
    bool is_dynkin() const;
    bool is_euclidean_tree() const; // Dt/E6t/E7t/E8t
    bool is_cycle() const { return tag == ShapeTag::ACycle; }
    std::string str() const;
};

// Underlying-multigraph shape of a connected quiver. Throws on disconnected input.
GraphShape recognize_shape(const Quiver& q);

} // namespace rsq
