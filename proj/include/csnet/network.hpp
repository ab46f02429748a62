#pragma once

/**
 * Planar networks for Catalan-Stieltjes and Hankel matrices.
 *
 * A network is an acyclic weighted digraph with an ordered sequence of
 * sources and of sinks; its GF matrix has (i, j) entry equal to the sum over
 * directed paths from source i to sink j of the product of arc weights, with
 * GF(u, u) = 1.
 *
 * Vertices live on the lattice: P_h^(l) sits at (2l, h) and Q_h^(l) at
 * (2l+1, h). The layer network L_n joins level n to level n+1 through the
 * Q-column of level n with horizontal, diagonal and super-diagonal arcs. Its
 * weights come from one of five weight functions, one per positivity
 * condition; C_n is obtained by gluing L_0, ..., L_{n-1} with identity
 * padding rows in between. Matrix row i of C_n corresponds to height n - i.
 */

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "csnet/csmatrix.hpp"
#include "csnet/families.hpp"
#include "csnet/qpoly.hpp"

namespace csnet {

enum class VertexKind { P, Q, Pbar, Qbar };

struct Vertex {
    VertexKind kind = VertexKind::P;
    int level = 0;
    int height = 0;

    auto operator<=>(const Vertex&) const = default;
};

inline Vertex P(int height, int level) { return {VertexKind::P, level, height}; }
inline Vertex Q(int height, int level) { return {VertexKind::Q, level, height}; }
inline Vertex Pbar(int height, int level) { return {VertexKind::Pbar, level, height}; }
inline Vertex Qbar(int height, int level) { return {VertexKind::Qbar, level, height}; }

/// "P_h_l", "Q_h_l", "Pb_h_l" or "Qb_h_l".
std::string vertex_name(const Vertex& v);

/// Matrix row i of C_n is source P_{n-i}^(0); column j is sink P_{n-j}^(n).
int height_for_index(int n, std::size_t index);
Vertex cs_source(int n, std::size_t row);
Vertex cs_sink(int n, std::size_t col);

struct Arc {
    Vertex tail;
    Vertex head;
    QPoly weight;
};

/// Selects one of the five layer weight functions.
class WeightCase {
public:
    explicit WeightCase(int index);
    int index() const noexcept { return index_; }
    friend bool operator==(WeightCase, WeightCase) = default;

private:
    int index_;
};

std::vector<WeightCase> uniform_cases(WeightCase w, int count);

class NetworkBuilder;

/// Immutable once built. The topological order is computed at construction.
class PlanarNetwork {
public:
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    const std::vector<Vertex>& sources() const noexcept { return sources_; }
    const std::vector<Vertex>& sinks() const noexcept { return sinks_; }
    /// Level of the vertical axis barred vertices were mirrored across, if any.
    std::optional<int> mirror_level() const noexcept { return mirror_level_; }

    bool contains(const Vertex& v) const { return index_.count(v) != 0; }
    std::size_t index_of(const Vertex& v) const;
    const std::vector<std::size_t>& out_arcs(std::size_t vertex) const { return out_[vertex]; }
    const std::vector<std::size_t>& in_arcs(std::size_t vertex) const { return in_[vertex]; }
    const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }
    std::size_t arc_tail(std::size_t arc) const { return tail_idx_[arc]; }
    std::size_t arc_head(std::size_t arc) const { return head_idx_[arc]; }

private:
    friend class NetworkBuilder;
    PlanarNetwork() = default;

    std::vector<Vertex> vertices_;
    std::map<Vertex, std::size_t> index_;
    std::vector<Arc> arcs_;
    std::vector<std::size_t> tail_idx_, head_idx_;
    std::vector<std::vector<std::size_t>> out_, in_;
    std::vector<std::size_t> topo_, topo_pos_;
    std::vector<Vertex> sources_, sinks_;
    std::optional<int> mirror_level_;
};

class NetworkBuilder {
public:
    NetworkBuilder() = default;
    /// Starts from a copy of an existing network's vertices and arcs.
    explicit NetworkBuilder(const PlanarNetwork& base);

    NetworkBuilder& add_vertex(const Vertex& v);
    /// Endpoints are added as vertices if not yet present.
    NetworkBuilder& add_arc(const Vertex& tail, const Vertex& head, QPoly weight);
    NetworkBuilder& set_mirror_level(std::optional<int> level);
    bool contains(const Vertex& v) const { return index_.count(v) != 0; }

    /// Throws ShapeError if the digraph has a cycle or a terminal is not a vertex.
    PlanarNetwork build(std::vector<Vertex> sources, std::vector<Vertex> sinks) const;

private:
    std::vector<Vertex> vertices_;
    std::map<Vertex, std::size_t> index_;
    std::vector<Arc> arcs_;
    std::optional<int> mirror_level_;
};

/// The layer network L_n, a planar network for build_ln(f, n). Throws
/// NegativeWeight when the chosen weight function produces a weight that is
/// not q-nonnegative, and MissingWitness for case 5 without witnesses.
PlanarNetwork build_layer(const FamilySpec& f, int n, WeightCase w);

/// Identifies sink i of x with source i of y (transfer-matrix gluing).
PlanarNetwork glue(const PlanarNetwork& x, const PlanarNetwork& y);

/// Adds the unit chain P_{m+1}^(0) -> ... -> P_{m+1}^(m) on top of C_m,
/// giving a network for diag(1, C_m).
PlanarNetwork pad_network(const PlanarNetwork& cm, int m);

/// The recursive network for C_n; cases[i] is the weight function of L_i.
/// n = 0 gives the single vertex P_0^(0).
PlanarNetwork build_cs_network(const FamilySpec& f, int n, const std::vector<WeightCase>& cases);

/// Network for H_n: the part of the C_{2n+k} network lying on paths from
/// P_k^(k) to P_{2n+k}^(2n+k). cases has length 2n+k.
PlanarNetwork build_hankel_network(const FamilySpec& f, int n, int k, const std::vector<WeightCase>& cases);

/// Reflects across the vertical line x = 2*level + 1/2 and reverses every
/// arc; the GF matrix is transposed.
PlanarNetwork mirror(const PlanarNetwork& net, int level);

/// Diagonal network P_i^(n) -> Pbar_i^(n) with weight t_1 ... t_{n-i}.
PlanarNetwork build_t_network(const FamilySpec& f, int n);

/// Network for H_n built as C_n T_n C_n^T. Requires r_k = 1 for k <= n
/// (RequiresUnitGamma otherwise). cases has length n.
PlanarNetwork build_hankel_factored(const FamilySpec& f, int n, const std::vector<WeightCase>& cases);

/// Sum of path weights from u to v; 1 when u == v, 0 when unreachable.
QPoly path_gf(const PlanarNetwork& net, const Vertex& u, const Vertex& v);
/// Number of directed u -> v paths, zero-weight arcs included.
Integer count_paths(const PlanarNetwork& net, const Vertex& u, const Vertex& v);
/// GF matrix indexed by (sources, sinks).
PolyMatrix gf_matrix(const PlanarNetwork& net);

struct Path {
    std::vector<Vertex> vertices;
    QPoly weight;
};

/// Every directed u -> v path exactly once. Throws CapExceeded if there are
/// more than cap of them.
std::vector<Path> enumerate_paths(const PlanarNetwork& net, const Vertex& u, const Vertex& v, std::size_t cap);

/// Deterministic Graphviz text with lattice positions and weight labels.
std::string export_dot(const PlanarNetwork& net);
nlohmann::json to_json(const PlanarNetwork& net);
PlanarNetwork network_from_json(const nlohmann::json& j);

} // namespace csnet
