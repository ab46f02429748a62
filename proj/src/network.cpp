#include "csnet/network.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "csnet/error.hpp"

namespace csnet {

namespace {

const char* kind_prefix(VertexKind k) {
    switch (k) {
    case VertexKind::P: return "P";
    case VertexKind::Q: return "Q";
    case VertexKind::Pbar: return "Pb";
    case VertexKind::Qbar: return "Qb";
    }
    return "?";
}

const char* kind_json(VertexKind k) {
    switch (k) {
    case VertexKind::P: return "P";
    case VertexKind::Q: return "Q";
    case VertexKind::Pbar: return "Pbar";
    case VertexKind::Qbar: return "Qbar";
    }
    return "?";
}

VertexKind kind_from_json(const std::string& s) {
    if (s == "P") return VertexKind::P;
    if (s == "Q") return VertexKind::Q;
    if (s == "Pbar") return VertexKind::Pbar;
    if (s == "Qbar") return VertexKind::Qbar;
    throw Error(ErrorKind::SchemaError, "unknown vertex kind \"" + s + "\"");
}

bool is_barred(VertexKind k) { return k == VertexKind::Pbar || k == VertexKind::Qbar; }

VertexKind reflect(VertexKind k) {
    switch (k) {
    case VertexKind::P: return VertexKind::Pbar;
    case VertexKind::Q: return VertexKind::Qbar;
    case VertexKind::Pbar: return VertexKind::P;
    case VertexKind::Qbar: return VertexKind::Q;
    }
    return k;
}

} // namespace

std::string vertex_name(const Vertex& v) {
    return std::string(kind_prefix(v.kind)) + "_" + std::to_string(v.height) + "_" + std::to_string(v.level);
}

int height_for_index(int n, std::size_t index) { return n - static_cast<int>(index); }
Vertex cs_source(int n, std::size_t row) { return P(height_for_index(n, row), 0); }
Vertex cs_sink(int n, std::size_t col) { return P(height_for_index(n, col), n); }

WeightCase::WeightCase(int index) : index_(index) {
    if (index < 1 || index > 5) throw Error(ErrorKind::OutOfRange, "weight case must be in 1..5, got " + std::to_string(index));
}

std::vector<WeightCase> uniform_cases(WeightCase w, int count) {
    return std::vector<WeightCase>(static_cast<std::size_t>(std::max(count, 0)), w);
}

std::size_t PlanarNetwork::index_of(const Vertex& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw Error(ErrorKind::IndexError, "vertex " + vertex_name(v) + " is not in the network");
    return it->second;
}

NetworkBuilder::NetworkBuilder(const PlanarNetwork& base)
    : vertices_(base.vertices_), index_(base.index_), arcs_(base.arcs_), mirror_level_(base.mirror_level_) {}

NetworkBuilder& NetworkBuilder::add_vertex(const Vertex& v) {
    if (index_.emplace(v, vertices_.size()).second) vertices_.push_back(v);
    return *this;
}

NetworkBuilder& NetworkBuilder::add_arc(const Vertex& tail, const Vertex& head, QPoly weight) {
    add_vertex(tail);
    add_vertex(head);
    arcs_.push_back({tail, head, std::move(weight)});
    return *this;
}

NetworkBuilder& NetworkBuilder::set_mirror_level(std::optional<int> level) {
    mirror_level_ = level;
    return *this;
}

PlanarNetwork NetworkBuilder::build(std::vector<Vertex> sources, std::vector<Vertex> sinks) const {
    PlanarNetwork net;
    net.vertices_ = vertices_;
    net.index_ = index_;
    net.arcs_ = arcs_;
    net.mirror_level_ = mirror_level_;
    const std::size_t nv = vertices_.size();
    net.out_.assign(nv, {});
    net.in_.assign(nv, {});
    for (std::size_t a = 0; a < arcs_.size(); ++a) {
        std::size_t t = index_.at(arcs_[a].tail), h = index_.at(arcs_[a].head);
        net.tail_idx_.push_back(t);
        net.head_idx_.push_back(h);
        net.out_[t].push_back(a);
        net.in_[h].push_back(a);
    }
    for (const auto* terminals : {&sources, &sinks})
        for (const auto& v : *terminals)
            if (!index_.count(v)) throw Error(ErrorKind::ShapeError, "terminal " + vertex_name(v) + " is not a vertex");

    // Kahn's algorithm; ties broken by insertion order so the order is reproducible.
    std::vector<std::size_t> indeg(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) indeg[v] = net.in_[v].size();
    std::deque<std::size_t> ready;
    for (std::size_t v = 0; v < nv; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        std::size_t v = ready.front();
        ready.pop_front();
        net.topo_.push_back(v);
        for (std::size_t a : net.out_[v])
            if (--indeg[net.head_idx_[a]] == 0) ready.push_back(net.head_idx_[a]);
    }
    if (net.topo_.size() != nv) throw Error(ErrorKind::ShapeError, "digraph has a directed cycle");
    net.topo_pos_.assign(nv, 0);
    for (std::size_t i = 0; i < nv; ++i) net.topo_pos_[net.topo_[i]] = i;

    net.sources_ = std::move(sources);
    net.sinks_ = std::move(sinks);
    return net;
}

PlanarNetwork build_layer(const FamilySpec& f, int n, WeightCase w) {
    if (n < 0) throw Error(ErrorKind::OutOfRange, "layer index must be nonnegative");
    const int c = w.index();
    if (c == 5 && !f.has_witnesses())
        throw Error(ErrorKind::MissingWitness, f.name() + ": weight case 5 needs witness sequences b and c");

    NetworkBuilder nb;
    for (int k = 0; k <= n + 1; ++k) nb.add_vertex(P(k, n));
    for (int k = 0; k <= n + 1; ++k) nb.add_vertex(Q(k, n));
    for (int k = 0; k <= n + 1; ++k) nb.add_vertex(P(k, n + 1));

    auto add = [&](const Vertex& tail, const Vertex& head, QPoly wt) {
        if (!wt.is_q_nonnegative())
            throw Error(ErrorKind::NegativeWeight, f.name() + ", layer " + std::to_string(n) + ", case " +
                                                       std::to_string(c) + ": arc " + vertex_name(tail) + " -> " +
                                                       vertex_name(head) + " has weight " + wt.to_string());
        nb.add_arc(tail, head, std::move(wt));
    };

    // horizontal arcs, 0 <= k <= n+1
    for (int k = 0; k <= n + 1; ++k) {
        const int j = n - k;
        QPoly pq = 1, qp = 1;
        if (k <= n) {
            if (c == 1 || c == 4) pq = f.r(j);
            if (c == 2 || c == 3) qp = f.r(j);
        }
        add(P(k, n), Q(k, n), std::move(pq));
        add(Q(k, n), P(k, n + 1), std::move(qp));
    }
    // diagonal arcs, 0 <= k <= n
    for (int k = 0; k <= n; ++k) {
        const int j = n - k;
        QPoly pq = 1, qp = 1;
        switch (c) {
        case 1:
        case 3: pq = f.t(j); break;
        case 2: pq = k == n ? QPoly() : QPoly(1); qp = f.t(j + 1); break;
        case 4: pq = k == n ? QPoly() : QPoly(1); qp = f.t(j + 1); break;
        case 5: pq = f.b(j); qp = f.c(j); break;
        }
        add(P(k, n), Q(k + 1, n), std::move(pq));
        add(Q(k, n), P(k + 1, n + 1), std::move(qp));
    }
    // super-diagonal arcs, 0 <= k <= n
    for (int k = 0; k <= n; ++k) {
        const int j = n - k;
        QPoly wt;
        switch (c) {
        case 1: wt = f.s(j) - f.r(j) - f.t(j); break;
        case 2: wt = f.s(j) - f.r(j - 1) - f.t(j + 1); break;
        case 3: wt = f.s(j) - f.r(j - 1) * f.t(j) - QPoly(1); break;
        case 4: wt = k < n ? f.s(j) - f.r(j) * f.t(j + 1) - QPoly(1) : f.s(0) - f.r(0) * f.t(1); break;
        case 5: break;
        }
        add(P(k, n), P(k + 1, n + 1), std::move(wt));
    }

    std::vector<Vertex> sources, sinks;
    for (int k = n + 1; k >= 0; --k) {
        sources.push_back(P(k, n));
        sinks.push_back(P(k, n + 1));
    }
    return nb.build(std::move(sources), std::move(sinks));
}

PlanarNetwork glue(const PlanarNetwork& x, const PlanarNetwork& y) {
    if (x.sinks().size() != y.sources().size())
        throw Error(ErrorKind::ShapeError, "cannot glue " + std::to_string(x.sinks().size()) + " sinks onto " +
                                               std::to_string(y.sources().size()) + " sources");
    for (const auto& v : x.sinks())
        if (!x.out_arcs(x.index_of(v)).empty())
            throw Error(ErrorKind::ShapeError, "glue: " + vertex_name(v) + " is not a sink of the first digraph");
    for (const auto& v : y.sources())
        if (!y.in_arcs(y.index_of(v)).empty())
            throw Error(ErrorKind::ShapeError, "glue: " + vertex_name(v) + " is not a source of the second digraph");

    std::map<Vertex, Vertex> ident;
    for (std::size_t i = 0; i < y.sources().size(); ++i) ident.emplace(y.sources()[i], x.sinks()[i]);
    auto map = [&](const Vertex& v) {
        auto it = ident.find(v);
        return it == ident.end() ? v : it->second;
    };
    for (const auto& v : y.vertices())
        if (!ident.count(v) && x.contains(v))
            throw Error(ErrorKind::ShapeError, "glue: vertex " + vertex_name(v) + " occurs in both networks");

    NetworkBuilder nb(x);
    if (!x.mirror_level()) nb.set_mirror_level(y.mirror_level());
    for (const auto& v : y.vertices()) nb.add_vertex(map(v));
    for (const auto& a : y.arcs()) nb.add_arc(map(a.tail), map(a.head), a.weight);
    std::vector<Vertex> sinks;
    for (const auto& v : y.sinks()) sinks.push_back(map(v));
    return nb.build(x.sources(), std::move(sinks));
}

PlanarNetwork pad_network(const PlanarNetwork& cm, int m) {
    NetworkBuilder nb(cm);
    for (int i = 0; i <= m; ++i) nb.add_vertex(P(m + 1, i));
    for (int i = 0; i < m; ++i) nb.add_arc(P(m + 1, i), P(m + 1, i + 1), 1);
    std::vector<Vertex> sources{P(m + 1, 0)}, sinks{P(m + 1, m)};
    sources.insert(sources.end(), cm.sources().begin(), cm.sources().end());
    sinks.insert(sinks.end(), cm.sinks().begin(), cm.sinks().end());
    return nb.build(std::move(sources), std::move(sinks));
}

PlanarNetwork build_cs_network(const FamilySpec& f, int n, const std::vector<WeightCase>& cases) {
    if (n < 0) throw Error(ErrorKind::OutOfRange, "n must be nonnegative");
    if (cases.size() != static_cast<std::size_t>(n))
        throw Error(ErrorKind::ShapeError, "expected " + std::to_string(n) + " weight cases, got " +
                                               std::to_string(cases.size()));
    if (n == 0) return NetworkBuilder().add_vertex(P(0, 0)).build({P(0, 0)}, {P(0, 0)});
    PlanarNetwork net = build_layer(f, 0, cases[0]);
    for (int m = 1; m < n; ++m) net = glue(pad_network(net, m), build_layer(f, m, cases[static_cast<std::size_t>(m)]));
    return net;
}

namespace {

std::vector<bool> reach(const PlanarNetwork& net, std::size_t start, bool forward) {
    std::vector<bool> seen(net.vertices().size(), false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t a : forward ? net.out_arcs(v) : net.in_arcs(v)) {
            std::size_t w = forward ? net.arc_head(a) : net.arc_tail(a);
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

} // namespace

PlanarNetwork build_hankel_network(const FamilySpec& f, int n, int k, const std::vector<WeightCase>& cases) {
    if (n < 0 || k < 0) throw Error(ErrorKind::OutOfRange, "n and k must be nonnegative");
    const int big = 2 * n + k;
    PlanarNetwork full = build_cs_network(f, big, cases);
    const Vertex start = P(k, k), finish = P(big, big);
    auto fwd = reach(full, full.index_of(start), true);
    auto bwd = reach(full, full.index_of(finish), false);

    std::vector<bool> keep_vertex(full.vertices().size(), false);
    keep_vertex[full.index_of(start)] = keep_vertex[full.index_of(finish)] = true;
    std::vector<std::size_t> kept_arcs;
    for (std::size_t a = 0; a < full.arcs().size(); ++a) {
        if (fwd[full.arc_tail(a)] && bwd[full.arc_head(a)]) {
            kept_arcs.push_back(a);
            keep_vertex[full.arc_tail(a)] = keep_vertex[full.arc_head(a)] = true;
        }
    }
    NetworkBuilder nb;
    for (std::size_t v = 0; v < full.vertices().size(); ++v)
        if (keep_vertex[v]) nb.add_vertex(full.vertices()[v]);
    for (std::size_t a : kept_arcs) nb.add_arc(full.arcs()[a].tail, full.arcs()[a].head, full.arcs()[a].weight);

    std::vector<Vertex> sources, sinks;
    for (int i = 0; i <= n; ++i) {
        sources.push_back(P(n + k - i, n + k - i));
        sinks.push_back(P(n + k + i, n + k + i));
    }
    return nb.build(std::move(sources), std::move(sinks));
}

PlanarNetwork mirror(const PlanarNetwork& net, int level) {
    auto refl = [](const Vertex& v) { return Vertex{reflect(v.kind), v.level, v.height}; };
    NetworkBuilder nb;
    nb.set_mirror_level(level);
    for (const auto& v : net.vertices()) nb.add_vertex(refl(v));
    for (const auto& a : net.arcs()) nb.add_arc(refl(a.head), refl(a.tail), a.weight);
    std::vector<Vertex> sources, sinks;
    for (const auto& v : net.sinks()) sources.push_back(refl(v));
    for (const auto& v : net.sources()) sinks.push_back(refl(v));
    return nb.build(std::move(sources), std::move(sinks));
}

PlanarNetwork build_t_network(const FamilySpec& f, int n) {
    if (n < 0) throw Error(ErrorKind::OutOfRange, "n must be nonnegative");
    NetworkBuilder nb;
    nb.set_mirror_level(n);
    for (int i = 0; i <= n; ++i) nb.add_vertex(P(i, n));
    for (int i = 0; i <= n; ++i) nb.add_vertex(Pbar(i, n));
    for (int i = 0; i <= n; ++i) {
        QPoly w = 1;
        for (int m = 1; m <= n - i; ++m) w *= f.t(m);
        nb.add_arc(P(i, n), Pbar(i, n), std::move(w));
    }
    std::vector<Vertex> sources, sinks;
    for (int i = n; i >= 0; --i) {
        sources.push_back(P(i, n));
        sinks.push_back(Pbar(i, n));
    }
    return nb.build(std::move(sources), std::move(sinks));
}

PlanarNetwork build_hankel_factored(const FamilySpec& f, int n, const std::vector<WeightCase>& cases) {
    if (n < 0) throw Error(ErrorKind::OutOfRange, "n must be nonnegative");
    for (int k = 0; k <= n; ++k)
        if (QPoly r = f.r(k); r != QPoly(1))
            throw Error(ErrorKind::RequiresUnitGamma,
                        f.name() + ": r_" + std::to_string(k) + " = " + r.to_string() + " is not 1");
    PlanarNetwork cn = build_cs_network(f, n, cases);
    return glue(glue(cn, build_t_network(f, n)), mirror(cn, n));
}

namespace {

// Values along the topological order starting at u; entries before u stay zero.
template <typename T, typename ArcValue>
std::vector<T> propagate(const PlanarNetwork& net, std::size_t u, ArcValue arc_value) {
    const auto& topo = net.topological_order();
    std::vector<T> val(net.vertices().size());
    val[u] = T(1);
    auto start = std::find(topo.begin(), topo.end(), u);
    for (auto it = start; it != topo.end(); ++it) {
        const T& cur = val[*it];
        if (cur == T(0)) continue;
        for (std::size_t a : net.out_arcs(*it)) val[net.arc_head(a)] += cur * arc_value(a);
    }
    return val;
}

} // namespace

QPoly path_gf(const PlanarNetwork& net, const Vertex& u, const Vertex& v) {
    std::size_t ui = net.index_of(u), vi = net.index_of(v);
    if (ui == vi) return 1;
    auto val = propagate<QPoly>(net, ui, [&](std::size_t a) -> const QPoly& { return net.arcs()[a].weight; });
    return val[vi];
}

Integer count_paths(const PlanarNetwork& net, const Vertex& u, const Vertex& v) {
    std::size_t ui = net.index_of(u), vi = net.index_of(v);
    if (ui == vi) return 1;
    auto val = propagate<Integer>(net, ui, [](std::size_t) { return Integer(1); });
    return val[vi];
}

PolyMatrix gf_matrix(const PlanarNetwork& net) {
    PolyMatrix m(net.sources().size(), net.sinks().size());
    for (std::size_t i = 0; i < net.sources().size(); ++i) {
        std::size_t ui = net.index_of(net.sources()[i]);
        auto val = propagate<QPoly>(net, ui, [&](std::size_t a) -> const QPoly& { return net.arcs()[a].weight; });
        for (std::size_t j = 0; j < net.sinks().size(); ++j) {
            std::size_t vi = net.index_of(net.sinks()[j]);
            m(i, j) = vi == ui ? QPoly(1) : val[vi];
        }
    }
    return m;
}

std::vector<Path> enumerate_paths(const PlanarNetwork& net, const Vertex& u, const Vertex& v, std::size_t cap) {
    Integer total = count_paths(net, u, v);
    if (total > Integer(std::to_string(cap)))
        throw Error(ErrorKind::CapExceeded, total.get_str() + " paths from " + vertex_name(u) + " to " +
                                                vertex_name(v) + " exceed the cap of " + std::to_string(cap));
    std::vector<Path> paths;
    const std::size_t target = net.index_of(v);
    std::vector<std::size_t> stack_vertices{net.index_of(u)};
    std::vector<QPoly> stack_weights{QPoly(1)};
    std::function<void()> dfs = [&]() {
        std::size_t cur = stack_vertices.back();
        if (cur == target) {
            Path p;
            for (std::size_t vi : stack_vertices) p.vertices.push_back(net.vertices()[vi]);
            p.weight = stack_weights.back();
            paths.push_back(std::move(p));
            return;
        }
        for (std::size_t a : net.out_arcs(cur)) {
            stack_vertices.push_back(net.arc_head(a));
            stack_weights.push_back(stack_weights.back() * net.arcs()[a].weight);
            dfs();
            stack_vertices.pop_back();
            stack_weights.pop_back();
        }
    };
    dfs();
    return paths;
}

namespace {

std::string vertex_label(const Vertex& v) {
    const char* base = v.kind == VertexKind::P || v.kind == VertexKind::Pbar ? "P" : "Q";
    return std::string(is_barred(v.kind) ? "~" : "") + base + "_" + std::to_string(v.height) + "^(" +
           std::to_string(v.level) + ")";
}

int lattice_x(const Vertex& v, int mirror_level) {
    int x = 2 * v.level + (v.kind == VertexKind::Q || v.kind == VertexKind::Qbar ? 1 : 0);
    return is_barred(v.kind) ? 4 * mirror_level + 1 - x : x;
}

nlohmann::json vertex_json(const Vertex& v) {
    return {{"kind", kind_json(v.kind)}, {"level", v.level}, {"height", v.height}};
}

Vertex vertex_from_json(const nlohmann::json& j) {
    try {
        return Vertex{kind_from_json(j.at("kind").get<std::string>()), j.at("level").get<int>(),
                      j.at("height").get<int>()};
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::SchemaError, std::string("bad vertex: ") + e.what());
    }
}

} // namespace

std::string export_dot(const PlanarNetwork& net) {
    const int axis = net.mirror_level().value_or(0);
    std::ostringstream os;
    os << "digraph network {\n";
    auto list = [&](const char* what, const std::vector<Vertex>& vs) {
        os << "  // " << what << ":";
        for (const auto& v : vs) os << ' ' << vertex_name(v);
        os << '\n';
    };
    list("sources", net.sources());
    list("sinks", net.sinks());
    for (const auto& v : net.vertices())
        os << "  " << vertex_name(v) << " [label=\"" << vertex_label(v) << "\", pos=\"" << lattice_x(v, axis) << ','
           << v.height << "!\"];\n";
    for (const auto& a : net.arcs())
        os << "  " << vertex_name(a.tail) << " -> " << vertex_name(a.head) << " [label=\"" << a.weight.to_string()
           << "\"];\n";
    os << "}\n";
    return os.str();
}

nlohmann::json to_json(const PlanarNetwork& net) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : net.vertices()) j["vertices"].push_back(vertex_json(v));
    j["arcs"] = nlohmann::json::array();
    for (const auto& a : net.arcs())
        j["arcs"].push_back({{"tail", vertex_json(a.tail)}, {"head", vertex_json(a.head)}, {"weight", to_json(a.weight)}});
    j["sources"] = nlohmann::json::array();
    for (const auto& v : net.sources()) j["sources"].push_back(vertex_json(v));
    j["sinks"] = nlohmann::json::array();
    for (const auto& v : net.sinks()) j["sinks"].push_back(vertex_json(v));
    if (net.mirror_level()) j["mirror_level"] = *net.mirror_level();
    return j;
}

PlanarNetwork network_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error(ErrorKind::SchemaError, "network must be an object");
    NetworkBuilder nb;
    for (const auto& v : j.value("vertices", nlohmann::json::array())) nb.add_vertex(vertex_from_json(v));
    for (const auto& a : j.value("arcs", nlohmann::json::array()))
        nb.add_arc(vertex_from_json(a.at("tail")), vertex_from_json(a.at("head")), qpoly_from_json(a.at("weight")));
    if (j.contains("mirror_level")) nb.set_mirror_level(j["mirror_level"].get<int>());
    std::vector<Vertex> sources, sinks;
    for (const auto& v : j.value("sources", nlohmann::json::array())) sources.push_back(vertex_from_json(v));
    for (const auto& v : j.value("sinks", nlohmann::json::array())) sinks.push_back(vertex_from_json(v));
    return nb.build(std::move(sources), std::move(sinks));
}

} // namespace csnet
