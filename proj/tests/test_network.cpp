#include <doctest.h>

#include <algorithm>

#include "csnet/csmatrix.hpp"
#include "csnet/error.hpp"
#include "csnet/network.hpp"

using namespace csnet;

namespace {

bool has_arc(const PlanarNetwork& net, const Vertex& a, const Vertex& b) {
    return std::any_of(net.arcs().begin(), net.arcs().end(),
                       [&](const Arc& arc) { return arc.tail == a && arc.head == b; });
}

std::vector<WeightCase> cases(int w, int count) { return uniform_cases(WeightCase(w), count); }

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no csnet::Error thrown");
    return ErrorKind::OutOfRange;
}

} // namespace

TEST_CASE("layer networks carry L_n") {
    for (const auto& name : builtin_names()) {
        FamilySpec f = builtin(name);
        for (int w : builtin_conditions(name))
            for (int n = 0; n <= 5; ++n) {
                PlanarNetwork l = build_layer(f, n, WeightCase(w));
                CHECK(l.vertices().size() == static_cast<std::size_t>(3 * (n + 2)));
                CHECK(l.arcs().size() == static_cast<std::size_t>(5 * n + 7));
                CHECK(gf_matrix(l) == build_ln(f, n));
            }
    }
}

TEST_CASE("C_1 is the single layer L_0") {
    PlanarNetwork c1 = build_cs_network(builtin("narayana"), 1, cases(5, 1));
    CHECK(c1.vertices().size() == 6);
    CHECK(c1.arcs().size() == 7);
    CHECK(c1.sources() == std::vector<Vertex>{P(1, 0), P(0, 0)});
    CHECK(c1.sinks() == std::vector<Vertex>{P(1, 1), P(0, 1)});
}

TEST_CASE("C_3 census") {
    PlanarNetwork c3 = build_cs_network(builtin("eulerian"), 3, cases(1, 3));
    CHECK(c3.vertices().size() == 25);
    CHECK(c3.arcs().size() == 39);
    // padding chain along the top
    CHECK(has_arc(c3, P(3, 0), P(3, 1)));
    CHECK(has_arc(c3, P(3, 1), P(3, 2)));
    CHECK(path_gf(c3, P(3, 0), P(3, 3)) == QPoly(1));
}

TEST_CASE("GF matrix of C_n equals C_n for every applicable weight case") {
    for (const auto& name : builtin_names()) {
        FamilySpec f = builtin(name);
        for (int w : builtin_conditions(name))
            for (int n = 0; n <= 5; ++n)
                CHECK_MESSAGE(gf_matrix(build_cs_network(f, n, cases(w, n))) == catalan_stieltjes(f, n).entries,
                              name << " case " << w << " n=" << n);
    }
    FamilySpec nar = builtin("narayana");
    std::vector<WeightCase> mixed{WeightCase(2), WeightCase(5), WeightCase(4), WeightCase(5), WeightCase(2)};
    CHECK(gf_matrix(build_cs_network(nar, 5, mixed)) == catalan_stieltjes(nar, 5).entries);
}

TEST_CASE("row and column conventions") {
    CHECK(height_for_index(4, 0) == 4);
    CHECK(height_for_index(4, 4) == 0);
    CHECK(cs_source(3, 0) == P(3, 0));
    CHECK(cs_sink(3, 3) == P(0, 3));
    PlanarNetwork c2 = build_cs_network(builtin("narayana"), 2, cases(2, 2));
    // c_{2,0} = q + q^2 is the GF from P_0^(0) (row 2) to P_2^(2) (column 0)
    CHECK(path_gf(c2, cs_source(2, 2), cs_sink(2, 0)) == QPoly{0, 1, 1});
}

TEST_CASE("Hankel networks reproduce H_n and do not depend on k") {
    for (const auto& name : builtin_names()) {
        FamilySpec f = builtin(name);
        const int w = builtin_conditions(name).front();
        for (int n = 0; n <= 3; ++n)
            for (int k = 0; k <= 2; ++k) {
                PlanarNetwork h = build_hankel_network(f, n, k, cases(w, 2 * n + k));
                CHECK_MESSAGE(gf_matrix(h) == hankel(f, n).entries, name << " n=" << n << " k=" << k);
                CHECK(h.sources().front() == P(n + k, n + k));
                CHECK(h.sinks().back() == P(2 * n + k, 2 * n + k));
            }
    }
}

TEST_CASE("the dashed H_1 example sits inside the k = 1 Hankel network") {
    PlanarNetwork h = build_hankel_network(builtin("narayana"), 1, 1, cases(5, 3));
    for (const Vertex& v : {P(1, 1), Q(1, 1), P(1, 2), P(2, 2), Q(2, 2), P(3, 3)}) CHECK(h.contains(v));
    CHECK(has_arc(h, P(1, 1), Q(1, 1)));
    CHECK(has_arc(h, Q(1, 1), P(1, 2)));
    CHECK(has_arc(h, P(1, 1), P(2, 2)));
    CHECK(has_arc(h, Q(1, 1), P(2, 2)));
    CHECK(has_arc(h, P(1, 2), Q(2, 2)));
    CHECK(has_arc(h, P(2, 2), Q(2, 2)));
    CHECK(has_arc(h, P(2, 2), P(3, 3)));
    CHECK(has_arc(h, Q(2, 2), P(3, 3)));
    // zero-weight arcs on the same routes are kept as well
    CHECK(h.vertices().size() == 8);
    CHECK(h.arcs().size() == 12);
}

TEST_CASE("factored Hankel networks") {
    for (const char* name : {"narayana", "schroder"}) {
        FamilySpec f = builtin(name);
        for (int n = 0; n <= 4; ++n) {
            PlanarNetwork h = build_hankel_factored(f, n, cases(5, n));
            CHECK_MESSAGE(gf_matrix(h) == hankel(f, n).entries, name << " n=" << n);
            CHECK(h.mirror_level() == n);
        }
    }
    PlanarNetwork h3 = build_hankel_factored(builtin("narayana"), 3, cases(2, 3));
    CHECK(h3.vertices().size() == 50);
    CHECK(h3.arcs().size() == 82);
    CHECK(h3.sinks().front() == Pbar(3, 0));

    CHECK(kind_of([] { build_hankel_factored(builtin("eulerian"), 2, cases(1, 2)); }) == ErrorKind::RequiresUnitGamma);
}

TEST_CASE("T network") {
    FamilySpec f = builtin("schroder");
    PlanarNetwork t = build_t_network(f, 3);
    PolyMatrix g = gf_matrix(t);
    QPoly prod = 1;
    for (int i = 0; i <= 3; ++i) {
        if (i) prod *= f.t(i);
        CHECK(g(i, i) == prod);
    }
    CHECK(t.arcs().size() == 4);
}

TEST_CASE("gluing is associative") {
    FamilySpec f = builtin("narayana");
    PlanarNetwork c = build_cs_network(f, 3, cases(4, 3));
    PlanarNetwork t = build_t_network(f, 3);
    PlanarNetwork m = mirror(c, 3);
    PlanarNetwork left = glue(glue(c, t), m), right = glue(c, glue(t, m));
    CHECK(gf_matrix(left) == gf_matrix(right));
    CHECK(left.vertices().size() == right.vertices().size());
    CHECK(left.arcs().size() == right.arcs().size());
    for (const Arc& a : left.arcs()) CHECK(has_arc(right, a.tail, a.head));

    // the padded product diag(1, L_0) L_1 is C_2
    PlanarNetwork c2 = glue(pad_network(build_layer(f, 0, WeightCase(5)), 1), build_layer(f, 1, WeightCase(5)));
    CHECK(gf_matrix(c2) == catalan_stieltjes(f, 2).entries);

    CHECK(kind_of([&] { glue(build_layer(f, 0, WeightCase(5)), build_layer(f, 1, WeightCase(5))); }) ==
          ErrorKind::ShapeError);
}

TEST_CASE("path enumeration agrees with the dynamic program") {
    FamilySpec f = builtin("schroder");
    std::vector<PlanarNetwork> nets{build_cs_network(f, 4, cases(5, 4)), build_hankel_network(f, 2, 1, cases(5, 5)),
                                    build_hankel_factored(f, 3, cases(5, 3))};
    for (const auto& net : nets)
        for (const Vertex& u : net.sources())
            for (const Vertex& v : net.sinks()) {
                auto paths = enumerate_paths(net, u, v, 100000);
                QPoly sum;
                for (const auto& p : paths) {
                    sum += p.weight;
                    CHECK(p.vertices.front() == u);
                    CHECK(p.vertices.back() == v);
                }
                CHECK(sum == path_gf(net, u, v));
                CHECK(Integer(static_cast<unsigned long>(paths.size())) == count_paths(net, u, v));
            }
    PlanarNetwork big = build_cs_network(f, 5, cases(5, 5));
    CHECK(kind_of([&] { enumerate_paths(big, P(0, 0), P(5, 5), 3); }) == ErrorKind::CapExceeded);
    CHECK(path_gf(big, P(2, 0), P(2, 0)) == QPoly(1));
    CHECK(path_gf(big, P(0, 5), P(0, 0)).is_zero());
}

TEST_CASE("weight validation") {
    CHECK(kind_of([] { WeightCase(0); }) == ErrorKind::OutOfRange);
    CHECK(kind_of([] { WeightCase(6); }) == ErrorKind::OutOfRange);
    CHECK(kind_of([] { build_layer(builtin("eulerian"), 1, WeightCase(5)); }) == ErrorKind::MissingWitness);
    CHECK(kind_of([] { build_layer(builtin("eulerian"), 3, WeightCase(3)); }) == ErrorKind::NegativeWeight);
    CHECK(kind_of([] { build_cs_network(builtin("eulerian"), 3, cases(1, 2)); }) == ErrorKind::ShapeError);
}

TEST_CASE("builder rejects cycles") {
    NetworkBuilder b;
    b.add_arc(P(0, 0), P(0, 1), 1).add_arc(P(0, 1), P(0, 0), 1);
    CHECK(kind_of([&] { b.build({P(0, 0)}, {P(0, 1)}); }) == ErrorKind::ShapeError);
    NetworkBuilder ok;
    ok.add_arc(P(0, 0), P(0, 1), 1);
    CHECK(kind_of([&] { ok.build({P(0, 0)}, {P(5, 5)}); }) == ErrorKind::ShapeError);
}

TEST_CASE("DOT and JSON output") {
    FamilySpec f = builtin("narayana");
    PlanarNetwork a = build_hankel_factored(f, 2, cases(5, 2));
    PlanarNetwork b = build_hankel_factored(f, 2, cases(5, 2));
    std::string dot = export_dot(a);
    CHECK(dot == export_dot(b));
    CHECK(dot.rfind("digraph network {", 0) == 0);
    CHECK(dot.find("Pb_0_0 [label=\"~P_0^(0)\"") != std::string::npos);
    CHECK(dot.back() == '\n');

    PlanarNetwork back = network_from_json(to_json(a));
    CHECK(export_dot(back) == dot);
    CHECK(gf_matrix(back) == gf_matrix(a));
    CHECK(back.mirror_level() == a.mirror_level());
    CHECK(to_json(back) == to_json(a));
}

TEST_CASE("super-diagonal arcs of the zero-difference cases") {
    auto weight = [](const PlanarNetwork& net, const Vertex& a, const Vertex& b) {
        for (const Arc& arc : net.arcs())
            if (arc.tail == a && arc.head == b) return arc.weight;
        FAIL("missing arc");
        return QPoly();
    };
    PlanarNetwork e = build_layer(builtin("eulerian"), 3, WeightCase(1));
    PlanarNetwork n = build_layer(builtin("narayana"), 3, WeightCase(5));
    for (int k = 0; k <= 3; ++k) {
        CHECK(weight(e, P(k, 3), P(k + 1, 4)).is_zero());
        CHECK(weight(n, P(k, 3), P(k + 1, 4)).is_zero());
    }
}

TEST_CASE("path edge cases") {
    FamilySpec f = builtin("narayana");
    PlanarNetwork l0 = build_layer(f, 0, WeightCase(2));
    auto self = enumerate_paths(l0, P(0, 0), P(0, 0), 10);
    REQUIRE(self.size() == 1);
    CHECK(self[0].weight == QPoly(1));
    CHECK(self[0].vertices.size() == 1);
    CHECK(enumerate_paths(l0, P(1, 0), P(0, 1), 10).empty());

    QPoly sum;
    for (const auto& p : enumerate_paths(l0, P(0, 0), P(1, 1), 10)) sum += p.weight;
    CHECK(sum == f.s(0));
    CHECK(sum == build_ln(f, 0)(1, 0));

    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= 2; ++k) {
            PlanarNetwork h = build_hankel_network(f, n, k, cases(2, 2 * n + k));
            CHECK(path_gf(h, P(n + k, n + k), P(n + k, n + k)) == QPoly(1));
        }
}

TEST_CASE("DOT census and the empty network") {
    std::string dot = export_dot(build_cs_network(builtin("narayana"), 1, cases(5, 1)));
    std::size_t nodes = 0, edges = 0, pos = 0;
    while ((pos = dot.find('\n', pos)) != std::string::npos) {
        ++pos;
        std::string_view line(dot.c_str() + pos, dot.find('\n', pos) == std::string::npos ? 0 : dot.find('\n', pos) - pos);
        if (line.find("->") != std::string_view::npos)
            ++edges;
        else if (line.find("[label=") != std::string_view::npos)
            ++nodes;
    }
    CHECK(nodes == 6);
    CHECK(edges == 7);

    PlanarNetwork empty = NetworkBuilder().build({}, {});
    CHECK(export_dot(empty) == "digraph network {\n  // sources:\n  // sinks:\n}\n");
}
