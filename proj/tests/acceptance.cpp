// Acceptance driver: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "csnet/csmatrix.hpp"
#include "csnet/error.hpp"
#include "csnet/families.hpp"
#include "csnet/immanant.hpp"
#include "csnet/network.hpp"
#include "csnet/symchar.hpp"
#include "oracles.hpp"

using namespace csnet;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::vector<WeightCase> cases(int w, int count) { return uniform_cases(WeightCase(w), count); }

// Networks shared by criteria 2, 3 and 4.
std::vector<std::pair<std::string, PlanarNetwork>> cs_networks() {
    std::vector<std::pair<std::string, PlanarNetwork>> out;
    for (const auto& name : builtin_names())
        for (int w : builtin_conditions(name))
            for (int n = 0; n <= 5; ++n)
                out.emplace_back(name + " C_" + std::to_string(n) + " case " + std::to_string(w),
                                 build_cs_network(builtin(name), n, cases(w, n)));
    std::vector<WeightCase> mixed{WeightCase(2), WeightCase(5), WeightCase(4), WeightCase(5), WeightCase(2)};
    out.emplace_back("narayana C_5 mixed cases", build_cs_network(builtin("narayana"), 5, mixed));
    return out;
}

std::vector<std::pair<std::string, PlanarNetwork>> hankel_networks() {
    std::vector<std::pair<std::string, PlanarNetwork>> out;
    for (const auto& name : builtin_names())
        for (int w : builtin_conditions(name))
            for (int n = 0; n <= 3; ++n)
                for (int k = 0; k <= 2; ++k)
                    out.emplace_back(name + " H_" + std::to_string(n) + " k=" + std::to_string(k) + " case " +
                                         std::to_string(w),
                                     build_hankel_network(builtin(name), n, k, cases(w, 2 * n + k)));
    for (const char* name : {"narayana", "schroder"})
        for (int w : builtin_conditions(name))
            for (int n = 0; n <= 4; ++n)
                out.emplace_back(std::string(name) + " factored H_" + std::to_string(n) + " case " + std::to_string(w),
                                 build_hankel_factored(builtin(name), n, cases(w, n)));
    return out;
}

Outcome criterion_1() {
    Outcome o;
    auto e = catalan_like(builtin("eulerian"), 10);
    auto r = catalan_like(builtin("schroder"), 10);
    auto n = catalan_like(builtin("narayana"), 10);
    for (long k = 0; k <= 10; ++k) {
        o.require(e[k] == oracle::eulerian(k), "E_" + std::to_string(k));
        o.require(r[k] == oracle::schroder(k), "R_" + std::to_string(k));
        o.require(n[k] == oracle::narayana(k), "N_" + std::to_string(k));
    }
    return o;
}

Outcome criterion_2() {
    Outcome o;
    for (const auto& [label, net] : cs_networks()) {
        const std::string family = label.substr(0, label.find(' '));
        const int n = static_cast<int>(net.sources().size()) - 1;
        o.require(gf_matrix(net) == catalan_stieltjes(builtin(family), n).entries, label);
    }
    return o;
}

Outcome criterion_3() {
    Outcome o;
    for (const auto& [label, net] : hankel_networks()) {
        const std::string family = label.substr(0, label.find(' '));
        const int n = static_cast<int>(net.sources().size()) - 1;
        o.require(gf_matrix(net) == hankel(builtin(family), n).entries, label);
    }
    // k-independence, stated directly
    for (const auto& name : builtin_names())
        for (int n = 0; n <= 3; ++n) {
            const int w = builtin_conditions(name).front();
            PolyMatrix k0 = gf_matrix(build_hankel_network(builtin(name), n, 0, cases(w, 2 * n)));
            for (int k = 1; k <= 2; ++k)
                o.require(gf_matrix(build_hankel_network(builtin(name), n, k, cases(w, 2 * n + k))) == k0,
                          name + " k-dependence at n=" + std::to_string(n));
        }
    return o;
}

Outcome criterion_4() {
    Outcome o;
    std::size_t pairs = 0;
    auto check = [&](const std::string& label, const PlanarNetwork& net) {
        for (const Vertex& u : net.sources())
            for (const Vertex& v : net.sinks()) {
                if (count_paths(net, u, v) > 100000) continue;
                QPoly sum;
                for (const auto& p : enumerate_paths(net, u, v, 100000)) sum += p.weight;
                o.require(sum == path_gf(net, u, v), label + " " + vertex_name(u) + " -> " + vertex_name(v));
                ++pairs;
            }
    };
    for (const auto& [label, net] : cs_networks()) check(label, net);
    for (const auto& [label, net] : hankel_networks()) check(label, net);
    o.detail = o.ok ? std::to_string(pairs) + " source/sink pairs" : o.detail;
    return o;
}

Outcome criterion_5() {
    Outcome o;
    const CharacterTable& s3 = character_table(3);
    const Partition l21({2, 1});
    o.require(s3.value(l21, Partition({1, 1, 1})) == 2 && s3.value(l21, Partition({2, 1})) == 0 &&
                  s3.value(l21, Partition({3})) == -1,
              "chi^(2,1) row");
    for (int n = 1; n <= 7; ++n) {
        const CharacterTable& t = character_table(n);
        const auto& parts = t.partitions();
        for (std::size_t a = 0; a < parts.size(); ++a)
            for (std::size_t b = 0; b < parts.size(); ++b) {
                Integer sum = 0;
                for (std::size_t c = 0; c < parts.size(); ++c)
                    sum += factorial(n) / centralizer_order(parts[c]) * Integer(static_cast<long>(t.value(a, c))) *
                           Integer(static_cast<long>(t.value(b, c)));
                o.require(sum == (a == b ? factorial(n) : Integer(0)), "orthogonality n=" + std::to_string(n));
            }
    }
    for (int n = 1; n <= 8; ++n) {
        const Partition identity(std::vector<int>(static_cast<std::size_t>(n), 1));
        for (const auto& l : partitions_of(n))
            o.require(degree(l) == character(l, identity), "degree " + l.to_string());
    }
    return o;
}

Outcome criterion_6() {
    Outcome o;
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 5;
        PolyMatrix m = oracle::random_matrix(static_cast<std::size_t>(n), rng);
        o.require(immanant(m, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == determinant(m),
                  "determinant, trial " + std::to_string(trial));
        o.require(determinant(m) == oracle::leibniz_determinant(m), "Leibniz, trial " + std::to_string(trial));
    }
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 5;
        PolyMatrix m = oracle::random_matrix(static_cast<std::size_t>(n), rng);
        o.require(immanant(m, Partition({n})) == oracle::permanent(m), "permanent, trial " + std::to_string(trial));
        QPoly weighted, diag = 1;
        for (const auto& l : partitions_of(n)) weighted += QPoly(Integer(static_cast<long>(degree(l)))) * immanant(m, l);
        for (int i = 0; i < n; ++i) diag *= m(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
        o.require(weighted == QPoly(factorial(n)) * diag, "degree-weighted sum, trial " + std::to_string(trial));
    }
    return o;
}

std::vector<SweepResult> desk_sweeps() {
    std::vector<SweepResult> out;
    for (const auto& name : builtin_names()) {
        SweepOptions c_opt;
        c_opt.max_size = 4;
        out.push_back(positivity_sweep(catalan_stieltjes(builtin(name), 5), c_opt));
        SweepOptions h_opt;
        h_opt.max_size = 3;
        out.push_back(positivity_sweep(hankel(builtin(name), 3), h_opt));
    }
    return out;
}

Outcome sweep_outcome(const std::vector<SweepResult>& sweeps, bool gap) {
    Outcome o;
    std::size_t reports = 0, bad = 0;
    for (const auto& s : sweeps) {
        o.require(!s.sampled, "sweep was sampled");
        for (const auto& r : s.reports) {
            ++reports;
            if (!(gap ? r.gap_nonnegative : r.q_nonnegative)) ++bad;
        }
    }
    o.require(bad == 0, std::to_string(bad) + " violations");
    if (o.ok) o.detail = std::to_string(reports) + " immanants, 0 violations";
    return o;
}

Outcome criterion_9() {
    Outcome o;
    for (const auto& name : builtin_names()) {
        auto a = catalan_like(builtin(name), 10);
        CSMatrix h = hankel(builtin(name), 5);
        std::vector<std::array<std::size_t, 3>> triples;
        for (std::size_t i = 0; i <= 5; ++i)
            for (std::size_t j = i + 1; j <= 5; ++j)
                for (std::size_t k = j + 1; k <= 5; ++k) {
                    triples.push_back({i, j, k});
                    o.require(inequality_332(a, i, j, k).is_q_nonnegative(), name + " three-term inequality");
                }
        for (const auto& ti : triples)
            for (const auto& tj : triples) {
                CSMatrix sub = submatrix(h, {ti.begin(), ti.end()}, {tj.begin(), tj.end()});
                o.require(inequality_331(a, ti, tj) == immanant(sub, Partition({2, 1})) - QPoly(2) * determinant(sub),
                          name + " six-term identity");
            }
    }
    return o;
}

Outcome criterion_10() {
    Outcome o;
    FamilySpec bad("negative-control", Sequence::constant(1), Sequence::constant(0), Sequence::constant(1, 1),
                   Sequence::constant(0), Sequence::constant(0));
    for (int c = 1; c <= 5; ++c) o.require(!check_condition(bad, c, 5).holds, "condition " + std::to_string(c) + " holds");
    SweepOptions opt;
    opt.max_size = 3;
    SweepResult r = positivity_sweep(catalan_stieltjes(bad, 3), opt);
    std::size_t caught = 0;
    for (const auto& rep : r.reports) caught += !rep.q_nonnegative;
    o.require(caught > 0, "sweep found nothing");
    if (o.ok) o.detail = std::to_string(caught) + " negative immanants detected";
    return o;
}

} // namespace

int main() {
    using clock = std::chrono::steady_clock;
    int failures = 0;
    std::vector<SweepResult> sweeps;

    auto run = [&](int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& fn) {
        auto start = clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(clock::now() - start).count();
        if (limit_seconds > 0 && secs > limit_seconds) {
            o.ok = false;
            o.detail = "over the " + std::to_string(static_cast<int>(limit_seconds)) + " s budget";
        }
        if (!o.ok) ++failures;
        std::printf("%s  %2d  %-46s %7.3fs%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
                    o.detail.empty() ? "" : "  ", o.detail.c_str());
        std::fflush(stdout);
    };

    run(1, "Catalan-like numbers vs closed forms", 1, criterion_1);
    run(2, "GF matrix of C_n network equals C_n", 10, criterion_2);
    run(3, "Hankel networks reproduce H_n", 0, criterion_3);
    run(4, "path enumeration equals path GF", 0, criterion_4);
    run(5, "character table", 5, criterion_5);
    run(6, "immanant identities on random matrices", 0, criterion_6);
    run(7, "immanant q-nonnegativity, desk scale", 120, [&] {
        sweeps = desk_sweeps();
        return sweep_outcome(sweeps, false);
    });
    run(8, "Imm - deg*det q-nonnegativity, desk scale", 0, [&] {
        if (sweeps.empty()) sweeps = desk_sweeps();
        return sweep_outcome(sweeps, true);
    });
    run(9, "cubic Hankel inequalities", 30, criterion_9);
    run(10, "negative control is detected", 0, criterion_10);

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
