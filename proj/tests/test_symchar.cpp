#include <doctest.h>

#include "csnet/error.hpp"
#include "csnet/symchar.hpp"

using namespace csnet;

namespace {

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Number of standard Young tableaux by direct recursion on removable corners.
Integer count_tableaux(std::vector<int> shape) {
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (shape.empty()) return 1;
    Integer total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i)
        if (i + 1 == shape.size() || shape[i] > shape[i + 1]) {
            --shape[i];
            total += count_tableaux(shape);
            ++shape[i];
        }
    return total;
}

} // namespace

TEST_CASE("partitions") {
    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4.front() == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4.back() == Partition({1, 1, 1, 1}));
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(10).size() == 42);
    CHECK(partitions_of(20).size() == 627);
    CHECK_THROWS_AS(partitions_of(21), Error);
    CHECK(Partition({1, 3, 0, 2}).parts == std::vector<int>{3, 2, 1});
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({2, 1}).to_string() == "(2,1)");
    CHECK_THROWS_AS(Partition({2, -1}), Error);
    for (const auto& p : partitions_of(8)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("S_3 values") {
    const Partition l21({2, 1});
    CHECK(character(l21, Partition({1, 1, 1})) == 2);
    CHECK(character(l21, Partition({2, 1})) == 0);
    CHECK(character(l21, Partition({3})) == -1);
    CHECK(character(Partition({1, 1, 1}), Partition({2, 1})) == -1);
    CHECK(character(Partition({3}), Partition({2, 1})) == 1);
    CHECK_THROWS_AS(character(l21, Partition({2})), Error);
}

TEST_CASE("column orthogonality and row orthogonality for n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        const CharacterTable& t = character_table(n);
        const auto& parts = t.partitions();
        for (std::size_t a = 0; a < parts.size(); ++a)
            for (std::size_t b = 0; b < parts.size(); ++b) {
                // sum over classes |class| chi_a chi_b = n! [a == b]
                Integer rows = 0, cols = 0;
                for (std::size_t c = 0; c < parts.size(); ++c) {
                    rows += factorial(n) / centralizer_order(parts[c]) * Integer(static_cast<long>(t.value(a, c))) *
                            Integer(static_cast<long>(t.value(b, c)));
                    cols += Integer(static_cast<long>(t.value(c, a))) * Integer(static_cast<long>(t.value(c, b)));
                }
                CHECK(rows == (a == b ? factorial(n) : Integer(0)));
                CHECK(cols == (a == b ? centralizer_order(parts[a]) : Integer(0)));
            }
    }
}

TEST_CASE("degrees for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        Integer sum_sq = 0;
        const Partition identity(std::vector<int>(static_cast<std::size_t>(n), 1));
        for (const auto& l : partitions_of(n)) {
            CHECK(Integer(static_cast<long>(degree(l))) == count_tableaux(l.parts));
            CHECK(degree(l) == character(l, identity));
            CHECK(degree(l) == degree(l.conjugate()));
            sum_sq += Integer(static_cast<long>(degree(l))) * degree(l);
        }
        CHECK(sum_sq == factorial(n));
    }
}

TEST_CASE("conjugation multiplies by the sign character") {
    for (const auto& l : partitions_of(6))
        for (const auto& mu : partitions_of(6)) CHECK(character(l.conjugate(), mu) == sign(mu) * character(l, mu));
}

TEST_CASE("cycle types") {
    CHECK(cycle_type({1, 2, 3}) == Partition({1, 1, 1}));
    CHECK(cycle_type({2, 3, 1}) == Partition({3}));
    CHECK(cycle_type({2, 1, 4, 3, 5}) == Partition({2, 2, 1}));
    CHECK(cycle_type({}) == Partition());
    CHECK_THROWS_AS(cycle_type({1, 1}), Error);
    CHECK_THROWS_AS(cycle_type({0, 1}), Error);
    CHECK(sign(Partition({3})) == 1);
    CHECK(sign(Partition({2, 1})) == -1);
    CHECK(centralizer_order(Partition({2, 2, 1})) == 8);
}

TEST_CASE("table caching and json") {
    const CharacterTable& a = character_table(5);
    CHECK(&a == &character_table(5));
    CHECK(a.value(Partition({5}), Partition({3, 2})) == 1);
    auto j = to_json(character_table(3));
    CHECK(j["n"] == 3);
    CHECK(j["classes"].size() == 3);
    CHECK(j["chars"][1]["lambda"] == nlohmann::json::array({2, 1}));
    CHECK(j["chars"][1]["values"] == nlohmann::json::array({-1, 0, 2}));
}
