#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gpa/quiver.hpp"

#include <random>
#include <set>

using gpa::Connectivity;
using gpa::Quiver;

namespace {

Quiver chain3() {
    Quiver q;
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_vertex("3");
    q.add_arrow("x", "1", "2");
    q.add_arrow("y", "2", "3");
    return q;
}

Quiver one_arrow() {
    Quiver q;
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_arrow("x", "1", "2");
    return q;
}

Quiver two_cycle() {
    Quiver q;
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_arrow("x", "1", "2");
    q.add_arrow("y", "2", "1");
    return q;
}

Quiver random_quiver(std::mt19937_64& gen, size_t max_v = 8, size_t max_a = 12) {
    Quiver q;
    size_t n = 1 + gen() % max_v;
    for (size_t i = 0; i < n; ++i) q.add_vertex("v" + std::to_string(i));
    size_t m = gen() % (max_a + 1);
    for (size_t i = 0; i < m; ++i) {
        size_t s = gen() % n, t = gen() % n;
        q.add_arrow("a" + std::to_string(i), "v" + std::to_string(s), "v" + std::to_string(t));
    }
    return q;
}

// positive-length transitive closure by repeated boolean matrix product
std::vector<std::vector<bool>> closure_oracle(const Quiver& q) {
    size_t n = q.vertex_count();
    std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
    for (const auto& arr : q.arrows()) a[arr.src][arr.dst] = true;
    std::vector<std::vector<bool>> p = a;
    for (size_t step = 0; step < n; ++step) {
        auto next = p;
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k)
                if (p[i][k])
                    for (size_t j = 0; j < n; ++j)
                        if (a[k][j]) next[i][j] = true;
        p = std::move(next);
    }
    return p;
}

bool comparable(const Connectivity& c, size_t u, size_t v) {
    return c.reachable(u, v) || c.reachable(v, u);
}

}  // namespace

TEST_CASE("parsing and round trip") {
    const char* text =
        "# a small quiver\n"
        "vertex a\n"
        "vertex b\n"
        "arrow f a b  # comment after fields\n"
        "\n"
        "arrow g b b\n";
    Quiver q = Quiver::parse(text);
    CHECK(q.vertex_count() == 2);
    REQUIRE(q.arrows().size() == 2);
    CHECK(q.arrows()[0].name == "f");
    CHECK(q.arrows()[1].src == q.arrows()[1].dst);
    Quiver again = Quiver::parse(q.to_file());
    CHECK(again.to_file() == q.to_file());
}

TEST_CASE("parse errors carry line numbers") {
    using doctest::Contains;
    CHECK_THROWS_WITH_AS(Quiver::parse("vertex a\nvertex a\n"), Contains("line 2"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Quiver::parse("arrow f a b\n"), Contains("line 1"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Quiver::parse("vertex a\nbogus\n"), Contains("line 2"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Quiver::parse("vertex a\narrow f a\n"), Contains("line 2"),
                         std::invalid_argument);
}

TEST_CASE("strong components") {
    Quiver single;
    single.add_vertex("v");
    CHECK(analyze(single).strong == std::vector<std::vector<size_t>>{{0}});

    CHECK(analyze(two_cycle()).strong == std::vector<std::vector<size_t>>{{0, 1}});
    CHECK(analyze(one_arrow()).strong == std::vector<std::vector<size_t>>{{0}, {1}});
}

TEST_CASE("weak components") {
    Quiver q = one_arrow();
    q.add_vertex("3");
    CHECK(analyze(q).weak == std::vector<std::vector<size_t>>{{0, 1}, {2}});

    Quiver bare;
    bare.add_vertex("1");
    bare.add_vertex("2");
    CHECK(analyze(bare).weak == std::vector<std::vector<size_t>>{{0}, {1}});

    CHECK(analyze(chain3()).weak == std::vector<std::vector<size_t>>{{0, 1, 2}});
}

TEST_CASE("unilateral components") {
    CHECK(analyze(one_arrow()).unilateral == std::vector<std::vector<size_t>>{{0, 1}});
    CHECK(analyze(two_cycle()).unilateral == std::vector<std::vector<size_t>>{{0, 1}});

    Quiver fork;
    fork.add_vertex("1");
    fork.add_vertex("2");
    fork.add_vertex("3");
    fork.add_arrow("x", "1", "2");
    fork.add_arrow("y", "3", "2");
    CHECK(analyze(fork).unilateral == std::vector<std::vector<size_t>>{{0, 1}, {1, 2}});
}

TEST_CASE("unilateral enumeration cap") {
    // three layers of two vertices, all arrows between consecutive layers:
    // 2^3 = 8 maximal chains
    Quiver q;
    for (int i = 0; i < 6; ++i) q.add_vertex("v" + std::to_string(i));
    int arrow = 0;
    for (int layer = 0; layer + 2 < 6; layer += 2)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                q.add_arrow("a" + std::to_string(arrow++), "v" + std::to_string(layer + a),
                            "v" + std::to_string(layer + 2 + b));
    Connectivity full = analyze(q);
    CHECK(full.unilateral.size() == 8);
    CHECK_FALSE(full.unilateral_truncated);
    Connectivity capped = analyze(q, 5);
    CHECK(capped.unilateral.size() == 5);
    CHECK(capped.unilateral_truncated);
}

TEST_CASE("reachability") {
    Connectivity c = analyze(one_arrow());
    CHECK(c.reachable(0, 1));
    CHECK_FALSE(c.reachable(1, 0));
    CHECK(c.reachable(0, 0));
    CHECK(c.reachable(1, 1));
    CHECK_FALSE(c.reach1[0][0]);

    CHECK(analyze(chain3()).reachable(0, 2));
}

TEST_CASE("regular pairs") {
    using Pairs = std::vector<std::pair<size_t, size_t>>;
    CHECK(analyze(one_arrow()).regular_pairs() == Pairs{{0, 1}});
    CHECK(analyze(two_cycle()).regular_pairs().empty());
    CHECK(analyze(chain3()).regular_pairs() == Pairs{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("cycle facts") {
    Connectivity acyc = analyze(chain3());
    CHECK_FALSE(acyc.has_cycle);

    Connectivity cyc = analyze(two_cycle());
    CHECK(cyc.has_cycle);
    CHECK(cyc.same_cycle(0, 1));
    CHECK_FALSE(cyc.same_cycle(0, 0));

    Quiver loop;
    loop.add_vertex("v");
    loop.add_vertex("w");
    loop.add_arrow("l", "v", "v");
    Connectivity lc = analyze(loop);
    CHECK(lc.has_cycle);
    CHECK_FALSE(lc.same_cycle(0, 1));
}

TEST_CASE("isolated vertices exclude loop carriers") {
    Quiver q;
    q.add_vertex("bare");
    q.add_vertex("looped");
    q.add_vertex("tail");
    q.add_vertex("head");
    q.add_arrow("l", "looped", "looped");
    q.add_arrow("x", "tail", "head");
    CHECK(analyze(q).isolated == std::vector<size_t>{0});
}

TEST_CASE("structure properties on random digraphs") {
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 60; ++trial) {
        Quiver q = random_quiver(gen);
        Connectivity c = analyze(q);
        size_t n = q.vertex_count();

        CHECK(c.reach1 == closure_oracle(q));

        // strong refines weak
        auto class_of = [&](const std::vector<std::vector<size_t>>& parts, size_t v) {
            for (size_t i = 0; i < parts.size(); ++i)
                for (size_t u : parts[i])
                    if (u == v) return i;
            return SIZE_MAX;
        };
        for (const auto& cls : c.strong) {
            size_t w = class_of(c.weak, cls[0]);
            for (size_t v : cls) CHECK(class_of(c.weak, v) == w);
        }

        // each strong class lies inside some unilateral set, each unilateral
        // set inside one weak class, and each unilateral set is a union of
        // strong classes
        for (const auto& uni : c.unilateral) {
            std::set<size_t> members(uni.begin(), uni.end());
            size_t w = class_of(c.weak, uni[0]);
            for (size_t v : uni) {
                CHECK(class_of(c.weak, v) == w);
                for (size_t u : c.strong[c.strong_class[v]]) CHECK(members.count(u) == 1);
            }
        }
        for (const auto& cls : c.strong) {
            bool inside_some = false;
            for (const auto& uni : c.unilateral) {
                std::set<size_t> members(uni.begin(), uni.end());
                bool all = true;
                for (size_t v : cls) all = all && members.count(v);
                inside_some = inside_some || all;
            }
            CHECK(inside_some);
        }

        // every arrow lies inside at least one unilateral set
        for (const auto& a : q.arrows()) {
            bool covered = false;
            for (const auto& uni : c.unilateral) {
                std::set<size_t> members(uni.begin(), uni.end());
                if (members.count(a.src) && members.count(a.dst)) covered = true;
            }
            CHECK(covered);
        }

        // unilateral sets: pairwise comparable, maximal, pairwise distinct
        for (const auto& uni : c.unilateral) {
            for (size_t u : uni)
                for (size_t v : uni) CHECK(comparable(c, u, v));
            std::set<size_t> members(uni.begin(), uni.end());
            for (size_t v = 0; v < n; ++v) {
                if (members.count(v)) continue;
                bool extends = true;
                for (size_t u : uni) extends = extends && comparable(c, u, v);
                CHECK_FALSE(extends);
            }
        }
        std::set<std::vector<size_t>> uniq(c.unilateral.begin(), c.unilateral.end());
        CHECK(uniq.size() == c.unilateral.size());

        // no regular pairs <=> weak classes are strong classes <=> the
        // unilateral sets are exactly the strong classes, computed three ways
        bool no_regular = c.regular_pairs().empty();
        bool weak_eq_strong = c.weak == c.strong;
        std::set<std::vector<size_t>> strong_sets(c.strong.begin(), c.strong.end());
        bool uni_eq_strong = uniq == strong_sets;
        CHECK(no_regular == weak_eq_strong);
        CHECK(no_regular == uni_eq_strong);
    }
}
