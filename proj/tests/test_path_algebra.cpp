#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gpa/path_algebra.hpp"

#include <random>

using namespace gpa;

namespace {

Quiver chain3() {
    Quiver q;
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_vertex("3");
    q.add_arrow("a", "1", "2");
    q.add_arrow("b", "2", "3");
    return q;
}

Quiver two_cycle() {
    Quiver q;
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_arrow("a", "1", "2");
    q.add_arrow("b", "2", "1");
    return q;
}

Quiver loop1() {
    Quiver q;
    q.add_vertex("v");
    q.add_arrow("x", "v", "v");
    return q;
}

GeneralizedPath plain_path(const Quiver& q, std::vector<size_t> arrow_idx) {
    GeneralizedPath p;
    p.verts.push_back(q.arrows()[arrow_idx.front()].src);
    for (size_t ai : arrow_idx) {
        p.arrows.push_back(ai);
        p.verts.push_back(q.arrows()[ai].dst);
    }
    p.slots.assign(p.verts.size(), 0);
    return p;
}

Quiver random_quiver(std::mt19937_64& gen) {
    Quiver q;
    size_t nv = 1 + gen() % 6;
    for (size_t v = 0; v < nv; ++v) q.add_vertex("v" + std::to_string(v));
    size_t na = gen() % 10;
    for (size_t k = 0; k < na; ++k)
        q.add_arrow("a" + std::to_string(k), "v" + std::to_string(gen() % nv),
                    "v" + std::to_string(gen() % nv));
    return q;
}

FinDimAlgebra dual_numbers() {
    // k[x]/(x^2), basis u, x
    std::vector<std::vector<SVec>> t(2, std::vector<SVec>(2));
    t[0][0] = {{0, Cyclotomic(1)}};
    t[0][1] = {{1, Cyclotomic(1)}};
    t[1][0] = {{1, Cyclotomic(1)}};
    Vec unit{Cyclotomic(1), Cyclotomic(0)};
    return FinDimAlgebra({"u", "x"}, std::move(t), std::move(unit));
}

}  // namespace

TEST_CASE("products concatenate composable paths and kill the rest") {
    PathAlgebra A = PathAlgebra::plain(chain3());
    PathElement a = PathElement::arrow(A, 0);
    PathElement b = PathElement::arrow(A, 1);

    PathElement ab = a * b;
    REQUIRE(ab.terms().size() == 1);
    CHECK(ab.terms().begin()->first.verts == std::vector<size_t>{0, 1, 2});
    CHECK(ab.terms().begin()->first.length() == 2);

    CHECK((b * a).is_zero());  // endpoints do not meet
    CHECK((a * a).is_zero());

    // vertex idempotents act as one-sided units on matching endpoints
    CHECK(PathElement::vertex(A, 0) * a == a);
    CHECK(a * PathElement::vertex(A, 1) == a);
    CHECK((a * PathElement::vertex(A, 0)).is_zero());
    PathElement e_sum = PathElement::vertex(A, 0) + PathElement::vertex(A, 1) +
                        PathElement::vertex(A, 2);
    CHECK(e_sum * ab == ab);
    CHECK(ab * e_sum == ab);

    // distinct ambients refuse to multiply even over the same quiver
    PathAlgebra B = PathAlgebra::plain(chain3());
    CHECK_THROWS_AS(a * PathElement::arrow(B, 1), std::invalid_argument);
}

TEST_CASE("junction slots multiply inside the vertex coefficient algebra") {
    // 1 --x--> 2 --y--> 3 with Omega_22 = kZ_2
    std::vector<FinDimAlgebra> omegas;
    omegas.push_back(FinDimAlgebra::cyclic_group_algebra(1));
    omegas.push_back(FinDimAlgebra::cyclic_group_algebra(2));
    omegas.push_back(FinDimAlgebra::cyclic_group_algebra(1));
    Quiver q;
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_vertex("3");
    q.add_arrow("x", "1", "2");
    q.add_arrow("y", "2", "3");
    PathAlgebra A = PathAlgebra::with_omega(std::move(q), std::move(omegas));
    CHECK_FALSE(A.is_plain());
    CHECK(A.semisimple_omegas() == std::vector<bool>{true, true, true});

    PathElement X = PathElement::arrow(A, 0);
    PathElement Y = PathElement::arrow(A, 1);
    PathElement G = PathElement::single(A, GeneralizedPath{{1}, {}, {1}});  // e(2)[g1]

    // g1 * g1 = g0 = unit, so the two middle slots cancel
    CHECK(G * G == PathElement::vertex(A, 1));
    CHECK((X * G) * (G * Y) == X * Y);

    PathElement XG = X * G;
    REQUIRE(XG.terms().size() == 1);
    CHECK(XG.terms().begin()->first.slots == std::vector<size_t>{0, 1});

    // associativity on a sampling of sums
    PathElement u = X + G.scaled(Cyclotomic(2));
    PathElement v = Y - PathElement::vertex(A, 1);
    PathElement w = X * Y + G;
    CHECK((u * v) * w == u * (v * w));
}

TEST_CASE("coefficient algebras must be unital and are probed for semisimplicity") {
    Quiver q;
    q.add_vertex("v");
    std::vector<FinDimAlgebra> bad;
    std::vector<std::vector<SVec>> t(1, std::vector<SVec>(1));
    bad.emplace_back(std::vector<std::string>{"n"}, std::move(t), std::nullopt);
    CHECK_THROWS_WITH_AS(PathAlgebra::with_omega(q, std::move(bad)),
                         doctest::Contains("unit"), std::invalid_argument);

    std::vector<FinDimAlgebra> mismatch;
    CHECK_THROWS_AS(PathAlgebra::with_omega(q, std::move(mismatch)), std::invalid_argument);

    std::vector<FinDimAlgebra> dual;
    dual.push_back(dual_numbers());
    PathAlgebra A = PathAlgebra::with_omega(q, std::move(dual));
    CHECK(A.semisimple_omegas() == std::vector<bool>{false});
}

TEST_CASE("element literals parse and round-trip") {
    PathAlgebra A = PathAlgebra::plain(chain3());
    PathElement a = PathElement::arrow(A, 0);
    PathElement b = PathElement::arrow(A, 1);

    CHECK(parse_element(A, "a.b") == a * b);
    CHECK(parse_element(A, "e(1)") == PathElement::vertex(A, 0));
    CHECK(parse_element(A, "2*a + b") == a.scaled(Cyclotomic(2)) + b);
    CHECK(parse_element(A, "1/2*a.b - e(3)") ==
          (a * b).scaled(Cyclotomic(Rational(1, 2))) - PathElement::vertex(A, 2));
    CHECK(parse_element(A, "-a") == -a);
    CHECK(parse_element(A, "a - a").is_zero());
    CHECK(parse_element(A, "(1+z4)*a") == a.scaled(Cyclotomic(1) + Cyclotomic::zeta(4)));

    CHECK_THROWS_WITH_AS(parse_element(A, "c"), doctest::Contains("unknown arrow"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_element(A, "e(9)"), doctest::Contains("unknown vertex"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_element(A, "a b"), doctest::Contains("trailing"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_element(A, ""), std::invalid_argument);

    // printing round-trips through the parser
    for (const PathElement& e :
         {a * b - b, PathElement::vertex(A, 0) + a.scaled(Cyclotomic(Rational(2, 3))),
          (a * b).scaled(-Cyclotomic::zeta(3))}) {
        CHECK(parse_element(A, e.str()) == e);
    }
    CHECK(PathElement(&A).str() == "0");
    CHECK((a * b).str() == "a.b");
}

TEST_CASE("element literals carry slot annotations in generalized algebras") {
    std::vector<FinDimAlgebra> omegas;
    omegas.push_back(FinDimAlgebra::cyclic_group_algebra(2));
    Quiver q = loop1();
    PathAlgebra A = PathAlgebra::with_omega(std::move(q), std::move(omegas));

    PathElement g = parse_element(A, "e(v)[g1]");
    REQUIRE(g.terms().size() == 1);
    CHECK(g.terms().begin()->first.slots == std::vector<size_t>{1});
    CHECK(g * g == PathElement::vertex(A, 0));

    PathElement xg = parse_element(A, "x[g1]");
    CHECK(xg == PathElement::arrow(A, 0) * g);

    PathElement mixed = parse_element(A, "e(v)[g1].x[g1]");
    REQUIRE(mixed.terms().size() == 1);
    CHECK(mixed.terms().begin()->first.slots == std::vector<size_t>{1, 1});

    CHECK_THROWS_WITH_AS(parse_element(A, "e(v)[g7]"), doctest::Contains("g7"),
                         std::invalid_argument);

    // round-trip including slot annotations
    for (const PathElement& e : {xg - g.scaled(Cyclotomic(3)), mixed + xg}) {
        CHECK(parse_element(A, e.str()) == e);
    }
}

TEST_CASE("path enumeration is ordered and guarded") {
    PathAlgebra A = PathAlgebra::plain(two_cycle());
    std::vector<GeneralizedPath> all = enumerate_paths(A, 3, 100);
    CHECK(all.size() == 8);  // 2 vertices, 2 len-1, 2 len-2, 2 len-3
    for (size_t k = 1; k < all.size(); ++k) {
        CHECK_FALSE(A.path_order(all[k], all[k - 1]));  // weakly increasing
        CHECK(all[k - 1].length() <= all[k].length());
    }
    CHECK_THROWS_AS(enumerate_paths(A, 10, 5), std::length_error);

    // ties at the same endpoints break on arrow names, not insertion order
    Quiver par;
    par.add_vertex("1");
    par.add_vertex("2");
    par.add_arrow("z", "1", "2");
    par.add_arrow("a", "1", "2");
    PathAlgebra P = PathAlgebra::plain(std::move(par));
    std::vector<GeneralizedPath> lv = enumerate_paths(P, 1, 100);
    REQUIRE(lv.size() == 4);
    CHECK(P.quiver().arrows()[lv[2].arrows[0]].name == "a");
    CHECK(P.quiver().arrows()[lv[3].arrows[0]].name == "z");
}

TEST_CASE("radical description lists exactly the regular pairs") {
    PathAlgebra one = PathAlgebra::plain([] {
        Quiver q;
        q.add_vertex("1");
        q.add_vertex("2");
        q.add_arrow("a", "1", "2");
        return q;
    }());
    for (RadicalKind k :
         {RadicalKind::baer, RadicalKind::levitzki, RadicalKind::nil, RadicalKind::jacobson}) {
        RadicalDescription d = radical_description(one, k);
        CHECK(d.kind == k);
        CHECK(d.pairs == std::vector<std::pair<size_t, size_t>>{{0, 1}});
        CHECK_FALSE(d.zero());
    }
    CHECK_THROWS_AS(radical_description(one, RadicalKind::vn), std::invalid_argument);

    PathAlgebra cyc = PathAlgebra::plain(two_cycle());
    CHECK(radical_description(cyc, RadicalKind::jacobson).zero());

    PathAlgebra ch = PathAlgebra::plain(chain3());
    RadicalDescription d = radical_description(ch, RadicalKind::jacobson);
    CHECK(d.pairs ==
          std::vector<std::pair<size_t, size_t>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(d.pair_regular(0, 2));
    CHECK_FALSE(d.pair_regular(2, 0));
    CHECK_FALSE(d.pair_regular(1, 1));

    PathElement a = PathElement::arrow(ch, 0);
    PathElement b = PathElement::arrow(ch, 1);
    CHECK(d.member(a + (a * b).scaled(Cyclotomic(5))));
    CHECK_FALSE(d.member(a + PathElement::vertex(ch, 0)));
    CHECK(d.member(PathElement(&ch)));  // zero element belongs vacuously
}

TEST_CASE("vn radical description collects the isolated vertices") {
    Quiver q;
    q.add_vertex("1");
    q.add_vertex("iso");
    q.add_vertex("2");
    q.add_vertex("looped");
    q.add_arrow("a", "1", "2");
    q.add_arrow("l", "looped", "looped");
    PathAlgebra A = PathAlgebra::plain(std::move(q));
    CHECK(vn_radical_description(A) == std::vector<size_t>{1});

    CHECK(vn_radical_description(PathAlgebra::plain(two_cycle())).empty());
}

TEST_CASE("primeness follows strong connectivity") {
    CHECK(is_prime_path_algebra(PathAlgebra::plain(two_cycle())));
    CHECK(is_prime_path_algebra(PathAlgebra::plain(loop1())));
    CHECK_FALSE(is_prime_path_algebra(PathAlgebra::plain(chain3())));
    Quiver single;
    single.add_vertex("v");
    CHECK(is_prime_path_algebra(PathAlgebra::plain(std::move(single))));
}

TEST_CASE("block radical rules") {
    PathAlgebra ch = PathAlgebra::plain(chain3());
    CHECK(gamma_block_radical(ch, 0, 1, RadicalKind::jacobson) == BlockRadical::full);
    CHECK(gamma_block_radical(ch, 0, 0, RadicalKind::jacobson) == BlockRadical::zero);
    CHECK(gamma_block_radical(ch, 1, 1, RadicalKind::nil) == BlockRadical::zero);
    CHECK_THROWS_WITH_AS(gamma_block_radical(ch, 1, 0, RadicalKind::jacobson),
                         doctest::Contains("A_st"), std::invalid_argument);
    CHECK(gamma_block_radical(ch, 0, 1, RadicalKind::vn) == BlockRadical::zero);
    CHECK_THROWS_AS(gamma_block_radical(ch, 1, 1, RadicalKind::vn), std::invalid_argument);
    CHECK_THROWS_AS(gamma_block_radical(ch, 5, 0, RadicalKind::jacobson),
                    std::invalid_argument);

    PathAlgebra cyc = PathAlgebra::plain(two_cycle());
    CHECK(gamma_block_radical(cyc, 0, 1, RadicalKind::jacobson) == BlockRadical::zero);
    CHECK(gamma_block_radical(cyc, 1, 0, RadicalKind::levitzki) == BlockRadical::zero);
}

TEST_CASE("the eleven equivalent conditions agree on fixed quivers") {
    auto report_of = [](Quiver q) {
        return equivalence_report(PathAlgebra::plain(std::move(q)));
    };

    {
        Quiver q;  // two disjoint 2-cycles: all conditions hold
        for (const char* v : {"1", "2", "3", "4"}) q.add_vertex(v);
        q.add_arrow("a", "1", "2");
        q.add_arrow("b", "2", "1");
        q.add_arrow("c", "3", "4");
        q.add_arrow("d", "4", "3");
        EquivalenceReport r = report_of(std::move(q));
        CHECK(r.all_agree());
        CHECK(r.value());
        CHECK(r.direct_sum_of_primes);
    }
    {
        Quiver q;  // a single crossing arrow: all conditions fail
        q.add_vertex("1");
        q.add_vertex("2");
        q.add_arrow("a", "1", "2");
        EquivalenceReport r = report_of(std::move(q));
        CHECK(r.all_agree());
        CHECK_FALSE(r.value());
        for (const auto& [name, val] : r.entries()) {
            CAPTURE(name);
            CHECK_FALSE(val);
        }
    }
    {
        Quiver q;  // 3-cycle with a chord stays strongly connected
        for (const char* v : {"1", "2", "3"}) q.add_vertex(v);
        q.add_arrow("a", "1", "2");
        q.add_arrow("b", "2", "3");
        q.add_arrow("c", "3", "1");
        q.add_arrow("d", "1", "3");
        EquivalenceReport r = report_of(std::move(q));
        CHECK(r.all_agree());
        CHECK(r.value());
    }
    {
        Quiver q;  // isolated vertex next to a 2-cycle: still fine
        q = two_cycle();
        q.add_vertex("iso");
        EquivalenceReport r = report_of(std::move(q));
        CHECK(r.all_agree());
        CHECK(r.value());
    }
    {
        EquivalenceReport r = report_of(Quiver{});  // empty quiver, vacuously true
        CHECK(r.all_agree());
        CHECK(r.value());
    }
    CHECK(EquivalenceReport{}.entries().size() == 11);
}

TEST_CASE("the eleven conditions agree on random digraphs") {
    std::mt19937_64 gen(1234);
    for (int trial = 0; trial < 60; ++trial) {
        Quiver q = random_quiver(gen);
        PathAlgebra A = PathAlgebra::plain(std::move(q));
        EquivalenceReport r = equivalence_report(A);
        CAPTURE(A.quiver().to_file());
        CHECK(r.all_agree());
        CHECK(r.value() == A.connectivity().regular_pairs().empty());
    }
}

TEST_CASE("materializing an acyclic quiver yields the exact path algebra") {
    PathAlgebra A = PathAlgebra::plain(chain3());
    Materialization m = materialize(A);
    CHECK(m.algebra.dim() == 6);
    CHECK(m.basis.size() == 6);
    m.algebra.verify();

    // names track the path literals
    for (size_t i = 0; i < m.basis.size(); ++i)
        CHECK(m.algebra.basis_names()[i] == path_str(A, m.basis[i]));

    // the described radical equals the trace-form oracle's radical
    RadicalDescription d = radical_description(A, RadicalKind::jacobson);
    Subspace described(m.algebra.dim());
    for (size_t i = 0; i < m.basis.size(); ++i)
        if (d.pair_regular(m.basis[i].source(), m.basis[i].target())) {
            Vec e(m.algebra.dim());
            e[i] = Cyclotomic(1);
            described.add(std::move(e));
        }
    CHECK(described.dim() == 3);
    CHECK(jacobson_radical(m.algebra) == described);
    CHECK(largest_nilpotent_check(m.algebra, described).nilpotent);

    // every regular-pair path is annihilated on both sides by itself
    for (size_t i = 0; i < m.basis.size(); ++i) {
        if (!d.pair_regular(m.basis[i].source(), m.basis[i].target())) continue;
        PathElement p = PathElement::single(A, m.basis[i]);
        for (size_t j = 0; j < m.basis.size(); ++j) {
            PathElement w = PathElement::single(A, m.basis[j]);
            CHECK((p * w * p).is_zero());
        }
    }

    CHECK_FALSE(prime_bruteforce(m.algebra));
    CHECK_FALSE(semiprime_bruteforce(m.algebra));
}

TEST_CASE("materialization grades products by length") {
    PathAlgebra A = PathAlgebra::plain(chain3());
    PathElement a = PathElement::arrow(A, 0);
    PathElement b = PathElement::arrow(A, 1);
    PathElement mix = a + b;
    PathElement sq = mix * mix;  // only the length-2 component survives
    CHECK(sq == a * b);
    CHECK(sq.min_length() == sq.max_length());
    CHECK(*sq.min_length() == 2);
    CHECK(mix.length_component(1) == mix);
    CHECK(mix.component(0, 1) == a);
    CHECK(mix.component(1, 2) == b);
    CHECK(mix.component(0, 2).is_zero());
}

TEST_CASE("capping at J^L truncates any quiver") {
    PathAlgebra A = PathAlgebra::plain(loop1());
    Materialization m = materialize(A, nullptr, 3);
    CHECK(m.algebra.dim() == 3);  // e, x, x^2
    m.algebra.verify();
    Subspace rad = jacobson_radical(m.algebra);
    CHECK(rad.dim() == 2);
    Vec x(m.algebra.dim());
    x[m.index.at(plain_path(A.quiver(), {0}))] = Cyclotomic(1);
    CHECK(rad.contains(x));
    CHECK_FALSE(semiprime_bruteforce(m.algebra));

    PathAlgebra C = PathAlgebra::plain(two_cycle());
    Materialization mc = materialize(C, nullptr, 2);
    CHECK(mc.algebra.dim() == 4);
    mc.algebra.verify();
    // the truncation is not the full path algebra: its radical is the
    // whole arrow span although the quiver has no regular pair
    CHECK(jacobson_radical(mc.algebra).dim() == 2);

    CHECK_THROWS_AS(materialize(A, nullptr, 0), std::invalid_argument);
    CHECK_THROWS_AS(materialize(A, nullptr, 10, 5), std::length_error);
}

TEST_CASE("an uncapped cyclic quiver needs relations with a truncation") {
    PathAlgebra A = PathAlgebra::plain(loop1());
    CHECK_THROWS_WITH_AS(materialize(A), doctest::Contains("infinitely many"),
                         std::invalid_argument);

    PathElement x = PathElement::arrow(A, 0);
    RelationSet no_trunc;
    no_trunc.generators.push_back(x * x);
    CHECK_THROWS_WITH_AS(materialize(A, &no_trunc), doctest::Contains("truncation"),
                         std::invalid_argument);

    RelationSet mixed;
    mixed.generators.push_back(x * x + x * x * x);
    mixed.truncation = 3;
    CHECK_THROWS_WITH_AS(materialize(A, &mixed), doctest::Contains("mixes path lengths"),
                         std::invalid_argument);

    RelationSet weakless;
    weakless.generators.push_back(x);
    weakless.truncation = 2;
    CHECK_THROWS_WITH_AS(materialize(A, &weakless), doctest::Contains("window"),
                         std::invalid_argument);

    // x^3 alone cannot swallow the length-2 paths of a declared t = 2
    RelationSet thin;
    thin.generators.push_back(x * x * x);
    thin.truncation = 2;
    CHECK_THROWS_WITH_AS(materialize(A, &thin), doctest::Contains("stays independent"),
                         std::invalid_argument);
}

TEST_CASE("homogeneous relations on a cyclic quiver materialize after the window check") {
    PathAlgebra A = PathAlgebra::plain(loop1());
    PathElement x = PathElement::arrow(A, 0);

    RelationSet sq;
    sq.generators.push_back(x * x);
    sq.truncation = 2;
    Materialization m = materialize(A, &sq);
    CHECK(m.algebra.dim() == 2);  // k[x]/(x^2)
    m.algebra.verify();
    CHECK(jacobson_radical(m.algebra).dim() == 1);

    RelationSet cube;
    cube.generators.push_back(x * x * x);
    cube.truncation = 3;
    Materialization m3 = materialize(A, &cube);
    CHECK(m3.algebra.dim() == 3);
    CHECK(jacobson_radical(m3.algebra).dim() == 2);

    // declared truncation above the generator degree also passes the
    // window check because x^2 generates everything longer
    RelationSet wide;
    wide.generators.push_back(x * x);
    wide.truncation = 3;
    Materialization mw = materialize(A, &wide);
    CHECK(mw.algebra.dim() == 2);
}

TEST_CASE("relations on an acyclic quiver quotient the exact algebra") {
    PathAlgebra A = PathAlgebra::plain(chain3());
    PathElement ab = PathElement::arrow(A, 0) * PathElement::arrow(A, 1);

    RelationSet rho;
    rho.generators.push_back(ab);
    Materialization m = materialize(A, &rho);
    CHECK(m.algebra.dim() == 5);
    m.algebra.verify();
    CHECK(jacobson_radical(m.algebra).dim() == 2);

    // the killed path is no longer a normal form
    CHECK_FALSE(m.coords(ab).has_value());
    CHECK(m.coords(PathElement::arrow(A, 0)).has_value());

    // length-1 generators only pass with the weak flag
    RelationSet short_gen;
    short_gen.generators.push_back(PathElement::arrow(A, 0));
    CHECK_THROWS_WITH_AS(materialize(A, &short_gen), doctest::Contains("window"),
                         std::invalid_argument);
    short_gen.weak = true;
    Materialization mw = materialize(A, &short_gen);
    CHECK(mw.algebra.dim() == 4);  // a and ab both die

    RelationSet zero_gen;
    zero_gen.generators.push_back(PathElement(&A));
    CHECK_THROWS_WITH_AS(materialize(A, &zero_gen), doctest::Contains("zero relation"),
                         std::invalid_argument);

    PathAlgebra B = PathAlgebra::plain(chain3());
    RelationSet foreign;
    foreign.generators.push_back(PathElement::arrow(B, 0));
    CHECK_THROWS_WITH_AS(materialize(A, &foreign), doctest::Contains("ambient"),
                         std::invalid_argument);
}

TEST_CASE("materializing a vertex coefficient algebra reproduces it") {
    Quiver q;
    q.add_vertex("v");
    std::vector<FinDimAlgebra> omegas;
    omegas.push_back(FinDimAlgebra::matrix_algebra(2));
    PathAlgebra A = PathAlgebra::with_omega(std::move(q), std::move(omegas));
    Materialization m = materialize(A);
    CHECK(m.algebra.dim() == 4);
    m.algebra.verify();
    CHECK(jacobson_radical(m.algebra).dim() == 0);
    CHECK(prime_bruteforce(m.algebra));
}

TEST_CASE("a group-graded loop truncation has the expected size and radical") {
    // one loop over Omega = kZ_2, relations: x.x (unit slots) and the
    // slot-commutation x[g0,g1] + x[g1,g0], truncated at length 2
    std::vector<FinDimAlgebra> omegas;
    omegas.push_back(FinDimAlgebra::cyclic_group_algebra(2));
    PathAlgebra A = PathAlgebra::with_omega(loop1(), std::move(omegas));

    PathElement X = PathElement::arrow(A, 0);
    RelationSet rho;
    rho.generators.push_back(X * X);
    rho.generators.push_back(PathElement::single(A, GeneralizedPath{{0, 0}, {0}, {0, 1}}) +
                             PathElement::single(A, GeneralizedPath{{0, 0}, {0}, {1, 0}}));
    rho.truncation = 2;
    rho.weak = true;

    Materialization m = materialize(A, &rho);
    CHECK(m.algebra.dim() == 4);
    m.algebra.verify();
    CHECK(m.algebra.has_unit());
    CHECK(jacobson_radical(m.algebra).dim() == 2);
    CHECK_FALSE(semiprime_bruteforce(m.algebra));
}

TEST_CASE("described radicals match the oracle on random acyclic quivers") {
    std::mt19937_64 gen(77);
    size_t done = 0;
    while (done < 12) {
        Quiver q = random_quiver(gen);
        PathAlgebra A = PathAlgebra::plain(std::move(q));
        if (A.connectivity().has_cycle) continue;
        Materialization m = materialize(A, nullptr, std::nullopt, 4000);
        if (m.algebra.dim() == 0) continue;
        RadicalDescription d = radical_description(A, RadicalKind::jacobson);
        Subspace described(m.algebra.dim());
        for (size_t i = 0; i < m.basis.size(); ++i)
            if (d.pair_regular(m.basis[i].source(), m.basis[i].target())) {
                Vec e(m.algebra.dim());
                e[i] = Cyclotomic(1);
                described.add(std::move(e));
            }
        CAPTURE(A.quiver().to_file());
        CHECK(jacobson_radical(m.algebra) == described);
        CHECK(semiprime_bruteforce(m.algebra, 200) == d.zero());
        CHECK(is_prime_path_algebra(A) == prime_bruteforce(m.algebra, 200));
        ++done;
    }
}
