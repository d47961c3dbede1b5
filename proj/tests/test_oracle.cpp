#include <doctest.h>

#include <algorithm>

#include "qforms/oracle.hpp"

using namespace qforms;
using oracle::SearchBounds;

TEST_CASE("search_unit_vectors") {
    SUBCASE("I2 finds the 3-4-5 point") {
        const auto units =
            oracle::search_unit_vectors(QForm::identity(2), {5, 5, 100000});
        const Vec pyth{Rational(3, 5), Rational(4, 5)};
        CHECK(std::find(units.begin(), units.end(), pyth) != units.end());
        for (const Vec& u : units) CHECK(QForm::identity(2).evaluate(u) == 1);
    }
    SUBCASE("empty graphs have no unit vectors") {
        const QForm q = QForm::diagonal({Rational(2), Rational(3)});
        CHECK(oracle::search_unit_vectors(q, {6, 12, 100000}).empty());
    }
    SUBCASE("S2 integer points") {
        const auto units = oracle::search_unit_vectors(simplex_form(2), {1, 1, 100});
        CHECK(units.size() == 6);
        for (const Vec& v : std::vector<Vec>{{Rational(1), Rational(0)},
                                             {Rational(0), Rational(1)},
                                             {Rational(1), Rational(-1)}})
            CHECK(std::find(units.begin(), units.end(), v) != units.end());
    }
    SUBCASE("dim >= 4 forms have unit vectors at moderate bounds") {
        for (const QForm& q :
             {QForm::identity(4), QForm::diagonal({Rational(2), Rational(3),
                                                   Rational(3), Rational(1)}),
              simplex_form(4)}) {
            CHECK_FALSE(oracle::search_unit_vectors(q, {6, 6, 10}).empty());
        }
    }
    SUBCASE("max_candidates caps the output") {
        CHECK(oracle::search_unit_vectors(QForm::identity(2), {5, 5, 2}).size() == 2);
    }
}

TEST_CASE("search_clique") {
    SUBCASE("S2 has the standard 3-clique") {
        const auto ps = oracle::search_clique(simplex_form(2), 3, {1, 1, 100});
        REQUIRE(ps.has_value());
        const auto rep = verify_distances(*ps, simplex_form(2));
        for (std::size_t i = 0; i < ps->points.size(); ++i)
            for (std::size_t j = i + 1; j < ps->points.size(); ++j)
                CHECK(*rep.side_lengths[i][j] == 1);
        // the origin + basis clique itself verifies
        PointSet basis;
        basis.dim = 2;
        basis.points = {{Rational(0), Rational(0)},
                        {Rational(1), Rational(0)},
                        {Rational(0), Rational(1)}};
        const auto brep = verify_distances(basis, simplex_form(2));
        CHECK(brep.all_rational);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                CHECK(*brep.side_lengths[i][j] == 1);
    }
    SUBCASE("I2 has no 3-clique at bounds 25") {
        CHECK_FALSE(
            oracle::search_clique(QForm::identity(2), 3, {25, 25, 100000}));
    }
    SUBCASE("I4 has a 4-clique at denominator 2") {
        const auto ps = oracle::search_clique(QForm::identity(4), 4, {2, 2, 100000});
        REQUIRE(ps.has_value());
        CHECK(ps->points.size() == 4);
        const auto rep = verify_distances(*ps, QForm::identity(4));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                CHECK(*rep.side_lengths[i][j] == 1);
    }
}

TEST_CASE("brute_hilbert pinned values") {
    CHECK(oracle::brute_hilbert(Rational(3), Rational(2), Place::at(3)) == -1);
    CHECK(oracle::brute_hilbert(Rational(-1), Rational(-1), Place::infinity()) == -1);
    CHECK(oracle::brute_hilbert(Rational(2), Rational(2), Place::at(2)) == 1);
    CHECK(oracle::brute_hilbert(Rational(1, 3), Rational(3), Place::at(3)) ==
          oracle::brute_hilbert(Rational(3), Rational(3), Place::at(3)));
}

TEST_CASE("exact_rank") {
    CHECK(oracle::exact_rank({{Rational(1), Rational(0)},
                              {Rational(0), Rational(1)},
                              {Rational(1), Rational(1)}}) == 2);
    CHECK(oracle::exact_rank({}) == 0);
    CHECK(oracle::exact_rank({{Rational(1, 3), Rational(2, 7)}}) == 1);
    CHECK(oracle::exact_rank({Vec(3, 0)}) == 0);

    const PointSet ps = beckman_quarles_simplex(6);
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < ps.points.size(); ++i)
        diffs.push_back(detail::sub(ps.points[i], ps.points[0]));
    CHECK(oracle::exact_rank(diffs) == 5);
}
