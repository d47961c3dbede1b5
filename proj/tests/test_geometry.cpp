#include <doctest.h>

#include <random>

#include "qforms/geometry.hpp"
#include "qforms/oracle.hpp"

using namespace qforms;

namespace {

Matrix random_invertible(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-3, 3);
    while (true) {
        Matrix t(n, Vec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t[i][j] = Rational(dist(rng));
        if (determinant(t) != 0) return t;
    }
}

}  // namespace

TEST_CASE("rational_sqrt") {
    CHECK(*rational_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK(*rational_sqrt(Rational(0)) == 0);
    CHECK_FALSE(rational_sqrt(Rational(2)));
    CHECK_FALSE(rational_sqrt(Rational(-4)));
}

TEST_CASE("gram_from_points") {
    SUBCASE("standard basis under I_n") {
        PointSet ps;
        ps.dim = 3;
        for (int i = 0; i < 3; ++i) {
            Vec e(3, 0);
            e[i] = 1;
            ps.points.push_back(e);
        }
        CHECK(gram_from_points(ps, QForm::identity(3)) == identity_matrix(3));
    }
    SUBCASE("dependent vectors give a singular Gram matrix") {
        PointSet ps;
        ps.dim = 2;
        ps.points = {{Rational(1), Rational(0)},
                     {Rational(0), Rational(1)},
                     {Rational(1), Rational(1)}};
        const Matrix m = gram_from_points(ps, QForm::identity(2));
        CHECK(m == Matrix{{Rational(1), Rational(0), Rational(1)},
                          {Rational(0), Rational(1), Rational(1)},
                          {Rational(1), Rational(1), Rational(2)}});
        CHECK(determinant(m) == 0);
    }
    SUBCASE("independent vectors yield a form equivalent to q") {
        std::mt19937_64 rng(16);
        std::uniform_int_distribution<long> dist(1, 6);
        for (int trial = 0; trial < 500; ++trial) {
            const int n = 2 + trial % 4;
            Vec d(n);
            for (int i = 0; i < n; ++i) {
        d[i] = Rational(dist(rng), dist(rng));
        d[i].canonicalize();
    }
            const QForm q = QForm::diagonal(d);
            PointSet ps;
            ps.dim = n;
            const Matrix t = random_invertible(n, rng);
            for (int i = 0; i < n; ++i) {
                Vec v(n);
                for (int j = 0; j < n; ++j) v[j] = t[j][i];
                ps.points.push_back(v);
            }
            CHECK(equivalent(QForm(gram_from_points(ps, q)), q));
        }
    }
}

TEST_CASE("beckman_quarles_simplex shape") {
    const PointSet s2 = beckman_quarles_simplex(2);
    CHECK(s2.points == std::vector<Vec>{{Rational(1), Rational(1)},
                                        {Rational(1), Rational(-1)},
                                        {Rational(1), Rational(1, 15)}});
    const PointSet s3 = beckman_quarles_simplex(3);
    CHECK(s3.points ==
          std::vector<Vec>{{Rational(1), Rational(1), Rational(0)},
                           {Rational(1), Rational(-1), Rational(0)},
                           {Rational(1), Rational(1, 15), Rational(0)},
                           {Rational(0), Rational(0), Rational(7, 4)}});
    CHECK_THROWS_AS(beckman_quarles_simplex(1), std::domain_error);

    // pairwise I_2-distance of (1,1) and (1,1/15) is 14/15
    const auto rep = verify_distances(s2, QForm::identity(2));
    CHECK(*rep.side_lengths[0][2] == Rational(14, 15));
}

TEST_CASE("beckman_quarles_simplex has all-rational sides for n <= 12") {
    for (int n = 2; n <= 12; ++n) {
        CAPTURE(n);
        const PointSet ps = beckman_quarles_simplex(n);
        CHECK(static_cast<int>(ps.points.size()) == n + 1);
        const auto rep = verify_distances(ps, QForm::identity(n));
        CHECK(rep.all_rational);
        // The published point set is affinely dependent: (1, 1/15, 0, ...)
        // lies on the line through the first two points.
        CHECK_FALSE(rep.affinely_independent);
        CHECK(rep.rank == n - 1);
        // rank agrees with the independent fraction-free oracle
        std::vector<Vec> diffs;
        for (std::size_t i = 1; i < ps.points.size(); ++i)
            diffs.push_back(detail::sub(ps.points[i], ps.points[0]));
        CHECK(oracle::exact_rank(diffs) == rep.rank);
    }
}

TEST_CASE("rational_triangle") {
    const auto sides = [](int n) {
        const PointSet ps = rational_triangle(n);
        const QForm q = QForm::diagonal({Rational(1), Rational(n)});
        const auto rep = verify_distances(ps, q);
        return std::array<Rational, 3>{*rep.side_lengths[0][1],
                                       *rep.side_lengths[0][2],
                                       *rep.side_lengths[1][2]};
    };
    CHECK(sides(3) == std::array<Rational, 3>{4, 4, 4});
    CHECK(sides(2) == std::array<Rational, 3>{3, 3, 2});
    CHECK(QForm::diagonal({Rational(1), Rational(5)})
              .evaluate({Rational(4), Rational(2)}) == 36);
    for (int n = 2; n <= 50; ++n) {
        CAPTURE(n);
        CHECK(sides(n) ==
              std::array<Rational, 3>{n + 1, n + 1, 2 * n - 2});
    }
    CHECK_THROWS_AS(rational_triangle(1), std::domain_error);
}

TEST_CASE("verify_distances") {
    SUBCASE("triangle under x^2 + 4y^2") {
        const auto rep = verify_distances(
            rational_triangle(4), QForm::diagonal({Rational(1), Rational(4)}));
        CHECK(rep.all_rational);
        CHECK(rep.affinely_independent);
        CHECK(rep.rank == 2);
    }
    SUBCASE("standard basis plus origin under S_n is a unit clique") {
        for (int n : {2, 3, 5}) {
            PointSet ps;
            ps.dim = n;
            ps.points.push_back(Vec(n, 0));
            for (int i = 0; i < n; ++i) {
                Vec e(n, 0);
                e[i] = 1;
                ps.points.push_back(e);
            }
            const auto rep = verify_distances(ps, simplex_form(n));
            CHECK(rep.all_rational);
            CHECK(rep.affinely_independent);
            for (std::size_t i = 0; i < ps.points.size(); ++i)
                for (std::size_t j = 0; j < ps.points.size(); ++j)
                    CHECK(*rep.side_lengths[i][j] == (i == j ? 0 : 1));
        }
    }
}
