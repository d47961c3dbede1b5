// Command-line frontend for the qforms library: form invariants,
// equivalence and embedding tests, distance-graph reports, the explicit
// point constructions, brute-force oracles, and a selftest.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "qforms/qforms.hpp"

namespace {

using namespace qforms;

Place parse_place(const std::string& s) {
    if (s == "inf") return Place::infinity();
    if (!detail::is_integer_literal(s))
        throw std::invalid_argument("place must be 'inf' or a prime: '" + s + "'");
    return Place::at(Int(s));
}

void print_bool(bool b, bool json) {
    if (json)
        std::cout << nlohmann::json(b) << "\n";
    else
        std::cout << (b ? "true" : "false") << "\n";
}

void print_point_set(const PointSet& ps, const DistanceReport& rep, bool json) {
    if (json) {
        nlohmann::json j = to_json(ps);
        j["distances"] = to_json(rep);
        std::cout << j.dump() << "\n";
        return;
    }
    for (const Vec& p : ps.points) {
        std::cout << "(";
        for (std::size_t i = 0; i < p.size(); ++i)
            std::cout << (i ? ", " : "") << to_string(p[i]);
        std::cout << ")\n";
    }
    std::cout << "all sides rational: " << (rep.all_rational ? "true" : "false")
              << "\n";
    std::cout << "affinely independent: "
              << (rep.affinely_independent ? "true" : "false") << " (rank "
              << rep.rank << ")\n";
    std::cout << "side lengths:\n";
    for (const auto& row : rep.side_lengths) {
        for (std::size_t i = 0; i < row.size(); ++i)
            std::cout << (i ? " " : "  ") << (row[i] ? to_string(*row[i]) : "-");
        std::cout << "\n";
    }
}

int run_selftest() {
    int failures = 0;
    const auto report = [&](bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            std::cout << "FAIL: " << what << "\n";
        }
    };

    std::mt19937_64 rng(20240915);
    std::uniform_int_distribution<long> coef(1, 1000000);
    std::bernoulli_distribution flip(0.5);
    for (int i = 0; i < 200; ++i) {
        Rational a(coef(rng), coef(rng));
        Rational b(coef(rng), coef(rng));
        a.canonicalize();
        b.canonicalize();
        if (flip(rng)) a = -a;
        if (flip(rng)) b = -b;
        if (!product_formula_holds(a, b))
            report(false, "product formula at (" + to_string(a) + ", " +
                              to_string(b) + ")");
    }

    for (int k = 1; k <= 12; ++k) {
        const FormInvariants closed = s_k_invariants(k);
        const FormInvariants direct = invariants(simplex_form(k));
        if (closed != direct)
            report(false, "S_" + std::to_string(k) +
                              " closed-form invariants disagree: det " +
                              closed.det_class.get_str() + " vs " +
                              direct.det_class.get_str());
    }

    const long vals[] = {1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 10, -10, 30, -30};
    const std::vector<Place> places = {Place::infinity(), Place::at(2),
                                       Place::at(3), Place::at(5)};
    for (long a : vals)
        for (long b : vals)
            for (const Place& v : places) {
                const Rational ra(a), rb(b);
                if (hilbert(ra, rb, v) != oracle::brute_hilbert(ra, rb, v))
                    report(false, "hilbert(" + std::to_string(a) + ", " +
                                      std::to_string(b) + ")_" + v.str() +
                                      " disagrees with the brute-force oracle");
            }

    if (failures == 0) {
        std::cout << "all checks passed\n";
        return 0;
    }
    std::cout << failures << " check(s) failed\n";
    return 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for rational quadratic-form "
                 "distance graphs"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable JSON output");

    std::string form_a, form_b, place_s, rat_a, rat_b;
    int arg_n = 0, arg_size = 3;
    int max_n = 8, max_d = 8;
    long den = 1, height = 1, max_cand = 100000;

    auto* c_inv = app.add_subcommand("invariants", "complete form invariants");
    c_inv->add_option("form", form_a)->required();

    auto* c_eq = app.add_subcommand("equivalent", "rational equivalence");
    c_eq->add_option("form1", form_a)->required();
    c_eq->add_option("form2", form_b)->required();

    auto* c_emb = app.add_subcommand("embeds", "form embedding q1 into q2");
    c_emb->add_option("form1", form_a)->required();
    c_emb->add_option("form2", form_b)->required();

    auto* c_clique = app.add_subcommand("clique", "clique number of G(Q^n, q)");
    c_clique->add_option("form", form_a)->required();

    auto* c_ne = app.add_subcommand("nonempty", "does the graph have an edge");
    c_ne->add_option("form", form_a)->required();

    auto* c_conn = app.add_subcommand("connectivity", "connectivity class");
    c_conn->add_option("form", form_a)->required();

    auto* c_an = app.add_subcommand("analyze", "full graph report");
    c_an->add_option("form", form_a)->required();

    auto* c_hil = app.add_subcommand("hilbert", "Hilbert symbol (a, b)_v");
    c_hil->add_option("a", rat_a)->required();
    c_hil->add_option("b", rat_b)->required();
    c_hil->add_option("place", place_s, "'inf' or a prime")->required();

    auto* c_simp = app.add_subcommand("simplex", "rational-sides simplex in Q^n");
    c_simp->add_option("n", arg_n)->required();

    auto* c_tri = app.add_subcommand("triangle",
                                     "rational triangle for x^2 + n y^2");
    c_tri->add_option("n", arg_n)->required();

    auto* c_tab = app.add_subcommand("table",
                                     "clique numbers of G(Q^n, (1/d) I_n)");
    c_tab->add_option("--max-n", max_n);
    c_tab->add_option("--max-d", max_d);

    auto* c_oracle = app.add_subcommand("oracle", "brute-force searches");
    c_oracle->require_subcommand(1);
    auto* c_uv = c_oracle->add_subcommand("unit-vectors",
                                          "enumerate q(x) = 1 within bounds");
    c_uv->add_option("form", form_a)->required();
    c_uv->add_option("--den", den, "denominator bound L");
    c_uv->add_option("--height", height, "numerator height bound H");
    c_uv->add_option("--max", max_cand, "candidate cap");
    auto* c_cl = c_oracle->add_subcommand("clique", "search for a unit clique");
    c_cl->add_option("form", form_a)->required();
    c_cl->add_option("--size", arg_size, "clique size");
    c_cl->add_option("--den", den, "denominator bound L");
    c_cl->add_option("--height", height, "numerator height bound H");
    c_cl->add_option("--max", max_cand, "candidate cap");

    auto* c_self = app.add_subcommand("selftest", "internal consistency sweep");

    // allow --json after the subcommand name
    for (CLI::App* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*c_inv) {
            const FormInvariants inv = invariants(parse_form(form_a));
            if (json) {
                std::cout << to_json(inv).dump() << "\n";
            } else {
                std::cout << "dim: " << inv.dim << "\n";
                std::cout << "det_class: " << inv.det_class.get_str() << "\n";
                std::cout << "signature: (" << inv.signature.first << ", "
                          << inv.signature.second << ")\n";
                std::cout << "hasse:";
                for (const auto& [v, e] : inv.hasse)
                    std::cout << " " << v.str() << ":" << (e > 0 ? "+1" : "-1");
                std::cout << "\n";
            }
        } else if (*c_eq) {
            print_bool(equivalent(parse_form(form_a), parse_form(form_b)), json);
        } else if (*c_emb) {
            print_bool(embeds(parse_form(form_a), parse_form(form_b)), json);
        } else if (*c_clique) {
            std::cout << clique_number(parse_form(form_a)) << "\n";
        } else if (*c_ne) {
            print_bool(is_nonempty(parse_form(form_a)), json);
        } else if (*c_conn) {
            std::cout << to_string(connectivity(parse_form(form_a))) << "\n";
        } else if (*c_an) {
            const GraphReport r = analyze(parse_form(form_a));
            if (json) {
                std::cout << to_json(r).dump() << "\n";
            } else {
                std::cout << "nonempty: " << (r.nonempty ? "true" : "false")
                          << "\n";
                std::cout << "clique: " << r.clique_number << "\n";
                std::cout << "connectivity: " << to_string(r.connectivity)
                          << "\n";
                std::cout << "max_simplex: " << r.max_simplex << "\n";
            }
        } else if (*c_hil) {
            const int s = hilbert(parse_rational(rat_a), parse_rational(rat_b),
                                  parse_place(place_s));
            std::cout << (s > 0 ? "+1" : "-1") << "\n";
        } else if (*c_simp) {
            const PointSet ps = beckman_quarles_simplex(arg_n);
            print_point_set(ps, verify_distances(ps, QForm::identity(arg_n)),
                            json);
        } else if (*c_tri) {
            const PointSet ps = rational_triangle(arg_n);
            const QForm q = QForm::diagonal({Rational(1), Rational(arg_n)});
            print_point_set(ps, verify_distances(ps, q), json);
        } else if (*c_tab) {
            if (max_n < 1 || max_d < 1)
                throw std::invalid_argument("table bounds must be >= 1");
            std::vector<std::vector<int>> cells(max_n, std::vector<int>(max_d));
            for (int n = 1; n <= max_n; ++n)
                for (int d = 1; d <= max_d; ++d)
                    cells[n - 1][d - 1] =
                        clique_number(scaled_identity(n, Rational(d)));
            if (json) {
                std::cout << nlohmann::json(cells).dump() << "\n";
            } else {
                std::cout << "n\\d";
                for (int d = 1; d <= max_d; ++d) std::cout << "\t" << d;
                std::cout << "\n";
                for (int n = 1; n <= max_n; ++n) {
                    std::cout << n;
                    for (int d = 1; d <= max_d; ++d)
                        std::cout << "\t" << cells[n - 1][d - 1];
                    std::cout << "\n";
                }
            }
        } else if (*c_uv) {
            const oracle::SearchBounds b{den, height, max_cand};
            const auto units = oracle::search_unit_vectors(parse_form(form_a), b);
            nlohmann::json out = nlohmann::json::array();
            for (const Vec& u : units) {
                nlohmann::json row = nlohmann::json::array();
                for (const Rational& x : u) row.push_back(to_string(x));
                out.push_back(row);
            }
            std::cout << out.dump() << "\n";
        } else if (*c_cl) {
            const oracle::SearchBounds b{den, height, max_cand};
            const auto ps =
                oracle::search_clique(parse_form(form_a), arg_size, b);
            if (!ps) {
                std::cout << (json ? "null" : "none found") << "\n";
            } else if (json) {
                std::cout << to_json(*ps).dump() << "\n";
            } else {
                for (const Vec& p : ps->points) {
                    std::cout << "(";
                    for (std::size_t i = 0; i < p.size(); ++i)
                        std::cout << (i ? ", " : "") << to_string(p[i]);
                    std::cout << ")\n";
                }
            }
        } else if (*c_self) {
            return run_selftest();
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
