#include "sncalc/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "sncalc/characters.hpp"
#include "sncalc/kronecker.hpp"
#include "sncalc/schubert.hpp"
#include "sncalc/tableaux.hpp"
#include "sncalc/witnesses.hpp"

namespace sncalc::cli {

namespace {

struct Globals {
    bool json = false;
    int threads = 0;
    std::size_t memo_limit = std::size_t{1} << 24;
    int nmax = 40;

    int effective_threads() const {
        if (threads > 0) return threads;
        unsigned hw = std::thread::hardware_concurrency();
        return static_cast<int>(std::clamp(hw, 1u, 8u));
    }
    CharEngine make_engine() const { return CharEngine{CharOptions{memo_limit}}; }
};

void print_value(const Globals& g, std::ostream& out, std::int64_t v) {
    if (g.json) {
        nlohmann::json doc;
        doc["value"] = v;
        out << doc.dump() << '\n';
    } else {
        out << v << '\n';
    }
}

nlohmann::json poly_json(const IntPolynomial& poly) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : poly.terms()) {
        nlohmann::json t;
        t["exponents"] = e;
        t["coefficient"] = c.str();
        terms.push_back(std::move(t));
    }
    return terms;
}

void list_fillings(std::ostream& out, const SkewShape& shape, const Partition& content,
                   bool lattice, std::int64_t limit) {
    FillingOptions opts;
    opts.lattice = lattice;
    opts.emit_limit = limit;
    opts.emit = [&](const Tableau& t) { out << t.to_string() << '\n'; };
    count_fillings(shape, content, opts);
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations with S_n characters, tableau coefficients and Schubert polynomials"};
    app.require_subcommand(1);
    auto g = std::make_shared<Globals>();
    app.add_flag("--json", g->json, "machine-readable output");
    app.add_option("--threads", g->threads, "worker threads (0 = auto)");
    app.add_option("--memo-limit", g->memo_limit, "character memo budget in cached cells");
    app.add_option("--nmax", g->nmax, "stabilization ceiling for padded evaluations");

    auto positional = [](CLI::App* sub, const char* name, std::shared_ptr<std::string> dst,
                         const char* desc) { sub->add_option(name, *dst, desc)->required(); };

    // char
    {
        auto sub = app.add_subcommand("char", "chi^lambda(mu)");
        sub->fallthrough();
        auto l = std::make_shared<std::string>(), m = std::make_shared<std::string>();
        positional(sub, "lambda", l, "shape partition");
        positional(sub, "mu", m, "cycle type");
        sub->callback([=, &out] {
            CharEngine engine = g->make_engine();
            print_value(*g, out, engine.character(Partition::parse(*l), Partition::parse(*m)));
        });
    }
    // table
    {
        auto sub = app.add_subcommand("table", "full character table of S_n");
        sub->fallthrough();
        auto n = std::make_shared<int>(0);
        auto csv = std::make_shared<bool>(false);
        sub->add_option("n", *n, "symmetric group degree")->required();
        sub->add_flag("--csv", *csv, "CSV output");
        sub->callback([=, &out] {
            CharEngine engine = g->make_engine();
            CharacterTable table = character_table(engine, *n, g->effective_threads());
            if (g->json) {
                nlohmann::json doc;
                doc["n"] = table.n;
                nlohmann::json shapes = nlohmann::json::array();
                for (const auto& s : table.shapes) shapes.push_back(s.to_string());
                doc["shapes"] = shapes;
                nlohmann::json sizes = nlohmann::json::array();
                for (const auto& c : table.classes) sizes.push_back(c.size.str());
                doc["class_sizes"] = sizes;
                doc["values"] = table.values;
                out << doc.dump() << '\n';
            } else if (*csv) {
                write_csv(table, out);
            } else {
                std::size_t width = 0;
                for (const auto& s : table.shapes) width = std::max(width, s.to_string().size());
                out << std::setw(static_cast<int>(width)) << "" << " |";
                for (const auto& c : table.classes) out << ' ' << c.cycle_type.to_string();
                out << '\n';
                for (std::size_t r = 0; r < table.shapes.size(); ++r) {
                    out << std::setw(static_cast<int>(width)) << table.shapes[r].to_string() << " |";
                    for (std::size_t c = 0; c < table.shapes.size(); ++c) {
                        out << ' ' << std::setw(static_cast<int>(table.classes[c].cycle_type.to_string().size()))
                            << table.values[r][c];
                    }
                    out << '\n';
                }
            }
        });
    }
    // interval
    {
        auto sub = app.add_subcommand("interval", "consecutive character values of S_n");
        sub->fallthrough();
        auto n = std::make_shared<int>(0);
        sub->add_option("n", *n, "symmetric group degree")->required();
        sub->callback([=, &out] {
            CharEngine engine = g->make_engine();
            IntervalReport rep = char_interval(engine, *n, g->effective_threads());
            if (g->json) {
                out << interval_to_json(rep) << '\n';
            } else {
                out << "l_" << rep.n << " = " << rep.l_n << '\n';
                out << "longest run: [" << rep.longest_run.lo << "," << rep.longest_run.hi << "]\n";
                if (rep.run_through_zero)
                    out << "run through zero: [" << rep.run_through_zero->lo << ","
                        << rep.run_through_zero->hi << "]\n";
                else
                    out << "run through zero: none\n";
                out << "distinct values: " << rep.value_set.size() << " in ["
                    << rep.value_set.front() << "," << rep.value_set.back() << "]\n";
            }
        });
    }
    // an-char
    {
        auto sub = app.add_subcommand("an-char", "restricted A_n character psi^lambda(mu)");
        sub->fallthrough();
        auto l = std::make_shared<std::string>(), m = std::make_shared<std::string>();
        positional(sub, "lambda", l, "shape partition");
        positional(sub, "mu", m, "cycle type");
        sub->callback([=, &out] {
            CharEngine engine = g->make_engine();
            print_value(*g, out, an_character(engine, Partition::parse(*l), Partition::parse(*m)));
        });
    }
    // kostka / lr
    auto add_tableau_cmd = [&](const char* name, const char* desc, bool is_lr) {
        auto sub = app.add_subcommand(name, desc);
        sub->fallthrough();
        auto l = std::make_shared<std::string>(), m = std::make_shared<std::string>();
        auto nu = std::make_shared<std::string>();
        auto list = std::make_shared<bool>(false);
        auto list_limit = std::make_shared<std::int64_t>(100);
        positional(sub, "lambda", l, "first partition");
        positional(sub, "mu", m, "second partition");
        if (is_lr) positional(sub, "nu", nu, "outer partition");
        sub->add_flag("--list", *list, "also list the counted fillings");
        sub->add_option("--list-limit", *list_limit, "cap on listed fillings");
        sub->callback([=, &out] {
            Partition pl = Partition::parse(*l), pm = Partition::parse(*m);
            if (is_lr) {
                Partition pn = Partition::parse(*nu);
                print_value(*g, out, lr_coefficient(pl, pm, pn));
                if (*list) list_fillings(out, SkewShape(pn, pl), pm, true, *list_limit);
            } else {
                print_value(*g, out, kostka(pl, pm));
                if (*list) list_fillings(out, SkewShape(pl, Partition{}), pm, false, *list_limit);
            }
        });
    };
    add_tableau_cmd("kostka", "Kostka coefficient K_{lambda,mu}", false);
    add_tableau_cmd("lr", "Littlewood-Richardson coefficient c_{lambda,mu}^{nu}", true);
    // kron
    {
        auto sub = app.add_subcommand("kron", "Kronecker coefficient g_{lambda,mu,nu}");
        sub->fallthrough();
        auto l = std::make_shared<std::string>(), m = std::make_shared<std::string>(),
             nu = std::make_shared<std::string>();
        positional(sub, "lambda", l, "first partition");
        positional(sub, "mu", m, "second partition");
        positional(sub, "nu", nu, "third partition");
        sub->callback([=, &out] {
            CharEngine engine = g->make_engine();
            print_value(*g, out,
                        kronecker(engine, Partition::parse(*l), Partition::parse(*m),
                                  Partition::parse(*nu), g->effective_threads()));
        });
    }
    // stable-kron
    {
        auto sub = app.add_subcommand("stable-kron", "stable Kronecker coefficient");
        sub->fallthrough();
        auto l = std::make_shared<std::string>(), m = std::make_shared<std::string>(),
             nu = std::make_shared<std::string>();
        positional(sub, "lambda", l, "first partition");
        positional(sub, "mu", m, "second partition");
        positional(sub, "nu", nu, "third partition");
        sub->callback([=, &out, &err] {
            CharEngine engine = g->make_engine();
            StableKronecker res =
                stable_kronecker(engine, Partition::parse(*l), Partition::parse(*m),
                                 Partition::parse(*nu), g->nmax, g->effective_threads());
            err << "stabilized at N=" << res.stabilized_at << '\n';
            if (g->json) {
                nlohmann::json doc;
                doc["value"] = res.value;
                doc["stabilized_at_N"] = res.stabilized_at;
                out << doc.dump() << '\n';
            } else {
                out << res.value << '\n';
            }
        });
    }
    // schubert
    {
        auto sub = app.add_subcommand("schubert", "Schubert polynomial of w");
        sub->fallthrough();
        auto w = std::make_shared<std::string>();
        positional(sub, "w", w, "permutation in one-line notation");
        sub->callback([=, &out] {
            SchubertContext ctx;
            const IntPolynomial& poly = ctx.schubert_poly(Permutation::parse(*w));
            if (g->json)
                out << nlohmann::json{{"terms", poly_json(poly)}}.dump() << '\n';
            else
                out << poly.to_string() << '\n';
        });
    }
    // schub-expand
    {
        auto sub = app.add_subcommand("schub-expand", "Schubert expansion of S_u * S_v");
        sub->fallthrough();
        auto u = std::make_shared<std::string>(), v = std::make_shared<std::string>();
        positional(sub, "u", u, "permutation");
        positional(sub, "v", v, "permutation");
        sub->callback([=, &out] {
            SchubertContext ctx;
            auto expansion = ctx.expand_in_schubert_basis(
                ctx.schubert_poly(Permutation::parse(*u)) * ctx.schubert_poly(Permutation::parse(*v)));
            if (g->json) {
                nlohmann::json doc;
                for (const auto& [w, c] : expansion) doc[w.to_string()] = c.str();
                out << doc.dump() << '\n';
            } else {
                for (const auto& [w, c] : expansion)
                    out << w.to_string() << ": " << c.str() << '\n';
            }
        });
    }
    // schub-c
    {
        auto sub = app.add_subcommand("schub-c", "Schubert structure constant C_{u,v}^w");
        sub->fallthrough();
        auto u = std::make_shared<std::string>(), v = std::make_shared<std::string>(),
             w = std::make_shared<std::string>();
        positional(sub, "u", u, "permutation");
        positional(sub, "v", v, "permutation");
        positional(sub, "w", w, "permutation");
        sub->callback([=, &out] {
            SchubertContext ctx;
            print_value(*g, out,
                        ctx.structure_constant(Permutation::parse(*u), Permutation::parse(*v),
                                               Permutation::parse(*w)));
        });
    }
    // grassmannian
    {
        auto sub = app.add_subcommand("grassmannian", "descent and shape with S_w = s_lambda");
        sub->fallthrough();
        auto w = std::make_shared<std::string>();
        positional(sub, "w", w, "Grassmannian permutation");
        sub->callback([=, &out] {
            GrassmannianShape shape = grassmannian_to_schur(Permutation::parse(*w));
            if (g->json) {
                nlohmann::json doc;
                doc["descent"] = shape.descent;
                doc["shape"] = shape.shape.to_string();
                out << doc.dump() << '\n';
            } else {
                out << "descent: " << shape.descent << '\n';
                out << "shape: " << shape.shape.to_string() << '\n';
            }
        });
    }
    // stanley
    {
        auto sub = app.add_subcommand("stanley", "Schur expansion of the Stanley symmetric function");
        sub->fallthrough();
        auto w = std::make_shared<std::string>();
        positional(sub, "w", w, "permutation");
        sub->callback([=, &out, &err] {
            SchubertContext ctx;
            StanleyResult res = stanley_expansion(ctx, Permutation::parse(*w));
            err << "stabilized at m=" << res.stabilized_at_m << '\n';
            if (g->json) {
                nlohmann::json coeffs;
                for (const auto& [p, c] : res.coefficients) coeffs[p.to_string()] = c;
                nlohmann::json doc;
                doc["coefficients"] = coeffs;
                doc["stabilized_at_m"] = res.stabilized_at_m;
                out << doc.dump() << '\n';
            } else {
                for (const auto& [p, c] : res.coefficients)
                    out << p.to_string() << ": " << c << '\n';
            }
        });
    }
    // skew-of
    {
        auto sub = app.add_subcommand("skew-of", "skew shape with s_{nu/lambda} = F_w (321-avoiding w)");
        sub->fallthrough();
        auto w = std::make_shared<std::string>();
        positional(sub, "w", w, "321-avoiding permutation");
        sub->callback([=, &out] {
            SkewShape shape = skew_shape_of_321_avoiding(Permutation::parse(*w));
            if (g->json) {
                nlohmann::json doc;
                doc["outer"] = shape.outer.to_string();
                doc["inner"] = shape.inner.to_string();
                out << doc.dump() << '\n';
            } else {
                out << shape.to_string() << '\n';
            }
        });
    }
    // witness
    {
        auto sub = app.add_subcommand("witness", "verified witness hitting a target value");
        sub->fallthrough();
        auto family = std::make_shared<std::string>();
        auto value = std::make_shared<std::int64_t>(0);
        auto index = std::make_shared<int>(-1);
        sub->add_option("--family", *family, "char|kostka|lr|kron")->required();
        sub->add_option("--value", *value, "target value")->required();
        sub->add_option("--index", *index, "witness index (distinct indices, distinct witnesses)");
        sub->callback([=, &out] {
            Witness w;
            if (*family == "char" || *family == "character") {
                CharEngine engine = g->make_engine();
                w = char_witness(engine, *value, *index < 0 ? 0 : *index);
            } else if (*family == "kostka") {
                w = kostka_witness(*value, *index < 0 ? 1 : *index);
            } else if (*family == "lr") {
                w = lr_witness(*value, *index < 0 ? 1 : *index);
            } else if (*family == "kron" || *family == "kronecker") {
                CharEngine engine = g->make_engine();
                w = kron_witness(engine, *value, *index < 0 ? 1 : *index, g->nmax);
            } else {
                throw CLI::ValidationError("--family", "unknown family '" + *family + "'");
            }
            out << w.to_json() << '\n';
        });
    }
    // class
    {
        auto sub = app.add_subcommand("class", "first members of a coefficient value class");
        sub->fallthrough();
        auto family = std::make_shared<std::string>();
        auto value = std::make_shared<std::int64_t>(0);
        auto limit = std::make_shared<int>(0);
        sub->add_option("--family", *family, "lr|kron")->required();
        sub->add_option("--value", *value, "target value")->required();
        sub->add_option("--limit", *limit, "number of members to emit")->required();
        sub->callback([=, &out] {
            CoefficientFamily fam;
            if (*family == "lr")
                fam = CoefficientFamily::LR;
            else if (*family == "kron" || *family == "kronecker")
                fam = CoefficientFamily::Kronecker;
            else
                throw CLI::ValidationError("--family", "unknown family '" + *family + "'");
            CharEngine engine = g->make_engine();
            auto triples = enumerate_value_class(engine, fam, *value, *limit);
            if (g->json) {
                nlohmann::json doc = nlohmann::json::array();
                for (const auto& t : triples)
                    doc.push_back({t[0].to_string(), t[1].to_string(), t[2].to_string()});
                out << doc.dump() << '\n';
            } else {
                for (const auto& t : triples)
                    out << t[0].to_string() << ' ' << t[1].to_string() << ' ' << t[2].to_string()
                        << '\n';
            }
        });
    }

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace sncalc::cli
