#include "eulab/cli.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eulab/basis_change.hpp"
#include "eulab/corpus.hpp"
#include "eulab/errors.hpp"
#include "eulab/eulerian.hpp"
#include "eulab/invariants.hpp"
#include "eulab/json_io.hpp"
#include "eulab/matroid.hpp"
#include "eulab/parallel.hpp"

namespace eulab {

namespace {

using nlohmann::json;

std::string monomial_key(const Exponents& exp, const std::vector<std::string>& vars) {
    std::string out;
    for (std::size_t i = 0; i < exp.size(); ++i) {
        if (exp[i] == 0) continue;
        if (!out.empty()) out += " ";
        out += vars[i];
        if (exp[i] > 1) out += "^" + std::to_string(exp[i]);
    }
    return out.empty() ? "1" : out;
}

json poly_json(const MultiPoly& p, const std::vector<std::string>& vars) {
    json out = json::object();
    for (const auto& [exp, coeff] : p.terms()) out[monomial_key(exp, vars)] = numerator_string(coeff);
    return out;
}

std::string joined(const std::vector<int>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

int checked_sum(const Composition& a, const char* who) {
    int n = static_cast<int>(a.size());
    if (n < 1) throw invalid_parameters_error(std::string(who) + ": composition must be nonempty");
    int total = std::accumulate(a.begin(), a.end(), 0);
    if (total != n)
        throw invalid_parameters_error(std::string(who) + ": composition must sum to its length " +
                                       std::to_string(n) + ", got " + std::to_string(total));
    return n;
}

json algorithms_json(const Matroid& mat, const Composition& a) {
    json out = json::object();
    out["closed"] = to_string(matroidal_closed(mat, a));
    out["recursion-flat"] = to_string(matroidal_recursion_flat(mat, a));
    out["recursion-lex"] = to_string(matroidal_recursion_lex(mat, a));
    out["chow"] = to_string(matroidal_chow(mat, a));
    out["divisorial"] = to_string(matroidal_divisorial(mat, a));
    return out;
}

int cmd_men(const Composition& a, bool all_algorithms, bool as_json) {
    int n = checked_sum(a, "men");
    if (n > 8) throw size_limit_error("men: compositions of length above 8 are not supported");
    Int value = mixed_eulerian(a);
    if (!all_algorithms && !as_json) {
        std::cout << value << "\n";
        return 0;
    }
    json out;
    out["a"] = a;
    out["value"] = to_string(value);
    if (all_algorithms) out["algorithms"] = algorithms_json(Matroid::uniform(n + 1, n + 1), a);
    std::cout << out.dump() << "\n";
    return 0;
}

json men_vector_json(const Matroid& mat) {
    json rows = json::array();
    for (const auto& [a, value] : men_vector_parallel(mat)) {
        json row;
        row["a"] = a;
        row["value"] = to_string(value);
        rows.push_back(std::move(row));
    }
    json out;
    out["loopless"] = mat.loopless();
    out["men"] = std::move(rows);
    return out;
}

int cmd_matroid(const std::string& file, const std::string& invariant, const Composition& a,
                bool all_algorithms) {
    Matroid mat = load_matroid(file);
    json out;
    out["invariant"] = invariant;
    if (invariant == "men") {
        if (a.empty() && mat.elements() != 1)
            throw invalid_parameters_error("matroid: invariant \"men\" needs --a");
        out["a"] = a;
        out["value"] = to_string(matroidal_closed(mat, a));
        if (all_algorithms) out["algorithms"] = algorithms_json(mat, a);
    } else if (invariant == "men-vector") {
        json body = men_vector_json(mat);
        out["loopless"] = body["loopless"];
        out["men"] = body["men"];
    } else if (invariant == "tutte") {
        out["tutte"] = poly_json(mat.tutte(), {"x", "y"});
    } else if (invariant == "charpoly") {
        out["charpoly"] = poly_json(mat.reduced_char_poly(), {"q"});
    } else if (invariant == "ginv") {
        json g = json::object();
        for (const auto& [key, count] : mat.g_invariant()) g[joined(key, "")] = to_string(count);
        out["ginv"] = std::move(g);
    } else if (invariant == "catenary") {
        json c = json::object();
        for (const auto& [key, count] : mat.catenary()) c[joined(key, ",")] = to_string(count);
        out["catenary"] = std::move(c);
    } else {
        throw invalid_parameters_error("matroid: unknown invariant \"" + invariant + "\"");
    }
    std::cout << out.dump() << "\n";
    return 0;
}

struct CheckOutcome {
    bool pass = true;
    json witness;
};

json run_check(const std::string& name, json& checks,
               const std::function<CheckOutcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    CheckOutcome outcome = body();
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    json row;
    row["name"] = name;
    row["pass"] = outcome.pass;
    row["runtime_ms"] = elapsed;
    if (!outcome.pass) row["witness"] = outcome.witness;
    checks.push_back(row);
    return row;
}

int cmd_crosscheck(const std::string& corpus_path, int max_elements) {
    if (max_elements < 1 || max_elements > 7)
        throw size_limit_error("crosscheck: --max-elements must lie in 1..7");
    std::vector<NamedMatroid> corpus =
        corpus_path.empty() ? default_corpus() : load_corpus(corpus_path);
    std::vector<NamedMatroid> scope;
    for (const auto& entry : corpus)
        if (entry.matroid.elements() <= max_elements) scope.push_back(entry);

    json checks = json::array();
    bool all_pass = true;

    auto record = [&](const std::string& name, const std::function<CheckOutcome()>& body) {
        json row = run_check(name, checks, body);
        if (!row["pass"].get<bool>()) all_pass = false;
    };

    record("five-way-agreement", [&]() -> CheckOutcome {
        for (const auto& [name, mat] : scope) {
            if (mat.rank() < 1) continue;
            for (const Composition& a : compositions(mat.rank() - 1, mat.elements() - 1)) {
                json values;
                values["closed"] = to_string(matroidal_closed(mat, a));
                values["recursion-flat"] = to_string(matroidal_recursion_flat(mat, a));
                values["recursion-lex"] = to_string(matroidal_recursion_lex(mat, a));
                values["chow"] = to_string(matroidal_chow(mat, a));
                values["divisorial"] = to_string(matroidal_divisorial(mat, a));
                std::string first = values["closed"].get<std::string>();
                for (const auto& [algo, val] : values.items()) {
                    (void)algo;
                    if (val.get<std::string>() != first)
                        return {false, json{{"matroid", name}, {"a", a}, {"values", values}}};
                }
            }
        }
        return {};
    });

    record("gamma-identification", [&]() -> CheckOutcome {
        for (const auto& [name, mat] : scope) {
            if (!mat.loopless() || mat.rank() < 1) continue;
            for (int l = 0; l <= mat.rank() - 1; ++l) {
                Composition a(mat.elements() - 1, 0);
                if (!a.empty()) {
                    a.front() += l;
                    a.back() += mat.rank() - 1 - l;
                }
                Int lhs = matroidal_closed(mat, a);
                Int rhs = mat.gamma(l);
                if (lhs != rhs)
                    return {false,
                            json{{"matroid", name},
                                 {"l", l},
                                 {"men", to_string(lhs)},
                                 {"gamma", to_string(rhs)}}};
            }
        }
        return {};
    });

    record("tutte-intersection", [&]() -> CheckOutcome {
        for (const auto& [name, mat] : scope) {
            if (!mat.loopless() || mat.rank() < 1) continue;
            MultiPoly via = tutte_via_intersections(mat);
            if (!(via == mat.tutte()))
                return {false, json{{"matroid", name}, {"via_intersections", poly_json(via, {"x", "y"})},
                                    {"tutte", poly_json(mat.tutte(), {"x", "y"})}}};
        }
        return {};
    });

    record("catenary-integrals", [&]() -> CheckOutcome {
        for (const auto& [name, mat] : scope) {
            if (!mat.loopless()) continue;
            CatenaryData direct = mat.catenary();
            if (catenary_via_integrals(mat) != direct)
                return {false, json{{"matroid", name}, {"path", "s-divisor integrals"}}};
            if (g_from_men(mat) != direct)
                return {false, json{{"matroid", name}, {"path", "men expansion"}}};
        }
        return {};
    });

    record("g-men-biconditional", [&]() -> CheckOutcome {
        std::vector<std::pair<std::string, const Matroid*>> loopless;
        for (const auto& [name, mat] : scope)
            if (mat.loopless() && mat.rank() >= 1) loopless.emplace_back(name, &mat);
        std::map<std::string, std::map<Composition, Int>> men;
        for (const auto& [name, mat] : loopless) men[name] = men_vector(*mat);
        for (std::size_t i = 0; i < loopless.size(); ++i) {
            for (std::size_t j = i + 1; j < loopless.size(); ++j) {
                const Matroid& m1 = *loopless[i].second;
                const Matroid& m2 = *loopless[j].second;
                if (m1.elements() != m2.elements() || m1.rank() != m2.rank()) continue;
                bool g_eq = g_equivalent(m1, m2);
                bool men_eq = men[loopless[i].first] == men[loopless[j].first];
                if (g_eq != men_eq)
                    return {false, json{{"pair", {loopless[i].first, loopless[j].first}},
                                        {"g_equal", g_eq},
                                        {"men_equal", men_eq}}};
            }
        }
        for (const auto& [name, mat] : loopless) {
            std::vector<int> perm(mat->elements());
            for (int e = 0; e < mat->elements(); ++e) perm[e] = mat->elements() - 1 - e;
            Matroid rel = mat->relabel(perm);
            if (!g_equivalent(*mat, rel) || men[name] != men_vector(rel))
                return {false, json{{"matroid", name}, {"path", "relabel"}}};
        }
        return {};
    });

    record("basis-change-identity", [&]() -> CheckOutcome {
        for (int n = 1; n <= std::min(5, max_elements - 1); ++n) {
            auto [p, q] = volume_polynomials(n);
            if (!(apply_basis_change(n, q) == p)) return {false, json{{"n", n}}};
        }
        return {};
    });

    json out;
    out["max_elements"] = max_elements;
    out["matroids"] = scope.size();
    out["pass"] = all_pass;
    out["checks"] = checks;
    std::cout << out.dump() << "\n";
    return all_pass ? 0 : 1;
}

int cmd_table(int n, bool as_json) {
    if (n < 1) throw invalid_parameters_error("table: --n must be positive");
    if (n > 8) throw size_limit_error("table: values of n above 8 are not supported");
    if (as_json) {
        json rows = json::array();
        for (const Composition& a : compositions(n, n)) {
            Int men = mixed_eulerian(a);
            Int weight = multinomial(n, a);
            json row;
            row["a"] = a;
            row["men"] = to_string(men);
            row["multinomial"] = to_string(weight);
            row["p_coefficient"] = to_string(men * weight);
            rows.push_back(std::move(row));
        }
        json out;
        out["n"] = n;
        out["rows"] = rows;
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << "a,men,multinomial,p_coefficient\n";
    for (const Composition& a : compositions(n, n)) {
        Int men = mixed_eulerian(a);
        Int weight = multinomial(n, a);
        std::cout << joined(a, " ") << "," << men << "," << weight << "," << men * weight << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact mixed Eulerian numbers and matroid invariants"};
    app.require_subcommand(1);
    int rc = 0;

    Composition men_a;
    bool men_all = false;
    bool men_json = false;
    CLI::App* men = app.add_subcommand("men", "compute one mixed Eulerian number A(a)");
    men->add_option("--a", men_a, "composition a_1,...,a_n with sum n")->required()->delimiter(',');
    men->add_flag("--all-algorithms", men_all, "also run the five matroidal evaluators");
    men->add_flag("--json", men_json, "emit JSON instead of a bare integer");
    men->callback([&]() { rc = cmd_men(men_a, men_all, men_json); });

    std::string matroid_file;
    std::string matroid_invariant;
    Composition matroid_a;
    bool matroid_all = false;
    CLI::App* matroid = app.add_subcommand("matroid", "compute an invariant of a matroid file");
    matroid->add_option("--file", matroid_file, "matroid JSON file")->required();
    matroid
        ->add_option("--invariant", matroid_invariant,
                     "one of men, men-vector, tutte, charpoly, ginv, catenary")
        ->required();
    matroid->add_option("--a", matroid_a, "composition for the men invariant")->delimiter(',');
    matroid->add_flag("--all-algorithms", matroid_all, "also run the five evaluators (men only)");
    matroid->callback([&]() { rc = cmd_matroid(matroid_file, matroid_invariant, matroid_a, matroid_all); });

    std::string corpus_path;
    int max_elements = 6;
    CLI::App* crosscheck = app.add_subcommand("crosscheck", "run the full theorem suite over a corpus");
    crosscheck->add_option("--corpus", corpus_path, "corpus JSON file (default: built-in corpus)");
    crosscheck->add_option("--max-elements", max_elements, "largest ground set to include (1..7)");
    crosscheck->callback([&]() { rc = cmd_crosscheck(corpus_path, max_elements); });

    int table_n = 0;
    bool table_json = false;
    CLI::App* table = app.add_subcommand("table", "emit all A(a) for a given n");
    table->add_option("--n", table_n, "composition length")->required();
    table->add_flag("--json", table_json, "emit JSON instead of CSV");
    table->callback([&]() { rc = cmd_table(table_n, table_json); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const internal_consistency_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const invalid_matroid_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const size_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const invalid_parameters_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

}  // namespace eulab
