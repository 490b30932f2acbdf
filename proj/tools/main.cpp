#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shiftgb/shiftgb.hpp"

namespace {

using namespace shiftgb;

struct Options {
    int n = 0;
    int d = 0;
    std::string order = "grevlex";
    std::string field = "q";
    std::string input;
    std::uint64_t seed = 42;
    std::string strategy = "grid";
    std::string format = "text";
    std::uint64_t trials = 10;
    std::uint64_t max_attempts = kDefaultMaxAttempts;
    std::size_t minor_cap = kDefaultMinorCap;
    int det_cap = kDefaultDeterminantCap;
};

bool want_json(const Options& o) {
    if (o.format == "json")
        return true;
    if (o.format == "text")
        return false;
    throw value_error("bad format '" + o.format + "' (expected text or json)");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string header_line(const Options& o) {
    return "n=" + std::to_string(o.n) + " d=" + std::to_string(o.d) + " order=" + o.order +
           " field=" + o.field;
}

std::vector<Scalar> random_point(int d, const FieldSpec& fs, Rng& rng) {
    std::vector<Scalar> pt;
    pt.reserve(static_cast<std::size_t>(d));
    for (int v = 0; v < d; ++v) {
        if (fs.is_rationals())
            pt.push_back(Scalar::from_int(rng.range(-9, 9), fs));
        else
            pt.push_back(Scalar::from_residue(rng.below(fs.modulus()), fs));
    }
    return pt;
}

int cmd_minors(const Options& o) {
    const ShiftShape shape(o.n, o.d);
    const MonomialOrder ord(order_from_token(o.order), shape.d);
    const FieldSpec fs = FieldSpec::from_token(o.field);
    const std::vector<Minor> minors = enumerate_minors(shape, ord, fs, o.minor_cap);
    if (want_json(o)) {
        json j;
        j["n"] = o.n;
        j["d"] = o.d;
        j["order"] = o.order;
        j["field"] = fs.token();
        json rows = json::array();
        for (const Minor& m : minors) {
            json row;
            row["columns"] = m.columns.str();
            row["polynomial"] = m.det.str();
            row["leading_monomial"] = m.det.leading_monomial().str();
            rows.push_back(std::move(row));
        }
        j["minors"] = std::move(rows);
        emit(j);
    } else {
        std::cout << header_line(o) << "\n";
        for (const Minor& m : minors)
            std::cout << m.columns.str() << " | " << m.det.str() << " | "
                      << m.det.leading_monomial().str() << "\n";
    }
    return 0;
}

int cmd_leading_set(const Options& o) {
    const ShiftShape shape(o.n, o.d);
    const MonomialOrder ord(order_from_token(o.order), shape.d);
    const std::vector<Monomial> lms = lm_set(shape, ord, o.minor_cap);
    const std::vector<Monomial> expected =
        enumerate_monomials(shape.d, shape.minor_size(), ord);
    std::vector<Monomial> missing;
    for (const Monomial& m : expected)
        if (std::find(lms.begin(), lms.end(), m) == lms.end())
            missing.push_back(m);
    if (want_json(o)) {
        json j;
        j["n"] = o.n;
        j["d"] = o.d;
        j["order"] = o.order;
        j["count"] = lms.size();
        json arr = json::array();
        for (const Monomial& m : lms)
            arr.push_back(m.str());
        j["leading_monomials"] = std::move(arr);
        j["complete"] = missing.empty();
        json miss = json::array();
        for (const Monomial& m : missing)
            miss.push_back(m.str());
        j["missing"] = std::move(miss);
        emit(j);
    } else {
        std::cout << header_line(o) << "\n";
        std::cout << "leading monomials (" << lms.size() << "):";
        for (const Monomial& m : lms)
            std::cout << " " << m.str();
        std::cout << "\n";
        if (missing.empty()) {
            std::cout << "complete: yes (all " << expected.size() << " monomials of degree "
                      << shape.minor_size() << ")\n";
        } else {
            std::cout << "complete: no (" << lms.size() << " of " << expected.size()
                      << "); missing:";
            for (const Monomial& m : missing)
                std::cout << " " << m.str();
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_check_groebner(const Options& o) {
    const ShiftShape shape(o.n, o.d);
    const MonomialOrder ord(order_from_token(o.order), shape.d);
    const FieldSpec fs = FieldSpec::from_token(o.field);
    const GroebnerReport report = check_buchberger(shape, ord, fs, o.minor_cap);
    const bool pass = report.is_groebner_basis() && report.lm_set_complete;

    std::optional<std::pair<Polynomial, Polynomial>> counterexample;
    if (!pass)
        counterexample = membership_counterexample(shape, ord, fs, o.minor_cap);

    if (want_json(o)) {
        json j = report_to_json(report);
        j["field"] = fs.token();
        if (counterexample) {
            json c;
            c["monomial"] = counterexample->first.str();
            c["normal_form"] = counterexample->second.str();
            j["counterexample"] = std::move(c);
        } else {
            j["counterexample"] = nullptr;
        }
        emit(j);
    } else {
        std::cout << header_line(o) << "\n";
        std::cout << "pairs checked: " << report.pair_count << "\n";
        std::cout << "verdict: " << report.verdict() << "\n";
        for (const SPairFailure& f : report.failures)
            std::cout << "  pair (" << f.left.str() << ", " << f.right.str()
                      << "): remainder " << f.remainder.str() << "\n";
        std::cout << "leading-monomial set complete: " << (report.lm_set_complete ? "yes" : "no")
                  << "\n";
        if (counterexample)
            std::cout << "counterexample: " << counterexample->first.str()
                      << " lies in the ideal but has normal form "
                      << counterexample->second.str() << "\n";
    }
    return pass ? 0 : 1;
}

int cmd_complete_basis(const Options& o, bool field_given) {
    if (o.input.empty())
        throw value_error("complete-basis requires --input");
    std::ifstream in(o.input);
    if (!in)
        throw value_error("cannot open input file '" + o.input + "'");
    json j;
    in >> j;
    const ProblemInstance inst = instance_from_json(j, o.n, o.d);
    if (field_given && FieldSpec::from_token(o.field) != inst.field())
        throw value_error("--field " + o.field + " conflicts with input field " +
                          inst.field().token());
    const CompletionResult result =
        solve(inst, strategy_from_token(o.strategy), o.seed, o.max_attempts);
    if (!verify_completion(inst, result.x))
        throw std::logic_error("completion failed rank verification");
    if (want_json(o)) {
        emit(completion_to_json(result));
    } else {
        std::cout << "x = (";
        for (std::size_t i = 0; i < result.x.size(); ++i)
            std::cout << (i ? ", " : "") << result.x[i].str();
        std::cout << ")\n";
        std::cout << "det = " << result.det_value.str() << "\n";
        std::cout << "attempts = " << result.attempts << "\n";
        std::cout << "strategy = " << strategy_token(result.strategy) << "\n";
    }
    return 0;
}

struct LaplaceStats {
    std::uint64_t symbolic_ok = 0;
    std::uint64_t eval_ok = 0;
    std::uint64_t eval_total = 0;
    std::uint64_t trials = 0;

    bool all_ok() const { return symbolic_ok == trials && eval_ok == eval_total; }
};

LaplaceStats run_laplace_trials(const ShiftShape& shape, const MonomialOrder& ord,
                                const FieldSpec& fs, std::uint64_t trials, Rng& rng,
                                std::size_t minor_cap, int det_cap) {
    LaplaceStats stats;
    stats.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const ScalarMatrix F = random_matrix(shape.d - 1, shape.n, fs, rng);
        const Polynomial lap = laplace_expansion(shape, F, ord, minor_cap);
        const PolyMatrix M = build_full_matrix(shape, F, ord);
        const Polynomial direct = poly_determinant(M, det_cap);
        if (lap == direct)
            ++stats.symbolic_ok;
        for (int e = 0; e < 10; ++e) {
            ++stats.eval_total;
            const std::vector<Scalar> pt = random_point(shape.d, fs, rng);
            if (lap.evaluate(pt) == scalar_determinant(M.evaluate(pt)))
                ++stats.eval_ok;
        }
    }
    return stats;
}

int cmd_laplace_check(const Options& o) {
    const ShiftShape shape(o.n, o.d);
    const MonomialOrder ord(order_from_token(o.order), shape.d);
    const FieldSpec fs = FieldSpec::from_token(o.field);
    Rng rng(o.seed);
    const LaplaceStats stats =
        run_laplace_trials(shape, ord, fs, o.trials, rng, o.minor_cap, o.det_cap);
    if (want_json(o)) {
        json j;
        j["n"] = o.n;
        j["d"] = o.d;
        j["order"] = o.order;
        j["field"] = fs.token();
        j["seed"] = o.seed;
        j["trials"] = stats.trials;
        j["symbolic_matches"] = stats.symbolic_ok;
        j["evaluation_checks"] = stats.eval_total;
        j["evaluation_matches"] = stats.eval_ok;
        j["verdict"] = stats.all_ok() ? "ok" : "mismatch";
        emit(j);
    } else {
        std::cout << header_line(o) << " seed=" << o.seed << "\n";
        std::cout << "symbolic identity: " << stats.symbolic_ok << "/" << stats.trials
                  << " trials ok\n";
        std::cout << "evaluations: " << stats.eval_ok << "/" << stats.eval_total << " ok\n";
        std::cout << "verdict: " << (stats.all_ok() ? "ok" : "mismatch") << "\n";
    }
    return stats.all_ok() ? 0 : 1;
}

struct BijectionStats {
    std::uint64_t count = 0;
    std::uint64_t expected = 0;
    bool roundtrip_ok = true;
    bool image_complete = false;

    bool all_ok() const { return roundtrip_ok && image_complete && count == expected; }
};

BijectionStats run_bijection_check(const ShiftShape& shape) {
    BijectionStats stats;
    stats.expected = binomial(shape.n, shape.d - 1);
    const MonomialOrder ord = MonomialOrder::grevlex(shape.d);
    std::vector<Monomial> image;
    for (const ColumnSet& H : all_column_sets(shape)) {
        ++stats.count;
        const Monomial k = column_set_to_exponents(H);
        if (exponents_to_column_set(k, shape) != H)
            stats.roundtrip_ok = false;
        image.push_back(k);
    }
    std::sort(image.begin(), image.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
    image.erase(std::unique(image.begin(), image.end()), image.end());
    stats.image_complete =
        image == enumerate_monomials(shape.d, shape.minor_size(), ord);
    return stats;
}

int cmd_bijection_check(const Options& o) {
    const ShiftShape shape(o.n, o.d);
    const BijectionStats stats = run_bijection_check(shape);
    if (want_json(o)) {
        json j;
        j["n"] = o.n;
        j["d"] = o.d;
        j["column_sets"] = stats.count;
        j["expected"] = stats.expected;
        j["roundtrip_ok"] = stats.roundtrip_ok;
        j["image_complete"] = stats.image_complete;
        j["verdict"] = stats.all_ok() ? "ok" : "mismatch";
        emit(j);
    } else {
        std::cout << "n=" << o.n << " d=" << o.d << "\n";
        std::cout << "column sets: " << stats.count << " (expected " << stats.expected << ")\n";
        std::cout << "roundtrip: " << (stats.roundtrip_ok ? "ok" : "broken") << "\n";
        std::cout << "image complete: " << (stats.image_complete ? "yes" : "no") << "\n";
        std::cout << "verdict: " << (stats.all_ok() ? "ok" : "mismatch") << "\n";
    }
    return stats.all_ok() ? 0 : 1;
}

bool fixed_example_checks(std::vector<std::pair<std::string, bool>>& checks) {
    const ShiftShape shape(4, 3);
    const MonomialOrder grevlex = MonomialOrder::grevlex(3);
    const FieldSpec q = FieldSpec::rationals();

    const std::vector<std::pair<std::string, std::string>> table = {
        {"{1,2}", "x1^2"},          {"{1,3}", "x1*x2"}, {"{1,4}", "x1*x3"},
        {"{2,3}", "x2^2 - x1*x3"},  {"{2,4}", "x2*x3"}, {"{3,4}", "x3^2"},
    };
    const std::vector<Minor> minors = enumerate_minors(shape, grevlex, q);
    bool table_ok = minors.size() == table.size();
    for (std::size_t i = 0; table_ok && i < table.size(); ++i)
        table_ok = minors[i].columns.str() == table[i].first &&
                   minors[i].det.str() == table[i].second;
    checks.emplace_back("minor table (n=4, d=3)", table_ok);

    const GroebnerReport rep = check_buchberger(shape, grevlex, q);
    checks.emplace_back("grevlex basis certificate (n=4, d=3)",
                        rep.is_groebner_basis() && rep.lm_set_complete);

    const MonomialOrder grlex = MonomialOrder::grlex(3);
    const auto ce = membership_counterexample(shape, grlex, q);
    const bool ce_ok = ce.has_value() && ce->first.str() == "x2^2" && !ce->second.is_zero();
    checks.emplace_back("grlex counterexample x2^2 (n=4, d=3)", ce_ok);

    return table_ok;
}

int cmd_verify(const Options& o) {
    const ShiftShape shape(o.n, o.d);
    const FieldSpec fs = FieldSpec::from_token(o.field);
    const MonomialOrder grevlex = MonomialOrder::grevlex(shape.d);
    std::vector<std::pair<std::string, bool>> checks;

    fixed_example_checks(checks);

    Rng rng(o.seed);
    const LaplaceStats lap =
        run_laplace_trials(shape, grevlex, fs, o.trials, rng, o.minor_cap, o.det_cap);
    checks.emplace_back("laplace identity (" + std::to_string(o.trials) + " trials)",
                        lap.all_ok());

    checks.emplace_back("bijection roundtrip", run_bijection_check(shape).all_ok());

    bool lm_ok = true;
    for (const Minor& m : enumerate_minors(shape, grevlex, fs, o.minor_cap))
        lm_ok = lm_ok && m.det.leading_monomial() == leading_monomial_fast(m.columns);
    checks.emplace_back("leading-monomial coherence", lm_ok);

    bool all = true;
    for (const auto& [name, ok] : checks)
        all = all && ok;

    if (want_json(o)) {
        json j;
        j["n"] = o.n;
        j["d"] = o.d;
        j["field"] = fs.token();
        j["seed"] = o.seed;
        j["trials"] = o.trials;
        json arr = json::array();
        for (const auto& [name, ok] : checks) {
            json c;
            c["name"] = name;
            c["status"] = ok ? "pass" : "fail";
            arr.push_back(std::move(c));
        }
        j["checks"] = std::move(arr);
        j["verdict"] = all ? "pass" : "fail";
        emit(j);
    } else {
        std::cout << "n=" << o.n << " d=" << o.d << " field=" << fs.token()
                  << " seed=" << o.seed << "\n";
        for (const auto& [name, ok] : checks)
            std::cout << "[" << (ok ? "ok" : "FAIL") << "] " << name << "\n";
        std::cout << "verify: " << (all ? "all checks passed" : "FAILED") << "\n";
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    using namespace shiftgb;

    CLI::App app{"shiftgb: maximal minors of the cyclic-shift matrix, their Groebner "
                 "certificate, and constructive basis completion"};
    app.require_subcommand(1);
    Options o;

    const auto add_shape = [&](CLI::App* cmd) {
        cmd->add_option("--n", o.n, "ambient dimension n")->required();
        cmd->add_option("--d", o.d, "window size d (1 <= d <= n)")->required();
    };
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "output format: text or json");
        cmd->add_option("--minor-cap", o.minor_cap, "maximum number of minors to enumerate");
    };

    CLI::App* minors =
        app.add_subcommand("minors", "list all maximal minors det X_H with leading monomials");
    add_shape(minors);
    minors->add_option("--order", o.order, "monomial order: lex, grlex, grevlex");
    minors->add_option("--field", o.field, "coefficient field: q or fp:<p>");
    add_common(minors);

    CLI::App* leading = app.add_subcommand("leading-set", "leading monomials of the minors");
    add_shape(leading);
    leading->add_option("--order", o.order, "monomial order: lex, grlex, grevlex");
    add_common(leading);

    CLI::App* checkgb =
        app.add_subcommand("check-groebner", "Buchberger certificate for the minors");
    add_shape(checkgb);
    checkgb->add_option("--order", o.order, "monomial order: lex, grlex, grevlex");
    checkgb->add_option("--field", o.field, "coefficient field: q or fp:<p>");
    add_common(checkgb);

    CLI::App* complete =
        app.add_subcommand("complete-basis", "complete F to a basis by shifts of one vector");
    complete->add_option("--input", o.input, "instance JSON file")->required();
    complete->add_option("--n", o.n, "ambient dimension n (validated against the file)");
    complete->add_option("--d", o.d, "window size d (validated against the file)");
    CLI::Option* field_opt =
        complete->add_option("--field", o.field, "expected field (validated against the file)");
    complete->add_option("--strategy", o.strategy, "search strategy: grid or random");
    complete->add_option("--seed", o.seed, "random seed");
    complete->add_option("--max-attempts", o.max_attempts, "attempt cap for the search");
    add_common(complete);

    CLI::App* laplace = app.add_subcommand("laplace-check", "test the Laplace expansion of det M");
    add_shape(laplace);
    laplace->add_option("--order", o.order, "monomial order: lex, grlex, grevlex");
    laplace->add_option("--field", o.field, "coefficient field: q or fp:<p>");
    laplace->add_option("--seed", o.seed, "random seed");
    laplace->add_option("--trials", o.trials, "number of random F matrices");
    laplace->add_option("--det-cap", o.det_cap, "side cap for the direct symbolic determinant");
    add_common(laplace);

    CLI::App* bijection =
        app.add_subcommand("bijection-check", "column sets <-> degree-(n-d+1) monomials");
    add_shape(bijection);
    add_common(bijection);

    CLI::App* verify = app.add_subcommand("verify", "batch identity checks");
    add_shape(verify);
    verify->add_option("--field", o.field, "coefficient field: q or fp:<p>");
    verify->add_option("--seed", o.seed, "random seed");
    verify->add_option("--trials", o.trials, "number of random F matrices");
    verify->add_option("--det-cap", o.det_cap, "side cap for the direct symbolic determinant");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (minors->parsed())
            return cmd_minors(o);
        if (leading->parsed())
            return cmd_leading_set(o);
        if (checkgb->parsed())
            return cmd_check_groebner(o);
        if (complete->parsed())
            return cmd_complete_basis(o, field_opt->count() > 0);
        if (laplace->parsed())
            return cmd_laplace_check(o);
        if (bijection->parsed())
            return cmd_bijection_check(o);
        if (verify->parsed())
            return cmd_verify(o);
        std::cerr << "error: no command\n";
        return 2;
    } catch (const rank_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const search_exhausted_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
