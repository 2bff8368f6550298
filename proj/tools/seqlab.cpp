// seqlab: generate, look up and tabulate integer sequences.

#include "seqlab/boustrophedon.hpp"
#include "seqlab/checks.hpp"
#include "seqlab/error.hpp"
#include "seqlab/extremal.hpp"
#include "seqlab/registry.hpp"
#include "seqlab/seqdb.hpp"
#include "seqlab/tchouka.hpp"
#include "seqlab/wythoff.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace seqlab;

namespace {

enum Exit { kOk = 0, kNoMatch = 1, kUsage = 2, kBudget = 3 };

struct Options {
    bool json = false;
    std::string db_path;
};

json terms_json(const std::vector<BigInt>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

std::string chain_text(const std::vector<SeekStep>& chain) {
    if (chain.empty()) return "identity";
    std::string s;
    for (SeekStep st : chain) s += (s.empty() ? "" : " then ") + std::string(to_string(st));
    return s;
}

SeqDatabase open_db(const Options& o) { return SeqDatabase::load(o.db_path.empty() ? default_database_path() : o.db_path); }

std::vector<BigInt> query_terms(const std::string& text) {
    try {
        return parse_terms(text);
    } catch (const Error& e) {
        throw CLI::ValidationError("terms", e.what());
    }
}

int cmd_gen(const Options& o, const std::string& key, std::size_t count) {
    const RegistryEntry* e = find_registered(key);
    if (!e) {
        std::cerr << "seqlab: unknown sequence '" << key << "'\n";
        return kUsage;
    }
    const auto terms = e->seq.terms(count);
    if (o.json) {
        std::cout << json{{"id", e->seq.id()},
                          {"name", e->name},
                          {"description", e->description},
                          {"offset", e->seq.offset()},
                          {"provenance", to_string(e->seq.provenance())},
                          {"terms", terms_json(terms)}}
                         .dump()
                  << '\n';
    } else {
        std::cout << e->seq.id() << ' ' << join(terms) << '\n';
    }
    return kOk;
}

int cmd_lookup(const Options& o, const std::string& text) {
    const auto q = query_terms(text);
    const SeqDatabase db = open_db(o);
    const LookupResult r = db.lookup(q);
    if (o.json) {
        json m = json::array();
        for (const auto& x : r.matches) m.push_back({{"id", x.id}, {"position", x.position}, {"exact", x.exact}});
        std::cout << json{{"query", terms_json(q)}, {"low_confidence", r.low_confidence}, {"matches", m}}.dump() << '\n';
    } else {
        if (r.low_confidence) std::cout << "# fewer than 3 terms: low confidence\n";
        for (const auto& x : r.matches) {
            std::cout << x.id << "  at term " << x.position << (x.exact ? "  (exact)" : "");
            if (const RegistryEntry* e = find_registered(x.id)) std::cout << "  " << e->description;
            std::cout << '\n';
        }
        if (r.matches.empty()) std::cout << "no match\n";
    }
    return r.matches.empty() ? kNoMatch : kOk;
}

int cmd_superseek(const Options& o, const std::string& text) {
    const auto q = query_terms(text);
    if (q.size() < 5 && !o.json) std::cout << "# fewer than 5 terms: expect spurious hits\n";
    const SeqDatabase db = open_db(o);
    const auto hits = superseek(db, q);
    if (o.json) {
        json m = json::array();
        for (const auto& h : hits) {
            json chain = json::array();
            for (SeekStep s : h.chain) chain.push_back(to_string(s));
            m.push_back({{"id", h.id}, {"chain", chain}, {"offset", h.offset}});
        }
        std::cout << json{{"query", terms_json(q)}, {"results", m}}.dump() << '\n';
    } else {
        for (const auto& h : hits) std::cout << h.id << "  via " << chain_text(h.chain) << "  at term " << h.offset << '\n';
        if (hits.empty()) std::cout << "no match\n";
    }
    return hits.empty() ? kNoMatch : kOk;
}

// Right-aligned columns.
void print_rows(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
        if (r.size() > width.size()) width.resize(r.size(), 0);
        for (std::size_t j = 0; j < r.size(); ++j) width[j] = std::max(width[j], r[j].size());
    }
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j) line += "  ";
            line += std::string(width[j] - r[j].size(), ' ') + r[j];
        }
        std::cout << line << '\n';
    }
}

int cmd_table(const Options& o, const std::string& which, std::size_t rows_opt) {
    json out;
    std::vector<std::vector<std::string>> text;
    auto rows_or = [&](std::size_t d) { return rows_opt ? rows_opt : d; };
    if (which == "fig3" || which == "fig4" || which == "fig5") {
        const std::size_t R = rows_or(which == "fig5" ? 6 : 9);
        text.push_back({"n", "Coefficient"});
        json arr = json::array();
        for (unsigned m = 0; m < R; ++m) {
            BigInt c = 1;
            if (m > 0) {
                if (which == "fig5") {
                    c = extremal_theta(24 * m, m + 1)[m + 1];
                } else {
                    LeadingCoeffs lc = extremal_leading_coeffs(m);
                    c = which == "fig3" ? lc.lead : lc.next;
                }
            }
            text.push_back({std::to_string(24 * m), c.get_str()});
            arr.push_back({{"n", 24 * m}, {"coefficient", c.get_str()}});
        }
        out = {{"table", which}, {"rows", arr}};
    } else if (which == "wythoff") {
        const std::size_t R = rows_or(8);
        const WythoffWindow w = wythoff_window(R - 1, 8, 1);
        json arr = json::array();
        for (std::size_t n = 0; n < R; ++n) {
            std::vector<std::string> line{w.index_column[n].get_str(), w.lower_column[n].get_str(), "|"};
            for (const auto& v : w.rows[n]) line.push_back(v.get_str());
            text.push_back(line);
            arr.push_back({{"index", w.index_column[n].get_str()},
                           {"lower", w.lower_column[n].get_str()},
                           {"row", terms_json(w.rows[n])}});
        }
        out = {{"table", which}, {"rows", arr}};
    } else if (which == "boustro") {
        const std::size_t R = rows_or(8);
        std::vector<BigInt> seed(R, 0);
        if (R) seed[0] = 1;
        const BoustroTriangle t = boustrophedon_triangle(seed);
        json arr = json::array();
        for (std::size_t n = 0; n < R; ++n) {
            std::vector<std::string> line(R - 1 - n, "");
            for (const auto& v : t.displayed(n)) line.push_back(v.get_str());
            text.push_back(line);
            arr.push_back(terms_json(t.displayed(n)));
        }
        out = {{"table", which}, {"rows", arr}};
    } else if (which == "tchouka") {
        const std::size_t R = rows_or(14);
        text.push_back({"n", "Position"});
        json arr = json::array();
        for (const auto& p : winning_positions(R - 1)) {
            text.push_back({std::to_string(p.n), p.digits()});
            arr.push_back({{"n", p.n}, {"position", p.digits()}});
        }
        out = {{"table", which}, {"rows", arr}};
    } else {
        std::cerr << "seqlab: unknown table '" << which << "'\n";
        return kUsage;
    }
    if (o.json) {
        std::cout << out.dump() << '\n';
    } else {
        print_rows(text);
    }
    return kOk;
}

int cmd_check(const Options& o, bool extended) {
    json arr = json::array();
    bool all = true;
    run_checks(extended, [&](const CheckResult& r) {
        all = all && r.passed;
        if (o.json) {
            arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
        } else {
            std::cout << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(22) << r.name << std::right
                      << std::fixed << std::setprecision(2) << std::setw(8) << r.seconds << "s  " << r.detail << '\n'
                      << std::flush;
        }
    });
    if (o.json) std::cout << json{{"passed", all}, {"checks", arr}}.dump() << '\n';
    return all ? kOk : kNoMatch;
}

int cmd_db(const Options& o, const std::string& path, const std::string& export_path) {
    if (!export_path.empty()) {
        std::ofstream f(export_path);
        if (!f) throw InvalidArgument("cannot write '" + export_path + "'");
        f << "# seqlab database: <ID> <comma-separated terms>\n";
        registry_database().write(f);
        if (!f) throw InvalidArgument("write to '" + export_path + "' failed");
        if (!o.json) std::cout << "wrote " << registry().size() << " sequences to " << export_path << '\n';
        else std::cout << json{{"exported", export_path}, {"entries", registry().size()}}.dump() << '\n';
        return kOk;
    }
    Options with_path = o;
    if (!path.empty()) with_path.db_path = path;
    const std::string used = with_path.db_path.empty() ? default_database_path() : with_path.db_path;
    const SeqDatabase db = SeqDatabase::load(used);
    std::size_t terms = 0;
    for (const auto& e : db.entries()) terms += e.terms.size();
    if (o.json) {
        json ids = json::array();
        for (const auto& e : db.entries()) ids.push_back(e.id);
        std::cout << json{{"path", used}, {"entries", db.size()}, {"terms", terms}, {"ids", ids}}.dump() << '\n';
    } else {
        std::cout << used << ": " << db.size() << " sequences, " << terms << " terms\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"seqlab: generate, look up and tabulate integer sequences"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_option("--db", o.db_path, "database file (default: $SEQLAB_DB or the shipped database)");

    std::string key, terms, table, db_path, export_path;
    std::size_t count = 10, rows = 0;
    bool extended = false;

    auto* gen = app.add_subcommand("gen", "print the first terms of a sequence");
    gen->add_option("sequence", key, "id (A5228) or name (hofstadter)")->required();
    gen->add_option("-n,--count", count, "number of terms")->check(CLI::Range(1, 1000000));
    auto* lookup = app.add_subcommand("lookup", "find sequences containing the terms");
    lookup->add_option("terms", terms, "comma-separated terms")->required();
    auto* seek = app.add_subcommand("superseek", "look up the terms and their transforms");
    seek->add_option("terms", terms, "comma-separated terms")->required();
    auto* tab = app.add_subcommand("table", "print a table");
    tab->add_option("name", table, "fig3, fig4, fig5, wythoff, boustro or tchouka")->required();
    tab->add_option("--rows", rows, "number of rows")->check(CLI::Range(1, 200));
    auto* check = app.add_subcommand("check", "run the invariant suites");
    check->add_flag("--extended", extended, "include the slow suites");
    auto* db = app.add_subcommand("db", "summarize a database file");
    db->add_option("--path", db_path, "database file");
    db->add_option("--export", export_path, "write the registry's database to this file");

    for (auto* sub : {gen, lookup, seek, tab, check, db}) {
        sub->add_flag("--json", o.json, "machine-readable output");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*gen) return cmd_gen(o, key, count);
        if (*lookup) return cmd_lookup(o, terms);
        if (*seek) return cmd_superseek(o, terms);
        if (*tab) return cmd_table(o, table, rows);
        if (*check) return cmd_check(o, extended);
        if (*db) return cmd_db(o, db_path, export_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "seqlab: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "seqlab: budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const CapacityExceeded& e) {
        std::cerr << "seqlab: budget exceeded: " << e.what() << " (raise SEQLAB_SIEVE_LIMIT)\n";
        return kBudget;
    } catch (const InvalidArgument& e) {
        std::cerr << "seqlab: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "seqlab: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "seqlab: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
