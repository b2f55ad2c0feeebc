// Command-line front end: every computation exposed with deterministic,
// machine-readable output. Exit codes: 0 ok, 2 usage, 3 domain, 4 capacity.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "latinpp/groebner.hpp"
#include "latinpp/ideals.hpp"
#include "latinpp/latin.hpp"
#include "latinpp/pp.hpp"
#include "latinpp/reference.hpp"

using json = nlohmann::json;
using namespace latinpp;

namespace {

json field_info(const Field& field) {
    return {{"p", field.characteristic()},
            {"k", field.degree()},
            {"q", field.order()},
            {"modulus", field.modulus()}};
}

json counts_to_json(const std::map<int, long long>& counts) {
    json j = json::object();
    for (const auto& [d, n] : counts) j[std::to_string(d)] = n;
    return j;
}

json isotopism_to_json(const Isotopism& iso, const Field& field) {
    auto polys = iso.to_polynomials(field);
    return {{"row", polys[0].str()},
            {"col", polys[1].str()},
            {"sym", polys[2].str()},
            {"row_table", iso.row},
            {"col_table", iso.col},
            {"sym_table", iso.sym}};
}

struct Report {
    std::string command;
    json field;
    json payload;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void emit() const {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        json out = {{"command", command},
                    {"field", field},
                    {"payload", payload},
                    {"wall_ms", ms}};
        std::cout << out.dump(2) << "\n";
    }
};

BiPoly parse_bipoly(const Field& field, const std::string& text) {
    return BiPoly::parse(field, text);
}

int run(int argc, char** argv) {
    CLI::App app{"Latin squares of prime power order via local permutation polynomials"};
    app.require_subcommand(1);

    std::string command_echo;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) command_echo += ' ';
        command_echo += argv[i];
    }

    // ---- count-pp ----
    auto* count_pp = app.add_subcommand(
        "count-pp", "Count permutation polynomials per degree");
    int cp_q = 0;
    int cp_degree = -1;
    bool cp_normalized = false, cp_allow_large = false;
    std::string cp_method = "brute", cp_format = "json";
    count_pp->add_option("--q", cp_q, "field order")->required();
    count_pp->add_option("--degree", cp_degree, "restrict to one degree");
    count_pp->add_flag("--normalized", cp_normalized,
                       "count monic polynomials without constant term and scale back");
    count_pp->add_option("--method", cp_method, "brute|groebner")
        ->check(CLI::IsMember({"brute", "groebner"}));
    count_pp->add_flag("--allow-large", cp_allow_large, "permit q=11 enumeration");
    count_pp->add_option("--format", cp_format)->check(CLI::IsMember({"json", "csv"}));
    size_t cp_budget = GroebnerOptions{}.spair_budget;
    count_pp->add_option("--budget", cp_budget, "S-pair reduction budget");

    // ---- census ----
    auto* census_cmd = app.add_subcommand(
        "census", "Count local permutation polynomials per total degree");
    int cs_q = 0;
    bool cs_symmetric = false, cs_reduced = false;
    std::string cs_format = "json";
    census_cmd->add_option("--q", cs_q, "field order")->required();
    census_cmd->add_flag("--symmetric", cs_symmetric, "symmetric polynomials only");
    census_cmd->add_flag("--reduced", cs_reduced, "reduced polynomials only");
    census_cmd->add_option("--format", cs_format)->check(CLI::IsMember({"json", "csv"}));

    // ---- groebner ----
    auto* groebner_cmd = app.add_subcommand(
        "groebner", "Reduced Groebner basis, quotient dimension and variety");
    int gb_q = 0, gb_degree = -1;
    std::string gb_ideal, gb_order;
    bool gb_plain = false, gb_allow_large = false;
    size_t gb_budget = GroebnerOptions{}.spair_budget;
    groebner_cmd->add_option("--ideal", gb_ideal,
                             "pp|pp-deg|pp-norm|lpp|lpp-deg|symmetric|reduced")
        ->required();
    groebner_cmd->add_option("--q", gb_q, "field order")->required();
    groebner_cmd->add_option("--degree", gb_degree, "degree restriction");
    groebner_cmd->add_option("--order", gb_order, "lex|degrevlex")->required();
    groebner_cmd->add_flag("--plain", gb_plain,
                           "use the raw section generators instead of the substituted basis");
    groebner_cmd->add_flag("--allow-large", gb_allow_large, "permit 16-variable ideals");
    groebner_cmd->add_option("--budget", gb_budget, "S-pair reduction budget");

    // ---- classify ----
    auto* classify_cmd =
        app.add_subcommand("classify", "Partition all LPPs into isotopism classes");
    int cl_q = 0;
    classify_cmd->add_option("--q", cl_q, "field order")->required();

    // ---- reduce ----
    auto* reduce_cmd = app.add_subcommand(
        "reduce", "Principal isotopism onto a reduced polynomial");
    int rd_q = 0;
    std::string rd_poly, rd_at;
    reduce_cmd->add_option("--poly", rd_poly, "bivariate polynomial")->required();
    reduce_cmd->add_option("--q", rd_q, "field order")->required();
    reduce_cmd->add_option("--at", rd_at, "zero of f as 'a,b' (default: least zero)");

    // ---- complete-mappings ----
    auto* cm_cmd = app.add_subcommand("complete-mappings",
                                      "Complete mappings and orthomorphisms of an LPP");
    int cm_q = 0;
    std::string cm_poly;
    cm_cmd->add_option("--poly", cm_poly, "bivariate polynomial")->required();
    cm_cmd->add_option("--q", cm_q, "field order")->required();

    // ---- transversals ----
    auto* tv_cmd = app.add_subcommand("transversals", "Transversals of a Latin square");
    std::string tv_file, tv_format = "json";
    bool tv_count_only = false;
    tv_cmd->add_option("--square", tv_file, "Latin square file")->required();
    tv_cmd->add_flag("--count-only", tv_count_only, "report the count only");
    tv_cmd->add_option("--format", tv_format)->check(CLI::IsMember({"json", "text"}));

    // ---- isotopic ----
    auto* iso_cmd = app.add_subcommand("isotopic", "Search for an isotopism between two LPPs");
    int is_q = 0;
    std::string is_f, is_g;
    iso_cmd->add_option("--f", is_f, "first polynomial")->required();
    iso_cmd->add_option("--g", is_g, "second polynomial")->required();
    iso_cmd->add_option("--q", is_q, "field order")->required();

    // ---- conjugates ----
    auto* cj_cmd = app.add_subcommand("conjugates", "The six conjugates of an LPP");
    int cj_q = 0;
    std::string cj_poly;
    cj_cmd->add_option("--poly", cj_poly, "bivariate polynomial")->required();
    cj_cmd->add_option("--q", cj_q, "field order")->required();

    // ---- verify-tables ----
    auto* vt_cmd = app.add_subcommand(
        "verify-tables", "Recompute the published census tables cell by cell");
    int vt_table = 0;
    bool vt_allow_large = false;
    std::string vt_format = "json";
    vt_cmd->add_option("--table", vt_table, "1 (PP counts) or 2 (LPP counts)")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    vt_cmd->add_flag("--allow-large", vt_allow_large, "include the q=11 row");
    vt_cmd->add_option("--format", vt_format)->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Report report;
    report.command = command_echo;

    if (*count_pp) {
        const Field& field = Field::of(cp_q);
        report.field = field_info(field);
        json payload{{"q", cp_q}, {"method", cp_method}};
        std::map<int, long long> counts;
        if (cp_method == "brute") {
            if (cp_normalized)
                throw usage_error("--normalized applies to the groebner method");
            counts = degree_census(field, cp_allow_large).counts;
        } else {
            if (cp_q > 8)
                throw capacity_error("groebner counting is limited to q <= 8");
            int lo = cp_degree >= 0 ? cp_degree : 1;
            int hi = cp_degree >= 0 ? cp_degree : cp_q - 2;
            for (int d = lo; d <= hi; ++d) {
                long long n;
                if (cp_normalized) {
                    n = normalized_pp_count(field, d, {cp_budget});
                } else {
                    Ideal ideal = build_ideal_pp_degree(field, d);
                    auto gb = reduce_basis(buchberger(
                        ideal.gens, pp_order(field, MonomialOrder::Kind::degrevlex),
                        {cp_budget}));
                    if (!gb.complete)
                        throw capacity_error(
                            "basis computation exhausted its step budget; raise "
                            "--budget or use --method brute");
                    n = quotient_dimension(gb);
                }
                if (n != 0) counts[d] = n;
            }
        }
        if (cp_degree >= 0) {
            long long n = counts.count(cp_degree) ? counts[cp_degree] : 0;
            payload["degree"] = cp_degree;
            payload["count"] = n;
        } else {
            payload["counts"] = counts_to_json(counts);
        }
        if (cp_normalized) payload["normalized"] = true;
        if (cp_format == "csv") {
            std::cout << "degree,count\n";
            for (const auto& [d, n] : counts)
                if (cp_degree < 0 || d == cp_degree)
                    std::cout << d << "," << n << "\n";
            return 0;
        }
        report.payload = payload;
        report.emit();
        return 0;
    }

    if (*census_cmd) {
        if (cs_symmetric && cs_reduced)
            throw usage_error("--symmetric and --reduced are mutually exclusive");
        const Field& field = Field::of(cs_q);
        report.field = field_info(field);
        LppCensus census = lpp_census(field);
        const auto& counts = cs_symmetric ? census.symmetric
                           : cs_reduced   ? census.reduced
                                          : census.all;
        if (cs_format == "csv") {
            std::cout << "degree,count\n";
            for (const auto& [d, n] : counts) std::cout << d << "," << n << "\n";
            return 0;
        }
        long long total = 0;
        for (const auto& [d, n] : counts) total += n;
        report.payload = {{"q", cs_q},
                          {"kind", cs_symmetric ? "symmetric"
                                 : cs_reduced   ? "reduced"
                                                : "all"},
                          {"counts", counts_to_json(counts)},
                          {"total", total}};
        report.emit();
        return 0;
    }

    if (*groebner_cmd) {
        const Field& field = Field::of(gb_q);
        report.field = field_info(field);
        if ((gb_ideal == "lpp" || gb_ideal == "lpp-deg" || gb_ideal == "symmetric" ||
             gb_ideal == "reduced") &&
            gb_q >= 5 && !gb_allow_large)
            throw capacity_error(
                "bivariate ideals at q >= 5 have 16+ variables; pass --allow-large");
        std::optional<int> degree;
        if (gb_degree >= 0) degree = gb_degree;
        Ideal ideal = build_named_ideal(field, gb_ideal, degree, !gb_plain);
        bool univariate = gb_ideal.rfind("pp", 0) == 0;
        MonomialOrder order =
            univariate ? pp_order(field, gb_order == "lex" ? MonomialOrder::Kind::lex
                                                           : MonomialOrder::Kind::degrevlex)
                       : lpp_order(field, gb_order == "lex" ? MonomialOrder::Kind::lex
                                                            : MonomialOrder::Kind::degrevlex);
        GroebnerBasis gb = reduce_basis(buchberger(ideal.gens, order, {gb_budget}));
        json payload{{"ideal", gb_ideal},
                     {"q", gb_q},
                     {"order", gb_order},
                     {"optimized", !gb_plain},
                     {"complete", gb.complete},
                     {"spairs", gb.spairs_reduced}};
        if (degree) payload["degree"] = *degree;
        payload["generators"] = serialize_basis(gb, /*suppress_free=*/false);
        payload["generators_displayed"] = serialize_basis(gb, /*suppress_free=*/true);
        if (gb.complete && is_zero_dimensional(gb)) {
            long long dim = quotient_dimension(gb);
            payload["dimension"] = dim;
            double points = 1;
            for (int i = 0; i < gb.ring->arity(); ++i) points *= gb_q;
            if (points <= 1e7 && dim <= 4096) {
                json var = json::array();
                for (const auto& z : variety(gb)) var.push_back(z);
                payload["variety"] = var;
            }
        }
        report.payload = payload;
        report.emit();
        return 0;
    }

    if (*classify_cmd) {
        const Field& field = Field::of(cl_q);
        report.field = field_info(field);
        auto classes = isotopism_classes(field);
        json arr = json::array();
        for (const auto& c : classes)
            arr.push_back({{"size", c.size}, {"representative", c.representative.str()}});
        report.payload = {{"q", cl_q},
                          {"class_count", classes.size()},
                          {"classes", arr}};
        report.emit();
        return 0;
    }

    if (*reduce_cmd) {
        const Field& field = Field::of(rd_q);
        report.field = field_info(field);
        BiPoly f = parse_bipoly(field, rd_poly);
        int a = -1, b = -1;
        if (!rd_at.empty()) {
            std::istringstream ss(rd_at);
            char comma;
            if (!(ss >> a >> comma >> b) || comma != ',')
                throw usage_error("--at expects 'a,b'");
        } else {
            for (int x = 0; x < rd_q && a < 0; ++x)
                for (int y = 0; y < rd_q; ++y)
                    if (f.eval(static_cast<uint8_t>(x), static_cast<uint8_t>(y)) == 0) {
                        a = x;
                        b = y;
                        break;
                    }
        }
        if (a < 0 || a >= rd_q || b < 0 || b >= rd_q)
            throw usage_error("zero location out of range");
        auto [rho, witness] = reduce_lpp(f, static_cast<uint8_t>(a), static_cast<uint8_t>(b));
        report.payload = {{"q", rd_q},
                          {"input", f.str()},
                          {"at", {a, b}},
                          {"reduced", rho.str()},
                          {"witness", isotopism_to_json(witness, field)}};
        report.emit();
        return 0;
    }

    if (*cm_cmd) {
        const Field& field = Field::of(cm_q);
        report.field = field_info(field);
        BiPoly f = parse_bipoly(field, cm_poly);
        auto cms = complete_mappings(f);
        auto orth = orthomorphisms(f);
        json cm_arr = json::array(), or_arr = json::array();
        for (const auto& g : cms) cm_arr.push_back(g.str());
        for (const auto& g : orth) or_arr.push_back(g.str());
        report.payload = {{"q", cm_q},
                          {"poly", f.str()},
                          {"count", cms.size()},
                          {"complete_mappings", cm_arr},
                          {"orthomorphisms", or_arr}};
        report.emit();
        return 0;
    }

    if (*tv_cmd) {
        std::ifstream in(tv_file);
        if (!in) throw usage_error("cannot open square file " + tv_file);
        LatinSquare square = read_square_any_order(in);
        report.field = field_info(square.field());
        if (tv_count_only) {
            report.payload = {{"q", square.order()},
                              {"count", transversal_count(square)}};
            report.emit();
            return 0;
        }
        auto list = transversals(square);
        if (tv_format == "text") {
            std::cout << "count=" << list.size() << "\n";
            for (const auto& t : list) {
                std::cout << "\n";
                write_transversal(std::cout, t);
            }
            return 0;
        }
        json arr = json::array();
        for (const auto& t : list) {
            json cells = json::array();
            for (const auto& c : t.cells) cells.push_back({c[0], c[1], c[2]});
            arr.push_back(cells);
        }
        report.payload = {{"q", square.order()},
                          {"count", list.size()},
                          {"transversals", arr}};
        report.emit();
        return 0;
    }

    if (*iso_cmd) {
        const Field& field = Field::of(is_q);
        report.field = field_info(field);
        BiPoly f = parse_bipoly(field, is_f);
        BiPoly g = parse_bipoly(field, is_g);
        auto witness = are_isotopic(f, g);
        json payload{{"q", is_q}, {"isotopic", witness.has_value()}};
        if (witness) payload["witness"] = isotopism_to_json(*witness, field);
        report.payload = payload;
        report.emit();
        return 0;
    }

    if (*cj_cmd) {
        const Field& field = Field::of(cj_q);
        report.field = field_info(field);
        BiPoly f = parse_bipoly(field, cj_poly);
        json arr = json::array();
        for (const auto& g : conjugates(f)) arr.push_back(g.str());
        report.payload = {{"q", cj_q},
                          {"poly", f.str()},
                          {"conjugates", arr},
                          {"totally_symmetric", is_totally_symmetric(f)}};
        report.emit();
        return 0;
    }

    if (*vt_cmd) {
        json cells = json::array(), findings = json::array();
        if (vt_table == 1) {
            for (const auto& row : reference::pp_census_table()) {
                if (row.q == 13 || (row.q == 11 && !vt_allow_large)) {
                    for (const auto& [d, published] : row.counts)
                        cells.push_back({{"q", row.q},
                                         {"d", d},
                                         {"published", published},
                                         {"status", "SKIPPED"}});
                    continue;
                }
                DegreeCensus census = degree_census(Field::of(row.q), vt_allow_large);
                std::map<int, long long> merged = row.counts;
                for (const auto& [d, n] : census.counts) merged.emplace(d, 0);
                for (const auto& [d, published] : merged) {
                    long long computed =
                        census.counts.count(d) ? census.counts.at(d) : 0;
                    long long pub =
                        row.counts.count(d) ? row.counts.at(d) : 0;
                    cells.push_back({{"q", row.q},
                                     {"d", d},
                                     {"published", pub},
                                     {"computed", computed},
                                     {"status", computed == pub ? "PASS" : "FAIL"}});
                }
                if (row.q == 8) {
                    long long partial = 0;
                    for (const auto& [d, n] : census.counts)
                        if (d <= 5) partial += n;
                    findings.push_back(
                        {{"q", 8},
                         {"what", "sum of counts for degree <= 5"},
                         {"computed", partial},
                         {"published_here", 5376},
                         {"published_elsewhere", 5368}});
                }
            }
        } else {
            for (const auto& row : reference::lpp_census_table()) {
                LppCensus census = lpp_census(Field::of(row.q));
                auto compare = [&](const char* kind,
                                   const std::map<int, long long>& published,
                                   const std::map<int, long long>& computed) {
                    std::map<int, long long> merged = published;
                    for (const auto& [d, n] : computed) merged.emplace(d, 0);
                    for (const auto& [d, ignored] : merged) {
                        long long pub = published.count(d) ? published.at(d) : 0;
                        long long com = computed.count(d) ? computed.at(d) : 0;
                        cells.push_back({{"q", row.q},
                                         {"kind", kind},
                                         {"d", d},
                                         {"published", pub},
                                         {"computed", com},
                                         {"status", com == pub ? "PASS" : "FAIL"}});
                    }
                };
                compare("all", row.all, census.all);
                compare("symmetric", row.symmetric, census.symmetric);
                compare("reduced", row.reduced, census.reduced);

                long long pub_total = 0, com_total = 0;
                for (const auto& [d, n] : row.all) pub_total += n;
                for (const auto& [d, n] : census.all) com_total += n;
                if (pub_total != com_total)
                    findings.push_back({{"q", row.q},
                                        {"what", "sum of the per-degree counts"},
                                        {"published", pub_total},
                                        {"computed", com_total}});
            }
        }
        if (vt_format == "csv") {
            std::cout << "q,kind,d,published,computed,status\n";
            for (const auto& c : cells)
                std::cout << c["q"] << ","
                          << (c.contains("kind") ? c["kind"].get<std::string>() : "pp")
                          << "," << c["d"] << "," << c["published"] << ","
                          << (c.contains("computed") ? c["computed"].dump() : "") << ","
                          << c["status"].get<std::string>() << "\n";
            return 0;
        }
        report.field = json::object();
        report.payload = {{"table", vt_table}, {"cells", cells}, {"findings", findings}};
        report.emit();
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 4;
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
