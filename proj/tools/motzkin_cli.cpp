#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "motzkin/bijections.hpp"
#include "motzkin/builders.hpp"
#include "motzkin/formulas.hpp"
#include "motzkin/verifier.hpp"
#include "motzkin/word.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

motzkin::TruncSeries build_series(const std::string& name, int order, int i) {
    using namespace motzkin;
    if (name == "M") return motzkin_gf(order);
    if (name == "T") return trinomial_gf(order);
    if (name == "S") return S_xp(order);
    if (name == "A_pv") return A_xpv(order);
    if (name == "A_v") return A_xv_lastsymbol(order);
    if (name == "U") return U_xq(order);
    if (name == "CF") return continued_fraction_xq(order);
    if (name == "Hint") return H_interior_xq(order);
    if (name == "Hi") return H_i_xq(i, order);
    if (name == "Bi") return B_i_gf(i, order);
    if (name == "g") return lastsym_total_gf(order);
    if (name == "s-total") return total_sper_gf(order);
    if (name == "u-total") return total_area_gf(order);
    if (name == "int-total") return total_inter_gf(order);
    throw CLI::ValidationError("--name", "unknown series '" + name + "'");
}

std::vector<motzkin::BigInt> sequence_values(const std::string& name, int rows, int& first_index) {
    using namespace motzkin;
    std::vector<BigInt> out;
    first_index = 1;
    if (name == "m") {
        first_index = 0;
        for (int n = 0; n <= rows; ++n) out.push_back(motzkin_number(n));
    } else if (name == "g") {
        for (int n = 1; n <= rows; ++n) out.push_back(lastsym_total(n));
    } else if (name == "s-total") {
        for (int n = 1; n <= rows; ++n) out.push_back(s_total(n));
    } else if (name == "u-total") {
        for (int n = 1; n <= rows; ++n) out.push_back(u_total(n));
    } else if (name == "int-total") {
        for (int n = 1; n <= rows; ++n) out.push_back(int_total(n));
    } else if (name == "T") {
        first_index = 0;
        for (int n = 0; n <= rows; ++n) out.push_back(central_trinomial(n));
    } else {
        throw CLI::ValidationError("--name", "unknown sequence '" + name + "'");
    }
    return out;
}

motzkin::StatTable build_table(const std::string& name, int rows) {
    using namespace motzkin;
    if (name == "m") return m_table(rows);
    if (name == "s") return s_table(rows);
    if (name == "u") return u_table(rows);
    if (name == "h") return h_table(rows);
    if (name == "T") return trinomial_table(rows);
    throw CLI::ValidationError("--name", "unknown table '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumeration, statistics, series and bijection toolkit for Motzkin "
                 "words and their bottom-justified polyominoes"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "list all words of a given length");
    int en_n = 0, en_last = 0;
    std::string en_format = "lines";
    long long en_cap = motzkin::EnumLimits{}.max_count;
    cmd_enum->add_option("--n", en_n, "word length")->required();
    auto* en_last_opt = cmd_enum->add_option("--last", en_last, "restrict to last symbol");
    cmd_enum->add_option("--format", en_format)->check(CLI::IsMember({"lines", "json"}));
    cmd_enum->add_option("--cap", en_cap, "enumeration object cap");

    // stats
    auto* cmd_stats = app.add_subcommand("stats", "statistics of one word or a histogram");
    std::string st_word;
    int st_n = 0;
    std::string st_stat;
    bool st_hist = false;
    std::string st_format = "lines";
    auto* st_word_opt = cmd_stats->add_option("--word", st_word, "word, e.g. 12341");
    auto* st_n_opt = cmd_stats->add_option("--n", st_n, "length for the histogram");
    cmd_stats->add_option("--stat", st_stat)->check(CLI::IsMember({"area", "sper", "inter", "last"}));
    cmd_stats->add_flag("--histogram", st_hist, "value -> count over all words of length n");
    cmd_stats->add_option("--format", st_format)->check(CLI::IsMember({"lines", "json"}));

    // table
    auto* cmd_table = app.add_subcommand("table", "integer triangles");
    std::string tb_name, tb_format = "csv";
    int tb_rows = 0;
    cmd_table->add_option("--name", tb_name)->required()->check(CLI::IsMember({"m", "s", "u", "h", "T"}));
    cmd_table->add_option("--rows", tb_rows)->required();
    cmd_table->add_option("--format", tb_format)->check(CLI::IsMember({"csv", "json"}));

    // series
    auto* cmd_series = app.add_subcommand("series", "expand a generating function");
    std::string se_name, se_format = "text";
    int se_order = 0, se_i = 1;
    cmd_series->add_option("--name", se_name)->required()
        ->check(CLI::IsMember({"M", "T", "S", "A_pv", "A_v", "U", "CF", "Hint", "Hi", "Bi", "g",
                               "s-total", "u-total", "int-total"}));
    cmd_series->add_option("--order", se_order)->required();
    cmd_series->add_option("--i", se_i, "level index for Hi/Bi");
    cmd_series->add_option("--format", se_format)->check(CLI::IsMember({"text", "json"}));

    // bijection
    auto* cmd_bij = app.add_subcommand("bijection", "apply one of the bijections");
    std::string bj_map, bj_input, bj_format = "lines";
    bool bj_inverse = false;
    cmd_bij->add_option("--map", bj_map)->required()->check(CLI::IsMember({"psi", "phi", "luka", "dyck"}));
    cmd_bij->add_option("--input", bj_input)->required();
    cmd_bij->add_flag("--inverse", bj_inverse);
    cmd_bij->add_option("--format", bj_format)->check(CLI::IsMember({"lines", "json"}));

    // render
    auto* cmd_render = app.add_subcommand("render", "ASCII drawing of the polyomino");
    std::string rd_word;
    cmd_render->add_option("--word", rd_word)->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the cross-check suite");
    int vf_n = 12;
    std::string vf_only;
    bool vf_timing = false;
    cmd_verify->add_option("--n", vf_n, "exhaustive length bound");
    cmd_verify->add_option("--only", vf_only, "comma-separated subset of checks");
    cmd_verify->add_flag("--timing", vf_timing, "include wall times in the report");

    // asymptotic
    auto* cmd_asym = app.add_subcommand("asymptotic", "exact value vs asymptotic formula");
    std::string as_name;
    int as_n = 0;
    cmd_asym->add_option("--name", as_name)->required()
        ->check(CLI::IsMember({"gn", "sn", "un", "intn", "expected-last", "expected-sper",
                               "expected-inter"}));
    cmd_asym->add_option("--n", as_n)->required();

    // export
    auto* cmd_export = app.add_subcommand("export", "sequence export");
    std::string ex_name, ex_format = "bfile";
    int ex_rows = 0;
    cmd_export->add_option("--name", ex_name)->required()
        ->check(CLI::IsMember({"m", "g", "s-total", "u-total", "int-total", "T"}));
    cmd_export->add_option("--rows", ex_rows)->required();
    cmd_export->add_option("--format", ex_format)->check(CLI::IsMember({"bfile", "csv", "json"}));

    // let --out (held by the parent) appear after the subcommand name
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    std::ostringstream out;
    int exit_code = kExitOk;
    try {
        using namespace motzkin;
        EnumLimits limits;

        if (cmd_enum->parsed()) {
            limits.max_count = en_cap;
            auto words = en_last_opt->count() ? generate_by_last(en_n, en_last, limits)
                                              : generate_all(en_n, limits);
            if (en_format == "json") {
                ordered_json j;
                j["n"] = en_n;
                if (en_last_opt->count()) j["last"] = en_last;
                j["count"] = words.size();
                j["words"] = ordered_json::array();
                for (const auto& w : words) j["words"].push_back(w.str());
                out << j.dump(2) << '\n';
            } else {
                for (const auto& w : words) out << w.str() << '\n';
            }
        } else if (cmd_stats->parsed()) {
            if (st_word_opt->count()) {
                PolyominoStats st = stats(MotzkinWord::parse(st_word));
                if (st_format == "json") {
                    ordered_json j{{"word", st_word},   {"length", st.length},
                                   {"area", st.area},   {"sper", st.sper},
                                   {"inter", st.inter}, {"last", st.last}};
                    out << j.dump(2) << '\n';
                } else {
                    out << "area=" << st.area << " sper=" << st.sper << " inter=" << st.inter
                        << " last=" << st.last << '\n';
                }
            } else if (st_n_opt->count() && st_hist && !st_stat.empty()) {
                auto hist = stat_histogram(st_n, st_stat);
                if (st_format == "json") {
                    ordered_json j;
                    for (const auto& [value, count] : hist) j[std::to_string(value)] = count;
                    out << j.dump(2) << '\n';
                } else {
                    for (const auto& [value, count] : hist) out << value << ' ' << count << '\n';
                }
            } else {
                throw CLI::ValidationError(
                    "stats", "pass either --word or (--n, --stat, --histogram)");
            }
        } else if (cmd_table->parsed()) {
            StatTable t = build_table(tb_name, tb_rows);
            int n_lo = (tb_name == "T") ? 0 : 1;
            auto upper = [&](int n) { return tb_name == "T" ? 2 * n : n; };
            if (tb_format == "json") {
                ordered_json j;
                j["name"] = t.name;
                j["rows"] = ordered_json::array();
                for (int n = n_lo; n <= tb_rows; ++n) {
                    ordered_json row = ordered_json::array();
                    for (int i = (tb_name == "T" ? 0 : 1); i <= upper(n); ++i)
                        row.push_back(t.at(n, i).str());
                    j["rows"].push_back(std::move(row));
                }
                out << j.dump(2) << '\n';
            } else {
                out << "n,i,value\n";
                for (int n = n_lo; n <= tb_rows; ++n)
                    for (int i = (tb_name == "T" ? 0 : 1); i <= upper(n); ++i)
                        out << n << ',' << i << ',' << t.at(n, i).str() << '\n';
            }
        } else if (cmd_series->parsed()) {
            if ((se_name == "Hi" || se_name == "Bi") && se_i < 1)
                throw CLI::ValidationError("--i", "level index must be >= 1");
            TruncSeries s = build_series(se_name, se_order, se_i);
            if (se_format == "json")
                out << series_to_json(s) << '\n';
            else
                out << s.str() << '\n';
        } else if (cmd_bij->parsed()) {
            std::string result;
            if (bj_map == "psi") {
                result = bj_inverse
                             ? psi_inv(LatticePath::parse(PathKind::Motzkin, bj_input)).str()
                             : psi(MotzkinWord::parse(bj_input)).str();
            } else if (bj_map == "phi") {
                if (bj_inverse)
                    throw CLI::ValidationError("--inverse", "phi inverse is not provided");
                result = phi(RestrictedCatalanWord::parse(bj_input)).str();
            } else if (bj_map == "luka") {
                result = bj_inverse
                             ? from_lukasiewicz(LatticePath::parse(PathKind::Lukasiewicz, bj_input)).str()
                             : to_lukasiewicz(MotzkinWord::parse(bj_input)).str();
            } else {
                result = bj_inverse
                             ? from_dyck_udu(LatticePath::parse(PathKind::Dyck, bj_input)).str()
                             : to_dyck_udu(MotzkinWord::parse(bj_input)).str();
            }
            if (bj_format == "json") {
                ordered_json j{{"input", bj_input},
                               {"map", bj_map + (bj_inverse ? "^-1" : "")},
                               {"output", result}};
                out << j.dump(2) << '\n';
            } else {
                out << result << '\n';
            }
        } else if (cmd_render->parsed()) {
            std::string art = render_ascii(MotzkinWord::parse(rd_word));
            out << art;
            if (!art.empty()) out << '\n';
        } else if (cmd_verify->parsed()) {
            std::set<std::string> only;
            std::stringstream ss(vf_only);
            for (std::string item; std::getline(ss, item, ',');) {
                if (item.empty()) continue;
                const auto& known = suite_check_names();
                if (std::find(known.begin(), known.end(), item) == known.end())
                    throw CLI::ValidationError("--only", "unknown check '" + item + "'");
                only.insert(item);
            }
            CheckReport report = run_suite(vf_n, only);
            out << report.to_json(vf_timing) << '\n';
            if (!report.all_pass()) exit_code = kExitCheckFailure;
        } else if (cmd_asym->parsed()) {
            AsymptoticPoint pt = asymptotic(as_name, as_n);
            out << "exact=" << pt.exact << " asymptotic=" << pt.asymptotic
                << " ratio=" << pt.ratio << '\n';
        } else if (cmd_export->parsed()) {
            int first = 1;
            auto values = sequence_values(ex_name, ex_rows, first);
            if (ex_format == "bfile") {
                for (std::size_t i = 0; i < values.size(); ++i)
                    out << first + static_cast<int>(i) << ' ' << values[i].str() << '\n';
            } else if (ex_format == "csv") {
                out << "n,value\n";
                for (std::size_t i = 0; i < values.size(); ++i)
                    out << first + static_cast<int>(i) << ',' << values[i].str() << '\n';
            } else {
                ordered_json j;
                j["name"] = ex_name;
                j["offset"] = first;
                j["values"] = ordered_json::array();
                for (const auto& value : values) j["values"].push_back(value.str());
                out << j.dump(2) << '\n';
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const motzkin::InvalidWord& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const motzkin::InvalidCatalanWord& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const motzkin::MalformedPath& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const motzkin::ContainsUDU& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const motzkin::NotPrimitive& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const motzkin::HasFlatStep& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const motzkin::ResourceLimit& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailure;
    }

    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << '\n';
            return kExitCheckFailure;
        }
        file << out.str();
    } else {
        std::cout << out.str();
    }
    return exit_code;
}
