// Command-line front end: deterministic batch access to the library with
// machine-readable output. Exit codes: 0 success, 1 invalid parameters,
// 2 size/enumeration cap exceeded, 3 internal assertion or failed
// verification.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "petit/acceptance.hpp"
#include "petit/io.hpp"

namespace {

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", opts.out_path, "Write output to a file instead of stdout");
}

void emit(const OutputOptions& opts, const petit::Json& json, const std::string& text) {
    const std::string payload = opts.format == "json" ? json.dump(2) + "\n" : text;
    if (opts.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(opts.out_path, std::ios::binary);
        if (!out) throw petit::error("cannot open output file " + opts.out_path);
        out << payload;
    }
}

std::string verdict_text(const petit::IsoVerdict& v, const petit::FiniteField& top) {
    std::string s = std::string(petit::iso_status_name(v.status)) + " (" + v.reason + ")";
    if (v.witness)
        s += " witness tau=" + std::to_string(v.witness->tau_exponent) + ", k=" +
             petit::format_element(top, v.witness->k);
    return s + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twisted polynomial rings, Petit algebras, semifield classification, and the associated codes"};
    app.require_subcommand(1);

    std::uint64_t cap = 0;
    app.add_option("--size-cap", cap, "Override the enumeration size cap (default 2^20 or PETIT_SIZE_CAP)");

    // field
    auto* field_cmd = app.add_subcommand("field", "Construct F_q or the tower F_q in F_{q^n}");
    std::uint64_t fq = 0;
    unsigned fn = 1;
    OutputOptions field_out;
    field_cmd->add_option("--q", fq, "Field size, a prime power")->required();
    field_cmd->add_option("--n", fn, "Tower degree (default 1)");
    add_output_options(field_cmd, field_out);

    // algebra
    auto* algebra_cmd = app.add_subcommand("algebra", "Inspect S_f: flags, nuclei, division status");
    std::uint64_t aq = 0;
    unsigned an = 0, aj = 1, am = 0;
    std::string a_elt, f_coeffs;
    OutputOptions algebra_out;
    algebra_cmd->add_option("--q", aq)->required();
    algebra_cmd->add_option("--n", an)->required();
    algebra_cmd->add_option("--j", aj, "Generator exponent (default 1)");
    algebra_cmd->add_option("--m", am, "Degree of the modulus")->required();
    algebra_cmd->add_option("--a", a_elt, "Constant of t^m - a (element literal over K)");
    algebra_cmd->add_option("--f", f_coeffs, "Full monic modulus: semicolon-separated coefficients, constant first");
    add_output_options(algebra_cmd, algebra_out);

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "Isomorphism and isotopy verdicts for two algebras");
    std::uint64_t cq = 0;
    unsigned cn = 0, cm = 0, cj1 = 1, cj2 = 1;
    std::string ca1, ca2;
    OutputOptions classify_out;
    classify_cmd->add_option("--q", cq)->required();
    classify_cmd->add_option("--n", cn)->required();
    classify_cmd->add_option("--m", cm)->required();
    classify_cmd->add_option("--j1", cj1)->required();
    classify_cmd->add_option("--a1", ca1)->required();
    classify_cmd->add_option("--j2", cj2)->required();
    classify_cmd->add_option("--a2", ca2)->required();
    add_output_options(classify_cmd, classify_out);

    // census
    auto* census_cmd = app.add_subcommand("census", "Isomorphism classes of S_{t^m-a}, n = m");
    std::uint64_t sq = 0;
    unsigned sm = 0, sj = 1;
    OutputOptions census_out;
    census_cmd->add_option("--q", sq)->required();
    census_cmd->add_option("--m", sm)->required();
    census_cmd->add_option("--j", sj, "Generator exponent (default 1)");
    add_output_options(census_cmd, census_out);

    // parametrize
    auto* param_cmd = app.add_subcommand("parametrize", "Explicit transversals S(F_{q^m}) and S_2(F_{q^2})");
    std::uint64_t pq = 0;
    unsigned pm = 0, pj = 1;
    std::string pkind;
    OutputOptions param_out;
    param_cmd->add_option("--q", pq)->required();
    param_cmd->add_option("--m", pm)->required();
    param_cmd->add_option("--j", pj, "Generator exponent (default 1)");
    param_cmd->add_option("--kind", pkind, "S or S2 (default by m)")->check(CLI::IsMember({"S", "S2"}));
    add_output_options(param_cmd, param_out);

    // mrd
    auto* mrd_cmd = app.add_subcommand("mrd", "Build and verify the rank-metric codes of a division algebra");
    std::uint64_t mq = 0;
    unsigned mm = 0, mj = 1;
    std::string ma;
    bool include_words = false;
    OutputOptions mrd_out;
    mrd_cmd->add_option("--q", mq)->required();
    mrd_cmd->add_option("--m", mm)->required();
    mrd_cmd->add_option("--j", mj, "Generator exponent (default 1)");
    mrd_cmd->add_option("--a", ma, "Constant of t^m - a (element literal over K)")->required();
    mrd_cmd->add_flag("--codewords", include_words, "Include the full codeword list in the export");
    add_output_options(mrd_cmd, mrd_out);

    // constacyclic
    auto* consta_cmd = app.add_subcommand("constacyclic", "Skew constacyclic codes from right divisors of t^m - a");
    std::uint64_t kq = 0;
    unsigned kn = 0, kj = 1, km = 0;
    std::string ka;
    OutputOptions consta_out;
    consta_cmd->add_option("--q", kq)->required();
    consta_cmd->add_option("--n", kn)->required();
    consta_cmd->add_option("--j", kj, "Generator exponent (default 1)");
    consta_cmd->add_option("--m", km)->required();
    consta_cmd->add_option("--a", ka, "Constant (element literal over K)")->required();
    add_output_options(consta_cmd, consta_out);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run the full acceptance suite");
    OutputOptions verify_out;
    add_output_options(verify_cmd, verify_out);

    CLI11_PARSE(app, argc, argv);
    if (cap) petit::set_size_cap(cap);

    try {
        if (*field_cmd) {
            auto tower = petit::make_tower(fq, fn);
            petit::Json out{{"schema", petit::kSchemaVersion}};
            out.update(petit::tower_json(*tower));
            std::ostringstream text;
            text << "F_" << fq << " in F_" << tower->top().size() << ", degree " << fn << "\n"
                 << "base modulus coefficients (constant first): " << petit::Json(tower->base().modulus()).dump()
                 << "\n"
                 << "top modulus coefficients (constant first): " << petit::Json(tower->top().modulus()).dump()
                 << "\n";
            emit(field_out, out, text.str());
        } else if (*algebra_cmd) {
            auto tower = petit::make_tower(aq, an);
            std::shared_ptr<const petit::PetitAlgebra> A;
            if (!f_coeffs.empty()) {
                std::vector<std::uint32_t> coeffs;
                std::size_t start = 0;
                while (start <= f_coeffs.size()) {
                    std::size_t semi = f_coeffs.find(';', start);
                    std::string piece = f_coeffs.substr(start, semi == std::string::npos ? semi : semi - start);
                    coeffs.push_back(petit::parse_element(tower->top(), piece));
                    if (semi == std::string::npos) break;
                    start = semi + 1;
                }
                petit::SkewPoly f(petit::GaloisGenerator(tower, aj), coeffs);
                if (f.degree() != static_cast<int>(am)) throw petit::error("--m disagrees with the degree of --f");
                A = petit::PetitAlgebra::make(std::move(f));
            } else if (!a_elt.empty()) {
                A = petit::PetitAlgebra::make_cyclic(tower, aj, am, petit::parse_element(tower->top(), a_elt));
            } else {
                throw petit::error("one of --a or --f is required");
            }
            petit::Json out{{"schema", petit::kSchemaVersion}};
            out.update(petit::algebra_json(*A));
            petit::NucleusReport rep = petit::nuclei(A);
            out["nuclei"] = petit::Json{{"left_dim", rep.left.size()},
                                        {"middle_dim", rep.middle.size()},
                                        {"right_dim", rep.right.size()},
                                        {"center_dim", rep.center.size()}};
            if (A->binomial_a()) {
                out["nuclei"]["s"] = rep.s;
                out["nuclei"]["r"] = rep.r;
                if (rep.prediction_applicable) out["nuclei"]["right_matches_prediction"] = rep.prediction_matches;
                out["prechecks"] = petit::precheck_json(petit::division_prechecks(A));
            }
            bool division = petit::is_division(A);
            out["division"] = division;
            std::ostringstream text;
            text << "S_f over F_" << tower->top().size() << ", m=" << A->m() << ", j=" << aj << "\n"
                 << "proper: " << (A->proper() ? "yes" : "no") << ", division: " << (division ? "yes" : "no") << "\n"
                 << "nuclei dims (l,m,r,c): " << rep.left.size() << "," << rep.middle.size() << ","
                 << rep.right.size() << "," << rep.center.size() << "\n";
            emit(algebra_out, out, text.str());
        } else if (*classify_cmd) {
            auto tower = petit::make_tower(cq, cn);
            std::uint32_t a1 = petit::parse_element(tower->top(), ca1);
            std::uint32_t a2 = petit::parse_element(tower->top(), ca2);
            auto A = petit::PetitAlgebra::make_cyclic(tower, cj1, cm, a1);
            auto B = petit::PetitAlgebra::make_cyclic(tower, cj2, cm, a2);
            petit::IsoVerdict iso = petit::cross_generator_verdict(A, B);
            petit::Json out{{"schema", petit::kSchemaVersion},
                            {"isomorphism", petit::iso_verdict_json(iso, tower->top())}};
            std::ostringstream text;
            text << "isomorphism: " << verdict_text(iso, tower->top());
            if (cn == cm && cm >= 3) {
                petit::IsotopyVerdict isot = petit::isotopy_verdict(A, B);
                out["isotopy"] = petit::isotopy_verdict_json(isot, tower->top());
                text << "isotopy: " << petit::isotopy_status_name(isot.status) << " (" << isot.reason << ")\n";
            }
            emit(classify_out, out, text.str());
        } else if (*census_cmd) {
            petit::CensusResult result = petit::census(sq, sm, sj);
            auto tower = petit::make_tower(sq, sm);
            std::ostringstream text;
            text << "census q=" << sq << " m=" << sm << " j=" << sj << ": " << result.class_count << " classes";
            if (result.formula_count) text << " (formula: " << *result.formula_count << ")";
            text << "\nrepresentatives:";
            for (auto rep : result.representatives) text << " " << petit::format_element(tower->top(), rep);
            text << "\n";
            emit(census_out, petit::census_json(result), text.str());
        } else if (*param_cmd) {
            if (pkind.empty()) pkind = pm == 2 ? "S2" : "S";
            petit::Json out;
            std::ostringstream text;
            if (pkind == "S2") {
                if (pm != 2) throw petit::error("kind S2 requires m = 2");
                petit::S2Sets sets = petit::parametrize_S2(pq);
                out = petit::Json{{"schema", petit::kSchemaVersion},
                                  {"S2", petit::param_set_json(sets.s2)},
                                  {"S2_prime", petit::param_set_json(sets.s2_prime)}};
                auto tower = petit::make_tower(pq, 2);
                text << "S_2(F_" << tower->top().size() << "): " << sets.s2.members.size() << " members\n";
                for (const auto& member : sets.s2.members)
                    text << "  " << petit::format_element(tower->top(), member.value) << "\n";
            } else {
                petit::ParamSet set = petit::parametrize_S(pq, pm, pj);
                out = petit::param_set_json(set);
                auto tower = petit::make_tower(pq, pm);
                text << "S(F_" << tower->top().size() << "): " << set.members.size() << " members\n";
                for (const auto& member : set.members)
                    text << "  " << petit::format_element(tower->top(), member.value) << "\n";
            }
            emit(param_out, out, text.str());
        } else if (*mrd_cmd) {
            auto tower = petit::make_tower(mq, mm);
            std::uint32_t a = petit::parse_element(tower->top(), ma);
            auto A = petit::PetitAlgebra::make_cyclic(tower, mj, mm, a);
            petit::RankCode code = petit::build_rank_code(A);
            petit::MrdReport report = petit::mrd_check(code);
            petit::RankCode expanded = petit::expand_rank_code(A);
            petit::MrdReport expanded_report = petit::mrd_check(expanded);
            petit::Json out{{"schema", petit::kSchemaVersion}, {"algebra", petit::algebra_json(*A)}};
            petit::Json small = petit::rank_code_json(code, include_words);
            small["verified"] = petit::mrd_report_json(report);
            petit::Json big = petit::rank_code_json(expanded, include_words);
            big["verified"] = petit::mrd_report_json(expanded_report);
            out["code"] = std::move(small);
            out["expanded"] = std::move(big);
            std::ostringstream text;
            text << "C_{sigma,a} in M_" << code.ambient_size << "(F_" << code.ambient_field->size() << "): "
                 << report.cardinality << " codewords, min rank distance " << report.min_distance
                 << (report.pass ? " (MRD)" : " (NOT MRD)") << "\n";
            text << "expanded in M_" << expanded.ambient_size << "(F_" << expanded.ambient_field->size() << "): "
                 << expanded_report.cardinality << " codewords, min rank distance " << expanded_report.min_distance
                 << (expanded_report.pass ? " (MRD)" : " (NOT MRD)") << "\n";
            text << "sample codeword R(t):\n"
                 << petit::matrix_text(petit::right_mult_matrix_K(A, A->t_power(1)));
            emit(mrd_out, out, text.str());
        } else if (*consta_cmd) {
            auto tower = petit::make_tower(kq, kn);
            std::uint32_t a = petit::parse_element(tower->top(), ka);
            auto codes = petit::list_constacyclic(tower, kj, km, a);
            petit::Json arr = petit::Json::array();
            for (const auto& code : codes) arr.push_back(petit::consta_code_json(code));
            petit::Json out{{"schema", petit::kSchemaVersion},
                            {"q", kq},
                            {"n", kn},
                            {"j", kj},
                            {"m", km},
                            {"a", petit::element_json(tower->top(), a)},
                            {"codes", std::move(arr)}};
            std::ostringstream text;
            text << codes.size() << " skew constacyclic codes from right divisors of t^" << km << " - "
                 << petit::format_element(tower->top(), a) << "\n";
            for (const auto& code : codes)
                text << "  [" << code.length << "," << code.length - code.divisor_degree << "] d="
                     << code.min_hamming_distance << " g has degree " << code.divisor_degree << "\n";
            emit(consta_out, out, text.str());
        } else if (*verify_cmd) {
            auto results = petit::acceptance::run_all();
            bool all_pass = true;
            petit::Json arr = petit::Json::array();
            std::ostringstream text;
            for (const auto& r : results) {
                all_pass = all_pass && r.pass;
                arr.push_back(petit::Json{{"id", r.id},
                                          {"name", r.name},
                                          {"pass", r.pass},
                                          {"detail", r.detail},
                                          {"seconds", r.seconds}});
                text << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "  (" << r.detail << ")\n";
            }
            petit::Json out{{"schema", petit::kSchemaVersion}, {"all_pass", all_pass}, {"criteria", std::move(arr)}};
            emit(verify_out, out, text.str());
            return all_pass ? 0 : 3;
        }
    } catch (const petit::size_cap_exceeded& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const petit::enumeration_cap_exceeded& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const petit::internal_error& ex) {
        std::cerr << "internal assertion: " << ex.what() << "\n";
        return 3;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
