#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "orb/classical_ring.hpp"
#include "orb/cochain.hpp"
#include "orb/cr_model.hpp"
#include "orb/deformed_ring.hpp"
#include "orb/error.hpp"
#include "orb/group.hpp"
#include "orb/groupspec.hpp"
#include "orb/inertia.hpp"
#include "orb/parallel.hpp"
#include "orb/presets.hpp"
#include "orb/weyl.hpp"

using orb::CycNum;
using orb::Rational;
using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string preset;
    std::string group_file;
    std::string format = "json";
    int threads = 0;
    bool serial = false;
};

orb::Group load_group(const Options& opt, bool symplectic, std::string& label) {
    std::vector<orb::Matrix> gens;
    if (!opt.group_file.empty()) {
        std::ifstream in(opt.group_file);
        if (!in) throw orb::usage_error("cannot open " + opt.group_file);
        std::stringstream buf;
        buf << in.rdbuf();
        orb::GroupSpec spec = orb::parse_group_spec(buf.str());
        label = spec.name.empty() ? opt.group_file : spec.name;
        gens = spec.generators;
    } else if (!opt.preset.empty()) {
        auto p = symplectic ? orb::find_symplectic_preset(opt.preset)
                            : orb::find_preset(opt.preset);
        if (!p) throw orb::usage_error("unknown preset \"" + opt.preset + "\"");
        label = p->name;
        gens = p->generators;
    } else {
        throw orb::usage_error("either --preset or --group is required");
    }
    return orb::Group::generate(gens);
}

// Minimal json -> markdown: arrays of flat objects become tables, other
// values become "key: value" lines.
void emit_markdown(const json& j, std::ostream& os, int depth = 0) {
    for (const auto& [key, value] : j.items()) {
        if (value.is_array() && !value.empty() && value[0].is_object()) {
            os << "\n## " << key << "\n\n|";
            for (const auto& [col, _] : value[0].items()) os << " " << col << " |";
            os << "\n|";
            for (const auto& [col, _] : value[0].items()) {
                (void)col;
                os << " --- |";
            }
            os << "\n";
            for (const auto& rowv : value) {
                os << "|";
                for (const auto& [col, cell] : rowv.items()) {
                    (void)col;
                    if (cell.is_string())
                        os << " " << cell.get<std::string>() << " |";
                    else
                        os << " " << cell.dump() << " |";
                }
                os << "\n";
            }
        } else if (value.is_object()) {
            os << "\n## " << key << "\n";
            emit_markdown(value, os, depth + 1);
        } else if (value.is_string()) {
            os << key << ": " << value.get<std::string>() << "\n";
        } else {
            os << key << ": " << value.dump() << "\n";
        }
    }
}

void emit(const json& j, const Options& opt) {
    if (opt.format == "markdown") {
        emit_markdown(j, std::cout);
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

std::string rstr(const Rational& r) { return orb::to_string(r); }

json sectors_report(const orb::Group& g, const std::vector<orb::SectorData>& sectors) {
    json rows = json::array();
    for (size_t i = 0; i < g.size(); ++i) {
        const auto& s = sectors[i];
        json angles = json::array();
        for (const auto& [theta, mult] : s.angles)
            angles.push_back(json{{"theta", rstr(theta)}, {"multiplicity", mult}});
        rows.push_back(json{{"element", i},
                            {"class", g.class_of(i)},
                            {"order", g.element_order(i)},
                            {"ell", s.ell},
                            {"age", rstr(s.age)},
                            {"angles", angles}});
    }
    json classes = json::array();
    for (size_t c = 0; c < g.classes().size(); ++c)
        classes.push_back(json{{"class", c},
                               {"size", g.classes()[c].size()},
                               {"representative", g.classes()[c][0]}});
    return json{{"elements", rows}, {"classes", classes}};
}

int run_sectors(const Options& opt) {
    std::string label;
    orb::Group g = load_group(opt, false, label);
    auto sectors = orb::all_sectors(g);
    json out{{"schema", 1}, {"command", "sectors"}, {"group", label}, {"size", g.size()}};
    json body = sectors_report(g, sectors);
    out.update(body);
    emit(out, opt);
    return 0;
}

int run_ring(const Options& opt, const std::string& model) {
    std::string label;
    orb::Group g = load_group(opt, false, label);
    auto sectors = orb::all_sectors(g);
    json out{{"schema", 1}, {"command", "ring " + model}, {"group", label}};

    if (model == "classical") {
        orb::ClassicalRing ring(g, sectors);
        auto table = ring.structure_constants(!opt.serial);
        json dims = json::array();
        for (size_t d = 0; d < table.bases.size(); ++d)
            dims.push_back(json{{"degree", d}, {"dimension", table.bases[d].size()}});
        out["dimensions"] = dims;
        json entries = json::array();
        for (const auto& [key, coeffs] : table.entries) {
            auto [d1, i, d2, jx] = key;
            json cs = json::array();
            for (const auto& c : coeffs) cs.push_back(c.str());
            entries.push_back(json{{"d1", d1},
                                   {"i", i},
                                   {"d2", d2},
                                   {"j", jx},
                                   {"coefficients", cs}});
        }
        out["products"] = entries;
    } else if (model == "deformed") {
        orb::DeformedRing ring(g, sectors);
        auto table = ring.hh_table(!opt.serial);
        json degs = json::array();
        for (size_t c = 0; c < table.class_degree.size(); ++c)
            degs.push_back(json{{"class", c}, {"degree", table.class_degree[c]}});
        out["class_degrees"] = degs;
        json entries = json::array();
        size_t nc = table.entries.size();
        for (size_t a = 0; a < nc; ++a)
            for (size_t b = 0; b < nc; ++b) {
                json cs = json::array();
                for (const auto& v : table.entries[a][b]) cs.push_back(v.str());
                entries.push_back(json{{"a", a}, {"b", b}, {"coefficients", cs}});
            }
        out["products"] = entries;
    } else {
        orb::CRModel model_ring(g, sectors);
        orb::GradingMode mode =
            model == "ht" ? orb::GradingMode::HT : orb::GradingMode::CR;
        json entries = json::array();
        for (size_t a = 0; a < g.size(); ++a)
            for (size_t b = 0; b < g.size(); ++b) {
                orb::GradedTElement prod =
                    mode == orb::GradingMode::HT
                        ? model_ring.ht_product(model_ring.e(a, mode),
                                                model_ring.e(b, mode))
                        : model_ring.cr_product(model_ring.e(a, mode),
                                                model_ring.e(b, mode));
                for (const auto& [c, p] : prod.coeffs)
                    entries.push_back(json{{"a", a},
                                           {"b", b},
                                           {"target", c},
                                           {"coefficient", p.str()}});
            }
        out["products"] = entries;
    }
    emit(out, opt);
    return 0;
}

int run_gr_check(const Options& opt) {
    std::string label;
    orb::Group g = load_group(opt, false, label);
    auto sectors = orb::all_sectors(g);
    orb::DeformedRing dr(g, sectors);
    orb::CRModel cr(g, sectors);
    cr.associated_graded(dr, !opt.serial);  // throws on mismatch
    json out{{"schema", 1},
             {"command", "gr-check"},
             {"group", label},
             {"verdict", "PASS"}};
    emit(out, opt);
    return 0;
}

int run_j_check(const Options& opt) {
    std::string label;
    orb::Group g = load_group(opt, false, label);
    auto sectors = orb::all_sectors(g);
    orb::CRModel cr(g, sectors);
    size_t pairs = 0;
    for (size_t a = 0; a < g.size(); ++a)
        for (size_t b = 0; b < g.size(); ++b) {
            auto lhs = cr.j_map(cr.cr_product(cr.e(a, orb::GradingMode::CR),
                                              cr.e(b, orb::GradingMode::CR)));
            auto rhs = cr.ht_product(cr.j_map(cr.e(a, orb::GradingMode::CR)),
                                     cr.j_map(cr.e(b, orb::GradingMode::CR)));
            if (!(lhs == rhs))
                throw orb::invariant_violation("intertwiner identity fails on pair " +
                                               std::to_string(a) + "," +
                                               std::to_string(b));
            ++pairs;
        }
    json out{{"schema", 1},
             {"command", "j-check"},
             {"group", label},
             {"pairs", pairs},
             {"verdict", "PASS"}};
    emit(out, opt);
    return 0;
}

int run_lemma_codim(const Options& opt) {
    std::string label;
    orb::Group g = load_group(opt, false, label);
    auto sectors = orb::all_sectors(g);
    json rows = json::array();
    bool all_agree = true;
    for (size_t a = 0; a < g.size(); ++a)
        for (size_t b = 0; b < g.size(); ++b) {
            auto v = orb::codim_lemma_check(sectors, g, a, b);
            bool agree = v.l_additive == v.geometric;
            all_agree = all_agree && agree;
            rows.push_back(json{{"g1", a},
                                {"g2", b},
                                {"length_additive", v.l_additive},
                                {"geometric", v.geometric},
                                {"agree", agree}});
        }
    json out{{"schema", 1},
             {"command", "lemma-codim"},
             {"group", label},
             {"pairs", rows},
             {"verdict", all_agree ? "PASS" : "FAIL"}};
    emit(out, opt);
    if (!all_agree) throw orb::invariant_violation("codimension criteria disagree");
    return 0;
}

int run_weyl(const Options& opt, size_t gamma_idx, unsigned wmax) {
    std::string label;
    orb::Group g = load_group(opt, true, label);
    if (gamma_idx >= g.size()) throw orb::usage_error("--gamma index out of range");
    const orb::Matrix& gamma = g.element(gamma_idx);
    size_t dim2n = g.dim();

    json betti = json::array();
    for (size_t k = 0; k <= dim2n; ++k)
        for (unsigned w = 0; w < wmax; ++w)
            betti.push_back(json{
                {"k", k},
                {"w", w},
                {"dim", orb::koszul_cohomology_dim(gamma, k, w, wmax)}});

    // cup and conjugation verdicts for the generators
    std::vector<orb::KoszulChain> psis;
    for (size_t i = 0; i < g.size(); ++i)
        psis.push_back(orb::psi_generator(g.element(i)));
    json cup = json::array();
    auto sectors_ell = [&](size_t i) {
        return g.element(i).rows() -
               (g.element(i) - orb::Matrix::identity(g.dim())).kernel_basis().size();
    };
    for (size_t a = 0; a < g.size(); ++a)
        for (size_t b = 0; b < g.size(); ++b) {
            size_t c = g.mul(a, b);
            bool additive = sectors_ell(a) + sectors_ell(b) == sectors_ell(c);
            orb::KoszulChain prod =
                orb::twisted_cup(g.element(a), psis[a], psis[b]);
            bool ok = additive
                          ? orb::class_equal_mod_exact(g.element(c), prod, psis[c])
                          : orb::class_equal_mod_exact(
                                g.element(c), prod,
                                orb::Rational(0) * psis[c]);
            cup.push_back(json{{"g1", a},
                               {"g2", b},
                               {"length_additive", additive},
                               {"verdict", ok ? "PASS" : "FAIL"}});
            if (!ok)
                throw orb::invariant_violation("generator cup identity fails");
        }
    json out{{"schema", 1},
             {"command", "weyl"},
             {"group", label},
             {"gamma", gamma_idx},
             {"weight_max", wmax},
             {"betti", betti},
             {"generator_cups", cup}};
    emit(out, opt);
    return 0;
}

int run_cochain_check(const Options& opt) {
    std::string label;
    orb::Group g = load_group(opt, false, label);
    auto sectors = orb::all_sectors(g);
    json rows = json::array();
    for (size_t i = 0; i < g.size(); ++i) {
        orb::SectorFrame frame = orb::frame_from_element(g, i);
        std::vector<size_t> tang = frame.tangential_indices();
        std::vector<size_t> normal = frame.normal_indices();
        size_t checked = 0;
        bool ok = true;
        // every tangential subset wedged with the full normal top
        for (size_t mask = 0; mask < (size_t(1) << tang.size()); ++mask) {
            std::vector<size_t> idx;
            for (size_t t = 0; t < tang.size(); ++t)
                if (mask & (size_t(1) << t)) idx.push_back(tang[t]);
            idx.insert(idx.end(), normal.begin(), normal.end());
            std::sort(idx.begin(), idx.end());
            orb::Multivector xi =
                orb::Multivector::monomial(frame.nvars, idx, CycNum(Rational(1)));
            ok = ok && orb::roundtrip_check(frame, xi);
            ++checked;
        }
        rows.push_back(json{{"element", i},
                            {"classes_checked", checked},
                            {"verdict", ok ? "PASS" : "FAIL"}});
        if (!ok) throw orb::invariant_violation("roundtrip fails in sector " +
                                                std::to_string(i));
    }
    json out{{"schema", 1},
             {"command", "cochain-check"},
             {"group", label},
             {"sectors", rows}};
    emit(out, opt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sector-ring calculator for finite linear quotients"};
    app.require_subcommand(1);
    // let the shared options appear after the subcommand too
    app.fallthrough();
    Options opt;
    app.add_option("--preset", opt.preset, "named built-in group");
    app.add_option("--group", opt.group_file, "JSON group description file");
    app.add_option("--format", opt.format, "output format: json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
    app.add_option("--threads", opt.threads, "worker thread count override");
    app.add_flag("--serial", opt.serial, "disable the parallel table kernels");

    auto* sc_sectors = app.add_subcommand("sectors", "fixed spaces, lengths, ages");
    std::string ring_model = "classical";
    auto* sc_ring = app.add_subcommand("ring", "basis and structure constants");
    sc_ring->add_option("model", ring_model, "classical|deformed|ht|cr")
        ->check(CLI::IsMember({"classical", "deformed", "ht", "cr"}));
    auto* sc_gr = app.add_subcommand("gr-check", "graded table comparison");
    auto* sc_j = app.add_subcommand("j-check", "product intertwiner check");
    auto* sc_codim = app.add_subcommand("lemma-codim", "codimension criterion table");
    size_t gamma_idx = 1;
    unsigned wmax = 8;
    auto* sc_weyl =
        app.add_subcommand("weyl", "twisted complex dimensions and generator cups");
    sc_weyl->add_option("--gamma", gamma_idx, "element index");
    sc_weyl->add_option("--weight-max", wmax, "weight guard band");
    auto* sc_cochain =
        app.add_subcommand("cochain-check", "extraction roundtrip verdicts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        orb::set_thread_count(opt.threads);
        if (sc_sectors->parsed()) return run_sectors(opt);
        if (sc_ring->parsed()) return run_ring(opt, ring_model);
        if (sc_gr->parsed()) return run_gr_check(opt);
        if (sc_j->parsed()) return run_j_check(opt);
        if (sc_codim->parsed()) return run_lemma_codim(opt);
        if (sc_weyl->parsed()) return run_weyl(opt, gamma_idx, wmax);
        if (sc_cochain->parsed()) return run_cochain_check(opt);
    } catch (const orb::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const orb::invariant_violation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const orb::usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const orb::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
