// polytile: decide, discretize and analyze translational tilings of the plane
// by rational polygonal sets.

#include "polytile/decide.hpp"
#include "polytile/errors.hpp"
#include "polytile/lift.hpp"
#include "polytile/periodicity.hpp"
#include "polytile/polygon_json.hpp"
#include "polytile/share_classes.hpp"
#include "polytile/svg.hpp"
#include "polytile/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace polytile;
using nlohmann::json;

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SyntaxError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SyntaxError("cannot write " + path);
    out << content;
}

int thread_count() {
    const char* env = std::getenv("POLYTILE_THREADS");
    if (!env) return 1;
    const int n = std::atoi(env);
    if (n < 1) throw SyntaxError("POLYTILE_THREADS must be a positive integer");
    return n;
}

bool looks_like_tile_file(const std::string& text) {
    return text.rfind("scale ", 0) == 0;
}

// Polygon inputs are discretized; tile files are taken as-is.
struct TileInput {
    DiscreteTile tile;
    std::optional<IntegerPolygonalSet> omega;
};

TileInput load_tile(const std::string& path) {
    const std::string text = read_file(path);
    TileInput in;
    if (looks_like_tile_file(text)) {
        in.tile = tile_from_text(text);
        return in;
    }
    const PolygonalSet set = parse_polygonal_set(text);
    auto [omega, norm] = normalize_to_integer(set);
    in.tile = discretize(omega).tile;
    in.omega = std::move(omega);
    return in;
}

json certificate_json(const TorusTiling& cert, long long scale) {
    json j;
    j["lattice"] = {{cert.lattice.a, cert.lattice.b}, {0, cert.lattice.d}};
    j["translates"] = json::array();
    for (const auto& t : cert.translates) {
        j["translates"].push_back({t.x, t.y});
    }
    j["scale"] = scale;
    return j;
}

TorusTiling certificate_from_json(const json& j) {
    TorusTiling cert;
    const auto& m = j.at("lattice");
    cert.lattice.a = m.at(0).at(0).get<long long>();
    cert.lattice.b = m.at(0).at(1).get<long long>();
    cert.lattice.d = m.at(1).at(1).get<long long>();
    if (m.at(1).at(0).get<long long>() != 0 || cert.lattice.a < 1 || cert.lattice.d < 1 ||
        cert.lattice.b < 0 || cert.lattice.b >= cert.lattice.a) {
        throw SyntaxError("certificate lattice is not in Hermite normal form");
    }
    for (const auto& t : j.at("translates")) {
        cert.translates.push_back({t.at(0).get<long long>(), t.at(1).get<long long>()});
    }
    return cert;
}

int cmd_discretize(const std::string& input, const std::string& output,
                   const std::string& svg_path) {
    const PolygonalSet set = parse_polygonal_set(read_file(input));
    auto [omega, norm] = normalize_to_integer(set);
    const Discretization d = discretize(omega);

    const std::string text = tile_to_text(d.tile);
    if (output.empty()) {
        std::cout << text;
    } else {
        write_file(output, text);
    }
    if (!svg_path.empty()) {
        write_file(svg_path, render_discrete_tile_svg(d));
        const auto dot = svg_path.find_last_of('.');
        const std::string stem = (dot == std::string::npos) ? svg_path : svg_path.substr(0, dot);
        write_file(stem + ".partition.svg", render_partition_svg(d.partition));
        write_file(stem + ".polygon.svg", render_polygon_svg(omega.base));
    }
    return 0;
}

int cmd_decide(const std::string& input, std::optional<long long> budget,
               const std::string& resume_path, const std::string& cert_path) {
    const TileInput in = load_tile(input);

    std::optional<SessionState> resume;
    if (!resume_path.empty()) {
        std::ifstream probe(resume_path);
        if (probe.good()) {
            resume = parse_session(read_file(resume_path));
        }
    }

    const Decision d = decide(in.tile, budget, resume, thread_count());
    switch (d.kind) {
    case Decision::Kind::Tileable: {
        const json j = certificate_json(*d.certificate, in.tile.scale);
        std::cout << "tileable: lattice index " << d.certificate->lattice.index() << ", "
                  << d.certificate->translates.size() << " translate(s)\n";
        if (!cert_path.empty()) write_file(cert_path, j.dump(2) + "\n");
        return 0;
    }
    case Decision::Kind::NotTileable: {
        std::cout << "not tileable: refuted at radius " << d.refutation_radius << "\n";
        if (!cert_path.empty()) {
            json j;
            j["radius"] = d.refutation_radius;
            write_file(cert_path, j.dump(2) + "\n");
        }
        return 1;
    }
    case Decision::Kind::Undecided:
    default: {
        std::cout << "undecided after " << d.stats.work_units << " work unit(s)\n";
        if (resume_path.empty()) {
            std::cerr << "polytile: --resume <file> is required to save progress\n";
            return kExitUsage;
        }
        write_file(resume_path, serialize_session(*d.state));
        return 2;
    }
    }
}

int cmd_verify(const std::string& tile_path, const std::string& cert_path) {
    const TileInput in = load_tile(tile_path);
    const json j = json::parse(read_file(cert_path));
    if (j.contains("radius")) {
        std::cout << "refutation certificates are re-checked by rerunning decide\n";
        return kExitUsage;
    }
    const TorusTiling cert = certificate_from_json(j);
    if (j.contains("scale") && j["scale"].get<long long>() != in.tile.scale) {
        std::cerr << "polytile: certificate scale does not match the tile\n";
        return 1;
    }
    if (verify_tiling(in.tile.points, cert)) {
        std::cout << "certificate verified\n";
        return 0;
    }
    std::cout << "certificate rejected\n";
    return 1;
}

json report_classes(const ClassPartition& classes) {
    json out;
    out["scale_denominator"] = classes.scale;
    out["total_classes"] =
        classes.total_classes < 0 ? json("infinite") : json(classes.total_classes);
    out["families"] = json::array();
    for (const auto& fam : classes.families) {
        json jf;
        jf["classes_in_family"] =
            fam.class_count < 0 ? json("infinite") : json(fam.class_count);
        jf["base"] = json::array();
        for (const auto& b : fam.representative.base) {
            jf["base"].push_back({rational_to_string(b.x), rational_to_string(b.y)});
        }
        jf["periods"] = json::array();
        for (const auto& p : fam.representative.periods) {
            jf["periods"].push_back({rational_to_string(p.x), rational_to_string(p.y)});
        }
        out["families"].push_back(std::move(jf));
    }
    return out;
}

json report_periodicity(const PeriodicityReport& rep) {
    json out;
    switch (rep.kind) {
    case PeriodicityReport::Kind::DoublyPeriodic: out["classification"] = "doubly-periodic"; break;
    case PeriodicityReport::Kind::SinglyPeriodic: out["classification"] = "singly-periodic"; break;
    case PeriodicityReport::Kind::WeaklyPeriodic: out["classification"] = "weakly-periodic"; break;
    default: out["classification"] = "not-periodic"; break;
    }
    out["periods"] = json::array();
    for (const auto& p : rep.periods) {
        out["periods"].push_back({rational_to_string(p.x), rational_to_string(p.y)});
    }
    if (!rep.pieces.empty()) {
        out["pieces"] = json::array();
        for (const auto& piece : rep.pieces) {
            json jp;
            jp["period"] = {rational_to_string(piece.period.x),
                            rational_to_string(piece.period.y)};
            jp["base"] = json::array();
            for (const auto& b : piece.piece.base) {
                jp["base"].push_back({rational_to_string(b.x), rational_to_string(b.y)});
            }
            out["pieces"].push_back(std::move(jp));
        }
    }
    return out;
}

int cmd_analyze(const std::string& input, const std::string& tiling_path,
                const std::string& quake, const std::string& svg_path) {
    const std::string text = read_file(input);
    if (looks_like_tile_file(text)) {
        throw SyntaxError("analyze needs the polygon JSON input (the tile alone "
                          "has no vertex structure)");
    }
    const PolygonalSet set = parse_polygonal_set(text);
    auto [omega, norm] = normalize_to_integer(set);
    const TilingDesc desc = parse_tiling_desc(read_file(tiling_path));

    const LiftVerdict verdict = verify_continuous_tiling(omega, desc);
    if (!verdict.ok) {
        std::cerr << "polytile: not a tiling: " << verdict.to_string() << "\n";
        return 1;
    }

    json report;
    report["verified"] = true;
    const ClassPartition classes = vertex_share_classes(omega, desc);
    report["classes"] = report_classes(classes);
    const auto dir = sliding_direction(omega, desc, classes);
    if (dir) {
        report["sliding_direction"] = {dir->x, dir->y};
    } else {
        report["sliding_direction"] = nullptr;
    }
    report["periodicity"] = report_periodicity(weak_periodic_report(desc));

    if (!quake.empty()) {
        const auto comma = quake.find(',');
        if (comma == std::string::npos) throw SyntaxError("--earthquake needs vx,vy");
        IVec v{std::atoll(quake.substr(0, comma).c_str()),
               std::atoll(quake.substr(comma + 1).c_str())};
        if (!desc.is_integral()) {
            throw UnsupportedDescriptionError(
                "earthquake analysis needs an integral tiling description");
        }
        const Discretization d = discretize(omega);
        const long long n = d.tile.scale;
        const TilingDesc scaled_desc = desc.scaled(n);
        const IntPeriodic tiling = int_periodic_view(scaled_desc);
        const IVec vn{n * v.x, n * v.y};
        const auto decomp = earthquake_decomposition(d.tile.points, tiling, vn);

        json jq;
        jq["direction"] = {v.x, v.y};
        jq["total_plates"] =
            decomp.total_plates < 0 ? json("infinite") : json(decomp.total_plates);
        jq["families"] = json::array();
        for (const auto& fam : decomp.families) {
            json jf;
            jf["translates_mod_lattice"] = json::array();
            for (const auto& t : fam.nodes) {
                jf["translates_mod_lattice"].push_back({t.x, t.y});
            }
            jf["period_subgroup"] = json::array();
            if (fam.h.rank >= 1) {
                jf["period_subgroup"].push_back({fam.h.gen1.x, fam.h.gen1.y});
            }
            if (fam.h.rank == 2) {
                jf["period_subgroup"].push_back({fam.h.full->b, fam.h.full->d});
            }
            jf["plates_in_family"] =
                fam.plate_count < 0 ? json("infinite") : json(fam.plate_count);
            jq["families"].push_back(std::move(jf));
        }
        report["earthquake"] = std::move(jq);

        if (!svg_path.empty()) {
            const auto [lo, hi] = d.tile.bounding_box();
            const long long span = 2 * std::max({hi.x - lo.x, hi.y - lo.y, n});
            write_file(svg_path,
                       render_plates_svg(d.tile.points, tiling, decomp,
                                         {-span, -span}, {span, span}));
        }
    } else if (!svg_path.empty()) {
        write_file(svg_path, render_tiling_svg(omega.base, desc, {-4, -4}, {4, 4}));
    }

    std::cout << report.dump(2) << "\n";
    return 0;
}

int cmd_render(const std::string& input, const std::string& target,
               const std::string& output) {
    const std::string text = read_file(input);
    if (target == "tile") {
        if (looks_like_tile_file(text)) {
            write_file(output, render_discrete_tile_svg(tile_from_text(text)));
        } else {
            auto [omega, norm] = normalize_to_integer(parse_polygonal_set(text));
            write_file(output, render_discrete_tile_svg(discretize(omega)));
        }
        return 0;
    }
    const PolygonalSet set = parse_polygonal_set(text);
    if (target == "polygon") {
        write_file(output, render_polygon_svg(set));
        return 0;
    }
    if (target == "partition") {
        auto [omega, norm] = normalize_to_integer(set);
        write_file(output, render_partition_svg(unit_cell_partition(omega)));
        return 0;
    }
    throw SyntaxError("unknown render target: " + target);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decision and structure analysis of translational "
                 "tilings by rational polygonal sets"};
    app.require_subcommand(1);

    std::string input, output, svg_path, resume_path, cert_path, tiling_path, quake;
    std::string render_target = "polygon";
    long long budget_value = -1;

    auto* disc = app.add_subcommand("discretize", "encode a polygonal set as a discrete tile");
    disc->add_option("input", input, "polygonal set JSON")->required();
    disc->add_option("-o,--output", output, "write the tile file here (default stdout)");
    disc->add_option("--svg", svg_path, "also render the tile (plus partition and polygon)");

    auto* dec = app.add_subcommand("decide", "decide whether the set tiles the plane");
    dec->add_option("input", input, "polygonal set JSON or tile file")->required();
    dec->add_option("--budget", budget_value, "work units before suspending");
    dec->add_option("--resume", resume_path, "session state file to resume from / save to");
    dec->add_option("--emit-certificate", cert_path, "write the certificate/refutation JSON");

    auto* ver = app.add_subcommand("verify", "re-check a tiling certificate");
    ver->add_option("input", input, "polygonal set JSON or tile file")->required();
    ver->add_option("certificate", cert_path, "certificate JSON")->required();

    auto* ana = app.add_subcommand("analyze", "vertex classes, periodicity and plates");
    ana->add_option("input", input, "polygonal set JSON")->required();
    ana->add_option("tiling", tiling_path, "tiling description JSON")->required();
    ana->add_option("--earthquake", quake, "direction vx,vy for the plate decomposition");
    ana->add_option("--svg", svg_path, "render the tiling or plates");

    auto* ren = app.add_subcommand("render", "render an input as SVG");
    ren->add_option("input", input, "polygonal set JSON or tile file")->required();
    ren->add_option("-o,--output", output, "SVG output path")->required();
    ren->add_option("--target", render_target, "polygon | partition | tile");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (disc->parsed()) return cmd_discretize(input, output, svg_path);
        if (dec->parsed()) {
            std::optional<long long> budget;
            if (budget_value >= 0) budget = budget_value;
            return cmd_decide(input, budget, resume_path, cert_path);
        }
        if (ver->parsed()) return cmd_verify(input, cert_path);
        if (ana->parsed()) return cmd_analyze(input, tiling_path, quake, svg_path);
        if (ren->parsed()) return cmd_render(input, render_target, output);
    } catch (const SyntaxError& e) {
        std::cerr << "polytile: " << e.what() << "\n";
        return kExitData;
    } catch (const ValidationError& e) {
        std::cerr << "polytile: " << e.what() << "\n";
        return kExitData;
    } catch (const Error& e) {
        std::cerr << "polytile: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "polytile: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
