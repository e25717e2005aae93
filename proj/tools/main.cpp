#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "torsupp/torsupp.hpp"

namespace {

using torsupp::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw torsupp::input_error("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json load_json(const std::string& path) {
    return torsupp::parse_json_text(read_file(path));
}

torsupp::Arrangement load_arrangement(const std::string& path) {
    return torsupp::arrangement_from_json(load_json(path));
}

torsupp::ResolutionData load_resolution(const std::string& path) {
    return torsupp::resolution_from_json(load_json(path));
}

void emit(const json& document) {
    std::cout << document.dump(2) << "\n";
}

json edges_to_json(const std::vector<torsupp::Edge>& edges) {
    json array = json::array();
    for (const torsupp::Edge& edge : edges)
        array.push_back(json{{"indices", torsupp::indices_to_json(edge.indices)},
                             {"codim", edge.codim},
                             {"dense", edge.dense}});
    return json{{"edges", std::move(array)}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Supports of specialization complexes and cohomology jump loci of "
                 "rank-one local systems, in exact arithmetic"};
    app.require_subcommand(1);

    std::string input_file;
    std::string matrix_file;
    std::string stratum_name;
    std::string alpha_text;

    CLI::App* lattice_cmd =
        app.add_subcommand("lattice", "Intersection lattice of an arrangement");
    lattice_cmd->add_option("file", input_file, "arrangement JSON file")->required();
    lattice_cmd->callback([&] {
        emit(torsupp::lattice_to_json(
            torsupp::intersection_lattice(load_arrangement(input_file))));
    });

    CLI::App* dense_cmd = app.add_subcommand("dense", "Dense edges of an arrangement");
    dense_cmd->add_option("file", input_file, "arrangement JSON file")->required();
    dense_cmd->callback([&] {
        emit(edges_to_json(torsupp::dense_edges(load_arrangement(input_file))));
    });

    CLI::App* support_cmd =
        app.add_subcommand("support", "Support via the dense-edge formula");
    support_cmd->add_option("file", input_file, "arrangement JSON file")->required();
    support_cmd->callback([&] {
        emit(torsupp::support_to_json(
            torsupp::arrangement_support(load_arrangement(input_file))));
    });

    CLI::App* resolve_cmd = app.add_subcommand(
        "auto-resolve", "Resolution data of a line arrangement in C^2");
    resolve_cmd->add_option("file", input_file, "arrangement JSON file")->required();
    resolve_cmd->callback([&] {
        emit(torsupp::resolution_to_json(
            torsupp::line_arrangement_resolution(load_arrangement(input_file))));
    });

    CLI::App* zeta_cmd =
        app.add_subcommand("zeta", "Monodromy zeta functions from resolution data");
    zeta_cmd->add_option("file", input_file, "resolution data JSON file")->required();
    zeta_cmd->add_option("--stratum", stratum_name, "emit the zeta of one stratum");
    zeta_cmd->callback([&] {
        const torsupp::ResolutionData data = load_resolution(input_file);
        if (zeta_cmd->count("--stratum") > 0) {
            for (const torsupp::Stratum& stratum : data.strata) {
                if (stratum.name == stratum_name) {
                    emit(torsupp::function_to_json(
                        torsupp::local_zeta(stratum, data.dimension)));
                    return;
                }
            }
            throw torsupp::input_error("no stratum named \"" + stratum_name + "\"");
        }
        json strata = json::array();
        for (const torsupp::Stratum& stratum : data.strata)
            strata.push_back(json{
                {"name", stratum.name},
                {"zeta", torsupp::function_to_json(
                             torsupp::local_zeta(stratum, data.dimension))}});
        emit(json{{"r", data.dimension}, {"strata", std::move(strata)}});
    });

    CLI::App* support_zeta_cmd =
        app.add_subcommand("support-zeta", "Support via resolution data");
    support_zeta_cmd->add_option("file", input_file, "resolution data JSON file")
        ->required();
    support_zeta_cmd->callback([&] {
        emit(torsupp::support_to_json(
            torsupp::support_from_resolution(load_resolution(input_file))));
    });

    CLI::App* specialize_cmd =
        app.add_subcommand("specialize", "Specialize resolution data by a matrix");
    specialize_cmd->add_option("file", input_file, "resolution data JSON file")
        ->required();
    specialize_cmd->add_option("--matrix", matrix_file, "specialization matrix JSON file")
        ->required();
    specialize_cmd->callback([&] {
        emit(torsupp::resolution_to_json(torsupp::specialize_resolution(
            load_resolution(input_file),
            torsupp::matrix_from_json(load_json(matrix_file)))));
    });

    CLI::App* member_cmd =
        app.add_subcommand("member", "Torsion-point membership in a support");
    member_cmd->add_option("file", input_file, "support set JSON file")->required();
    member_cmd->add_option("--alpha", alpha_text, "comma-separated rational angles")
        ->required();
    member_cmd->callback([&] {
        const torsupp::SupportSet support =
            torsupp::support_from_json(load_json(input_file));
        const torsupp::TorsionPoint point = torsupp::alpha_from_string(alpha_text);
        emit(json{{"member", torsupp::member(support, point)}});
    });

    CLI::App* simple_cmd = app.add_subcommand(
        "simple", "Simplicity report for a torsion rank-one local system");
    simple_cmd->add_option("file", input_file, "arrangement or resolution data JSON file")
        ->required();
    simple_cmd->add_option("--alpha", alpha_text, "comma-separated rational angles")
        ->required();
    simple_cmd->callback([&] {
        const json document = load_json(input_file);
        const torsupp::TorsionPoint point = torsupp::alpha_from_string(alpha_text);
        if (document.is_object() && document.contains("forms")) {
            emit(torsupp::report_to_json(torsupp::simplicity_report(
                torsupp::arrangement_from_json(document), point)));
        } else if (document.is_object() && document.contains("strata")) {
            emit(torsupp::report_to_json(torsupp::simplicity_report(
                torsupp::resolution_from_json(document), point)));
        } else {
            throw torsupp::input_error(
                "expected an arrangement (\"forms\") or resolution data (\"strata\") file");
        }
    });

    CLI::App* check_cmd = app.add_subcommand(
        "check", "Cross-check the dense-edge and resolution routes (n = 2)");
    check_cmd->add_option("file", input_file, "arrangement JSON file")->required();
    check_cmd->callback([&] {
        emit(torsupp::consistency_to_json(
            torsupp::support_consistency_check(load_arrangement(input_file))));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help and friends
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const torsupp::input_error& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const torsupp::internal_error& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
    return 0;
}
