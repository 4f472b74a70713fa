// Command-line front end: connectivity analysis, radical computation with
// optional oracle verification, network ingestion, and corpus verification.
//
// Exit codes: 0 all checks pass, 1 a formula/oracle comparison failed,
// 2 input error or refused hypothesis.

#include <CLI11.hpp>

#include "gpa/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct CommonArgs {
    gpa::CliOptions opt;
    std::string format = "text";
    std::string out;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool oracle_flags) {
    cmd->add_option("--seed", args.opt.seed, "seed echoed in the report")
        ->default_val(std::uint64_t{0});
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->default_val("text");
    cmd->add_option("--out", args.out,
                    "write <base>.txt and <base>.json instead of only printing");
    if (oracle_flags) {
        cmd->add_flag("--oracle", args.opt.oracle,
                      "verify the formula against the independent oracle");
        cmd->add_option("--max-oracle-dim", args.opt.max_oracle_dim,
                        "largest dimension the oracle will materialize")
            ->default_val(std::size_t{64});
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int emit(const gpa::Report& r, const CommonArgs& args) {
    if (!args.out.empty()) {
        std::ofstream txt(args.out + ".txt", std::ios::binary);
        txt << r.text();
        std::ofstream js(args.out + ".json", std::ios::binary);
        js << r.structured();
        if (!txt || !js) {
            std::cerr << "error: cannot write output files at " << args.out << "\n";
            return 2;
        }
    }
    std::cout << (args.format == "structured" ? r.structured() : r.text());
    return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic radical and connectivity analysis for path "
                 "algebras, block matrix systems, and pointed Hopf algebras"};
    app.require_subcommand(1);

    std::string file, kind_name, dir;

    auto* conn = app.add_subcommand("connectivity",
                                    "partition a quiver into strong/weak/unilateral "
                                    "components and list its regular pairs");
    CommonArgs conn_args;
    conn->add_option("file", file, "quiver file")->required();
    add_common(conn, conn_args, false);

    auto* rad = app.add_subcommand("radical",
                                   "compute a radical from the closed-form description "
                                   "(.quiver, .gmring, or .hopf input)");
    CommonArgs rad_args;
    rad->add_option("file", file, "input file (.quiver, .gmring, .hopf)")->required();
    rad->add_option("kind", kind_name, "baer | levitzki | nil | jacobson | vn")
        ->required();
    add_common(rad, rad_args, true);

    auto* net = app.add_subcommand("net-ingest",
                                   "build a quiver from `src dst [label]` edge lines "
                                   "and report its connectivity and radical summary");
    CommonArgs net_args;
    net->add_option("file", file, "edge list file")->required();
    add_common(net, net_args, false);

    auto* suite = app.add_subcommand("verify-suite",
                                     "run every formula against its oracle over a "
                                     "corpus directory of instance files");
    CommonArgs suite_args;
    suite->add_option("dir", dir, "corpus directory")->required();
    add_common(suite, suite_args, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (conn->parsed())
            return emit(gpa::cmd_connectivity(file, read_file(file), conn_args.opt),
                        conn_args);
        if (rad->parsed()) {
            auto kind = gpa::radical_kind_from_name(kind_name);
            if (!kind) {
                std::cerr << "error: unknown radical kind '" << kind_name
                          << "' (expected baer, levitzki, nil, jacobson, or vn)\n";
                return 2;
            }
            auto input = gpa::input_kind_from_label(file);
            if (!input) {
                std::cerr << "error: cannot tell the input kind of '" << file
                          << "' (expected a .quiver, .gmring, or .hopf extension)\n";
                return 2;
            }
            auto parent = std::filesystem::path(file).parent_path();
            gpa::HopfFileLoader loader = [parent](const std::string& ref) {
                return read_file((parent / ref).string());
            };
            return emit(gpa::cmd_radical(file, read_file(file), *input, *kind,
                                         rad_args.opt, loader),
                        rad_args);
        }
        if (net->parsed())
            return emit(gpa::cmd_net_ingest(file, read_file(file), net_args.opt),
                        net_args);
        return emit(gpa::cmd_verify_suite(dir, suite_args.opt), suite_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
