#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "regdec/decomposition.hpp"
#include "regdec/enumerate.hpp"
#include "regdec/errors.hpp"
#include "regdec/io.hpp"
#include "regdec/partition_graph.hpp"
#include "regdec/regular_partition.hpp"
#include "regdec/weyl.hpp"

namespace regdec::cli {

namespace {

struct Options {
    std::string format = "json";

    // build / enumerate / reconstruct
    std::string family;
    int rank = 0;
    bool list = false;

    // enumerate
    int min_blocks = 1;
    int max_blocks = 0;
    std::string modulo = "none";
    std::uint64_t node_budget = 1'000'000'000;
    int jobs = 1;
    int split_depth = 6;

    // file input
    std::string input;

    // construct
    bool k1k = false;
    bool kk = false;
    bool beta_form = false;
    int n = 0;
    std::string lambda;
    std::string x;
    std::string extend;
    std::string reference = "first";
    std::string finest;
    std::string int_partition;
};

class Runner {
public:
    Runner(const Options& o, std::istream& in, std::ostream& out) : o_(o), in_(in), out_(out) {}

    int build() {
        const auto rs = system();
        Json j;
        j["family"] = std::string(1, family_letter(rs.type().family));
        j["rank"] = rs.rank();
        j["size"] = rs.size();
        j["positive"] = rs.num_positive();
        Json basis = Json::array();
        for (auto r : beta_chain_basis(rs)) basis.push_back(to_json(rs.root(r)));
        j["graph_basis"] = std::move(basis);
        if (o_.list) {
            Json roots = Json::array();
            for (const auto& r : rs.roots()) roots.push_back(to_json(r));
            j["roots"] = std::move(roots);
        }
        return emit(j);
    }

    int enumerate() {
        const auto rs = system();
        EnumerationOptions eo;
        eo.min_blocks = o_.min_blocks;
        eo.max_blocks = o_.max_blocks;
        eo.modulo = parse_equivalence(o_.modulo);
        eo.node_budget = o_.node_budget;
        eo.jobs = o_.jobs;
        eo.split_depth = o_.split_depth;
        const auto result = enumerate_regular_partitions(rs, eo);
        if (o_.format == "csv") {
            out_ << enumeration_csv_header() << '\n' << enumeration_csv_row(rs, eo, result) << '\n';
            return kOk;
        }
        return emit(enumeration_to_json(rs, eo, result, o_.list));
    }

    int verify_partition() {
        const auto j = read_json(o_.input, in_);
        const RootSystem rs(type_from_json(j));
        const auto p = partition_from_json(rs, j);
        Json r;
        r["blocks"] = p.num_blocks();
        if (!is_partition(rs, p)) {
            try {
                validate_partition(rs, p);
            } catch (const InvalidArgument& e) {
                r["regular"] = false;
                r["reason"] = e.what();
            }
            emit(r);
            return kVerificationFailed;
        }
        const auto v = find_regularity_violation(rs, p);
        r["regular"] = !v;
        if (v) {
            Json w;
            w["blocks"] = {v->block_a + 1, v->block_b + 1};
            w["x"] = to_json(rs.root(v->x));
            w["y"] = to_json(rs.root(v->y));
            w["sum"] = to_json(rs.root(v->sum));
            r["violation"] = std::move(w);
        }
        emit(r);
        return v ? kVerificationFailed : kOk;
    }

    int verify_decomposition() {
        const auto j = read_json(o_.input, in_);
        const RootSystem rs(type_from_json(j));
        const auto report = is_regular_decomposition(rs, decomposition_from_json(rs, j));
        emit(to_json(report));
        return report.valid ? kOk : kVerificationFailed;
    }

    int graph() {
        const auto j = read_json(o_.input, in_);
        const RootSystem rs(type_from_json(j));
        const auto p = partition_from_json(rs, j);
        validate_partition(rs, p);
        const auto g = build_partition_graph(rs, p, beta_chain_basis(rs));
        Json r;
        r["graph"] = to_json(g);
        r["properties"] = to_json(check_graph_properties(g));
        return emit(r);
    }

    int reconstruct() {
        const auto rs = system();
        const auto g = graph_from_json(read_json(o_.input, in_));
        return emit(to_json(rs, reconstruct_from_graph(rs, g)));
    }

    int construct() {
        const int modes = o_.k1k + o_.kk + !o_.extend.empty() + !o_.finest.empty() + !o_.int_partition.empty();
        if (modes != 1)
            throw CLI::ValidationError("construct",
                                       "choose exactly one of --family-k1k, --family-kk, --extend, --finest, "
                                       "--int-partition");
        if (!o_.extend.empty()) return extend();
        if (o_.n < 1) throw CLI::ValidationError("--n", "required, n >= 1");
        const RootSystem rs(make_type('A', o_.n));
        if (!o_.finest.empty()) {
            if (o_.finest != "row" && o_.finest != "column")
                throw CLI::ValidationError("--finest", "expected row or column");
            return emit(to_json(rs, finest_partition(rs, o_.finest == "row" ? Orientation::row : Orientation::column)));
        }
        if (!o_.int_partition.empty())
            return emit(to_json(rs, partition_from_int_partition(rs, IntPartition::parse(o_.int_partition))));
        if (o_.lambda.empty()) throw CLI::ValidationError("--lambda", "required for the constructive families");
        const auto lambda = IntPartition::parse(o_.lambda);
        if (o_.k1k) {
            if (!o_.x.empty()) throw CLI::ValidationError("--x", "only used with --family-kk");
            return emit(to_json(rs, o_.beta_form ? construct_k1k_beta_form(rs, lambda) : construct_k1k(rs, lambda)));
        }
        if (o_.beta_form) throw CLI::ValidationError("--beta-form", "only used with --family-k1k");
        return emit(to_json(rs, construct_kk(rs, lambda, parse_x(o_.x, o_.n))));
    }

    int canonicalize_cmd() {
        const auto j = read_json(o_.input, in_);
        const RootSystem rs(type_from_json(j));
        const auto p = partition_from_json(rs, j);
        validate_partition(rs, p);
        Json r = to_json(rs, canonicalize(rs, p, parse_equivalence(o_.modulo)));
        r["modulo"] = to_string(parse_equivalence(o_.modulo));
        return emit(r);
    }

    int count() {
        if (o_.n < 2) throw CLI::ValidationError("--n", "required, n >= 2");
        const auto upper = stirling_count_upper(o_.n);
        const auto lambdas = integer_partitions(o_.n + 1, 3, o_.n + 1).size();
        if (o_.format == "csv") {
            out_ << "n,modulo_renumber_sign,modulo_renumber_sign_weyl\n"
                 << o_.n << ',' << upper << ',' << lambdas << '\n';
            return kOk;
        }
        Json j;
        j["n"] = o_.n;
        j["min_blocks"] = 3;
        j["renumber,sign"] = upper;
        j["renumber,sign,weyl"] = lambdas;
        return emit(j);
    }

private:
    RootSystem system() const {
        if (o_.family.size() != 1) throw CLI::ValidationError("--family", "expected one letter A..G");
        return RootSystem(make_type(o_.family[0], o_.rank));
    }

    int extend() {
        const auto j = read_json(o_.extend, in_);
        const RootSystem rs(type_from_json(j));
        const auto p = partition_from_json(rs, j);
        validate_partition(rs, p);
        if (p.num_blocks() == 2) return emit(to_json(rs, extend_two_block(rs, p.blocks[0], p.blocks[1])));
        if (o_.reference != "first" && o_.reference != "last")
            throw CLI::ValidationError("--reference", "expected first or last");
        const auto ref = o_.reference == "first" ? CartanReference::first_row : CartanReference::last_row;
        return emit(to_json(rs, extend_partition_to_decomposition(rs, p, ref)));
    }

    static CartanVector parse_x(const std::string& text, int n) {
        CartanVector x(static_cast<std::size_t>(n));
        if (text.empty()) return x;
        std::vector<std::string> parts;
        std::stringstream ss(text);
        for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
        if (static_cast<int>(parts.size()) != n)
            throw InvalidArgument("--x needs " + std::to_string(n) + " comma-separated coefficients, got " +
                                  std::to_string(parts.size()));
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = parse_rational(parts[static_cast<std::size_t>(i)]);
        return x;
    }

    int emit(const Json& j) {
        if (o_.format != "json") throw CLI::ValidationError("--format", "csv output is offered by enumerate and count");
        out_ << j.dump(2) << '\n';
        return kOk;
    }

    const Options& o_;
    std::istream& in_;
    std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Regular partitions of root systems and regular decompositions of sl(n+1)", "regdec"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    auto family_opts = [&](CLI::App* c) {
        c->add_option("--family", o.family, "Root system family A..G")->required();
        c->add_option("--rank", o.rank, "Rank")->required();
    };
    auto input_opt = [&](CLI::App* c) { c->add_option("input", o.input, "JSON file or - for stdin")->required(); };
    auto modulo_opt = [&](CLI::App* c) {
        c->add_option("--modulo", o.modulo, "Equivalences: any of renumber,sign,weyl, or none")
            ->capture_default_str();
    };

    auto* build = app.add_subcommand("build", "Build a root system");
    family_opts(build);
    build->add_flag("--list", o.list, "List every root");

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate regular partitions");
    family_opts(enumerate);
    enumerate->add_option("--min-blocks", o.min_blocks, "Minimum number of blocks")->check(CLI::PositiveNumber);
    enumerate->add_option("--max-blocks", o.max_blocks, "Maximum number of blocks (0 = unbounded)")
        ->check(CLI::NonNegativeNumber);
    modulo_opt(enumerate);
    enumerate->add_option("--node-budget", o.node_budget, "Search node budget")->capture_default_str();
    enumerate->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    enumerate->add_option("--split-depth", o.split_depth, "Roots assigned before work is split")
        ->check(CLI::NonNegativeNumber);
    enumerate->add_flag("--list", o.list, "Include the class representatives");

    auto* verify_partition = app.add_subcommand("verify-partition", "Check that a partition is regular");
    input_opt(verify_partition);
    auto* verify_decomposition = app.add_subcommand("verify-decomposition", "Check a regular decomposition");
    input_opt(verify_decomposition);
    auto* graph = app.add_subcommand("graph", "Graph of a partition and its properties");
    input_opt(graph);
    auto* reconstruct = app.add_subcommand("reconstruct", "Partition of A_n from its graph");
    input_opt(reconstruct);
    family_opts(reconstruct);

    auto* construct = app.add_subcommand("construct", "Build a partition or decomposition");
    construct->add_flag("--family-k1k", o.k1k, "(k+1,k) family; --lambda partitions n");
    construct->add_flag("--family-kk", o.kk, "(k,k) family; --lambda partitions n");
    construct->add_flag("--beta-form", o.beta_form, "(k+1,k) family written on the beta-chain");
    construct->add_option("--n", o.n, "Rank n of sl(n+1)");
    construct->add_option("--lambda", o.lambda, "Integer partition, e.g. 2,1");
    construct->add_option("--x", o.x, "X in H_1..H_n coordinates, e.g. 1/2,0,0");
    construct->add_option("--extend", o.extend, "Extend a regular partition (file or -)");
    construct->add_option("--reference", o.reference, "Cartan reference row for --extend: first or last")
        ->capture_default_str();
    construct->add_option("--finest", o.finest, "Finest partition: row or column");
    construct->add_option("--int-partition", o.int_partition, "Row partition for an integer partition of n+1");

    auto* canonical = app.add_subcommand("canonicalize", "Canonical representative of a partition");
    input_opt(canonical);
    modulo_opt(canonical);

    auto* count = app.add_subcommand("count", "Predicted class counts for A_n");
    count->add_option("--n", o.n, "Rank")->required();

    std::vector<std::string> argv_store{"regdec"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    Runner runner(o, in, out);
    try {
        if (build->parsed()) return runner.build();
        if (enumerate->parsed()) return runner.enumerate();
        if (verify_partition->parsed()) return runner.verify_partition();
        if (verify_decomposition->parsed()) return runner.verify_decomposition();
        if (graph->parsed()) return runner.graph();
        if (reconstruct->parsed()) return runner.reconstruct();
        if (construct->parsed()) return runner.construct();
        if (canonical->parsed()) return runner.canonicalize_cmd();
        if (count->parsed()) return runner.count();
    } catch (const BudgetExceeded& e) {
        Json j;
        j["error"] = "budget_exceeded";
        j["node_budget"] = e.budget();
        j["visited"] = e.visited();
        out << j.dump(2) << '\n';
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace regdec::cli
