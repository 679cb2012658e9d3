#include "regdec/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "regdec/errors.hpp"

namespace regdec {

namespace {

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

const Json& require_array(const Json& j, const std::string& what) {
    if (!j.is_array()) throw InvalidArgument(what + " must be an array");
    return j;
}

int as_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) throw InvalidArgument(what + " must be an integer");
    return j.get<int>();
}

}  // namespace

Json read_json(const std::string& path, std::istream& standard_input) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << standard_input.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw InvalidArgument("cannot open '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidArgument("malformed JSON in '" + path + "': " + e.what());
    }
}

Json to_json(const Root& r) { return Json(r.coeffs()); }

Root root_from_json(const Json& j) {
    require_array(j, "root");
    Coeffs c;
    for (const auto& x : j) c.push_back(as_int(x, "root coefficient"));
    return Root(std::move(c));
}

Json to_json(const RootSystem& rs, const RootSet& s) {
    std::vector<Coeffs> roots;
    for (auto r : s.members()) roots.push_back(rs.root(r).coeffs());
    std::sort(roots.begin(), roots.end());
    return Json(roots);
}

RootSet root_set_from_json(const RootSystem& rs, const Json& j) {
    require_array(j, "root set");
    RootSet s;
    for (const auto& x : j) {
        const Root r = root_from_json(x);
        if (r.rank() != rs.rank())
            throw InvalidArgument("root " + to_string(r) + " has wrong length for " + to_string(rs.type()));
        const RootIndex i = rs.require_index(r.coeffs());
        if (s.contains(i)) throw InvalidArgument("root " + to_string(r) + " listed twice");
        s.insert(i);
    }
    return s;
}

Json to_json(const RootSystem& rs, const BlockPartition& p) {
    Json j;
    j["family"] = std::string(1, family_letter(rs.type().family));
    j["rank"] = rs.rank();
    Json blocks = Json::array();
    for (const auto& b : p.blocks) blocks.push_back(to_json(rs, b));
    j["blocks"] = std::move(blocks);
    return j;
}

RootSystemType type_from_json(const Json& j) {
    const auto& f = require(j, "family");
    if (!f.is_string() || f.get<std::string>().size() != 1) throw InvalidArgument("\"family\" must be one letter");
    return make_type(f.get<std::string>()[0], as_int(require(j, "rank"), "\"rank\""));
}

BlockPartition partition_from_json(const RootSystem& rs, const Json& j) {
    if (!(type_from_json(j) == rs.type())) throw InvalidArgument("partition is not over " + to_string(rs.type()));
    BlockPartition p;
    for (const auto& b : require_array(require(j, "blocks"), "\"blocks\"")) p.blocks.push_back(root_set_from_json(rs, b));
    return p;
}

Json to_json(const PartitionGraph& g) {
    Json j;
    j["m"] = g.num_vertices;
    Json loops = Json::array();
    for (const auto& l : g.loops) loops.push_back({l.vertex, l.label});
    Json edges = Json::array();
    for (const auto& e : g.edges) edges.push_back({e.plus, e.minus, e.label});
    j["loops"] = std::move(loops);
    j["edges"] = std::move(edges);
    return j;
}

PartitionGraph graph_from_json(const Json& j) {
    PartitionGraph g;
    g.num_vertices = as_int(require(j, "m"), "\"m\"");
    for (const auto& l : require_array(require(j, "loops"), "\"loops\"")) {
        if (!l.is_array() || l.size() != 2) throw InvalidArgument("a loop is [vertex, label]");
        g.loops.push_back({as_int(l[0], "loop vertex"), as_int(l[1], "loop label")});
    }
    for (const auto& e : require_array(require(j, "edges"), "\"edges\"")) {
        if (!e.is_array() || e.size() != 3) throw InvalidArgument("an edge is [plus, minus, label]");
        g.edges.push_back({as_int(e[0], "edge vertex"), as_int(e[1], "edge vertex"), as_int(e[2], "edge label")});
    }
    return g;
}

Json to_json(const GraphReport& r) {
    Json j;
    j["A1"] = r.a1_single_loop_vertex;
    j["A2"] = r.a2_no_isolated_vertex;
    j["A3"] = r.a3_consistent_signs;
    j["A4"] = r.a4_edges_intersect;
    j["A5"] = r.a5_loops_at_hub;
    j["all_pass"] = r.all_pass();
    j["star_shaped"] = r.star_shaped;
    if (r.hub) {
        j["hub"] = *r.hub;
        j["hub_sign"] = r.hub_carries_plus ? "+" : "-";
    } else {
        j["hub"] = nullptr;
    }
    return j;
}

Json to_json(const RootSystem& rs, const RegularDecomposition& d) {
    Json j = to_json(rs, root_partition(d));
    Json cartan = Json::array();
    for (const auto& s : d.summands) {
        Json vs = Json::array();
        for (const auto& v : s.cartan_basis) {
            Json row = Json::array();
            for (const auto& q : v) row.push_back(to_string(q));
            vs.push_back(std::move(row));
        }
        cartan.push_back(std::move(vs));
    }
    j["cartan"] = std::move(cartan);
    return j;
}

RegularDecomposition decomposition_from_json(const RootSystem& rs, const Json& j) {
    const BlockPartition p = partition_from_json(rs, j);
    const auto& cartan = require_array(require(j, "cartan"), "\"cartan\"");
    if (cartan.size() != p.blocks.size())
        throw InvalidArgument("\"cartan\" has " + std::to_string(cartan.size()) + " entries for " +
                              std::to_string(p.blocks.size()) + " blocks");
    RegularDecomposition d;
    d.type = rs.type();
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        RegularSubalgebra s;
        s.root_part = p.blocks[b];
        for (const auto& v : require_array(cartan[b], "Cartan basis")) {
            CartanVector c;
            for (const auto& q : require_array(v, "Cartan vector")) {
                if (q.is_string()) c.push_back(parse_rational(q.get<std::string>()));
                else c.push_back(Rational(as_int(q, "Cartan coefficient")));
            }
            if (static_cast<int>(c.size()) != rs.rank())
                throw InvalidArgument("Cartan vector of length " + std::to_string(c.size()) + ", expected " +
                                      std::to_string(rs.rank()));
            s.cartan_basis.push_back(std::move(c));
        }
        d.summands.push_back(std::move(s));
    }
    return d;
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["valid"] = r.valid;
    j["type"] = {r.type.m, r.type.k};
    if (r.witness) {
        const auto& w = *r.witness;
        Json wj;
        if (w.first) wj["pair"] = {*w.first + 1, *w.second + 1};
        if (!w.left.empty()) {
            wj["bracket_of"] = {w.left, w.right};
            wj["bracket"] = w.bracket;
        }
        wj["escapes_span"] = w.escapes_span;
        wj["reason"] = w.reason;
        j["witness"] = std::move(wj);
    }
    return j;
}

Json enumeration_to_json(const RootSystem& rs, const EnumerationOptions& o, const EnumerationResult& r,
                         bool include_classes) {
    Json j;
    j["family"] = std::string(1, family_letter(rs.type().family));
    j["rank"] = rs.rank();
    j["min_blocks"] = o.min_blocks;
    if (o.max_blocks > 0) j["max_blocks"] = o.max_blocks;
    j["modulo"] = to_string(o.modulo);
    j["class_count"] = r.classes.size();
    j["node_count"] = r.node_count;
    j["wall_time"] = r.wall_seconds;
    if (include_classes) {
        Json cls = Json::array();
        for (const auto& p : r.classes) cls.push_back(to_json(rs, p)["blocks"]);
        j["classes"] = std::move(cls);
    }
    return j;
}

std::string enumeration_csv_header() { return "family,rank,min_blocks,modulo,class_count,node_count,wall_time"; }

std::string enumeration_csv_row(const RootSystem& rs, const EnumerationOptions& o, const EnumerationResult& r) {
    std::ostringstream s;
    // the modulo list contains commas
    s << family_letter(rs.type().family) << ',' << rs.rank() << ',' << o.min_blocks << ",\"" << to_string(o.modulo)
      << "\"," << r.classes.size() << ',' << r.node_count << ',' << r.wall_seconds;
    return s.str();
}

}  // namespace regdec
