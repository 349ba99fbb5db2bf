#include "flagpoly/json_io.hpp"

#include <fstream>

#include "flagpoly/digest.hpp"
#include "flagpoly/errors.hpp"

namespace flagpoly {

Json label_to_json(const FacetLabel& l) {
    switch (l.kind) {
        case FacetLabel::Kind::ADiag: return {{"kind", "adiag"}, {"a", l.a}, {"b", l.b}};
        case FacetLabel::Kind::DPair: return {{"kind", "dpair"}, {"a", l.a}, {"b", l.b}};
        case FacetLabel::Kind::DDiam: return {{"kind", "ddiam"}, {"a", l.a}, {"color", l.color}};
        case FacetLabel::Kind::BSet: {
            std::vector<int> elements;
            for (int i = 0; i < 64; ++i)
                if (l.mask >> i & 1) elements.push_back(i + 1);
            return {{"kind", "bset"}, {"elements", elements}};
        }
        case FacetLabel::Kind::Derived: return {{"kind", "derived"}, {"tag", l.tag}};
    }
    throw Error(ErrorKind::BadInput, "unknown label kind");
}

FacetLabel label_from_json(const Json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "adiag" || kind == "dpair") {
            int a = j.at("a").get<int>(), b = j.at("b").get<int>();
            if (a < 0 || b <= a) throw Error(ErrorKind::BadInput, "label needs 0 <= a < b");
            FacetLabel l;
            l.kind = kind == "adiag" ? FacetLabel::Kind::ADiag : FacetLabel::Kind::DPair;
            l.a = a;
            l.b = b;
            return l;
        }
        if (kind == "ddiam") {
            int a = j.at("a").get<int>(), color = j.at("color").get<int>();
            if (a < 0 || (color != 0 && color != 1))
                throw Error(ErrorKind::BadInput, "diameter label needs a >= 0 and color 0|1");
            FacetLabel l;
            l.kind = FacetLabel::Kind::DDiam;
            l.a = a;
            l.color = color;
            return l;
        }
        if (kind == "bset") {
            std::uint64_t mask = 0;
            for (const Json& e : j.at("elements")) {
                int v = e.get<int>();
                if (v < 1 || v > 63)
                    throw Error(ErrorKind::BadInput, "bset elements must lie in 1..63");
                std::uint64_t bit = std::uint64_t(1) << (v - 1);
                if (mask & bit) throw Error(ErrorKind::BadInput, "repeated bset element");
                mask |= bit;
            }
            if (mask == 0) throw Error(ErrorKind::BadInput, "bset label must be non-empty");
            return FacetLabel::bset(mask);
        }
        if (kind == "derived") return FacetLabel::derived(j.at("tag").get<std::string>());
        throw Error(ErrorKind::BadInput, "unknown label kind '" + kind + "'");
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::BadInput, std::string("malformed facet label: ") + e.what());
    }
}

Json graph_to_json(const CompatibilityGraph& g) {
    Json facets = Json::array();
    for (const FacetLabel& l : g.labels()) facets.push_back(label_to_json(l));
    Json edges = Json::array();
    for (auto [i, j] : g.edge_list()) edges.push_back({i, j});
    return {{"dimension", g.dimension()}, {"facets", facets}, {"edges", edges}};
}

CompatibilityGraph graph_from_json(const Json& j) {
    try {
        int dim = j.at("dimension").get<int>();
        std::vector<FacetLabel> labels;
        for (const Json& f : j.at("facets")) labels.push_back(label_from_json(f));
        std::vector<std::pair<int, int>> edges;
        for (const Json& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw Error(ErrorKind::BadInput, "graph edges must be [i,j] pairs");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return CompatibilityGraph(dim, std::move(labels), edges);
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::BadInput, std::string("malformed graph: ") + e.what());
    }
}

Json building_set_to_json(const BuildingSet& b) {
    Json sets = Json::array();
    for (Mask m : b.sets) {
        std::vector<int> elements;
        for (int i = 0; i < 64; ++i)
            if (m >> i & 1) elements.push_back(i + 1);
        sets.push_back(elements);
    }
    return {{"ground", b.ground}, {"sets", sets}};
}

BuildingSet building_set_from_json(const Json& j) {
    try {
        int ground = j.at("ground").get<int>();
        if (ground < 1 || ground > 63)
            throw Error(ErrorKind::BadInput, "ground size must be between 1 and 63");
        std::vector<Mask> sets;
        for (const Json& s : j.at("sets")) {
            Mask m = 0;
            for (const Json& e : s) {
                int v = e.get<int>();
                if (v < 1 || v > ground)
                    throw Error(ErrorKind::BadInput,
                                "set element " + std::to_string(v) + " outside the ground set");
                Mask bit = Mask(1) << (v - 1);
                if (m & bit) throw Error(ErrorKind::BadInput, "repeated set element");
                m |= bit;
            }
            sets.push_back(m);
        }
        return BuildingSet(ground, std::move(sets));
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::BadInput, std::string("malformed building set: ") + e.what());
    }
}

Json certificate_to_json(const CompatibilityGraph& source, const std::vector<ShaveStep>& steps,
                         const std::string& target_canonical,
                         const std::vector<IntPolynomial>& gamma_trace) {
    std::vector<FacetLabel> labels = source.labels();
    Json jsteps = Json::array();
    for (const ShaveStep& st : steps) {
        jsteps.push_back({{"f1", label_to_json(labels[std::size_t(st.f1)])},
                          {"f2", label_to_json(labels[std::size_t(st.f2)])}});
        labels.push_back(st.new_label);
    }
    Json jtrace = Json::array();
    for (const IntPolynomial& p : gamma_trace) jtrace.push_back(p.coeffs());
    return {{"source", graph_to_json(source)},
            {"steps", jsteps},
            {"target_canonical", target_canonical},
            {"gamma_trace", jtrace}};
}

CertificateData certificate_from_json(const Json& j) {
    try {
        CompatibilityGraph source = graph_from_json(j.at("source"));
        std::vector<std::pair<FacetLabel, FacetLabel>> step_labels;
        for (const Json& s : j.at("steps"))
            step_labels.emplace_back(label_from_json(s.at("f1")), label_from_json(s.at("f2")));
        std::vector<IntPolynomial> trace;
        for (const Json& t : j.at("gamma_trace"))
            trace.push_back(IntPolynomial(t.get<std::vector<std::int64_t>>()));
        return CertificateData{std::move(source), std::move(step_labels),
                               j.at("target_canonical").get<std::string>(), std::move(trace)};
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::BadInput, std::string("malformed certificate: ") + e.what());
    }
}

std::vector<ShaveStep> resolve_steps(const CompatibilityGraph& source,
                                     const std::vector<std::pair<FacetLabel, FacetLabel>>& steps) {
    std::vector<ShaveStep> out;
    CompatibilityGraph g = source;
    for (const auto& [l1, l2] : steps) {
        int f1 = g.find_label(l1), f2 = g.find_label(l2);
        if (f1 < 0 || f2 < 0)
            throw Error(ErrorKind::BadInput,
                        "certificate step names an unknown facet " +
                            (f1 < 0 ? l1 : l2).to_string());
        g = shave(g, f1, f2);
        out.push_back(ShaveStep{f1, f2, g.label(int(g.size()) - 1)});
    }
    return out;
}

std::string stable_digest(const Json& j) {
    return hex64(fnv1a64(j.dump()));
}

std::string dump_json(const Json& j) {
    return j.dump(2) + "\n";
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::BadInput, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::BadInput, path + " is not valid JSON: " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::BadInput, "cannot write " + path);
    out << dump_json(j);
    if (!out) throw Error(ErrorKind::BadInput, "failed writing " + path);
}

} // namespace flagpoly
