#include <json.hpp>

#include <algorithm>

#include "rslab/dlog.hpp"
#include "rslab/error.hpp"

namespace rslab {

namespace {

using json = nlohmann::ordered_json;

template <class T>
T field_of(const json& j, const char* key) {
    if (!j.contains(key)) throw Error(ErrorKind::Usage, std::string("relation file is missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw Error(ErrorKind::Usage, std::string("relation file field '") + key + "' has the wrong type");
    }
}

void expect_same(bool same, const char* what) {
    if (!same) throw Error(ErrorKind::InvalidArgument, std::string("relation file does not match the run: ") + what);
}

}  // namespace

std::string save_relations(const DlogConfig& cfg, const CollectionState& state) {
    json j;
    j["N"] = to_string(cfg.field.order());
    j["q"] = cfg.field.q();
    j["h_poly"] = to_text(cfg.field.modulus());
    j["base"] = to_text(cfg.base);
    j["S"] = cfg.S;
    j["g"] = cfg.g;
    j["variant"] = std::string(to_string(cfg.variant));
    j["decoder"] = std::string(to_string(cfg.decoder));
    j["seed"] = cfg.seed;
    j["trials_done"] = state.trials_done;
    j["hits"] = state.hits;
    json rows = json::array();
    for (const Relation& r : state.system.rows) rows.push_back({{"i", to_string(r.i)}, {"A", r.A}});
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

CollectionState load_relations(const DlogConfig& cfg, std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Usage, std::string("relation file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw Error(ErrorKind::Usage, "relation file must hold a JSON object");
    expect_same(parse_bigint(field_of<std::string>(j, "N")) == cfg.field.order(), "N");
    expect_same(field_of<std::uint64_t>(j, "q") == cfg.field.q(), "q");
    expect_same(field_of<std::string>(j, "h_poly") == to_text(cfg.field.modulus()), "h_poly");
    expect_same(field_of<std::string>(j, "base") == to_text(cfg.base), "base");
    expect_same(field_of<std::vector<Residue>>(j, "S") == cfg.S, "S");
    expect_same(field_of<std::size_t>(j, "g") == cfg.g, "g");
    expect_same(field_of<std::string>(j, "variant") == to_string(cfg.variant), "variant");
    expect_same(field_of<std::string>(j, "decoder") == to_string(cfg.decoder), "decoder");
    expect_same(field_of<std::uint64_t>(j, "seed") == cfg.seed, "seed");

    CollectionState st;
    st.system = RelationSystem{cfg.field.order(), cfg.S, {}};
    st.trials_done = field_of<std::uint64_t>(j, "trials_done");
    st.hits = field_of<std::uint64_t>(j, "hits");
    for (const json& row : field_of<json>(j, "rows")) {
        Relation r{parse_bigint(field_of<std::string>(row, "i")), field_of<std::vector<Residue>>(row, "A")};
        if (r.A.size() != cfg.g || !std::is_sorted(r.A.begin(), r.A.end()))
            throw Error(ErrorKind::InvalidArgument, "relation file row has a malformed subset");
        for (Residue a : r.A)
            if (std::find(cfg.S.begin(), cfg.S.end(), a) == cfg.S.end())
                throw Error(ErrorKind::InvalidArgument, "relation file row uses a point outside S");
        if (!(cfg.base.pow(r.i) == psi_map(cfg.field, r.A)))
            throw Error(ErrorKind::InvalidArgument, "relation file row fails b^i = psi(A)");
        st.system.rows.push_back(std::move(r));
    }
    return st;
}

}  // namespace rslab
