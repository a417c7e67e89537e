#include "confalg/manifest.hpp"

#include <fstream>
#include <sstream>

namespace confalg {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::invalid_argument("manifest: " + where + ": " + what);
}

const json& field(const json& j, const std::string& name,
                  const std::string& where) {
    auto it = j.find(name);
    if (it == j.end()) fail(where, "missing field '" + name + "'");
    return *it;
}

std::string ref(const json& j, const std::string& name,
                const std::string& where) {
    const json& f = field(j, name, where);
    if (!f.is_string()) fail(where, "field '" + name + "' must be a name");
    return f.get<std::string>();
}

const GradedModule& module_ref(const Manifest& m, const json& j,
                               const std::string& name,
                               const std::string& where) {
    std::string r = ref(j, name, where);
    if (!m.has_module(r)) fail(where, "unknown module '" + r + "'");
    return m.module(r);
}

const ConfMap& map_ref(const Manifest& m, const json& j,
                       const std::string& name, const std::string& where) {
    std::string r = ref(j, name, where);
    if (!m.has_map(r)) fail(where, "unknown map '" + r + "'");
    return m.map(r);
}

/// Optional map field: absent or "" means the given zero map.
ConfMap map_or_zero(const Manifest& m, const json& j, const std::string& name,
                    const std::string& where, const ConfMap& zero) {
    if (!j.contains(name) || j[name].get<std::string>().empty()) return zero;
    ConfMap f = map_ref(m, j, name, where);
    if (f.sources != zero.sources || f.target != zero.target ||
        f.degree != zero.degree)
        fail(where, "map '" + j[name].get<std::string>() +
                        "' has the wrong shape for field '" + name + "'");
    return f;
}

std::string kind_of(const json& j, const std::string& where) {
    return ref(j, "kind", where);
}

const json& structure_of_kind(const Manifest& m, const std::string& name,
                              const std::string& kind,
                              const std::string& where) {
    const json& j = m.structure(name);
    if (kind_of(j, where) != kind)
        fail(where, "structure '" + name + "' is not of kind " + kind);
    return j;
}

GradedModule module_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "generators must be an array");
    std::vector<std::pair<std::string, int>> gens;
    for (const json& g : j) {
        if (!g.is_array() || g.size() != 2 || !g[0].is_string() ||
            !g[1].is_number_integer())
            fail(where, "each generator must be [name, degree]");
        gens.emplace_back(g[0].get<std::string>(), g[1].get<int>());
    }
    try {
        return GradedModule(std::move(gens));
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
}

json module_to_json(const GradedModule& m) {
    json gens = json::array();
    for (const auto& [n, d] : m.generators) gens.push_back(json::array({n, d}));
    return gens;
}

ConfMap map_from_json(const Manifest& man, const json& j,
                      const std::string& where) {
    const json& src = field(j, "sources", where);
    if (!src.is_array() || src.empty()) fail(where, "sources must be a list");
    std::vector<GradedModule> sources;
    for (const json& s : src) {
        std::string n = s.get<std::string>();
        if (!man.has_module(n)) fail(where, "unknown module '" + n + "'");
        sources.push_back(man.module(n));
    }
    std::string tname = ref(j, "target", where);
    if (!man.has_module(tname)) fail(where, "unknown module '" + tname + "'");
    const json& deg = field(j, "degree", where);
    if (!deg.is_number_integer()) fail(where, "degree must be an integer");
    ConfMap f = ConfMap::zero(sources, man.module(tname), deg.get<int>());

    for (const json& row : field(j, "table", where)) {
        if (!row.is_array() || row.size() != 2)
            fail(where, "each table row must be [key, values]");
        std::vector<std::string> key;
        for (const json& k : row[0]) key.push_back(k.get<std::string>());
        for (const json& v : row[1]) {
            if (!v.is_array() || v.size() != 2)
                fail(where, "each value must be [generator, polynomial]");
            try {
                f.add_entry(key, v[0].get<std::string>(),
                            Poly::parse(v[1].get<std::string>()));
            } catch (const std::exception& e) {
                fail(where, e.what());
            }
        }
    }
    try {
        f.validate();
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
    return f;
}

json map_to_json(const Manifest& man, const std::string& name,
                 const ConfMap& f) {
    auto it = man.map_endpoints.find(name);
    if (it == man.map_endpoints.end())
        fail(name, "no recorded endpoints for this map");
    json j;
    j["name"] = name;
    j["sources"] = it->second.first;
    j["target"] = it->second.second;
    j["degree"] = f.degree;
    json table = json::array();
    for (const auto& [key, vals] : f.table) {
        json values = json::array();
        for (const auto& [g, p] : vals)
            values.push_back(json::array({g, p.to_string()}));
        table.push_back(json::array({json(key), values}));
    }
    j["table"] = table;
    return j;
}

/// Rebuilds mults/brackets-style tables: {"arity": map name}.
std::map<int, ConfMap> keyed_maps(const Manifest& m, const json& j,
                                  const std::string& name,
                                  const std::string& where) {
    std::map<int, ConfMap> out;
    if (!j.contains(name)) return out;
    for (const auto& [k, v] : j[name].items()) {
        int arity = 0;
        try {
            arity = std::stoi(k);
        } catch (const std::exception&) {
            fail(where, "arity key '" + k + "' is not a number");
        }
        std::string mn = v.get<std::string>();
        if (!m.has_map(mn)) fail(where, "unknown map '" + mn + "'");
        out[arity] = m.map(mn);
    }
    return out;
}

void validate_structure(const Manifest& m, const std::string& name,
                        const json& j);

}  // namespace

bool Manifest::has_module(const std::string& name) const {
    for (const auto& [n, v] : modules)
        if (n == name) return true;
    return false;
}

bool Manifest::has_map(const std::string& name) const {
    for (const auto& [n, v] : maps)
        if (n == name) return true;
    return false;
}

const GradedModule& Manifest::module(const std::string& name) const {
    for (const auto& [n, v] : modules)
        if (n == name) return v;
    fail(name, "unknown module");
}

const ConfMap& Manifest::map(const std::string& name) const {
    for (const auto& [n, v] : maps)
        if (n == name) return v;
    fail(name, "unknown map");
}

const nlohmann::json& Manifest::structure(const std::string& name) const {
    for (const auto& [n, v] : structures)
        if (n == name) return v;
    fail(name, "unknown structure");
}

std::string Manifest::first_of_kind(const std::string& kind) const {
    for (const auto& [n, v] : structures)
        if (v.value("kind", "") == kind) return n;
    return "";
}

void Manifest::add_module(const std::string& name, const GradedModule& m) {
    if (has_module(name)) fail(name, "duplicate module name");
    modules.emplace_back(name, m);
}

void Manifest::add_map(const std::string& name, const ConfMap& f,
                       const std::vector<std::string>& source_names,
                       const std::string& target_name) {
    if (has_map(name)) fail(name, "duplicate map name");
    if (source_names.size() != f.sources.size())
        fail(name, "wrong number of source module names");
    for (size_t i = 0; i < source_names.size(); ++i)
        if (module(source_names[i]) != f.sources[i])
            fail(name, "source module mismatch at slot " +
                           std::to_string(i + 1));
    if (module(target_name) != f.target) fail(name, "target module mismatch");
    maps.emplace_back(name, f);
    map_endpoints[name] = {source_names, target_name};
}

std::string Manifest::ensure_module(const GradedModule& m,
                                    const std::string& hint) {
    for (const auto& [n, v] : modules)
        if (v == m) return n;
    std::string name = hint;
    for (int k = 2; has_module(name); ++k)
        name = hint + "-" + std::to_string(k);
    add_module(name, m);
    return name;
}

void Manifest::add_structure(const std::string& name, nlohmann::json fields) {
    for (const auto& [n, v] : structures)
        if (n == name) fail(name, "duplicate structure name");
    structures.emplace_back(name, std::move(fields));
}

Manifest parse_manifest_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("manifest: ") + e.what());
    }
    Manifest m;
    if (j.contains("metadata"))
        for (const auto& [k, v] : j["metadata"].items())
            m.metadata[k] = v.get<std::string>();
    if (j.contains("modules"))
        for (const json& e : j["modules"]) {
            std::string name = ref(e, "name", "modules");
            m.add_module(name,
                         module_from_json(field(e, "generators", name), name));
        }
    if (j.contains("maps"))
        for (const json& e : j["maps"]) {
            std::string name = ref(e, "name", "maps");
            ConfMap f = map_from_json(m, e, name);
            std::vector<std::string> srcs;
            for (const json& s : e["sources"]) srcs.push_back(s.get<std::string>());
            m.add_map(name, f, srcs, e["target"].get<std::string>());
        }
    if (j.contains("structures"))
        for (const json& e : j["structures"]) {
            std::string name = ref(e, "name", "structures");
            json fields = e;
            fields.erase("name");
            m.add_structure(name, fields);
        }
    for (const auto& [name, fields] : m.structures)
        validate_structure(m, name, fields);
    return m;
}

Manifest parse_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("manifest: cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_manifest_text(buf.str());
}

std::string serialize_manifest(const Manifest& m) {
    json j;
    j["metadata"] = json::object();
    for (const auto& [k, v] : m.metadata) j["metadata"][k] = v;
    j["modules"] = json::array();
    for (const auto& [name, mod] : m.modules) {
        json e;
        e["name"] = name;
        e["generators"] = module_to_json(mod);
        j["modules"].push_back(e);
    }
    j["maps"] = json::array();
    for (const auto& [name, f] : m.maps)
        j["maps"].push_back(map_to_json(m, name, f));
    j["structures"] = json::array();
    for (const auto& [name, fields] : m.structures) {
        json e = fields;
        e["name"] = name;
        j["structures"].push_back(e);
    }
    return j.dump(2) + "\n";
}

void write_manifest(const Manifest& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("manifest: cannot write " + path);
    out << serialize_manifest(m);
}

AssocConfAlgebra manifest_assoc(const Manifest& m, const std::string& name) {
    const json& j = structure_of_kind(m, name, "assoc", name);
    AssocConfAlgebra a;
    a.module = module_ref(m, j, "module", name);
    a.mult = map_ref(m, j, "mult", name);
    if (a.mult.sources != std::vector<GradedModule>{a.module, a.module} ||
        a.mult.target != a.module || a.mult.degree != 0)
        fail(name, "mult must be a degree 0 binary map on the module");
    return a;
}

LieConfAlgebra manifest_lie(const Manifest& m, const std::string& name) {
    const json& j = structure_of_kind(m, name, "lie", name);
    LieConfAlgebra l;
    l.module = module_ref(m, j, "module", name);
    l.bracket = map_ref(m, j, "bracket", name);
    if (l.bracket.sources != std::vector<GradedModule>{l.module, l.module} ||
        l.bracket.target != l.module || l.bracket.degree != 0)
        fail(name, "bracket must be a degree 0 binary map on the module");
    return l;
}

AInfStructure manifest_ainf(const Manifest& m, const std::string& name) {
    const json& j = structure_of_kind(m, name, "ainf", name);
    AInfStructure s;
    s.module = module_ref(m, j, "module", name);
    s.mults = keyed_maps(m, j, "mults", name);
    for (const auto& [k, f] : s.mults) {
        if (k < 1) fail(name, "arities start at 1");
        if (f.arity() != k || f.degree != k - 2 ||
            f.sources != std::vector<GradedModule>(k, s.module) ||
            f.target != s.module)
            fail(name, "product of arity " + std::to_string(k) +
                           " has the wrong shape");
    }
    return s;
}

LInfStructure manifest_linf(const Manifest& m, const std::string& name) {
    const json& j = structure_of_kind(m, name, "linf", name);
    LInfStructure s;
    s.module = module_ref(m, j, "module", name);
    s.brackets = keyed_maps(m, j, "brackets", name);
    for (const auto& [k, f] : s.brackets) {
        if (k < 1) fail(name, "arities start at 1");
        if (f.arity() != k || f.degree != k - 2 ||
            f.sources != std::vector<GradedModule>(k, s.module) ||
            f.target != s.module)
            fail(name, "bracket of arity " + std::to_string(k) +
                           " has the wrong shape");
    }
    return s;
}

TwoTermAInf manifest_two_term(const Manifest& m, const std::string& name) {
    const json& j = structure_of_kind(m, name, "two_term", name);
    TwoTermAInf x;
    x.module = module_ref(m, j, "module", name);
    std::vector<GradedModule> one(1, x.module), two(2, x.module),
        three(3, x.module);
    x.beta = map_or_zero(m, j, "beta", name, ConfMap::zero(one, x.module, -1));
    x.mu2 = map_or_zero(m, j, "mu2", name, ConfMap::zero(two, x.module, 0));
    x.mu3 = map_or_zero(m, j, "mu3", name, ConfMap::zero(three, x.module, 1));
    return x;
}

ConfTwoAlgebra manifest_two_algebra(const Manifest& m,
                                    const std::string& name) {
    const json& j = structure_of_kind(m, name, "two_algebra", name);
    ConfTwoAlgebra c;
    c.c0 = module_ref(m, j, "c0", name);
    c.c1 = module_ref(m, j, "c1", name);
    c.s = map_or_zero(m, j, "s", name, ConfMap::zero({c.c1}, c.c0, 0));
    c.t = map_or_zero(m, j, "t", name, ConfMap::zero({c.c1}, c.c0, 0));
    c.iota = map_or_zero(m, j, "iota", name, ConfMap::zero({c.c0}, c.c1, 0));
    c.pi0 = map_or_zero(m, j, "pi0", name, ConfMap::zero({c.c0, c.c0}, c.c0, 0));
    c.pi1 = map_or_zero(m, j, "pi1", name, ConfMap::zero({c.c1, c.c1}, c.c1, 0));
    c.assoc = map_or_zero(m, j, "assoc", name,
                          ConfMap::zero({c.c0, c.c0, c.c0}, c.c1, 0));
    return c;
}

Contraction manifest_contraction(const Manifest& m, const std::string& name) {
    const json& j = structure_of_kind(m, name, "contraction", name);
    Contraction c;
    c.big = module_ref(m, j, "big", name);
    c.small = module_ref(m, j, "small", name);
    c.rho1 = map_or_zero(m, j, "rho1", name, ConfMap::zero({c.big}, c.big, -1));
    c.theta1 =
        map_or_zero(m, j, "theta1", name, ConfMap::zero({c.small}, c.small, -1));
    c.p = map_or_zero(m, j, "p", name, ConfMap::zero({c.big}, c.small, 0));
    c.i = map_or_zero(m, j, "i", name, ConfMap::zero({c.small}, c.big, 0));
    c.h = map_or_zero(m, j, "h", name, ConfMap::zero({c.big}, c.big, 1));
    return c;
}

ConformalBimodule manifest_bimodule(const Manifest& m,
                                    const std::string& name) {
    const json& j = structure_of_kind(m, name, "bimodule", name);
    ConformalBimodule b;
    b.algebra = manifest_assoc(m, ref(j, "algebra", name));
    b.module = module_ref(m, j, "module", name);
    const GradedModule& a = b.algebra.module;
    b.left = map_or_zero(m, j, "left", name,
                         ConfMap::zero({a, b.module}, b.module, 0));
    b.right = map_or_zero(m, j, "right", name,
                          ConfMap::zero({b.module, a}, b.module, 0));
    return b;
}

AInfRepresentation manifest_representation(const Manifest& m,
                                           const std::string& name) {
    const json& j = structure_of_kind(m, name, "representation", name);
    AInfRepresentation r;
    r.base = manifest_ainf(m, ref(j, "base", name));
    r.module = module_ref(m, j, "module", name);
    if (!j.contains("actions")) fail(name, "missing field 'actions'");
    for (const auto& [k, v] : j["actions"].items()) {
        int arity = std::stoi(k);
        if (arity < 1 || !v.is_array() ||
            static_cast<int>(v.size()) != arity)
            fail(name, "actions[" + k + "] must list one map per slot");
        std::vector<ConfMap> slots;
        for (int t = 1; t <= arity; ++t) {
            std::vector<GradedModule> src(arity, r.base.module);
            src[t - 1] = r.module;
            ConfMap zero = ConfMap::zero(src, r.module, arity - 2);
            const json& mn = v[t - 1];
            if (mn.get<std::string>().empty()) {
                slots.push_back(zero);
                continue;
            }
            std::string n = mn.get<std::string>();
            if (!m.has_map(n)) fail(name, "unknown map '" + n + "'");
            ConfMap f = m.map(n);
            if (f.sources != src || f.target != r.module ||
                f.degree != arity - 2)
                fail(name, "action map '" + n + "' has the wrong shape");
            slots.push_back(f);
        }
        r.actions[arity] = slots;
    }
    return r;
}

ConformalLModule manifest_lmodule(const Manifest& m, const std::string& name) {
    const json& j = structure_of_kind(m, name, "representation", name);
    ConformalLModule lm;
    lm.algebra = manifest_lie(m, ref(j, "base", name));
    lm.module = module_ref(m, j, "module", name);
    lm.action = map_ref(m, j, "action", name);
    if (lm.action.sources !=
            std::vector<GradedModule>{lm.algebra.module, lm.module} ||
        lm.action.target != lm.module || lm.action.degree != 0)
        fail(name, "action must map L x M to M with degree 0");
    return lm;
}

Cochain manifest_cochain(const Manifest& m, const std::string& name) {
    const json& j = structure_of_kind(m, name, "cochain", name);
    const json& n = field(j, "n", name);
    if (!n.is_number_integer() || n.get<int>() < 0)
        fail(name, "n must be a non-negative integer");
    Cochain c;
    c.n = n.get<int>();
    if (c.n == 0) {
        const GradedModule& mod = module_ref(m, j, "module", name);
        for (const json& e : field(j, "elem", name)) {
            if (!e.is_array() || e.size() != 2)
                fail(name, "each coordinate must be [generator, polynomial]");
            std::string g = e[0].get<std::string>();
            if (!mod.has(g)) fail(name, "unknown generator: " + g);
            c.elem.add(g, Poly::parse(e[1].get<std::string>()));
        }
    } else {
        c.map = map_ref(m, j, "map", name);
        if (c.map.arity() != c.n)
            fail(name, "map arity does not match n");
    }
    return c;
}

namespace {

void validate_structure(const Manifest& m, const std::string& name,
                        const json& j) {
    std::string kind = kind_of(j, name);
    if (kind == "assoc")
        manifest_assoc(m, name);
    else if (kind == "lie")
        manifest_lie(m, name);
    else if (kind == "ainf")
        manifest_ainf(m, name);
    else if (kind == "linf")
        manifest_linf(m, name);
    else if (kind == "two_term")
        manifest_two_term(m, name);
    else if (kind == "two_algebra")
        manifest_two_algebra(m, name);
    else if (kind == "contraction")
        manifest_contraction(m, name);
    else if (kind == "bimodule")
        manifest_bimodule(m, name);
    else if (kind == "representation") {
        if (j.contains("actions"))
            manifest_representation(m, name);
        else
            manifest_lmodule(m, name);
    } else if (kind == "cochain")
        manifest_cochain(m, name);
    else
        fail(name, "unknown structure kind '" + kind + "'");
}

std::string put_map(Manifest& m, const std::string& name, const ConfMap& f,
                    const std::vector<std::string>& srcs,
                    const std::string& tgt) {
    std::string n = name;
    for (int k = 2; m.has_map(n); ++k) n = name + "-" + std::to_string(k);
    m.add_map(n, f, srcs, tgt);
    return n;
}

}  // namespace

void manifest_put_ainf(Manifest& m, const std::string& name,
                       const AInfStructure& s) {
    std::string mod = m.ensure_module(s.module, name + ".module");
    json j;
    j["kind"] = "ainf";
    j["module"] = mod;
    j["mults"] = json::object();
    for (const auto& [k, f] : s.mults)
        j["mults"][std::to_string(k)] = put_map(
            m, name + ".mu" + std::to_string(k), f,
            std::vector<std::string>(k, mod), mod);
    m.add_structure(name, j);
}

void manifest_put_linf(Manifest& m, const std::string& name,
                       const LInfStructure& s) {
    std::string mod = m.ensure_module(s.module, name + ".module");
    json j;
    j["kind"] = "linf";
    j["module"] = mod;
    j["brackets"] = json::object();
    for (const auto& [k, f] : s.brackets)
        j["brackets"][std::to_string(k)] = put_map(
            m, name + ".l" + std::to_string(k), f,
            std::vector<std::string>(k, mod), mod);
    m.add_structure(name, j);
}

void manifest_put_lie(Manifest& m, const std::string& name,
                      const LieConfAlgebra& l) {
    std::string mod = m.ensure_module(l.module, name + ".module");
    json j;
    j["kind"] = "lie";
    j["module"] = mod;
    j["bracket"] = put_map(m, name + ".bracket", l.bracket, {mod, mod}, mod);
    m.add_structure(name, j);
}

void manifest_put_two_term(Manifest& m, const std::string& name,
                           const TwoTermAInf& x) {
    std::string mod = m.ensure_module(x.module, name + ".module");
    json j;
    j["kind"] = "two_term";
    j["module"] = mod;
    if (!x.beta.is_zero())
        j["beta"] = put_map(m, name + ".beta", x.beta, {mod}, mod);
    if (!x.mu2.is_zero())
        j["mu2"] = put_map(m, name + ".mu2", x.mu2, {mod, mod}, mod);
    if (!x.mu3.is_zero())
        j["mu3"] = put_map(m, name + ".mu3", x.mu3, {mod, mod, mod}, mod);
    m.add_structure(name, j);
}

void manifest_put_two_algebra(Manifest& m, const std::string& name,
                              const ConfTwoAlgebra& c) {
    std::string c0 = m.ensure_module(c.c0, name + ".c0");
    std::string c1 = m.ensure_module(c.c1, name + ".c1");
    json j;
    j["kind"] = "two_algebra";
    j["c0"] = c0;
    j["c1"] = c1;
    auto put = [&](const std::string& f, const ConfMap& g,
                   const std::vector<std::string>& srcs,
                   const std::string& tgt) {
        if (!g.is_zero()) j[f] = put_map(m, name + "." + f, g, srcs, tgt);
    };
    put("s", c.s, {c1}, c0);
    put("t", c.t, {c1}, c0);
    put("iota", c.iota, {c0}, c1);
    put("pi0", c.pi0, {c0, c0}, c0);
    put("pi1", c.pi1, {c1, c1}, c1);
    put("assoc", c.assoc, {c0, c0, c0}, c1);
    m.add_structure(name, j);
}

void manifest_put_cochain(Manifest& m, const std::string& name,
                          const GradedModule& algebra_module,
                          const GradedModule& coeff_module, const Cochain& c) {
    std::string amod = m.ensure_module(algebra_module, name + ".algebra");
    std::string cmod = m.ensure_module(coeff_module, name + ".coefficients");
    json j;
    j["kind"] = "cochain";
    j["n"] = c.n;
    if (c.n == 0) {
        j["module"] = cmod;
        json elem = json::array();
        for (const auto& [g, p] : c.elem.coords)
            elem.push_back(json::array({g, p.to_string()}));
        j["elem"] = elem;
    } else {
        j["map"] = put_map(m, name + ".map", c.map,
                           std::vector<std::string>(c.n, amod), cmod);
    }
    m.add_structure(name, j);
}

}  // namespace confalg
