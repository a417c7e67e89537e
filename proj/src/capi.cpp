#include "confalg_c.h"

#include <cstring>
#include <random>
#include <sstream>

#include "confalg/manifest.hpp"

using namespace confalg;

struct confalg_manifest {
    Manifest m;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

/// Thrown by command handlers for malformed or missing inputs.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a computation detects a mathematical failure.
struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string structure;
    int up_to = 0;
    int arity = 0;
    int dmax = -1;
    int lmax = -1;
    int tree_mode = 0;
    std::string out_path;
    unsigned seed = 0;
    bool has_seed = false;

    explicit Options(const confalg_options* o) {
        if (!o) return;
        if (o->structure) structure = o->structure;
        up_to = o->up_to;
        arity = o->arity;
        dmax = o->dmax;
        lmax = o->lmax;
        tree_mode = o->tree_mode;
        if (o->out_path) out_path = o->out_path;
        seed = o->seed;
        has_seed = o->has_seed != 0;
    }

    int need_up_to(const std::string& cmd) const {
        if (up_to <= 0) throw input_error(cmd + " requires --up-to");
        return up_to;
    }
};

/// Structure to operate on: the named one when --name was given (its kind
/// must match), otherwise the first of the kind.
std::string pick(const Manifest& m, const Options& o, const std::string& kind) {
    if (!o.structure.empty()) {
        if (m.structure(o.structure).value("kind", "") != kind)
            throw input_error("structure '" + o.structure + "' is not of kind " +
                              kind);
        return o.structure;
    }
    std::string n = m.first_of_kind(kind);
    if (n.empty()) throw input_error("manifest has no structure of kind " + kind);
    return n;
}

bool has_kind(const Manifest& m, const std::string& kind) {
    return !m.first_of_kind(kind).empty();
}

int report_check(std::ostream& out, const std::string& what,
                 const CheckReport& r) {
    out << what << ": " << (r.pass ? "pass" : "FAIL") << "\n";
    if (!r.pass) out << r.detail << "\n";
    return r.pass ? CONFALG_OK : CONFALG_CHECK_FAILED;
}

int report_items(std::ostream& out, const std::string& what,
                 const ItemizedReport& r) {
    out << what << ": " << (r.pass ? "pass" : "FAIL") << "\n";
    for (const auto& [label, item] : r.items)
        out << "  " << label << ": " << (item.pass ? "pass" : "FAIL") << "\n";
    if (!r.pass) out << r.detail << "\n";
    return r.pass ? CONFALG_OK : CONFALG_CHECK_FAILED;
}

std::string cochain_witness(const Cochain& c) {
    if (c.is_zero()) return "0";
    std::ostringstream out;
    if (c.n == 0) {
        const auto& [g, p] = *c.elem.coords.begin();
        out << "(" << p.to_string() << ")*" << g;
    } else {
        const auto& [key, vals] = *c.map.table.begin();
        out << "(";
        for (size_t i = 0; i < key.size(); ++i)
            out << (i ? ", " : "") << key[i];
        const auto& [g, p] = *vals.begin();
        out << ") -> (" << p.to_string() << ")*" << g;
    }
    return out.str();
}

void write_out(const Manifest& m, const Options& o) {
    if (!o.out_path.empty()) write_manifest(m, o.out_path);
}

/// The manifest's cochain together with the modules it acts between; when
/// absent and --seed was given, draws a random one over the bimodule.
Cochain get_or_random_cochain(const Manifest& m, const Options& o,
                              const ConformalBimodule& b, std::ostream& out) {
    std::string name =
        !o.structure.empty() &&
                m.structure(o.structure).value("kind", "") == "cochain"
            ? o.structure
            : m.first_of_kind("cochain");
    if (!name.empty()) return manifest_cochain(m, name);
    if (!o.has_seed)
        throw input_error("no cochain in the manifest and no --seed given");
    if (o.arity <= 0 || o.dmax < 0 || o.lmax < 0)
        throw input_error("random cochains need --arity, --dmax and --lmax");
    std::mt19937 rng(o.seed);
    out << "using a random cochain of arity " << o.arity << " (seed " << o.seed
        << ")\n";
    return random_cochain(b.algebra.module, b.module, o.arity, o.dmax, o.lmax,
                          rng);
}

int cmd_check_assoc(const Manifest& m, const Options& o, std::ostream& out) {
    std::string n = pick(m, o, "assoc");
    return report_check(out, "check-assoc " + n,
                        check_associativity(manifest_assoc(m, n)));
}

int cmd_check_lie(const Manifest& m, const Options& o, std::ostream& out) {
    std::string n = pick(m, o, "lie");
    return report_check(out, "check-lie " + n, check_lie(manifest_lie(m, n)));
}

int cmd_check_ainf(const Manifest& m, const Options& o, std::ostream& out) {
    std::string n = pick(m, o, "ainf");
    return report_check(
        out, "check-ainf " + n,
        check_ainf(manifest_ainf(m, n), o.need_up_to("check-ainf")));
}

int cmd_check_linf(const Manifest& m, const Options& o, std::ostream& out) {
    std::string n = pick(m, o, "linf");
    return report_check(
        out, "check-linf " + n,
        check_linf(manifest_linf(m, n), o.need_up_to("check-linf")));
}

int cmd_check_2term(const Manifest& m, const Options& o, std::ostream& out) {
    std::string n = pick(m, o, "two_term");
    return report_items(out, "check-2term " + n,
                        check_two_term(manifest_two_term(m, n)));
}

int cmd_mc_check(const Manifest& m, const Options& o, std::ostream& out) {
    std::string n = pick(m, o, "ainf");
    AInf1Structure sh = shift(manifest_ainf(m, n));
    int k = o.need_up_to("mc-check");
    if (is_maurer_cartan(sh, k)) {
        out << "mc-check " << n << ": pass\n";
        return CONFALG_OK;
    }
    // the shifted identities give the witness
    return report_check(out, "mc-check " + n, check_ainf1(sh, k));
}

int cmd_delta(const Manifest& m, const Options& o, std::ostream& out) {
    std::string bn = m.first_of_kind("bimodule");
    if (bn.empty()) throw input_error("delta needs a bimodule");
    ConformalBimodule b = manifest_bimodule(m, bn);
    Cochain c = get_or_random_cochain(m, o, b, out);
    Cochain d = hochschild_delta(b, c);
    out << "delta of the arity-" << c.n << " cochain: "
        << (d.is_zero() ? "0" : cochain_witness(d) + " ...") << "\n";
    if (!o.out_path.empty()) {
        Manifest res;
        manifest_put_cochain(res, "delta", b.algebra.module, b.module, d);
        write_out(res, o);
    }
    return CONFALG_OK;
}

int cmd_cocycle(const Manifest& m, const Options& o, std::ostream& out) {
    std::string bn = m.first_of_kind("bimodule");
    if (bn.empty()) throw input_error("cocycle needs a bimodule");
    ConformalBimodule b = manifest_bimodule(m, bn);
    Cochain c = get_or_random_cochain(m, o, b, out);
    Cochain d = hochschild_delta(b, c);
    if (d.is_zero()) {
        out << "cocycle: yes\n";
        return CONFALG_OK;
    }
    out << "cocycle: no, delta has " << cochain_witness(d) << "\n";
    return CONFALG_CHECK_FAILED;
}

int cmd_hh_ranks(const Manifest& m, const Options& o, std::ostream& out) {
    std::string bn = m.first_of_kind("bimodule");
    if (bn.empty()) throw input_error("hh-ranks needs a bimodule");
    if (o.arity <= 0 || o.dmax < 0 || o.lmax < 0)
        throw input_error("hh-ranks needs --arity, --dmax and --lmax");
    DeltaRanks r =
        truncated_delta_ranks(manifest_bimodule(m, bn), o.arity, o.dmax, o.lmax);
    out << "arity " << o.arity << " (D-degree <= " << o.dmax
        << ", lambda-degree <= " << o.lmax << "): domain " << r.domain_dim
        << ", rank " << r.rank << ", kernel " << r.kernel_dim << "\n";
    return CONFALG_OK;
}

/// First representation entry with a single lie-module action.
std::string first_lmodule(const Manifest& m) {
    for (const auto& [n, j] : m.structures)
        if (j.value("kind", "") == "representation" && j.contains("action"))
            return n;
    return "";
}

/// First representation entry with an ainf action table.
std::string first_arep(const Manifest& m) {
    for (const auto& [n, j] : m.structures)
        if (j.value("kind", "") == "representation" && j.contains("actions"))
            return n;
    return "";
}

int cmd_lie_delta(const Manifest& m, const Options& o, std::ostream& out) {
    std::string rn = first_lmodule(m);
    if (rn.empty()) throw input_error("lie-delta needs a lie representation");
    ConformalLModule lm = manifest_lmodule(m, rn);
    std::string cn = m.first_of_kind("cochain");
    if (cn.empty()) throw input_error("lie-delta needs a cochain");
    Cochain c = manifest_cochain(m, cn);
    Cochain d = lie_delta(lm, c);
    out << "lie-delta of the arity-" << c.n << " cochain: "
        << (d.is_zero() ? "0" : cochain_witness(d) + " ...") << "\n";
    if (!o.out_path.empty()) {
        Manifest res;
        manifest_put_cochain(res, "delta", lm.algebra.module, lm.module, d);
        write_out(res, o);
    }
    return CONFALG_OK;
}

int cmd_ainf_delta(const Manifest& m, const Options& o, std::ostream& out) {
    std::string sn = m.first_of_kind("ainf");
    std::string rn = first_arep(m);
    std::string cn = m.first_of_kind("cochain");
    if (sn.empty() || rn.empty() || cn.empty())
        throw input_error(
            "ainf-delta needs an ainf structure, a representation and a "
            "cochain");
    AInfStructure s = manifest_ainf(m, sn);
    AInfRepresentation r = manifest_representation(m, rn);
    Cochain c = manifest_cochain(m, cn);
    if (c.n < 1) throw input_error("ainf-delta needs a cochain of arity >= 1");

    GradedModule sd = shift(semidirect(s, r)).module;
    GradedCochain phi;
    phi.module = sd;
    phi.degree = -(c.n - 1);
    ConfMap part =
        relabel(c.map, sd, std::vector<std::string>(c.n, "a."), "m.");
    part.degree = phi.degree;
    part.validate();
    phi.add_part(part);

    GradedCochain d = restrict_to_coefficients(s, r, phi);
    out << "ainf-delta of the arity-" << c.n << " cochain: "
        << (d.is_zero() ? "0" : "nonzero in arity " +
                                    std::to_string(d.parts.begin()->first))
        << "\n";
    if (!o.out_path.empty()) {
        Manifest res;
        Cochain dc;
        dc.n = c.n + 1;
        dc.map = d.part(c.n + 1);
        manifest_put_cochain(res, "delta", sd, sd, dc);
        write_out(res, o);
    }
    return CONFALG_OK;
}

int cmd_skeletal(const Manifest& m, const Options& o, std::ostream& out) {
    std::string bn = m.first_of_kind("bimodule");
    std::string cn = m.first_of_kind("cochain");
    if (bn.empty() || cn.empty())
        throw input_error("skeletal needs a bimodule and a cochain");
    ConformalBimodule b = manifest_bimodule(m, bn);
    Cochain theta = manifest_cochain(m, cn);
    if (theta.n < 3)
        throw input_error("skeletal needs a cochain of arity >= 3");
    AInfStructure sk;
    try {
        sk = skeletal_from_cocycle({b, theta.n - 1, theta});
    } catch (const std::invalid_argument& e) {
        if (std::string(e.what()).find("not a cocycle") != std::string::npos)
            throw check_failure(e.what());
        throw;
    }
    out << "skeletal structure with products in arities 2 and " << theta.n
        << "\n";
    if (!o.out_path.empty()) {
        Manifest res;
        manifest_put_ainf(res, "skeletal", sk);
        write_out(res, o);
    }
    return CONFALG_OK;
}

int cmd_functor_s(const Manifest& m, const Options& o, std::ostream& out) {
    std::string n = pick(m, o, "two_term");
    TwoTermAInf x = manifest_two_term(m, n);
    ConfTwoAlgebra c;
    try {
        c = functor_s(x);
    } catch (const std::invalid_argument& e) {
        throw check_failure(e.what());
    }
    int code = report_items(out, "functor-s " + n, check_two_algebra(c));
    if (!o.out_path.empty()) {
        Manifest res;
        manifest_put_two_algebra(res, n + ".cells", c);
        write_out(res, o);
    }
    return code;
}

int cmd_functor_t(const Manifest& m, const Options& o, std::ostream& out) {
    std::string n = pick(m, o, "two_algebra");
    TwoTermAInf x = functor_t(manifest_two_algebra(m, n));
    int code = report_items(out, "functor-t " + n, check_two_term(x));
    if (!o.out_path.empty()) {
        Manifest res;
        manifest_put_two_term(res, n + ".two-term", x);
        write_out(res, o);
    }
    return code;
}

int cmd_roundtrip(const Manifest& m, const Options& o, std::ostream& out) {
    if (has_kind(m, "two_term") &&
        (o.structure.empty() ||
         m.structure(o.structure).value("kind", "") == "two_term")) {
        std::string n = pick(m, o, "two_term");
        TwoTermAInf x = manifest_two_term(m, n);
        ConfTwoAlgebra c = functor_s(x);
        bool same = functor_t(c) == x;
        out << "T(S(" << n << ")) == " << n << ": " << (same ? "yes" : "NO")
            << "\n";
        int code = report_items(out, "upsilon on S(" + n + ")",
                                check_two_alg_morphism(upsilon(c)));
        return same ? code : CONFALG_CHECK_FAILED;
    }
    std::string n = pick(m, o, "two_algebra");
    ConfTwoAlgebra c = manifest_two_algebra(m, n);
    return report_items(out, "upsilon on " + n,
                        check_two_alg_morphism(upsilon(c)));
}

int cmd_transfer(const Manifest& m, const Options& o, std::ostream& out) {
    std::string cn = m.first_of_kind("contraction");
    std::string sn = m.first_of_kind("ainf");
    if (cn.empty() || sn.empty())
        throw input_error("transfer needs a contraction and an ainf structure");
    Contraction c = manifest_contraction(m, cn);
    AInf1Structure sh = shift(manifest_ainf(m, sn));
    if (!(sh.module == c.big))
        throw input_error(
            "the shifted structure does not live on the contraction's big "
            "module");
    CheckReport cr = check_contraction(c);
    if (!cr.pass) return report_check(out, "transfer " + cn, cr);
    int k = o.need_up_to("transfer");
    std::optional<TreeMode> mode;
    if (o.tree_mode == 1) mode = TreeMode::binary;
    if (o.tree_mode == 2) mode = TreeMode::general;
    AInfStructure t = unshift(transfer(c, sh, k, mode));
    // record every requested arity, zero products included
    for (int a = 2; a <= k; ++a)
        if (!t.mults.count(a))
            t.mults[a] = ConfMap::zero(std::vector<GradedModule>(a, t.module),
                                       t.module, a - 2);
    for (const auto& [arity, f] : t.mults)
        out << "theta_" << arity << ": " << (f.is_zero() ? "0" : "nonzero")
            << "\n";
    if (!o.out_path.empty()) {
        Manifest res;
        manifest_put_ainf(res, "transferred", t);
        write_out(res, o);
    }
    return CONFALG_OK;
}

int cmd_skew(const Manifest& m, const Options& o, std::ostream& out) {
    if (has_kind(m, "assoc") &&
        (o.structure.empty() ||
         m.structure(o.structure).value("kind", "") == "assoc")) {
        std::string n = pick(m, o, "assoc");
        LieConfAlgebra l = skew_symmetrize_assoc(manifest_assoc(m, n));
        int code = report_check(out, "skew " + n, check_lie(l));
        if (!o.out_path.empty()) {
            Manifest res;
            manifest_put_lie(res, n + ".lie", l);
            write_out(res, o);
        }
        return code;
    }
    std::string n = pick(m, o, "ainf");
    LInfStructure l = skew_symmetrize_ainf(manifest_ainf(m, n));
    int k = o.up_to > 0 ? o.up_to : 4;
    int code = report_check(out, "skew " + n, check_linf(l, k));
    if (!o.out_path.empty()) {
        Manifest res;
        manifest_put_linf(res, n + ".linf", l);
        write_out(res, o);
    }
    return code;
}

int cmd_semidirect(const Manifest& m, const Options& o, std::ostream& out) {
    std::string sn = m.first_of_kind("ainf");
    std::string rn = first_arep(m);
    if (sn.empty() || rn.empty())
        throw input_error("semidirect needs an ainf structure and a "
                          "representation");
    AInfStructure s = semidirect(manifest_ainf(m, sn),
                                 manifest_representation(m, rn));
    int k = o.up_to > 0 ? o.up_to : 4;
    int code = report_check(out, "semidirect " + sn, check_ainf(s, k));
    if (!o.out_path.empty()) {
        Manifest res;
        manifest_put_ainf(res, "semidirect", s);
        write_out(res, o);
    }
    return code;
}

using Handler = int (*)(const Manifest&, const Options&, std::ostream&);

const std::pair<const char*, Handler> kCommands[] = {
    {"check-assoc", cmd_check_assoc}, {"check-lie", cmd_check_lie},
    {"check-ainf", cmd_check_ainf},   {"check-linf", cmd_check_linf},
    {"check-2term", cmd_check_2term}, {"mc-check", cmd_mc_check},
    {"delta", cmd_delta},             {"ainf-delta", cmd_ainf_delta},
    {"lie-delta", cmd_lie_delta},     {"cocycle", cmd_cocycle},
    {"hh-ranks", cmd_hh_ranks},       {"skeletal", cmd_skeletal},
    {"functor-s", cmd_functor_s},     {"functor-t", cmd_functor_t},
    {"roundtrip", cmd_roundtrip},     {"transfer", cmd_transfer},
    {"skew", cmd_skew},               {"semidirect", cmd_semidirect},
};

}  // namespace

confalg_manifest* confalg_manifest_open(const char* path, char** error) {
    try {
        return new confalg_manifest{parse_manifest(path)};
    } catch (const std::exception& e) {
        if (error) *error = dup_string(e.what());
        return nullptr;
    }
}

confalg_manifest* confalg_manifest_parse(const char* text, char** error) {
    try {
        return new confalg_manifest{parse_manifest_text(text)};
    } catch (const std::exception& e) {
        if (error) *error = dup_string(e.what());
        return nullptr;
    }
}

char* confalg_manifest_serialize(const confalg_manifest* m) {
    return dup_string(serialize_manifest(m->m));
}

void confalg_manifest_free(confalg_manifest* m) { delete m; }

int confalg_run(const confalg_manifest* m, const char* command,
                const confalg_options* options, char** report) {
    std::ostringstream out;
    int code = CONFALG_INPUT_ERROR;
    try {
        Handler h = nullptr;
        for (const auto& [name, fn] : kCommands)
            if (command && name == std::string(command)) h = fn;
        if (!h) throw input_error("unknown command '" +
                                  std::string(command ? command : "") + "'");
        code = h(m->m, Options(options), out);
    } catch (const check_failure& e) {
        out << "FAIL: " << e.what() << "\n";
        code = CONFALG_CHECK_FAILED;
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        code = CONFALG_INPUT_ERROR;
    }
    if (report) *report = dup_string(out.str());
    return code;
}

const char* const* confalg_commands(void) {
    static const char* names[std::size(kCommands) + 1];
    for (size_t i = 0; i < std::size(kCommands); ++i)
        names[i] = kCommands[i].first;
    names[std::size(kCommands)] = nullptr;
    return names;
}

void confalg_string_free(char* s) { std::free(s); }
