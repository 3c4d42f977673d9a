#include "io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace fukalg::io {

namespace {

using json = nlohmann::ordered_json;

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

void check_keys(const json& obj, const char* ctx,
                std::initializer_list<const char*> allowed) {
    if (!obj.is_object())
        throw InputError(std::string(ctx) + ": expected an object");
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok)
            throw InputError(std::string(ctx) + ": unknown key '" + key + "'");
    }
}

const json& field(const json& obj, const char* ctx, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw InputError(std::string(ctx) + ": missing key '" + key + "'");
    return *it;
}

std::string kind_of(const json& doc) {
    return field(doc, "document", "kind").get<std::string>();
}

void expect_kind(const json& doc, const std::string& kind) {
    if (kind_of(doc) != kind)
        throw InputError("document: expected kind '" + kind + "', found '" +
                         kind_of(doc) + "'");
}

std::vector<Generator> parse_generators(const json& arr, bool with_slots) {
    if (!arr.is_array())
        throw InputError("generators: expected an array");
    std::vector<Generator> gens;
    for (const json& g : arr) {
        if (with_slots)
            check_keys(g, "generator", {"name", "src", "tgt", "deg"});
        else
            check_keys(g, "generator", {"name", "deg"});
        Generator out;
        out.name = field(g, "generator", "name").get<std::string>();
        out.deg = field(g, "generator", "deg").get<int>();
        if (with_slots) {
            out.src = field(g, "generator", "src").get<int>();
            out.tgt = field(g, "generator", "tgt").get<int>();
        }
        gens.push_back(out);
    }
    return gens;
}

json emit_generators(const RSpace& S, bool with_slots) {
    json arr = json::array();
    for (const Generator& g : S.gens()) {
        json e;
        e["name"] = g.name;
        if (with_slots) {
            e["src"] = g.src;
            e["tgt"] = g.tgt;
        }
        e["deg"] = g.deg;
        arr.push_back(e);
    }
    return arr;
}

std::vector<std::string> parse_names(const json& arr, const char* ctx) {
    if (!arr.is_array())
        throw InputError(std::string(ctx) + ": expected an array of names");
    std::vector<std::string> out;
    for (const json& n : arr) out.push_back(n.get<std::string>());
    return out;
}

F2Vec parse_sum(const json& arr, const RSpace& S, const char* ctx) {
    F2Vec v = S.zero();
    for (const std::string& n : parse_names(arr, ctx)) {
        if (!S.has(n))
            throw InputError(std::string(ctx) + ": unknown generator '" + n +
                             "'");
        v.flip(S.index_of(n));
    }
    return v;
}

json emit_sum(const F2Vec& v, const RSpace& S) {
    json arr = json::array();
    for (std::size_t g : v.support()) arr.push_back(S.gen(g).name);
    return arr;
}

AInftyAlgebra parse_algebra_json(const json& doc) {
    check_keys(doc, "algebra",
               {"kind", "m", "directed", "d_max", "generators", "ops"});
    int m = field(doc, "algebra", "m").get<int>();
    bool directed = field(doc, "algebra", "directed").get<bool>();
    int d_max = field(doc, "algebra", "d_max").get<int>();
    RSpace space(m, parse_generators(field(doc, "algebra", "generators"), true));
    AInftyAlgebra A(space, directed, d_max);
    for (const json& op : field(doc, "algebra", "ops")) {
        check_keys(op, "op", {"arity", "inputs", "output"});
        auto inputs = parse_names(field(op, "op", "inputs"), "op inputs");
        if (field(op, "op", "arity").get<std::size_t>() != inputs.size())
            throw InputError("op: arity does not match the input count");
        if (inputs.empty() || inputs.size() > static_cast<std::size_t>(d_max))
            throw InputError("op: arity out of range 1..d_max");
        A.mu(static_cast<int>(inputs.size()))
            .add_entry_names(inputs, parse_names(field(op, "op", "output"),
                                                 "op output"));
    }
    return A;
}

json emit_algebra_json(const AInftyAlgebra& A) {
    json doc;
    doc["kind"] = "ainfty_algebra";
    doc["m"] = A.space().idempotents();
    doc["directed"] = A.directed();
    doc["d_max"] = A.d_max();
    doc["generators"] = emit_generators(A.space(), true);
    json ops = json::array();
    for (int d = 1; d <= A.d_max(); ++d)
        for (const auto& [tuple, val] : A.mu(d).entries()) {
            json op;
            op["arity"] = d;
            json in = json::array();
            for (std::size_t g : tuple) in.push_back(A.space().gen(g).name);
            op["inputs"] = in;
            op["output"] = emit_sum(val, A.space());
            ops.push_back(op);
        }
    doc["ops"] = ops;
    return doc;
}

// module/hom structure entries share one shape
void parse_op_entries(const json& arr, const char* ctx, const RSpace& module,
                      auto&& op_of) {
    for (const json& op : arr) {
        check_keys(op, ctx, {"q", "p", "left", "elt", "right", "output"});
        int q = field(op, ctx, "q").get<int>();
        int p = field(op, ctx, "p").get<int>();
        auto left = parse_names(field(op, ctx, "left"), ctx);
        auto right = parse_names(field(op, ctx, "right"), ctx);
        if (q < 0 || p < 0 || left.size() != static_cast<std::size_t>(q) ||
            right.size() != static_cast<std::size_t>(p))
            throw InputError(std::string(ctx) +
                             ": q/p do not match the argument counts");
        std::vector<std::string> names = std::move(left);
        names.push_back(field(op, ctx, "elt").get<std::string>());
        names.insert(names.end(), right.begin(), right.end());
        op_of(q, p).add_entry_names(
            names, parse_names(field(op, ctx, "output"), ctx));
        (void)module;
    }
}

json emit_op_entries(const std::map<std::pair<int, int>, MultiMap>& ops,
                     const RSpace& alg_space, const RSpace& module,
                     const RSpace& target) {
    json arr = json::array();
    for (const auto& [qp, mm] : ops)
        for (const auto& [tuple, val] : mm.entries()) {
            auto [q, p] = qp;
            json op;
            op["q"] = q;
            op["p"] = p;
            json left = json::array(), right = json::array();
            for (int i = 0; i < q; ++i)
                left.push_back(alg_space.gen(tuple[i]).name);
            op["left"] = left;
            op["elt"] = module.gen(tuple[q]).name;
            for (int i = 0; i < p; ++i)
                right.push_back(alg_space.gen(tuple[q + 1 + i]).name);
            op["right"] = right;
            op["output"] = emit_sum(val, target);
            arr.push_back(op);
        }
    return arr;
}

AInftyBimodule parse_module_json(const json& doc, const char* ctx,
                                 const AInftyAlgebra& A) {
    check_keys(doc, ctx, {"generators", "ops"});
    RSpace space(A.space().idempotents(),
                 parse_generators(field(doc, ctx, "generators"), true));
    AInftyBimodule P(A, space);
    parse_op_entries(field(doc, ctx, "ops"), ctx, space,
                     [&](int q, int p) -> MultiMap& { return P.op(q, p); });
    return P;
}

json emit_module_json(const AInftyBimodule& P) {
    json doc;
    doc["generators"] = emit_generators(P.space(), true);
    doc["ops"] =
        emit_op_entries(P.ops(), P.alg().space(), P.space(), P.space());
    return doc;
}

json emit_hom_json(const BimoduleHom& phi) {
    json doc;
    doc["kind"] = "bimodule_hom";
    doc["algebra"] = emit_algebra_json(phi.source().alg());
    doc["source"] = emit_module_json(phi.source());
    doc["target"] = emit_module_json(phi.target());
    doc["comps"] =
        emit_op_entries(phi.comps(), phi.source().alg().space(),
                        phi.source().space(), phi.target().space());
    return doc;
}

json doc_of(const std::string& text) { return parse_text(text); }

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string document_kind(const std::string& text) {
    return kind_of(doc_of(text));
}

AInftyAlgebra parse_algebra(const std::string& text) {
    json doc = doc_of(text);
    expect_kind(doc, "ainfty_algebra");
    return parse_algebra_json(doc);
}

std::string emit_algebra(const AInftyAlgebra& A) {
    return dump(emit_algebra_json(A));
}

AInftyBimodule parse_bimodule(const std::string& text) {
    json doc = doc_of(text);
    expect_kind(doc, "ainfty_bimodule");
    check_keys(doc, "bimodule", {"kind", "algebra", "generators", "ops"});
    AInftyAlgebra A = parse_algebra_json(field(doc, "bimodule", "algebra"));
    json mod;
    mod["generators"] = field(doc, "bimodule", "generators");
    mod["ops"] = field(doc, "bimodule", "ops");
    return parse_module_json(mod, "bimodule", A);
}

std::string emit_bimodule(const AInftyBimodule& P) {
    json doc;
    doc["kind"] = "ainfty_bimodule";
    json alg = emit_algebra_json(P.alg());
    alg.erase("kind");
    doc["algebra"] = alg;
    json mod = emit_module_json(P);
    doc["generators"] = mod["generators"];
    doc["ops"] = mod["ops"];
    return dump(doc);
}

BimoduleHom parse_hom(const std::string& text) {
    json doc = doc_of(text);
    expect_kind(doc, "bimodule_hom");
    check_keys(doc, "hom", {"kind", "algebra", "source", "target", "comps"});
    AInftyAlgebra A = parse_algebra_json(field(doc, "hom", "algebra"));
    AInftyBimodule src =
        parse_module_json(field(doc, "hom", "source"), "source", A);
    AInftyBimodule tgt =
        parse_module_json(field(doc, "hom", "target"), "target", A);
    BimoduleHom phi(src, tgt);
    parse_op_entries(field(doc, "hom", "comps"), "comp", src.space(),
                     [&](int q, int p) -> MultiMap& { return phi.comp(q, p); });
    return phi;
}

std::string emit_hom(const BimoduleHom& phi) {
    json doc = emit_hom_json(phi);
    doc["algebra"].erase("kind");
    return dump(doc);
}

HochschildCochain parse_cochain(const std::string& text) {
    json doc = doc_of(text);
    expect_kind(doc, "hochschild_cochain");
    check_keys(doc, "cochain",
               {"kind", "algebra", "coefficients", "comp0", "comps"});
    AInftyAlgebra A = parse_algebra_json(field(doc, "cochain", "algebra"));
    AInftyBimodule P = parse_module_json(field(doc, "cochain", "coefficients"),
                                         "coefficients", A);
    HochschildCochain phi = zero_cochain(P);
    phi.comp0 = parse_sum(field(doc, "cochain", "comp0"), P.space(), "comp0");
    for (const json& op : field(doc, "cochain", "comps")) {
        check_keys(op, "cochain comp", {"inputs", "output"});
        auto inputs = parse_names(field(op, "cochain comp", "inputs"),
                                  "cochain inputs");
        if (inputs.empty() || inputs.size() >= phi.comps.size() + 1)
            throw InputError("cochain comp: input length out of range 1..m-1");
        phi.comps[inputs.size() - 1].add_entry_names(
            inputs,
            parse_names(field(op, "cochain comp", "output"), "cochain output"));
    }
    validate_cochain(phi);
    return phi;
}

std::string emit_cochain(const HochschildCochain& phi) {
    json doc;
    doc["kind"] = "hochschild_cochain";
    json alg = emit_algebra_json(phi.coeff.alg());
    alg.erase("kind");
    doc["algebra"] = alg;
    doc["coefficients"] = emit_module_json(phi.coeff);
    doc["comp0"] = emit_sum(phi.comp0, phi.coeff.space());
    json comps = json::array();
    for (const MultiMap& mm : phi.comps)
        for (const auto& [tuple, val] : mm.entries()) {
            json op;
            json in = json::array();
            for (std::size_t g : tuple)
                in.push_back(phi.coeff.alg().space().gen(g).name);
            op["inputs"] = in;
            op["output"] = emit_sum(val, phi.coeff.space());
            comps.push_back(op);
        }
    doc["comps"] = comps;
    return dump(doc);
}

BoundaryAlgebra parse_boundary(const std::string& text) {
    json doc = doc_of(text);
    expect_kind(doc, "boundary_algebra");
    check_keys(doc, "boundary_algebra",
               {"kind", "n", "generators", "products", "unit", "D"});
    BoundaryAlgebra A;
    A.n = field(doc, "boundary_algebra", "n").get<int>();
    std::vector<Generator> gens =
        parse_generators(field(doc, "boundary_algebra", "generators"), false);
    A.space = RSpace(1, gens);
    A.product = MultiMap({A.space, A.space}, A.space);
    for (const json& pr : field(doc, "boundary_algebra", "products")) {
        check_keys(pr, "product", {"left", "right", "output"});
        A.product.add_entry_names(
            {field(pr, "product", "left").get<std::string>(),
             field(pr, "product", "right").get<std::string>()},
            parse_names(field(pr, "product", "output"), "product output"));
    }
    A.unit =
        parse_sum(field(doc, "boundary_algebra", "unit"), A.space, "unit");
    A.D = F2Matrix(A.space.dim(), A.space.dim());
    for (const json& e : field(doc, "boundary_algebra", "D")) {
        check_keys(e, "D entry", {"s", "t"});
        A.D.set(A.space.index_of(field(e, "D entry", "s").get<std::string>()),
                A.space.index_of(field(e, "D entry", "t").get<std::string>()),
                true);
    }
    return A;
}

std::string emit_boundary(const BoundaryAlgebra& A) {
    json doc;
    doc["kind"] = "boundary_algebra";
    doc["n"] = A.n;
    doc["generators"] = emit_generators(A.space, false);
    json prods = json::array();
    for (const auto& [tuple, val] : A.product.entries()) {
        json pr;
        pr["left"] = A.space.gen(tuple[0]).name;
        pr["right"] = A.space.gen(tuple[1]).name;
        pr["output"] = emit_sum(val, A.space);
        prods.push_back(pr);
    }
    doc["products"] = prods;
    doc["unit"] = emit_sum(A.unit, A.space);
    json dd = json::array();
    for (std::size_t s = 0; s < A.D.rows(); ++s)
        for (std::size_t t = 0; t < A.D.cols(); ++t)
            if (A.D.get(s, t)) {
                json e;
                e["s"] = A.space.gen(s).name;
                e["t"] = A.space.gen(t).name;
                dd.push_back(e);
            }
    doc["D"] = dd;
    return dump(doc);
}

CROperatorData parse_cr_operator(const std::string& text) {
    json doc = doc_of(text);
    expect_kind(doc, "cr_operator");
    check_keys(doc, "cr_operator", {"kind", "euler", "ends", "arcs"});
    CROperatorData d;
    d.euler = field(doc, "cr_operator", "euler").get<int>();
    for (const json& e : field(doc, "cr_operator", "ends")) {
        check_keys(e, "end", {"role", "theta0", "theta1", "a"});
        End end;
        std::string role = field(e, "end", "role").get<std::string>();
        if (role != "input" && role != "output")
            throw InputError("end: role must be 'input' or 'output'");
        end.input = role == "input";
        end.problem.theta0 = field(e, "end", "theta0").get<double>();
        end.problem.theta1 = field(e, "end", "theta1").get<double>();
        const json& a = field(e, "end", "a");
        if (a.contains("const")) {
            check_keys(a, "end a", {"const"});
            end.problem.angle0 = a["const"].get<double>();
        } else {
            check_keys(a, "end a", {"samples"});
            end.problem.constant = false;
            for (const json& s : field(a, "end a", "samples")) {
                if (!s.is_array() || s.size() != 3)
                    throw InputError("end a: sample must be [axx, axy, ayy]");
                end.problem.samples.push_back({s[0].get<double>(),
                                               s[1].get<double>(),
                                               s[2].get<double>()});
            }
        }
        validate_sl(end.problem);
        d.ends.push_back(end);
    }
    for (const json& a : field(doc, "cr_operator", "arcs"))
        d.arcs.push_back(a.get<double>());
    return d;
}

std::string emit_cr_operator(const CROperatorData& d) {
    json doc;
    doc["kind"] = "cr_operator";
    doc["euler"] = d.euler;
    json ends = json::array();
    for (const End& e : d.ends) {
        json je;
        je["role"] = e.input ? "input" : "output";
        je["theta0"] = e.problem.theta0;
        je["theta1"] = e.problem.theta1;
        json a;
        if (e.problem.constant) {
            a["const"] = e.problem.angle0;
        } else {
            json ss = json::array();
            for (const auto& s : e.problem.samples)
                ss.push_back(json::array({s[0], s[1], s[2]}));
            a["samples"] = ss;
        }
        je["a"] = a;
        ends.push_back(je);
    }
    doc["ends"] = ends;
    doc["arcs"] = d.arcs;
    return dump(doc);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace fukalg::io
