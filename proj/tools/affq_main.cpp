// Command-line surface for the library: root data, Weyl and affine Weyl
// computations, nil-Hecke products, the j maps, Pieri expansions, Pontryagin
// products and cominuscule quantum products, plus `verify-paper`.
#include <CLI11.hpp>
#include <iostream>

#include "affq/io.hpp"
#include "affq/verify.hpp"

using namespace affq;
using nlohmann::json;

namespace {

RootSystemPtr build_rs(const std::string& type) { return RootSystem::build(CartanType::parse(type)); }

void emit(bool as_json, const json& j, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

int cmd_rootinfo(const std::string& type, bool as_json) {
    auto rs = build_rs(type);
    json j;
    j["type"] = rs->name();
    j["rank"] = rs->rank();
    j["cartan"] = rs->cartan();
    std::vector<std::string> roots;
    for (const auto& r : rs->positive_roots())
        roots.push_back(Polynomial::from_root(*rs, r).to_string(rs.get()));
    j["positive_roots"] = roots;
    j["highest_root"] = Polynomial::from_root(*rs, rs->highest_root()).to_string(rs.get());
    j["minuscule_nodes"] = std::vector<int>(rs->minuscule_nodes().begin(), rs->minuscule_nodes().end());
    j["weyl_order"] = rs->weyl().order();

    std::ostringstream os;
    os << "type " << rs->name() << ", rank " << rs->rank() << "\n";
    os << "positive roots (" << roots.size() << "):";
    for (const auto& r : roots) os << " " << r;
    os << "\nhighest root: " << j["highest_root"].get<std::string>() << "\n";
    os << "minuscule nodes:";
    for (int i : rs->minuscule_nodes()) os << " " << i;
    os << "\n|W| = " << rs->weyl().order();
    emit(as_json, j, os.str());
    return 0;
}

int cmd_weyl(const std::string& type, const std::string& wstr, const std::string& vstr, bool as_json) {
    auto rs = build_rs(type);
    WeylElement w = parse_weyl_word(rs.get(), wstr);
    json j;
    j["w"] = format_weyl_word(w);
    j["length"] = w.length();
    j["inverse"] = format_weyl_word(w.inverse());
    std::ostringstream os;
    os << "w = " << format_weyl_word(w) << "\nlength = " << w.length()
       << "\ninverse = " << format_weyl_word(w.inverse());
    if (!vstr.empty()) {
        WeylElement v = parse_weyl_word(rs.get(), vstr);
        j["v"] = format_weyl_word(v);
        j["wv"] = format_weyl_word(w * v);
        j["bruhat_leq"] = bruhat_leq(w, v);
        j["weak_left_leq"] = weak_left_leq(w, v);
        os << "\nv = " << format_weyl_word(v) << "\nw*v = " << format_weyl_word(w * v)
           << "\nw <= v (Bruhat): " << (bruhat_leq(w, v) ? "yes" : "no")
           << "\nw <=_L v (weak left): " << (weak_left_leq(w, v) ? "yes" : "no");
    }
    emit(as_json, j, os.str());
    return 0;
}

int cmd_affine(const std::string& type, const std::string& elem, const std::string& parabolic,
               bool as_json) {
    auto rs = build_rs(type);
    ExtendedAffineElement x = parse_extended(rs.get(), elem);
    auto [tau, hat] = rs->affine().decompose_z(x);
    json j;
    j["elem"] = format_extended(x);
    j["length"] = x.length();
    j["finite_part"] = format_weyl_word(x.finite_part());
    j["translation"] = x.translation_part().coords;
    j["z_component"] = tau->index;
    j["hat"] = format_extended(hat);
    j["in_waffm"] = is_in_waffm(x);
    std::ostringstream os;
    os << "element = " << format_extended(x) << "\nlength = " << x.length() << "\nfinite part = "
       << format_weyl_word(x.finite_part()) << "\ntranslation = t[";
    for (size_t i = 0; i < x.translation_part().coords.size(); ++i)
        os << (i ? "," : "") << x.translation_part().coords[i];
    os << "]\nZ decomposition: component " << tau->index << ", hat = " << format_extended(hat)
       << "\nin W~_aff^-: " << (is_in_waffm(x) ? "yes" : "no");
    if (!parabolic.empty() || parabolic == "") {
        std::set<int> ip = parse_node_set(rs.get(), parabolic);
        if (!ip.empty() || !parabolic.empty()) {
            bool member = is_in_wpaff(x, ip);
            auto [w1, w2] = pi_P_factor(x, ip);
            j["in_wpaff"] = member;
            j["pi_P"] = format_extended(w1);
            os << "\nin (W~^P)_aff: " << (member ? "yes" : "no")
               << "\npi_P = " << format_extended(w1) << "  (parabolic factor " << format_extended(w2)
               << ")";
        }
    }
    emit(as_json, j, os.str());
    return 0;
}

int cmd_nilhecke(const std::string& type, const std::vector<std::string>& elems, bool to_delta,
                 bool as_json) {
    auto rs = build_rs(type);
    if (elems.empty()) throw std::invalid_argument("nilhecke: provide one or two elements");
    NilHeckeElement acc = parse_nilhecke_arg(rs.get(), elems[0]);
    NilCache cache;
    for (size_t i = 1; i < elems.size(); ++i)
        acc = nil_mul(acc, parse_nilhecke_arg(rs.get(), elems[i]), &cache);
    if (to_delta) {
        DeltaElement d = to_delta_oracle(acc);
        emit(as_json, delta_to_json(d), format_delta(d));
    } else {
        emit(as_json, nilhecke_to_json(acc), format_nilhecke(acc));
    }
    return 0;
}

int cmd_jmap_translation(const std::string& type, const std::string& coweight, bool as_json) {
    auto rs = build_rs(type);
    AffineHomology H(rs.get());
    NilHeckeElement j = H.j_ad_translation(parse_coweight(rs.get(), coweight));
    emit(as_json, nilhecke_to_json(j), format_nilhecke(j));
    return 0;
}

int cmd_jmap_solve(const std::string& type, const std::string& elem, int max_length, bool as_json) {
    auto rs = build_rs(type);
    AffineHomology H(rs.get());
    ExtendedAffineElement x = parse_extended(rs.get(), elem);
    SolverLimits limits;
    if (max_length > 0) limits.max_word_len = max_length;
    NilHeckeElement j = H.solve_j_general(x, limits);
    emit(as_json, nilhecke_to_json(j), format_nilhecke(j));
    return 0;
}

int cmd_pieri(const std::string& type, int node, const std::string& xstr, bool as_json) {
    auto rs = build_rs(type);
    AffineHomology H(rs.get());
    if (xstr.empty()) {
        NilHeckeElement j = H.j_pieri(node);
        emit(as_json, nilhecke_to_json(j), format_nilhecke(j));
    } else {
        ExtendedAffineElement x = parse_extended(rs.get(), xstr);
        ExtendedAffineElement y = H.nonequiv_pieri(node, x);
        json j;
        j["class"] = format_extended(y);
        emit(as_json, j, "xi[" + format_extended(y) + "]");
    }
    return 0;
}

int cmd_homology_product(const std::string& type, const std::vector<std::string>& elems,
                         bool as_json) {
    auto rs = build_rs(type);
    AffineHomology H(rs.get());
    if (elems.size() != 2) throw std::invalid_argument("homology-product: provide two classes");
    HomologyElement a = parse_homology_arg(rs.get(), elems[0]);
    HomologyElement b = parse_homology_arg(rs.get(), elems[1]);
    HomologyElement p = H.pontryagin(a, b);
    emit(as_json, homology_to_json(p), format_homology(p));
    return 0;
}

int cmd_quantum(const std::string& type, const std::string& parabolic, int node,
                const std::string& wstr, bool equivariant, bool via_homology, bool as_json) {
    auto rs = build_rs(type);
    Parabolic P = Parabolic::make(rs.get(), parse_node_set(rs.get(), parabolic));
    WeylElement w = parse_weyl_word(rs.get(), wstr);
    QuantumClass result;
    if (via_homology) {
        AffineHomology H(rs.get());
        result = cominuscule_product_via_homology(H, P, node, w, equivariant);
    } else {
        result = quantum_cominuscule_product(P, node, w, equivariant);
        if (!equivariant) result = result.at_zero();
    }
    json j = quantum_to_json(result);
    j["lhs"] = equivariant
                   ? "S[" + format_weyl_word(rs->weyl().v_of_node(node)) + "] * v^*(S[" +
                         format_weyl_word(w) + "])"
                   : "S[" + format_weyl_word(rs->weyl().v_of_node(node)) + "] * S[" +
                         format_weyl_word(w) + "]";
    emit(as_json, j, j["lhs"].get<std::string>() + " = " + format_quantum(result));
    return 0;
}

int cmd_verify(const std::string& filter, int max_length, bool as_json) {
    CheckOptions opts;
    opts.filter = filter;
    opts.max_length = max_length;
    auto results = run_paper_checks(opts);
    bool all = true;
    json arr = json::array();
    for (const auto& r : results) {
        all = all && r.pass;
        if (as_json) {
            json e;
            e["name"] = r.name;
            e["pass"] = r.pass;
            e["ms"] = r.millis;
            if (!r.pass) e["detail"] = r.detail;
            arr.push_back(e);
        } else {
            std::printf("[%s] %-40s (%.0f ms)%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                        r.millis, r.pass ? "" : " :: ", r.pass ? "" : r.detail.c_str());
        }
    }
    if (as_json)
        std::cout << arr.dump(2) << "\n";
    else
        std::printf("%s: %zu checks\n", all ? "OK" : "FAILURES", results.size());
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact affine Schubert calculus: nil-Hecke ring, affine Grassmannian homology, "
                 "Peterson correspondence"};
    app.require_subcommand(1);

    std::string type = "A2", wstr = "e", vstr, elem = "e", parabolic, coweight, filter, xstr;
    std::vector<std::string> elems;
    bool as_json = false, equivariant = false, to_delta = false, via_homology = false;
    int node = 1, max_length = -1;

    auto add_common = [&](CLI::App* sub, bool with_type = true) {
        if (with_type) sub->add_option("--type", type, "Cartan type, e.g. A2, B2, G2")->required();
        sub->add_flag("--json", as_json, "machine-readable output");
    };

    auto* rootinfo = app.add_subcommand("rootinfo", "Cartan datum, roots, minuscule nodes");
    add_common(rootinfo);

    auto* weylc = app.add_subcommand("weyl", "finite Weyl group element info and comparisons");
    add_common(weylc);
    weylc->add_option("--w", wstr, "word, e.g. \"s1 s2 s1\"")->required();
    weylc->add_option("--v", vstr, "second word for order comparisons");

    auto* affinec = app.add_subcommand("affine", "extended affine element info");
    add_common(affinec);
    affinec->add_option("--elem", elem, "element, e.g. \"tau1 s2 s1 t[-1,0,0]\"")->required();
    affinec->add_option("--parabolic", parabolic, "parabolic nodes, e.g. \"2\" or \"1,3\"");

    auto* nil = app.add_subcommand("nilhecke", "product in the extended nil-Hecke ring");
    add_common(nil);
    nil->add_option("elements", elems, "one or two elements (grammar or JSON)")->expected(1, 2);
    nil->add_flag("--to-delta", to_delta, "print the fraction-field oracle form");

    auto* jmap = app.add_subcommand("jmap", "the j map into the centralizer");
    auto* jt = jmap->add_subcommand("translation", "closed form for antidominant translations");
    add_common(jt);
    jt->add_option("--coweight", coweight, "fundamental-coweight coordinates, e.g. \"-1,0\"")
        ->required();
    auto* js = jmap->add_subcommand("solve", "characterization solver for a general class");
    add_common(js);
    js->add_option("--elem", elem, "class in W~_aff^-, e.g. \"s1 s0\"")->required();
    js->add_option("--max-length", max_length, "override the solver length bound");
    jmap->require_subcommand(1);

    auto* pieri = app.add_subcommand("pieri", "Pieri class: j(xi_{tau_i(v_i)})");
    add_common(pieri);
    pieri->add_option("--node", node, "minuscule node")->required();
    pieri->add_option("--x", xstr, "non-equivariant product class against xi_x");

    auto* hprod = app.add_subcommand("homology-product", "Pontryagin product of two classes");
    add_common(hprod);
    hprod->add_option("elements", elems, "two classes (grammar or JSON)")->expected(2);

    auto* quantum = app.add_subcommand("quantum", "cominuscule quantum product in QH_T^*(G/P)");
    add_common(quantum);
    quantum->add_option("--parabolic", parabolic, "parabolic nodes of P");
    quantum->add_option("--node", node, "cominuscule node i")->required();
    quantum->add_option("--w", wstr, "w in W^P")->required();
    quantum->add_flag("--equivariant", equivariant, "equivariant product sigma(v_i) x v_i^* sigma(w)");
    quantum->add_flag("--via-homology", via_homology, "compute through the affine homology route");

    auto* verify = app.add_subcommand("verify-paper", "replay the worked examples and property suites");
    verify->add_flag("--json", as_json, "machine-readable output");
    verify->add_option("--filter", filter, "run only checks whose name contains this substring");
    verify->add_option("--max-length", max_length, "override sweep depth of the invariant suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (rootinfo->parsed()) return cmd_rootinfo(type, as_json);
        if (weylc->parsed()) return cmd_weyl(type, wstr, vstr, as_json);
        if (affinec->parsed()) return cmd_affine(type, elem, parabolic, as_json);
        if (nil->parsed()) return cmd_nilhecke(type, elems, to_delta, as_json);
        if (jmap->parsed()) {
            if (jt->parsed()) return cmd_jmap_translation(type, coweight, as_json);
            return cmd_jmap_solve(type, elem, max_length, as_json);
        }
        if (pieri->parsed()) return cmd_pieri(type, node, xstr, as_json);
        if (hprod->parsed()) return cmd_homology_product(type, elems, as_json);
        if (quantum->parsed())
            return cmd_quantum(type, parabolic, node, wstr, equivariant, via_homology, as_json);
        if (verify->parsed()) return cmd_verify(filter, max_length, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
