#include "driver.hpp"

#include "CLI11.hpp"
#include "io.hpp"

#include <functional>
#include <iomanip>

namespace fukalg {

namespace {

void print_slot_dims(std::ostream& out, const std::string& label,
                     const std::map<std::pair<int, int>, std::size_t>& dims) {
    std::size_t total = 0;
    for (const auto& [slot, d] : dims) {
        out << label << "[" << slot.first << "," << slot.second << "] = " << d
            << "\n";
        total += d;
    }
    out << label << " total = " << total << "\n";
}

// unit cocycles u_i in e_i B e_i from generator names, one per idempotent
std::vector<F2Vec> unit_vectors(const AInftyBimodule& B,
                                const std::vector<std::string>& names) {
    int m = B.alg().space().idempotents();
    if (names.size() != static_cast<std::size_t>(m))
        throw InputError("expected one unit generator name per idempotent");
    std::vector<F2Vec> u;
    for (const std::string& n : names)
        u.push_back(B.space().unit_vec(B.space().index_of(n)));
    return u;
}

HBimodule named_module(const HAlgebra& H, const std::string& spec) {
    if (spec == "diagonal") return h_diagonal(H);
    if (spec == "dual_diagonal") return h_dual(H, h_diagonal(H));
    throw InputError("module spec must be 'diagonal' or 'dual_diagonal'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"F2 A-infinity calculus toolkit"};
    app.require_subcommand(1);
    double tol = 1e-6;
    unsigned seed = 0;
    app.add_option("--tol", tol, "numerical tolerance");
    app.add_option("--seed", seed, "seed for randomized choices");

    std::function<int()> action;
    out << std::setprecision(12);

    std::string file, file2, m_spec = "diagonal", n_spec = "diagonal";
    std::vector<std::string> units;
    std::vector<double> ordinates;
    double cutoff = 0;
    int k = 1;

    // ainfty
    CLI::App* ainfty = app.add_subcommand("ainfty", "A-infinity algebras");
    ainfty->require_subcommand(1);
    CLI::App* a_check = ainfty->add_subcommand("check", "verify relations");
    a_check->add_option("file", file)->required();
    a_check->callback([&] {
        action = [&]() -> int {
            AInftyAlgebra A = io::parse_algebra(io::read_file(file));
            if (auto v = check_relations(A)) {
                out << "violation: " << v->describe(A.space()) << "\n";
                return 1;
            }
            out << "relations: ok\n";
            return 0;
        };
    });
    CLI::App* a_hom = ainfty->add_subcommand("homology", "homology algebra");
    a_hom->add_option("file", file)->required();
    a_hom->callback([&] {
        action = [&]() -> int {
            UnitalAInftyAlgebra UA =
                adjoin_units(io::parse_algebra(io::read_file(file)));
            HomologyAlgebra H = homology_algebra(UA);
            print_slot_dims(out, "dim H", H.homology.slot_dims());
            return 0;
        };
    });

    // bimod
    CLI::App* bimod = app.add_subcommand("bimod", "A-infinity bimodules");
    bimod->require_subcommand(1);
    CLI::App* b_check = bimod->add_subcommand("check", "verify relations");
    b_check->add_option("file", file)->required();
    b_check->callback([&] {
        action = [&]() -> int {
            AInftyBimodule P = io::parse_bimodule(io::read_file(file));
            if (auto v = check_bimodule(P)) {
                out << "violation: " << v->describe(P) << "\n";
                return 1;
            }
            out << "relations: ok\n";
            return 0;
        };
    });
    CLI::App* b_dual = bimod->add_subcommand("dual", "emit the dual bimodule");
    b_dual->add_option("file", file)->required();
    b_dual->callback([&] {
        action = [&]() -> int {
            out << io::emit_bimodule(
                dual(io::parse_bimodule(io::read_file(file))));
            return 0;
        };
    });
    CLI::App* b_delta =
        bimod->add_subcommand("delta", "differential of a pre-homomorphism");
    b_delta->add_option("file", file)->required();
    b_delta->callback([&] {
        action = [&]() -> int {
            BimoduleHom phi = io::parse_hom(io::read_file(file));
            BimoduleHom d = hom_delta(phi);
            if (d.is_zero()) {
                out << "closed: yes\n";
                return 0;
            }
            out << "closed: no\n" << io::emit_hom(d);
            return 1;
        };
    });
    CLI::App* b_cone =
        bimod->add_subcommand("cone", "homology of the mapping cone");
    b_cone->add_option("file", file)->required();
    b_cone->callback([&] {
        action = [&]() -> int {
            BimoduleHom phi = io::parse_hom(io::read_file(file));
            ConeResult c = cone(phi);
            print_slot_dims(out, "dim H(cone)",
                            module_homology(c.cone).slot_dims());
            return 0;
        };
    });
    CLI::App* b_bc = bimod->add_subcommand("bc", "the B^c cone family");
    b_bc->add_option("file", file)->required();
    b_bc->add_option("--units", units, "unit cocycle generator per idempotent")
        ->required();
    b_bc->add_option("--ordinates", ordinates, "one ordinate per idempotent")
        ->required();
    b_bc->add_option("--c", cutoff, "filtration cutoff")->required();
    b_bc->callback([&] {
        action = [&]() -> int {
            AInftyBimodule B = io::parse_bimodule(io::read_file(file));
            BcResult r = bc_family(B, unit_vectors(B, units), ordinates, cutoff);
            out << "dim F^c = " << r.f_dim << "\n";
            print_slot_dims(out, "dim H(B^c)",
                            module_homology(r.bc).slot_dims());
            return 0;
        };
    });
    CLI::App* b_tensor = bimod->add_subcommand("tensor", "bar tensor product");
    b_tensor->add_option("file", file)->required();
    b_tensor->add_option("file2", file2)->required();
    b_tensor->callback([&] {
        action = [&]() -> int {
            AInftyBimodule P = io::parse_bimodule(io::read_file(file));
            AInftyBimodule Q = io::parse_bimodule(io::read_file(file2));
            AInftyBimodule T = tensor_over(P, Q);
            out << "dim = " << T.space().dim() << "\n";
            print_slot_dims(out, "dim H", module_homology(T).slot_dims());
            return 0;
        };
    });
    CLI::App* b_homot =
        bimod->add_subcommand("homotopic", "decide homotopy of two maps");
    b_homot->add_option("file", file)->required();
    b_homot->add_option("file2", file2)->required();
    b_homot->callback([&] {
        action = [&]() -> int {
            BimoduleHom phi = io::parse_hom(io::read_file(file));
            BimoduleHom psi = io::parse_hom(io::read_file(file2));
            if (decide_homotopic(phi, psi)) {
                out << "homotopic: yes\n";
                return 0;
            }
            out << "homotopic: no\n";
            return 1;
        };
    });
    CLI::App* b_qinv = bimod->add_subcommand("qinv", "emit a quasi-inverse");
    b_qinv->add_option("file", file)->required();
    b_qinv->callback([&] {
        action = [&]() -> int {
            BimoduleHom phi = io::parse_hom(io::read_file(file));
            if (!quasi_iso(phi)) {
                out << "quasi-isomorphism: no\n";
                return 1;
            }
            out << io::emit_hom(quasi_inverse(phi).inverse);
            return 0;
        };
    });

    // hoch
    CLI::App* hoch = app.add_subcommand("hoch", "Hochschild cochains");
    hoch->require_subcommand(1);
    CLI::App* h_x = hoch->add_subcommand("x", "the chain map into hom(A, P)");
    h_x->add_option("file", file)->required();
    h_x->callback([&] {
        action = [&]() -> int {
            HochschildCochain phi = io::parse_cochain(io::read_file(file));
            out << io::emit_hom(
                X_map(adjoin_units(phi.coeff.alg()), phi));
            return 0;
        };
    });
    CLI::App* h_y = hoch->add_subcommand("y", "the dualized chain map");
    h_y->add_option("file", file)->required();
    h_y->callback([&] {
        action = [&]() -> int {
            HochschildCochain psi = io::parse_cochain(io::read_file(file));
            out << io::emit_hom(
                Y_map(adjoin_units(psi.coeff.alg()), psi));
            return 0;
        };
    });
    CLI::App* h_hom =
        hoch->add_subcommand("homology", "homology of CC(Abar, P)");
    h_hom->add_option("file", file)->required();
    h_hom->callback([&] {
        action = [&]() -> int {
            AInftyBimodule P = io::parse_bimodule(io::read_file(file));
            out << "dim H(CC) = " << cc_homology_dim(P) << "\n";
            return 0;
        };
    });
    CLI::App* h_ext = hoch->add_subcommand(
        "ext-class", "extension class of the B^+/B^- sequence");
    h_ext->add_option("file", file)->required();
    h_ext->add_option("--units", units, "unit cocycle generator per idempotent")
        ->required();
    h_ext->callback([&] {
        action = [&]() -> int {
            AInftyBimodule B = io::parse_bimodule(io::read_file(file));
            BimoduleSES ses = b_plus_minus(B, unit_vectors(B, units));
            BimoduleHom delta = connecting_map(ses, seed);
            HomologyAlgebra H =
                homology_algebra(adjoin_units(B.alg()));
            ExtensionClass ec = extension_class(ses, delta, H);
            out << "extension class: " << (ec.trivial ? "trivial" : "nontrivial")
                << "\n";
            return 0;
        };
    });

    // ext
    CLI::App* ext = app.add_subcommand("ext", "Ext groups over H (x) H^opp");
    ext->require_subcommand(1);
    CLI::App* e_dim = ext->add_subcommand("dim", "dimension of Ext^k(M, N)");
    e_dim->add_option("--alg", file, "algebra file")->required();
    e_dim->add_option("--M", m_spec, "diagonal | dual_diagonal");
    e_dim->add_option("--N", n_spec, "diagonal | dual_diagonal");
    e_dim->add_option("--k", k, "cohomological degree 0..2");
    e_dim->callback([&] {
        action = [&]() -> int {
            UnitalAInftyAlgebra UA =
                adjoin_units(io::parse_algebra(io::read_file(file)));
            HAlgebra H = h_algebra(homology_algebra(UA));
            out << ext_dim(H, named_module(H, m_spec), named_module(H, n_spec),
                           k)
                << "\n";
            return 0;
        };
    });

    // bnd
    CLI::App* bnd = app.add_subcommand("bnd", "algebras with boundary");
    bnd->require_subcommand(1);
    CLI::App* n_check = bnd->add_subcommand("check", "verify the axioms");
    n_check->add_option("file", file)->required();
    n_check->callback([&] {
        action = [&]() -> int {
            if (auto v = check_boundary_axioms(
                    io::parse_boundary(io::read_file(file)))) {
                out << "violation: " << *v << "\n";
                return 1;
            }
            out << "axioms: ok\n";
            return 0;
        };
    });
    CLI::App* n_bnd = bnd->add_subcommand("boundary", "the Frobenius dga");
    n_bnd->add_option("file", file)->required();
    n_bnd->callback([&] {
        action = [&]() -> int {
            FrobeniusDGA B =
                boundary_dga(io::parse_boundary(io::read_file(file)));
            for (const Generator& g : B.space.gens())
                out << g.name << " deg " << g.deg << "\n";
            for (const auto& [t, val] : B.d.entries()) {
                out << "d " << B.space.gen(t[0]).name << " =";
                for (std::size_t g : val.support())
                    out << " " << B.space.gen(g).name;
                out << "\n";
            }
            return 0;
        };
    });
    CLI::App* n_hom = bnd->add_subcommand("homology", "homology of the dga");
    n_hom->add_option("file", file)->required();
    n_hom->callback([&] {
        action = [&]() -> int {
            GradedHomology H = dga_homology(
                boundary_dga(io::parse_boundary(io::read_file(file))));
            std::size_t total = 0;
            for (const auto& [deg, d] : H.dims) {
                out << "dim H^" << deg << " = " << d << "\n";
                total += d;
            }
            out << "dim H total = " << total << "\n";
            return 0;
        };
    });

    // crindex
    CLI::App* cr = app.add_subcommand("crindex", "Cauchy-Riemann index data");
    cr->require_subcommand(1);
    CLI::App* c_spec = cr->add_subcommand("spectrum", "eigenvalues near zero");
    c_spec->add_option("file", file)->required();
    c_spec->add_option("--k", k, "eigenvalues per end");
    c_spec->callback([&] {
        action = [&]() -> int {
            CROperatorData d = io::parse_cr_operator(io::read_file(file));
            for (std::size_t e = 0; e < d.ends.size(); ++e) {
                out << "end " << e << " ("
                    << (d.ends[e].input ? "input" : "output") << ")\n";
                for (const Eigenvalue& ev :
                     spectrum_near_zero(d.ends[e].problem, k, tol))
                    out << "  mu = " << ev.mu << "  winding = " << ev.winding
                        << "\n";
            }
            return 0;
        };
    });
    CLI::App* c_idx = cr->add_subcommand("index", "the index formula");
    c_idx->add_option("file", file)->required();
    c_idx->callback([&] {
        action = [&]() -> int {
            IndexResult r =
                cr_index(io::parse_cr_operator(io::read_file(file)), tol);
            out << "deg = " << r.deg << "\n";
            out << "index = " << r.index << "\n";
            out << "injective = " << (r.injective ? "yes" : "no") << "\n";
            out << "regular_if_index_zero = "
                << (r.regular_if_index_zero ? "yes" : "no") << "\n";
            return 0;
        };
    });

    std::vector<const char*> argv;
    argv.push_back("fukalg");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    try {
        return action ? action() : 2;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace fukalg
