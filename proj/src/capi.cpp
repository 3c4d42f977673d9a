#include "fukalg.h"

#include "driver.hpp"
#include "io.hpp"

#include <cstring>
#include <memory>
#include <sstream>
#include <variant>

using namespace fukalg;

struct fukalg_document {
    std::string kind;
    std::variant<AInftyAlgebra, AInftyBimodule, BimoduleHom, HochschildCochain,
                 BoundaryAlgebra, CROperatorData>
        value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_report(char** report_out, const std::string& s) {
    if (report_out) *report_out = dup_string(s);
}

template <typename F>
fukalg_status guarded(F&& f) {
    try {
        g_last_error.clear();
        return f();
    } catch (const InputError& e) {
        g_last_error = e.what();
        return FUKALG_INPUT_ERROR;
    } catch (const NumericalError& e) {
        g_last_error = e.what();
        return FUKALG_NUMERICAL_ERROR;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FUKALG_INPUT_ERROR;
    }
}

}  // namespace

extern "C" {

fukalg_status fukalg_document_parse(const char* text, fukalg_document** out) {
    return guarded([&]() -> fukalg_status {
        if (!text || !out) throw InputError("null argument");
        std::string s(text);
        auto doc = std::make_unique<fukalg_document>();
        doc->kind = io::document_kind(s);
        if (doc->kind == "ainfty_algebra")
            doc->value = io::parse_algebra(s);
        else if (doc->kind == "ainfty_bimodule")
            doc->value = io::parse_bimodule(s);
        else if (doc->kind == "bimodule_hom")
            doc->value = io::parse_hom(s);
        else if (doc->kind == "hochschild_cochain")
            doc->value = io::parse_cochain(s);
        else if (doc->kind == "boundary_algebra")
            doc->value = io::parse_boundary(s);
        else if (doc->kind == "cr_operator")
            doc->value = io::parse_cr_operator(s);
        else
            throw InputError("unknown document kind '" + doc->kind + "'");
        *out = doc.release();
        return FUKALG_OK;
    });
}

fukalg_status fukalg_document_emit(const fukalg_document* doc,
                                   char** text_out) {
    return guarded([&]() -> fukalg_status {
        if (!doc || !text_out) throw InputError("null argument");
        std::string text = std::visit(
            [](const auto& v) -> std::string {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, AInftyAlgebra>)
                    return io::emit_algebra(v);
                else if constexpr (std::is_same_v<T, AInftyBimodule>)
                    return io::emit_bimodule(v);
                else if constexpr (std::is_same_v<T, BimoduleHom>)
                    return io::emit_hom(v);
                else if constexpr (std::is_same_v<T, HochschildCochain>)
                    return io::emit_cochain(v);
                else if constexpr (std::is_same_v<T, BoundaryAlgebra>)
                    return io::emit_boundary(v);
                else
                    return io::emit_cr_operator(v);
            },
            doc->value);
        *text_out = dup_string(text);
        return FUKALG_OK;
    });
}

const char* fukalg_document_kind(const fukalg_document* doc) {
    return doc ? doc->kind.c_str() : "";
}

fukalg_status fukalg_document_check(const fukalg_document* doc,
                                    char** report_out) {
    return guarded([&]() -> fukalg_status {
        if (!doc) throw InputError("null argument");
        return std::visit(
            [&](const auto& v) -> fukalg_status {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, AInftyAlgebra>) {
                    if (auto viol = check_relations(v)) {
                        set_report(report_out,
                                   "violation: " + viol->describe(v.space()));
                        return FUKALG_PROPERTY_FAILED;
                    }
                    set_report(report_out, "relations: ok");
                } else if constexpr (std::is_same_v<T, AInftyBimodule>) {
                    if (auto viol = check_bimodule(v)) {
                        set_report(report_out,
                                   "violation: " + viol->describe(v));
                        return FUKALG_PROPERTY_FAILED;
                    }
                    set_report(report_out, "relations: ok");
                } else if constexpr (std::is_same_v<T, BimoduleHom>) {
                    if (!hom_delta(v).is_zero()) {
                        set_report(report_out, "closed: no");
                        return FUKALG_PROPERTY_FAILED;
                    }
                    set_report(report_out, "closed: yes");
                } else if constexpr (std::is_same_v<T, HochschildCochain>) {
                    validate_cochain(v);
                    set_report(report_out, "cochain: ok");
                } else if constexpr (std::is_same_v<T, BoundaryAlgebra>) {
                    if (auto viol = check_boundary_axioms(v)) {
                        set_report(report_out, "violation: " + *viol);
                        return FUKALG_PROPERTY_FAILED;
                    }
                    set_report(report_out, "axioms: ok");
                } else {
                    IndexResult r = cr_index(v);
                    std::ostringstream ss;
                    ss << "deg = " << r.deg << ", index = " << r.index;
                    set_report(report_out, ss.str());
                }
                return FUKALG_OK;
            },
            doc->value);
    });
}

void fukalg_document_free(fukalg_document* doc) { delete doc; }

fukalg_status fukalg_run(int argc, const char* const* argv,
                         char** report_out) {
    std::vector<std::string> args;
    for (int i = 0; i < argc; ++i) args.emplace_back(argv[i]);
    std::ostringstream out, err;
    int rc;
    try {
        g_last_error.clear();
        rc = run(args, out, err);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FUKALG_INPUT_ERROR;
    }
    set_report(report_out, out.str());
    if (rc != 0) g_last_error = err.str();
    return static_cast<fukalg_status>(rc);
}

const char* fukalg_last_error(void) { return g_last_error.c_str(); }

void fukalg_string_free(char* text) { delete[] text; }

}  // extern "C"
