#include <asmkit.h>

#include <asmkit/json_io.hpp>
#include <asmkit/tilings.hpp>

#include <cstring>
#include <sstream>

using namespace asmkit;

struct asmkit_table {
    RefinedTable t;
};

struct asmkit_report {
    std::vector<IdentityCheck> checks;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
asmkit_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return ASMKIT_ERR_INVALID;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return ASMKIT_ERR_INVALID;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ASMKIT_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return ASMKIT_ERR_INTERNAL;
    }
}

// enumeration is exhaustive search; keep requests at desk scale
bool order_supported(SymmetryClass cls, int order) {
    switch (cls) {
        case SymmetryClass::Plain: return order <= 8;
        case SymmetryClass::VS: return order <= 13;
        case SymmetryClass::VHS: return order <= 17;
        case SymmetryClass::HTS: return order <= 10;
        case SymmetryClass::QTS: return order <= 16;
        case SymmetryClass::QQTS: return order <= 14;
        case SymmetryClass::OS: return order <= 12;
        case SymmetryClass::OOS: return order <= 15;
        case SymmetryClass::VOS: return order <= 19;
        case SymmetryClass::VHP: return order <= 14;
    }
    return false;
}

}  // namespace

extern "C" {

const char* asmkit_version(void) { return "asmkit 1.0.0"; }

const char* asmkit_last_error(void) { return g_last_error.c_str(); }

void asmkit_string_free(char* s) { std::free(s); }

asmkit_status asmkit_count(const char* cls, int order, int jobs, char** out_decimal) {
    if (!cls || !out_decimal) {
        g_last_error = "null argument";
        return ASMKIT_ERR_INVALID;
    }
    return guarded([&]() {
        SymmetryClass c = class_from_name(cls);
        if (!class_order_compatible(c, order)) {
            g_last_error = "class/order mismatch";
            return ASMKIT_ERR_INVALID;
        }
        if (!order_supported(c, order)) {
            g_last_error = "order beyond supported desk scale";
            return ASMKIT_ERR_UNSUPPORTED;
        }
        *out_decimal = dup_string(count_total(c, order, jobs < 1 ? 1 : jobs).get_str());
        return ASMKIT_OK;
    });
}

asmkit_status asmkit_refined_table(const char* cls, int order, const char* stat,
                                   const char* provenance, int jobs, asmkit_table** out) {
    if (!cls || !stat || !out) {
        g_last_error = "null argument";
        return ASMKIT_ERR_INVALID;
    }
    return guarded([&]() {
        SymmetryClass c = class_from_name(cls);
        BoundaryStat s = stat_from_name(stat);
        if (!class_order_compatible(c, order)) {
            g_last_error = "class/order mismatch";
            return ASMKIT_ERR_INVALID;
        }
        if (!order_supported(c, order)) {
            g_last_error = "order beyond supported desk scale";
            return ASMKIT_ERR_UNSUPPORTED;
        }
        std::string prov = provenance ? provenance : "brute-force";
        RefinedTable t;
        if (prov == "brute-force") t = refined_table(c, order, s, jobs < 1 ? 1 : jobs);
        else if (prov == "closed-form") t = closed_form_table(c, order, s, jobs < 1 ? 1 : jobs);
        else {
            g_last_error = "provenance must be brute-force or closed-form";
            return ASMKIT_ERR_INVALID;
        }
        *out = new asmkit_table{std::move(t)};
        return ASMKIT_OK;
    });
}

int asmkit_table_size(const asmkit_table* t) {
    return t ? static_cast<int>(t->t.counts.size()) : 0;
}

asmkit_status asmkit_table_entry(const asmkit_table* t, int index, int* out_position,
                                 char** out_count) {
    if (!t || index < 0 || index >= static_cast<int>(t->t.counts.size())) {
        g_last_error = "bad table index";
        return ASMKIT_ERR_INVALID;
    }
    auto it = t->t.counts.begin();
    std::advance(it, index);
    if (out_position) *out_position = it->first;
    if (out_count) *out_count = dup_string(it->second.get_str());
    return ASMKIT_OK;
}

asmkit_status asmkit_table_json(const asmkit_table* t, char** out_json) {
    if (!t || !out_json) {
        g_last_error = "null argument";
        return ASMKIT_ERR_INVALID;
    }
    return guarded([&]() {
        *out_json = dup_string(to_json(t->t).dump());
        return ASMKIT_OK;
    });
}

asmkit_status asmkit_table_csv(const asmkit_table* t, char** out_csv) {
    if (!t || !out_csv) {
        g_last_error = "null argument";
        return ASMKIT_ERR_INVALID;
    }
    return guarded([&]() {
        *out_csv = dup_string(table_csv(t->t));
        return ASMKIT_OK;
    });
}

void asmkit_table_free(asmkit_table* t) { delete t; }

asmkit_status asmkit_formula_eval(const char* name, int n, int i, char** out_decimal) {
    if (!name || !out_decimal) {
        g_last_error = "null argument";
        return ASMKIT_ERR_INVALID;
    }
    return guarded([&]() {
        std::string f = name;
        Int v;
        if (f == "asm-total") v = asm_total(n);
        else if (f == "a-plain") v = a_plain(n, i);
        else if (f == "a-o") v = a_o(n, i);
        else if (f == "a-v") v = a_v(n, i);
        else if (f == "a-vhp-row") v = a_vhp_row(n, i);
        else if (f == "a-vhp-col") v = a_vhp_col(n, i);
        else if (f == "q") v = q_ni(n, i);
        else if (f == "a-ht-even") {
            auto r = a_ht_even_reconstructed(n, i);
            if (!r) {
                g_last_error = "half-turn formula undefined at this order";
                return ASMKIT_ERR_UNSUPPORTED;
            }
            v = *r;
        } else {
            g_last_error = "unknown formula name";
            return ASMKIT_ERR_INVALID;
        }
        *out_decimal = dup_string(v.get_str());
        return ASMKIT_OK;
    });
}

asmkit_status asmkit_verify(const char* identity, int max_order, unsigned long long seed,
                            int jobs, asmkit_report** out) {
    if (!identity || !out) {
        g_last_error = "null argument";
        return ASMKIT_ERR_INVALID;
    }
    return guarded([&]() {
        std::string which = identity;
        auto names = identity_names();
        if (which != "all" &&
            std::find(names.begin(), names.end(), which) == names.end()) {
            g_last_error = "unknown identity: " + which;
            return ASMKIT_ERR_INVALID;
        }
        auto checks = run_identities(which, max_order, seed, jobs < 1 ? 1 : jobs);
        *out = new asmkit_report{std::move(checks)};
        return ASMKIT_OK;
    });
}

int asmkit_report_size(const asmkit_report* r) {
    return r ? static_cast<int>(r->checks.size()) : 0;
}

int asmkit_report_all_passed(const asmkit_report* r) {
    if (!r) return 0;
    for (const auto& c : r->checks)
        if (c.status == IdentityCheck::Status::Fail) return 0;
    return 1;
}

asmkit_status asmkit_report_line(const asmkit_report* r, int index, char** out_line) {
    if (!r || index < 0 || index >= static_cast<int>(r->checks.size()) || !out_line) {
        g_last_error = "bad report index";
        return ASMKIT_ERR_INVALID;
    }
    const auto& c = r->checks[index];
    std::ostringstream os;
    const char* st = c.status == IdentityCheck::Status::Pass   ? "pass"
                     : c.status == IdentityCheck::Status::Fail ? "FAIL"
                                                               : "skipped";
    os << c.name << " (n=" << c.n << "): " << st;
    if (!c.witness.empty()) os << " [" << c.witness << "]";
    *out_line = dup_string(os.str());
    return ASMKIT_OK;
}

asmkit_status asmkit_report_json(const asmkit_report* r, char** out_json) {
    if (!r || !out_json) {
        g_last_error = "null argument";
        return ASMKIT_ERR_INVALID;
    }
    return guarded([&]() {
        *out_json = dup_string(report_json(r->checks).dump());
        return ASMKIT_OK;
    });
}

void asmkit_report_free(asmkit_report* r) { delete r; }

asmkit_status asmkit_tilings_json(int n, char** out_json) {
    if (!out_json) {
        g_last_error = "null argument";
        return ASMKIT_ERR_INVALID;
    }
    return guarded([&]() {
        if (n < 1 || n > 6) {
            g_last_error = "tilings supported for 1 <= n <= 6";
            return ASMKIT_ERR_UNSUPPORTED;
        }
        nlohmann::json q = nlohmann::json::object();
        for (int i = 1; i <= n + 1; ++i) {
            nlohmann::json row{{"determinant", q_ni_det(n, i).get_str()},
                               {"closed-form", q_ni(n, i).get_str()},
                               {"minor-expansion", q_ni_expand(n, i).get_str()}};
            if (n <= 3) row["path-search"] = brute_paths(n, i).get_str();
            q[std::to_string(i)] = row;
        }
        nlohmann::json j{{"n", n},
                         {"q-values", q},
                         {"generating-function", to_json(genfun_qh(n))}};
        *out_json = dup_string(j.dump());
        return ASMKIT_OK;
    });
}

asmkit_status asmkit_partition_json(const char* model, int n, unsigned long long seed,
                                    int symbolic_x, char** out_json) {
    if (!model || !out_json) {
        g_last_error = "null argument";
        return ASMKIT_ERR_INVALID;
    }
    return guarded([&]() {
        std::string m = model;
        GridKind kind;
        int cap;
        if (m == "dwbc") { kind = GridKind::Dwbc; cap = 5; }
        else if (m == "uturn") { kind = GridKind::UTurn; cap = 3; }
        else if (m == "uuturn") { kind = GridKind::UUTurn; cap = 2; }
        else {
            g_last_error = "model must be dwbc, uturn or uuturn";
            return ASMKIT_ERR_INVALID;
        }
        if (n < 1 || n > cap) {
            g_last_error = "model size beyond supported desk scale";
            return ASMKIT_ERR_UNSUPPORTED;
        }
        LinkReport rep;
        std::string mode;
        if (symbolic_x) {
            mode = "refined-link";
            if (kind == GridKind::Dwbc) rep = refined_link_dwbc(n);
            else if (kind == GridKind::UTurn) rep = refined_link_uturn(n);
            else {
                g_last_error = "no symbolic refined link for the uuturn model";
                return ASMKIT_ERR_INVALID;
            }
        } else {
            mode = "formula-vs-state";
            rep = formula_vs_state(kind, n, seed, 5);
        }
        nlohmann::json j{{"model", m},        {"n", n},
                         {"mode", mode},      {"seed", seed},
                         {"pass", rep.pass},  {"detail", rep.detail}};
        *out_json = dup_string(j.dump());
        return ASMKIT_OK;
    });
}

asmkit_status asmkit_matrix_is_member(const char* text, const char* cls, int* out_is_member) {
    if (!text || !cls || !out_is_member) {
        g_last_error = "null argument";
        return ASMKIT_ERR_INVALID;
    }
    return guarded([&]() {
        SymmetryClass c = class_from_name(cls);
        if (c == SymmetryClass::VHP) {
            try {
                perverse_from_text(text);
                *out_is_member = 1;
            } catch (const std::exception&) {
                *out_is_member = 0;
            }
            return ASMKIT_OK;
        }
        try {
            Asm a = asm_from_text(text);
            *out_is_member = has_symmetry(a, c) ? 1 : 0;
        } catch (const std::exception&) {
            *out_is_member = 0;
        }
        return ASMKIT_OK;
    });
}

}  // extern "C"
