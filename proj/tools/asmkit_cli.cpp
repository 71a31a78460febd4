// Command-line front end. Everything below goes through the extern-C shared
// library surface in asmkit.h; the core C++ types never appear here.
#include <asmkit.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string take(char* s) {
    std::string out = s ? s : "";
    asmkit_string_free(s);
    return out;
}

int complain(asmkit_status) {
    // usage and runtime errors share the same exit code
    std::cerr << "error: " << asmkit_last_error() << "\n";
    return kExitUsage;
}

void write_out(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(path);
    f << text;
}

int emit_table(asmkit_table* table, const std::string& format, const std::string& out_path) {
    if (format == "json") {
        char* js = nullptr;
        if (asmkit_table_json(table, &js) != ASMKIT_OK) return kExitUsage;
        write_out(take(js), out_path);
        return kExitOk;
    }
    if (format == "csv") {
        char* cs = nullptr;
        if (asmkit_table_csv(table, &cs) != ASMKIT_OK) return kExitUsage;
        write_out(take(cs), out_path);
        return kExitOk;
    }
    std::ostringstream os;
    char* js = nullptr;
    if (asmkit_table_json(table, &js) != ASMKIT_OK) return kExitUsage;
    json j = json::parse(take(js));
    os << j["class"].get<std::string>() << " order " << j["order"].get<int>() << ", "
       << j["statistic"].get<std::string>() << " (" << j["provenance"].get<std::string>() << ")\n";
    os << "position  count\n";
    int sz = asmkit_table_size(table);
    for (int k = 0; k < sz; ++k) {
        int pos = 0;
        char* cnt = nullptr;
        if (asmkit_table_entry(table, k, &pos, &cnt) != ASMKIT_OK) return kExitUsage;
        os << pos << "\t" << take(cnt) << "\n";
    }
    os << "total\t" << j["total"].get<std::string>() << "\n";
    write_out(os.str(), out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"asmkit: exact ASM enumeration, closed forms and identity verification"};
    app.require_subcommand(1);
    app.fallthrough();

    int jobs = 1;
    if (const char* env = std::getenv("ASMKIT_JOBS")) jobs = std::max(1, std::atoi(env));
    app.add_option("--jobs", jobs, "worker threads for enumeration")->capture_default_str();

    std::string cls = "plain", stat = "first-row", format = "human", out_path;
    int order = 0;
    unsigned long long seed = 1;

    auto* count = app.add_subcommand("count", "total count of a symmetry class");
    count->add_option("--class", cls, "symmetry class")->required();
    count->add_option("--n,--order", order, "matrix order")->required();

    auto* refine = app.add_subcommand("refine", "refined table by brute-force enumeration");
    refine->add_option("--class", cls)->required();
    refine->add_option("--order,--n", order)->required();
    refine->add_option("--stat", stat, "boundary statistic")->capture_default_str();
    refine->add_option("--format", format, "human|json|csv")->capture_default_str();
    refine->add_option("--out", out_path, "write to file instead of stdout");

    auto* formula = app.add_subcommand("formula", "refined table from the closed forms");
    formula->add_option("--class", cls)->required();
    formula->add_option("--order,--n", order)->required();
    formula->add_option("--stat", stat)->capture_default_str();
    formula->add_option("--format", format)->capture_default_str();
    formula->add_option("--out", out_path);

    std::string identity = "all";
    int max_order = 13;
    auto* verify = app.add_subcommand("verify", "machine-verify the refined-enumeration identities");
    verify->add_option("--identity", identity, "identity family or 'all'")->capture_default_str();
    verify->add_option("--max-order", max_order)->capture_default_str();
    verify->add_option("--seed", seed)->capture_default_str();
    verify->add_option("--format", format, "human|json")->capture_default_str();
    verify->add_option("--out", out_path);

    auto* tilings = app.add_subcommand("tilings", "quartered-hexagon Q table and generating function");
    tilings->add_option("--n", order)->required();
    tilings->add_option("--format", format)->capture_default_str();
    tilings->add_option("--out", out_path);

    std::string model = "dwbc";
    bool symbolic_x = false;
    auto* partition = app.add_subcommand("partition", "partition-function spot checks");
    partition->add_option("--model", model, "dwbc|uturn|uuturn")->capture_default_str();
    partition->add_option("--n", order)->required();
    partition->add_option("--seed", seed)->capture_default_str();
    partition->add_flag("--symbolic-x", symbolic_x, "check the symbolic refined link instead");

    auto* report = app.add_subcommand("report", "full machine-readable verification report");
    report->add_option("--max-order", max_order)->capture_default_str();
    report->add_option("--seed", seed)->capture_default_str();
    report->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (count->parsed()) {
        char* v = nullptr;
        asmkit_status st = asmkit_count(cls.c_str(), order, jobs, &v);
        if (st != ASMKIT_OK) return complain(st);
        std::cout << take(v) << "\n";
        return kExitOk;
    }

    if (refine->parsed() || formula->parsed()) {
        const char* prov = refine->parsed() ? "brute-force" : "closed-form";
        asmkit_table* t = nullptr;
        asmkit_status st = asmkit_refined_table(cls.c_str(), order, stat.c_str(), prov, jobs, &t);
        if (st != ASMKIT_OK) return complain(st);
        int rc = emit_table(t, format, out_path);
        asmkit_table_free(t);
        return rc;
    }

    if (verify->parsed() || report->parsed()) {
        if (report->parsed()) {
            identity = "all";
            format = "json";
        }
        asmkit_report* r = nullptr;
        asmkit_status st = asmkit_verify(identity.c_str(), max_order, seed, jobs, &r);
        if (st != ASMKIT_OK) return complain(st);
        if (format == "json") {
            char* js = nullptr;
            if (asmkit_report_json(r, &js) != ASMKIT_OK) {
                asmkit_report_free(r);
                return kExitUsage;
            }
            write_out(take(js), out_path);
        } else {
            std::ostringstream os;
            int sz = asmkit_report_size(r);
            for (int k = 0; k < sz; ++k) {
                char* line = nullptr;
                if (asmkit_report_line(r, k, &line) == ASMKIT_OK) os << take(line) << "\n";
            }
            write_out(os.str(), out_path);
        }
        int ok = asmkit_report_all_passed(r);
        asmkit_report_free(r);
        return ok ? kExitOk : kExitFail;
    }

    if (tilings->parsed()) {
        char* js = nullptr;
        asmkit_status st = asmkit_tilings_json(order, &js);
        if (st != ASMKIT_OK) return complain(st);
        std::string text = take(js);
        if (format == "json") {
            write_out(text, out_path);
        } else {
            json j = json::parse(text);
            std::ostringstream os;
            os << "quartered hexagon, n = " << j["n"].get<int>() << "\n";
            os << "i\tdeterminant\tclosed-form\tminor-expansion\n";
            for (auto& [i, row] : j["q-values"].items()) {
                os << i << "\t" << row["determinant"].get<std::string>() << "\t"
                   << row["closed-form"].get<std::string>() << "\t"
                   << row["minor-expansion"].get<std::string>() << "\n";
            }
            os << "generating function: ";
            auto& gf = j["generating-function"];
            std::map<int, std::string> terms;
            for (auto& [e, c] : gf["coeffs"].items()) terms[std::stoi(e)] = c.get<std::string>();
            bool first = true;
            for (auto& [e, c] : terms) {
                if (!first) os << " + ";
                first = false;
                os << c << "*x^" << e;
            }
            os << "\n";
            write_out(os.str(), out_path);
        }
        return kExitOk;
    }

    if (partition->parsed()) {
        char* js = nullptr;
        asmkit_status st =
            asmkit_partition_json(model.c_str(), order, seed, symbolic_x ? 1 : 0, &js);
        if (st != ASMKIT_OK) return complain(st);
        std::string text = take(js);
        json j = json::parse(text);
        std::cout << text << "\n";
        return j["pass"].get<bool>() ? kExitOk : kExitFail;
    }

    return kExitUsage;
}
