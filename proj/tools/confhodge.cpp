// Command-line front end: expand the generating function, print Hodge-number
// tables, run the combinatorial oracle, and drive the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <atomic>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "CLI11.hpp"

#include "confhodge/output.hpp"

using namespace confhodge;

namespace {

constexpr int kMaxGenusUnforced = 16;
constexpr int kMaxDegreeUnforced = 64;

// Desk-scale guard; --force lifts it.
void resource_guard(int genus, int degree, bool force) {
    if (force) return;
    if (genus > kMaxGenusUnforced)
        throw std::invalid_argument("refusing genus > " +
                                    std::to_string(kMaxGenusUnforced) +
                                    " without --force");
    if (degree > kMaxDegreeUnforced)
        throw std::invalid_argument("refusing expansion degree > " +
                                    std::to_string(kMaxDegreeUnforced) +
                                    " without --force");
}

unsigned worker_count() {
    if (const char* env = std::getenv("CONFHODGE_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

using SuiteFn = std::function<std::vector<verify::CheckReport>()>;

std::vector<std::vector<verify::CheckReport>> run_jobs(
    const std::vector<SuiteFn>& jobs, unsigned threads) {
    std::vector<std::vector<verify::CheckReport>> results(jobs.size());
    if (threads <= 1 || jobs.size() <= 1) {
        for (std::size_t k = 0; k < jobs.size(); ++k) results[k] = jobs[k]();
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();)
            results[k] = jobs[k]();
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < threads && w < jobs.size(); ++w)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return results;
}

struct CheckBounds {
    int max_genus = -1;
    int max_punctures = -1;
    int max_n = -1;
    int tmax = -1;

    int genus_or(int dflt) const { return max_genus >= 0 ? max_genus : dflt; }
    int punctures_or(int dflt) const {
        return max_punctures >= 0 ? max_punctures : dflt;
    }
    int n_or(int dflt) const { return max_n >= 0 ? max_n : dflt; }
    int t_or(int dflt) const { return tmax >= 0 ? tmax : dflt; }
};

// Suite registry; defaults mirror the acceptance bounds. `lefschetz` covers
// both the operator ranks and the block-dimension agreement.
std::vector<std::pair<std::string, SuiteFn>> suite_registry(const CheckBounds& b) {
    using verify::CheckReport;
    return {
        {"oracle",
         [=] {
             return std::vector<CheckReport>{
                 verify::check_oracle_equivalence(b.genus_or(3), b.n_or(8))};
         }},
        {"identity",
         [=] {
             return std::vector<CheckReport>{
                 verify::check_truncation_identity(b.genus_or(12))};
         }},
        {"lefschetz",
         [=] {
             return std::vector<CheckReport>{
                 verify::check_lefschetz(b.genus_or(5)),
                 verify::check_block_dims(b.genus_or(5))};
         }},
        {"purity",
         [=] {
             return std::vector<CheckReport>{verify::check_purity(b.n_or(12))};
         }},
        {"euler",
         [=] {
             return std::vector<CheckReport>{verify::check_euler_characteristic(
                 b.genus_or(3), b.punctures_or(3), b.t_or(12))};
         }},
        {"stability",
         [=] {
             return std::vector<CheckReport>{verify::check_stability(
                 b.genus_or(3), b.punctures_or(3), b.n_or(10))};
         }},
        {"positivity",
         [=] {
             return std::vector<CheckReport>{
                 verify::check_positivity(b.genus_or(10))};
         }},
        {"diagonal",
         [=] {
             return std::vector<CheckReport>{
                 verify::check_diagonal_class(b.genus_or(4))};
         }},
        {"recursion",
         [=] {
             return std::vector<CheckReport>{verify::check_puncture_recursion(
                 b.genus_or(3), b.punctures_or(3), b.t_or(8))};
         }},
        {"strands",
         [=] {
             return std::vector<CheckReport>{verify::check_strands(
                 b.genus_or(3), b.punctures_or(2), b.n_or(10))};
         }},
    };
}

int run_check(const std::string& suite, const CheckBounds& bounds, bool force) {
    resource_guard(bounds.max_genus, std::max(bounds.max_n, bounds.tmax), force);
    auto registry = suite_registry(bounds);

    std::vector<SuiteFn> jobs;
    if (suite == "all") {
        for (auto& [name, fn] : registry) jobs.push_back(fn);
    } else {
        for (auto& [name, fn] : registry)
            if (name == suite) jobs.push_back(fn);
        if (jobs.empty()) {
            std::cerr << "unknown suite: " << suite << "\n";
            return 2;
        }
    }

    auto results = run_jobs(jobs, worker_count());
    std::vector<verify::CheckReport> reports;
    for (auto& group : results)
        for (auto& r : group) reports.push_back(std::move(r));

    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && r.pass;
        std::cerr << (r.pass ? "ok   " : "FAIL ") << r.suite << " (" << r.params
                  << ")";
        if (!r.notes.empty()) std::cerr << " -- " << r.notes;
        std::cerr << "\n";
    }
    std::cout << io::format_reports(reports);
    return ok ? 0 : 1;
}

int run_oracle(int genus, int n, bool compare, io::Format format, bool force) {
    resource_guard(genus, n, force);
    const auto table = dg::cohomology_hilbert(genus, n);
    if (!compare) {
        std::cout << io::format_dim_table(table, genus, n, format);
        return 0;
    }

    // Fold the table to (w1,w2,i) with sign (-1)^i and diff against the t^n
    // slice of the one-puncture expansion.
    std::map<std::tuple<int, int, int>, Int> oracle, formula;
    for (const auto& [k, dim] : table.dims) {
        int i = k.p + k.q;
        oracle[{k.w1, k.w2, i}] += (i % 2 == 0) ? dim : -dim;
    }
    std::erase_if(oracle, [](const auto& kv) { return kv.second == 0; });
    const auto series = expand_rational(genfun::mixed_hodge_gf(genus, 1), n);
    for (const auto& [m, c] : series.poly().terms())
        if (m.et == n) formula[{m.ex, m.ey, m.eu}] = c;

    nlohmann::ordered_json diff = nlohmann::ordered_json::array();
    std::set<std::tuple<int, int, int>> keys;
    for (const auto& [k, v] : oracle) keys.insert(k);
    for (const auto& [k, v] : formula) keys.insert(k);
    for (const auto& k : keys) {
        Int a = oracle.count(k) ? oracle.at(k) : Int(0);
        Int b = formula.count(k) ? formula.at(k) : Int(0);
        if (a == b) continue;
        auto [w1, w2, i] = k;
        nlohmann::ordered_json entry;
        entry["w1"] = w1;
        entry["w2"] = w2;
        entry["i"] = i;
        entry["oracle"] = io::int_to_json(a);
        entry["formula"] = io::int_to_json(b);
        diff.push_back(std::move(entry));
    }
    if (diff.empty()) {
        std::cout << io::format_dim_table(table, genus, n, format);
        return 0;
    }
    std::cout << diff.dump() << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "confhodge: exact mixed Hodge numbers of unordered configuration "
        "spaces of punctured Riemann surfaces"};
    app.require_subcommand(1);

    int genus = 0, punctures = 1, tmax = 0, n = 0, zmax = 0;
    bool force = false, signed_mode = false, compare = false;
    std::string format_name = "json", which = "diagonal", mode = "betti",
                suite = "all";
    CheckBounds bounds;

    auto add_force = [&](CLI::App* cmd) {
        cmd->add_flag("--force", force, "lift the resource guard");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "json|csv|text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
    };

    auto* gf = app.add_subcommand(
        "gf", "signed series expansion of the generating function");
    gf->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);
    gf->add_option("--punctures", punctures)->check(CLI::NonNegativeNumber);
    gf->add_option("--tmax", tmax)->required()->check(CLI::NonNegativeNumber);
    add_format(gf);
    add_force(gf);

    auto* table_cmd =
        app.add_subcommand("table", "Hodge numbers at a fixed number of points");
    table_cmd->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--punctures", punctures)->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    table_cmd->add_flag("--signed", signed_mode,
                        "emit signed coefficients instead of h");
    add_format(table_cmd);
    add_force(table_cmd);

    auto* oracle_cmd = app.add_subcommand(
        "oracle", "graded dimensions from the dg-complex oracle");
    oracle_cmd->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);
    oracle_cmd->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    oracle_cmd->add_flag("--compare", compare, "diff against the rational formula");
    add_format(oracle_cmd);
    add_force(oracle_cmd);

    auto* strand_cmd =
        app.add_subcommand("strand", "strand generating function in x,y,z");
    strand_cmd->add_option("--which", which)
        ->required()
        ->check(CLI::IsMember({"diagonal", "superdiagonal"}));
    strand_cmd->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);
    strand_cmd->add_option("--punctures", punctures)->check(CLI::NonNegativeNumber);
    strand_cmd->add_option("--zmax", zmax)->required()->check(CLI::NonNegativeNumber);
    add_format(strand_cmd);
    add_force(strand_cmd);

    auto* spec_cmd =
        app.add_subcommand("specialize", "betti / euler / epoly specializations");
    spec_cmd->add_option("--mode", mode)
        ->required()
        ->check(CLI::IsMember({"betti", "euler", "epoly"}));
    spec_cmd->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);
    spec_cmd->add_option("--punctures", punctures)->check(CLI::NonNegativeNumber);
    spec_cmd->add_option("--tmax", tmax)->required()->check(CLI::NonNegativeNumber);
    add_format(spec_cmd);
    add_force(spec_cmd);

    auto* check_cmd = app.add_subcommand("check", "run verification suites");
    check_cmd->add_option("--suite", suite,
                          "oracle|identity|lefschetz|purity|euler|stability|"
                          "positivity|diagonal|recursion|strands|all");
    check_cmd->add_option("--max-genus", bounds.max_genus);
    check_cmd->add_option("--max-punctures", bounds.max_punctures);
    check_cmd->add_option("--max-n", bounds.max_n);
    check_cmd->add_option("--tmax", bounds.tmax);
    add_force(check_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const io::Format format = io::parse_format(format_name);
        if (gf->parsed()) {
            resource_guard(genus, tmax, force);
            const auto series =
                expand_rational(genfun::mixed_hodge_gf(genus, punctures), tmax);
            std::cout << io::format_series(series, genus, punctures, format);
            return 0;
        }
        if (table_cmd->parsed()) {
            resource_guard(genus, n, force);
            auto table = genfun::hodge_table(genus, punctures, n);
            // Slice at exactly n points.
            std::erase_if(table.entries,
                          [&](const auto& kv) { return kv.first.n != n; });
            std::cout << io::format_table(table, n, format, signed_mode);
            return 0;
        }
        if (oracle_cmd->parsed()) return run_oracle(genus, n, compare, format, force);
        if (strand_cmd->parsed()) {
            resource_guard(genus, zmax, force);
            const auto kind = (which == "diagonal")
                                  ? genfun::Strand::diagonal
                                  : genfun::Strand::superdiagonal;
            const auto series =
                expand_rational(genfun::strand_gf(kind, genus, punctures), zmax);
            std::cout << io::format_series(series, genus, punctures, format, true);
            return 0;
        }
        if (spec_cmd->parsed()) {
            resource_guard(genus, tmax, force);
            const auto spec = mode == "betti"   ? genfun::Specialization::betti
                              : mode == "euler" ? genfun::Specialization::euler
                                                : genfun::Specialization::epoly;
            const auto series = genfun::specialize(
                expand_rational(genfun::mixed_hodge_gf(genus, punctures), tmax),
                spec);
            std::cout << io::format_series(series, genus, punctures, format);
            return 0;
        }
        if (check_cmd->parsed()) return run_check(suite, bounds, force);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
