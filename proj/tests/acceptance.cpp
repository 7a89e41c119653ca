// Acceptance suite: runs every verification criterion at its pinned bounds
// and prints one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria. All comparisons are exact integer equalities.

#include <chrono>
#include <functional>
#include <iostream>
#include <vector>

#include "confhodge/verify.hpp"

using namespace confhodge;

int main() {
    using Clock = std::chrono::steady_clock;
    struct Criterion {
        const char* label;
        std::function<verify::CheckReport()> run;
    };

    const std::vector<Criterion> criteria = {
        {"1. oracle equivalence: formula expansion vs dg-complex dimensions, g<=3, n<=8",
         [] { return verify::check_oracle_equivalence(3, 8); }},
        {"2. truncation identity: -xyut^2 P(-xut,-yut) + Q(-xut,-yut) vs shifted numerator, g<=12",
         [] { return verify::check_truncation_identity(12); }},
        {"3. hard Lefschetz ranks: rank = min(C(2g,i), C(2g,i+2)), g<=5",
         [] { return verify::check_lefschetz(5); }},
        {"4. block dimensions: rank route vs binomial closed form, g<=5",
         [] { return verify::check_block_dims(5); }},
        {"5. purity: g=r=1 weight floor(3i/2) for n<=12, impurity exists for g=r=2",
         [] { return verify::check_purity(12); }},
        {"6. stability: vanishing for n<i, constancy for n>=i+1, g<=3, r<=3, n<=10",
         [] { return verify::check_stability(3, 3, 10); }},
        {"7. strand formulas: diagonal and superdiagonal extraction, g<=3, r<=2, i<=10",
         [] { return verify::check_strands(3, 2, 10); }},
        {"8. Euler characteristics: x=y=u=1 equals (1+t)^(2-2g-r), g<=3, r<=3, tmax=12",
         [] { return verify::check_euler_characteristic(3, 3, 12); }},
        {"9. positivity: numerator nonnegative in x,y,-u,t for g<=10, binomial sign table",
         [] { return verify::check_positivity(10); }},
        {"10. diagonal class: all 4g^2 pairings with lift independence, g<=4",
         [] { return verify::check_diagonal_class(4); }},
        {"11. puncture recursion: (r+1)-expansion times (1+xyut) equals r-expansion, g<=3, r<=3",
         [] { return verify::check_puncture_recursion(3, 3, 8); }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = Clock::now();
        verify::CheckReport report = c.run();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      Clock::now() - start)
                      .count();
        std::cout << (report.pass ? "PASS  " : "FAIL  ") << c.label << "  ["
                  << ms << " ms]\n";
        if (!report.pass) {
            ++failures;
            if (report.witness) {
                std::cout << "      at " << report.witness->location
                          << ": expected " << report.witness->expected
                          << ", got " << report.witness->actual << "\n";
            }
        }
        if (!report.notes.empty()) std::cout << "      note: " << report.notes << "\n";
    }

    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures;
}
