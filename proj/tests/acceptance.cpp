// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <string>
#include <vector>

#include "sweeps.hpp"

int main() {
    const std::vector<std::pair<const char*, std::vector<std::string>>> criteria{
        {"paths and cycles", {"thm-paths", "thm-cycles"}},
        {"trees", {"thm-trees"}},
        {"complete graphs", {"thm-kn"}},
        {"bow-tie", {"bowtie"}},
        {"powers of cycles", {"thm-powcycle"}},
        {"A/B validators", {"lemma-a6-validator"}},
        {"complete multipartite", {"thm-kpartite"}},
        {"split graphs", {"thm-split"}},
        {"special cacti", {"thm-taustar"}},
        {"fixture checksums", {"fixtures"}},
        {"oracle equivalence", {"oracle"}}};
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        bool ok = true;
        double seconds = 0;
        std::string note;
        for (const auto& suite : criteria[i].second) {
            auto r = lir::run_sweep(suite);
            ok = ok && r.ok;
            seconds += r.seconds;
            note += (note.empty() ? "" : "; ") + suite + ": " + r.note;
        }
        std::printf("%s %2zu %s (%.2fs) %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first, seconds, note.c_str());
        std::fflush(stdout);
        failed += !ok;
    }
    return failed ? 1 : 0;
}
