#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "criteria.hpp"

int main() {
    const isharp::Dataset& ds = isharp::default_dataset();
    const std::pair<int, std::function<criteria::Outcome()>> checks[] = {
        {1, [&] { return criteria::criterion1(ds); }}, {2, [&] { return criteria::criterion2(ds); }},
        {3, [&] { return criteria::criterion3(ds); }}, {4, [&] { return criteria::criterion4(ds); }},
        {5, [&] { return criteria::criterion5(ds); }}, {6, [&] { return criteria::criterion6(ds); }},
        {7, [&] { return criteria::criterion7(ds); }},
    };
    int failed = 0;
    for (const auto& [id, run] : checks) {
        auto start = std::chrono::steady_clock::now();
        criteria::Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d: %s (%.2fs) %s\n", id, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
