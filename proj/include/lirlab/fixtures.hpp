#pragma once

#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "lirlab/multigraph.hpp"

namespace lir {

// Hand-transcribed colorings shipped with the library. Each carries its
// (blue, red) degree labels, checked on every load.
struct Fixture {
    std::string name;
    DoublingPlan plan;
    std::vector<DegreePair> labels;
    nlohmann::json extra;
};

// A coloring of individual parallel copies, for the one figure whose
// parallel pair is bichromatic.
struct CopyFixture {
    std::string name;
    int n = 0;
    std::vector<std::tuple<int, int, Color>> copies;
    std::vector<DegreePair> labels;
};

// Empty string selects the embedded copies.
void set_fixture_dir(const std::string& dir);
std::vector<std::string> fixture_names();

Fixture load_fixture(const std::string& name);
CopyFixture load_copy_fixture(const std::string& name);
ColorDegrees copy_color_degrees(const CopyFixture& f);
bool copy_coloring_ok(const CopyFixture& f);
std::string copy_fixture_dot(const CopyFixture& f);

}  // namespace lir
