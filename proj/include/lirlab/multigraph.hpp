#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lir {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

enum class Color : std::uint8_t { Red, Blue };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }

struct Bundle {
    int u = 0;
    int v = 0;
    int mult = 1;
    bool operator==(const Bundle&) const = default;
};

// Bundles are kept sorted by (min, max) endpoint, so a bundle index is a
// stable name for an unordered vertex pair.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(int n, std::vector<Bundle> bundles);

    int n() const { return n_; }
    int size() const { return static_cast<int>(bundles_.size()); }
    const std::vector<Bundle>& bundles() const { return bundles_; }
    const Bundle& bundle(int i) const { return bundles_[i]; }

    // -1 when the pair is not joined.
    int bundle_index(int u, int v) const;
    bool adjacent(int u, int v) const { return bundle_index(u, v) >= 0; }

    // (neighbor, bundle index) per vertex, neighbors ascending.
    std::span<const std::pair<int, int>> incident(int v) const {
        return {inc_.data() + start_[v], inc_.data() + start_[v + 1]};
    }
    int degree(int v) const;
    std::vector<int> degrees() const;
    bool is_simple() const;
    bool connected() const;

    bool operator==(const Multigraph& o) const { return n_ == o.n_ && bundles_ == o.bundles_; }

private:
    int n_ = 0;
    std::vector<Bundle> bundles_;
    std::vector<std::pair<int, int>> inc_;  // adjacency in one array, vertex v at [start_[v], start_[v+1])
    std::vector<int> start_;
};

Multigraph simple_graph(int n, const std::vector<std::pair<int, int>>& edges);

using EdgeColoring = std::vector<Color>;

struct DegreePair {
    int red = 0;
    int blue = 0;
    bool operator==(const DegreePair&) const = default;
    auto operator<=>(const DegreePair&) const = default;
};

using ColorDegrees = std::vector<DegreePair>;

struct Violation {
    int bundle;
    Color color;
    int deg_u;
    int deg_v;
};

struct VerificationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

Multigraph apply_doubling(const Multigraph& g, const std::vector<int>& doubled);

struct DoublingPlan {
    Multigraph base;
    std::vector<int> doubled;  // sorted bundle ids of base
    EdgeColoring coloring;     // indexed like base (and like the doubled graph)

    Multigraph doubled_graph() const { return apply_doubling(base, doubled); }
    int doublings() const { return static_cast<int>(doubled.size()); }
};

ColorDegrees color_degrees(const Multigraph& g, const EdgeColoring& c);
bool is_locally_irregular(const Multigraph& g);
VerificationReport verify_liec(const Multigraph& g, const EdgeColoring& c);
VerificationReport verify_plan(const DoublingPlan& plan);

// Colors bundles of g from a pair lookup; throws if a pair is missing.
class ColoringBuilder {
public:
    explicit ColoringBuilder(const Multigraph& g) : g_(g), c_(g.size(), Color::Red), set_(g.size(), false) {}
    void set(int u, int v, Color c);
    EdgeColoring take() const;

private:
    const Multigraph& g_;
    EdgeColoring c_;
    std::vector<bool> set_;
};

}  // namespace lir
