#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace knotpad {

// One end of an edge at a crossing: slot 0..3 counterclockwise. Slots 0 and 2
// carry the under-strand, slots 1 and 3 the over-strand.
struct Half {
    int crossing = -1;
    int slot = -1;
    bool valid() const { return crossing >= 0; }
    bool operator==(const Half&) const = default;
    auto operator<=>(const Half&) const = default;
};

// Mutable scratch form used by rewriting code. Orientation is only a hint here;
// Diagram::build recomputes it by traversal.
struct DiagramBuilder {
    std::vector<std::array<Half, 4>> link;
    std::vector<std::array<std::int8_t, 4>> hint;  // +1 outgoing, -1 incoming, 0 unknown
    int free_loops = 0;

    int add_crossing();
    void connect(Half a, Half b);
    int crossing_count() const { return static_cast<int>(link.size()); }
    // Remove crossings flagged in `dead` (which must already be unlinked from
    // the live ones) and renumber the rest in order.
    void compact(const std::vector<bool>& dead);
};

// Oriented planar diagram on S^2. Immutable once built. Every crossing is stored
// with slot 0 at the incoming under-strand, so the PD quadruple of crossing x is
// simply the four edge labels at slots 0..3.
class Diagram {
public:
    Diagram();  // 0-crossing unknot
    static Diagram unknot() { return Diagram(); }
    static Diagram unlink(int loops);  // intermediate only

    // Build from PD quadruples (any labelling 1..2n, each label used twice).
    // Throws ParseError on malformed data, NotAKnotError if not one component
    // (unless allow_links).
    static Diagram from_pd(const std::vector<std::array<int, 4>>& quads, bool allow_links = false);

    // Finalise a builder. Orientation comes from `reference_out` (a half that
    // must be outgoing) or from the builder's hints. Throws NotAKnotError when
    // require_knot and the component count is not 1.
    static Diagram build(DiagramBuilder b, std::optional<Half> reference_out = std::nullopt,
                         bool require_knot = true, bool strict_hints = false);
    DiagramBuilder to_builder() const;

    int crossing_count() const { return static_cast<int>(link_.size()); }
    int edge_count() const { return 2 * crossing_count(); }
    int free_loops() const { return free_loops_; }

    Half link(Half h) const { return link_[h.crossing][h.slot]; }
    int sign(int x) const { return sign_[x]; }
    int writhe() const;
    // True if the orientation leaves crossing h.crossing through slot h.slot.
    bool is_out(Half h) const;
    // Incoming/outgoing over-strand slots of a crossing.
    int over_in(int x) const { return sign_[x] > 0 ? 3 : 1; }
    int over_out(int x) const { return sign_[x] > 0 ? 1 : 3; }

    // Edge labels 1..2n in traversal order. tail = outgoing end, head = incoming end.
    int label(Half h) const { return label_[h.crossing][h.slot]; }
    Half tail(int label) const { return tail_[label]; }
    Half head(int label) const { return head_[label]; }

    // Faces: orbit of the face-on-left walk; face_of(h) is the face on the left
    // when walking along the edge leaving crossing h.crossing at slot h.slot.
    int face_count() const { return static_cast<int>(faces_.size()); }
    int face_of(Half h) const { return face_[h.crossing][h.slot]; }
    // Face in the corner between slots j and j+1 of crossing x.
    int corner_face(int x, int j) const { return face_[x][j & 3]; }
    const std::vector<std::vector<Half>>& faces() const { return faces_; }
    std::pair<int, int> edge_faces(int label) const;

    int component_count() const { return components_; }
    bool is_alternating() const;
    // Crossings whose opposite corners lie in the same face.
    std::vector<int> nugatory_crossings() const;

    std::vector<std::array<int, 4>> to_pd() const;

    bool operator==(const Diagram& o) const { return link_ == o.link_ && free_loops_ == o.free_loops_; }

private:
    std::vector<std::array<Half, 4>> link_;
    std::vector<int> sign_;
    std::vector<std::array<int, 4>> label_;
    std::vector<Half> tail_, head_;  // indexed by label, entry 0 unused
    std::vector<std::array<int, 4>> face_;
    std::vector<std::vector<Half>> faces_;
    int free_loops_ = 1;
    int components_ = 1;

    void compute_faces();
};

// Next half along the face-on-left walk.
inline Half face_next(const Diagram& d, Half h) {
    Half arrive = d.link(h);
    return {arrive.crossing, (arrive.slot + 3) & 3};
}

}  // namespace knotpad
