#pragma once

#include <memory>
#include <stdexcept>
#include <string>

namespace hamiltonica {

// Roles of vertices in the tree family T_Delta.  a, b, c carry no index;
// the six indexed roles carry 1 <= i <= Delta-1.
enum class TDeltaRole { A, B, C, Ai, Ci, Ui, Vi, Yi, Zi };

inline bool role_is_indexed(TDeltaRole r) {
    return r != TDeltaRole::A && r != TDeltaRole::B && r != TDeltaRole::C;
}

std::string role_name(TDeltaRole r);
TDeltaRole role_from_name(const std::string& s);

class VertexLabel;

// Plain(name) | TDelta(role, index) | ProductPair(left, right).
class VertexLabel {
public:
    enum class Kind { Plain, TDelta, ProductPair };

    static VertexLabel plain(std::string name) {
        VertexLabel l;
        l.kind_ = Kind::Plain;
        l.name_ = std::move(name);
        return l;
    }
    static VertexLabel tdelta(TDeltaRole role, int index = 0) {
        if (role_is_indexed(role) && index < 1)
            throw std::invalid_argument("indexed T_Delta role needs index >= 1");
        if (!role_is_indexed(role) && index != 0)
            throw std::invalid_argument("roles a, b, c carry no index");
        VertexLabel l;
        l.kind_ = Kind::TDelta;
        l.role_ = role;
        l.index_ = index;
        return l;
    }
    static VertexLabel pair(VertexLabel left, VertexLabel right) {
        VertexLabel l;
        l.kind_ = Kind::ProductPair;
        l.left_ = std::make_shared<VertexLabel>(std::move(left));
        l.right_ = std::make_shared<VertexLabel>(std::move(right));
        return l;
    }

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    TDeltaRole role() const { return role_; }
    int index() const { return index_; }
    const VertexLabel& left() const { return *left_; }
    const VertexLabel& right() const { return *right_; }

    // Rendering used for DOT node names and JSON "text" forms,
    // e.g. "a_2", "b", "(a_2,3)".
    std::string text() const;

    friend bool operator==(const VertexLabel& x, const VertexLabel& y);

private:
    VertexLabel() = default;
    Kind kind_ = Kind::Plain;
    std::string name_;
    TDeltaRole role_ = TDeltaRole::A;
    int index_ = 0;
    std::shared_ptr<const VertexLabel> left_, right_;
};

}  // namespace hamiltonica
