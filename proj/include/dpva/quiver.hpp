#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace dpva {

// A letter is an arrow together with a jet order: g^{(k)}.
using Letter = std::uint32_t;

constexpr int kMaxJetOrder = 255;

constexpr Letter make_letter(int arrow, int order = 0) {
    return (static_cast<Letter>(arrow) << 8) | static_cast<Letter>(order);
}
constexpr int arrow_of(Letter l) { return static_cast<int>(l >> 8); }
constexpr int order_of(Letter l) { return static_cast<int>(l & 0xffu); }

struct Arrow {
    std::string name;
    int tail = 0;
    int head = 0;
    int inverse = -1;  // partner arrow for Laurent generators
    bool is_inverse = false;
    int star = -1;  // involution partner in a double quiver
    int epsilon = 0;  // +1 for arrows of Q, -1 for the added a*, 0 otherwise
};

class Quiver {
public:
    int add_vertex(std::string name);
    int add_arrow(std::string name, int tail, int head);
    // creates `name^-1` with swapped endpoints; returns its id
    int make_invertible(int arrow);
    void set_star(int a, int a_star);

    int vertex(std::string_view name) const;  // -1 if absent
    int arrow(std::string_view name) const;   // -1 if absent

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::string& vertex_name(int v) const { return vertices_.at(v); }
    const Arrow& arrow_at(int a) const { return arrows_.at(a); }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    int tail(Letter l) const { return arrows_[arrow_of(l)].tail; }
    int head(Letter l) const { return arrows_[arrow_of(l)].head; }
    bool cancels(Letter a, Letter b) const;  // a.b reduces to an idempotent

    bool has_inverses() const;
    bool is_double() const;  // every arrow carries a star partner

    bool jet() const { return jet_; }
    int jet_cap() const { return jet_cap_; }
    void set_jet(int cap);

    std::string letter_name(Letter l) const;  // a, b^-1, D^2(a)
    void validate() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    bool jet_ = false;
    int jet_cap_ = 0;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

// jet copy of q with all arrows allowed up to order cap
QuiverPtr jet_quiver(const Quiver& q, int cap);
// the same quiver with the jet flag cleared
QuiverPtr base_quiver(const Quiver& q);

}  // namespace dpva
